#ifndef QORTHO_ERRORS_HPP
#define QORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qortho {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: malformed numbers, out-of-domain parameters, bad indices.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A grid does not cover the sites an operation needs.
class RangeError : public Error {
public:
    using Error::Error;
};

/// The orthogonality system for a multi-index is singular.
class NormalityError : public Error {
public:
    using Error::Error;
};

/// A closed-form construction failed its own consistency check
/// (e.g. the Rodrigues grid values are not polynomial in x(s)).
class TranscriptionError : public Error {
public:
    using Error::Error;
};

} // namespace qortho

#endif // QORTHO_ERRORS_HPP
