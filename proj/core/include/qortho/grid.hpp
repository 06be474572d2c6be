#ifndef QORTHO_GRID_HPP
#define QORTHO_GRID_HPP

#include <qortho/scalar.hpp>

#include <vector>

namespace qortho {

/// Exact values of a function at consecutive integer sites base, base+1, ...
struct GridFunction {
    long base = 0;
    std::vector<Scalar> values;

    long first() const { return base; }
    long last() const { return base + static_cast<long>(values.size()) - 1; }
    bool contains(long s) const { return !values.empty() && s >= first() && s <= last(); }

    /// Throws RangeError when s is not covered.
    const Scalar& at(long s) const;
    Scalar& at(long s);

    bool all_zero() const;
    Scalar max_abs() const;

    friend bool operator==(const GridFunction&, const GridFunction&) = default;
};

/// Tabulates f on [lo, hi].
template <typename F>
GridFunction tabulate(long lo, long hi, F&& f) {
    GridFunction g{lo, {}};
    g.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long s = lo; s <= hi; ++s) g.values.emplace_back(f(s));
    return g;
}

} // namespace qortho

#endif // QORTHO_GRID_HPP
