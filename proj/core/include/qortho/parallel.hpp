#ifndef QORTHO_PARALLEL_HPP
#define QORTHO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qortho {

/// Hardware concurrency, capped by QORTHO_NUM_WORKERS when set. Throws
/// ParameterError if the variable is not a positive integer.
std::size_t worker_count();

/// Runs body(0..count-1) on up to worker_count() threads. Indices are handed
/// out dynamically; the first exception thrown by any call is rethrown once
/// all workers have stopped.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace qortho

#endif // QORTHO_PARALLEL_HPP
