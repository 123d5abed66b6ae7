#ifndef KKSPACE_PARALLEL_HPP
#define KKSPACE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kkspace {

// Runs fn(0..n-1) across up to `threads` workers. Work items must be
// independent; callers assemble results by index so output ordering never
// depends on the schedule. Exceptions from workers are rethrown on the
// calling thread.
void parallel_for_index(std::size_t n, int threads,
                        const std::function<void(std::size_t)> &fn);

} // namespace kkspace

#endif
