#ifndef AMALGAM_PARALLEL_HPP
#define AMALGAM_PARALLEL_HPP

#include <functional>

namespace amalgam {

// Worker count: AMALGAM_THREADS if set (clamped to [1, 64]), else 1.
int max_threads();

// Runs fn(i) for i in [0, n). Indices are partitioned into contiguous
// blocks, one per worker; every fn(i) must be independent of the others.
// Results are bit-identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace amalgam

#endif
