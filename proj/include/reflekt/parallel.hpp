#pragma once

#include <cstddef>
#include <functional>

namespace reflekt {

// Worker count used by the parallel loops below; 0 means hardware default.
void set_num_threads(unsigned n);
unsigned num_threads();

// Runs body(i) for i in [0, n). Iterations must be independent; results are
// expected to be written to per-index slots so the outcome does not depend
// on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace reflekt
