#pragma once

#include <functional>

namespace nodim {

// Worker cap: min(hardware_concurrency, NODIM_THREADS) when the variable is
// set, else hardware_concurrency. Values < 1 mean 1.
int max_threads();

// Runs body(0..n-1) on up to max_threads() workers. Each index owns its own
// output slot, so results are deterministic regardless of scheduling.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace nodim
