#pragma once

namespace cervreg {

/// Worker threads for parallel kernels: min(OpenMP max threads, CERVREG_THREADS).
/// Kernels partition work so every output element is written by exactly one
/// thread with a fixed accumulation order, so results do not depend on the
/// thread count.
int worker_threads();

/// Kernel backend selection. Parallel is the default when built with OpenMP;
/// the serial reference path is kept for testing and benchmarking.
enum class Backend { serial, parallel };

Backend kernel_backend();
void set_kernel_backend(Backend b);

}  // namespace cervreg
