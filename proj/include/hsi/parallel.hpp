#pragma once

namespace hsi {

enum class Execution { serial, parallel };

/// Worker cap: HSI_THREADS when set to a positive integer, otherwise the
/// OpenMP default.
int worker_count();

}  // namespace hsi
