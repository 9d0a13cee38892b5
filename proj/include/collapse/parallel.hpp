#pragma once

namespace collapse {

/// Selects between the serial reference implementation of a kernel and its
/// OpenMP version. Both produce bit-identical results; the serial path exists
/// so tests and benchmarks can compare against it.
enum class Exec { serial, parallel };

int max_threads();

}  // namespace collapse
