#pragma once

namespace lcone::par {

/// Global switch between the OpenMP kernels and the serial reference path.
/// Kernels accumulate per-task partials in index order, so both paths
/// produce bit-identical results; the switch exists for testing and for the
/// benchmark comparing the two.
bool enabled();
void set_enabled(bool on);

}  // namespace lcone::par
