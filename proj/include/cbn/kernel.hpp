#pragma once

namespace cbn {

/// Selects the OpenMP kernel or the serial reference of a data-parallel routine.
/// Both produce identical results.
enum class Kernel { Serial, Parallel };

} // namespace cbn
