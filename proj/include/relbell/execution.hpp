#pragma once

namespace relbell {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

} // namespace relbell
