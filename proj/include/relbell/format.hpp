#pragma once

#include <string>

namespace relbell {

/// 17 significant digits, '.' decimal separator regardless of the global locale.
std::string format_double(double v);

} // namespace relbell
