#pragma once

#include <string>

namespace smartmine::cli {

/// Decimal text with 17 significant digits; parses back to the same double.
std::string format_double(double value);

}  // namespace smartmine::cli
