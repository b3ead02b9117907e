#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace cliffsim {

/// Shortest 17-significant-digit decimal form; round-trips every finite
/// double bit-exactly through strtod.
std::string format_real(double v);

/// "a+bi" / "a-bi" with both parts in format_real form.
std::string format_complex_pair(std::complex<double> z);

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" and signed variants.
/// Throws std::runtime_error on malformed input or trailing characters.
std::complex<double> parse_complex_pair(std::string_view token);

}  // namespace cliffsim
