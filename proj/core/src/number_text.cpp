#include "cliffsim/number_text.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace cliffsim {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex_pair(std::complex<double> z) {
  std::string out = format_real(z.real());
  if (!std::signbit(z.imag())) out += '+';
  out += format_real(z.imag());
  out += 'i';
  return out;
}

std::complex<double> parse_complex_pair(std::string_view token) {
  const std::string s(token);
  const char* p = s.c_str();
  const char* const end = p + s.size();
  auto fail = [&] { throw std::runtime_error("malformed complex literal: '" + s + "'"); };

  auto read_part = [&](double& value, bool& imaginary) {
    double sign = 1.0;
    if (p < end && (*p == '+' || *p == '-')) {
      if (*p == '-') sign = -1.0;
      ++p;
    }
    if (p < end && *p == 'i' && (p + 1 == end || *(p + 1) == '+' || *(p + 1) == '-')) {
      value = sign;
      imaginary = true;
      ++p;
      return;
    }
    char* after = nullptr;
    value = sign * std::strtod(p, &after);
    if (after == p) fail();
    p = after;
    imaginary = p < end && *p == 'i';
    if (imaginary) ++p;
  };

  double first = 0.0;
  bool first_imag = false;
  read_part(first, first_imag);
  std::complex<double> z = first_imag ? std::complex<double>{0.0, first}
                                      : std::complex<double>{first, 0.0};
  if (p < end) {
    if (*p != '+' && *p != '-') fail();
    double second = 0.0;
    bool second_imag = false;
    read_part(second, second_imag);
    if (!second_imag || first_imag) fail();
    z += std::complex<double>{0.0, second};
  }
  if (p != end) fail();
  return z;
}

}  // namespace cliffsim
