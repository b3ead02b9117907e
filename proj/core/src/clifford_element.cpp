#include "cliffsim/clifford_element.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "cliffsim/number_text.hpp"

namespace cliffsim {

CliffordElement elem_add(const CliffordElement& a, const CliffordElement& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("elem_add: qubit counts differ");
  CliffordElement out = a;
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

CliffordElement elem_scale(const CliffordElement& a, CliffordElement::Coeff s) {
  CliffordElement out(a.num_qubits());
  if (s == CliffordElement::Coeff{0.0}) return out;
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * s);
  return out;
}

namespace {

struct KeyProduct {
  PauliKey key;
  int phase;
};

// Same phase bookkeeping as mul() on PauliString, on raw canonical keys.
KeyProduct key_mul(const PauliKey& a, const PauliKey& b) {
  const std::uint64_t x = a.x ^ b.x;
  const std::uint64_t z = a.z ^ b.z;
  const int phase = (std::popcount(a.x & a.z) + std::popcount(b.x & b.z) +
                     2 * std::popcount(a.z & b.x) + 3 * std::popcount(x & z)) &
                    3;
  return {PauliKey{z, x}, phase};
}

}  // namespace

CliffordElement elem_mul(const CliffordElement& a, const CliffordElement& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("elem_mul: qubit counts differ");
  CliffordElement out(a.num_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const KeyProduct p = key_mul(ka, kb);
      out.add_term(p.key, mul_ipow(ca * cb, p.phase));
    }
  }
  return out;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return elem_add(a, elem_scale(b, -1.0));
}

CliffordElement operator-(const CliffordElement& a) { return elem_scale(a, -1.0); }

CliffordElement adjoint(const CliffordElement& a) {
  CliffordElement out(a.num_qubits());
  for (const auto& [k, c] : a.terms()) out.add_term(k, std::conj(c));
  return out;
}

CliffordElement anticommutator(const PauliString& a, const PauliString& b) {
  CliffordElement out(a.n);
  out.add_term(mul(a, b), 1.0);
  out.add_term(mul(b, a), 1.0);
  return out;
}

CliffordElement anticommutator(const CliffordElement& a, const CliffordElement& b) {
  return elem_add(elem_mul(a, b), elem_mul(b, a));
}

CliffordElement prune(const CliffordElement& a, double tol) {
  CliffordElement out(a.num_qubits());
  for (const auto& [k, c] : a.terms())
    if (std::abs(c) > tol) out.add_term(k, c);
  return out;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  CliffordElement parse() {
    skip_ws();
    if (at_end()) fail("empty element text");
    bool negative = consume_sign(true);
    Term first = parse_term();
    int n = static_cast<int>(first.letters.size());
    CliffordElement out(n);
    add(out, first, negative);
    skip_ws();
    while (!at_end()) {
      negative = consume_sign(false);
      skip_ws();
      Term t = parse_term();
      if (static_cast<int>(t.letters.size()) != n) fail("inconsistent string lengths");
      add(out, t, negative);
      skip_ws();
    }
    return out;
  }

 private:
  struct Term {
    std::complex<double> coeff;
    std::string letters;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("element text: " + what + " at position " +
                             std::to_string(pos_));
  }

  // Leading sign is optional; between terms it is mandatory.
  bool consume_sign(bool optional) {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    if (!optional) fail("expected '+' or '-' between terms");
    return false;
  }

  double parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  static bool is_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

  std::complex<double> parse_coeff() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      std::complex<double> v = parse_coeff_body();
      skip_ws();
      while (!at_end() && peek() != ')') {
        const bool neg = consume_sign(false);
        skip_ws();
        std::complex<double> part = parse_coeff_body();
        v += neg ? -part : part;
        skip_ws();
      }
      if (at_end()) fail("unterminated '('");
      ++pos_;
      return v;
    }
    return parse_coeff_body();
  }

  // One signed component: "2", "2i", "i", "-3.5e-2i", ...
  std::complex<double> parse_coeff_body() {
    double sign = 1.0;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1.0;
      ++pos_;
    }
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {0.0, sign};
    }
    const double v = sign * parse_number();
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {0.0, v};
    }
    return {v, 0.0};
  }

  Term parse_term() {
    std::complex<double> coeff{1.0, 0.0};
    if (at_end()) fail("expected a term");
    const char c = peek();
    if (c == '(' || c == 'i' || c == '.' || (c >= '0' && c <= '9')) {
      coeff = parse_coeff();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (at_end() || !is_letter(peek())) fail("expected Pauli letters");
    std::string letters;
    while (!at_end() && is_letter(peek())) letters.push_back(text_[pos_++]);
    if (letters.size() > static_cast<std::size_t>(kMaxQubits)) fail("string longer than 64 letters");
    return {coeff, letters};
  }

  static void add(CliffordElement& out, const Term& t, bool negative) {
    const int n = static_cast<int>(t.letters.size());
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int qubit = n - 1 - pos;
      switch (t.letters[static_cast<std::size_t>(pos)]) {
        case 'X': x |= std::uint64_t{1} << qubit; break;
        case 'Y': x |= std::uint64_t{1} << qubit; z |= std::uint64_t{1} << qubit; break;
        case 'Z': z |= std::uint64_t{1} << qubit; break;
        default: break;
      }
    }
    out.add_term(PauliKey{z, x}, negative ? -t.coeff : t.coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Coefficient magnitude rendered without its sign; empty for a plain 1.
std::string coeff_body(std::complex<double> c, bool always_show) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) {
    const double mag = std::abs(re);
    if (mag == 1.0 && !always_show) return "";
    return format_real(mag);
  }
  if (re == 0.0) {
    const double mag = std::abs(im);
    if (mag == 1.0) return "i";
    return format_real(mag) + "i";
  }
  return "(" + format_complex_pair(c) + ")";
}

bool coeff_negative(std::complex<double> c) {
  if (c.imag() == 0.0) return c.real() < 0.0;
  if (c.real() == 0.0) return c.imag() < 0.0;
  return false;  // general complex renders parenthesized, sign inside
}

}  // namespace

CliffordElement parse_string(std::string_view text) { return ElementParser(text).parse(); }

std::string format_string(const CliffordElement& a, bool always_show_coeff) {
  // "0 II..I" reparses to the empty element at the same width.
  if (a.is_zero()) return "0 " + PauliString::identity(a.num_qubits()).letters();
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    const bool neg = coeff_negative(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string body = coeff_body(c, always_show_coeff);
    if (!body.empty()) {
      out += body;
      out += ' ';
    }
    out += a.string_at(k).letters();
  }
  return out;
}

}  // namespace cliffsim
