#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "cliffsim/clifford_element.hpp"
#include "cliffsim/pauli_string.hpp"
#include "oracles.hpp"

using namespace cliffsim;
using oracle::CMat;
using Coeff = std::complex<double>;

namespace {

// All strings at the given width, optionally sweeping phases.
std::vector<PauliString> all_strings(int n, bool with_phases) {
  std::vector<PauliString> out;
  const std::uint64_t top = std::uint64_t{1} << (2 * n);
  for (std::uint64_t m = 0; m < top; ++m) {
    const std::uint64_t x = m & mask_low(n);
    const std::uint64_t z = m >> n;
    const int phases = with_phases ? 4 : 1;
    for (int ph = 0; ph < phases; ++ph) out.push_back(PauliString(n, x, z, ph));
  }
  return out;
}

}  // namespace

TEST_CASE("pauli string construction and letters") {
  const PauliString id3 = PauliString::identity(3);
  CHECK(id3.letters() == "III");
  CHECK(id3.is_identity());
  CHECK(id3.weight() == 0);

  // Qubit 0 is the rightmost letter.
  const PauliString zx(2, 0b01, 0b10);
  CHECK(zx.letters() == "ZX");
  CHECK(zx.letter(0) == 'X');
  CHECK(zx.letter(1) == 'Z');
  CHECK(zx.weight() == 2);
  CHECK(zx.phase == 0);

  CHECK(PauliString(1, 1, 1).letters() == "Y");

  CHECK_THROWS_AS(PauliString(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(65, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(2, 0, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(1, 0, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(1, 0, 0, -1), std::invalid_argument);
}

TEST_CASE("ipow and mul_ipow are exact") {
  CHECK(ipow(0) == Coeff{1.0, 0.0});
  CHECK(ipow(1) == Coeff{0.0, 1.0});
  CHECK(ipow(2) == Coeff{-1.0, 0.0});
  CHECK(ipow(3) == Coeff{0.0, -1.0});
  CHECK(ipow(4) == ipow(0));
  CHECK(ipow(-1) == ipow(3));

  const Coeff c{0.25, -3.5};
  for (int k = -8; k <= 8; ++k) {
    CHECK(mul_ipow(c, k) == ipow(k) * Coeff{0.25, 0.0} - ipow(k) * Coeff{0.0, 3.5});
    CHECK(mul_ipow(c, k) == mul_ipow(c, k + 4));
  }
  CHECK(mul_ipow(c, 1) == Coeff{3.5, 0.25});
  CHECK(mul_ipow(c, 2) == Coeff{-0.25, 3.5});
  CHECK(mul_ipow(c, 3) == Coeff{-3.5, -0.25});
}

TEST_CASE("generator strings match the defining tensor layout") {
  CHECK(generator(1, 0).letters() == "X");
  CHECK(generator(1, 1).letters() == "Y");

  CHECK(generator(2, 0).letters() == "IX");
  CHECK(generator(2, 1).letters() == "IY");
  CHECK(generator(2, 2).letters() == "XZ");
  CHECK(generator(2, 3).letters() == "YZ");
  CHECK(generator(3, 4).letters() == "XZZ");
  CHECK(generator(3, 5).letters() == "YZZ");

  for (int n = 1; n <= 8; ++n) {
    for (int j = 0; j < 2 * n; ++j) CHECK(generator(n, j).phase == 0);
  }

  const PauliString g22 = generator(2, 2);
  CHECK(g22.x_mask == 0b10u);
  CHECK(g22.z_mask == 0b01u);

  CHECK_THROWS_AS(generator(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(generator(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(generator(0, 0), std::invalid_argument);
}

TEST_CASE("mul matches the exhaustive dense oracle on one qubit") {
  // Every letter pair at every phase pair; entries are Gaussian integers,
  // so products are exact in double precision.
  const std::vector<PauliString> strings = all_strings(1, true);
  REQUIRE(strings.size() == 16);
  long failures = 0;
  for (const PauliString& a : strings) {
    for (const PauliString& b : strings) {
      const CMat expect = oracle::cmat_mul(oracle::dense_of_string(a),
                                           oracle::dense_of_string(b));
      const CMat got = oracle::dense_of_string(mul(a, b));
      if (!oracle::cmat_exact_equal(got, expect)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("mul matches the exhaustive dense oracle on two qubits") {
  const std::vector<PauliString> strings = all_strings(2, true);
  REQUIRE(strings.size() == 64);
  long failures = 0;
  for (const PauliString& a : strings) {
    for (const PauliString& b : strings) {
      const CMat expect = oracle::cmat_mul(oracle::dense_of_string(a),
                                           oracle::dense_of_string(b));
      const CMat got = oracle::dense_of_string(mul(a, b));
      if (!oracle::cmat_exact_equal(got, expect)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("mul matches the dense oracle on random strings up to five qubits") {
  std::mt19937 rng(20240518);
  for (int n = 3; n <= 5; ++n) {
    long failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const PauliString a = oracle::random_string(rng, n);
      const PauliString b = oracle::random_string(rng, n);
      const CMat expect = oracle::cmat_mul(oracle::dense_of_string(a),
                                           oracle::dense_of_string(b));
      if (!oracle::cmat_exact_equal(oracle::dense_of_string(mul(a, b)), expect))
        ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("single letter products reproduce the sigma relations") {
  const PauliString sx(1, 1, 0);
  const PauliString sy(1, 1, 1);
  const PauliString sz(1, 0, 1);

  // sigma_x sigma_y = i sigma_z, sigma_y sigma_x = -i sigma_z.
  CHECK(mul(sx, sy) == PauliString(1, 0, 1, 1));
  CHECK(mul(sy, sx) == PauliString(1, 0, 1, 3));
  CHECK(mul(sy, sz) == PauliString(1, 1, 0, 1));
  CHECK(mul(sz, sx) == PauliString(1, 1, 1, 1));

  for (const PauliString& p : {sx, sy, sz}) {
    CHECK(mul(p, p).is_identity());
  }
}

TEST_CASE("generator products follow the two-qubit example") {
  const PauliString prod = mul(generator(2, 0), generator(2, 1));
  // (I x sigma_x)(I x sigma_y) = i (I x sigma_z).
  CHECK(prod.x_mask == 0u);
  CHECK(prod.z_mask == 0b01u);
  CHECK(prod.phase == 1);

  const CMat expect = {{Coeff{0, 1}, 0, 0, 0},
                       {0, Coeff{0, -1}, 0, 0},
                       {0, 0, Coeff{0, 1}, 0},
                       {0, 0, 0, Coeff{0, -1}}};
  CHECK(oracle::cmat_exact_equal(oracle::dense_of_string(prod), expect));
}

TEST_CASE("generator relations hold symbolically up to twelve qubits") {
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i < 2 * n; ++i) {
      CHECK(mul(generator(n, i), generator(n, i)).is_identity());
      for (int j = i + 1; j < 2 * n; ++j) {
        const CliffordElement anti =
            anticommutator(generator(n, i), generator(n, j));
        CHECK(anti.is_zero());
      }
    }
  }
  const CliffordElement self = anticommutator(generator(3, 2), generator(3, 2));
  CHECK(self == CliffordElement::identity(3, 2.0));
}

TEST_CASE("inverse undoes multiplication exactly") {
  std::mt19937 rng(777001);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliString p = oracle::random_string(rng, 1 + trial % 8);
    const PauliString q = inverse(p);
    CHECK(q.x_mask == p.x_mask);
    CHECK(q.z_mask == p.z_mask);
    CHECK(mul(p, q).is_identity());
    CHECK(mul(q, p).is_identity());
  }
  CHECK(inverse(PauliString(1, 1, 1, 1)).phase == 3);
  CHECK(inverse(PauliString(1, 1, 1, 0)).phase == 0);
}

TEST_CASE("phase-0 strings are hermitian and involutory") {
  for (const PauliString& p : all_strings(3, false)) {
    const CMat m = oracle::dense_of_string(p);
    bool hermitian = true;
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m.size(); ++c) {
        if (m[r][c] != std::conj(m[c][r])) hermitian = false;
      }
    }
    CHECK(hermitian);
    CHECK(oracle::cmat_exact_equal(oracle::cmat_mul(m, m),
                                   oracle::cmat_identity(m.size())));
    CHECK(mul(p, p).is_identity());
  }
}

TEST_CASE("phased strings form a group under mul and inverse") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const PauliString a = oracle::random_string(rng, n);
    const PauliString b = oracle::random_string(rng, n);
    const PauliString c = oracle::random_string(rng, n);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(inverse(mul(a, b)) == mul(inverse(b), inverse(a)));
    CHECK(mul(a, PauliString::identity(n)) == a);
    CHECK(mul(PauliString::identity(n), a) == a);
  }
  CHECK_THROWS_AS(mul(PauliString::identity(2), PauliString::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("element addition") {
  const CliffordElement zero(1);
  CliffordElement sx(1);
  sx.add_term(PauliString(1, 1, 0), 1.0);

  CHECK(elem_add(sx, zero) == sx);
  CHECK(sx + sx == 2.0 * sx);

  CliffordElement sz(1);
  sz.add_term(PauliString(1, 0, 1), 1.0);
  CHECK((sx + sz) + (sx - sz) == 2.0 * sx);

  // Exact cancellation drops the term entirely.
  const CliffordElement diff = sx - sx;
  CHECK(diff.is_zero());
  CHECK(diff.term_count() == 0);

  CHECK_THROWS_AS(elem_add(CliffordElement(1), CliffordElement(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(CliffordElement(0), std::invalid_argument);
  CHECK_THROWS_AS(CliffordElement(65), std::invalid_argument);
}

TEST_CASE("element multiplication matches the dense oracle") {
  // Hadamard squares to the identity.
  const CliffordElement h = parse_string(
      "0.70710678118654757 X + 0.70710678118654757 Z");
  const CliffordElement h2 = elem_mul(h, h);
  const CliffordElement ident = CliffordElement::identity(1, 1.0);
  CHECK((h2 - ident).max_abs_coeff() < 1e-15);

  std::mt19937 rng(90210);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const CliffordElement a = oracle::random_element(rng, n, 4);
      const CliffordElement b = oracle::random_element(rng, n, 4);
      const CMat expect = oracle::cmat_mul(oracle::dense_of_element(a),
                                           oracle::dense_of_element(b));
      const CMat got = oracle::dense_of_element(elem_mul(a, b));
      CHECK(oracle::cmat_max_diff(got, expect) < 1e-12);
    }
  }

  const CliffordElement a = oracle::random_element(rng, 3, 5);
  CHECK(elem_mul(a, CliffordElement::identity(3, 1.0)) == a);
  CHECK_THROWS_AS(elem_mul(CliffordElement(1), CliffordElement(2)),
                  std::invalid_argument);
}

TEST_CASE("element scaling and unary minus") {
  std::mt19937 rng(5150);
  const CliffordElement a = oracle::random_element(rng, 2, 4);
  CHECK(elem_scale(a, Coeff{0.0, 0.0}).is_zero());
  CHECK(-a == -1.0 * a);
  CHECK(Coeff{0.0, 1.0} * a == a * Coeff{0.0, 1.0});
  const CMat doubled = oracle::dense_of_element(2.0 * a);
  CHECK(oracle::cmat_max_diff(
            doubled, oracle::cmat_scale(2.0, oracle::dense_of_element(a))) ==
        0.0);
}

TEST_CASE("anticommutators of generators") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 2 * n; ++i) {
      for (int j = 0; j < 2 * n; ++j) {
        const CliffordElement anti =
            anticommutator(generator(n, i), generator(n, j));
        if (i == j) {
          CHECK(anti == CliffordElement::identity(n, 2.0));
        } else {
          CHECK(anti.is_zero());
        }
      }
    }
  }
  // {sigma_x, sigma_y} = 0.
  CHECK(anticommutator(PauliString(1, 1, 0), PauliString(1, 1, 1)).is_zero());
}

TEST_CASE("adjoint conjugates coefficients") {
  CliffordElement isx(1);
  isx.add_term(PauliString(1, 1, 0), Coeff{0.0, 1.0});
  CliffordElement neg = adjoint(isx);
  CHECK(neg.coefficient(PauliKey{0, 1}) == Coeff{0.0, -1.0});

  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const CliffordElement a = oracle::random_element(rng, 3, 5);
    CHECK(adjoint(adjoint(a)) == a);
    // Dense adjoint agrees entrywise.
    const CMat m = oracle::dense_of_element(a);
    const CMat ma = oracle::dense_of_element(adjoint(a));
    bool ok = true;
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m.size(); ++c) {
        if (ma[r][c] != std::conj(m[c][r])) ok = false;
      }
    }
    CHECK(ok);
  }

  // Real-coefficient elements are Hermitian.
  CliffordElement h(2);
  h.add_term(PauliString(2, 0b01, 0b10), 0.75);
  h.add_term(PauliString(2, 0b11, 0b00), -2.0);
  CHECK(adjoint(h) == h);
}

TEST_CASE("coefficient lookup folds the stored phase") {
  CliffordElement a(1);
  a.add_term(PauliString(1, 0, 1), Coeff{0.0, 2.0});  // 2i * Z
  // Querying against i*Z divides out the phase: 2i*Z = 2*(iZ).
  CHECK(a.coefficient(PauliString(1, 0, 1, 1)) == Coeff{2.0, 0.0});
  CHECK(a.coefficient(PauliString(1, 0, 1, 0)) == Coeff{0.0, 2.0});
  CHECK(a.coefficient(PauliString(1, 1, 0, 0)) == Coeff{0.0, 0.0});

  // add_term folds phases into the coefficient: i*(iZ) has key Z, coeff -1.
  CliffordElement b(1);
  b.add_term(PauliString(1, 0, 1, 1), Coeff{0.0, 1.0});
  CHECK(b.coefficient(PauliKey{1, 0}) == Coeff{-1.0, 0.0});
}

TEST_CASE("parse string handles the grammar") {
  const CliffordElement a = parse_string("XI + 2i ZZ");
  CHECK(a.num_qubits() == 2);
  CHECK(a.term_count() == 2);
  CHECK(a.coefficient(PauliKey{0b00, 0b10}) == Coeff{1.0, 0.0});
  CHECK(a.coefficient(PauliKey{0b11, 0b00}) == Coeff{0.0, 2.0});

  CHECK(parse_string("II") == CliffordElement::identity(2, 1.0));
  CHECK(parse_string("3 XY - 1.5 ZI").term_count() == 2);
  CHECK(parse_string("(1+2i) XX").coefficient(PauliKey{0, 0b11}) ==
        Coeff{1.0, 2.0});
  CHECK(parse_string("- i YY").coefficient(PauliKey{0b11, 0b11}) ==
        Coeff{0.0, -1.0});
  CHECK(parse_string("2*XY") == parse_string("2 XY"));
  CHECK(parse_string("0 II").is_zero());
  CHECK(parse_string("0 II").num_qubits() == 2);

  CHECK_THROWS_AS(parse_string("X + XI"), std::runtime_error);
  CHECK_THROWS_AS(parse_string("XA"), std::runtime_error);
  CHECK_THROWS_AS(parse_string(""), std::runtime_error);
  CHECK_THROWS_AS(parse_string("2"), std::runtime_error);
  CHECK_THROWS_AS(parse_string("1 XX junk"), std::runtime_error);
  CHECK_THROWS_AS(parse_string("(1+2i XX"), std::runtime_error);
}

TEST_CASE("format string emits canonical text") {
  CliffordElement a(2);
  a.add_term(PauliString(2, 0b10, 0b00), 1.0);
  a.add_term(PauliString(2, 0b00, 0b11), Coeff{0.0, 2.0});
  CHECK(format_string(a) == "XI + 2i ZZ");

  CHECK(format_string(CliffordElement(2)) == "0 II");
  CHECK(format_string(CliffordElement::identity(2, 1.0)) == "II");
  CHECK(format_string(CliffordElement::identity(2, 1.0), true) == "1 II");

  CliffordElement b(1);
  b.add_term(PauliString(1, 1, 0), -1.0);
  CHECK(format_string(b) == "-X");
  CHECK(parse_string(format_string(b)) == b);

  CliffordElement c(1);
  c.add_term(PauliString(1, 1, 0), Coeff{1.0, 2.0});
  CHECK(format_string(c) == "(1+2i) X");
}

TEST_CASE("format and parse round trip on random elements") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> qubits(1, 6);
  std::uniform_int_distribution<int> terms(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const CliffordElement a =
        oracle::random_element(rng, qubits(rng), terms(rng));
    const CliffordElement back = parse_string(format_string(a));
    CHECK(back == a);
    CHECK(parse_string(format_string(a, true)) == a);
  }
}

TEST_CASE("prune removes small coefficients only when asked") {
  CliffordElement a(1);
  a.add_term(PauliString(1, 1, 0), 1.0);
  a.add_term(PauliString(1, 0, 1), 1e-15);
  CHECK(a.term_count() == 2);

  CHECK(prune(a).term_count() == 1);
  CHECK(prune(a, 1e-16).term_count() == 2);
  CHECK(prune(a).coefficient(PauliKey{0, 1}) == Coeff{1.0, 0.0});

  CHECK(a.max_abs_coeff() == 1.0);
  CHECK(CliffordElement(3).max_abs_coeff() == 0.0);
}

TEST_CASE("from_string factory folds the phase") {
  const CliffordElement a = CliffordElement::from_string(
      PauliString(1, 0, 1, 2), 1.0);
  CHECK(a.coefficient(PauliKey{1, 0}) == Coeff{-1.0, 0.0});
  CHECK(a.num_qubits() == 1);
}
