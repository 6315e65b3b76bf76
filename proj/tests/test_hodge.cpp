// Duality operator, integral, sesquilinear pairing, and the constant
// relations tying the duality to the codifferential.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_hodge.hpp"

using namespace defcal;

namespace {

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c = Scalar(1)) {
  if (c.is_zero() || n < 0 || m < 0 || p < 0) return {};
  QMono key;
  key.dfam = dfam && n > 0;
  key.n = std::uint16_t(n);
  key.m = std::uint16_t(m);
  key.p = std::uint16_t(p);
  return AlgElem::monomial(key, c);
}

const Scalar I = Scalar::imag_unit();

std::vector<AlgElem> box(int bound) {
  std::vector<AlgElem> out;
  for (int dfam = 0; dfam <= 1; ++dfam)
    for (int n = dfam; n <= bound; ++n)
      for (int m = 0; m <= bound; ++m)
        for (int p = 0; p <= bound; ++p) out.push_back(mono(dfam != 0, n, m, p));
  return out;
}

AlgElem random_graded(SplitMix64& rng, int grade, int bound) {
  for (;;) {
    int n = int(rng.below(unsigned(bound + 1)));
    int m = int(rng.below(unsigned(bound + 1)));
    int p = int(rng.below(unsigned(bound + 1)));
    bool dfam = n > 0 && rng.below(2) == 1;
    AlgElem x = mono(dfam, n, m, p);
    if (x.has_grade(grade)) return x;
  }
}

}  // namespace

TEST_CASE("duality on the component displays") {
  const HodgeConstants c = solve_constants(I, I);
  CHECK(hodge(SphereForm::fn(AlgElem::one()), c) ==
        SphereForm::two_form(c.N * AlgElem::one()));
  CHECK(hodge(SphereForm::two_form(AlgElem::one()), c) ==
        SphereForm::fn((Scalar(-1) * qpow(-2) * c.L) * AlgElem::one()));
  const AlgElem f = mono(false, 1, 1, 0);
  CHECK(hodge(SphereForm::one_form(f, {}), c) ==
        SphereForm::one_form({}, c.K * f.star()));
  CHECK(hodge(SphereForm::one_form({}, f), c) ==
        SphereForm::one_form(c.M * f.star(), {}));
  // Conjugate linearity in scalars.
  CHECK(hodge(SphereForm::fn(I * f), c) ==
        (Scalar(-1) * I) * hodge(SphereForm::fn(f), c));
}

TEST_CASE("integral of top forms") {
  CHECK(integrate(SphereForm::two_form(AlgElem::one())) == Scalar(1));
  CHECK(integrate(SphereForm::two_form(mono(false, 0, 1, 1))) ==
        Scalar(-1) * qpow(1) / qint(2));
  for (int p = 0; p <= 6; ++p) {
    CAPTURE(p);
    const Scalar expected =
        (p % 2 ? Scalar(-1) : Scalar(1)) * qpow(p) / qint(p + 1);
    CHECK(integrate(SphereForm::two_form(mono(false, 0, p, p))) == expected);
  }
  // Words carrying a or d letters, or imbalanced b/c powers, integrate to 0.
  CHECK(integrate(SphereForm::two_form(mono(false, 1, 3, 0))).is_zero());
  CHECK(integrate(SphereForm::two_form(mono(true, 2, 1, 1))).is_zero());
  CHECK(integrate(SphereForm::two_form(mono(false, 0, 2, 1))).is_zero());
  CHECK(integrate(SphereForm{}).is_zero());
  CHECK_THROWS_AS(integrate(SphereForm::one_form(mono(false, 0, 1, 0), {})),
                  std::domain_error);
  CHECK_THROWS_AS(integrate(SphereForm::fn(AlgElem::one())), std::domain_error);
}

TEST_CASE("sesquilinear pairing basics") {
  const HodgeConstants c = solve_constants(I, I);
  // <1,1> = i N = i (q^2 / i) = q^2: real, as a diagonal value should be.
  CHECK(inner(SphereForm::fn(AlgElem::one()), SphereForm::fn(AlgElem::one()),
              c) == qpow(2));
  // Frame grading kills mixed pairings outright.
  CHECK(inner(SphereForm::one_form(mono(false, 0, 2, 0), {}),
              SphereForm::one_form({}, mono(false, 0, 0, 2)), c)
            .is_zero());
  CHECK_THROWS_AS(inner(SphereForm::fn(AlgElem::one()),
                        SphereForm::one_form(mono(false, 0, 2, 0), {}), c),
                  std::domain_error);
  CHECK_THROWS_AS(
      inner(SphereForm::fn(AlgElem::one()) + SphereForm::two_form(AlgElem::one()),
            SphereForm::fn(AlgElem::one()), c),
      std::domain_error);
}

TEST_CASE("constant solver") {
  const HodgeConstants c1 = solve_constants(I, I);
  CHECK(c1.params.alpha == Scalar(-1) * qpow(3));
  CHECK(c1.params.beta == Scalar(-1) * qpow(-5));
  CHECK(c1.params.gamma == qpow(2));
  CHECK(c1.params.eps == qpow(-4));
  CHECK(c1.K * c1.M == Scalar(1));
  CHECK(c1.L * c1.N == qpow(2));
  const HodgeConstants c2 = solve_constants(I, I * qpow(-3));
  CHECK(c2.params.alpha == Scalar(-1));
  const HodgeConstants c3 = solve_constants(Scalar(2) * I * qpow(1), I * qpow(-1));
  CHECK(c3.K * c3.M == Scalar(1));
  CHECK(c3.L * c3.N == qpow(2));
  CHECK_THROWS_AS(solve_constants(Scalar(0), I), std::domain_error);
  CHECK_THROWS_AS(solve_constants(Scalar(1), I), std::domain_error);
  CHECK_THROWS_AS(solve_constants(I, I + Scalar(1)), std::domain_error);
}

TEST_CASE("double duality iff the constant relations hold") {
  CHECK(check_double_hodge(solve_constants(I, I), 4));
  CHECK(check_double_hodge(solve_constants(Scalar(2) * I * qpow(1), I * qpow(-1)), 3));
  // Violations: scale N (so L N = 2 q^2) or M (so K M = -1).
  HodgeConstants bad = solve_constants(I, I);
  bad.N *= Scalar(2);
  CHECK_FALSE(check_double_hodge(bad, 2));
  bad = solve_constants(I, I);
  bad.M = -bad.M;
  CHECK_FALSE(check_double_hodge(bad, 2));
  // Degree-1 sign: double duality is -1 there.
  const HodgeConstants c = solve_constants(I, I);
  const SphereForm xi = SphereForm::one_form(mono(false, 0, 2, 0), {});
  CHECK(hodge(hodge(xi, c), c) == -xi);
  // The inverse really inverts on mixed samples.
  const SphereForm mix = SphereForm::fn(mono(false, 1, 1, 0)) +
                         SphereForm::one_form(mono(false, 0, 2, 0), {}) +
                         SphereForm::two_form(mono(true, 1, 0, 1));
  CHECK(hodge_inv(hodge(mix, c), c) == mix);
  CHECK(hodge(hodge_inv(mix, c), c) == mix);
}

TEST_CASE("duality intertwines d and the codifferential at solved constants") {
  const HodgeConstants c = solve_constants(I, I * qpow(1));
  CHECK(check_codifferential(c, c.params, 3));
  // Unmatched contraction weights break the identity.
  MetricParams off = c.params;
  off.alpha = off.alpha * qpow(1);
  CHECK_FALSE(check_codifferential(c, off, 2));
  CHECK_FALSE(check_codifferential(c, MetricParams::symbolic(), 1));
}

TEST_CASE("codifferential equals signed inverse-duality conjugation of d") {
  const HodgeConstants c = solve_constants(I, I);
  for (const SphereForm& xi : graded_monomial_basis(1, 4)) {
    CAPTURE(to_string(xi));
    CHECK(delta(xi, c.params) == Scalar(-1) * hodge_inv(d(hodge(xi, c)), c));
  }
  for (const SphereForm& xi : graded_monomial_basis(2, 4)) {
    CAPTURE(to_string(xi));
    CHECK(delta(xi, c.params) == hodge_inv(d(hodge(xi, c)), c));
  }
  // Off the correct frame grades the identification genuinely breaks.
  const SphereForm off = SphereForm::one_form(mono(false, 0, 1, 0), {});
  CHECK(delta(off, c.params) != Scalar(-1) * hodge_inv(d(hodge(off, c)), c));
}

TEST_CASE("the pairing is Hermitian for imaginary constants") {
  const HodgeConstants c = solve_constants(I, I * qpow(1));
  const std::vector<AlgElem> fs = box(3);
  std::vector<SphereForm> forms[3];
  for (const AlgElem& f : fs) {
    forms[0].push_back(SphereForm::fn(f));
    forms[1].push_back(SphereForm::one_form(f, {}));
    forms[1].push_back(SphereForm::one_form({}, f));
    forms[2].push_back(SphereForm::two_form(f));
  }
  for (int deg = 0; deg <= 2; ++deg)
    for (std::size_t i = 0; i < forms[deg].size(); ++i)
      for (std::size_t j = i; j < forms[deg].size(); ++j) {
        const Scalar lhs = inner(forms[deg][i], forms[deg][j], c).conj();
        const Scalar rhs = inner(forms[deg][j], forms[deg][i], c);
        if (lhs != rhs) {
          CAPTURE(deg);
          CAPTURE(i);
          CAPTURE(j);
          REQUIRE(lhs == rhs);
        }
      }
  // One real constant breaks the symmetry somewhere.
  HodgeConstants real_n = c;
  real_n.N = qpow(2);
  const SphereForm unit = SphereForm::fn(AlgElem::one());
  CHECK(inner(unit, unit, real_n).conj() != inner(unit, unit, real_n));
}

TEST_CASE("adjointness of d against the codifferential") {
  const HodgeConstants c = solve_constants(I, I);
  SplitMix64 rng(41);
  for (int k = 0; k < 24; ++k) {
    const SphereForm eta = SphereForm::fn(random_graded(rng, 0, 3));
    const SphereForm xi = SphereForm::one_form(random_graded(rng, -2, 3),
                                               random_graded(rng, 2, 3));
    const Scalar lhs = inner(d(eta), xi, c);
    CHECK(lhs == Scalar(-1) * inner(eta, hodge_inv(d(hodge(xi, c)), c), c));
    CHECK(lhs == inner(eta, delta(xi, c.params), c));
  }
}

TEST_CASE("exact top forms integrate to zero") {
  for (const AlgElem& f : box(4)) {
    CAPTURE(to_string(f));
    CHECK(integrate(d(SphereForm::one_form(f, {}))).is_zero());
    CHECK(integrate(d(SphereForm::one_form({}, f))).is_zero());
  }
}
