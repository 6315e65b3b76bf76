// Frame calculus on the quantum sphere: the closed differential formulas,
// nilpotency on the sphere, Leibniz/associativity, interior product and the
// frame covariant derivative.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_forms.hpp"

using namespace defcal;

namespace {

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c = Scalar(1)) {
  QMono k;
  k.dfam = dfam && n > 0;
  k.n = std::uint16_t(n);
  k.m = std::uint16_t(m);
  k.p = std::uint16_t(p);
  return AlgElem::monomial(k, c);
}

// The three closed forms for d on monomials, transcribed term by term and
// kept independent of the word-by-word engine under test.
SphereForm d_closed_a(int n, int m, int p) {  // a^n b^m c^p, n >= 1
  AlgElem plus, minus;
  plus += mono(false, n - 1, m + 1, p, qint(p + n) * qpow(3 - 2 * p - n));
  if (p >= 1) plus += mono(false, n - 1, m, p - 1, qint(p) * qpow(4 - 2 * p - n));
  if (m >= 1) minus += mono(false, n + 1, m - 1, p, qint(m) * qpow(-n - 1));
  return SphereForm::one_form(plus, minus);
}

SphereForm d_closed_d(int n, int m, int p) {  // d^n b^m c^p, n >= 1
  AlgElem plus, minus;
  minus += mono(true, n - 1, m, p + 1, qint(m + n) * qpow(-n));
  if (p >= 1) plus += mono(true, n + 1, m, p - 1, qint(p) * qpow(4 - 2 * p + n));
  if (m >= 1) minus += mono(true, n - 1, m - 1, p, qint(m) * qpow(n - 1));
  return SphereForm::one_form(plus, minus);
}

SphereForm d_closed_x(int m, int p) {  // b^m c^p
  AlgElem plus, minus;
  if (m >= 1) minus += mono(false, 1, m - 1, p, qint(m) * qpow(-1));
  if (p >= 1) plus += mono(true, 1, m, p - 1, qint(p) * qpow(4 - 2 * p));
  return SphereForm::one_form(plus, minus);
}

// Random ambient monomial with exponents <= 3 and a small coefficient.
AlgElem random_mono(SplitMix64& rng) {
  static const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar(2),
                                  qpow(1),   qpow(-1),   Scalar::imag_unit()};
  int n = int(rng.below(4)), m = int(rng.below(4)), pp = int(rng.below(4));
  bool dfam = n > 0 && rng.below(2) == 1;
  return mono(dfam, n, m, pp, coeffs[rng.below(6)]);
}

// Random monomial of a prescribed grade (rejection sampling).
AlgElem random_graded_mono(SplitMix64& rng, int grade) {
  for (;;) {
    AlgElem x = random_mono(rng);
    if (x.is_zero() || x.has_grade(grade)) return x;
  }
}

SphereForm random_form(SplitMix64& rng, int degree, bool grade_valid) {
  switch (degree) {
    case 0:
      return SphereForm::fn(grade_valid ? random_graded_mono(rng, 0)
                                        : random_mono(rng));
    case 1:
      return SphereForm::one_form(
          grade_valid ? random_graded_mono(rng, -2) : random_mono(rng),
          grade_valid ? random_graded_mono(rng, 2) : random_mono(rng));
    default:
      return SphereForm::two_form(grade_valid ? random_graded_mono(rng, 0)
                                              : random_mono(rng));
  }
}

}  // namespace

TEST_CASE("frame commutation via the product") {
  // f ^ e± = q^{-|f|} e± f for each generator.
  const SphereForm eplus = SphereForm::one_form(AlgElem::one(), {});
  const SphereForm eminus = SphereForm::one_form({}, AlgElem::one());
  struct Case {
    char g;
    long pow;  // f e± = q^{pow} e± f
  } cases[] = {{'a', -1}, {'b', 1}, {'c', -1}, {'d', 1}};
  for (auto [g, pw] : cases) {
    const AlgElem f = AlgElem::generator(g);
    CHECK(wedge(SphereForm::fn(f), eplus) ==
          SphereForm::one_form(qpow(pw) * f, {}));
    CHECK(wedge(SphereForm::fn(f), eminus) ==
          SphereForm::one_form({}, qpow(pw) * f));
  }
}

TEST_CASE("frame relations e-^e+ = -q^2 e+^e- and e±^e± = 0") {
  const SphereForm eplus = SphereForm::one_form(AlgElem::one(), {});
  const SphereForm eminus = SphereForm::one_form({}, AlgElem::one());
  CHECK(wedge(eplus, eplus).is_zero());
  CHECK(wedge(eminus, eminus).is_zero());
  CHECK(wedge(eminus, eplus) ==
        SphereForm::two_form(Scalar(-1) * (qpow(2) * AlgElem::one())));
  CHECK(wedge(eplus, eminus) == SphereForm::two_form(AlgElem::one()));
}

TEST_CASE("differential of the generators") {
  CHECK(d(SphereForm::fn(AlgElem::generator('a'))) ==
        SphereForm::one_form(qpow(2) * AlgElem::generator('b'), {}));
  CHECK(d(SphereForm::fn(AlgElem::generator('b'))) ==
        SphereForm::one_form({}, qpow(-1) * AlgElem::generator('a')));
  CHECK(d(SphereForm::fn(AlgElem::generator('c'))) ==
        SphereForm::one_form(qpow(2) * AlgElem::generator('d'), {}));
  CHECK(d(SphereForm::fn(AlgElem::generator('d'))) ==
        SphereForm::one_form({}, qpow(-1) * AlgElem::generator('c')));
  CHECK(d(SphereForm::fn(AlgElem::one())).is_zero());
}

TEST_CASE("closed formulas for d on monomials, exponents <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (int p = 0; p <= 5; ++p) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(p);
        CHECK(d(SphereForm::fn(mono(false, n, m, p))) == d_closed_a(n, m, p));
        CHECK(d(SphereForm::fn(mono(true, n, m, p))) == d_closed_d(n, m, p));
      }
  for (int m = 0; m <= 5; ++m)
    for (int p = 0; p <= 5; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      CHECK(d(SphereForm::fn(mono(false, 0, m, p))) == d_closed_x(m, p));
    }
}

TEST_CASE("d.d = 0 on sphere elements, exponents <= 5") {
  // Grade-0 monomials: a^n b^{n+p} c^p and d^n b^m c^{n+m}.
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p + n <= 5; ++p) {
      CHECK(d(d(SphereForm::fn(mono(false, n, n + p, p)))).is_zero());
      if (n >= 1 && n + p <= 5)
        CHECK(d(d(SphereForm::fn(mono(true, n, p, n + p)))).is_zero());
    }
  // Grade-valid 1-forms land in top degree, which is closed.
  SplitMix64 rng(7);
  for (int k = 0; k < 20; ++k)
    CHECK(d(d(random_form(rng, 1, true))).is_zero());
  // Off the sphere the formal operator has no reason to square to zero.
  CHECK_FALSE(d(d(SphereForm::fn(AlgElem::generator('a')))).is_zero());
}

TEST_CASE("graded Leibniz rule for d") {
  SplitMix64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const int dx = int(rng.below(3));
    const int dy = int(rng.below(3));
    const SphereForm x = random_form(rng, dx, false);
    const SphereForm y = random_form(rng, dy, false);
    const SphereForm lhs = d(wedge(x, y));
    SphereForm rhs = wedge(d(x), y);
    const SphereForm xdy = wedge(x, d(y));
    rhs += (dx % 2 == 0) ? xdy : -xdy;
    CAPTURE(dx);
    CAPTURE(dy);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("wedge is associative and degree-additive") {
  SplitMix64 rng(13);
  for (int k = 0; k < 80; ++k) {
    const SphereForm x = random_form(rng, int(rng.below(3)), false);
    const SphereForm y = random_form(rng, int(rng.below(3)), false);
    const SphereForm z = random_form(rng, int(rng.below(3)), false);
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }
  // Degree overflow vanishes.
  const SphereForm two = SphereForm::two_form(AlgElem::one());
  const SphereForm one = SphereForm::one_form(AlgElem::generator('b'), {});
  CHECK(wedge(two, one).is_zero());
  CHECK(wedge(two, two).is_zero());
}

TEST_CASE("grade validity is preserved by wedge and d") {
  SplitMix64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const SphereForm x = random_form(rng, int(rng.below(3)), true);
    const SphereForm y = random_form(rng, int(rng.below(3)), true);
    REQUIRE(x.grade_valid());
    CHECK(d(x).grade_valid());
    CHECK(wedge(x, y).grade_valid());
  }
}

TEST_CASE("interior product") {
  const Scalar gamma = Scalar::variable(sv::gamma);
  const Scalar eps = Scalar::variable(sv::eps);
  const AlgElem f = mono(false, 1, 3, 0);   // grade -2
  const AlgElem g = mono(false, 2, 0, 0);   // grade +2
  const SphereForm xi = SphereForm::one_form(f, g);
  CHECK(interior('+', xi, gamma, eps) == SphereForm::fn(f));
  CHECK(interior('-', xi, gamma, eps) == SphereForm::fn(g));

  const AlgElem h = mono(false, 1, 1, 0);
  const SphereForm om = SphereForm::two_form(h);
  CHECK(interior('+', om, gamma, eps) ==
        SphereForm::one_form({}, gamma * h));
  CHECK(interior('-', om, gamma, eps) ==
        SphereForm::one_form(Scalar(-1) * eps * h, {}));

  CHECK_THROWS_AS(interior('+', SphereForm::fn(h), gamma, eps),
                  std::domain_error);
  CHECK_THROWS_AS(interior('?', om, gamma, eps), std::invalid_argument);
}

TEST_CASE("covariant derivative: frame generators are parallel") {
  CHECK(nabla(SphereForm::one_form(AlgElem::one(), {})).is_zero());
  CHECK(nabla(SphereForm::one_form({}, AlgElem::one())).is_zero());
  CHECK_THROWS_AS(nabla(SphereForm::fn(AlgElem::one())), std::domain_error);
}

TEST_CASE("covariant derivative of a one-sided monomial form") {
  // nabla(e- a^2) = q^2 d(a^2) (x) e- with d(a^2) = [2] q e+ a b.
  const FrameTensor t = nabla(SphereForm::one_form({}, mono(false, 2, 0, 0)));
  CHECK(t.z[0][1] == mono(false, 1, 1, 0, qint(2) * qpow(3)));
  CHECK(t.z[0][0].is_zero());
  CHECK(t.z[1][0].is_zero());
  CHECK(t.z[1][1].is_zero());
}

TEST_CASE("covariant derivative satisfies the left Leibniz rule") {
  SplitMix64 rng(23);
  for (int k = 0; k < 40; ++k) {
    const AlgElem h = random_graded_mono(rng, 0);
    const SphereForm xi = random_form(rng, 1, true);
    const FrameTensor lhs = nabla(wedge(SphereForm::fn(h), xi));
    const FrameTensor rhs =
        tensor_of(d(SphereForm::fn(h)), xi) + left_mult(h, nabla(xi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor normal form pushes coefficients right") {
  // (e+ b^2) (x) (e+ 1) = e+ (x) e+ q^2 b^2.
  const FrameTensor t =
      tensor_of(SphereForm::one_form(mono(false, 0, 2, 0), {}),
                SphereForm::one_form(AlgElem::one(), {}));
  CHECK(t.z[0][0] == mono(false, 0, 2, 0, qpow(2)));
  CHECK(t.z[0][1].is_zero());
}

TEST_CASE("text form of sphere forms") {
  CHECK(to_string(SphereForm{}) == "0");
  CHECK(to_string(d(SphereForm::fn(AlgElem::generator('b')))) == "e-*q^-1*a");
  const SphereForm mixed =
      SphereForm::fn(AlgElem::one()) +
      SphereForm::two_form(mono(false, 0, 1, 1) + AlgElem::one());
  CHECK(to_string(mixed) == "1 + e+^e-*(1 + b*c)");
}
