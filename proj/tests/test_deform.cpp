// Time extension of the sphere calculus and its homotopy deformation: the
// deformed differential and product, the twist isomorphism, the DGA axiom
// suite, and the closedness analysis.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_backend.hpp"

using namespace defcal;

namespace {

using TB = Timed<SphereBackend>;

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c = Scalar(1)) {
  QMono k;
  k.dfam = dfam && n > 0;
  k.n = std::uint16_t(n);
  k.m = std::uint16_t(m);
  k.p = std::uint16_t(p);
  return AlgElem::monomial(k, c);
}

// Random monomial with exponents <= 3, a small coefficient, and up to a
// quadratic time dependence.
AlgElem random_mono(SplitMix64& rng) {
  static const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar(2),
                                  qpow(1),   qpow(-1),   Scalar::imag_unit()};
  Scalar c = coeffs[rng.below(6)];
  if (unsigned td = rng.below(3)) c = c * Scalar::variable(sv::t, int(td));
  int n = int(rng.below(4)), m = int(rng.below(4)), pp = int(rng.below(4));
  bool dfam = n > 0 && rng.below(2) == 1;
  return mono(dfam, n, m, pp, c);
}

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

// Homogeneous timed element of the given total degree.
TB random_timed(SplitMix64& rng, int degree, bool grade_valid) {
  TB x;
  x.omega = random_form(rng, degree, grade_valid);
  if (degree > 0) x.rho = random_form(rng, degree - 1, grade_valid);
  return x;
}

// The undeformed operations of the time extension, with the component signs
// spelled out independently of the deformed implementation.
TB plain_d(const SphereBackend& b, const TB& x) {
  TB out;
  out.omega = d(x.omega);
  out.rho = d(x.rho);
  out.rho += b.time_derivative(SphereForm::fn(x.omega.c0));
  out.rho -= b.time_derivative(SphereForm::one_form(x.omega.fp, x.omega.fm));
  out.rho += b.time_derivative(SphereForm::two_form(x.omega.c2));
  return out;
}

TB plain_wedge(const TB& x, const TB& y) {
  TB out;
  out.omega = wedge(x.omega, y.omega);
  out.rho = wedge(x.omega, y.rho);
  out.rho += wedge(x.rho, SphereForm::fn(y.omega.c0));
  out.rho -= wedge(x.rho, SphereForm::one_form(y.omega.fp, y.omega.fm));
  out.rho += wedge(x.rho, SphereForm::two_form(y.omega.c2));
  return out;
}

const Scalar AL = Scalar::variable(sv::alpha);
const Scalar TV = Scalar::variable(sv::t);

}  // namespace

TEST_CASE("alpha zero reduces to the tensor-product structure") {
  const SphereBackend b;
  SplitMix64 rng(7);
  const Scalar zero(0);
  for (int k = 0; k < 20; ++k) {
    TB x, y;
    for (int deg = 0; deg <= 2; ++deg) {
      x = x + random_timed(rng, deg, false);
      y = y + random_timed(rng, deg, false);
    }
    CHECK(d_alpha(b, x, zero) == plain_d(b, x));
    CHECK(wedge_alpha(b, x, y, zero) == plain_wedge(x, y));
  }
}

TEST_CASE("deformed differential on functions") {
  const SphereBackend b;
  const SphereForm bc = SphereForm::fn(mono(false, 0, 1, 1));
  const TB x{bc, {}};
  const TB dx = d_alpha(b, x, AL);
  CHECK(dx.omega == d(bc));
  CHECK(dx.rho == AL * laplacian(bc, b.params));

  // With time dependence the formal t-derivative joins the dt part.
  const TB xt{Scalar::variable(sv::t, 2) * bc, {}};
  const TB dxt = d_alpha(b, xt, AL);
  CHECK(dxt.omega == Scalar::variable(sv::t, 2) * d(bc));
  CHECK(dxt.rho == (Scalar(2) * TV) * bc +
                       (AL * Scalar::variable(sv::t, 2)) * laplacian(bc, b.params));

  // On a 1-form the dt coefficient changes sign.
  const SphereForm xi = SphereForm::one_form(mono(false, 0, 2, 0, TV), {});
  const TB dxi = d_alpha(b, TB{xi, {}}, AL);
  CHECK(dxi.omega == d(xi));
  CHECK(dxi.rho == -(SphereForm::one_form(mono(false, 0, 2, 0), {}) +
                     AL * laplacian(xi, b.params)));
}

TEST_CASE("product cases carrying dt") {
  const SphereBackend b;
  SplitMix64 rng(11);
  for (int k = 0; k < 12; ++k) {
    const SphereForm rho1 = random_form(rng, 1, true);
    // (rho1 ^ dt) wedge eta flips sign with the degree of eta.
    const TB left{{}, rho1};
    const SphereForm eta0 = random_form(rng, 0, true);
    const SphereForm eta1 = random_form(rng, 1, true);
    CHECK(wedge_alpha(b, left, TB{eta0, {}}, AL) == TB{{}, wedge(rho1, eta0)});
    CHECK(wedge_alpha(b, left, TB{eta1, {}}, AL) == TB{{}, -wedge(rho1, eta1)});
    // xi wedge (rho2 ^ dt) keeps its sign, and dt ^ dt = 0.
    const SphereForm xi = random_form(rng, 1, true);
    CHECK(wedge_alpha(b, TB{xi, {}}, TB{{}, eta0}, AL) == TB{{}, wedge(xi, eta0)});
    CHECK(is_zero(b, wedge_alpha(b, TB{{}, rho1}, TB{{}, eta0}, AL)));
  }
}

TEST_CASE("twist isomorphism basics") {
  const SphereBackend b;
  SplitMix64 rng(13);
  // Functions are fixed: the homotopy vanishes on degree 0.
  const TB f{random_form(rng, 0, true), {}};
  CHECK(iso(b, f, AL) == f);
  // On a 1-form the dt part gains +alpha delta(xi).
  const SphereForm xi = random_form(rng, 1, true);
  const TB ix = iso(b, TB{xi, {}}, AL);
  CHECK(ix.omega == xi);
  CHECK(ix.rho == AL * delta(xi, b.params));
  // dt components pass through untouched.
  const TB tail{{}, random_form(rng, 1, true)};
  CHECK(iso(b, tail, AL) == tail);
  // Round trips both ways on mixed elements.
  for (int k = 0; k < 10; ++k) {
    TB x;
    for (int deg = 0; deg <= 2; ++deg) x = x + random_timed(rng, deg, true);
    CHECK(iso_inv(b, iso(b, x, AL), AL) == x);
    CHECK(iso(b, iso_inv(b, x, AL), AL) == x);
  }
}

TEST_CASE("axiom suite with symbolic weights") {
  const SphereBackend b;
  SplitMix64 rng(17);
  const Scalar dparam = Scalar::variable(sv::s);
  const AxiomReport rep = axiom_suite(
      b, dparam, [&rng](int degree) { return random_timed(rng, degree, true); },
      27);
  CHECK(rep.pass());
  CHECK(rep.differential_checks == 27);
  CHECK(rep.leibniz_checks == 27);
  CHECK(rep.associativity_checks == 27);
  CHECK(rep.iso_checks == 27);
  CHECK(rep.commutativity_checks == 0);
}

TEST_CASE("axiom suite rejects off-calculus sampling") {
  // Off the correct frame grades d fails to square to zero, and the suite
  // must see that.
  const SphereBackend b;
  SplitMix64 rng(19);
  const AxiomReport rep = axiom_suite(
      b, Scalar::variable(sv::s),
      [&rng](int degree) { return random_timed(rng, degree, false); }, 12);
  CHECK_FALSE(rep.pass());
  CHECK(rep.differential_failures > 0);
}

TEST_CASE("closedness analysis") {
  const SphereBackend b;
  const Scalar al = Scalar::variable(sv::s);

  // xi = d(potential) with the matching evolution coefficient is closed.
  const AlgElem pot = mono(false, 1, 2, 1);  // grade 0
  const SphereForm xi = d(SphereForm::fn(pot));
  const SphereForm a = al * delta(xi, b.params);
  const auto rep = closedness_analysis(b, xi, a, al, SphereForm::fn(pot));
  CHECK(rep.closed);
  CHECK(b.is_zero(rep.curl_residual));
  CHECK(b.is_zero(rep.evolution_residual));
  REQUIRE(rep.witness_residual.has_value());
  CHECK(b.is_zero(*rep.witness_residual));

  // Time-dependent potential b = t f: the dt coefficient needs the extra f.
  const SphereForm bt = TV * SphereForm::fn(pot);
  const SphereForm xit = d(bt);
  const SphereForm at = al * delta(xit, b.params) + SphereForm::fn(pot);
  const auto rept = closedness_analysis(b, xit, at, al, bt);
  CHECK(rept.closed);
  CHECK(b.is_zero(*rept.witness_residual));
  // Dropping the time correction breaks closedness but not the curl.
  const auto bad = closedness_analysis(b, xit, al * delta(xit, b.params), al);
  CHECK_FALSE(bad.closed);
  CHECK(b.is_zero(bad.curl_residual));
  CHECK_FALSE(b.is_zero(bad.evolution_residual));

  // A non-closed 1-form is flagged by the curl residual.
  const SphereForm open_xi = SphereForm::one_form(mono(false, 0, 2, 0), {});
  CHECK_FALSE(closedness_analysis(b, open_xi, {}, al).closed);

  // The report agrees with the deformed differential itself.
  SplitMix64 rng(23);
  for (int k = 0; k < 8; ++k) {
    const SphereForm s1 = random_form(rng, 1, true);
    const SphereForm s0 = random_form(rng, 0, true);
    const bool flag = closedness_analysis(b, s1, s0, al).closed;
    CHECK(flag == is_zero(b, d_alpha(b, TB{s1, s0}, al)));
  }
  CHECK(is_zero(b, d_alpha(b, TB{xit, at}, al)));
}
