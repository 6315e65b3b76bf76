// Classical backend under the generic deformation layer: DGA axioms with
// symbolic weights, closedness reports with the time-integrated correction,
// the tensor-square normal form, and the deformed covariant derivative.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "defcal/classical_backend.hpp"
#include "defcal/rng.hpp"

using namespace defcal;

namespace {

using TC = Timed<ClassicalBackend>;

const Scalar X1 = Scalar::variable(cv::x1);
const Scalar X2 = Scalar::variable(cv::x2);
const Scalar TT = Scalar::variable(cv::t);
const Scalar AL = Scalar::variable(cv::alpha);

Scalar rat(long num, long den = 1) { return Scalar::rational(num, den); }

Scalar random_poly(SplitMix64& rng, int nvars, int deg, bool with_t = false) {
  Scalar out(0);
  for (int k = 0; k < 3; ++k) {
    long c = rng.range(-2, 2);
    if (c == 0) continue;
    Scalar mono = rat(c);
    int budget = deg;
    for (int v = 0; v < nvars; ++v) {
      int e = int(rng.below(uint64_t(budget + 1)));
      budget -= e;
      if (e > 0) mono = mono * Scalar::variable(cv::x1 + v, e);
    }
    if (with_t)
      if (int e = int(rng.below(3)); e > 0) mono = mono * Scalar::variable(cv::t, e);
    out = out + mono;
  }
  return out;
}

CForm random_form(SplitMix64& rng, int nvars, int degree) {
  CForm out;
  for (unsigned mask = 0; mask < 8u; ++mask) {
    if (std::popcount(mask) != degree) continue;
    if (mask >= (1u << nvars)) continue;
    out.add_term(mask, random_poly(rng, nvars, 2, true));
  }
  return out;
}

Metric polar() {
  const Scalar z(0), o(1);
  return Metric(2, {{o, z}, {z, X1 * X1}}, {{o, z}, {z, o / (X1 * X1)}});
}

Metric unimodular(const Scalar& p) {
  const Scalar o(1);
  return Metric(2, {{o, p}, {p, o + p * p}},
                {{o + p * p, Scalar(-1) * p}, {Scalar(-1) * p, o}});
}

VectorField field2(const Scalar& a, const Scalar& b) {
  VectorField v;
  v.dim = 2;
  v.comp[0] = a;
  v.comp[1] = b;
  return v;
}

}  // namespace

TEST_CASE("axiom suite over symbolic weights on a curved plane") {
  SplitMix64 rng(7);
  const ClassicalBackend b(unimodular(X1), field2(X2, X1),
                           Scalar(1), Scalar::variable(cv::beta));
  auto sampler = [&](int degree) {
    TC x;
    x.omega = random_form(rng, 2, degree);
    if (degree > 0) x.rho = random_form(rng, 2, degree - 1);
    return x;
  };
  const AxiomReport rep = axiom_suite(b, AL, sampler, 27, true);
  CHECK(rep.pass());
  CHECK(rep.differential_checks == 27);
  CHECK(rep.leibniz_checks == 27);
  CHECK(rep.associativity_checks == 27);
  CHECK(rep.iso_checks == 27);
  CHECK(rep.commutativity_checks == 27);
  CHECK(rep.failures() == 0);
}

TEST_CASE("axiom suite at the stochastic weights on the model metric") {
  SplitMix64 rng(17);
  const ClassicalBackend b = ClassicalBackend::ito(polar(), field2(X2, X1 * TT));
  auto sampler = [&](int degree) {
    TC x;
    x.omega = random_form(rng, 2, degree);
    if (degree > 0) x.rho = random_form(rng, 2, degree - 1);
    return x;
  };
  CHECK(axiom_suite(b, Scalar(1), sampler, 18, true).pass());
}

TEST_CASE("closedness reports and the time-integrated correction") {
  const ClassicalBackend line = ClassicalBackend::ito(Metric::flat(1), zero_field(1));

  // A static exact form with no source is closed.
  {
    const auto rep =
        closedness_analysis(line, CForm::dx(1), CForm{}, AL);
    CHECK(rep.closed);
    CHECK(rep.curl_residual.is_zero());
    CHECK(rep.evolution_residual.is_zero());
  }

  // A curl obstruction on the plane.
  {
    const ClassicalBackend plane =
        ClassicalBackend::ito(Metric::flat(2), zero_field(2));
    const auto rep = closedness_analysis(plane, CForm::dx(1, X2), CForm{}, AL);
    CHECK_FALSE(rep.closed);
    CHECK_FALSE(rep.curl_residual.is_zero());
  }

  // The heat-compatible pair built from a potential.
  const Scalar pot = X1 * X1 * TT;
  const CForm xi = d(CForm::fn(pot));
  const CForm a = AL * line.delta(xi) + CForm::fn(pot.derivative(cv::t));
  {
    const auto rep = closedness_analysis(line, xi, a, AL, CForm::fn(pot));
    CHECK(rep.closed);
    REQUIRE(rep.witness_residual.has_value());
    CHECK(rep.witness_residual->is_zero());
  }

  // Adding a pure function of time to the source keeps the pair closed and
  // the witness residual spatially silent; repairing the potential with the
  // time integral of that function restores the heat balance exactly.
  {
    const Scalar drive = TT * TT;
    const CForm a2 = a + CForm::fn(drive);
    const auto rep = closedness_analysis(line, xi, a2, AL, CForm::fn(pot));
    CHECK(rep.closed);
    CHECK(rep.witness_residual->is_zero());

    const Scalar corrected = pot + rat(1, 3) * TT * TT * TT;
    const CForm balance = a2 + Scalar(-1) * AL * line.delta(d(CForm::fn(corrected))) +
                          Scalar(-1) * CForm::fn(corrected.derivative(cv::t));
    CHECK(balance.is_zero());
    CHECK(d(CForm::fn(corrected)) == xi);
  }

  // The report's flag agrees with vanishing of the deformed differential.
  SplitMix64 rng(29);
  const ClassicalBackend plane = ClassicalBackend::ito(polar(), field2(X2, X1));
  for (int round = 0; round < 8; ++round) {
    const CForm s1 = random_form(rng, 2, 1);
    const CForm s0 = random_form(rng, 2, 0);
    const auto rep = closedness_analysis(plane, s1, s0, Scalar(1));
    CHECK(rep.closed == is_zero(plane, d_alpha(plane, TC{s1, s0}, Scalar(1))));
  }
}

TEST_CASE("tensor normal form pushes coefficients to the right") {
  SplitMix64 rng(37);
  const ClassicalBackend b = ClassicalBackend::ito(polar(), field2(X2, X1));

  // At weight zero the push is the plain module relation.
  {
    const Scalar f = random_poly(rng, 2, 2, true);
    const TC eta{random_form(rng, 2, 1), random_form(rng, 2, 0)};
    const TensorPair t = tensor_of(b, Scalar(0), TC{CForm::dx(1, f), {}}, eta);
    CHECK(t.dx[0] == Scalar(f) * eta);
    CHECK(t.dx[1].omega.is_zero());
    CHECK(t.dt.omega.is_zero());
    CHECK(t.dt.rho.is_zero());
  }

  // The defining relation: (dx^p wedge f) (x) eta equals dx^p (x) (f wedge eta).
  for (int round = 0; round < 4; ++round) {
    const Scalar f = random_poly(rng, 2, 2, true);
    const TC eta{random_form(rng, 2, 1), random_form(rng, 2, 0)};
    const int p = round % 2;
    const TC left = wedge_alpha(b, TC{CForm::dx(p + 1), {}},
                                TC{CForm::fn(f), {}}, AL);
    TensorPair expect;
    expect.alpha = AL;
    expect.dx[p] = wedge_alpha(b, TC{CForm::fn(f), {}}, eta, AL);
    CHECK(tensor_of(b, AL, left, eta) == expect);
  }

  // Associativity of the function action through the deformed relation.
  for (int round = 0; round < 3; ++round) {
    const Scalar f = random_poly(rng, 2, 2, true);
    const Scalar h = random_poly(rng, 2, 2, true);
    TensorPair t;
    t.alpha = AL;
    t.dx[0] = TC{random_form(rng, 2, 1), random_form(rng, 2, 0)};
    t.dx[1] = TC{random_form(rng, 2, 1), random_form(rng, 2, 0)};
    t.dt = TC{random_form(rng, 2, 1), random_form(rng, 2, 0)};
    CHECK(left_mult(b, f * h, t) == left_mult(b, f, left_mult(b, h, t)));
  }

  CHECK_THROWS_AS(
      (void)tensor_of(b, AL, TC{random_form(rng, 2, 2), {}}, TC{}),
      std::invalid_argument);
}

TEST_CASE("undeformed limit and flatness of the deformed derivative") {
  const ClassicalBackend flat = ClassicalBackend::diffusion(Metric::flat(2));
  const ClassicalBackend curved = ClassicalBackend::diffusion(polar());

  // Flat space: no correction at any weight.
  for (int k = 1; k <= 2; ++k) {
    const TensorPair t = nabla_alpha(flat, TC{CForm::dx(k), {}}, AL);
    CHECK(t.dx[0] == TC{});
    CHECK(t.dx[1] == TC{});
    CHECK(t.dt == TC{});
  }

  // Weight zero reproduces the Levi-Civita values on the model metric.
  {
    const TensorPair t1 = nabla_alpha(curved, TC{CForm::dx(1), {}}, Scalar(0));
    CHECK(t1.dx[0] == TC{});
    CHECK(t1.dx[1] == TC{CForm::dx(2, X1), {}});
    CHECK(t1.dt == TC{});

    const TensorPair t2 = nabla_alpha(curved, TC{CForm::dx(2), {}}, Scalar(0));
    const Scalar inv = Scalar(-1) / X1;
    CHECK(t2.dx[0] == TC{CForm::dx(2, inv), {}});
    CHECK(t2.dx[1] == TC{CForm::dx(1, inv), {}});
    CHECK(t2.dt == TC{});
  }
}

TEST_CASE("left Leibniz rule for the deformed derivative") {
  SplitMix64 rng(43);
  const ClassicalBackend backends[] = {
      ClassicalBackend::diffusion(polar()),
      ClassicalBackend(unimodular(X2), field2(X1, X2), Scalar(1),
                       Scalar::variable(cv::beta))};
  for (const ClassicalBackend& b : backends) {
    for (int round = 0; round < 3; ++round) {
      const Scalar f = random_poly(rng, 2, 2, true);
      const TC xi{random_form(rng, 2, 1), random_form(rng, 2, 0)};
      const TC ixi = iso(b, xi, AL);
      const TC fe{CForm::fn(f), {}};

      const TensorPair lhs = nabla_alpha(b, wedge_alpha(b, fe, ixi, AL), AL);
      const TensorPair rhs =
          tensor_of(b, AL, d_alpha(b, fe, AL), ixi) +
          left_mult(b, f, nabla_alpha(b, ixi, AL));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("weight-linear correction of the deformed derivative") {
  // The value at five rational weights isolates the linear coefficient of a
  // cubic exactly: c1 = (8(T(1) - T(-1)) - (T(2) - T(-2))) / 12.
  const ClassicalBackend backends[] = {ClassicalBackend::diffusion(Metric::flat(2)),
                                       ClassicalBackend::diffusion(polar())};
  for (const ClassicalBackend& b : backends) {
    const Metric& m = b.metric;
    const Christoffel gamma = christoffel(m);
    for (int k = 0; k < 2; ++k) {
      const TC dxk{CForm::dx(k + 1), {}};
      auto at = [&](long w) { return nabla_alpha(b, dxk, rat(w)); };
      const TensorPair t1 = at(1), tm1 = at(-1), t2 = at(2), tm2 = at(-2);
      auto lin = [&](auto&& slot) {
        return rat(1, 12) *
               (Scalar(8) * (slot(t1) + Scalar(-1) * slot(tm1)) +
                Scalar(-1) * (slot(t2) + Scalar(-1) * slot(tm2)));
      };

      // Independent expansion of the conjugated derivative: the dx^p (x) dt
      // coefficient collects the curvature-like Christoffel combination
      // together with the contracted derivative of Gamma, and the dt (x) dx^q
      // slot carries the product of traces.
      for (int p = 0; p < 2; ++p) {
        Scalar expect(0);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            expect = expect + m.ginv[i][j] * gamma[k][j][i].derivative(cv::x1 + p);
            for (int s = 0; s < 2; ++s)
              expect = expect +
                       m.ginv[i][j] * (gamma[k][p][s] * gamma[s][j][i] -
                                       gamma[s][j][p] * gamma[k][s][i] -
                                       gamma[s][i][p] * gamma[k][j][s]);
          }
        for (int q = 0; q < 2; ++q)
          for (int nu = 0; nu < 2; ++nu)
            expect = expect - m.ginv[q][nu] * gamma[k][p][q].derivative(cv::x1 + nu);
        const TC got = lin([&](const TensorPair& t) { return t.dx[p]; });
        CHECK(got == TC{{}, CForm::fn(expect)});
      }
      CForm dtslot;
      for (int q = 0; q < 2; ++q) {
        Scalar cq(0);
        for (int p = 0; p < 2; ++p) {
          Scalar trace(0);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              trace = trace + m.ginv[i][j] * gamma[p][i][j];
          cq = cq + trace * gamma[k][p][q];
        }
        dtslot.add_term(1u << q, cq);
      }
      const TC got = lin([&](const TensorPair& t) { return t.dt; });
      CHECK(got == TC{dtslot, {}});
    }
  }
}
