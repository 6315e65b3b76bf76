// Implementation of the named verification suites.  Every item replays an
// identity with an oracle expression written out independently of the engine
// under test: normal-form products, the displayed differential and
// contraction lines, spectral ladders, duality constants, the stochastic
// displays, and the drift-reversal residuals.  Items never sample from
// wall-clock state; a fixed seed and bound reproduce the report bytes
// exactly, with the wall-clock field as the single exception.
#include "defcal/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

#include "defcal/classical_backend.hpp"
#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/sphere_backend.hpp"
#include "defcal/sphere_hodge.hpp"
#include "defcal/sphere_laplace.hpp"

namespace defcal {

namespace {

using TB = Timed<SphereBackend>;
using TC = Timed<ClassicalBackend>;

// ---------------------------------------------------------------------------
// Result collection.

// Collects elementary checks for one report item.  Zero tests optionally
// specialize the deformation parameter q to a rational value first; the
// rendering of the first nonzero residual is kept together with its label.
struct Probe {
  bool sphere = true;
  std::optional<Scalar> qv;
  long checks = 0;
  std::string where;
  std::string first;

  bool ok() const { return first.empty(); }

  std::string result() const {
    if (ok()) return {};
    return where.empty() ? first : where + ": " + first;
  }

  void fail(const std::string& label, std::string rendering) {
    if (!first.empty()) return;
    where = label;
    first = std::move(rendering);
  }

  void require(const std::string& label, bool holds, const char* message) {
    ++checks;
    if (!holds) fail(label, message);
  }

  bool vanishes(const Scalar& x) const {
    return qv ? x.substitute(sv::q, *qv).is_zero() : x.is_zero();
  }
  bool vanishes(const AlgElem& x) const {
    if (!qv) return x.is_zero();
    for (const auto& [word, coeff] : x.terms())
      if (!vanishes(coeff)) return false;
    return true;
  }
  bool vanishes(const SphereForm& x) const {
    if (!qv) return x.is_zero();
    return vanishes(x.c0) && vanishes(x.fp) && vanishes(x.fm) && vanishes(x.c2);
  }
  bool vanishes(const CForm& x) const { return x.is_zero(); }
  template <class B>
  bool vanishes(const Timed<B>& x) const {
    return vanishes(x.omega) && vanishes(x.rho);
  }
  bool vanishes(const TensorPair& x) const {
    return vanishes(x.dx[0]) && vanishes(x.dx[1]) && vanishes(x.dx[2]) &&
           vanishes(x.dt);
  }

  std::string show(const Scalar& x) const {
    return render(x, sphere ? sphere_domain() : coordinate_domain());
  }
  std::string show(const AlgElem& x) const { return to_string(x); }
  std::string show(const SphereForm& x) const { return to_string(x); }
  std::string show(const CForm& x) const { return to_string(x); }
  template <class B>
  std::string show(const Timed<B>& x) const {
    return "[" + show(x.omega) + "] + [" + show(x.rho) + "] dt";
  }
  std::string show(const TensorPair& x) const { return to_string(x); }

  template <class T>
  void zero(const std::string& label, const T& x) {
    ++checks;
    if (!first.empty()) return;
    if (!vanishes(x)) fail(label, show(x));
  }

  template <class T>
  void equal(const std::string& label, const T& got, const T& want) {
    zero(label, got + Scalar(-1) * want);
  }
};

struct Ctx {
  SuiteReport& rep;
  bool sphere;
  std::optional<Scalar> qv;
  int bound;
  long seed;

  SplitMix64 rng(std::uint64_t salt) const {
    return SplitMix64((std::uint64_t(seed) + 1) * 0x9E3779B97F4A7C15ULL + salt);
  }

  template <class Body>
  void item(std::string id, std::string statement, Body&& body) {
    SuiteItem it;
    it.id = std::move(id);
    it.statement = std::move(statement);
    Probe probe;
    probe.sphere = sphere;
    probe.qv = qv;
    try {
      body(probe);
      it.status = probe.ok() ? "exact-zero" : "residual";
      it.residual = probe.result();
    } catch (const std::exception& e) {
      it.status = "error";
      it.residual = e.what();
    }
    it.checks = probe.checks;
    rep.items.push_back(std::move(it));
  }
};

std::string nmp(int n, int m, int p) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
         " p=" + std::to_string(p);
}
std::string mp(int m, int p) {
  return "m=" + std::to_string(m) + " p=" + std::to_string(p);
}
std::string nk(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// ---------------------------------------------------------------------------
// Quantum-sphere material: monomial builder, metric constants, and the
// displayed formulas used as oracles.

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c = Scalar(1)) {
  if (c.is_zero() || n < 0 || m < 0 || p < 0) return {};
  QMono key;
  key.dfam = dfam && n > 0;
  key.n = std::uint16_t(n);
  key.m = std::uint16_t(m);
  key.p = std::uint16_t(p);
  return AlgElem::monomial(key, c);
}

const MetricParams S = MetricParams::symbolic();
const Scalar AL = S.alpha, BE = S.beta, GA = S.gamma, EP = S.eps;
const Scalar U = BE + AL * qpow(-2);
const Scalar TOPU = BE * EP + AL * GA * qpow(-8);
const Scalar IM = Scalar::imag_unit();

// Differential of the three monomial families, written term by term.
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

// Contraction of 1-form monomials: the six displayed lines.
SphereForm del1_plus_a(int n, int m, int p) {
  return SphereForm::fn(mono(false, n + 1, m - 1, p, AL * qint(m) * qpow(-n - 3)));
}
SphereForm del1_minus_a(int n, int m, int p) {
  return SphereForm::fn(
      mono(false, n - 1, m, p - 1, BE * qint(p) * qpow(6 - 2 * p - n)) +
      mono(false, n - 1, m + 1, p, BE * qint(p + n) * qpow(5 - 2 * p - n)));
}
SphereForm del1_plus_d(int n, int m, int p) {
  return SphereForm::fn(
      mono(true, n - 1, m, p + 1, AL * qint(n + m) * qpow(-n - 2)) +
      mono(true, n - 1, m - 1, p, AL * qint(m) * qpow(n - 3)));
}
SphereForm del1_minus_d(int n, int m, int p) {
  return SphereForm::fn(mono(true, n + 1, m, p - 1, BE * qint(p) * qpow(6 - 2 * p + n)));
}
SphereForm del1_plus_x(int m, int p) {
  return SphereForm::fn(mono(false, 1, m - 1, p, AL * qint(m) * qpow(-3)));
}
SphereForm del1_minus_x(int m, int p) {
  return SphereForm::fn(mono(true, 1, m, p - 1, BE * qint(p) * qpow(6 - 2 * p)));
}

// Contraction of 2-form monomials: the three displayed lines.
SphereForm del2_a(int n, int m, int p) {
  AlgElem plus, minus;
  minus += mono(false, n + 1, m - 1, p, AL * GA * qint(m) * qpow(-n - 5));
  plus -= mono(false, n - 1, m + 1, p, BE * EP * qint(p + n) * qpow(7 - 2 * p - n));
  plus -= mono(false, n - 1, m, p - 1, BE * EP * qint(p) * qpow(8 - 2 * p - n));
  return SphereForm::one_form(plus, minus);
}
SphereForm del2_d(int n, int m, int p) {
  AlgElem plus, minus;
  minus += mono(true, n - 1, m, p + 1, AL * GA * qint(m + n) * qpow(-4 - n));
  minus += mono(true, n - 1, m - 1, p, AL * GA * qint(m) * qpow(n - 5));
  plus -= mono(true, n + 1, m, p - 1, BE * EP * qint(p) * qpow(8 - 2 * p + n));
  return SphereForm::one_form(plus, minus);
}
SphereForm del2_x(int m, int p) {
  AlgElem plus, minus;
  minus += mono(false, 1, m - 1, p, AL * GA * qint(m) * qpow(-5));
  plus -= mono(true, 1, m, p - 1, BE * EP * qint(p) * qpow(8 - 2 * p));
  return SphereForm::one_form(plus, minus);
}

// Laplacian on functions: the displayed lines.
SphereForm lap0_a(int n, int m, int p) {
  const Scalar h = U * qint(m) * qpow(3 - 2 * m);
  return SphereForm::fn(mono(false, n, m, p, h * qint(m + 1)) +
                        mono(false, n, m - 1, p - 1, h * qint(p) * qpow(1)));
}
SphereForm lap0_d(int n, int m, int p) {
  const Scalar h = U * qint(p) * qpow(3 - 2 * p);
  return SphereForm::fn(mono(true, n, m, p, h * qint(p + 1)) +
                        mono(true, n, m - 1, p - 1, h * qint(m) * qpow(2 * n + 1)));
}

// Laplacian on 1-forms at fully symbolic contraction weights.
SphereForm lap1_plus_a(int n, int m, int p) {  // n >= 1, m = n + p + 2
  const Scalar hp = (BE * EP + AL * qpow(-6)) * qint(m) * qpow(5 - 2 * p - 2 * n);
  AlgElem plus = mono(false, n, m, p, hp * qint(n + p + 1)) +
                 mono(false, n, m - 1, p - 1, hp * qint(p) * qpow(1));
  AlgElem minus = mono(false, n + 2, m - 2, p,
                       AL * qint(m) * qint(m - 1) * qpow(-2 * n - 5) *
                           (Scalar(1) - GA * qpow(-2)));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_minus_a(int n, int m, int p) {  // n >= 2, m = n + p - 2
  const Scalar hp = BE * (Scalar(1) - EP * qpow(4));
  AlgElem plus =
      mono(false, n - 2, m + 2, p,
           hp * qint(p + n) * qint(p + n - 1) * qpow(9 - 4 * p - 2 * n)) +
      mono(false, n - 2, m, p - 2,
           hp * qint(p) * qint(p - 1) * qpow(13 - 4 * p - 2 * n)) +
      mono(false, n - 2, m + 1, p - 1,
           hp * qint(p) * qint(p + n - 1) * (Scalar(1) + qpow(2)) *
               qpow(10 - 4 * p - 2 * n));
  const Scalar hm = (BE + AL * GA * qpow(-4)) * qpow(5 - 2 * p - 2 * n);
  AlgElem minus = mono(false, n, m, p, hm * qint(m + 2) * qint(m + 1)) +
                  mono(false, n, m - 1, p - 1, hm * qint(p) * qint(m) * qpow(1));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_minus_a1(int m, int p) {  // n = 1, m = p - 1
  const Scalar hp = BE * qint(p) * (Scalar(1) - EP * qpow(4));
  AlgElem plus = mono(true, 1, m + 1, p - 1, hp * qint(p + 1) * qpow(8 - 4 * p)) +
                 mono(true, 1, m, p - 2, hp * qint(p - 1) * qpow(11 - 4 * p));
  const Scalar hm = (BE + AL * GA * qpow(-4)) * qpow(3 - 2 * p);
  AlgElem minus = mono(false, 1, m, p, hm * qint(p + 1) * qint(m + 1)) +
                  mono(false, 1, m - 1, p - 1, hm * qint(p) * qint(m) * qpow(1));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_plus_d(int n, int m, int p) {  // n >= 2, p = n + m - 2
  const Scalar hp = (BE * EP + AL * qpow(-6)) * qpow(5 - 2 * p);
  AlgElem plus = mono(true, n, m, p, hp * qint(n + m) * qint(p + 1)) +
                 mono(true, n, m - 1, p - 1, hp * qint(m) * qint(p) * qpow(2 * n + 1));
  const Scalar hm = AL * (Scalar(1) - GA * qpow(-2));
  AlgElem minus =
      mono(true, n - 2, m, p + 2,
           hm * qint(n + m) * qint(n + m - 1) * qpow(-1 - 2 * n)) +
      mono(true, n - 2, m - 2, p, hm * qint(m) * qint(m - 1) * qpow(2 * n - 5)) +
      mono(true, n - 2, m - 1, p + 1,
           hm * qint(m) * qpow(-2) * (Scalar(1) + qpow(-2)) * qint(m + n - 1));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_plus_d1(int m, int p) {  // n = 1, p = m - 1
  const Scalar hp = (BE * EP + AL * qpow(-6)) * qpow(5 - 2 * p);
  AlgElem plus = mono(true, 1, m, p, hp * qint(m + 1) * qint(p + 1)) +
                 mono(true, 1, m - 1, p - 1, hp * qint(m) * qint(p) * qpow(3));
  const Scalar hm = AL * qint(m) * (Scalar(1) - GA * qpow(-2)) * qpow(-3);
  AlgElem minus = mono(false, 1, m - 1, p + 1, hm * qint(m + 1) * qpow(-1)) +
                  mono(false, 1, m - 2, p, hm * qint(m - 1));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_minus_d(int n, int m, int p) {  // n >= 1, p = n + m + 2
  AlgElem plus = mono(true, n + 2, m, p - 2,
                      BE * qint(p) * qint(p - 1) * qpow(13 - 4 * p + 2 * n) *
                          (Scalar(1) - EP * qpow(4)));
  const Scalar hm = (BE + AL * GA * qpow(-4)) * qint(p) * qpow(5 - 2 * p);
  AlgElem minus = mono(true, n, m, p, hm * qint(m + n + 1)) +
                  mono(true, n, m - 1, p - 1, hm * qint(m) * qpow(2 * n + 1));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_plus_x(int m, int p) {  // n = 0, m = p + 2
  const Scalar hp = (BE * EP + AL * qpow(-6)) * qint(m) * qpow(5 - 2 * p);
  AlgElem plus = mono(false, 0, m, p, hp * qint(p + 1)) +
                 mono(false, 0, m - 1, p - 1, hp * qint(p) * qpow(1));
  AlgElem minus = mono(false, 2, m - 2, p,
                       AL * qint(m) * qint(m - 1) * qpow(-5) *
                           (Scalar(1) - GA * qpow(-2)));
  return SphereForm::one_form(plus, minus);
}
SphereForm lap1_minus_x(int m, int p) {  // n = 0, p = m + 2
  AlgElem plus = mono(true, 2, m, p - 2, BE * qint(p) * qint(p - 1) *
                                             qpow(13 - 4 * p) *
                                             (Scalar(1) - EP * qpow(4)));
  const Scalar hm = (BE + AL * GA * qpow(-4)) * qint(p) * qpow(5 - 2 * p);
  AlgElem minus = mono(false, 0, m, p, hm * qint(m + 1)) +
                  mono(false, 0, m - 1, p - 1, hm * qint(m) * qpow(1));
  return SphereForm::one_form(plus, minus);
}

// The same lines with gamma = q^2 and eps = q^-4: the crossing terms drop
// and every prefactor collapses onto U = beta + alpha q^-2.
SphereForm simp1_plus_a(int n, int m, int p) {
  const Scalar h = U * qint(m) * qpow(1 - 2 * p - 2 * n);
  return SphereForm::one_form(mono(false, n, m, p, h * qint(n + p + 1)) +
                                  mono(false, n, m - 1, p - 1, h * qint(p) * qpow(1)),
                              {});
}
SphereForm simp1_minus_a(int n, int m, int p) {
  const Scalar h = U * qpow(5 - 2 * p - 2 * n);
  return SphereForm::one_form(
      {}, mono(false, n, m, p, h * qint(m + 2) * qint(m + 1)) +
              mono(false, n, m - 1, p - 1, h * qint(p) * qint(m) * qpow(1)));
}
SphereForm simp1_minus_a1(int m, int p) {
  const Scalar h = U * qpow(3 - 2 * p);
  return SphereForm::one_form(
      {}, mono(false, 1, m, p, h * qint(p + 1) * qint(m + 1)) +
              mono(false, 1, m - 1, p - 1, h * qint(p) * qint(m) * qpow(1)));
}
SphereForm simp1_plus_d(int n, int m, int p) {
  const Scalar h = U * qpow(1 - 2 * p);
  return SphereForm::one_form(
      mono(true, n, m, p, h * qint(n + m) * qint(p + 1)) +
          mono(true, n, m - 1, p - 1, h * qint(m) * qint(p) * qpow(2 * n + 1)),
      {});
}
SphereForm simp1_plus_d1(int m, int p) {
  const Scalar h = U * qpow(1 - 2 * p);
  return SphereForm::one_form(
      mono(true, 1, m, p, h * qint(m + 1) * qint(p + 1)) +
          mono(true, 1, m - 1, p - 1, h * qint(m) * qint(p) * qpow(3)),
      {});
}
SphereForm simp1_minus_d(int n, int m, int p) {
  const Scalar h = U * qint(p) * qpow(5 - 2 * p);
  return SphereForm::one_form(
      {}, mono(true, n, m, p, h * qint(m + n + 1)) +
              mono(true, n, m - 1, p - 1, h * qint(m) * qpow(2 * n + 1)));
}
SphereForm simp1_plus_x(int m, int p) {
  const Scalar h = U * qint(m) * qpow(1 - 2 * p);
  return SphereForm::one_form(mono(false, 0, m, p, h * qint(p + 1)) +
                                  mono(false, 0, m - 1, p - 1, h * qint(p) * qpow(1)),
                              {});
}
SphereForm simp1_minus_x(int m, int p) {
  const Scalar h = U * qint(p) * qpow(5 - 2 * p);
  return SphereForm::one_form(
      {}, mono(false, 0, m, p, h * qint(m + 1)) +
              mono(false, 0, m - 1, p - 1, h * qint(m) * qpow(1)));
}

// Laplacian on 2-forms: the displayed lines.
SphereForm lap2_a(int n, int m, int p) {
  const Scalar h = TOPU * qint(m) * qpow(7 - 2 * m);
  return SphereForm::two_form(mono(false, n, m, p, h * qint(m + 1)) +
                              mono(false, n, m - 1, p - 1, h * qint(p) * qpow(1)));
}
SphereForm lap2_d(int n, int m, int p) {
  const Scalar h = TOPU * qint(p) * qpow(7 - 2 * p);
  return SphereForm::two_form(mono(true, n, m, p, h * qint(p + 1)) +
                              mono(true, n, m - 1, p - 1, h * qint(m) * qpow(2 * n + 1)));
}

// Unit-coefficient monomial of a prescribed grade, exponents <= bound.
AlgElem random_graded_box(SplitMix64& rng, int grade, int bound) {
  for (;;) {
    int n = int(rng.below(unsigned(bound + 1)));
    int m = int(rng.below(unsigned(bound + 1)));
    int p = int(rng.below(unsigned(bound + 1)));
    bool dfam = n > 0 && rng.below(2) == 1;
    AlgElem x = mono(dfam, n, m, p);
    if (x.has_grade(grade)) return x;
  }
}

// Every monomial of both families with exponents <= bound.
std::vector<AlgElem> monomial_box(int bound) {
  std::vector<AlgElem> out;
  for (int dfam = 0; dfam <= 1; ++dfam)
    for (int n = dfam; n <= bound; ++n)
      for (int m = 0; m <= bound; ++m)
        for (int p = 0; p <= bound; ++p) out.push_back(mono(dfam != 0, n, m, p));
  return out;
}

// Random monomial with exponents <= 3, a small coefficient, and up to a
// quadratic time dependence; used by the sampled axiom runs.
AlgElem random_sphere_mono(SplitMix64& rng) {
  static const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar(2),
                                  qpow(1),   qpow(-1),   Scalar::imag_unit()};
  Scalar c = coeffs[rng.below(6)];
  if (unsigned td = rng.below(3)) c = c * Scalar::variable(sv::t, int(td));
  int n = int(rng.below(4)), m = int(rng.below(4)), pp = int(rng.below(4));
  bool dfam = n > 0 && rng.below(2) == 1;
  return mono(dfam, n, m, pp, c);
}

AlgElem random_sphere_graded(SplitMix64& rng, int grade) {
  for (;;) {
    AlgElem x = random_sphere_mono(rng);
    if (x.is_zero() || x.has_grade(grade)) return x;
  }
}

SphereForm random_sphere_form(SplitMix64& rng, int degree) {
  switch (degree) {
    case 0:
      return SphereForm::fn(random_sphere_graded(rng, 0));
    case 1:
      return SphereForm::one_form(random_sphere_graded(rng, -2),
                                  random_sphere_graded(rng, 2));
    default:
      return SphereForm::two_form(random_sphere_graded(rng, 0));
  }
}

TB random_timed_sphere(SplitMix64& rng, int degree) {
  TB x;
  x.omega = random_sphere_form(rng, degree);
  if (degree > 0) x.rho = random_sphere_form(rng, degree - 1);
  return x;
}

// ---------------------------------------------------------------------------
// Coordinate material.

const Scalar X1 = Scalar::variable(cv::x1);
const Scalar X2 = Scalar::variable(cv::x2);
const Scalar TT = Scalar::variable(cv::t);
const Scalar CAL = Scalar::variable(cv::alpha);
const Scalar CBE = Scalar::variable(cv::beta);

Scalar rat(long num, long den = 1) { return Scalar::rational(num, den); }

// Small random polynomial in the first nvars coordinates, optionally with a
// linear-or-quadratic time factor on each monomial.
Scalar random_poly(SplitMix64& rng, int nvars, int deg, bool with_t = false) {
  Scalar out(0);
  for (int k = 0; k < 3; ++k) {
    long c = rng.range(-2, 2);
    if (c == 0) continue;
    Scalar term = rat(c);
    int budget = deg;
    for (int v = 0; v < nvars; ++v) {
      int e = int(rng.below(std::uint64_t(budget + 1)));
      budget -= e;
      if (e > 0) term = term * Scalar::variable(cv::x1 + v, e);
    }
    if (with_t)
      if (int e = int(rng.below(3)); e > 0) term = term * Scalar::variable(cv::t, e);
    out = out + term;
  }
  return out;
}

CForm random_coordinate_form(SplitMix64& rng, int nvars, int degree,
                             bool with_t = false) {
  CForm out;
  for (unsigned mask = 0; mask < 8u; ++mask) {
    if (std::popcount(mask) != degree) continue;
    if (mask >= (1u << nvars)) continue;
    out.add_term(mask, random_poly(rng, nvars, 2, with_t));
  }
  return out;
}

TC random_timed_classical(SplitMix64& rng, int degree) {
  TC x;
  x.omega = random_coordinate_form(rng, 2, degree, true);
  if (degree > 0) x.rho = random_coordinate_form(rng, 2, degree - 1, true);
  return x;
}

// The radial/angular model metric diag(1, (x^1)^2) on two coordinates.
Metric polar() {
  const Scalar z(0), o(1);
  return Metric(2, {{o, z}, {z, X1 * X1}}, {{o, z}, {z, o / (X1 * X1)}});
}

// Unimodular family [[1, p], [p, 1 + p^2]]: polynomial entries either way.
Metric unimodular(const Scalar& p) {
  const Scalar o(1);
  return Metric(2, {{o, p}, {p, o + p * p}},
                {{o + p * p, Scalar(-1) * p}, {Scalar(-1) * p, o}});
}

Metric random_diagonal(SplitMix64& rng, int dim) {
  std::vector<std::vector<Scalar>> g(dim, std::vector<Scalar>(dim, Scalar(0)));
  std::vector<std::vector<Scalar>> gi = g;
  for (int i = 0; i < dim; ++i) {
    Scalar p = random_poly(rng, dim, 2);
    Scalar e = Scalar(1) + p * p;  // positive, hence invertible
    g[i][i] = e;
    gi[i][i] = Scalar(1) / e;
  }
  return Metric(dim, g, gi);
}

VectorField field2(const Scalar& a, const Scalar& b) {
  VectorField v;
  v.dim = 2;
  v.comp[0] = a;
  v.comp[1] = b;
  return v;
}

// Drift 1-form G_i = g_{ij} v^j.
CForm lowered_drift(const Metric& m, const VectorField& v) {
  CForm out;
  for (int i = 0; i < m.dim; ++i) {
    Scalar gi(0);
    for (int j = 0; j < m.dim; ++j) gi = gi + m.g[i][j] * v.comp[j];
    out.add_term(1u << i, gi);
  }
  return out;
}

// Heat-balance expression of the reversal: second derivatives of the lowered
// drift, the metric-gradient contraction, the two drift couplings, and the
// time derivative, written component by component.
CForm reversal_oracle(const Metric& m, const VectorField& v, const CForm& low) {
  CForm oracle;
  for (int k = 0; k < m.dim; ++k) {
    Scalar ok(0);
    for (int mm = 0; mm < m.dim; ++mm)
      for (int nn = 0; nn < m.dim; ++nn) {
        ok = ok + rat(1, 2) * m.ginv[mm][nn] *
                      low.coefficient(1u << k)
                          .derivative(cv::x1 + nn)
                          .derivative(cv::x1 + mm);
        ok = ok + rat(1, 2) * m.ginv[mm][nn].derivative(cv::x1 + k) *
                      low.coefficient(1u << mm).derivative(cv::x1 + nn);
      }
    for (int i = 0; i < m.dim; ++i) {
      ok = ok - rat(1, 2) * low.coefficient(1u << i) *
                    v.comp[i].derivative(cv::x1 + k);
      ok = ok - rat(1, 2) * v.comp[i] *
                    low.coefficient(1u << k).derivative(cv::x1 + i);
    }
    ok = ok + low.coefficient(1u << k).derivative(cv::t);
    oracle.add_term(1u << k, ok);
  }
  return oracle;
}

// ---------------------------------------------------------------------------
// Suite bodies.

void suite_qsl2(Ctx& ctx) {
  const AlgElem ga = AlgElem::generator('a'), gb = AlgElem::generator('b'),
                gc = AlgElem::generator('c'), gd = AlgElem::generator('d');
  const AlgElem one = AlgElem::one();

  ctx.item("defining-relations",
           "the five exchange relations and the two unit relations hold in "
           "normal form",
           [&](Probe& pr) {
             pr.equal("b*a", gb * ga, qpow(1) * (ga * gb));
             pr.equal("c*a", gc * ga, qpow(1) * (ga * gc));
             pr.equal("d*b", gd * gb, qpow(1) * (gb * gd));
             pr.equal("d*c", gd * gc, qpow(1) * (gc * gd));
             pr.equal("c*b", gc * gb, gb * gc);
             pr.equal("a*d", ga * gd, one + qpow(-1) * (gb * gc));
             pr.equal("d*a", gd * ga, one + qpow(1) * (gb * gc));
           });

  const std::vector<AlgElem> monos = monomial_box(ctx.bound);

  ctx.item("star-involution",
           "applying star twice returns every monomial with exponents up to "
           "the bound, conjugating coefficients",
           [&](Probe& pr) {
             for (const AlgElem& x : monos)
               pr.equal(to_string(x), x.star().star(), x);
             const AlgElem z =
                 mono(false, 1, 2, 0, (Scalar(2) + IM) * qpow(1));
             pr.equal("complex coefficient", z.star().star(), z);
           });

  ctx.item("star-antihomomorphism",
           "star reverses every product of two monomials with exponents up "
           "to the bound",
           [&](Probe& pr) {
             for (const AlgElem& x : monos)
               for (const AlgElem& y : monos)
                 pr.equal(to_string(x) + " against " + to_string(y),
                          (x * y).star(), y.star() * x.star());
           });

  ctx.item("star-normal-form-a",
           "star of a^n b^m c^p equals the displayed signed power of q times "
           "d^n b^p c^m",
           [&](Probe& pr) {
             for (int n = 0; n <= ctx.bound; ++n)
               for (int m = 0; m <= ctx.bound; ++m)
                 for (int pp = 0; pp <= ctx.bound; ++pp) {
                   const Scalar sgn((m + pp) % 2 ? -1 : 1);
                   pr.equal(nmp(n, m, pp), mono(false, n, m, pp).star(),
                            mono(true, n, pp, m,
                                 sgn * qpow(-n * (m + pp) + pp - m)));
                 }
           });

  ctx.item("star-normal-form-d",
           "star of d^n b^m c^p equals the displayed signed power of q times "
           "a^n b^p c^m",
           [&](Probe& pr) {
             for (int n = 1; n <= ctx.bound; ++n)
               for (int m = 0; m <= ctx.bound; ++m)
                 for (int pp = 0; pp <= ctx.bound; ++pp) {
                   const Scalar sgn((m + pp) % 2 ? -1 : 1);
                   pr.equal(nmp(n, m, pp), mono(true, n, m, pp).star(),
                            mono(false, n, pp, m,
                                 sgn * qpow(n * (m + pp) - m + pp)));
                 }
           });
}

void suite_d_prop(Ctx& ctx) {
  ctx.item("generators",
           "the differential of each generator lands on the displayed frame "
           "line",
           [&](Probe& pr) {
             pr.equal("a", d(SphereForm::fn(AlgElem::generator('a'))),
                      SphereForm::one_form(qpow(2) * AlgElem::generator('b'), {}));
             pr.equal("b", d(SphereForm::fn(AlgElem::generator('b'))),
                      SphereForm::one_form({}, qpow(-1) * AlgElem::generator('a')));
             pr.equal("c", d(SphereForm::fn(AlgElem::generator('c'))),
                      SphereForm::one_form(qpow(2) * AlgElem::generator('d'), {}));
             pr.equal("d", d(SphereForm::fn(AlgElem::generator('d'))),
                      SphereForm::one_form({}, qpow(-1) * AlgElem::generator('c')));
             pr.zero("unit", d(SphereForm::fn(AlgElem::one())));
           });

  ctx.item("a-family",
           "the displayed differential of a^n b^m c^p matches d term by term",
           [&](Probe& pr) {
             for (int n = 1; n <= ctx.bound; ++n)
               for (int m = 0; m <= ctx.bound; ++m)
                 for (int pp = 0; pp <= ctx.bound; ++pp)
                   pr.equal(nmp(n, m, pp),
                            d(SphereForm::fn(mono(false, n, m, pp))),
                            d_closed_a(n, m, pp));
           });

  ctx.item("d-family",
           "the displayed differential of d^n b^m c^p matches d term by term",
           [&](Probe& pr) {
             for (int n = 1; n <= ctx.bound; ++n)
               for (int m = 0; m <= ctx.bound; ++m)
                 for (int pp = 0; pp <= ctx.bound; ++pp)
                   pr.equal(nmp(n, m, pp),
                            d(SphereForm::fn(mono(true, n, m, pp))),
                            d_closed_d(n, m, pp));
           });

  ctx.item("balanced-family",
           "the displayed differential of b^m c^p matches d term by term",
           [&](Probe& pr) {
             for (int m = 0; m <= ctx.bound; ++m)
               for (int pp = 0; pp <= ctx.bound; ++pp)
                 pr.equal(mp(m, pp), d(SphereForm::fn(mono(false, 0, m, pp))),
                          d_closed_x(m, pp));
           });

  ctx.item("dd-functions",
           "the differential squares to zero on every monomial function of "
           "the sphere subalgebra",
           [&](Probe& pr) {
             for (const AlgElem& f : monomial_box(ctx.bound))
               if (f.grade_zero()) pr.zero(to_string(f), d(d(SphereForm::fn(f))));
             // off the grade-zero subalgebra the square does not vanish
             pr.require("off-grade counterexample",
                        !d(d(SphereForm::fn(AlgElem::generator('a')))).is_zero(),
                        "the square vanished outside the sphere subalgebra");
           });

  ctx.item("dd-one-forms",
           "the differential squares to zero on every sphere-graded monomial "
           "1-form",
           [&](Probe& pr) {
             for (const AlgElem& f : monomial_box(ctx.bound)) {
               if (f.has_grade(-2))
                 pr.zero("e+ slot of " + to_string(f),
                         d(d(SphereForm::one_form(f, {}))));
               if (f.has_grade(2))
                 pr.zero("e- slot of " + to_string(f),
                         d(d(SphereForm::one_form({}, f))));
             }
           });
}

void suite_delta_props(Ctx& ctx) {
  const int B = ctx.bound;

  ctx.item("functions-annihilated",
           "the contraction vanishes on degree-0 elements", [&](Probe& pr) {
             pr.zero("a^2*b*c", delta(SphereForm::fn(mono(false, 2, 1, 1)), S));
             pr.zero("1", delta(SphereForm::fn(AlgElem::one()), S));
           });

  ctx.item("one-form-plus-a",
           "contraction of e+ a^n b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp),
                            delta(SphereForm::one_form(mono(false, n, m, pp), {}), S),
                            del1_plus_a(n, m, pp));
           });
  ctx.item("one-form-minus-a",
           "contraction of e- a^n b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp),
                            delta(SphereForm::one_form({}, mono(false, n, m, pp)), S),
                            del1_minus_a(n, m, pp));
           });
  ctx.item("one-form-plus-d",
           "contraction of e+ d^n b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp),
                            delta(SphereForm::one_form(mono(true, n, m, pp), {}), S),
                            del1_plus_d(n, m, pp));
           });
  ctx.item("one-form-minus-d",
           "contraction of e- d^n b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp),
                            delta(SphereForm::one_form({}, mono(true, n, m, pp)), S),
                            del1_minus_d(n, m, pp));
           });
  ctx.item("one-form-plus-balanced",
           "contraction of e+ b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int m = 0; m <= B; ++m)
               for (int pp = 0; pp <= B; ++pp)
                 pr.equal(mp(m, pp),
                          delta(SphereForm::one_form(mono(false, 0, m, pp), {}), S),
                          del1_plus_x(m, pp));
           });
  ctx.item("one-form-minus-balanced",
           "contraction of e- b^m c^p matches the displayed line",
           [&](Probe& pr) {
             for (int m = 0; m <= B; ++m)
               for (int pp = 0; pp <= B; ++pp)
                 pr.equal(mp(m, pp),
                          delta(SphereForm::one_form({}, mono(false, 0, m, pp)), S),
                          del1_minus_x(m, pp));
           });

  auto left2 = [](const AlgElem& f) {
    return SphereForm::two_form(f.grade_shift(-2));
  };
  ctx.item("two-form-a",
           "contraction of the a-family 2-form monomials matches the "
           "displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp), delta(left2(mono(false, n, m, pp)), S),
                            del2_a(n, m, pp));
           });
  ctx.item("two-form-d",
           "contraction of the d-family 2-form monomials matches the "
           "displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; m <= B; ++m)
                 for (int pp = 0; pp <= B; ++pp)
                   pr.equal(nmp(n, m, pp), delta(left2(mono(true, n, m, pp)), S),
                            del2_d(n, m, pp));
           });
  ctx.item("two-form-balanced",
           "contraction of the balanced 2-form monomials matches the "
           "displayed line",
           [&](Probe& pr) {
             for (int m = 0; m <= B; ++m)
               for (int pp = 0; pp <= B; ++pp)
                 pr.equal(mp(m, pp), delta(left2(mono(false, 0, m, pp)), S),
                          del2_x(m, pp));
           });
}

void suite_laplace_props(Ctx& ctx) {
  const int B = ctx.bound;
  const MetricParams P = MetricParams::simplified();

  ctx.item("functions-a",
           "the Laplacian of a^n b^{n+p} c^p matches the displayed line",
           [&](Probe& pr) {
             for (int n = 0; n <= B; ++n)
               for (int pp = 0; pp + n <= B; ++pp)
                 pr.equal(nmp(n, n + pp, pp),
                          laplacian(SphereForm::fn(mono(false, n, n + pp, pp)), S),
                          lap0_a(n, n + pp, pp));
           });
  ctx.item("functions-d",
           "the Laplacian of d^n b^p c^{n+p} matches the displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int pp = 0; pp + n <= B; ++pp)
                 pr.equal(nmp(n, pp, n + pp),
                          laplacian(SphereForm::fn(mono(true, n, pp, n + pp)), S),
                          lap0_d(n, pp, n + pp));
           });
  ctx.item("functions-instances",
           "the Laplacian annihilates the unit and sends b*c to the "
           "displayed combination",
           [&](Probe& pr) {
             pr.zero("unit", laplacian(SphereForm::fn(AlgElem::one()), S));
             pr.equal("b*c", laplacian(SphereForm::fn(mono(false, 0, 1, 1)), S),
                      SphereForm::fn(mono(false, 0, 1, 1, U * qint(2) * qpow(1)) +
                                     U * qpow(2) * AlgElem::one()));
           });

  ctx.item("one-form-plus-a",
           "the Laplacian of e+ a^n b^{n+p+2} c^p matches the displayed line "
           "at symbolic weights",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int pp = 0; n + pp + 2 <= B + 2; ++pp)
                 pr.equal(nmp(n, n + pp + 2, pp),
                          laplacian(SphereForm::one_form(
                                        mono(false, n, n + pp + 2, pp), {}), S),
                          lap1_plus_a(n, n + pp + 2, pp));
           });
  ctx.item("one-form-minus-a",
           "the Laplacian of e- a^n b^{n+p-2} c^p matches the displayed line "
           "at symbolic weights",
           [&](Probe& pr) {
             for (int n = 2; n <= B; ++n)
               for (int pp = 0; pp <= B && n + pp - 2 <= B; ++pp)
                 pr.equal(nmp(n, n + pp - 2, pp),
                          laplacian(SphereForm::one_form(
                                        {}, mono(false, n, n + pp - 2, pp)), S),
                          lap1_minus_a(n, n + pp - 2, pp));
             for (int pp = 1; pp <= B; ++pp)
               pr.equal("n=1 " + mp(pp - 1, pp),
                        laplacian(SphereForm::one_form(
                                      {}, mono(false, 1, pp - 1, pp)), S),
                        lap1_minus_a1(pp - 1, pp));
           });
  ctx.item("one-form-plus-d",
           "the Laplacian of e+ d^n b^m c^{n+m-2} matches the displayed line "
           "at symbolic weights",
           [&](Probe& pr) {
             for (int n = 2; n <= B; ++n)
               for (int m = 0; m <= B && n + m - 2 <= B; ++m)
                 pr.equal(nmp(n, m, n + m - 2),
                          laplacian(SphereForm::one_form(
                                        mono(true, n, m, n + m - 2), {}), S),
                          lap1_plus_d(n, m, n + m - 2));
             for (int m = 1; m <= B; ++m)
               pr.equal("n=1 " + mp(m, m - 1),
                        laplacian(SphereForm::one_form(
                                      mono(true, 1, m, m - 1), {}), S),
                        lap1_plus_d1(m, m - 1));
           });
  ctx.item("one-form-minus-d",
           "the Laplacian of e- d^n b^m c^{n+m+2} matches the displayed line "
           "at symbolic weights",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int m = 0; n + m + 2 <= B + 2; ++m)
                 pr.equal(nmp(n, m, n + m + 2),
                          laplacian(SphereForm::one_form(
                                        {}, mono(true, n, m, n + m + 2)), S),
                          lap1_minus_d(n, m, n + m + 2));
           });
  ctx.item("one-form-plus-balanced",
           "the Laplacian of e+ b^{p+2} c^p matches the displayed line at "
           "symbolic weights",
           [&](Probe& pr) {
             for (int pp = 0; pp <= B; ++pp)
               pr.equal(mp(pp + 2, pp),
                        laplacian(SphereForm::one_form(
                                      mono(false, 0, pp + 2, pp), {}), S),
                        lap1_plus_x(pp + 2, pp));
           });
  ctx.item("one-form-minus-balanced",
           "the Laplacian of e- b^m c^{m+2} matches the displayed line at "
           "symbolic weights",
           [&](Probe& pr) {
             for (int m = 0; m <= B; ++m)
               pr.equal(mp(m, m + 2),
                        laplacian(SphereForm::one_form(
                                      {}, mono(false, 0, m, m + 2)), S),
                        lap1_minus_x(m, m + 2));
           });

  ctx.item("one-form-pinned",
           "with gamma = q^2 and eps = q^-4 every 1-form line collapses onto "
           "the single prefactor beta + alpha q^-2",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int pp = 0; n + pp + 2 <= B + 2; ++pp)
                 pr.equal("plus-a " + nmp(n, n + pp + 2, pp),
                          laplacian(SphereForm::one_form(
                                        mono(false, n, n + pp + 2, pp), {}), P),
                          simp1_plus_a(n, n + pp + 2, pp));
             for (int n = 2; n <= B; ++n)
               for (int pp = 0; pp <= B && n + pp - 2 <= B; ++pp)
                 pr.equal("minus-a " + nmp(n, n + pp - 2, pp),
                          laplacian(SphereForm::one_form(
                                        {}, mono(false, n, n + pp - 2, pp)), P),
                          simp1_minus_a(n, n + pp - 2, pp));
             for (int pp = 1; pp <= B; ++pp)
               pr.equal("minus-a n=1 " + mp(pp - 1, pp),
                        laplacian(SphereForm::one_form(
                                      {}, mono(false, 1, pp - 1, pp)), P),
                        simp1_minus_a1(pp - 1, pp));
             for (int n = 2; n <= B; ++n)
               for (int m = 0; m <= B && n + m - 2 <= B; ++m)
                 pr.equal("plus-d " + nmp(n, m, n + m - 2),
                          laplacian(SphereForm::one_form(
                                        mono(true, n, m, n + m - 2), {}), P),
                          simp1_plus_d(n, m, n + m - 2));
             for (int m = 1; m <= B; ++m)
               pr.equal("plus-d n=1 " + mp(m, m - 1),
                        laplacian(SphereForm::one_form(
                                      mono(true, 1, m, m - 1), {}), P),
                        simp1_plus_d1(m, m - 1));
             for (int n = 1; n <= B; ++n)
               for (int m = 0; n + m + 2 <= B + 2; ++m)
                 pr.equal("minus-d " + nmp(n, m, n + m + 2),
                          laplacian(SphereForm::one_form(
                                        {}, mono(true, n, m, n + m + 2)), P),
                          simp1_minus_d(n, m, n + m + 2));
             for (int pp = 0; pp <= B; ++pp) {
               pr.equal("plus-balanced " + mp(pp + 2, pp),
                        laplacian(SphereForm::one_form(
                                      mono(false, 0, pp + 2, pp), {}), P),
                        simp1_plus_x(pp + 2, pp));
               pr.equal("minus-balanced " + mp(pp, pp + 2),
                        laplacian(SphereForm::one_form(
                                      {}, mono(false, 0, pp, pp + 2)), P),
                        simp1_minus_x(pp, pp + 2));
             }
           });

  ctx.item("two-forms-a",
           "the Laplacian of the a-family 2-form monomials matches the "
           "displayed line",
           [&](Probe& pr) {
             for (int n = 0; n <= B; ++n)
               for (int pp = 0; pp + n <= B; ++pp)
                 pr.equal(nmp(n, n + pp, pp),
                          laplacian(SphereForm::two_form(mono(false, n, n + pp, pp)), S),
                          lap2_a(n, n + pp, pp));
           });
  ctx.item("two-forms-d",
           "the Laplacian of the d-family 2-form monomials matches the "
           "displayed line",
           [&](Probe& pr) {
             for (int n = 1; n <= B; ++n)
               for (int pp = 0; pp + n <= B; ++pp)
                 pr.equal(nmp(n, pp, n + pp),
                          laplacian(SphereForm::two_form(mono(true, n, pp, n + pp)), S),
                          lap2_d(n, pp, n + pp));
           });
  ctx.item("two-forms-mirror",
           "with the pinned weights the top degree mirrors the Laplacian on "
           "functions",
           [&](Probe& pr) {
             SplitMix64 rng = ctx.rng(31);
             for (int k = 0; k < 25; ++k) {
               const AlgElem f = random_graded_box(rng, 0, B);
               pr.equal("sample " + std::to_string(k),
                        laplacian(SphereForm::two_form(f), P),
                        SphereForm::two_form(laplacian(SphereForm::fn(f), P).c0));
             }
           });
  ctx.item("commutes-with-d",
           "the Laplacian commutes with the differential on graded samples",
           [&](Probe& pr) {
             SplitMix64 rng = ctx.rng(37);
             for (int k = 0; k < 25; ++k) {
               const SphereForm f = SphereForm::fn(random_graded_box(rng, 0, B));
               pr.equal("function sample " + std::to_string(k),
                        d(laplacian(f, S)), laplacian(d(f), S));
               const SphereForm xi = SphereForm::one_form(
                   random_graded_box(rng, -2, B), random_graded_box(rng, 2, B));
               pr.equal("one-form sample " + std::to_string(k),
                        d(laplacian(xi, S)), laplacian(d(xi), S));
             }
           });
}

void suite_eigen0(Ctx& ctx) {
  const int B = ctx.bound;
  auto ladder = [&](const char* id, const char* fam, int nmin) {
    ctx.item(id,
             std::string("the ") + fam +
                 " eigenfunctions satisfy their eigenvalue relation exactly",
             [&, fam, nmin](Probe& pr) {
               for (int n = nmin; n <= std::max(nmin, B); ++n)
                 for (int k = 0; k <= B; ++k) {
                   const EigenForm ef = eigenform(fam, n, k, S);
                   pr.require(nk(n, k), ef.form.grade_valid(),
                              "eigenform is not sphere-graded");
                   pr.zero(nk(n, k), eigen_residual(ef, S));
                   if (nmin == 0) break;
                 }
               if (nmin == 0) {
                 // the balanced family carries a single ladder at n = 0
                 for (int k = 0; k <= B; ++k)
                   pr.zero(nk(0, k), eigen_residual(eigenform(fam, 0, k, S), S));
               }
             });
  };
  ladder("fn-a", "fn-a", 1);
  ladder("fn-d", "fn-d", 1);

  ctx.item("fn-x",
           "the balanced eigenfunctions satisfy their eigenvalue relation "
           "exactly",
           [&](Probe& pr) {
             for (int k = 0; k <= B; ++k) {
               const EigenForm ef = eigenform("fn-x", 0, k, S);
               pr.require("k=" + std::to_string(k), ef.form.grade_valid(),
                          "eigenform is not sphere-graded");
               pr.zero("k=" + std::to_string(k), eigen_residual(ef, S));
             }
           });

  ctx.item("balanced-instances",
           "the two lowest balanced eigenfunctions are the displayed "
           "combination and the constant",
           [&](Probe& pr) {
             const EigenForm ex = eigenform("fn-x", 0, 1, S);
             pr.equal("k=1 form", ex.form,
                      SphereForm::fn(qpow(1) * AlgElem::one() +
                                     mono(false, 0, 1, 1, qint(2))));
             pr.equal("k=1 eigenvalue", ex.eigenvalue,
                      U * qint(2) * qint(1) * qpow(1));
             const EigenForm e0 = eigenform("fn-x", 0, 0, S);
             pr.equal("k=0 form", e0.form, SphereForm::fn(AlgElem::one()));
             pr.zero("k=0 eigenvalue", e0.eigenvalue);
           });
}

void suite_eigen1(Ctx& ctx) {
  const int B = ctx.bound;
  const MetricParams P = MetricParams::simplified();
  auto family = [&](const char* fam, int nmin, int nmax) {
    ctx.item(fam,
             std::string("the ") + fam +
                 " 1-form ladder consists of exact eigenforms at the pinned "
                 "interior weights",
             [&, fam, nmin, nmax](Probe& pr) {
               for (int n = nmin; n <= nmax; ++n)
                 for (int k = 0; k <= B; ++k) {
                   const EigenForm ef = eigenform(fam, n, k, P);
                   pr.require(nk(n, k), ef.form.grade_valid(),
                              "eigenform is not sphere-graded");
                   pr.zero(nk(n, k), eigen_residual(ef, P));
                 }
             });
  };
  family("plus-a", 1, B);
  family("minus-a", 2, std::max(2, B));
  family("plus-d", 2, std::max(2, B));
  family("minus-d", 1, B);
  family("plus-b2", 0, 0);
  family("minus-c2", 0, 0);
  family("plus-db", 1, 1);
  family("minus-ac", 1, 1);

  ctx.item("lowest-instance",
           "the bottom of the e+ b^2 ladder is the displayed form with the "
           "displayed eigenvalue",
           [&](Probe& pr) {
             const EigenForm ef = eigenform("plus-b2", 0, 0, P);
             pr.equal("form", ef.form,
                      SphereForm::one_form(mono(false, 0, 2, 0), {}));
             pr.equal("eigenvalue", ef.eigenvalue,
                      U * qint(2) * qint(1) * qpow(1));
           });

  ctx.item("degenerate-multiplet",
           "the four extremal 1-form ladders share one eigenvalue level by "
           "level",
           [&](Probe& pr) {
             for (int k = 0; k <= B; ++k) {
               const Scalar expected =
                   U * qint(k + 2) * qint(k + 1) * qpow(1 - 2 * k);
               pr.equal("plus-b2 k=" + std::to_string(k),
                        eigenform("plus-b2", 0, k, S).eigenvalue, expected);
               pr.equal("plus-db k=" + std::to_string(k),
                        eigenform("plus-db", 1, k, S).eigenvalue, expected);
               pr.equal("minus-c2 k=" + std::to_string(k),
                        eigenform("minus-c2", 0, k, S).eigenvalue, expected);
               pr.equal("minus-ac k=" + std::to_string(k),
                        eigenform("minus-ac", 1, k, S).eigenvalue, expected);
             }
           });
}

void suite_eigen2(Ctx& ctx) {
  const int B = ctx.bound;
  auto ladder = [&](const char* fam, int nmin, int nmax) {
    ctx.item(fam,
             std::string("the ") + fam +
                 " 2-form ladder consists of exact eigenforms",
             [&, fam, nmin, nmax](Probe& pr) {
               for (int n = nmin; n <= nmax; ++n)
                 for (int k = 0; k <= B; ++k) {
                   const EigenForm ef = eigenform(fam, n, k, S);
                   pr.require(nk(n, k), ef.form.grade_valid(),
                              "eigenform is not sphere-graded");
                   pr.zero(nk(n, k), eigen_residual(ef, S));
                 }
             });
  };
  ladder("two-a", 1, B);
  ladder("two-d", 1, B);
  ladder("two-x", 0, 0);
}

void suite_harmonic(Ctx& ctx) {
  const MetricParams P = MetricParams::simplified();
  const int top = std::max(2, ctx.bound);

  ctx.item("degree-0",
           "the harmonic functions are exactly the constants at every "
           "enumeration bound",
           [&](Probe& pr) {
             for (int bnd = 2; bnd <= top; ++bnd) {
               const auto k0 = harmonic_kernel(0, bnd, P);
               pr.require("bound " + std::to_string(bnd), k0.size() == 1,
                          "kernel dimension differs from 1");
               if (k0.size() == 1)
                 pr.equal("bound " + std::to_string(bnd), k0[0],
                          SphereForm::fn(AlgElem::one()));
             }
           });
  ctx.item("degree-1",
           "no 1-form is harmonic at any enumeration bound", [&](Probe& pr) {
             for (int bnd = 2; bnd <= top; ++bnd)
               pr.require("bound " + std::to_string(bnd),
                          harmonic_kernel(1, bnd, P).empty(),
                          "kernel is not empty");
           });
  ctx.item("degree-2",
           "the harmonic 2-forms are exactly the multiples of the frame "
           "square at every enumeration bound",
           [&](Probe& pr) {
             for (int bnd = 2; bnd <= top; ++bnd) {
               const auto k2 = harmonic_kernel(2, bnd, P);
               pr.require("bound " + std::to_string(bnd), k2.size() == 1,
                          "kernel dimension differs from 1");
               if (k2.size() == 1)
                 pr.equal("bound " + std::to_string(bnd), k2[0],
                          SphereForm::two_form(AlgElem::one()));
             }
           });
  ctx.item("heat-stationary",
           "the heat step leaves the constant function fixed", [&](Probe& pr) {
             pr.zero("unit", heat_step_residual(SphereForm::fn(AlgElem::one()), S));
           });
  ctx.item("heat-eigenflow",
           "one heat step scales an eigenfunction by minus alpha times its "
           "eigenvalue",
           [&](Probe& pr) {
             const EigenForm ef = eigenform("fn-x", 0, 1, S);
             pr.equal("balanced k=1", heat_step_residual(ef.form, S),
                      (Scalar(-1) * AL * ef.eigenvalue) * ef.form);
             pr.equal("spelled out", heat_step_residual(ef.form, S),
                      (Scalar(-1) * AL * U * qint(2) * qpow(1)) *
                          SphereForm::fn(qpow(1) * AlgElem::one() +
                                         mono(false, 0, 1, 1, qint(2))));
           });
}

void suite_hodge_double(Ctx& ctx) {
  const int B = ctx.bound;

  ctx.item("involution-functions",
           "applying the duality twice is the identity on functions",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             for (const AlgElem& f : monomial_box(B))
               pr.equal(to_string(f),
                        hodge(hodge(SphereForm::fn(f), c), c), SphereForm::fn(f));
           });
  ctx.item("involution-one-forms",
           "applying the duality twice is minus the identity on 1-forms",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             for (const AlgElem& f : monomial_box(B)) {
               const SphereForm xp = SphereForm::one_form(f, {});
               const SphereForm xm = SphereForm::one_form({}, f);
               pr.equal("e+ slot of " + to_string(f), hodge(hodge(xp, c), c), -xp);
               pr.equal("e- slot of " + to_string(f), hodge(hodge(xm, c), c), -xm);
             }
           });
  ctx.item("involution-two-forms",
           "applying the duality twice is the identity on 2-forms",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             for (const AlgElem& f : monomial_box(B))
               pr.equal(to_string(f),
                        hodge(hodge(SphereForm::two_form(f), c), c),
                        SphereForm::two_form(f));
           });
  ctx.item("second-solution",
           "an independent solution of the constant relations also squares "
           "to the signed identity",
           [&](Probe& pr) {
             const HodgeConstants c =
                 solve_constants(Scalar(2) * IM * qpow(1), IM * qpow(-1));
             pr.require("basis sweep", check_double_hodge(c, std::min(B, 3)),
                        "double duality failed on a basis element");
           });
  ctx.item("constant-relations",
           "the solved constants satisfy K M = 1, L N = q^2 and pin the "
           "interior weights",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             pr.equal("K*M", c.K * c.M, Scalar(1));
             pr.equal("L*N", c.L * c.N, qpow(2));
             pr.equal("alpha", c.params.alpha, Scalar(-1) * qpow(3));
             pr.equal("beta", c.params.beta, Scalar(-1) * qpow(-5));
             pr.equal("gamma", c.params.gamma, qpow(2));
             pr.equal("eps", c.params.eps, qpow(-4));
             const HodgeConstants c3 =
                 solve_constants(Scalar(2) * IM * qpow(1), IM * qpow(-1));
             pr.equal("second K*M", c3.K * c3.M, Scalar(1));
             pr.equal("second L*N", c3.L * c3.N, qpow(2));
           });
  ctx.item("violations-detected",
           "scaling N or negating M breaks the double duality on a small "
           "basis",
           [&](Probe& pr) {
             HodgeConstants bad = solve_constants(IM, IM);
             bad.N *= Scalar(2);
             pr.require("scaled N", !check_double_hodge(bad, 2),
                        "a scaled constant still passed");
             bad = solve_constants(IM, IM);
             bad.M = Scalar(-1) * bad.M;
             pr.require("negated M", !check_double_hodge(bad, 2),
                        "a negated constant still passed");
           });
}

void suite_hodge_codiff(Ctx& ctx) {
  const int B = ctx.bound;

  ctx.item("intertwines-d",
           "the duality intertwines the differential and the contraction at "
           "the solved constants",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM * qpow(1));
             pr.require("basis sweep",
                        check_codifferential(c, c.params, std::min(B, 3)),
                        "the identification failed on a basis element");
           });
  ctx.item("signed-conjugation-one-forms",
           "on 1-forms the contraction equals minus the inverse duality "
           "conjugation of d",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             for (const SphereForm& xi : graded_monomial_basis(1, B))
               pr.equal(to_string(xi), delta(xi, c.params),
                        Scalar(-1) * hodge_inv(d(hodge(xi, c)), c));
           });
  ctx.item("signed-conjugation-two-forms",
           "on 2-forms the contraction equals the inverse duality "
           "conjugation of d",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             for (const SphereForm& xi : graded_monomial_basis(2, B))
               pr.equal(to_string(xi), delta(xi, c.params),
                        hodge_inv(d(hodge(xi, c)), c));
           });
  ctx.item("adjointness",
           "the pairing makes the contraction adjoint to the differential on "
           "sampled forms",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             SplitMix64 rng = ctx.rng(41);
             for (int k = 0; k < 24; ++k) {
               const SphereForm eta = SphereForm::fn(random_graded_box(rng, 0, 3));
               const SphereForm xi = SphereForm::one_form(
                   random_graded_box(rng, -2, 3), random_graded_box(rng, 2, 3));
               const Scalar lhs = inner(d(eta), xi, c);
               pr.equal("conjugation sample " + std::to_string(k), lhs,
                        Scalar(-1) * inner(eta, hodge_inv(d(hodge(xi, c)), c), c));
               pr.equal("contraction sample " + std::to_string(k), lhs,
                        inner(eta, delta(xi, c.params), c));
             }
           });
  ctx.item("integral-values",
           "the integral of (b c)^p times the frame square is the displayed "
           "signed ratio",
           [&](Probe& pr) {
             for (int pp = 0; pp <= 6; ++pp) {
               const Scalar expected =
                   (pp % 2 ? Scalar(-1) : Scalar(1)) * qpow(pp) / qint(pp + 1);
               pr.equal("p=" + std::to_string(pp),
                        integrate(SphereForm::two_form(mono(false, 0, pp, pp))),
                        expected);
             }
             pr.zero("unbalanced b^3",
                     integrate(SphereForm::two_form(mono(false, 1, 3, 0))));
             pr.zero("d-family word",
                     integrate(SphereForm::two_form(mono(true, 2, 1, 1))));
             pr.zero("unbalanced b^2 c",
                     integrate(SphereForm::two_form(mono(false, 0, 2, 1))));
           });
  ctx.item("exact-top-forms",
           "every exact 2-form built from a monomial 1-form integrates to "
           "zero",
           [&](Probe& pr) {
             for (const AlgElem& f : monomial_box(B)) {
               pr.zero("e+ slot of " + to_string(f),
                       integrate(d(SphereForm::one_form(f, {}))));
               pr.zero("e- slot of " + to_string(f),
                       integrate(d(SphereForm::one_form({}, f))));
             }
           });
}

void suite_hodge_hermitian(Ctx& ctx) {
  const int B = ctx.bound;

  ctx.item("unit-norm", "the pairing of the unit with itself is q^2",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             pr.equal("<1,1>",
                      inner(SphereForm::fn(AlgElem::one()),
                            SphereForm::fn(AlgElem::one()), c),
                      qpow(2));
           });
  ctx.item("pairs",
           "conjugating the pairing swaps its arguments on every monomial "
           "pair in each degree",
           [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM * qpow(1));
             const std::vector<AlgElem> fs = monomial_box(B);
             std::vector<SphereForm> forms[3];
             for (const AlgElem& f : fs) {
               forms[0].push_back(SphereForm::fn(f));
               forms[1].push_back(SphereForm::one_form(f, {}));
               forms[1].push_back(SphereForm::one_form({}, f));
               forms[2].push_back(SphereForm::two_form(f));
             }
             for (int deg = 0; deg <= 2; ++deg)
               for (std::size_t i = 0; i < forms[deg].size(); ++i)
                 for (std::size_t j = i; j < forms[deg].size(); ++j)
                   pr.equal("degree " + std::to_string(deg) + " pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")",
                            inner(forms[deg][i], forms[deg][j], c).conj(),
                            inner(forms[deg][j], forms[deg][i], c));
           });
  ctx.item("grading-orthogonality",
           "mixed frame slots pair to zero", [&](Probe& pr) {
             const HodgeConstants c = solve_constants(IM, IM);
             pr.zero("e+ against e-",
                     inner(SphereForm::one_form(mono(false, 0, 2, 0), {}),
                           SphereForm::one_form({}, mono(false, 0, 0, 2)), c));
           });
  ctx.item("violation-detected",
           "replacing one duality constant by a real value breaks the "
           "symmetry on the unit",
           [&](Probe& pr) {
             HodgeConstants real_n = solve_constants(IM, IM * qpow(1));
             real_n.N = qpow(2);
             const SphereForm unit = SphereForm::fn(AlgElem::one());
             const Scalar diff = inner(unit, unit, real_n).conj() -
                                 inner(unit, unit, real_n);
             pr.require("unit pairing", !pr.vanishes(diff),
                        "the real constant still paired symmetrically");
           });
}

void suite_axioms_sphere(Ctx& ctx) {
  const SphereBackend b;
  SplitMix64 rng = ctx.rng(7);
  auto sampler = [&rng](int degree) { return random_timed_sphere(rng, degree); };
  std::optional<AxiomReport> rep;
  std::string err;
  try {
    rep = axiom_suite(b, Scalar::variable(sv::s), sampler, ctx.bound, false);
  } catch (const std::exception& e) {
    err = e.what();
  }
  if (!rep) {
    ctx.item("axioms", "the sampled axiom run completes",
             [&](Probe&) { throw std::runtime_error(err); });
    return;
  }
  auto counted = [&](const char* id, const char* statement, int checks,
                     int failures) {
    ctx.item(id, statement, [&](Probe& pr) {
      pr.checks = checks;
      if (failures)
        pr.fail("sampled identities", std::to_string(failures) + " of " +
                                          std::to_string(checks) + " failed");
    });
  };
  counted("differential",
          "the deformed differential squares to zero on sampled elements",
          rep->differential_checks, rep->differential_failures);
  counted("leibniz",
          "the deformed product satisfies the graded Leibniz rule on sampled "
          "pairs",
          rep->leibniz_checks, rep->leibniz_failures);
  counted("associativity", "the deformed product is associative on sampled "
                           "triples",
          rep->associativity_checks, rep->associativity_failures);
  counted("twist",
          "the twist maps the undeformed structure onto the deformed one on "
          "sampled elements",
          rep->iso_checks, rep->iso_failures);
}

void suite_axioms_classical(Ctx& ctx) {
  const ClassicalBackend b(unimodular(X1), field2(X2, X1), Scalar(1), CBE);
  SplitMix64 rng = ctx.rng(11);
  auto sampler = [&rng](int degree) { return random_timed_classical(rng, degree); };
  std::optional<AxiomReport> rep;
  std::string err;
  try {
    rep = axiom_suite(b, CAL, sampler, ctx.bound, true);
  } catch (const std::exception& e) {
    err = e.what();
  }
  if (!rep) {
    ctx.item("axioms", "the sampled axiom run completes",
             [&](Probe&) { throw std::runtime_error(err); });
    return;
  }
  auto counted = [&](const char* id, const char* statement, int checks,
                     int failures) {
    ctx.item(id, statement, [&](Probe& pr) {
      pr.checks = checks;
      if (failures)
        pr.fail("sampled identities", std::to_string(failures) + " of " +
                                          std::to_string(checks) + " failed");
    });
  };
  counted("differential",
          "the deformed differential squares to zero on sampled elements",
          rep->differential_checks, rep->differential_failures);
  counted("leibniz",
          "the deformed product satisfies the graded Leibniz rule on sampled "
          "pairs",
          rep->leibniz_checks, rep->leibniz_failures);
  counted("associativity", "the deformed product is associative on sampled "
                           "triples",
          rep->associativity_checks, rep->associativity_failures);
  counted("twist",
          "the twist maps the undeformed structure onto the deformed one on "
          "sampled elements",
          rep->iso_checks, rep->iso_failures);
  counted("commutativity",
          "the deformed product stays graded commutative on sampled pairs",
          rep->commutativity_checks, rep->commutativity_failures);
}

void suite_ito(Ctx& ctx) {
  SplitMix64 rng = ctx.rng(61);

  ctx.item("divergence-form",
           "the contracted second-order operator agrees with its divergence "
           "form on flat, model, and seeded polynomial metrics",
           [&](Probe& pr) {
             pr.zero("flat dim 2", laplace_beltrami_residual(
                                       Metric::flat(2), random_poly(rng, 2, 3)));
             pr.zero("flat dim 3", laplace_beltrami_residual(
                                       Metric::flat(3), random_poly(rng, 3, 3)));
             pr.zero("model metric",
                     laplace_beltrami_residual(polar(), random_poly(rng, 2, 3)));
             for (int i = 0; i < 3; ++i) {
               const Metric m = random_diagonal(rng, 2);
               pr.zero("seeded diagonal " + std::to_string(i),
                       laplace_beltrami_residual(m, random_poly(rng, 2, 3)));
             }
             pr.zero("unimodular",
                     laplace_beltrami_residual(unimodular(X1 + X2 * X2),
                                               random_poly(rng, 2, 3)));
           });

  ctx.item("lie-derivative",
           "the drift contraction satisfies the Cartan identity on 1-forms",
           [&](Probe& pr) {
             for (int round = 0; round < 6; ++round) {
               const VectorField w =
                   field2(random_poly(rng, 2, 2), random_poly(rng, 2, 2));
               pr.zero("sample " + std::to_string(round),
                       lie_derivative_residual(
                           w, random_coordinate_form(rng, 2, 1)));
             }
           });

  ctx.item("coordinate-displays",
           "the deformed differential of a coordinate is its differential "
           "plus the drift-and-contraction correction times dt",
           [&](Probe& pr) {
             const Metric m = polar();
             const VectorField v = field2(random_poly(rng, 2, 2, true),
                                          random_poly(rng, 2, 2, true));
             const ClassicalBackend b = ClassicalBackend::ito(m, v);
             const Christoffel gamma = christoffel(m);
             for (int l = 0; l < 2; ++l) {
               Scalar correction = v.comp[l];
               for (int j = 0; j < 2; ++j)
                 for (int k = 0; k < 2; ++k)
                   correction =
                       correction - rat(1, 2) * m.ginv[j][k] * gamma[l][j][k];
               pr.equal("coordinate " + std::to_string(l + 1), ito_dx(l + 1, b),
                        TC{CForm::dx(l + 1), CForm::fn(correction)});
             }
           });

  ctx.item("function-displays",
           "the deformed differential of a function expands through the "
           "coordinate differentials plus the heat correction",
           [&](Probe& pr) {
             const ClassicalBackend backs[] = {
                 ClassicalBackend::ito(polar(),
                                       field2(random_poly(rng, 2, 2, true),
                                              random_poly(rng, 2, 2, true))),
                 ClassicalBackend::ito(unimodular(X1), field2(X2, X1 * TT))};
             for (const ClassicalBackend& back : backs) {
               const Scalar f = random_poly(rng, 2, 3, true);
               TC expect{{}, {}};
               for (int i = 0; i < 2; ++i)
                 expect = expect + f.derivative(cv::x1 + i) * ito_dx(i + 1, back);
               Scalar second = f.derivative(cv::t);
               for (int i = 0; i < 2; ++i)
                 for (int j = 0; j < 2; ++j)
                   second = second + rat(1, 2) * back.metric.ginv[i][j] *
                                         f.derivative(cv::x1 + j)
                                             .derivative(cv::x1 + i);
               expect = expect + TC{{}, CForm::fn(second)};
               pr.equal("sampled function", ito_d(f, back), expect);
             }
           });

  ctx.item("flat-square",
           "on the flat line the square of the coordinate differentiates to "
           "twice the coordinate times dx plus dt",
           [&](Probe& pr) {
             const ClassicalBackend line =
                 ClassicalBackend::ito(Metric::flat(1), zero_field(1));
             const TC got = ito_d(X1 * X1, line);
             pr.equal("space part", got.omega, CForm::dx(1, Scalar(2) * X1));
             pr.equal("time part", got.rho, CForm::fn(Scalar(1)));
             pr.zero("constant", ito_d(rat(7), line));
           });

  ctx.item("product-rule",
           "the deformed differential of a product closes through the "
           "deformed product without remainder",
           [&](Probe& pr) {
             const ClassicalBackend line =
                 ClassicalBackend::ito(Metric::flat(1), zero_field(1));
             const ClassicalBackend curved = ClassicalBackend::ito(
                 polar(), field2(random_poly(rng, 2, 2), random_poly(rng, 2, 2)));
             pr.zero("square on the line", ito_product_residual(X1, X1, line));
             const int rounds = std::max(1, ctx.bound);
             for (int round = 0; round < rounds; ++round) {
               pr.zero("curved sample " + std::to_string(round),
                       ito_product_residual(random_poly(rng, 2, 3, true),
                                            random_poly(rng, 2, 3, true), curved));
               pr.zero("line sample " + std::to_string(round),
                       ito_product_residual(random_poly(rng, 1, 3, true),
                                            random_poly(rng, 1, 3, true), line));
             }
           });

  ctx.item("function-times-differential",
           "multiplying the coordinate differential by a function adds half "
           "its derivative times dt on the flat line",
           [&](Probe& pr) {
             const ClassicalBackend line =
                 ClassicalBackend::ito(Metric::flat(1), zero_field(1));
             const Scalar f = random_poly(rng, 1, 3, true);
             const TC lhs = wedge_alpha(line, TC{CForm::fn(f), {}},
                                        ito_dx(1, line), Scalar(1));
             pr.equal("display", lhs,
                      f * ito_dx(1, line) +
                          TC{{}, CForm::fn(rat(1, 2) * f.derivative(cv::x1))});
           });

  ctx.item("symbolic-weights",
           "at symbolic weights the product of a function and a 1-form picks "
           "up exactly the diffusion defect, independent of order",
           [&](Probe& pr) {
             const ClassicalBackend symbolic(
                 polar(), field2(random_poly(rng, 2, 2), random_poly(rng, 2, 2)),
                 CAL, CBE);
             for (int round = 0; round < 3; ++round) {
               const Scalar g = random_poly(rng, 2, 2, true);
               const CForm eta = random_coordinate_form(rng, 2, 1, true);
               const TC fe{CForm::fn(g), {}};
               const TC he{eta, {}};
               Scalar defect(0);
               for (int mu = 0; mu < 2; ++mu)
                 for (int nu = 0; nu < 2; ++nu)
                   defect = defect + CAL * symbolic.metric.ginv[mu][nu] *
                                         g.derivative(cv::x1 + nu) *
                                         eta.coefficient(1u << mu);
               const TC product = wedge_alpha(symbolic, fe, he, Scalar(1));
               pr.equal("space part " + std::to_string(round), product.omega,
                        wedge(CForm::fn(g), eta));
               pr.equal("time part " + std::to_string(round), product.rho,
                        CForm::fn(defect));
               pr.equal("order swap " + std::to_string(round), product,
                        wedge_alpha(symbolic, he, fe, Scalar(1)));
               pr.equal("drift defect " + std::to_string(round),
                        delta_v(wedge(CForm::fn(g), eta), symbolic.drift),
                        wedge(CForm::fn(g), delta_v(eta, symbolic.drift)));
             }
           });
}

void suite_girsanov(Ctx& ctx) {
  SplitMix64 rng = ctx.rng(83);

  ctx.item("constant-drift",
           "a constant drift on the flat line leaves no reversal residuals",
           [&](Probe& pr) {
             VectorField v;
             v.dim = 1;
             v.comp[0] = rat(3);
             const GirsanovReport rep = girsanov_residuals(Metric::flat(1), v);
             pr.zero("space-time residual", rep.r1);
             pr.zero("curl residual", rep.r2);
             pr.zero("connection remainder", rep.kappa);
           });

  struct Case {
    Metric m;
    VectorField v;
    GirsanovReport rep;
    CForm low;
    Christoffel gamma;
  };
  std::vector<Case> cases;
  const int rounds = std::max(1, ctx.bound);
  for (int round = 0; round < rounds; ++round) {
    const Metric m = round % 3 == 0   ? polar()
                     : round % 3 == 1 ? unimodular(random_poly(rng, 2, 2))
                                      : random_diagonal(rng, 2);
    const VectorField v =
        field2(random_poly(rng, 2, 2, true), random_poly(rng, 2, 2, true));
    cases.push_back(Case{m, v, girsanov_residuals(m, v), lowered_drift(m, v),
                         christoffel(m)});
  }

  ctx.item("curl-identity",
           "the 2-form residual is the exterior derivative of the lowered "
           "drift",
           [&](Probe& pr) {
             for (std::size_t i = 0; i < cases.size(); ++i)
               pr.equal("case " + std::to_string(i), cases[i].rep.r2,
                        d(cases[i].low));
           });

  ctx.item("connection-remainder",
           "the remainder equals its expansion in curl components against "
           "the connection",
           [&](Probe& pr) {
             for (std::size_t i = 0; i < cases.size(); ++i) {
               const Case& cs = cases[i];
               auto dG = [&](int k, int j) {
                 return cs.low.coefficient(1u << j).derivative(cv::x1 + k);
               };
               CForm expansion;
               for (int ii = 0; ii < 2; ++ii) {
                 Scalar ci(0);
                 for (int k = 0; k < 2; ++k)
                   for (int mm = 0; mm < 2; ++mm)
                     for (int nn = 0; nn < 2; ++nn)
                       ci = ci + cs.m.ginv[mm][nn] *
                                     ((dG(ii, k) - dG(k, ii)) * cs.gamma[k][nn][mm] +
                                      (dG(k, mm) - dG(mm, k)) * cs.gamma[k][nn][ii]);
                 expansion.add_term(1u << ii, ci);
               }
               pr.equal("case " + std::to_string(i), cs.rep.kappa, expansion);
             }
           });

  ctx.item("codifferential-split",
           "the contraction of the curl splits into second derivatives of "
           "the lowered drift plus the remainder",
           [&](Probe& pr) {
             for (std::size_t i = 0; i < cases.size(); ++i) {
               const Case& cs = cases[i];
               CForm second;
               for (int k = 0; k < 2; ++k) {
                 Scalar sk(0);
                 for (int mm = 0; mm < 2; ++mm)
                   for (int nn = 0; nn < 2; ++nn)
                     sk = sk + cs.m.ginv[mm][nn] *
                                   (cs.low.coefficient(1u << k)
                                        .derivative(cv::x1 + nn)
                                        .derivative(cv::x1 + mm) -
                                    cs.low.coefficient(1u << mm)
                                        .derivative(cv::x1 + nn)
                                        .derivative(cv::x1 + k));
                 second.add_term(1u << k, sk);
               }
               pr.equal("case " + std::to_string(i),
                        delta_diff(cs.rep.r2, cs.m), second + cs.rep.kappa);
             }
           });

  ctx.item("space-time-identity",
           "the space-time residual equals the negated heat balance plus the "
           "drift contraction of the curl minus half the remainder",
           [&](Probe& pr) {
             for (std::size_t i = 0; i < cases.size(); ++i) {
               const Case& cs = cases[i];
               const CForm oracle = reversal_oracle(cs.m, cs.v, cs.low);
               pr.equal("case " + std::to_string(i), cs.rep.r1,
                        -oracle + rat(1, 2) * delta_v(cs.rep.r2, cs.v) +
                            rat(-1, 2) * cs.rep.kappa);
             }
           });

  ctx.item("gradient-closure",
           "gradient drifts close the curl and kill the connection remainder",
           [&](Probe& pr) {
             for (int round = 0; round < 2; ++round) {
               const Metric m = round == 0 ? polar() : unimodular(X2);
               const Scalar phi = random_poly(rng, 2, 3);
               VectorField v;
               v.dim = 2;
               for (int i = 0; i < 2; ++i) {
                 v.comp[i] = Scalar(0);
                 for (int j = 0; j < 2; ++j)
                   v.comp[i] = v.comp[i] + m.ginv[i][j] * phi.derivative(cv::x1 + j);
               }
               const GirsanovReport rep = girsanov_residuals(m, v);
               pr.zero("curl residual case " + std::to_string(round), rep.r2);
               pr.zero("remainder case " + std::to_string(round), rep.kappa);
               const CForm oracle = reversal_oracle(m, v, lowered_drift(m, v));
               pr.equal("heat balance case " + std::to_string(round), rep.r1,
                        -oracle);
             }
           });
}

void suite_nabla(Ctx& ctx) {
  SplitMix64 rng = ctx.rng(43);

  ctx.item("flat-limit",
           "on the flat metric the deformed derivative of every coordinate "
           "differential vanishes at symbolic weight",
           [&](Probe& pr) {
             const ClassicalBackend flat =
                 ClassicalBackend::diffusion(Metric::flat(2));
             for (int k = 1; k <= 2; ++k)
               pr.zero("coordinate " + std::to_string(k),
                       nabla_alpha(flat, TC{CForm::dx(k), {}}, CAL));
           });

  ctx.item("levi-civita-values",
           "at weight zero the deformed derivative reproduces the connection "
           "values of the model metric",
           [&](Probe& pr) {
             const ClassicalBackend curved = ClassicalBackend::diffusion(polar());
             const TensorPair t1 =
                 nabla_alpha(curved, TC{CForm::dx(1), {}}, Scalar(0));
             pr.equal("radial dx^1 slot", t1.dx[0], TC{});
             pr.equal("radial dx^2 slot", t1.dx[1], TC{CForm::dx(2, X1), {}});
             pr.equal("radial dt slot", t1.dt, TC{});
             const TensorPair t2 =
                 nabla_alpha(curved, TC{CForm::dx(2), {}}, Scalar(0));
             const Scalar inv = Scalar(-1) / X1;
             pr.equal("angular dx^1 slot", t2.dx[0], TC{CForm::dx(2, inv), {}});
             pr.equal("angular dx^2 slot", t2.dx[1], TC{CForm::dx(1, inv), {}});
             pr.equal("angular dt slot", t2.dt, TC{});
           });

  ctx.item("module-relation",
           "the tensor normal form pushes functions across the deformed "
           "product",
           [&](Probe& pr) {
             const ClassicalBackend b =
                 ClassicalBackend::ito(polar(), field2(X2, X1));
             {
               const Scalar f = random_poly(rng, 2, 2, true);
               const TC eta{random_coordinate_form(rng, 2, 1),
                            random_coordinate_form(rng, 2, 0)};
               const TensorPair t =
                   tensor_of(b, Scalar(0), TC{CForm::dx(1, f), {}}, eta);
               pr.equal("plain push dx slot", t.dx[0], Scalar(f) * eta);
               pr.zero("plain push other slot", t.dx[1]);
               pr.zero("plain push dt slot", t.dt);
             }
             for (int round = 0; round < 4; ++round) {
               const Scalar f = random_poly(rng, 2, 2, true);
               const TC eta{random_coordinate_form(rng, 2, 1),
                            random_coordinate_form(rng, 2, 0)};
               const int p = round % 2;
               const TC left = wedge_alpha(b, TC{CForm::dx(p + 1), {}},
                                           TC{CForm::fn(f), {}}, CAL);
               TensorPair expect;
               expect.alpha = CAL;
               expect.dx[p] = wedge_alpha(b, TC{CForm::fn(f), {}}, eta, CAL);
               const TensorPair got = tensor_of(b, CAL, left, eta);
               pr.equal("deformed relation " + std::to_string(round), got,
                        expect);
             }
             for (int round = 0; round < 2; ++round) {
               const Scalar f = random_poly(rng, 2, 2, true);
               const Scalar h = random_poly(rng, 2, 2, true);
               TensorPair t;
               t.alpha = CAL;
               t.dx[0] = TC{random_coordinate_form(rng, 2, 1),
                            random_coordinate_form(rng, 2, 0)};
               t.dx[1] = TC{random_coordinate_form(rng, 2, 1),
                            random_coordinate_form(rng, 2, 0)};
               t.dt = TC{random_coordinate_form(rng, 2, 1),
                         random_coordinate_form(rng, 2, 0)};
               pr.equal("action associativity " + std::to_string(round),
                        left_mult(b, f * h, t), left_mult(b, f, left_mult(b, h, t)));
             }
           });

  ctx.item("left-leibniz",
           "the deformed derivative satisfies the left Leibniz rule against "
           "the deformed product",
           [&](Probe& pr) {
             const ClassicalBackend backends[] = {
                 ClassicalBackend::diffusion(polar()),
                 ClassicalBackend(unimodular(X2), field2(X1, X2), Scalar(1),
                                  CBE)};
             const int rounds = std::max(1, ctx.bound);
             for (const ClassicalBackend& b : backends)
               for (int round = 0; round < rounds; ++round) {
                 const Scalar f = random_poly(rng, 2, 2, true);
                 const TC xi{random_coordinate_form(rng, 2, 1),
                             random_coordinate_form(rng, 2, 0)};
                 const TC ixi = iso(b, xi, CAL);
                 const TC fe{CForm::fn(f), {}};
                 const TensorPair lhs =
                     nabla_alpha(b, wedge_alpha(b, fe, ixi, CAL), CAL);
                 const TensorPair rhs =
                     tensor_of(b, CAL, d_alpha(b, fe, CAL), ixi) +
                     left_mult(b, f, nabla_alpha(b, ixi, CAL));
                 pr.equal("sample " + std::to_string(round), lhs, rhs);
               }
           });

  ctx.item("weight-linearity",
           "the weight-linear part of the deformed derivative matches the "
           "independent connection expansion",
           [&](Probe& pr) {
             const ClassicalBackend backends[] = {
                 ClassicalBackend::diffusion(Metric::flat(2)),
                 ClassicalBackend::diffusion(polar())};
             for (const ClassicalBackend& b : backends) {
               const Metric& m = b.metric;
               const Christoffel gamma = christoffel(m);
               for (int k = 0; k < 2; ++k) {
                 const TC dxk{CForm::dx(k + 1), {}};
                 auto at = [&](long w) { return nabla_alpha(b, dxk, rat(w)); };
                 const TensorPair t1 = at(1), tm1 = at(-1), t2 = at(2),
                                  tm2 = at(-2);
                 auto lin = [&](auto&& slot) {
                   return rat(1, 12) *
                          (Scalar(8) * (slot(t1) + Scalar(-1) * slot(tm1)) +
                           Scalar(-1) * (slot(t2) + Scalar(-1) * slot(tm2)));
                 };
                 for (int p = 0; p < 2; ++p) {
                   Scalar expect(0);
                   for (int i = 0; i < 2; ++i)
                     for (int j = 0; j < 2; ++j) {
                       expect = expect + m.ginv[i][j] *
                                             gamma[k][j][i].derivative(cv::x1 + p);
                       for (int s = 0; s < 2; ++s)
                         expect = expect +
                                  m.ginv[i][j] *
                                      (gamma[k][p][s] * gamma[s][j][i] -
                                       gamma[s][j][p] * gamma[k][s][i] -
                                       gamma[s][i][p] * gamma[k][j][s]);
                     }
                   for (int qd = 0; qd < 2; ++qd)
                     for (int nu = 0; nu < 2; ++nu)
                       expect = expect - m.ginv[qd][nu] *
                                             gamma[k][p][qd].derivative(cv::x1 + nu);
                   const TC got =
                       lin([&](const TensorPair& t) { return t.dx[p]; });
                   pr.equal("coordinate " + std::to_string(k + 1) + " dx^" +
                                std::to_string(p + 1) + " slot",
                            got, TC{{}, CForm::fn(expect)});
                 }
                 CForm dtslot;
                 for (int qd = 0; qd < 2; ++qd) {
                   Scalar cq(0);
                   for (int p = 0; p < 2; ++p) {
                     Scalar trace(0);
                     for (int i = 0; i < 2; ++i)
                       for (int j = 0; j < 2; ++j)
                         trace = trace + m.ginv[i][j] * gamma[p][i][j];
                     cq = cq + trace * gamma[k][p][qd];
                   }
                   dtslot.add_term(1u << qd, cq);
                 }
                 const TC got = lin([&](const TensorPair& t) { return t.dt; });
                 pr.equal("coordinate " + std::to_string(k + 1) + " dt slot",
                          got, TC{dtslot, {}});
               }
             }
           });
}

// ---------------------------------------------------------------------------
// Registry and report rendering.

struct SuiteDef {
  const char* name;
  int default_bound;
  bool sphere;
  void (*fn)(Ctx&);
};

const SuiteDef kSuites[] = {
    {"qsl2-relations", 3, true, suite_qsl2},
    {"dga-axioms-sphere", 100, true, suite_axioms_sphere},
    {"dga-axioms-classical", 100, false, suite_axioms_classical},
    {"d-prop", 5, true, suite_d_prop},
    {"delta-props", 4, true, suite_delta_props},
    {"laplace-props", 4, true, suite_laplace_props},
    {"eigen-0", 4, true, suite_eigen0},
    {"eigen-1", 3, true, suite_eigen1},
    {"eigen-2", 4, true, suite_eigen2},
    {"harmonic", 4, true, suite_harmonic},
    {"hodge-double", 4, true, suite_hodge_double},
    {"hodge-codiff", 4, true, suite_hodge_codiff},
    {"hodge-hermitian", 3, true, suite_hodge_hermitian},
    {"ito", 4, false, suite_ito},
    {"girsanov", 3, false, suite_girsanov},
    {"nabla-alpha", 3, false, suite_nabla},
};

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& it) {
    return it.status == "exact-zero";
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& def : kSuites) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  const SuiteDef* def = nullptr;
  for (const SuiteDef& cand : kSuites)
    if (name == cand.name) def = &cand;
  if (!def) throw std::invalid_argument("unknown suite '" + name + "'");
  if (opt.q_value && opt.q_value->is_zero())
    throw std::domain_error("q specialization must be invertible");

  SuiteReport rep;
  rep.suite = name;
  rep.seed = opt.seed;
  rep.bound = opt.bound > 0 ? opt.bound : def->default_bound;

  const auto start = std::chrono::steady_clock::now();
  Ctx ctx{rep, def->sphere, def->sphere ? opt.q_value : std::nullopt, rep.bound,
          rep.seed};
  try {
    def->fn(ctx);
  } catch (const std::exception& e) {
    rep.items.push_back(
        SuiteItem{"internal", "the suite body runs to completion", "error",
                  e.what(), 0});
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::string to_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite: " << rep.suite << "\n";
  os << "seed: " << rep.seed << "\n";
  os << "bound: " << rep.bound << "\n";
  long total = 0;
  for (const SuiteItem& it : rep.items) {
    total += it.checks;
    os << "  [" << it.status << "] " << it.id << ": " << it.statement << " ("
       << it.checks << " checks)\n";
    if (!it.residual.empty())
      os << "      " << (it.status == "error" ? "error: " : "residual: ")
         << it.residual << "\n";
  }
  os << "result: " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.items.size()
     << " items, " << total << " checks)\n";
  os << "wall-ms: " << rep.wall_ms << "\n";
  return os.str();
}

std::string to_json(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["bound"] = rep.bound;
  j["pass"] = rep.pass();
  j["items"] = nlohmann::ordered_json::array();
  for (const SuiteItem& it : rep.items) {
    nlohmann::ordered_json ji;
    ji["id"] = it.id;
    ji["statement"] = it.statement;
    ji["status"] = it.status;
    ji["residual"] = it.residual;
    ji["checks"] = it.checks;
    j["items"].push_back(std::move(ji));
  }
  j["wall-ms"] = rep.wall_ms;
  return j.dump(2) + "\n";
}

}  // namespace defcal
