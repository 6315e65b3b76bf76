#include "defcal/classical_backend.hpp"

#include <stdexcept>

namespace defcal {

// ---------------------------------------------------------------------------
// Backend
// ---------------------------------------------------------------------------

ClassicalBackend::ClassicalBackend(Metric m, VectorField v, Scalar wdiff,
                                   Scalar wdrift)
    : metric(std::move(m)),
      drift(std::move(v)),
      diff_weight(std::move(wdiff)),
      drift_weight(std::move(wdrift)) {
  if (drift.dim != metric.dim)
    throw std::invalid_argument("backend: drift dimension does not match metric");
}

ClassicalBackend ClassicalBackend::ito(Metric m, VectorField v) {
  return ClassicalBackend(std::move(m), std::move(v), Scalar::rational(1, 2),
                          Scalar(1));
}

ClassicalBackend ClassicalBackend::diffusion(Metric m) {
  const int n = m.dim;
  return ClassicalBackend(std::move(m), zero_field(n), Scalar(1), Scalar(0));
}

CForm ClassicalBackend::delta(const CForm& x) const {
  CForm out;
  if (!diff_weight.is_zero()) out += diff_weight * delta_diff(x, metric);
  if (!drift_weight.is_zero()) out += drift_weight * delta_v(x, drift);
  return out;
}

VectorField zero_field(int dim) {
  VectorField v;
  v.dim = dim;
  return v;
}

// ---------------------------------------------------------------------------
// Stochastic-differential displays
// ---------------------------------------------------------------------------

Timed<ClassicalBackend> ito_d(const Scalar& f, const ClassicalBackend& b) {
  return d_alpha(b, Timed<ClassicalBackend>{CForm::fn(f), {}}, Scalar(1));
}

Timed<ClassicalBackend> ito_dx(int l, const ClassicalBackend& b) {
  if (l < 1 || l > b.metric.dim)
    throw std::invalid_argument("ito_dx: index out of range");
  return ito_d(Scalar::variable(cv::x1 + (l - 1)), b);
}

Timed<ClassicalBackend> ito_product_residual(const Scalar& f, const Scalar& h,
                                             const ClassicalBackend& b) {
  Scalar cross(0);
  for (int i = 0; i < b.metric.dim; ++i)
    for (int k = 0; k < b.metric.dim; ++k)
      cross = cross + b.metric.ginv[i][k] * f.derivative(cv::x1 + i) *
                          h.derivative(cv::x1 + k);
  cross = Scalar(2) * b.diff_weight * cross;
  return ito_d(f * h, b) + Scalar(-1) * (f * ito_d(h, b)) +
         Scalar(-1) * (h * ito_d(f, b)) +
         Scalar(-1) * Timed<ClassicalBackend>{{}, CForm::fn(cross)};
}

// ---------------------------------------------------------------------------
// Drift reversal
// ---------------------------------------------------------------------------

GirsanovReport girsanov_residuals(const Metric& m, const VectorField& v) {
  VectorField reversed = v;
  for (int i = 0; i < v.dim; ++i) reversed.comp[i] = Scalar(-1) * v.comp[i];
  const ClassicalBackend b = ClassicalBackend::ito(m, reversed);

  // G_i = g_{ij} v^j, built from the original drift.
  std::array<Scalar, 3> big_g{Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      big_g[i] = big_g[i] + m.g[i][j] * v.comp[j];

  Scalar kinetic(0);
  for (int i = 0; i < m.dim; ++i)
    kinetic = kinetic + Scalar::rational(1, 2) * big_g[i] * v.comp[i];

  Timed<ClassicalBackend> xi{{}, CForm::fn(kinetic)};
  for (int i = 0; i < m.dim; ++i) xi = xi + big_g[i] * ito_dx(i + 1, b);

  const Timed<ClassicalBackend> diff = d_alpha(b, xi, Scalar(1));

  GirsanovReport rep;
  rep.r2 = diff.omega;
  rep.r1 = diff.rho;

  // The mixed connection block, straight from its definition: contract
  // g^{mn} d/dx^m into dG_k/dx^i nabla_n(dx^k ^ dx^i).
  const Christoffel gamma = christoffel(m);
  for (int n = 0; n < m.dim; ++n) {
    CForm block;
    for (int k = 0; k < m.dim; ++k)
      for (int i = 0; i < m.dim; ++i) {
        const Scalar w = big_g[i].derivative(cv::x1 + k);
        if (w.is_zero()) continue;
        for (int l = 0; l < m.dim; ++l) {
          block += wedge(CForm::dx(l + 1, Scalar(-1) * w * gamma[k][n][l]),
                         CForm::dx(i + 1));
          block += wedge(CForm::dx(l + 1, w * gamma[i][n][l]), CForm::dx(k + 1));
        }
      }
    for (int mu = 0; mu < m.dim; ++mu) {
      if (m.ginv[mu][n].is_zero()) continue;
      rep.kappa += m.ginv[mu][n] * interior(mu + 1, block);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor square
// ---------------------------------------------------------------------------

TensorPair operator+(TensorPair x, const TensorPair& y) {
  if (!(x.alpha == y.alpha))
    throw std::invalid_argument("tensor sum: mismatched deformation tags");
  for (int p = 0; p < 3; ++p) x.dx[p] = x.dx[p] + y.dx[p];
  x.dt = x.dt + y.dt;
  return x;
}

TensorPair operator*(const Scalar& c, TensorPair x) {
  for (int p = 0; p < 3; ++p) x.dx[p] = c * x.dx[p];
  x.dt = c * x.dt;
  return x;
}

namespace {

// Splits c dx^p off the left factor and rewrites it as c ^_alpha dx^p minus
// the defect, so the coefficient can jump the tensor sign.  Returns the
// defect function picked up in front of dt.
Scalar push_correction(const ClassicalBackend& b, const Scalar& c, int p,
                       const Scalar& alpha) {
  const Timed<ClassicalBackend> w =
      wedge_alpha(b, Timed<ClassicalBackend>{CForm::fn(c), {}},
                  Timed<ClassicalBackend>{CForm::dx(p + 1), {}}, alpha);
  return w.rho.coefficient(0u);
}

}  // namespace

TensorPair tensor_of(const ClassicalBackend& b, const Scalar& alpha,
                     const Timed<ClassicalBackend>& left,
                     const Timed<ClassicalBackend>& right) {
  if (!left.omega.homogeneous(1) || !left.rho.homogeneous(0))
    throw std::invalid_argument(
        "tensor_of: left factor must be a 1-form plus a function times dt");
  TensorPair out;
  out.alpha = alpha;
  Scalar dt_coeff = left.rho.coefficient(0u);
  for (int p = 0; p < b.metric.dim; ++p) {
    const Scalar c = left.omega.coefficient(1u << p);
    if (c.is_zero()) continue;
    out.dx[p] = wedge_alpha(b, Timed<ClassicalBackend>{CForm::fn(c), {}}, right,
                            alpha);
    dt_coeff = dt_coeff - push_correction(b, c, p, alpha);
  }
  if (!dt_coeff.is_zero())
    out.dt = wedge_alpha(b, Timed<ClassicalBackend>{CForm::fn(dt_coeff), {}},
                         right, alpha);
  return out;
}

// Left action of a function on a pair in normal form.  Acting on a basis
// slot goes through the deformed product, f (x)-> (f ^ dx^p) (x) eta, and
// re-normalising that slot costs exactly the dt correction the deformed
// product just produced, so the two cancel and the action is slot-wise.
TensorPair left_mult(const ClassicalBackend& b, const Scalar& f,
                     const TensorPair& t) {
  const Timed<ClassicalBackend> fe{CForm::fn(f), {}};
  TensorPair out;
  out.alpha = t.alpha;
  out.dt = wedge_alpha(b, fe, t.dt, t.alpha);
  for (int p = 0; p < b.metric.dim; ++p)
    out.dx[p] = wedge_alpha(b, fe, t.dx[p], t.alpha);
  return out;
}

TensorPair nabla_alpha(const ClassicalBackend& b,
                       const Timed<ClassicalBackend>& x, const Scalar& alpha) {
  const Timed<ClassicalBackend> y = iso_inv(b, x, alpha);
  if (!y.omega.homogeneous(1) || !y.rho.homogeneous(0))
    throw std::invalid_argument(
        "nabla_alpha: input must untwist to a 1-form plus a function times dt");

  // The undeformed derivative: the Levi-Civita leg along each coordinate
  // and the time leg, with dt parallel.
  std::array<Timed<ClassicalBackend>, 3> leg;
  for (int p = 0; p < b.metric.dim; ++p)
    leg[p] = Timed<ClassicalBackend>{covariant_derivative(y.omega, p + 1, b.metric),
                                     covariant_derivative(y.rho, p + 1, b.metric)};
  const Timed<ClassicalBackend> tleg{time_derivative(y.omega),
                                     time_derivative(y.rho)};

  // Twist both legs; the left twist turns dx^p into dx^p + alpha delta(dx^p) dt
  // and the correction is pushed across the tensor sign.
  TensorPair out;
  out.alpha = alpha;
  out.dt = iso(b, tleg, alpha);
  for (int p = 0; p < b.metric.dim; ++p) {
    const Timed<ClassicalBackend> twisted = iso(b, leg[p], alpha);
    out.dx[p] = twisted;
    const Scalar s = alpha * b.delta(CForm::dx(p + 1)).coefficient(0u);
    if (s.is_zero()) continue;
    out.dt = out.dt +
             wedge_alpha(b, Timed<ClassicalBackend>{CForm::fn(s), {}}, twisted,
                         alpha);
  }
  return out;
}

std::string to_string(const TensorPair& t) {
  auto timed = [](const Timed<ClassicalBackend>& x) {
    std::string s = to_string(x.omega);
    if (!x.rho.is_zero()) s += " + (" + to_string(x.rho) + ") dt";
    return s;
  };
  std::string s;
  for (int p = 0; p < 3; ++p) {
    if (t.dx[p].omega.is_zero() && t.dx[p].rho.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "dx" + std::to_string(p + 1) + " (x) [" + timed(t.dx[p]) + "]";
  }
  if (!(t.dt.omega.is_zero() && t.dt.rho.is_zero())) {
    if (!s.empty()) s += " + ";
    s += "dt (x) [" + timed(t.dt) + "]";
  }
  return s.empty() ? "0" : s;
}

}  // namespace defcal
