// Coordinate calculus packaged as a deformation backend: the homotopy is a
// weighted combination of the diffusion codifferential and a drift interior
// product, which specializes to the stochastic-calculus product rules at
// weights (1/2, 1).  Also provides the drift-reversal closedness residuals
// and the deformed covariant derivative on the tensor square.
#pragma once

#include <array>

#include "defcal/coordinate_calculus.hpp"
#include "defcal/deform.hpp"

namespace defcal {

struct ClassicalBackend {
  using Element = CForm;

  Metric metric;
  VectorField drift;
  Scalar diff_weight;
  Scalar drift_weight;

  ClassicalBackend(Metric m, VectorField v, Scalar wdiff, Scalar wdrift);
  // The weights of the stochastic-integral convention: (1/2, 1).
  static ClassicalBackend ito(Metric m, VectorField v);
  // Pure diffusion at unit weight, no drift.
  static ClassicalBackend diffusion(Metric m);

  int top_degree() const { return metric.dim; }
  CForm component(const CForm& x, int n) const { return x.component(n); }
  CForm d(const CForm& x) const { return defcal::d(x); }
  CForm delta(const CForm& x) const;
  CForm wedge(const CForm& x, const CForm& y) const { return defcal::wedge(x, y); }
  CForm time_derivative(const CForm& x) const { return defcal::time_derivative(x); }
  bool is_zero(const CForm& x) const { return x.is_zero(); }
};

VectorField zero_field(int dim);

// Deformed differential of a function under the backend's weights.
Timed<ClassicalBackend> ito_d(const Scalar& f, const ClassicalBackend& b);
// Deformed differential of the coordinate function x^l (1-based).
Timed<ClassicalBackend> ito_dx(int l, const ClassicalBackend& b);
// Residual of the product display: the deformed differential of f h minus
// f, h times the deformed differentials and the diffusion cross term
// 2 w_diff g^{ik} (df/dx^i)(dh/dx^k) dt.
Timed<ClassicalBackend> ito_product_residual(const Scalar& f, const Scalar& h,
                                             const ClassicalBackend& b);

// Closedness residuals of the canonical drift 1-form under drift reversal:
// xi = g_{ij} v^j dx_I x^i + (1/2) g_{ij} v^i v^j dt with the backend built
// on -v.  r2 is the space-space part of the deformed differential of xi,
// r1 its space-time part, and kappa is the metric contraction of the mixed
// connection block.  kappa expands through the curl components of the
// lowered drift, so it vanishes exactly when r2 does (gradient drifts).
struct GirsanovReport {
  CForm r2;
  CForm r1;
  CForm kappa;
};
GirsanovReport girsanov_residuals(const Metric& m, const VectorField& v);

// An element of the tensor square over the deformed module relation, in the
// normal form sum_p dx^p (x) eta_p + dt (x) eta_t with every coefficient
// pushed into the right factors.  The deformation value is carried as a tag
// and participates in equality.
struct TensorPair {
  std::array<Timed<ClassicalBackend>, 3> dx{};
  Timed<ClassicalBackend> dt{};
  Scalar alpha{0};

  bool operator==(const TensorPair&) const = default;
};

// Slot-wise sum; both sides must carry the same tag.
TensorPair operator+(TensorPair x, const TensorPair& y);
// Slot-wise scale: valid for constants only (a function would have to be
// pushed through the left leg; use left_mult for that).
TensorPair operator*(const Scalar& c, TensorPair x);

// Normal form of left (x) right for a left factor of the shape
// (1-form) + (0-form) dt, pushing the left coefficients across the tensor
// sign through the deformed product.
TensorPair tensor_of(const ClassicalBackend& b, const Scalar& alpha,
                     const Timed<ClassicalBackend>& left,
                     const Timed<ClassicalBackend>& right);

// Left action of a function through the deformed module relation.
TensorPair left_mult(const ClassicalBackend& b, const Scalar& f, const TensorPair& t);

// The deformed covariant derivative: conjugate the time extension of the
// Levi-Civita derivative by the twist, (I (x) I) nabla_0 I^{-1}.  The input
// must be a (1-form) + (0-form) dt element after untwisting.
TensorPair nabla_alpha(const ClassicalBackend& b, const Timed<ClassicalBackend>& x,
                       const Scalar& alpha);

std::string to_string(const TensorPair& t);

}  // namespace defcal
