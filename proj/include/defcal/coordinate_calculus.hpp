// Exact exterior calculus on up to three coordinates, with metric geometry:
// Christoffel symbols, the diffusion codifferential (metric contraction of
// the covariant derivative) and the drift codifferential (interior product
// with a vector field), plus the square-root-free divergence-form Laplacian
// comparison and the Lie-derivative identity.
#pragma once

#include <map>

#include "defcal/scalar.hpp"

namespace defcal {

// A sum of exterior monomials c * dx^{i1} ^ ... ^ dx^{ik} with i1 < ... < ik,
// keyed by the bitmask {i1,...,ik} (bit j <-> dx^{j+1}).  Antisymmetry is
// structural: only sorted tuples are stored and wedge tracks the permutation
// sign.  Coefficients may depend on all coordinates and on time.
class CForm {
 public:
  CForm() = default;

  static CForm fn(const Scalar& f);                      // degree 0
  static CForm dx(int i, const Scalar& c = Scalar(1));   // c * dx^i, 1-based
  static CForm monomial(unsigned mask, const Scalar& c);

  const std::map<unsigned, Scalar>& terms() const noexcept { return _t; }
  bool is_zero() const { return _t.empty(); }
  // All stored terms have the given degree (true for the zero form).
  bool homogeneous(int degree) const;
  CForm component(int degree) const;
  Scalar coefficient(unsigned mask) const;

  void add_term(unsigned mask, const Scalar& c);

  CForm& operator+=(const CForm& y);
  CForm& operator-=(const CForm& y);
  CForm operator-() const;
  friend CForm operator+(CForm x, const CForm& y) { return x += y; }
  friend CForm operator-(CForm x, const CForm& y) { return x -= y; }
  friend CForm operator*(const Scalar& c, CForm x);

  bool operator==(const CForm&) const = default;

 private:
  std::map<unsigned, Scalar> _t;
};

CForm wedge(const CForm& x, const CForm& y);
// Exterior derivative in the space variables only; time is inert.
CForm d(const CForm& x);
// Interior product with the coordinate vector field d/dx^i (1-based): the
// dx^i factor is permuted to the front with its sign and cancelled.
CForm interior(int i, const CForm& x);
// Formal derivative of every coefficient with respect to time.
CForm time_derivative(const CForm& x);

std::string to_string(const CForm& x);

// Metric with a user-supplied exact inverse; the symmetry of g and
// g * g_inv = id are verified at construction (throws std::invalid_argument).
struct Metric {
  int dim = 0;
  Scalar g[3][3];
  Scalar ginv[3][3];

  Metric(int dimension, const std::vector<std::vector<Scalar>>& gm,
         const std::vector<std::vector<Scalar>>& gi);
  static Metric flat(int dimension);
};

struct VectorField {
  int dim = 0;
  Scalar comp[3];
};

// kappa[k][nu][mu] = Gamma^k_{nu mu}, symmetric in the lower indices.
using Christoffel = std::array<std::array<std::array<Scalar, 3>, 3>, 3>;
Christoffel christoffel(const Metric& m);

// Levi-Civita covariant derivative along d/dx^nu (1-based), acting on forms
// through nabla_nu(dx^k) = -Gamma^k_{nu l} dx^l and the Leibniz rule.
CForm covariant_derivative(const CForm& x, int nu, const Metric& m);

// delta_diff = g^{mu nu} d/dx^mu _| nabla_nu, degree -1, zero on functions.
CForm delta_diff(const CForm& x, const Metric& m);
// delta_v = v _| x.
CForm delta_v(const CForm& x, const VectorField& v);

// Residual of delta_diff(d f) against the divergence-form Laplacian, with
// the determinant handled through d log det g = trace(g^{-1} dg) so that no
// square roots appear.  Zero exactly when the two Laplacians agree.
Scalar laplace_beltrami_residual(const Metric& m, const Scalar& f);

// Residual of (d delta_v + delta_v d)(eta) against the Lie derivative
// (dv^a/dx^b) eta_a dx^b + v^a (d eta_b/dx^a) dx^b on a 1-form eta.
CForm lie_derivative_residual(const VectorField& v, const CForm& eta);

}  // namespace defcal
