#pragma once
// Laplacian on sphere forms.  The codifferential contracts the covariant
// derivative against the metric pairing (weights alpha, beta on 1-forms;
// gamma, eps fix the interior product used on 2-forms), and the Laplacian is
// the anticommutator delta.d + d.delta.  Also here: closed-form eigenform
// generators for all degrees and exact harmonic kernels on bounded monomial
// spans.

#include <string>
#include <vector>

#include "defcal/sphere_forms.hpp"

namespace defcal {

// Metric data.  Symbolic by default; `simplified` pins the interior-product
// constants to gamma = q^2, eps = q^-4 while keeping alpha, beta free.
struct MetricParams {
  Scalar alpha, beta, gamma, eps;

  static MetricParams symbolic();
  static MetricParams simplified();
};

// Codifferential: degree 0 components map to zero, degree 1 components
// contract nabla, degree 2 components go through the interior product.
SphereForm delta(const SphereForm& x, const MetricParams& par);

// delta(d x) + d(delta x).
SphereForm laplacian(const SphereForm& x, const MetricParams& par);

// An exact eigenvector of the Laplacian together with its eigenvalue.
struct EigenForm {
  std::string family;
  int n = 0;  // family index (word exponent); fixed for some families
  int k = 0;  // summation bound of the q^2-binomial sum in x = b c
  SphereForm form;
  Scalar eigenvalue;
};

// Families and admissible first index:
//   degree 0: "fn-a" (n >= 1), "fn-d" (n >= 1), "fn-x" (n = 0);
//   degree 1: "plus-a" (n >= 1), "minus-a" (n >= 2), "plus-d" (n >= 2),
//             "minus-d" (n >= 1), "plus-b2"/"minus-c2" (n = 0),
//             "plus-db"/"minus-ac" (n = 1);
//   degree 2: "two-a" (n >= 1), "two-d" (n >= 1), "two-x" (n = 0).
// Throws std::invalid_argument for unknown names and std::domain_error for
// indices outside the family range.
EigenForm eigenform(const std::string& family, int n, int k,
                    const MetricParams& par);

// laplacian(ef.form) - ef.eigenvalue * ef.form.
SphereForm eigen_residual(const EigenForm& ef, const MetricParams& par);
bool verify_eigen(const EigenForm& ef, const MetricParams& par);

// Grade-valid monomial forms of one degree with all exponents <= bound, in a
// fixed deterministic order.
std::vector<SphereForm> graded_monomial_basis(int degree, int bound);

// Exact kernel of the Laplacian restricted to the span of
// graded_monomial_basis(degree, bound), as a list of basis forms with leading
// coefficient one.
std::vector<SphereForm> harmonic_kernel(int degree, int bound,
                                        const MetricParams& par);

// Right-hand side of the diffusion equation: -alpha * laplacian(x).
SphereForm heat_step_residual(const SphereForm& x, const MetricParams& par);

}  // namespace defcal
