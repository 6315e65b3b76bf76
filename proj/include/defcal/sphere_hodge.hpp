#pragma once
// Antilinear duality operator on sphere forms, the top-degree integral, the
// sesquilinear pairing, and the solver that matches the duality constants to
// the codifferential.

#include "defcal/sphere_laplace.hpp"

namespace defcal {

// Component weights of the duality operator, plus the matched contraction
// constants (filled by solve_constants; meaningful whenever the duality and
// the codifferential are used together).
struct HodgeConstants {
  Scalar K, L, M, N;
  MetricParams params;
};

// Duality:  f -> N e+^e- f*,  e+ f -> K e- f*,  e- f -> M e+ f*,
// e+^e- f -> -q^-2 L f*.  Conjugate-linear in scalars.
SphereForm hodge(const SphereForm& x, const HodgeConstants& c);

// Inverse duality: (-1)^{j(2-j)} times the duality on each degree-j part
// (a two-sided inverse whenever the double-duality identity holds).
SphereForm hodge_inv(const SphereForm& x, const HodgeConstants& c);

// Integral of a 2-form: (bc)^p e+^e- integrates to (-q)^p/[p+1]; every word
// carrying a or d letters or imbalanced b/c powers integrates to zero.
// Throws std::domain_error on nonzero lower-degree components.
Scalar integrate(const SphereForm& x);

// <eta, xi> = i * integrate(eta ^ hodge(xi)).  Inputs must be homogeneous of
// equal degree.  The factor i makes the pairing Hermitian when K, L, M, N are
// purely imaginary, with diagonal values in the real rationals.
Scalar inner(const SphereForm& eta, const SphereForm& xi,
             const HodgeConstants& c);

// Double duality equals (-1)^{k(2-k)} on every monomial k-form with
// exponents <= bound.
bool check_double_hodge(const HodgeConstants& c, int bound);

// (-1)^n hodge(delta(xi)) equals d(hodge(xi)) on every monomial form of
// degree n <= 2 with exponents <= bound, with the codifferential taken at
// `par`.
bool check_codifferential(const HodgeConstants& c, const MetricParams& par,
                          int bound);

// From nonzero purely imaginary K, L: M = 1/K, N = q^2/L, and the matched
// contraction constants gamma = q^2, eps = q^-4, alpha = K L q^3,
// beta = -(L/K) q^-5.  Throws std::domain_error otherwise.
HodgeConstants solve_constants(const Scalar& K, const Scalar& L);

}  // namespace defcal
