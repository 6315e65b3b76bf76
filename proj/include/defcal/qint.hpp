#pragma once
// qint.hpp — q-deformed integers and Gaussian binomials.
//
// Convention: [n] means [n]_{q^2} = 1 + q^2 + ... + q^{2(n-1)}, the version
// the sphere operators are expressed in.  Binomials are Gaussian in q^2.

#include "defcal/scalar.hpp"

namespace defcal {

/// q^k as a scalar (k may be negative).
inline Scalar qpow(long k) { return Scalar::variable(sv::q, 1).pow(k); }

/// [n]_{q^2}; extended to negative n by [-n] = -q^{-2n}[n].
inline Scalar qint(int n) {
  if (n < 0) return -qpow(2L * n) * qint(-n);
  Scalar s(0);
  for (int k = 0; k < n; ++k) s += qpow(2L * k);
  return s;
}

/// Gaussian binomial in q^2 via the Pascal recurrence
///   [n,k] = q^{2k} [n-1,k] + [n-1,k-1].
inline Scalar qbinom(int n, int k) {
  if (k < 0 || k > n || n < 0) return Scalar(0);
  if (k == 0 || k == n) return Scalar(1);
  return qpow(2L * k) * qbinom(n - 1, k) + qbinom(n - 1, k - 1);
}

}  // namespace defcal
