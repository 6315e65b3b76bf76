#pragma once
// scalar.hpp
//
// Exact scalar arithmetic for the deformation calculus:
//   GaussQ  - Gaussian rationals a + b*i over GMP rationals
//   Poly    - sparse multivariate polynomials (fixed variable arena of 8)
//   Scalar  - reduced rational functions num/den with a canonical form
//
// All arithmetic is exact; there is no floating point anywhere below here.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defcal {

inline constexpr int kMaxVars = 8;

// ---------------------------------------------------------------------------
// GaussQ: exact complex rationals
// ---------------------------------------------------------------------------

class GaussQ {
public:
  GaussQ() = default;
  GaussQ(long n) : _re(n) {}  // NOLINT: implicit integer literals are handy
  GaussQ(const mpq_class& re) : _re(re) {}
  GaussQ(mpq_class re, mpq_class im) : _re(std::move(re)), _im(std::move(im)) {}

  static GaussQ imag_unit() { return GaussQ(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return _re; }
  const mpq_class& im() const noexcept { return _im; }

  bool is_zero() const { return _re == 0 && _im == 0; }
  bool is_real() const { return _im == 0; }
  GaussQ conj() const { return GaussQ(_re, mpq_class(-_im)); }

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator/=(const GaussQ& o);  // throws std::domain_error on zero

  GaussQ operator-() const { return GaussQ(mpq_class(-_re), mpq_class(-_im)); }

  friend GaussQ operator+(GaussQ x, const GaussQ& y) { return x += y; }
  friend GaussQ operator-(GaussQ x, const GaussQ& y) { return x -= y; }
  friend GaussQ operator*(GaussQ x, const GaussQ& y) { return x *= y; }
  friend GaussQ operator/(GaussQ x, const GaussQ& y) { return x /= y; }

  friend bool operator==(const GaussQ& x, const GaussQ& y) {
    return x._re == y._re && x._im == y._im;
  }

private:
  mpq_class _re{0};
  mpq_class _im{0};
};

// ---------------------------------------------------------------------------
// Mono: exponent vectors, lexicographic order (variable 0 strongest)
// ---------------------------------------------------------------------------

struct Mono {
  std::array<int16_t, kMaxVars> e{};

  friend auto operator<=>(const Mono&, const Mono&) = default;

  bool is_unit() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }

  Mono operator*(const Mono& o) const {
    Mono r;
    for (int v = 0; v < kMaxVars; ++v) r.e[v] = int16_t(e[v] + o.e[v]);
    return r;
  }

  // Componentwise divisibility / quotient; quotient assumes divisibility.
  bool divides(const Mono& o) const {
    for (int v = 0; v < kMaxVars; ++v)
      if (e[v] > o.e[v]) return false;
    return true;
  }
  Mono quotient_into(const Mono& o) const {
    Mono r;
    for (int v = 0; v < kMaxVars; ++v) r.e[v] = int16_t(o.e[v] - e[v]);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

class Poly {
public:
  using Terms = std::map<Mono, GaussQ>;

  Poly() = default;
  explicit Poly(GaussQ c) { add_term(Mono{}, std::move(c)); }

  static Poly constant(GaussQ c) { return Poly(std::move(c)); }
  static Poly variable(int v, int power = 1);  // power must be >= 0

  const Terms& terms() const noexcept { return _t; }
  bool is_zero() const { return _t.empty(); }
  bool is_constant() const { return _t.empty() || (_t.size() == 1 && _t.begin()->first.is_unit()); }
  bool is_monomial() const { return _t.size() == 1; }
  bool is_one() const;

  // Accumulate c on monomial m, erasing the entry when it cancels to zero.
  void add_term(const Mono& m, GaussQ c);

  int degree(int v) const;
  bool depends_on(int v) const;
  Poly derivative(int v) const;
  Poly conj() const;  // conjugate coefficients (variables are real symbols)

  // Leading data w.r.t. the global lexicographic order; zero poly yields 0/unit.
  const GaussQ& leading_coeff() const;
  const Mono& leading_mono() const;

  // Polynomial coefficient of v^k (the result does not involve v).
  Poly coeff_of(int v, int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);

  Poly& scale(const GaussQ& c);       // multiply every coefficient by c
  Poly& shift_mono(const Mono& m);    // multiply by a monomial

  friend bool operator==(const Poly& x, const Poly& y) { return x._t == y._t; }

  // Exact division; throws std::domain_error if b is zero or does not divide a.
  static Poly divide_exact(const Poly& a, const Poly& b);

  // Monic (leading coefficient 1) gcd; gcd(0,0) = 0, gcd with a nonzero
  // constant is 1.  Multivariate via content/primitive-part recursion over a
  // primitive pseudo-remainder sequence.
  static Poly gcd(const Poly& a, const Poly& b);

private:
  Terms _t;
};

// ---------------------------------------------------------------------------
// Scalar: rational functions in canonical reduced form
// ---------------------------------------------------------------------------
//
// Invariants: _den is nonzero, gcd(_num,_den) is constant, the leading
// coefficient of _den is 1, and a zero numerator forces _den == 1.  Structural
// equality of canonical forms is used as semantic equality.

class Scalar {
public:
  Scalar() : _den(Poly::constant(1)) {}
  Scalar(long n) : _num(Poly::constant(GaussQ(n))), _den(Poly::constant(1)) {}  // NOLINT
  Scalar(GaussQ c) : _num(Poly::constant(std::move(c))), _den(Poly::constant(1)) {}  // NOLINT
  explicit Scalar(Poly p) : _num(std::move(p)), _den(Poly::constant(1)) { normalize_zero(); }
  Scalar(Poly num, Poly den);  // reduces; throws std::domain_error on zero den

  static Scalar variable(int v, int power = 1);  // power may be negative
  static Scalar imag_unit() { return Scalar(GaussQ::imag_unit()); }
  static Scalar rational(long num, long den) {
    if (den == 0) throw std::domain_error("scalar: rational with zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return Scalar(GaussQ(std::move(r)));
  }

  const Poly& num() const noexcept { return _num; }
  const Poly& den() const noexcept { return _den; }

  bool is_zero() const { return _num.is_zero(); }
  bool is_one() const { return _den.is_one() && _num.is_one(); }
  bool is_polynomial() const { return _den.is_one(); }
  bool depends_on(int v) const { return _num.depends_on(v) || _den.depends_on(v); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x._num == y._num && x._den == y._den;
  }

  Scalar pow(long k) const;  // negative k inverts; 0^negative throws
  Scalar conj() const { return Scalar(_num.conj(), _den.conj()); }
  Scalar derivative(int v) const;

  // Evaluate at v = value; throws std::domain_error if the denominator
  // vanishes there.
  Scalar substitute(int v, const Scalar& value) const;

  // Coefficient of v^k as a rational function; requires a v-free denominator.
  Scalar coeff_of(int v, int k) const;

private:
  void reduce();
  void normalize_zero();
  Poly _num, _den;
};

// ---------------------------------------------------------------------------
// Variable domains and text form
// ---------------------------------------------------------------------------

struct Domain {
  int nvars = 0;
  std::array<const char*, kMaxVars> names{};

  // Index of a variable name, or -1.
  int find(std::string_view name) const;
};

// Quantum-sphere scalars: deformation/weight symbols plus a time variable and
// a spare deformation parameter for the time-extension layer.
const Domain& sphere_domain();
// Coordinate-calculus scalars on up to three space variables plus time and
// the two homotopy weights.
const Domain& coordinate_domain();

namespace sv {  // sphere variable indices
inline constexpr int q = 0, alpha = 1, beta = 2, gamma = 3, eps = 4, t = 5, s = 6;
}
namespace cv {  // coordinate variable indices
inline constexpr int x1 = 0, x2 = 1, x3 = 2, t = 3, alpha = 4, beta = 5;
}

std::string render(const GaussQ& c);
std::string render(const Poly& p, const Domain& dom);
std::string render(const Scalar& x, const Domain& dom);

// Expression grammar: + - * / ^ with integer (possibly negative) exponents,
// parentheses, integer literals, 'i', and the domain's variable names.
// Throws std::invalid_argument with an offset on malformed input.
Scalar parse_scalar(std::string_view text, const Domain& dom);

}  // namespace defcal
