// scalar.cpp — arithmetic for GaussQ, Poly, Scalar (gcd machinery included).

#include "defcal/scalar.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace defcal {

// ---------------------------------------------------------------------------
// GaussQ
// ---------------------------------------------------------------------------

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  _re += o._re;
  _im += o._im;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  _re -= o._re;
  _im -= o._im;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  mpq_class re = _re * o._re - _im * o._im;
  mpq_class im = _re * o._im + _im * o._re;
  _re = std::move(re);
  _im = std::move(im);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  if (o.is_zero()) throw std::domain_error("scalar: division by zero");
  mpq_class n = o._re * o._re + o._im * o._im;
  mpq_class re = (_re * o._re + _im * o._im) / n;
  mpq_class im = (_im * o._re - _re * o._im) / n;
  _re = std::move(re);
  _im = std::move(im);
  return *this;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly Poly::variable(int v, int power) {
  if (v < 0 || v >= kMaxVars) throw std::domain_error("scalar: variable index out of range");
  if (power < 0) throw std::domain_error("scalar: negative power in Poly::variable");
  Poly p;
  Mono m;
  m.e[v] = int16_t(power);
  p.add_term(m, GaussQ(1));
  return p;
}

bool Poly::is_one() const {
  return _t.size() == 1 && _t.begin()->first.is_unit() && _t.begin()->second == GaussQ(1);
}

void Poly::add_term(const Mono& m, GaussQ c) {
  if (c.is_zero()) return;
  auto [it, inserted] = _t.try_emplace(m, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) _t.erase(it);
  }
}

int Poly::degree(int v) const {
  int d = 0;
  for (const auto& [m, c] : _t) d = std::max(d, int(m.e[v]));
  return d;
}

bool Poly::depends_on(int v) const {
  for (const auto& [m, c] : _t)
    if (m.e[v] != 0) return true;
  return false;
}

Poly Poly::derivative(int v) const {
  Poly r;
  for (const auto& [m, c] : _t) {
    if (m.e[v] == 0) continue;
    Mono d = m;
    d.e[v] = int16_t(d.e[v] - 1);
    r.add_term(d, c * GaussQ(long(m.e[v])));
  }
  return r;
}

Poly Poly::conj() const {
  Poly r;
  for (const auto& [m, c] : _t) r._t.emplace(m, c.conj());
  return r;
}

const GaussQ& Poly::leading_coeff() const {
  static const GaussQ zero(0);
  if (_t.empty()) return zero;
  return _t.rbegin()->second;
}

const Mono& Poly::leading_mono() const {
  static const Mono unit{};
  if (_t.empty()) return unit;
  return _t.rbegin()->first;
}

Poly Poly::coeff_of(int v, int k) const {
  Poly r;
  for (const auto& [m, c] : _t) {
    if (m.e[v] != k) continue;
    Mono d = m;
    d.e[v] = 0;
    r.add_term(d, c);
  }
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o._t) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o._t) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : _t) r._t.emplace(m, -c);
  return r;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) r.add_term(mx * my, cx * cy);
  return r;
}

Poly& Poly::scale(const GaussQ& c) {
  if (c.is_zero()) {
    _t.clear();
    return *this;
  }
  for (auto& [m, v] : _t) v *= c;
  return *this;
}

Poly& Poly::shift_mono(const Mono& m) {
  if (m.is_unit()) return *this;
  Terms shifted;
  for (auto& [mm, c] : _t) shifted.emplace(mm * m, std::move(c));
  _t = std::move(shifted);
  return *this;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("scalar: division by zero");
  Poly rem = a;
  Poly quot;
  const Mono& lb = b.leading_mono();
  const GaussQ& cb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& lr = rem.leading_mono();
    if (!lb.divides(lr)) throw std::domain_error("scalar: inexact polynomial division");
    Mono qm = lb.quotient_into(lr);
    GaussQ qc = rem.leading_coeff() / cb;
    quot.add_term(qm, qc);
    Poly piece = b;
    piece.scale(-qc).shift_mono(qm);
    rem += piece;
  }
  return quot;
}

// ---- gcd machinery --------------------------------------------------------

namespace {

int top_variable(const Poly& p) {
  int top = -1;
  for (const auto& [m, c] : p.terms())
    for (int v = kMaxVars - 1; v > top; --v)
      if (m.e[v] != 0) top = v;
  return top;
}

// Univariate view in v: exponent -> coefficient poly (v-free).
std::vector<Poly> univar(const Poly& p, int v) {
  std::vector<Poly> out(size_t(p.degree(v)) + 1);
  for (const auto& [m, c] : p.terms()) {
    Mono d = m;
    int k = m.e[v];
    d.e[v] = 0;
    out[size_t(k)].add_term(d, c);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  p.scale(GaussQ(1) / p.leading_coeff());
  return p;
}

// Monomial gcd fast path: min exponents over every term of both polynomials.
Poly monomial_gcd(const Poly& a, const Poly& b) {
  Mono g;
  bool first = true;
  for (const Poly* p : {&a, &b})
    for (const auto& [m, c] : p->terms()) {
      if (first) {
        g = m;
        first = false;
      } else {
        for (int v = 0; v < kMaxVars; ++v) g.e[v] = std::min(g.e[v], m.e[v]);
      }
    }
  Poly r;
  r.add_term(g, GaussQ(1));
  return r;
}

Poly content_in(const Poly& p, int v);

Poly pow_poly(const Poly& p, int k) {
  Poly r = Poly::constant(GaussQ(1));
  for (int j = 0; j < k; ++j) r = r * p;
  return r;
}

// Full pseudo-remainder: lc_v(G)^(deg F - deg G + 1) * F  mod  G.
Poly prem(const Poly& F, const Poly& G, int v) {
  int dg = G.degree(v);
  Poly lg = G.coeff_of(v, dg);
  Poly R = F;
  int e = F.degree(v) - dg + 1;
  while (!R.is_zero() && R.degree(v) >= dg) {
    int dr = R.degree(v);
    Poly lr = R.coeff_of(v, dr);
    Poly t = lr * G;
    Mono shift;
    shift.e[v] = int16_t(dr - dg);
    t.shift_mono(shift);
    R = lg * R - t;
    --e;
  }
  return R * pow_poly(lg, e);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(GaussQ(1));
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
  if (a == b) return make_monic(a);

  int va = top_variable(a), vb = top_variable(b);
  int v = std::max(va, vb);
  if (va != vb) {
    // Only one side involves v: reduce it to its content in v.
    const Poly& with = (va == v) ? a : b;
    const Poly& without = (va == v) ? b : a;
    return gcd_impl(content_in(with, v), without);
  }

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = gcd_impl(ca, cb);
  Poly F = Poly::divide_exact(a, ca);
  Poly G = Poly::divide_exact(b, cb);
  if (F.degree(v) < G.degree(v)) std::swap(F, G);

  // Subresultant pseudo-remainder sequence on the primitive parts; contents
  // are only touched at the ends, which keeps the recursion tame.
  Poly g = Poly::constant(GaussQ(1));
  Poly h = Poly::constant(GaussQ(1));
  while (true) {
    int d = F.degree(v) - G.degree(v);
    Poly R = prem(F, G, v);
    if (R.is_zero()) break;
    if (R.degree(v) == 0) return make_monic(c);  // coprime primitive parts
    F = std::move(G);
    G = Poly::divide_exact(R, g * pow_poly(h, d));
    g = F.coeff_of(v, F.degree(v));
    if (d > 0) h = Poly::divide_exact(pow_poly(g, d), pow_poly(h, d - 1));
  }
  return make_monic(c * Poly::divide_exact(G, content_in(G, v)));
}

Poly content_in(const Poly& p, int v) {
  auto u = univar(p, v);
  Poly c;
  for (const auto& coeff : u) {
    if (coeff.is_zero()) continue;
    c = gcd_impl(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(Poly num, Poly den) : _num(std::move(num)), _den(std::move(den)) {
  if (_den.is_zero()) throw std::domain_error("scalar: division by zero");
  reduce();
}

Scalar Scalar::variable(int v, int power) {
  if (power >= 0) return Scalar(Poly::variable(v, power));
  return Scalar(Poly::constant(GaussQ(1)), Poly::variable(v, -power));
}

void Scalar::normalize_zero() {
  if (_num.is_zero()) _den = Poly::constant(GaussQ(1));
}

void Scalar::reduce() {
  if (_num.is_zero()) {
    _den = Poly::constant(GaussQ(1));
    return;
  }
  if (!_den.is_constant()) {
    Poly g = Poly::gcd(_num, _den);
    if (!g.is_constant()) {
      _num = Poly::divide_exact(_num, g);
      _den = Poly::divide_exact(_den, g);
    }
  }
  GaussQ lc = _den.leading_coeff();
  if (!(lc == GaussQ(1))) {
    GaussQ inv = GaussQ(1) / lc;
    _num.scale(inv);
    _den.scale(inv);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  _num = _num * o._den + o._num * _den;
  _den = _den * o._den;
  reduce();
  normalize_zero();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  _num = _num * o._den - o._num * _den;
  _den = _den * o._den;
  reduce();
  normalize_zero();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  _num = _num * o._num;
  _den = _den * o._den;
  reduce();
  normalize_zero();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("scalar: division by zero");
  _num = _num * o._den;
  _den = _den * o._num;
  reduce();
  normalize_zero();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r._num = -r._num;
  return r;
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return Scalar(1);
  bool invert = k < 0;
  unsigned long n = invert ? (unsigned long)(-k) : (unsigned long)k;
  if (invert && is_zero()) throw std::domain_error("scalar: division by zero");
  Scalar base = *this;
  Scalar acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (invert) {
    Scalar r(1);
    r /= acc;
    return r;
  }
  return acc;
}

Scalar Scalar::derivative(int v) const {
  // (n/d)' = (n'd - nd')/d^2
  Poly n = _num.derivative(v) * _den - _num * _den.derivative(v);
  return Scalar(std::move(n), _den * _den);
}

Scalar Scalar::coeff_of(int v, int k) const {
  if (_den.depends_on(v))
    throw std::domain_error("scalar: coefficient extraction with dependent denominator");
  return Scalar(_num.coeff_of(v, k), _den);
}

namespace {

Scalar substitute_poly(const Poly& p, int v, const Scalar& value) {
  Scalar out;
  for (int k = p.degree(v); k >= 0; --k) {
    Poly ck = p.coeff_of(v, k);
    if (!ck.is_zero()) out += Scalar(std::move(ck)) * value.pow(k);
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(int v, const Scalar& value) const {
  const Scalar d = substitute_poly(_den, v, value);
  if (d.is_zero())
    throw std::domain_error("scalar: substitution makes the denominator vanish");
  return substitute_poly(_num, v, value) / d;
}

}  // namespace defcal
