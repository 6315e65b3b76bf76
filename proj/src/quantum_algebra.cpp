// quantum_algebra.cpp — normal-form rewriting and star structure.

#include "defcal/quantum_algebra.hpp"

#include <vector>

#include "defcal/qint.hpp"

namespace defcal {

std::string QMono::word() const {
  std::string w;
  w.append(n, dfam ? 'd' : 'a');
  w.append(m, 'b');
  w.append(p, 'c');
  return w;
}

AlgElem AlgElem::generator(char g) {
  QMono m;
  switch (g) {
    case 'a': m.n = 1; break;
    case 'd': m.dfam = true; m.n = 1; break;
    case 'b': m.m = 1; break;
    case 'c': m.p = 1; break;
    default: throw std::invalid_argument("algebra: unknown generator");
  }
  return monomial(m);
}

AlgElem AlgElem::monomial(const QMono& m, const Scalar& c) {
  AlgElem x;
  x.add_term(m, c);
  return x;
}

void AlgElem::add_term(const QMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = _t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) _t.erase(it);
  }
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [m, c] : o._t) add_term(m, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [m, c] : o._t) add_term(m, -c);
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem r;
  for (const auto& [m, c] : _t) r._t.emplace(m, -c);
  return r;
}

AlgElem operator*(const Scalar& c, AlgElem x) {
  if (c.is_zero()) return AlgElem{};
  std::map<QMono, Scalar> out;
  for (auto& [m, v] : x._t) {
    Scalar s = c * v;
    if (!s.is_zero()) out.emplace(m, std::move(s));
  }
  x._t = std::move(out);
  return x;
}

// ---------------------------------------------------------------------------
// Rewriting engine
// ---------------------------------------------------------------------------
//
// Scans for the leftmost adjacent pair that violates the normal order
// (a/d first, then b, then c, single family) and applies the matching
// relation; the ad/da relations branch into two terms.  Terminates because
// every rule either removes letters or strictly reduces the inversion count.

namespace {

int rank(char g) { return g == 'b' ? 1 : g == 'c' ? 2 : 0; }

struct RawTerm {
  Scalar c;
  std::string w;
};

}  // namespace

AlgElem AlgElem::from_word(std::string_view w0, const Scalar& c0) {
  AlgElem out;
  if (c0.is_zero()) return out;
  std::vector<RawTerm> work{{c0, std::string(w0)}};
  while (!work.empty()) {
    RawTerm t = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    bool reduced = false;
    for (; i + 1 < t.w.size(); ++i) {
      char x = t.w[i], y = t.w[i + 1];
      if (x == 'a' && y == 'd') {
        // ad = 1 + q^{-1} bc
        std::string rest = t.w.substr(0, i) + t.w.substr(i + 2);
        work.push_back({t.c, rest});
        std::string bc = t.w.substr(0, i) + "bc" + t.w.substr(i + 2);
        work.push_back({t.c * qpow(-1), bc});
        reduced = true;
        break;
      }
      if (x == 'd' && y == 'a') {
        // da = 1 + q bc
        std::string rest = t.w.substr(0, i) + t.w.substr(i + 2);
        work.push_back({t.c, rest});
        std::string bc = t.w.substr(0, i) + "bc" + t.w.substr(i + 2);
        work.push_back({t.c * qpow(1), bc});
        reduced = true;
        break;
      }
      if (rank(x) > rank(y)) {
        // pure commutation: ba = q ab, ca = q ac, cb = bc, bd = q^{-1} db,
        // cd = q^{-1} dc
        Scalar f(1);
        if (y == 'a') f = qpow(1);
        if (y == 'd') f = qpow(-1);
        std::swap(t.w[i], t.w[i + 1]);
        work.push_back({t.c * f, std::move(t.w)});
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    // Sorted single-family word: count into a normal-form monomial.
    QMono m;
    uint16_t na = 0, nd = 0;
    for (char g : t.w) {
      if (g == 'a') ++na;
      if (g == 'd') ++nd;
      if (g == 'b') ++m.m;
      if (g == 'c') ++m.p;
    }
    m.dfam = nd > 0;
    m.n = m.dfam ? nd : na;
    out.add_term(m, t.c);
  }
  return out;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  AlgElem out;
  for (const auto& [mx, cx] : x._t)
    for (const auto& [my, cy] : y._t) out += AlgElem::from_word(mx.word() + my.word(), cx * cy);
  return out;
}

// ---------------------------------------------------------------------------
// Star structure, grading
// ---------------------------------------------------------------------------
//
// Generator star: a* = d, d* = a, b* = -q^{-1} c, c* = -q b, extended as a
// conjugate-linear antihomomorphism.  On normal monomials this closes to
//   (a^n b^m c^p)* = (-1)^{m+p} q^{-n(m+p)+p-m} d^n b^p c^m
//   (d^n b^m c^p)* = (-1)^{m+p} q^{+n(m+p)+p-m} a^n b^p c^m

AlgElem AlgElem::star() const {
  AlgElem out;
  for (const auto& [m, c] : _t) {
    QMono s;
    s.dfam = !m.dfam && m.n > 0 ? true : false;
    s.n = m.n;
    s.m = m.p;
    s.p = m.m;
    long e = long(m.p) - long(m.m) + (m.dfam ? 1L : -1L) * long(m.n) * (long(m.m) + long(m.p));
    Scalar f = ((m.m + m.p) % 2 ? Scalar(-1) : Scalar(1)) * qpow(e);
    out.add_term(s, f * c.conj());
  }
  return out;
}

AlgElem AlgElem::grade_shift(int s) const {
  AlgElem out;
  for (const auto& [m, c] : _t) out.add_term(m, qpow(long(s) * m.grade()) * c);
  return out;
}

bool AlgElem::has_grade(int g) const {
  for (const auto& [m, c] : _t)
    if (m.grade() != g) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

std::string mono_word_str(const QMono& m) {
  std::string s;
  auto app = [&s](const char* g, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += g;
    if (k > 1) s += "^" + std::to_string(k);
  };
  app(m.dfam ? "d" : "a", m.n);
  app("b", m.m);
  app("c", m.p);
  return s;
}

std::string term_str(const Scalar& c, const std::string& word) {
  const Domain& dom = sphere_domain();
  // A single (Laurent) monomial stays a bare '*' chain; anything else is
  // parenthesized so the term reads back as one product.
  bool simple = c.num().terms().size() <= 1 && (c.den().is_one() || c.den().is_monomial());
  if (word.empty()) {
    if (simple) return render(c, dom);
    return "(" + render(c, dom) + ")";
  }
  if (c.is_one()) return word;
  if (c == Scalar(-1)) return "-" + word;
  if (simple) return render(c, dom) + "*" + word;
  return "(" + render(c, dom) + ")*" + word;
}

}  // namespace

std::string to_string(const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string term = term_str(c, mono_word_str(m));
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace defcal
