// element_text.cpp — expression parsing and random element generation for the
// two element families.

#include "defcal/element_text.hpp"

#include <bit>
#include <cctype>
#include <optional>
#include <sstream>

#include "defcal/qint.hpp"

namespace defcal {

namespace {

// Scalar-valued algebra elements (multiples of the unit monomial) are the
// only ones that may be inverted or raised to negative powers.
std::optional<Scalar> as_scalar(const AlgElem& x) {
  if (x.is_zero()) return Scalar(0);
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  if (m.n == 0 && m.m == 0 && m.p == 0) return c;
  return std::nullopt;
}

// One recursive-descent parser covers both families; the sphere entry point
// works with algebra terms carrying an optional frame factor, the coordinate
// entry point with scalar coefficients on differential masks.
class ElementParser {
public:
  ElementParser(std::string_view text, const Domain& dom) : _s(text), _dom(dom) {}

  AlgElem alg() {
    AlgElem v = alg_expr();
    finish();
    return v;
  }

  SphereForm sphere() {
    SphereForm v = sphere_expr();
    finish();
    return v;
  }

  CForm cform(int dim) {
    if (dim < 1 || dim > 3)
      throw std::invalid_argument("coordinate expression: dimension must be 1, 2 or 3");
    _dim = dim;
    CForm v = cform_expr();
    finish();
    return v;
  }

private:
  // --- lexing ------------------------------------------------------------

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << _pos << ": " << what;
    throw std::invalid_argument(os.str());
  }

  void finish() {
    skip_ws();
    if (_pos != _s.size()) fail("unexpected trailing input");
  }

  void skip_ws() {
    while (_pos < _s.size() && std::isspace((unsigned char)_s[_pos])) ++_pos;
  }

  bool eat(char c) {
    skip_ws();
    if (_pos < _s.size() && _s[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return _pos < _s.size() ? _s[_pos] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isalnum((unsigned char)c) || c == '(' || c == '_';
  }

  long exponent() {
    skip_ws();
    bool neg = false;
    if (_pos < _s.size() && (_s[_pos] == '-' || _s[_pos] == '+')) {
      neg = _s[_pos] == '-';
      ++_pos;
    }
    if (_pos >= _s.size() || !std::isdigit((unsigned char)_s[_pos]))
      fail("expected integer exponent");
    long k = 0;
    while (_pos < _s.size() && std::isdigit((unsigned char)_s[_pos])) {
      k = k * 10 + (_s[_pos] - '0');
      if (k > 1000) fail("exponent too large");
      ++_pos;
    }
    return neg ? -k : k;
  }

  Scalar number() {
    size_t start = _pos;
    while (_pos < _s.size() && std::isdigit((unsigned char)_s[_pos])) ++_pos;
    mpz_class n(std::string(_s.substr(start, _pos - start)), 10);
    return Scalar(GaussQ(mpq_class(n)));
  }

  std::string_view take_ident() {
    size_t start = _pos;
    while (_pos < _s.size() &&
           (std::isalnum((unsigned char)_s[_pos]) || _s[_pos] == '_'))
      ++_pos;
    return _s.substr(start, _pos - start);
  }

  // --- algebra expressions -------------------------------------------------

  AlgElem alg_expr() {
    AlgElem v = alg_term();
    while (true) {
      if (eat('+'))
        v = v + alg_term();
      else if (eat('-'))
        v = v - alg_term();
      else
        return v;
    }
  }

  AlgElem alg_term() {
    AlgElem v = alg_power();
    while (true) {
      if (eat('*')) {
        v = v * alg_power();
      } else if (eat('/')) {
        v = alg_divide(v, alg_power());
      } else if (starts_factor(peek())) {
        v = v * alg_power();
      } else {
        return v;
      }
    }
  }

  AlgElem alg_divide(const AlgElem& v, const AlgElem& rhs) {
    const auto s = as_scalar(rhs);
    if (!s) fail("division by a non-scalar element");
    if (s->is_zero()) fail("division by zero");
    return (Scalar(1) / *s) * v;
  }

  AlgElem alg_power() {
    AlgElem v = alg_atom();
    if (eat('^')) return raise(v, exponent());
    return v;
  }

  AlgElem raise(const AlgElem& v, long k) {
    if (const auto s = as_scalar(v)) {
      if (s->is_zero() && k < 0) fail("negative power of zero");
      return AlgElem(s->pow(k));
    }
    if (k < 0) fail("negative power of a non-scalar element");
    if (k > 256) fail("element power too large");
    AlgElem acc = AlgElem::one();
    for (long j = 0; j < k; ++j) acc = acc * v;
    return acc;
  }

  AlgElem alg_atom() {
    skip_ws();
    if (_pos >= _s.size()) fail("unexpected end of input");
    char c = _s[_pos];
    if (c == '(') {
      ++_pos;
      AlgElem v = alg_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++_pos;
      return AlgElem(Scalar(-1)) * alg_power();
    }
    if (std::isdigit((unsigned char)c)) return AlgElem(number());
    if (std::isalpha((unsigned char)c) || c == '_') return alg_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  AlgElem alg_name() {
    size_t start = _pos;
    std::string_view id = take_ident();
    if (id == "i") return AlgElem(Scalar::imag_unit());
    if (id == "star") {
      if (!eat('(')) fail("expected '(' after star");
      AlgElem v = alg_expr();
      if (!eat(')')) fail("expected ')'");
      return v.star();
    }
    if (id.size() == 1 && (id[0] == 'a' || id[0] == 'b' || id[0] == 'c' || id[0] == 'd'))
      return AlgElem::generator(id[0]);
    int v = _dom.find(id);
    if (v < 0) {
      _pos = start;
      fail("unknown variable '" + std::string(id) + "'");
    }
    return AlgElem(Scalar::variable(v));
  }

  // --- sphere form expressions ---------------------------------------------

  enum Head { kNone, kPlus, kMinus, kTop };

  struct FrameTerm {
    AlgElem left = AlgElem::one();   // factors before the first frame factor
    AlgElem right = AlgElem::one();  // factors after the last frame factor
    Head head = kNone;
    bool dead = false;  // the term vanished by frame antisymmetry
  };

  SphereForm sphere_expr() {
    SphereForm v = sphere_term(1);
    while (true) {
      if (eat('+'))
        v += sphere_term(1);
      else if (eat('-'))
        v += sphere_term(-1);
      else
        return v;
    }
  }

  SphereForm sphere_term(int sign) {
    FrameTerm t;
    if (sign < 0) t.left = AlgElem(Scalar(-1));
    sphere_factor(t);
    while (true) {
      if (eat('*')) {
        sphere_factor(t);
      } else if (eat('/')) {
        sphere_divide(t);
      } else if (starts_factor(peek())) {
        sphere_factor(t);
      } else {
        break;
      }
    }
    SphereForm out;
    if (t.dead) return out;
    switch (t.head) {
      case kNone: out.c0 = t.left * t.right; break;
      case kPlus: out.fp = t.left.grade_shift(-1) * t.right; break;
      case kMinus: out.fm = t.left.grade_shift(-1) * t.right; break;
      case kTop: out.c2 = t.left.grade_shift(-2) * t.right; break;
    }
    return out;
  }

  void sphere_divide(FrameTerm& t) {
    AlgElem f = alg_power();
    const auto s = as_scalar(f);
    if (!s) fail("division by a non-scalar element");
    if (s->is_zero()) fail("division by zero");
    mul_into(t, AlgElem(Scalar(1) / *s));
  }

  void mul_into(FrameTerm& t, const AlgElem& f) {
    if (t.head == kNone)
      t.left = t.left * f;
    else
      t.right = t.right * f;
  }

  void sphere_factor(FrameTerm& t) {
    skip_ws();
    if (_pos >= _s.size()) fail("unexpected end of input");
    char c = _s[_pos];
    if (c == '-') {
      ++_pos;
      mul_into(t, AlgElem(Scalar(-1)));
      return sphere_factor(t);
    }
    if (c == 'e' && frame_head(t)) return;
    mul_into(t, alg_power());
  }

  // Recognizes e+, e-, and e+^e-; leaves the position untouched when the
  // identifier is something else (eps, ...).  Frame wedge rules: a repeated
  // frame letter kills the term, and e-^e+ rewrites to -q^2 e+^e-.
  bool frame_head(FrameTerm& t) {
    size_t start = _pos;
    std::string_view id = take_ident();
    if (id != "e" || _pos >= _s.size() || (_s[_pos] != '+' && _s[_pos] != '-')) {
      _pos = start;
      return false;
    }
    Head h = _s[_pos] == '+' ? kPlus : kMinus;
    ++_pos;
    if (peek() == '^') {
      size_t caret = _pos;
      eat('^');
      skip_ws();
      std::string_view id2 = take_ident();
      if (id2 == "e" && _pos < _s.size() && (_s[_pos] == '+' || _s[_pos] == '-')) {
        Head h2 = _s[_pos] == '+' ? kPlus : kMinus;
        ++_pos;
        apply_head(t, h);
        apply_head(t, h2);
        return true;
      }
      _pos = caret;
      fail("frame factors do not take powers");
    }
    apply_head(t, h);
    return true;
  }

  void apply_head(FrameTerm& t, Head h) {
    if (t.dead) return;
    switch (t.head) {
      case kNone:
        t.head = h;
        return;
      case kTop:
        t.dead = true;  // degree above the top vanishes
        return;
      case kPlus:
      case kMinus:
        if (h == t.head || h == kTop) {
          t.dead = true;
          return;
        }
        // The pending right factors slide across the incoming frame letter.
        t.right = t.right.grade_shift(-1);
        if (t.head == kMinus) t.right = (Scalar(-1) * qpow(2)) * t.right;
        t.head = kTop;
        return;
    }
  }

  // --- coordinate form expressions ------------------------------------------

  struct CoordTerm {
    Scalar coeff = Scalar(1);
    unsigned mask = 0;
    bool dead = false;
  };

  CForm cform_expr() {
    CForm v = cform_term(1);
    while (true) {
      if (eat('+'))
        v += cform_term(1);
      else if (eat('-'))
        v += cform_term(-1);
      else
        return v;
    }
  }

  CForm cform_term(int sign) {
    CoordTerm t;
    if (sign < 0) t.coeff = Scalar(-1);
    cform_factor(t);
    while (true) {
      if (eat('*')) {
        cform_factor(t);
      } else if (eat('/')) {
        Scalar s = scalar_power();
        if (s.is_zero()) fail("division by zero");
        t.coeff /= s;
      } else if (starts_factor(peek())) {
        cform_factor(t);
      } else {
        break;
      }
    }
    CForm out;
    if (!t.dead && !t.coeff.is_zero()) out += CForm::monomial(t.mask, t.coeff);
    return out;
  }

  void cform_factor(CoordTerm& t) {
    skip_ws();
    if (_pos >= _s.size()) fail("unexpected end of input");
    char c = _s[_pos];
    if (c == '-') {
      ++_pos;
      t.coeff = -t.coeff;
      return cform_factor(t);
    }
    if (c == 'd' && differential(t)) return;
    t.coeff *= scalar_power();
  }

  // Recognizes dx1..dx<dim>; appending an already-present differential kills
  // the term, otherwise the insertion parity signs the coefficient.
  bool differential(CoordTerm& t) {
    size_t start = _pos;
    std::string_view id = take_ident();
    if (id.size() == 3 && id[0] == 'd' && id[1] == 'x' && id[2] >= '1' && id[2] <= '9') {
      int k = id[2] - '0';
      if (k > _dim) fail("differential '" + std::string(id) + "' exceeds the dimension");
      if (peek() == '^') fail("differentials do not take powers");
      unsigned bit = 1u << (k - 1);
      if (t.mask & bit) {
        t.dead = true;
        return true;
      }
      if (std::popcount(t.mask >> k) % 2 == 1) t.coeff = -t.coeff;
      t.mask |= bit;
      return true;
    }
    _pos = start;
    return false;
  }

  // --- scalar sub-expressions (coordinate side) ------------------------------

  Scalar scalar_expr() {
    Scalar v = scalar_term();
    while (true) {
      if (eat('+'))
        v += scalar_term();
      else if (eat('-'))
        v -= scalar_term();
      else
        return v;
    }
  }

  Scalar scalar_term() {
    Scalar v = scalar_power();
    while (true) {
      if (eat('*')) {
        v *= scalar_power();
      } else if (eat('/')) {
        Scalar s = scalar_power();
        if (s.is_zero()) fail("division by zero");
        v /= s;
      } else {
        return v;
      }
    }
  }

  Scalar scalar_power() {
    Scalar v = scalar_atom();
    if (eat('^')) {
      long k = exponent();
      if (v.is_zero() && k < 0) fail("negative power of zero");
      v = v.pow(k);
    }
    return v;
  }

  Scalar scalar_atom() {
    skip_ws();
    if (_pos >= _s.size()) fail("unexpected end of input");
    char c = _s[_pos];
    if (c == '(') {
      ++_pos;
      Scalar v = scalar_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++_pos;
      return -scalar_power();
    }
    if (std::isdigit((unsigned char)c)) return number();
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = _pos;
      std::string_view id = take_ident();
      if (id == "i") return Scalar::imag_unit();
      int v = _dom.find(id);
      if (v < 0) {
        _pos = start;
        fail("unknown variable '" + std::string(id) + "'");
      }
      return Scalar::variable(v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view _s;
  const Domain& _dom;
  size_t _pos = 0;
  int _dim = 3;
};

// Reports the common grade of all terms, or "mixed grades".
std::string grade_label(const AlgElem& x) {
  bool first = true;
  int g = 0;
  for (const auto& [m, c] : x.terms()) {
    (void)c;
    if (first) {
      g = m.grade();
      first = false;
    } else if (m.grade() != g) {
      return "mixed grades";
    }
  }
  std::ostringstream os;
  if (g > 0) os << '+';
  os << g;
  return os.str();
}

void require_grade(const AlgElem& x, int want, const char* slot) {
  if (x.has_grade(want)) return;
  std::ostringstream os;
  os << "semantic error: the " << slot << " coefficient must have grade " << want
     << ", got " << grade_label(x);
  throw std::domain_error(os.str());
}

}  // namespace

AlgElem parse_alg(std::string_view text) {
  return ElementParser(text, sphere_domain()).alg();
}

SphereForm parse_sphere_form(std::string_view text) {
  SphereForm x = ElementParser(text, sphere_domain()).sphere();
  require_grade(x.c0, 0, "function");
  require_grade(x.fp, -2, "e+");
  require_grade(x.fm, 2, "e-");
  require_grade(x.c2, 0, "e+^e-");
  return x;
}

CForm parse_cform(std::string_view text, int dim) {
  return ElementParser(text, coordinate_domain()).cform(dim);
}

// ---------------------------------------------------------------------------
// Random elements
// ---------------------------------------------------------------------------

namespace {

// Nonzero rational-function coefficient: up to three Laurent terms in the
// listed variables, with occasional imaginary parts.
Scalar sample_scalar(SplitMix64& rng, const std::vector<int>& vars, int laurent_var) {
  Scalar out;
  const int nterms = 1 + int(rng.below(3));
  for (int t = 0; t < nterms; ++t) {
    Scalar c = Scalar::rational(rng.range(-4, 4), rng.range(1, 3));
    if (rng.below(4) == 0) c *= Scalar::imag_unit();
    for (int v : vars) {
      const long lo = v == laurent_var ? -2 : 0;
      const long e = rng.range(lo, 2);
      if (e != 0) c *= Scalar::variable(v, int(e));
    }
    out += c;
  }
  return out.is_zero() ? Scalar(1) : out;
}

AlgElem sample_graded_mono(SplitMix64& rng, int grade, int bound, const Scalar& c) {
  for (;;) {
    QMono k;
    k.n = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.m = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.p = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.dfam = k.n > 0 && rng.below(2) == 1;
    if (AlgElem::monomial(k).has_grade(grade)) return AlgElem::monomial(k, c);
  }
}

}  // namespace

AlgElem sample_alg(SplitMix64& rng, int bound) {
  const std::vector<int> vars{sv::q, sv::t};
  AlgElem out;
  const int nterms = 1 + int(rng.below(3));
  for (int t = 0; t < nterms; ++t) {
    QMono k;
    k.n = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.m = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.p = std::uint16_t(rng.below(unsigned(bound + 1)));
    k.dfam = k.n > 0 && rng.below(2) == 1;
    out += AlgElem::monomial(k, sample_scalar(rng, vars, sv::q));
  }
  return out.is_zero() ? AlgElem::one() : out;
}

SphereForm sample_sphere_form(SplitMix64& rng, int bound) {
  const std::vector<int> vars{sv::q};
  SphereForm out;
  do {
    if (rng.below(2) == 1)
      out.c0 += sample_graded_mono(rng, 0, bound, sample_scalar(rng, vars, sv::q));
    if (rng.below(2) == 1)
      out.fp += sample_graded_mono(rng, -2, bound, sample_scalar(rng, vars, sv::q));
    if (rng.below(2) == 1)
      out.fm += sample_graded_mono(rng, 2, bound, sample_scalar(rng, vars, sv::q));
    if (rng.below(2) == 1)
      out.c2 += sample_graded_mono(rng, 0, bound, sample_scalar(rng, vars, sv::q));
  } while (out.is_zero());
  return out;
}

CForm sample_cform(SplitMix64& rng, int dim) {
  std::vector<int> vars{cv::t};
  for (int j = 0; j < dim; ++j) vars.push_back(cv::x1 + j);
  CForm out;
  do {
    const int nterms = 1 + int(rng.below(3));
    for (int t = 0; t < nterms; ++t)
      out += CForm::monomial(rng.below(1u << dim), sample_scalar(rng, vars, cv::x1));
  } while (out.is_zero());
  return out;
}

}  // namespace defcal
