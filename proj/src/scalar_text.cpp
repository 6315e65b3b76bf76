// scalar_text.cpp — canonical text form and expression parsing for scalars.

#include <cctype>
#include <sstream>

#include "defcal/scalar.hpp"

namespace defcal {

int Domain::find(std::string_view name) const {
  for (int v = 0; v < nvars; ++v)
    if (name == names[v]) return v;
  return -1;
}

const Domain& sphere_domain() {
  static const Domain dom{7, {"q", "alpha", "beta", "gamma", "eps", "t", "s"}};
  return dom;
}

const Domain& coordinate_domain() {
  static const Domain dom{6, {"x1", "x2", "x3", "t", "alpha", "beta"}};
  return dom;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const mpq_class& r) { return r.get_str(); }

// A term coefficient in front of a monomial: "", "-", "2*", "-2/3*", "i*",
// "(1+2*i)*" ...  `bare` renders the constant-term form instead.
std::string coeff_prefix(const GaussQ& c, bool bare) {
  std::string s = render(c);
  if (bare) return s;
  if (c.is_real()) {
    if (c.re() == 1) return "";
    if (c.re() == -1) return "-";
    return s + "*";
  }
  return s + "*";
}

std::string mono_str(const Mono& m, const Domain& dom) {
  std::string s;
  for (int v = 0; v < dom.nvars; ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += dom.names[v];
    if (m.e[v] != 1) {
      s += "^";
      s += std::to_string(m.e[v]);
    }
  }
  return s;
}

}  // namespace

std::string render(const GaussQ& c) {
  if (c.is_zero()) return "0";
  if (c.is_real()) return rat_str(c.re());
  std::string im;
  if (c.im() == 1)
    im = "i";
  else if (c.im() == -1)
    im = "-i";
  else
    im = rat_str(c.im()) + "*i";
  if (c.re() == 0) return im;
  // Mixed values are parenthesized so they stay a single product factor.
  std::string s = "(" + rat_str(c.re());
  if (im[0] != '-') s += "+";
  return s + im + ")";
}

std::string render(const Poly& p, const Domain& dom) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string term = m.is_unit() ? coeff_prefix(c, true) : coeff_prefix(c, false) + mono_str(m, dom);
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string render(const Scalar& x, const Domain& dom) {
  if (x.is_polynomial()) return render(x.num(), dom);
  if (x.den().is_monomial()) {
    // Monic monomial denominator: fold into Laurent exponents, q^-2 style.
    const Mono& d = x.den().leading_mono();
    std::string out;
    for (auto it = x.num().terms().rbegin(); it != x.num().terms().rend(); ++it) {
      Mono m = it->first;
      for (int v = 0; v < kMaxVars; ++v) m.e[v] = int16_t(m.e[v] - d.e[v]);
      std::string term =
          m.is_unit() ? coeff_prefix(it->second, true) : coeff_prefix(it->second, false) + mono_str(m, dom);
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }
  return "(" + render(x.num(), dom) + ")/(" + render(x.den(), dom) + ")";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
public:
  ScalarParser(std::string_view text, const Domain& dom) : _s(text), _dom(dom) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (_pos != _s.size()) fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << _pos << ": " << what;
    throw std::invalid_argument(os.str());
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

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = power();
    while (true) {
      if (eat('*'))
        v *= power();
      else if (eat('/'))
        v /= power();
      else
        return v;
    }
  }

  Scalar power() {
    Scalar v = atom();
    if (eat('^')) {
      long k = exponent();
      v = v.pow(k);
    }
    return v;
  }

  long exponent() {
    skip_ws();
    bool neg = false;
    if (_pos < _s.size() && (_s[_pos] == '-' || _s[_pos] == '+')) {
      neg = _s[_pos] == '-';
      ++_pos;
    }
    if (_pos >= _s.size() || !std::isdigit((unsigned char)_s[_pos])) fail("expected integer exponent");
    long k = 0;
    while (_pos < _s.size() && std::isdigit((unsigned char)_s[_pos])) {
      k = k * 10 + (_s[_pos] - '0');
      if (k > 1000) fail("exponent too large");
      ++_pos;
    }
    return neg ? -k : k;
  }

  Scalar atom() {
    skip_ws();
    if (_pos >= _s.size()) fail("unexpected end of input");
    char c = _s[_pos];
    if (c == '(') {
      ++_pos;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++_pos;
      return -power();
    }
    if (std::isdigit((unsigned char)c)) return number();
    if (std::isalpha((unsigned char)c) || c == '_') return name();
    fail(std::string("unexpected character '") + c + "'");
  }

  Scalar number() {
    size_t start = _pos;
    while (_pos < _s.size() && std::isdigit((unsigned char)_s[_pos])) ++_pos;
    mpz_class n(std::string(_s.substr(start, _pos - start)), 10);
    return Scalar(GaussQ(mpq_class(n)));
  }

  Scalar name() {
    size_t start = _pos;
    while (_pos < _s.size() &&
           (std::isalnum((unsigned char)_s[_pos]) || _s[_pos] == '_'))
      ++_pos;
    std::string_view id = _s.substr(start, _pos - start);
    if (id == "i") return Scalar::imag_unit();
    int v = _dom.find(id);
    if (v < 0) {
      _pos = start;
      fail("unknown variable '" + std::string(id) + "'");
    }
    return Scalar::variable(v);
  }

  std::string_view _s;
  const Domain& _dom;
  size_t _pos = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Domain& dom) {
  return ScalarParser(text, dom).run();
}

}  // namespace defcal
