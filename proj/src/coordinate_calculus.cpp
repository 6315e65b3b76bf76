#include "defcal/coordinate_calculus.hpp"

#include <bit>
#include <stdexcept>

namespace defcal {

namespace {

// Sign of dx^A ^ dx^B when both masks are sorted products; 0 on overlap.
int merge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < 3; ++j)
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  return swaps % 2 ? -1 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// CForm basics
// ---------------------------------------------------------------------------

CForm CForm::fn(const Scalar& f) {
  CForm x;
  x.add_term(0u, f);
  return x;
}

CForm CForm::dx(int i, const Scalar& c) {
  if (i < 1 || i > 3) throw std::invalid_argument("dx: index out of range");
  CForm x;
  x.add_term(1u << (i - 1), c);
  return x;
}

CForm CForm::monomial(unsigned mask, const Scalar& c) {
  if (mask > 7u) throw std::invalid_argument("monomial: bad index mask");
  CForm x;
  x.add_term(mask, c);
  return x;
}

bool CForm::homogeneous(int degree) const {
  for (const auto& [mask, c] : _t)
    if (std::popcount(mask) != degree) return false;
  return true;
}

CForm CForm::component(int degree) const {
  CForm out;
  for (const auto& [mask, c] : _t)
    if (std::popcount(mask) == degree) out.add_term(mask, c);
  return out;
}

Scalar CForm::coefficient(unsigned mask) const {
  auto it = _t.find(mask);
  return it == _t.end() ? Scalar(0) : it->second;
}

void CForm::add_term(unsigned mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = _t.try_emplace(mask, c);
  if (fresh) return;
  it->second = it->second + c;
  if (it->second.is_zero()) _t.erase(it);
}

CForm& CForm::operator+=(const CForm& y) {
  for (const auto& [mask, c] : y._t) add_term(mask, c);
  return *this;
}

CForm& CForm::operator-=(const CForm& y) {
  for (const auto& [mask, c] : y._t) add_term(mask, Scalar(-1) * c);
  return *this;
}

CForm CForm::operator-() const {
  CForm out;
  for (const auto& [mask, c] : _t) out.add_term(mask, Scalar(-1) * c);
  return out;
}

CForm operator*(const Scalar& c, CForm x) {
  CForm out;
  for (const auto& [mask, v] : x._t) out.add_term(mask, c * v);
  return out;
}

// ---------------------------------------------------------------------------
// Exterior operations
// ---------------------------------------------------------------------------

CForm wedge(const CForm& x, const CForm& y) {
  CForm out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      int sign = merge_sign(ma, mb);
      if (sign == 0) continue;
      out.add_term(ma | mb, Scalar(sign) * (ca * cb));
    }
  return out;
}

CForm d(const CForm& x) {
  CForm out;
  for (const auto& [mask, c] : x.terms())
    for (int j = 0; j < 3; ++j) {
      if (mask & (1u << j)) continue;
      Scalar dc = c.derivative(cv::x1 + j);
      if (dc.is_zero()) continue;
      out.add_term(mask | (1u << j), Scalar(merge_sign(1u << j, mask)) * dc);
    }
  return out;
}

CForm interior(int i, const CForm& x) {
  if (i < 1 || i > 3) throw std::invalid_argument("interior: index out of range");
  const unsigned bit = 1u << (i - 1);
  CForm out;
  for (const auto& [mask, c] : x.terms()) {
    if (!(mask & bit)) continue;
    // Permute dx^i across the factors with smaller index, then cancel it.
    int before = std::popcount(mask & (bit - 1u));
    out.add_term(mask & ~bit, (before % 2 ? Scalar(-1) : Scalar(1)) * c);
  }
  return out;
}

CForm time_derivative(const CForm& x) {
  CForm out;
  for (const auto& [mask, c] : x.terms()) out.add_term(mask, c.derivative(cv::t));
  return out;
}

std::string to_string(const CForm& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [mask, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + render(c, coordinate_domain()) + ")";
    for (int j = 0; j < 3; ++j)
      if (mask & (1u << j)) s += " dx" + std::to_string(j + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Metric geometry
// ---------------------------------------------------------------------------

Metric::Metric(int dimension, const std::vector<std::vector<Scalar>>& gm,
               const std::vector<std::vector<Scalar>>& gi) {
  if (dimension < 1 || dimension > 3)
    throw std::invalid_argument("metric: dimension must be 1, 2 or 3");
  dim = dimension;
  if (gm.size() != size_t(dim) || gi.size() != size_t(dim))
    throw std::invalid_argument("metric: entry table has the wrong shape");
  for (int i = 0; i < dim; ++i) {
    if (gm[i].size() != size_t(dim) || gi[i].size() != size_t(dim))
      throw std::invalid_argument("metric: entry table has the wrong shape");
    for (int j = 0; j < dim; ++j) {
      g[i][j] = gm[i][j];
      ginv[i][j] = gi[i][j];
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (!(g[i][j] == g[j][i]))
        throw std::invalid_argument("metric: matrix is not symmetric");
      Scalar dot(0);
      for (int k = 0; k < dim; ++k) dot = dot + g[i][k] * ginv[k][j];
      if (!(dot == (i == j ? Scalar(1) : Scalar(0))))
        throw std::invalid_argument("metric: supplied inverse does not invert g");
    }
}

Metric Metric::flat(int dimension) {
  std::vector<std::vector<Scalar>> id(dimension, std::vector<Scalar>(dimension, Scalar(0)));
  for (int i = 0; i < dimension; ++i) id[i][i] = Scalar(1);
  return Metric(dimension, id, id);
}

Christoffel christoffel(const Metric& m) {
  Christoffel kappa{};
  for (int k = 0; k < m.dim; ++k)
    for (int nu = 0; nu < m.dim; ++nu)
      for (int mu = 0; mu < m.dim; ++mu) {
        Scalar sum(0);
        for (int lam = 0; lam < m.dim; ++lam)
          sum = sum + m.ginv[k][lam] * (m.g[nu][lam].derivative(cv::x1 + mu) +
                                        m.g[lam][mu].derivative(cv::x1 + nu) -
                                        m.g[nu][mu].derivative(cv::x1 + lam));
        kappa[k][nu][mu] = Scalar::rational(1, 2) * sum;
      }
  return kappa;
}

namespace {

CForm covariant_derivative_with(const CForm& x, int nu, int dim,
                                const Christoffel& kappa) {
  CForm out;
  for (const auto& [mask, c] : x.terms()) {
    out.add_term(mask, c.derivative(cv::x1 + (nu - 1)));
    // Leibniz over the wedge factors, replacing dx^s by -Gamma^s_{nu l} dx^l.
    for (int s = 0; s < 3; ++s) {
      if (!(mask & (1u << s))) continue;
      const unsigned prefix = mask & ((1u << s) - 1u);
      const unsigned suffix = mask & ~((1u << (s + 1)) - 1u);
      CForm replaced;
      for (int l = 0; l < dim; ++l)
        replaced.add_term(1u << l, Scalar(-1) * kappa[s][nu - 1][l]);
      out += wedge(CForm::monomial(prefix, c),
                   wedge(replaced, CForm::monomial(suffix, Scalar(1))));
    }
  }
  return out;
}

}  // namespace

CForm covariant_derivative(const CForm& x, int nu, const Metric& m) {
  if (nu < 1 || nu > m.dim)
    throw std::invalid_argument("covariant_derivative: index out of range");
  return covariant_derivative_with(x, nu, m.dim, christoffel(m));
}

CForm delta_diff(const CForm& x, const Metric& m) {
  const Christoffel kappa = christoffel(m);
  CForm out;
  for (int nu = 1; nu <= m.dim; ++nu) {
    const CForm grad = covariant_derivative_with(x, nu, m.dim, kappa);
    for (int mu = 1; mu <= m.dim; ++mu) {
      const Scalar& w = m.ginv[mu - 1][nu - 1];
      if (w.is_zero()) continue;
      out += w * interior(mu, grad);
    }
  }
  return out;
}

CForm delta_v(const CForm& x, const VectorField& v) {
  CForm out;
  for (int a = 1; a <= v.dim; ++a) {
    if (v.comp[a - 1].is_zero()) continue;
    out += v.comp[a - 1] * interior(a, x);
  }
  return out;
}

Scalar laplace_beltrami_residual(const Metric& m, const Scalar& f) {
  const Scalar lhs = delta_diff(d(CForm::fn(f)), m).coefficient(0u);
  Scalar rhs(0);
  for (int mu = 0; mu < m.dim; ++mu)
    for (int nu = 0; nu < m.dim; ++nu)
      rhs = rhs + m.ginv[mu][nu] * f.derivative(cv::x1 + nu).derivative(cv::x1 + mu);
  for (int k = 0; k < m.dim; ++k) {
    // d log det g / dx^lam = trace(g^{-1} dg/dx^lam) keeps everything rational.
    Scalar divergence(0);
    for (int lam = 0; lam < m.dim; ++lam) {
      Scalar trace(0);
      for (int mu = 0; mu < m.dim; ++mu)
        for (int nu = 0; nu < m.dim; ++nu)
          trace = trace + m.ginv[mu][nu] * m.g[nu][mu].derivative(cv::x1 + lam);
      divergence = divergence + Scalar::rational(1, 2) * m.ginv[k][lam] * trace;
    }
    for (int nu = 0; nu < m.dim; ++nu)
      divergence = divergence + m.ginv[k][nu].derivative(cv::x1 + nu);
    rhs = rhs + divergence * f.derivative(cv::x1 + k);
  }
  return lhs - rhs;
}

CForm lie_derivative_residual(const VectorField& v, const CForm& eta) {
  if (!eta.homogeneous(1))
    throw std::invalid_argument("lie_derivative_residual: eta must be a 1-form");
  CForm circulation = d(delta_v(eta, v)) + delta_v(d(eta), v);
  CForm lie;
  for (int b = 0; b < v.dim; ++b) {
    Scalar cb(0);
    for (int a = 0; a < v.dim; ++a) {
      cb = cb + v.comp[a].derivative(cv::x1 + b) * eta.coefficient(1u << a);
      cb = cb + v.comp[a] * eta.coefficient(1u << b).derivative(cv::x1 + a);
    }
    lie.add_term(1u << b, cb);
  }
  return circulation - lie;
}

}  // namespace defcal
