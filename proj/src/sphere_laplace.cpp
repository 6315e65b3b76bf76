#include "defcal/sphere_laplace.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "defcal/qint.hpp"

namespace defcal {

namespace {

#ifdef DEFCAL_INJECT_FAULT
// Deliberately wrong by one factor of q; used by fault-injection builds to
// prove the suites detect a broken contraction constant.
constexpr long kBetaContractionShift = 1;
#else
constexpr long kBetaContractionShift = 0;
#endif

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c) {
  if (c.is_zero() || n < 0 || m < 0 || p < 0) return {};
  QMono key;
  key.dfam = dfam && n > 0;
  key.n = std::uint16_t(n);
  key.m = std::uint16_t(m);
  key.p = std::uint16_t(p);
  return AlgElem::monomial(key, c);
}

// q^2-binomial ladder sums in x = b c.  `s` shifts the ladder: s = 0 for
// functions, s = ±2 for the frame components of 1-forms.
AlgElem ladder_a(int n, int k, int s) {
  AlgElem out;
  for (int r = 0; r <= k; ++r)
    out += mono(false, n, n + s + r, r,
                qpow(long(k - r) * (k - r)) * qbinom(k, r) *
                    qbinom(2 * n + k + r + s, n + r + s));
  return out;
}

AlgElem ladder_d(int n, int k, int s) {
  AlgElem out;
  for (int r = 0; r <= k; ++r)
    out += mono(true, n, r, n + s + r,
                qpow(long(k - r) * (2 * n + k - r)) * qbinom(k, r) *
                    qbinom(2 * n + k + r + s, n + r + s));
  return out;
}

Scalar spectral_unit(const MetricParams& par) {
  return par.beta + par.alpha * qpow(-2);
}

Scalar lam_fn(int n, int k, const MetricParams& par) {
  return spectral_unit(par) * qint(n + k + 1) * qint(n + k) *
         qpow(3 - 2 * n - 2 * k);
}

Scalar lam_up(int n, int k, const MetricParams& par) {
  return spectral_unit(par) * qint(n + k + 2) * qint(n + k + 1) *
         qpow(1 - 2 * n - 2 * k);
}

Scalar lam_down(int n, int k, const MetricParams& par) {
  return spectral_unit(par) * qint(n + k) * qint(n + k - 1) *
         qpow(5 - 2 * n - 2 * k);
}

Scalar lam_top(int n, int k, const MetricParams& par) {
  return (par.beta * par.eps + par.alpha * par.gamma * qpow(-8)) *
         qint(n + k + 1) * qint(n + k) * qpow(7 - 2 * n - 2 * k);
}

void require_index(bool ok, const char* what) {
  if (!ok) throw std::domain_error(std::string("eigenform: ") + what);
}

}  // namespace

MetricParams MetricParams::symbolic() {
  return {Scalar::variable(sv::alpha), Scalar::variable(sv::beta),
          Scalar::variable(sv::gamma), Scalar::variable(sv::eps)};
}

MetricParams MetricParams::simplified() {
  return {Scalar::variable(sv::alpha), Scalar::variable(sv::beta), qpow(2),
          qpow(-4)};
}

SphereForm delta(const SphereForm& x, const MetricParams& par) {
  SphereForm out;
  // Degree 1: metric contraction of the covariant derivative.  The alpha
  // pairing reads the minus-direction leg against a plus form leg, beta the
  // reverse; the crossing weights are fixed once by the closed formulas.
  if (!x.fp.is_zero() || !x.fm.is_zero()) {
    const FrameTensor t = nabla(SphereForm::one_form(x.fp, x.fm));
    out.c0 += par.alpha * t.z[1][0].grade_shift(1);
    out.c0 += (par.beta * qpow(kBetaContractionShift)) *
              t.z[0][1].grade_shift(1);
  }
  // Degree 2: differentiate the left coefficient, then close each frame
  // direction with the interior product.
  if (!x.c2.is_zero()) {
    const FrameDiff df = frame_d(x.c2.grade_shift(2));
    out += (par.alpha * qpow(-4)) *
           interior('+', SphereForm::two_form(df.minus), par.gamma, par.eps);
    out += (par.beta * qpow(4 + kBetaContractionShift)) *
           interior('-', SphereForm::two_form(df.plus), par.gamma, par.eps);
  }
  return out;
}

SphereForm laplacian(const SphereForm& x, const MetricParams& par) {
  return delta(d(x), par) + d(delta(x, par));
}

EigenForm eigenform(const std::string& family, int n, int k,
                    const MetricParams& par) {
  require_index(k >= 0, "summation bound must be nonnegative");
  EigenForm ef;
  ef.family = family;
  ef.n = n;
  ef.k = k;
  if (family == "fn-a") {
    require_index(n >= 1, "fn-a needs n >= 1");
    ef.form = SphereForm::fn(ladder_a(n, k, 0));
    ef.eigenvalue = lam_fn(n, k, par);
  } else if (family == "fn-d") {
    require_index(n >= 1, "fn-d needs n >= 1");
    ef.form = SphereForm::fn(ladder_d(n, k, 0));
    ef.eigenvalue = lam_fn(n, k, par);
  } else if (family == "fn-x") {
    require_index(n == 0, "fn-x needs n = 0");
    ef.form = SphereForm::fn(ladder_a(0, k, 0));
    ef.eigenvalue = lam_fn(0, k, par);
  } else if (family == "plus-a") {
    require_index(n >= 1, "plus-a needs n >= 1");
    ef.form = SphereForm::one_form(ladder_a(n, k, 2), {});
    ef.eigenvalue = lam_up(n, k, par);
  } else if (family == "minus-a") {
    require_index(n >= 2, "minus-a needs n >= 2");
    ef.form = SphereForm::one_form({}, ladder_a(n, k, -2));
    ef.eigenvalue = lam_down(n, k, par);
  } else if (family == "plus-d") {
    require_index(n >= 2, "plus-d needs n >= 2");
    ef.form = SphereForm::one_form(ladder_d(n, k, -2), {});
    ef.eigenvalue = lam_down(n, k, par);
  } else if (family == "minus-d") {
    require_index(n >= 1, "minus-d needs n >= 1");
    ef.form = SphereForm::one_form({}, ladder_d(n, k, 2));
    ef.eigenvalue = lam_up(n, k, par);
  } else if (family == "plus-b2") {
    require_index(n == 0, "plus-b2 needs n = 0");
    ef.form = SphereForm::one_form(ladder_a(0, k, 2), {});
    ef.eigenvalue = lam_up(0, k, par);
  } else if (family == "minus-c2") {
    require_index(n == 0, "minus-c2 needs n = 0");
    AlgElem f;
    for (int r = 0; r <= k; ++r)
      f += mono(false, 0, r, 2 + r,
                qpow(long(k - r) * (k - r)) * qbinom(k, r) *
                    qbinom(k + r + 2, r + 2));
    ef.form = SphereForm::one_form({}, f);
    ef.eigenvalue = lam_up(0, k, par);
  } else if (family == "plus-db") {
    require_index(n == 1, "plus-db needs n = 1");
    AlgElem f;
    for (int r = 0; r <= k; ++r)
      f += mono(true, 1, 1 + r, r,
                qpow(long(k - r) * (2 + k - r)) * qbinom(k, r) *
                    qbinom(k + r + 2, r + 1));
    ef.form = SphereForm::one_form(f, {});
    ef.eigenvalue = lam_up(0, k, par);
  } else if (family == "minus-ac") {
    require_index(n == 1, "minus-ac needs n = 1");
    AlgElem f;
    for (int r = 0; r <= k; ++r)
      f += mono(false, 1, r, 1 + r,
                qpow(long(k - r) * (k - r)) * qbinom(k, r) *
                    qbinom(k + r + 2, r + 1));
    ef.form = SphereForm::one_form({}, f);
    ef.eigenvalue = lam_up(0, k, par);
  } else if (family == "two-a") {
    require_index(n >= 1, "two-a needs n >= 1");
    ef.form = SphereForm::two_form(ladder_a(n, k, 0));
    ef.eigenvalue = lam_top(n, k, par);
  } else if (family == "two-d") {
    require_index(n >= 1, "two-d needs n >= 1");
    ef.form = SphereForm::two_form(ladder_d(n, k, 0));
    ef.eigenvalue = lam_top(n, k, par);
  } else if (family == "two-x") {
    require_index(n == 0, "two-x needs n = 0");
    ef.form = SphereForm::two_form(ladder_a(0, k, 0));
    ef.eigenvalue = lam_top(0, k, par);
  } else {
    throw std::invalid_argument("eigenform: unknown family " + family);
  }
  return ef;
}

SphereForm eigen_residual(const EigenForm& ef, const MetricParams& par) {
  return laplacian(ef.form, par) - ef.eigenvalue * ef.form;
}

bool verify_eigen(const EigenForm& ef, const MetricParams& par) {
  return eigen_residual(ef, par).is_zero();
}

std::vector<SphereForm> graded_monomial_basis(int degree, int bound) {
  if (degree < 0 || degree > 2)
    throw std::invalid_argument("graded_monomial_basis: degree must be 0..2");
  if (bound < 0)
    throw std::domain_error("graded_monomial_basis: negative bound");
  auto graded = [bound](int grade) {
    std::vector<AlgElem> out;
    for (int n = 0; n <= bound; ++n)
      for (int m = 0; m <= bound; ++m)
        for (int p = 0; p <= bound; ++p)
          if (n - m + p == grade) out.push_back(mono(false, n, m, p, Scalar(1)));
    for (int n = 1; n <= bound; ++n)
      for (int m = 0; m <= bound; ++m)
        for (int p = 0; p <= bound; ++p)
          if (p - n - m == grade) out.push_back(mono(true, n, m, p, Scalar(1)));
    return out;
  };
  std::vector<SphereForm> basis;
  if (degree == 0)
    for (const AlgElem& f : graded(0)) basis.push_back(SphereForm::fn(f));
  if (degree == 1) {
    for (const AlgElem& f : graded(-2))
      basis.push_back(SphereForm::one_form(f, {}));
    for (const AlgElem& f : graded(2))
      basis.push_back(SphereForm::one_form({}, f));
  }
  if (degree == 2)
    for (const AlgElem& f : graded(0)) basis.push_back(SphereForm::two_form(f));
  return basis;
}

std::vector<SphereForm> harmonic_kernel(int degree, int bound,
                                        const MetricParams& par) {
  const std::vector<SphereForm> basis = graded_monomial_basis(degree, bound);
  const int cols = int(basis.size());
  // Index every (component, monomial) slot hit by some image; the matrix of
  // the Laplacian is rectangular since images may leave the exponent box.
  std::map<std::pair<int, QMono>, int> row_of;
  std::vector<std::map<int, Scalar>> col_entries(cols);
  auto scan = [&](const AlgElem& f, int comp, int j) {
    for (const auto& [key, c] : f.terms()) {
      auto [it, fresh] = row_of.try_emplace({comp, key}, int(row_of.size()));
      (void)fresh;
      col_entries[j][it->second] = c;
    }
  };
  for (int j = 0; j < cols; ++j) {
    const SphereForm y = laplacian(basis[j], par);
    scan(y.c0, 0, j);
    scan(y.fp, 1, j);
    scan(y.fm, 2, j);
    scan(y.c2, 3, j);
  }
  const int rows = int(row_of.size());
  std::vector<std::vector<Scalar>> mat(rows, std::vector<Scalar>(cols));
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, c] : col_entries[j]) mat[i][j] = c;

  // Reduced row echelon form over the scalar field.
  std::vector<int> pivot_row_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int i = rank; i < rows; ++i)
      if (!mat[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[rank], mat[pr]);
    const Scalar piv = mat[rank][c];
    for (int j = c; j < cols; ++j) mat[rank][j] = mat[rank][j] / piv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || mat[i][c].is_zero()) continue;
      const Scalar f = mat[i][c];
      for (int j = c; j < cols; ++j) mat[i][j] -= f * mat[rank][j];
    }
    pivot_row_of_col[c] = rank;
    ++rank;
  }

  std::vector<SphereForm> kernel;
  for (int c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    SphereForm v = basis[c];
    for (int j = 0; j < cols; ++j)
      if (pivot_row_of_col[j] >= 0) {
        const Scalar coef = mat[pivot_row_of_col[j]][c];
        if (!coef.is_zero()) v += (Scalar(-1) * coef) * basis[j];
      }
    // Normalize on the first nonzero coefficient in component order.
    for (const AlgElem* part : {&v.c0, &v.fp, &v.fm, &v.c2})
      if (!part->is_zero()) {
        v = (Scalar(1) / part->terms().begin()->second) * v;
        break;
      }
    kernel.push_back(v);
  }
  return kernel;
}

SphereForm heat_step_residual(const SphereForm& x, const MetricParams& par) {
  return (Scalar(-1) * par.alpha) * laplacian(x, par);
}

}  // namespace defcal
