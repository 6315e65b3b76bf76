// Adapter presenting the quantum-sphere calculus to the time-extension
// layer.  The codifferential (and hence the induced Laplacian) carries the
// contraction weights stored in params; scalars may depend polynomially on
// the time variable.
#pragma once

#include "defcal/deform.hpp"
#include "defcal/sphere_laplace.hpp"

namespace defcal {

struct SphereBackend {
  using Element = SphereForm;

  MetricParams params = MetricParams::symbolic();

  int top_degree() const { return 2; }

  SphereForm component(const SphereForm& x, int n) const {
    switch (n) {
      case 0: return SphereForm::fn(x.c0);
      case 1: return SphereForm::one_form(x.fp, x.fm);
      case 2: return SphereForm::two_form(x.c2);
      default: return {};
    }
  }

  SphereForm d(const SphereForm& x) const { return defcal::d(x); }
  SphereForm delta(const SphereForm& x) const { return defcal::delta(x, params); }
  SphereForm wedge(const SphereForm& x, const SphereForm& y) const {
    return defcal::wedge(x, y);
  }

  SphereForm time_derivative(const SphereForm& x) const {
    SphereForm out;
    out.c0 = diff_elem(x.c0);
    out.fp = diff_elem(x.fp);
    out.fm = diff_elem(x.fm);
    out.c2 = diff_elem(x.c2);
    return out;
  }

  bool is_zero(const SphereForm& x) const { return x.is_zero(); }

 private:
  static AlgElem diff_elem(const AlgElem& f) {
    AlgElem out;
    for (const auto& [key, c] : f.terms()) out.add_term(key, c.derivative(sv::t));
    return out;
  }
};

}  // namespace defcal
