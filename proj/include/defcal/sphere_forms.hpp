// Differential forms on the quantum sphere: the two-dimensional calculus
// generated over the coordinate algebra by the frame pair e+, e-.
//
// A general element is stored with right coefficients,
//
//     x  =  c0  +  e+ . fp  +  e- . fm  +  (e+^e-) . c2 ,
//
// where c0, fp, fm, c2 live in the ambient quantum algebra.  Moving an
// algebra element across a frame generator costs a power of q per unit of
// grade: e± f = q^{|f|} f e±, and e+^e- f = q^{2|f|} f e+^e-.  The frame
// relations are e± ^ e± = 0 and e- ^ e+ = -q^2 e+ ^ e-.
//
// A form is *grade valid* (lives on the sphere rather than the ambient
// algebra) when c0 and c2 have grade 0, fp has grade -2 and fm has grade +2.
// The differential satisfies d.d = 0 on grade-valid forms; on ambient
// monomials it is the formal term-by-term operator used by the closed
// formulas, and no vanishing of d.d is implied.

#pragma once

#include "defcal/quantum_algebra.hpp"

namespace defcal {

struct SphereForm {
  AlgElem c0;  // degree 0
  AlgElem fp;  // degree 1, coefficient of e+
  AlgElem fm;  // degree 1, coefficient of e-
  AlgElem c2;  // degree 2, coefficient of e+^e-

  SphereForm() = default;

  static SphereForm fn(AlgElem f);                       // 0-form
  static SphereForm one_form(AlgElem plus, AlgElem minus);
  static SphereForm two_form(AlgElem g);

  bool is_zero() const;
  // True when every nonzero component sits in degree k.
  bool homogeneous(int k) const;
  SphereForm degree_part(int k) const;
  bool grade_valid() const;

  SphereForm& operator+=(const SphereForm& o);
  SphereForm& operator-=(const SphereForm& o);
  SphereForm operator-() const;
  friend SphereForm operator+(SphereForm x, const SphereForm& y) { return x += y; }
  friend SphereForm operator-(SphereForm x, const SphereForm& y) { return x -= y; }
  friend SphereForm operator*(const Scalar& c, SphereForm x);
  friend bool operator==(const SphereForm& x, const SphereForm& y) = default;
};

// Graded product.  Components of combined degree > 2 vanish.
SphereForm wedge(const SphereForm& x, const SphereForm& y);

// d f = e+ . plus + e- . minus for an algebra element f, built letter by
// letter from d a = q^2 e+ b,  d b = q^{-1} e- a,  d c = q^2 e+ d,
// d d = q^{-1} e- c and the graded Leibniz rule.
struct FrameDiff {
  AlgElem plus, minus;
};
FrameDiff frame_d(const AlgElem& f);

// Exterior differential: frame generators are closed, so on a 1-form
// d(e+ fp + e- fm) = (e+^e-)(q^2 A(fm) - B(fp)) with d f = e+ A + e- B,
// and every 2-form is closed.
SphereForm d(const SphereForm& x);

// Interior product with the frame vector field v^+ (sign '+') or v^- ('-'):
// evaluation duality in degree 1, and in degree 2
//   v+ _| (e+^e-) g = gamma e- g,   v- _| (e+^e-) g = -eps e+ g.
// A nonzero degree-0 part is a domain error.
SphereForm interior(char sign, const SphereForm& x, const Scalar& gamma,
                    const Scalar& eps);

// Element of the balanced tensor square of the 1-forms, normalised so the
// first leg is a bare frame generator:  sum of e^s (x) (e^r . z[s][r]),
// index 0 <-> e+, 1 <-> e-.  The balancing relation (w . f) (x) y = w (x) (f . y)
// pushes all algebra coefficients into the right leg.
struct FrameTensor {
  AlgElem z[2][2];

  FrameTensor& operator+=(const FrameTensor& o);
  FrameTensor& operator-=(const FrameTensor& o);
  friend FrameTensor operator+(FrameTensor x, const FrameTensor& y) { return x += y; }
  friend FrameTensor operator-(FrameTensor x, const FrameTensor& y) { return x -= y; }
  friend bool operator==(const FrameTensor& x, const FrameTensor& y) {
    return x.z[0][0] == y.z[0][0] && x.z[0][1] == y.z[0][1] &&
           x.z[1][0] == y.z[1][0] && x.z[1][1] == y.z[1][1];
  }
  bool is_zero() const;
};

// left (x) right for two 1-forms, in normalised FrameTensor form.
FrameTensor tensor_of(const SphereForm& left, const SphereForm& right);

// Left action of an algebra element on a tensor: h . (e^s (x) e^r z) =
// q^{-2|h|} e^s (x) (e^r h z), i.e. z -> grade_shift(h,-2) * z termwise.
FrameTensor left_mult(const AlgElem& h, const FrameTensor& t);

// Covariant derivative of a 1-form with frame-parallel connection:
//   nabla(e+ fp + e- fm) = q^{-2} d(fp) (x) e+  +  q^2 d(fm) (x) e- .
// The input must be homogeneous of degree 1.
FrameTensor nabla(const SphereForm& x);

std::string to_string(const SphereForm& x);
std::string to_string(const FrameTensor& t);

}  // namespace defcal
