#include "defcal/sphere_forms.hpp"

#include <stdexcept>

#include "defcal/qint.hpp"

namespace defcal {

// ---------------------------------------------------------------------------
// SphereForm basics
// ---------------------------------------------------------------------------

SphereForm SphereForm::fn(AlgElem f) {
  SphereForm x;
  x.c0 = std::move(f);
  return x;
}

SphereForm SphereForm::one_form(AlgElem plus, AlgElem minus) {
  SphereForm x;
  x.fp = std::move(plus);
  x.fm = std::move(minus);
  return x;
}

SphereForm SphereForm::two_form(AlgElem g) {
  SphereForm x;
  x.c2 = std::move(g);
  return x;
}

bool SphereForm::is_zero() const {
  return c0.is_zero() && fp.is_zero() && fm.is_zero() && c2.is_zero();
}

bool SphereForm::homogeneous(int k) const {
  if (k != 0 && !c0.is_zero()) return false;
  if (k != 1 && !(fp.is_zero() && fm.is_zero())) return false;
  if (k != 2 && !c2.is_zero()) return false;
  return true;
}

SphereForm SphereForm::degree_part(int k) const {
  switch (k) {
    case 0: return fn(c0);
    case 1: return one_form(fp, fm);
    case 2: return two_form(c2);
    default: return {};
  }
}

bool SphereForm::grade_valid() const {
  return c0.has_grade(0) && fp.has_grade(-2) && fm.has_grade(2) &&
         c2.has_grade(0);
}

SphereForm& SphereForm::operator+=(const SphereForm& o) {
  c0 += o.c0;
  fp += o.fp;
  fm += o.fm;
  c2 += o.c2;
  return *this;
}

SphereForm& SphereForm::operator-=(const SphereForm& o) {
  c0 -= o.c0;
  fp -= o.fp;
  fm -= o.fm;
  c2 -= o.c2;
  return *this;
}

SphereForm SphereForm::operator-() const {
  SphereForm x;
  x.c0 = -c0;
  x.fp = -fp;
  x.fm = -fm;
  x.c2 = -c2;
  return x;
}

SphereForm operator*(const Scalar& c, SphereForm x) {
  x.c0 = c * x.c0;
  x.fp = c * x.fp;
  x.fm = c * x.fm;
  x.c2 = c * x.c2;
  return x;
}

// ---------------------------------------------------------------------------
// Wedge product
// ---------------------------------------------------------------------------

SphereForm wedge(const SphereForm& x, const SphereForm& y) {
  SphereForm out;

  // (0,k): f ^ (e^s g) = q^{-|f|}_per_leg, i.e. shift f by one leg per frame
  // generator crossed, then multiply on the left of the coefficient.
  out.c0 = x.c0 * y.c0;

  out.fp = x.c0.grade_shift(-1) * y.fp + x.fp * y.c0;
  out.fm = x.c0.grade_shift(-1) * y.fm + x.fm * y.c0;

  // (1,1): e+ f ^ e- g = q^{-|f|} (e+^e-) f g ;
  //        e- f ^ e+ g = -q^2 q^{-|f|} (e+^e-) f g ; like-sign pairs vanish.
  out.c2 = x.c0.grade_shift(-2) * y.c2 + x.c2 * y.c0 +
           x.fp.grade_shift(-1) * y.fm -
           qpow(2) * (x.fm.grade_shift(-1) * y.fp);

  return out;
}

// ---------------------------------------------------------------------------
// Differential
// ---------------------------------------------------------------------------

namespace {

struct LetterRule {
  int sign;    // 0: e+, 1: e-
  char image;  // replacement letter
  long power;  // power of q
};

LetterRule letter_rule(char g) {
  switch (g) {
    case 'a': return {0, 'b', 2};
    case 'b': return {1, 'a', -1};
    case 'c': return {0, 'd', 2};
    case 'd': return {1, 'c', -1};
    default: throw std::invalid_argument("forms: unknown generator letter");
  }
}

int letter_grade(char g) { return (g == 'a' || g == 'c') ? 1 : -1; }

}  // namespace

FrameDiff frame_d(const AlgElem& f) {
  FrameDiff out;
  for (const auto& [mono, coef] : f.terms()) {
    const std::string w = mono.word();
    int prefix_grade = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // d(prefix g suffix) picks up e^s from the middle letter; commuting the
      // prefix across the frame generator costs q^{-|prefix|}.
      const LetterRule r = letter_rule(w[i]);
      std::string image = w;
      image[i] = r.image;
      AlgElem term =
          AlgElem::from_word(image, qpow(r.power - prefix_grade) * coef);
      if (r.sign == 0)
        out.plus += term;
      else
        out.minus += term;
      prefix_grade += letter_grade(w[i]);
    }
  }
  return out;
}

SphereForm d(const SphereForm& x) {
  SphereForm out;

  FrameDiff d0 = frame_d(x.c0);
  out.fp = std::move(d0.plus);
  out.fm = std::move(d0.minus);

  // d(e+ fp) = -e+ ^ d fp = -(e+^e-) B(fp);
  // d(e- fm) = -e- ^ d fm = +q^2 (e+^e-) A(fm).
  out.c2 = qpow(2) * frame_d(x.fm).plus - frame_d(x.fp).minus;

  return out;
}

// ---------------------------------------------------------------------------
// Interior product
// ---------------------------------------------------------------------------

SphereForm interior(char sign, const SphereForm& x, const Scalar& gamma,
                    const Scalar& eps) {
  if (!x.c0.is_zero())
    throw std::domain_error("interior: degree 0 input");
  SphereForm out;
  switch (sign) {
    case '+':
      out.c0 = x.fp;
      out.fm = gamma * x.c2;
      break;
    case '-':
      out.c0 = x.fm;
      out.fp = -eps * x.c2;
      break;
    default:
      throw std::invalid_argument("interior: sign must be '+' or '-'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor square of the 1-forms
// ---------------------------------------------------------------------------

FrameTensor& FrameTensor::operator+=(const FrameTensor& o) {
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r) z[s][r] += o.z[s][r];
  return *this;
}

FrameTensor& FrameTensor::operator-=(const FrameTensor& o) {
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r) z[s][r] -= o.z[s][r];
  return *this;
}

bool FrameTensor::is_zero() const {
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r)
      if (!z[s][r].is_zero()) return false;
  return true;
}

FrameTensor tensor_of(const SphereForm& left, const SphereForm& right) {
  if (!left.homogeneous(1) || !right.homogeneous(1))
    throw std::domain_error("tensor_of: degree 1 factors required");
  // (e^s x) (x) (e^r y) = e^s (x) (x . e^r y) = q^{-|x|} e^s (x) e^r (x y).
  FrameTensor t;
  const AlgElem ls[2] = {left.fp.grade_shift(-1), left.fm.grade_shift(-1)};
  const AlgElem* rs[2] = {&right.fp, &right.fm};
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r) t.z[s][r] = ls[s] * (*rs[r]);
  return t;
}

FrameTensor left_mult(const AlgElem& h, const FrameTensor& t) {
  FrameTensor out;
  const AlgElem hs = h.grade_shift(-2);
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < 2; ++r) out.z[s][r] = hs * t.z[s][r];
  return out;
}

FrameTensor nabla(const SphereForm& x) {
  if (!x.homogeneous(1))
    throw std::domain_error("nabla: degree 1 input required");
  FrameTensor t;
  const FrameDiff dp = frame_d(x.fp);
  const FrameDiff dm = frame_d(x.fm);
  const Scalar wplus = qpow(-2), wminus = qpow(2);
  t.z[0][0] = wplus * dp.plus.grade_shift(-1);
  t.z[1][0] = wplus * dp.minus.grade_shift(-1);
  t.z[0][1] = wminus * dm.plus.grade_shift(-1);
  t.z[1][1] = wminus * dm.minus.grade_shift(-1);
  return t;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

// Coefficients that are a single product term attach bare; sums get wrapped.
void append_component(std::string& s, const char* head, const AlgElem& f) {
  if (f.is_zero()) return;
  std::string body = to_string(f);
  if (!s.empty()) s += " + ";
  s += head;
  if (f.terms().size() == 1 && body[0] != '-' &&
      body.find(" + ") == std::string::npos &&
      body.find(" - ") == std::string::npos)
    s += "*" + body;
  else
    s += "*(" + body + ")";
}

}  // namespace

std::string to_string(const SphereForm& x) {
  std::string s;
  if (!x.c0.is_zero()) s = to_string(x.c0);
  append_component(s, "e+", x.fp);
  append_component(s, "e-", x.fm);
  append_component(s, "e+^e-", x.c2);
  return s.empty() ? "0" : s;
}

std::string to_string(const FrameTensor& t) {
  static const char* leg[2] = {"e+", "e-"};
  std::string s;
  for (int a = 0; a < 2; ++a)
    for (int r = 0; r < 2; ++r) {
      if (t.z[a][r].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += std::string(leg[a]) + " (x) " + leg[r] + "*(" + to_string(t.z[a][r]) +
           ")";
    }
  return s.empty() ? "0" : s;
}

}  // namespace defcal
