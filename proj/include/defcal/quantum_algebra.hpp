#pragma once
// quantum_algebra.hpp — the q-deformed coordinate algebra underlying the
// quantum sphere, with normal-form rewriting, grading, and the star
// structure.
//
// Defining relations (generators a, b, c, d):
//   ba = q ab   ca = q ac   db = q bd   dc = q cd   cb = bc
//   ad = 1 + q^{-1} bc      da = 1 + q bc
// Normal form: a^n b^m c^p  or  d^n b^m c^p (n >= 1); every element is a
// finite Scalar-combination of these monomials.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "defcal/scalar.hpp"

namespace defcal {

struct QMono {
  bool dfam = false;  // false: a^n b^m c^p, true: d^n b^m c^p (n >= 1)
  uint16_t n = 0, m = 0, p = 0;

  friend auto operator<=>(const QMono&, const QMono&) = default;

  // Degree under the grading a,c -> +1, b,d -> -1; the sphere subalgebra is
  // grade zero.
  int grade() const { return (dfam ? -int(n) : int(n)) - int(m) + int(p); }

  std::string word() const;  // letter expansion, e.g. {A,2,1,0} -> "aab"
};

class AlgElem {
public:
  AlgElem() = default;
  explicit AlgElem(Scalar c) { add_term(QMono{}, c); }

  static AlgElem one() { return AlgElem(Scalar(1)); }
  static AlgElem generator(char g);
  static AlgElem monomial(const QMono& m, const Scalar& c = Scalar(1));
  // Normalizes an arbitrary word over {a,b,c,d} via the rewriting engine.
  static AlgElem from_word(std::string_view w, const Scalar& c = Scalar(1));

  const std::map<QMono, Scalar>& terms() const noexcept { return _t; }
  bool is_zero() const { return _t.empty(); }
  void add_term(const QMono& m, const Scalar& c);

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem operator-() const;
  friend AlgElem operator+(AlgElem x, const AlgElem& y) { return x += y; }
  friend AlgElem operator-(AlgElem x, const AlgElem& y) { return x -= y; }
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const Scalar& c, AlgElem x);

  friend bool operator==(const AlgElem& x, const AlgElem& y) { return x._t == y._t; }

  AlgElem star() const;

  // Multiplies each term by q^(s * grade); this is the commutation factor an
  // element picks up when it slides past a frame generator (s = -1) or a
  // frame 2-form (s = -2).
  AlgElem grade_shift(int s) const;

  // True when every term has the given grade (zero element: any grade).
  bool has_grade(int g) const;
  bool grade_zero() const { return has_grade(0); }

private:
  std::map<QMono, Scalar> _t;
};

std::string to_string(const AlgElem& x);

}  // namespace defcal
