// Expression grammar: published examples, error reporting, and seeded
// round-trips through the canonical renderers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "defcal/element_text.hpp"
#include "defcal/qint.hpp"

using namespace defcal;

namespace {

AlgElem mono(bool dfam, int n, int m, int p, const Scalar& c = Scalar(1)) {
  QMono k;
  k.dfam = dfam && n > 0;
  k.n = std::uint16_t(n);
  k.m = std::uint16_t(m);
  k.p = std::uint16_t(p);
  return AlgElem::monomial(k, c);
}

std::string offset_of(const char* text, auto parse) {
  try {
    parse(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("algebra expressions") {
  CHECK(parse_alg("q^2*a*b") == mono(false, 1, 1, 0, qpow(2)));
  CHECK(parse_alg("1 + q^-1*b*c") == AlgElem::one() + mono(false, 0, 1, 1, qpow(-1)));
  CHECK(parse_alg("-1") == AlgElem(Scalar(-1)));
  CHECK(parse_alg("a d") == parse_alg("1 + q^-1*b*c"));      // juxtaposition
  CHECK(parse_alg("b a") == qpow(1) * parse_alg("a*b"));     // reordering cost
  CHECK(parse_alg("(a + d)^2") == parse_alg("a^2 + a d + d a + d^2"));
  CHECK(parse_alg("2/3 * i * c") == mono(false, 0, 0, 1, Scalar::rational(2, 3) * Scalar::imag_unit()));
  CHECK(parse_alg("a/2") == mono(false, 1, 0, 0, Scalar::rational(1, 2)));
  CHECK(parse_alg("star(a*b)") == (AlgElem::generator('a') * AlgElem::generator('b')).star());
  CHECK(parse_alg("star(star(q*a + c))") == parse_alg("q*a + c"));
  CHECK(parse_alg("alpha*beta*1") == AlgElem(Scalar::variable(sv::alpha) * Scalar::variable(sv::beta)));
  CHECK(parse_alg("q^-2") == AlgElem(qpow(-2)));
  CHECK(parse_alg("0") == AlgElem{});
}

TEST_CASE("algebra expression errors carry offsets") {
  CHECK(offset_of("q^2*(a", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 6: expected ')'");
  CHECK(offset_of("a + e", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 4: unknown variable 'e'");
  CHECK(offset_of("a^-1", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 4: negative power of a non-scalar element");
  CHECK(offset_of("a / b", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 5: division by a non-scalar element");
  CHECK(offset_of("1/0", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 3: division by zero");
  CHECK(offset_of("a +", [](const char* s) { return parse_alg(s); }) ==
        "parse error at offset 3: unexpected end of input");
}

TEST_CASE("sphere form expressions") {
  // Frame coefficients sit to the right of their frame factor.
  CHECK(parse_sphere_form("e+ * a*b^3") ==
        SphereForm::one_form(mono(false, 1, 3, 0), {}));
  CHECK(parse_sphere_form("e-*c^3*d") ==
        SphereForm::one_form({}, mono(true, 1, 0, 3, qpow(-3))));
  CHECK(parse_sphere_form("e+^e-*(1 + b*c)") ==
        SphereForm::two_form(AlgElem::one() + mono(false, 0, 1, 1)));
  CHECK(parse_sphere_form("1 + q*b*c") ==
        SphereForm::fn(AlgElem::one() + mono(false, 0, 1, 1, qpow(1))));
  // Algebra letters written left of a frame factor slide across it.
  CHECK(parse_sphere_form("b^2 * e+") ==
        SphereForm::one_form(mono(false, 0, 2, 0, qpow(2)), {}));
  CHECK(parse_sphere_form("b*c*e+^e-") ==
        SphereForm::two_form(mono(false, 0, 1, 1)));
  // Frame wedge rules inside a term.
  CHECK(parse_sphere_form("e+ * b*c * e-") ==
        SphereForm::two_form(mono(false, 0, 1, 1)));
  CHECK(parse_sphere_form("e- * e+") ==
        Scalar(-1) * parse_sphere_form("q^2 * e+^e-"));
  CHECK(parse_sphere_form("e+*e+").is_zero());
  CHECK(parse_sphere_form("e+^e- * e+").is_zero());
  // Round-trip of a rendered mixed element.
  const SphereForm x = SphereForm::fn(mono(false, 0, 1, 1, qpow(-1))) +
                       SphereForm::one_form(mono(false, 0, 2, 0, Scalar(2)),
                                            mono(false, 2, 0, 0)) +
                       SphereForm::two_form(AlgElem::one());
  CHECK(parse_sphere_form(to_string(x)) == x);
}

TEST_CASE("sphere form grade checking") {
  CHECK_THROWS_WITH_AS(parse_sphere_form("e+ * a"),
                       "semantic error: the e+ coefficient must have grade -2, got +1",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(parse_sphere_form("a + 1"),
                       "semantic error: the function coefficient must have grade 0, got mixed grades",
                       std::domain_error);
  CHECK_THROWS_AS(parse_sphere_form("e- * b"), std::domain_error);
  CHECK_THROWS_AS(parse_sphere_form("e+^e- * c"), std::domain_error);
  CHECK_THROWS_AS(parse_sphere_form("e+^2"), std::invalid_argument);
  CHECK_NOTHROW(parse_sphere_form("e+ * b^2 + e- * c^2"));
}

TEST_CASE("coordinate form expressions") {
  CHECK(parse_cform("(2*x1) dx1 dx2") ==
        CForm::monomial(3, Scalar(2) * Scalar::variable(cv::x1)));
  CHECK(parse_cform("x1^2 - t") ==
        CForm::fn(Scalar::variable(cv::x1, 2) - Scalar::variable(cv::t)));
  CHECK(parse_cform("dx2 dx1") == Scalar(-1) * parse_cform("dx1 dx2"));
  CHECK(parse_cform("dx1 dx1").is_zero());
  CHECK(parse_cform("dx1 x2") == parse_cform("x2 * dx1"));
  CHECK(parse_cform("alpha*dx3 - dx3") ==
        CForm::dx(3, Scalar::variable(cv::alpha) - Scalar(1)));
  CHECK(parse_cform("(x1 + 1)^2 dx2") ==
        CForm::dx(2, (Scalar::variable(cv::x1) + Scalar(1)).pow(2)));
  CHECK(parse_cform("x1^-1 dx2", 2) == CForm::dx(2, Scalar::variable(cv::x1, -1)));
  CHECK(parse_cform("dx1/2") == CForm::dx(1, Scalar::rational(1, 2)));
  CHECK_THROWS_WITH_AS(parse_cform("dx3", 2),
                       "parse error at offset 3: differential 'dx3' exceeds the dimension",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_cform("dx1^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cform("q * dx1"), std::invalid_argument);
}

TEST_CASE("seeded round-trips through the renderers") {
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const AlgElem x = sample_alg(rng, 3);
    CAPTURE(to_string(x));
    CHECK(parse_alg(to_string(x)) == x);
  }
  for (int k = 0; k < 200; ++k) {
    const SphereForm x = sample_sphere_form(rng, 3);
    CAPTURE(to_string(x));
    CHECK(parse_sphere_form(to_string(x)) == x);
  }
  for (int dim = 1; dim <= 3; ++dim)
    for (int k = 0; k < 120; ++k) {
      const CForm x = sample_cform(rng, dim);
      CAPTURE(to_string(x));
      CHECK(parse_cform(to_string(x), dim) == x);
    }
}

TEST_CASE("scalar substitution") {
  const Scalar q = Scalar::variable(sv::q);
  const Scalar al = Scalar::variable(sv::alpha);
  const Scalar x = (qint(3) + al) * qpow(-2);
  const Scalar at2 = x.substitute(sv::q, Scalar(2));
  CHECK(at2 == (Scalar(21) + al) * Scalar::rational(1, 4));
  CHECK((q - Scalar(1)).substitute(sv::q, Scalar(1)).is_zero());
  CHECK_THROWS_AS((Scalar(1) / (q - Scalar(1))).substitute(sv::q, Scalar(1)),
                  std::domain_error);
  // Substituting an absent variable is the identity.
  CHECK(x.substitute(sv::s, Scalar(5)) == x);
}
