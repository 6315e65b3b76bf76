#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcal/qint.hpp"
#include "defcal/rng.hpp"
#include "defcal/scalar.hpp"

using namespace defcal;

namespace {

Scalar sparse(const char* text) { return parse_scalar(text, sphere_domain()); }

// Independent q-binomial oracle: the factorial expansion
// [n,k] = [n]! / ([k]! [n-k]!) computed with exact division.
Scalar qfact(int n) {
  Scalar f(1);
  for (int j = 1; j <= n; ++j) f *= qint(j);
  return f;
}
Scalar qbinom_oracle(int n, int k) { return qfact(n) / (qfact(k) * qfact(n - k)); }

Poly random_poly(SplitMix64& rng, int maxvars, bool allow_zero) {
  Poly p;
  int terms = int(rng.range(allow_zero ? 0 : 1, 4));
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (int v = 0; v < maxvars; ++v) m.e[v] = int16_t(rng.range(0, 3));
    long re = rng.range(-3, 3);
    long im = rng.below(4) == 0 ? rng.range(-2, 2) : 0;
    p.add_term(m, GaussQ(mpq_class(re), mpq_class(im)));
  }
  return p;
}

Scalar random_scalar(SplitMix64& rng) {
  Poly num = random_poly(rng, 3, true);
  Poly den = random_poly(rng, 2, false);
  if (den.is_zero()) den = Poly::constant(GaussQ(1));
  return Scalar(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("complex rational arithmetic") {
  GaussQ a(mpq_class(1), mpq_class(2));
  GaussQ b(mpq_class(3), mpq_class(-1));
  CHECK(a * b == GaussQ(mpq_class(5), mpq_class(5)));
  CHECK((a / b) * b == a);
  CHECK(a.conj() * a == GaussQ(mpq_class(5)));
  CHECK_THROWS_AS(a /= GaussQ(0), std::domain_error);
}

TEST_CASE("polynomial basics") {
  Poly q = Poly::variable(sv::q);
  Poly one = Poly::constant(GaussQ(1));
  Poly p = (one + q) * (one - q);
  CHECK(p == one - q * q);
  CHECK(p.degree(sv::q) == 2);
  CHECK(p.derivative(sv::q) == Poly::variable(sv::q).scale(GaussQ(-2)));
  CHECK(Poly::divide_exact(p, one + q) == one - q);
  CHECK_THROWS_AS(Poly::divide_exact(q, p), std::domain_error);
}

TEST_CASE("rational function canonical reduction") {
  CHECK(sparse("(1-q^4)/(1-q^2)") == sparse("1+q^2"));
  CHECK(sparse("(1+q^2)/(1-q^4)") == sparse("1/(1-q^2)"));
  CHECK(sparse("q^-1") * sparse("q") == Scalar(1));
  CHECK(sparse("(q^2-2*q+1)/(q-1)") == sparse("q-1"));
  // gcd across several variables
  CHECK(sparse("(alpha*q+alpha*beta)/(q+beta)") == sparse("alpha"));
  CHECK_THROWS_AS(sparse("1/(q-q)"), std::domain_error);
}

TEST_CASE("gcd property on random triples") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    Poly a = random_poly(rng, 3, false);
    Poly b = random_poly(rng, 3, false);
    Poly c = random_poly(rng, 3, false);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly g = Poly::gcd(a * c, b * c);
    // c divides gcd(ac, bc)
    Poly h = Poly::gcd(g, c);
    Poly cm = c;
    cm.scale(GaussQ(1) / c.leading_coeff());
    CHECK(h == cm);
  }
}

TEST_CASE("scalar field ops and derivatives") {
  Scalar q = Scalar::variable(sv::q);
  Scalar one(1);
  Scalar f = one / (one - q);
  CHECK(f.derivative(sv::q) == one / ((one - q) * (one - q)));
  CHECK(f.pow(-1) == one - q);
  CHECK((q.pow(2)).pow(-2) == Scalar::variable(sv::q, -4));
  Scalar mix = Scalar::variable(sv::alpha).pow(2) * q + Scalar::variable(sv::alpha) * (one + q);
  CHECK(mix.coeff_of(sv::alpha, 1) == one + q);
  CHECK(mix.coeff_of(sv::alpha, 2) == q);
  CHECK_THROWS_AS((one / Scalar::variable(sv::alpha)).coeff_of(sv::alpha, 0), std::domain_error);
}

TEST_CASE("q-integers and Gaussian binomials") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == Scalar(1));
  CHECK(qint(3) == sparse("1+q^2+q^4"));
  CHECK(qint(-2) == -qpow(-4) * qint(2));
  CHECK(qbinom(4, 2) == sparse("1+q^2+2*q^4+q^6+q^8"));
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinom(n, k) == qbinom_oracle(n, k));
      CHECK(qbinom(n, k) == qbinom(n, n - k));
      if (n > 0 && k > 0)
        CHECK(qbinom(n, k) == qbinom(n - 1, k) + qpow(2L * (n - k)) * qbinom(n - 1, k - 1));
    }
}

TEST_CASE("render/parse round trip") {
  CHECK(render(sparse("i*q^3"), sphere_domain()) == "i*q^3");
  CHECK(sparse("2/3*q^-1") == Scalar::rational(2, 3) * Scalar::variable(sv::q, -1));
  SplitMix64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Scalar x = random_scalar(rng);
    Scalar back = parse_scalar(render(x, sphere_domain()), sphere_domain());
    CHECK(back == x);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(sparse("q+"), std::invalid_argument);
  CHECK_THROWS_AS(sparse("(1+q"), std::invalid_argument);
  CHECK_THROWS_AS(sparse("zeta"), std::invalid_argument);
  CHECK_THROWS_AS(sparse("q^alpha"), std::invalid_argument);
  CHECK_THROWS_AS(sparse("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x1+q", coordinate_domain()), std::invalid_argument);
}
