#include <random>

#include <doctest.h>

#include "qdt/cyclotomic.hpp"
#include "qdt/errors.hpp"
#include "qdt/motives.hpp"
#include "qdt/rational_motive.hpp"

using namespace qdt;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
RationalMotive R(const char* num, const char* den) { return RationalMotive::fraction(P(num), P(den)); }

RationalMotive random_motive(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), len(1, 3);
  auto poly = [&] {
    std::map<int, mpq_class> t;
    for (int i = 0, n = len(rng); i < n; ++i) t[expo(rng)] += coef(rng);
    return LaurentPoly::from_terms(t);
  };
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  return RationalMotive::fraction(poly(), den);
}

}  // namespace

TEST_CASE("laurent polynomial parsing and printing") {
  const LaurentPoly p = P("v^-2 + 1 + 3/2*v^3");
  CHECK(p.coefficient(-2) == 1);
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(3) == mpq_class(3, 2));
  CHECK(p.valuation() == -2);
  CHECK(p.degree() == 3);
  CHECK(P(p.to_string().c_str()) == p);
  CHECK(P("-v + 2").to_string() == "2 - v");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK_THROWS_AS(P("v^^2"), InvalidInput);
}

TEST_CASE("motive examples") {
  CHECK(gl_motive({1}) == RationalMotive(P("v^2 - 1")));
  CHECK(gl_motive({2}) == RationalMotive(P("v^2") * P("v^2 - 1") * P("v^4 - 1")));
  CHECK(gl_motive({1, 1}) == RationalMotive(P("v^2 - 1") * P("v^2 - 1")));
  CHECK(rep_space_motive(Quiver::loops(1), {2}) == RationalMotive(P("v^8")));
  CHECK(rep_space_motive(Quiver::kronecker(2), {1, 1}) == RationalMotive(P("v^4")));
  CHECK(rep_space_motive(Quiver::loops(0), {5}) == RationalMotive(1));
  for (const auto& d : nonzero_vectors_below({3, 2})) CHECK(inverse_gl_motive(d) * gl_motive(d) == RationalMotive(1));
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(2, 1) == P("v^2 + 1"));
  CHECK(qbinom(4, 2) == P("v^8 + v^6 + 2*v^4 + v^2 + 1"));
  CHECK(qbinom(5, 0) == LaurentPoly(1));
  CHECK_THROWS_AS(qbinom(2, 3), InvalidInput);
  const LaurentPoly L = LaurentPoly::v(2);
  for (int N = 1; N <= 12; ++N) {
    for (int n = 1; n <= N; ++n) {
      LaurentPoly Ln = 1;
      for (int i = 0; i < n; ++i) Ln *= L;
      const LaurentPoly rhs = qbinom(N - 1, n - 1) + (n <= N - 1 ? Ln * qbinom(N - 1, n) : LaurentPoly());
      CHECK(qbinom(N, n) == rhs);
    }
  }
}

TEST_CASE("alternating q-binomial identity") {
  for (int N = 0; N <= 12; ++N) {
    LaurentPoly s;
    for (int n = 0; n <= N; ++n) {
      const LaurentPoly t = qbinom(N, n).shifted(n * (n - 1));
      s += n % 2 == 0 ? t : -t;
    }
    CHECK(s == LaurentPoly(N == 0 ? 1 : 0));
  }
}

TEST_CASE("virtual projective spaces") {
  CHECK(proj_vir(1) == LaurentPoly(1));
  CHECK(proj_vir(2) == P("v + v^-1"));
  CHECK(proj_vir(3) == P("v^2 + 1 + v^-2"));
  CHECK_THROWS_AS(proj_vir(0), InvalidInput);
  for (int n = 1; n <= 10; ++n) {
    CHECK(proj_vir(n) * P("v - v^-1") == LaurentPoly::v(n) - LaurentPoly::v(-n));
  }
  CHECK(proj_space(3) == P("1 + v^2 + v^4"));
}

TEST_CASE("adams operations") {
  CHECK(RationalMotive(P("v")).adams(2) == RationalMotive(P("-v^2")));
  CHECK(RationalMotive(P("v")).adams(3) == RationalMotive(P("v^3")));
  CHECK(R("1", "v^2 - 1").adams(2) == R("1", "v^4 - 1"));
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const RationalMotive x = random_motive(rng);
    const RationalMotive y = random_motive(rng);
    for (int n = 1; n <= 5; ++n) {
      CHECK(x.bar().adams(n) == x.adams(n).bar());
      CHECK((x * y).adams(n) == x.adams(n) * y.adams(n));
      CHECK((x + y).adams(n) == x.adams(n) + y.adams(n));
      for (int m = 1; m <= 3; ++m) CHECK(x.adams(n).adams(m) == x.adams(n * m));
    }
  }
}

TEST_CASE("bar involution") {
  CHECK(RationalMotive(P("v^3")).bar() == RationalMotive(P("v^-3")));
  CHECK(RationalMotive(P("v + v^-1")).bar() == RationalMotive(P("v + v^-1")));
  CHECK(R("v^4 - 1", "v^2 - 1").bar() == RationalMotive(P("v^-2 + 1")));
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const RationalMotive x = random_motive(rng);
    CHECK(x.bar().bar() == x);
  }
}

TEST_CASE("canonical form") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const RationalMotive x = random_motive(rng);
    const RationalMotive y = random_motive(rng);
    // Renormalizing from the expanded form changes nothing.
    CHECK(RationalMotive::fraction(x.numerator(), x.denominator()) == x);
    const LaurentPoly den = x.denominator();
    CHECK(den.is_integral());
    CHECK(den.valuation() == 0);
    CHECK(den.leading_coefficient() > 0);
    CHECK(polynomial_gcd(x.numerator(), den).degree() == 0);
    // a/b = c/d iff ad = cb.
    const bool same = x.numerator() * y.denominator() == y.numerator() * x.denominator();
    CHECK((x == y) == same);
    CHECK((x - x).is_zero());
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(x + y == y + x);
  }
  CHECK(R("v^4 - 1", "v^2 - 1") == RationalMotive(P("v^2 + 1")));
  CHECK(R("2*v", "4*v^3 - 4*v").denominator() == P("v^2 - 1"));
  CHECK_THROWS_AS(R("1", "0"), InvalidInput);
  CHECK_THROWS_AS(RationalMotive().inverse(), InvalidInput);
}

TEST_CASE("evaluation") {
  CHECK(gl_motive({2}).evaluate(2) == 6);
  CHECK(RationalMotive(qbinom(2, 1)).evaluate(3) == 4);
  CHECK_THROWS_AS(R("1", "v^2 - 1").evaluate(1), PoleError);
  CHECK_THROWS_AS(RationalMotive(P("v")).evaluate(2), OddParityEvaluation);
  CHECK(RationalMotive(P("v")).evaluate(4) == 2);
  CHECK(RationalMotive(P("v^-1 + v^3")).evaluate(mpq_class(9, 4)) == mpq_class(2, 3) + mpq_class(27, 8));
}

TEST_CASE("cyclotomic factorization") {
  for (int n = 1; n <= 12; ++n) CHECK(cyclo_expand(factor_L_power_minus_one(n)) == LaurentPoly::v(2 * n) - 1);
  CHECK(cyclotomic(1) == P("v - 1"));
  CHECK(cyclotomic(6) == P("v^2 - v + 1"));
  const auto [f, rest] = strip_cyclotomic_factors(P("v^2 - 1") * P("v^2 + 3"));
  CHECK(rest == P("v^2 + 3"));
  CHECK(cyclo_expand(f) == P("v^2 - 1"));
}
