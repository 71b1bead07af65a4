#include <doctest.h>

#include "oracles.hpp"
#include "qdt/dt.hpp"
#include "qdt/errors.hpp"
#include "qdt/motives.hpp"

using namespace qdt;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
RationalMotive R(const char* num, const char* den) { return RationalMotive::fraction(P(num), P(den)); }
const StabilityWeights kKing{{1, -1}};

}  // namespace

TEST_CASE("stack motives") {
  CHECK(stack_motive(Quiver::loops(0), {1}) == R("1", "v^2 - 1"));
  CHECK(stack_motive(Quiver::loops(1), {1}) == R("v^2", "v^2 - 1"));
  CHECK(stack_motive(Quiver::loops(1), {2}) == R("v^6", "v^6 - v^4 - v^2 + 1"));
}

TEST_CASE("semistable stack motives") {
  CHECK(ss_stack_motive(Quiver::kronecker(2), kKing, {1, 1}) == R("v^2 + 1", "v^2 - 1"));
  CHECK(ss_stack_motive(Quiver::kronecker(1), kKing, {1, 1}) == R("1", "v^2 - 1"));
  const Quiver q({{0, 2, 1}, {0, 0, 1}, {0, 0, 0}});
  for (std::size_t i = 0; i < 3; ++i) {
    const DimVector e = DimVector::unit(3, i);
    CHECK(ss_stack_motive(q, {{2, 0, -1}}, e) == stack_motive(q, e));
  }
  // Trivial weights: everything is semistable.
  for (const auto& d : nonzero_vectors_below({2, 2})) {
    CHECK(ss_stack_motive(Quiver::kronecker(2), {{0, 0}}, d) == stack_motive(Quiver::kronecker(2), d));
  }
}

TEST_CASE("dt of loop quivers") {
  const DTResult zero = dt_series(Quiver::loops(0), std::nullopt, std::nullopt, {6});
  CHECK(zero.omega.at({1}) == RationalMotive(1));
  for (int d = 2; d <= 6; ++d) CHECK(zero.omega.at({d}).is_zero());
  const DTResult one = dt_series(Quiver::loops(1), std::nullopt, std::nullopt, {6});
  CHECK(one.omega.at({1}) == RationalMotive(P("v")));
  for (int d = 2; d <= 6; ++d) CHECK(one.omega.at({d}).is_zero());
  for (int m = 0; m <= 4; ++m) {
    CHECK(dt_series(Quiver::loops(m), std::nullopt, std::nullopt, {1}).omega.at({1}) == RationalMotive(LaurentPoly::v(m)));
  }
  const DTResult two = dt_series(Quiver::loops(2), std::nullopt, std::nullopt, {6});
  CHECK(check_integrality(two).ok());
  CHECK(two.omega.at({2}) == RationalMotive(P("v^5")));
  CHECK(two.omega.size() == 6);
}

TEST_CASE("dt of kronecker quivers") {
  for (int m = 1; m <= 4; ++m) {
    const DTResult r = dt_series(Quiver::kronecker(m), kKing, mpq_class(0), {3, 3});
    CHECK(r.omega.at({1, 1}) == RationalMotive(proj_vir(m)));
    CHECK(r.omega.size() == 3);
    CHECK(check_integrality(r).ok());
  }
  // Slope 1/3 class of the 3-Kronecker: only (2,1) below (2,2).
  const DTResult r = dt_series(Quiver::kronecker(3), kKing, mpq_class(1, 3), {2, 2});
  REQUIRE(r.omega.size() == 1);
  CHECK(r.omega.at({2, 1}) == RationalMotive(P("v^-2 + 1 + v^2")));
}

TEST_CASE("dt preconditions") {
  CHECK_THROWS_AS(dt_series(Quiver::kronecker(2), std::nullopt, std::nullopt, {1, 1}), SymmetryViolation);
  CHECK_THROWS_AS(dt_series(Quiver::kronecker(2), kKing, std::nullopt, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(dt_series(Quiver::kronecker(1), StabilityWeights{{1, 1}}, mpq_class(1), {1, 1}), GenericityViolation);
  CHECK_THROWS_AS(dt_series(Quiver::kronecker(2), kKing, mpq_class(7), {1, 1}), EmptySlopeClass);
  CHECK_THROWS_AS(dt_series(Quiver::loops(1), std::nullopt, std::nullopt, {1, 1}), InvalidInput);
}

TEST_CASE("sym reconstruction reproduces the stack series") {
  for (int m = 0; m <= 3; ++m) {
    const DTResult r = dt_series(Quiver::loops(m), std::nullopt, std::nullopt, {5});
    CHECK(sym_reconstruction(r) == stack_series(Quiver::loops(m), std::nullopt, std::nullopt, {5}));
  }
  const Quiver sym({{1, 1}, {1, 0}});
  const DTResult r = dt_series(sym, std::nullopt, std::nullopt, {3, 3});
  CHECK(sym_reconstruction(r) == stack_series(sym, std::nullopt, std::nullopt, {3, 3}));
  CHECK(check_integrality(r).ok());
  CHECK(check_positivity(r).ok());
}

TEST_CASE("serial and parallel dt agree") {
  const Quiver sym({{2, 1}, {1, 0}});
  CHECK(dt_series(sym, std::nullopt, std::nullopt, {3, 3}, Exec::serial) ==
        dt_series(sym, std::nullopt, std::nullopt, {3, 3}, Exec::parallel));
  CHECK(dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {3, 3}, Exec::serial) ==
        dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {3, 3}, Exec::parallel));
}

TEST_CASE("integrality audit") {
  DTResult r = dt_series(Quiver::loops(2), std::nullopt, std::nullopt, {6});
  CHECK(check_integrality(r).ok());
  r.omega.at({3}) = R("1", "v^2 - 1");
  const auto rep = check_integrality(r);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == DimVector{3});
  CHECK_THROWS_AS(check_positivity(r), NonIntegralError);
  CHECK_THROWS_AS(check_unimodular(r), NonIntegralError);
}

TEST_CASE("positivity audit") {
  const DTResult one = dt_series(Quiver::loops(1), std::nullopt, std::nullopt, {1});
  const auto p1 = check_positivity(one);
  CHECK(p1.ok());
  CHECK(p1.entries.at(0).parity == Parity::odd);
  DTResult k = dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {1, 1});
  CHECK(check_positivity(k).entries.at(0).parity == Parity::even);
  k.omega.at({1, 1}) = RationalMotive(P("v - 1"));
  const auto bad = check_positivity(k);
  CHECK_FALSE(bad.ok());
  CHECK(bad.entries.at(0).parity == Parity::mixed);
  CHECK_FALSE(bad.entries.at(0).nonnegative);
  CHECK(bad.violations() == std::vector<DimVector>{{1, 1}});
}

TEST_CASE("unimodality audit") {
  CHECK(is_palindromic(P("v^-2 + 1 + v^2")));
  CHECK(is_unimodal(P("v^-2 + 1 + v^2")));
  CHECK(is_palindromic(P("v + v^-1")));
  CHECK(is_unimodal(P("v^-2 + 2 + v^2")));
  CHECK_FALSE(is_palindromic(P("1 + 2*v^4")));
  CHECK_FALSE(is_unimodal(P("2 + v^2 + 2*v^4")));
  const DTResult k = dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {3, 3});
  CHECK(check_unimodular(k).ok());
}

TEST_CASE("betti extraction") {
  const DTResult k = dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {1, 1});
  const auto& w = k.omega.at({1, 1});
  CHECK(moduli_dimension(Quiver::kronecker(3), {1, 1}) == 2);
  CHECK(ic_betti(w, 2) == std::map<int, mpz_class>{{0, 1}, {2, 1}, {4, 1}});
  CHECK(euler_specialization(w) == 3);
  CHECK_THROWS_AS(ic_betti(w, 1), ParityViolation);
  CHECK_THROWS_AS(ic_betti(RationalMotive(P("v - 1")), 1), ParityViolation);
  CHECK_THROWS_AS(ic_betti(RationalMotive(P("-v")), 1), ParityViolation);
  CHECK_THROWS_AS(ic_betti(R("1", "v^2 - 1"), 0), NonIntegralError);
  CHECK(ic_betti(RationalMotive(), 3).empty());
  // P^(m-1) for the m-Kronecker.
  for (int m = 1; m <= 5; ++m) {
    const auto b = ic_betti(RationalMotive(proj_vir(m)), m - 1);
    CHECK(b.size() == static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) CHECK(b.at(2 * i) == 1);
  }
}

TEST_CASE("framed series") {
  const DTResult zero = dt_series(Quiver::loops(0), std::nullopt, std::nullopt, {5});
  for (int f = 1; f <= 4; ++f) {
    const auto s = framed_series(zero, {f}, false);
    for (int d = 0; d <= 5; ++d) {
      const LaurentPoly expected = d <= f ? qbinom(f, d).shifted(d * d) : LaurentPoly();
      CHECK(s[DimVector{d}] == RationalMotive(expected));
    }
  }
  const auto n2 = framed_series(zero, {2}, true);
  CHECK(n2[DimVector{1}] == RationalMotive(P("v + v^-1")));
  CHECK(n2[DimVector{2}] == RationalMotive(1));
  CHECK(framed_series(zero, {2}, false)[DimVector{1}] == RationalMotive(P("v + v^3")));
  CHECK_THROWS_AS(framed_series(zero, {1}, true), FramingViolation);
  CHECK_THROWS_AS(framed_series(zero, {0}, false), FramingViolation);
  CHECK_THROWS_AS(framed_series(Quiver::loops(0), std::nullopt, std::nullopt, {3}, {4}, true), FramingViolation);
  // All Omega zero beyond d = 0 gives the series 1.
  DTResult empty = zero;
  for (auto& [d, w] : empty.omega) w = RationalMotive();
  CHECK(framed_series(empty, {3}, false) == TruncatedSeries::one({5}));
}

TEST_CASE("framed series of the one-loop quiver") {
  // Framed one-loop moduli are noncommutative Hilbert schemes of points on A^1,
  // i.e. Hilb^d(A^1) = A^d for f = 1.
  const DTResult one = dt_series(Quiver::loops(1), std::nullopt, std::nullopt, {4});
  const auto s = framed_series(one, {1}, false);
  for (int d = 1; d <= 4; ++d) CHECK(s[DimVector{d}] == RationalMotive(LaurentPoly::v(2 * d)));
}

TEST_CASE("local dt") {
  const auto a = local_dt({{{1}}, {1}, std::nullopt}, {3});
  CHECK(a[DimVector{1}] == RationalMotive(1));
  CHECK(a[DimVector{2}].is_zero());
  const auto b = local_dt({{{0}}, {1}, std::nullopt}, {3});
  CHECK(b[DimVector{1}] == RationalMotive(P("v^-1")));
  const auto c = local_dt({{{1, 0}, {0, 1}}, {1, 1}, std::nullopt}, {2, 2});
  CHECK(c.nonzero_terms().size() == 2);
  CHECK(c[DimVector{1, 0}] == RationalMotive(1));
  CHECK(c[DimVector{0, 1}] == RationalMotive(1));
}

TEST_CASE("nullcone bound") {
  CHECK(nullcone_bound(Quiver::loops(1), {2}) == -2);
  CHECK(nullcone_bound(Quiver::loops(2), {1}) == -1);
  CHECK(nullcone_bound(Quiver::loops(0), {3}) == -6);
  CHECK_THROWS_AS(nullcone_bound(Quiver::kronecker(1), {1, 1}), SymmetryViolation);
  CHECK_THROWS_AS(thin_decomposition_value(Quiver::loops(1), {2}, {{2}}), InvalidInput);
  CHECK_THROWS_AS(thin_decomposition_value(Quiver::loops(1), {2}, {{1}}), InvalidInput);
  CHECK(thin_decompositions({2, 1}).size() == 3);
  const Quiver q({{1, 2}, {2, 0}});
  for (const auto& d : nonzero_vectors_below({3, 2})) {
    for (const auto& parts : thin_decompositions(d)) CHECK(thin_decomposition_value(q, d, parts) == nullcone_bound(q, d));
  }
}

TEST_CASE("nullcone against nilpotent matrices") {
  // One-loop: N_d is the nilpotent cone, q^(d^2 - d) points over F_q.
  for (int d = 1; d <= 4; ++d) {
    const long count = testing::nilpotent_matrices_f2(d);
    CHECK(count == 1L << (d * d - d));
    CHECK(nullcone_bound(Quiver::loops(1), {d}) == (d * d - d) - d * d);
  }
}
