#include <doctest.h>

#include "qdt/errors.hpp"
#include "qdt/oracle_ff.hpp"

using namespace qdt;

namespace {

FFConfig field(int q) {
  FFConfig c;
  c.q = q;
  return c;
}

}  // namespace

TEST_CASE("finite field tables") {
  for (int q : {2, 3, 4}) {
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(5), InvalidInput);
  CHECK_THROWS_AS(FiniteField(2).inv(0), InvalidInput);
}

TEST_CASE("representation counts") {
  CHECK(count_reps(Quiver::loops(1), {2}, field(2)) == 16);
  CHECK(count_reps(Quiver::kronecker(2), {1, 1}, field(3)) == 9);
  CHECK(count_reps(Quiver::loops(0), {3}, field(4)) == 1);
  CHECK(count_reps_by_enumeration(Quiver::loops(1), {2}, field(3)) == 81);
  CHECK_THROWS_AS(count_reps(Quiver::loops(1), {4}, field(2)), GuardExceeded);
  FFConfig tight = field(4);
  tight.enumeration_limit = 1000;
  CHECK_THROWS_AS(count_reps(Quiver::loops(1), {3}, tight), GuardExceeded);
}

TEST_CASE("general linear group counts") {
  CHECK(count_gl({2}, field(2)) == 6);
  CHECK(count_gl({1, 1}, field(3)) == 4);
  CHECK(count_gl({1}, field(2)) == 1);
  for (int q : {2, 3, 4}) {
    for (const auto& d : nonzero_vectors_below({2, 1})) CHECK(count_gl(d, field(q)) == count_gl_by_enumeration(d, field(q)));
    CHECK(count_gl({3}, field(q)) == count_gl_by_enumeration({3}, field(q)));
  }
}

TEST_CASE("semistable counts") {
  CHECK(count_semistable(Quiver::kronecker(2), {{1, -1}}, {1, 1}, field(2)) == 3);
  CHECK(count_semistable(Quiver::kronecker(1), {{1, -1}}, {1, 1}, field(3)) == 2);
  CHECK(count_semistable(Quiver::loops(1), {{0}}, {1}, field(2)) == 2);
}

TEST_CASE("semistable motives against point counts") {
  const StabilityWeights king{{1, -1}};
  for (int m = 0; m <= 2; ++m) {
    for (int q : {2, 3}) {
      for (const auto& d : nonzero_vectors_below({2, 2})) {
        if (d.total() > 3) continue;
        const auto c = compare_semistable(Quiver::kronecker(m), king, d, field(q));
        CHECK_MESSAGE(c.match, "m=" << m << " q=" << q << " d=" << d.to_string() << " count=" << c.count
                                    << " motive=" << c.motive_eval.get_str());
      }
    }
  }
  CHECK(verify_ss_motive(Quiver::kronecker(2), king, {1, 1}, field(4)));
  // A 3-vertex quiver with two competing subrepresentations.
  const Quiver q({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
  for (const auto& d : nonzero_vectors_below({1, 1, 1})) CHECK(verify_ss_motive(q, {{2, 0, -1}}, d, field(2)));
}

TEST_CASE("motive evaluations match counts") {
  for (const Quiver& qv : {Quiver::loops(0), Quiver::loops(1), Quiver::loops(2), Quiver::kronecker(1), Quiver::kronecker(2)}) {
    for (int q : {2, 3, 4}) {
      const DimVector box = qv.size() == 1 ? DimVector{3} : DimVector{2, 2};
      for (const auto& d : nonzero_vectors_below(box)) {
        if (d.total() > 3) continue;
        bool guarded = false;
        OracleComparison reps;
        try {
          reps = compare_reps(qv, d, field(q));
        } catch (const GuardExceeded&) {
          guarded = true;
        }
        CHECK((guarded || reps.match));
        CHECK(compare_gl(d, field(q)).match);
      }
    }
  }
}
