#include <doctest.h>

#include "qdt/errors.hpp"
#include "qdt/quiver.hpp"

using namespace qdt;

TEST_CASE("euler form examples") {
  CHECK(euler_form(Quiver::loops(1), {1}, {1}) == 0);
  for (int m = 0; m <= 4; ++m) {
    for (int k = 0; k <= 5; ++k) CHECK(euler_form(Quiver::loops(m), {k}, {k}) == (1 - m) * k * k);
  }
  CHECK(euler_form(Quiver::kronecker(2), {1, 1}, {1, 1}) == 0);
}

TEST_CASE("euler form is bilinear") {
  const Quiver q({{1, 2, 0}, {0, 0, 3}, {1, 0, 2}});
  const auto all = nonzero_vectors_below({2, 1, 2});
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        CHECK(euler_form(q, a + b, c) == euler_form(q, a, c) + euler_form(q, b, c));
        CHECK(euler_form(q, c, a + b) == euler_form(q, c, a) + euler_form(q, c, b));
      }
    }
  }
}

TEST_CASE("antisymmetrized form") {
  CHECK(antisym_form(Quiver::kronecker(1), {1, 0}, {0, 1}) == -1);
  const Quiver sym({{1, 3}, {3, 0}});
  for (const auto& d : nonzero_vectors_below({2, 2})) {
    for (const auto& e : nonzero_vectors_below({2, 2})) {
      CHECK(antisym_form(sym, d, e) == 0);
      CHECK(antisym_form(Quiver::kronecker(2), d, e) == -antisym_form(Quiver::kronecker(2), e, d));
    }
    CHECK(antisym_form(Quiver::kronecker(2), d, d) == 0);
  }
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(Quiver::loops(3)));
  CHECK_FALSE(is_symmetric(Quiver::kronecker(2)));
  CHECK(is_symmetric(Quiver({{0, 3}, {3, 0}})));
}

TEST_CASE("slope") {
  CHECK(slope({{1, -1}}, {1, 1}) == 0);
  CHECK(slope({{1, 0}}, {1, 1}) == mpq_class(1, 2));
  CHECK(slope({{0}}, {5}) == 0);
  CHECK_THROWS_AS(slope({{1, 0}}, {0, 0}), InvalidInput);
}

TEST_CASE("genericity") {
  CHECK(is_mu_generic(Quiver::kronecker(2), {{1, -1}}, 0, {3, 3}));
  CHECK(is_mu_generic(Quiver::loops(1), {{0}}, 0, {7}));
  CHECK_FALSE(is_mu_generic(Quiver::kronecker(1), {{1, 1}}, 1, {1, 1}));
}

TEST_CASE("framed quiver") {
  const Quiver a = framed_quiver(Quiver::loops(1), {1});
  REQUIRE(a.size() == 2);
  CHECK(a.arrows(1, 0) == 1);
  CHECK(a.arrows(0, 0) == 1);
  CHECK(a.labels().back() == "inf");
  const Quiver b = framed_quiver(Quiver::loops(0), {3});
  CHECK(b.arrows(1, 0) == 3);
  CHECK(b.arrows(0, 0) == 0);
  const Quiver c = framed_quiver(Quiver::kronecker(2), {1, 0});
  REQUIRE(c.size() == 3);
  CHECK(c.arrows(2, 0) == 1);
  CHECK(c.arrows(2, 1) == 0);
  CHECK(c.arrows(0, 1) == 2);
}

TEST_CASE("ext quiver") {
  CHECK(ext_quiver({{{1}}, {1}, std::nullopt}).arrows(0, 0) == 0);
  CHECK(ext_quiver({{{0}}, {1}, std::nullopt}).arrows(0, 0) == 1);
  const Quiver q = ext_quiver({{{1, -1}, {-1, 1}}, {1, 1}, std::nullopt});
  CHECK(q.arrows(0, 0) == 0);
  CHECK(q.arrows(1, 1) == 0);
  CHECK(q.arrows(0, 1) == 1);
  CHECK(q.arrows(1, 0) == 1);
  CHECK_THROWS_AS(ext_quiver({{{2}}, {1}, std::nullopt}), InvalidInput);
  CHECK_THROWS(ext_quiver({{{1, -1}, {0, 1}}, {1, 1}, std::nullopt}));
}

TEST_CASE("dimension vectors") {
  const DimVector d{2, 1};
  CHECK(d.total() == 3);
  CHECK(DimVector{1, 1}.leq(d));
  CHECK_FALSE(DimVector{0, 2}.leq(d));
  CHECK_THROWS_AS(DimVector({1, 0}) - DimVector({0, 1}), InvalidInput);
  CHECK_THROWS_AS(DimVector({-1}), InvalidInput);
  CHECK(d.to_string() == "(2,1)");
  const auto all = nonzero_vectors_below({1, 2});
  REQUIRE(all.size() == 5);
  CHECK(all[0] == DimVector{0, 1});
  CHECK(all[1] == DimVector{1, 0});
  CHECK(all[2] == DimVector{0, 2});
  CHECK(all[4] == DimVector{1, 2});
  CHECK_THROWS_AS(Quiver::kronecker(1).check({1}), InvalidInput);
}
