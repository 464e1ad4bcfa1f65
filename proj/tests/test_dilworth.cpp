#include "doctest.h"
#include "qolab/dilworth.hpp"
#include "test_util.hpp"

using namespace qolab;
using namespace qolab_test;

TEST_CASE("width of the fence") {
  // brute force: antichains of the fence were enumerated over all subsets
  CHECK(brute_width(fence()) == 2);
  const WidthResult r = width_and_antichain(fence());
  CHECK(r.width == 2);
  CHECK(r.antichain == VertexSet{0, 1});  // lex-least among {0,1},{0,3},{2,3}
}

TEST_CASE("width of trivial orders") {
  const WidthResult id5 = width_and_antichain(identity_order(5));
  CHECK(id5.width == 5);
  CHECK(id5.antichain == VertexSet{0, 1, 2, 3, 4});

  const WidthResult total = width_and_antichain(chain_order(3));
  CHECK(total.width == 1);
  CHECK(total.antichain == VertexSet{0});

  CHECK(width_and_antichain(identity_order(0)).width == 0);
}

TEST_CASE("min chain cover of the fence") {
  const ChainCover cover = min_chain_cover(fence());
  CHECK(cover.chains == std::vector<VertexSet>{{0, 2}, {1, 3}});
  CHECK(check_chain_cover(fence(), cover));
}

TEST_CASE("min chain cover of trivial orders") {
  CHECK(min_chain_cover(identity_order(3)).chains ==
        std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(min_chain_cover(parse_quasi_order("4\n1111\n1111\n1111\n1111\n")).chains ==
        std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(min_chain_cover(identity_order(0)).chains.empty());
}

TEST_CASE("dilworth equality on random orders") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const QuasiOrder q = random_quasi_order(3 + seed % 10, 0.2 + 0.1 * (seed % 4), seed);
    const ChainCover cover = min_chain_cover(q);
    CHECK(check_chain_cover(q, cover));
    CHECK(static_cast<int>(cover.chains.size()) == poset_width(q));
    if (q.size() <= 12) CHECK(poset_width(q) == brute_width(q));
  }
}

TEST_CASE("width is a quotient invariant") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const QuasiOrder q = random_quasi_order(9, 0.4, seed);
    CHECK(poset_width(q) == poset_width(quotient(q).order));
  }
}

TEST_CASE("enumerate_antichains on the fence") {
  CHECK(enumerate_antichains(fence(), 2) ==
        std::vector<VertexSet>{{0, 1}, {0, 3}, {2, 3}});
  CHECK(enumerate_antichains(fence(), 3).empty());
  CHECK(enumerate_antichains(fence(), 0) == std::vector<VertexSet>{{}});
}

TEST_CASE("enumerate_antichains matches the subset scan") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const QuasiOrder q = random_quasi_order(8, 0.3, seed);
    for (int k = 0; k <= 4; ++k)
      CHECK(enumerate_antichains(q, k) == brute_antichains(q, k));
  }
}

TEST_CASE("enumerate_antichains respects its budget") {
  Budget tiny(5);
  CHECK_THROWS_AS(enumerate_antichains(identity_order(12), 6, &tiny), Error);
  try {
    Budget again(5);
    enumerate_antichains(identity_order(12), 6, &again);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("dichotomy on the fence") {
  const DichotomyResult low = dichotomy(fence(), 1);
  REQUIRE_FALSE(low.is_cover());
  CHECK(low.antichain() == VertexSet{0, 1});

  const DichotomyResult exact = dichotomy(fence(), 2);
  REQUIRE(exact.is_cover());
  CHECK(exact.cover().chains == std::vector<VertexSet>{{0, 2}, {1, 3}});

  const DichotomyResult padded = dichotomy(fence(), 3);
  REQUIRE(padded.is_cover());
  CHECK(padded.cover().chains == std::vector<VertexSet>{{0, 2}, {1, 3}, {}});
}

TEST_CASE("dichotomy rejects non-positive k") {
  CHECK_THROWS_AS(dichotomy(fence(), 0), Error);
}

TEST_CASE("dichotomy on the empty order pads with empty chains") {
  const DichotomyResult r = dichotomy(identity_order(0), 3);
  REQUIRE(r.is_cover());
  CHECK(r.cover().chains == std::vector<VertexSet>{{}, {}, {}});
}

TEST_CASE("dichotomy alternatives are exclusive and exhaustive") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const QuasiOrder q = random_quasi_order(2 + seed % 8, 0.3, seed ^ 0xbeef);
    const int width = poset_width(q);
    for (int k = 1; k <= width + 1; ++k) {
      const DichotomyResult r = dichotomy(q, k);
      const bool has_big_antichain = !enumerate_antichains(q, k + 1).empty();
      if (r.is_cover()) {
        CHECK(static_cast<int>(r.cover().chains.size()) == k);
        CHECK(check_chain_cover(q, r.cover()));
        CHECK_FALSE(has_big_antichain);
      } else {
        CHECK(r.antichain().size() == static_cast<std::size_t>(k) + 1);
        CHECK(is_antichain(q, r.antichain()));
        CHECK(has_big_antichain);
      }
    }
  }
}

TEST_CASE("least antichain is lexicographically least") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const QuasiOrder q = random_quasi_order(7, 0.35, seed);
    const int width = poset_width(q);
    for (int k = 1; k <= width; ++k) {
      const auto all = brute_antichains(q, k);
      REQUIRE_FALSE(all.empty());
      CHECK(*least_antichain_of_size(q, k) == all.front());
    }
    CHECK_FALSE(least_antichain_of_size(q, width + 1).has_value());
  }
}
