#include <algorithm>

#include "doctest.h"
#include "qolab/relation.hpp"
#include "test_util.hpp"

using namespace qolab;
using namespace qolab_test;

TEST_CASE("parse singleton and identity") {
  const FiniteRelation one = parse_relation("1\n1\n");
  CHECK(one.size() == 1);
  CHECK(one.test(0, 0));

  const FiniteRelation id2 = parse_relation("2\n10\n01\n");
  CHECK(id2.size() == 2);
  CHECK(id2.test(0, 0));
  CHECK(id2.test(1, 1));
  CHECK_FALSE(id2.test(0, 1));
}

TEST_CASE("parse the fence") {
  const FiniteRelation rel = parse_relation(kFenceText);
  CHECK(rel.size() == 4);
  const QuasiOrder q(rel);
  CHECK(q.strictly_less(0, 2));
  CHECK(q.strictly_less(1, 2));
  CHECK(q.strictly_less(1, 3));
  CHECK(q.incomparable(0, 1));
  CHECK(q.incomparable(0, 3));
  CHECK(q.incomparable(2, 3));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_relation("x\n"), doctest::Contains("line 1"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_relation("2\n10\n0\n"), doctest::Contains("line 3"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_relation("2\n10\n02\n"), doctest::Contains("line 3"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_relation("2\n10\n01\n11\n"),
                       doctest::Contains("line 4"), Error);
  CHECK_THROWS_AS(parse_relation(""), Error);
  CHECK_THROWS_AS(parse_relation("3\n101\n010\n"), Error);
}

TEST_CASE("comments and whitespace are ignored") {
  const FiniteRelation rel =
      parse_relation("# a comment\n\n  2\n# rows\n10\n01\n# trailing\n");
  CHECK(rel == parse_relation("2\n10\n01\n"));
}

TEST_CASE("serializer round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QuasiOrder q = random_quasi_order(7, 0.4, seed);
    CHECK(parse_relation(serialize_relation(q.rel())) == q.rel());
  }
}

TEST_CASE("is_quasi_order verdicts") {
  CHECK(is_quasi_order(parse_relation(kFenceText)).ok);
  CHECK(is_quasi_order(parse_relation("2\n10\n01\n")).ok);

  const QuasiOrderVerdict missing_loop = is_quasi_order(parse_relation("2\n01\n01\n"));
  CHECK_FALSE(missing_loop.ok);
  CHECK(missing_loop.reflexivity);
  CHECK(missing_loop.i == 0);

  // 0 R 1 R 2 without 0 R 2
  const QuasiOrderVerdict intransitive =
      is_quasi_order(parse_relation("3\n110\n011\n001\n"));
  CHECK_FALSE(intransitive.ok);
  CHECK_FALSE(intransitive.reflexivity);
  CHECK(intransitive.i == 0);
  CHECK(intransitive.j == 1);
  CHECK(intransitive.k == 2);
}

TEST_CASE("graph validation") {
  CHECK(is_graph(parse_relation("2\n01\n10\n")).ok);
  CHECK_FALSE(is_graph(parse_relation("1\n1\n")).ok);
  CHECK_FALSE(is_graph(parse_relation("2\n01\n00\n")).ok);
  CHECK_THROWS_AS(Graph(parse_relation("1\n1\n")), Error);
}

TEST_CASE("derive on the fence") {
  const QuasiOrder q = fence();

  const Graph incomp = incomparability_graph(q);
  CHECK(incomp.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});

  const FiniteRelation strict = derive(q, DeriveKind::Strict);
  CHECK(strict.pair_count() == 3);
  CHECK(strict.test(0, 2));
  CHECK(strict.test(1, 2));
  CHECK(strict.test(1, 3));

  const FiniteRelation equiv = derive(identity_order(3), DeriveKind::Equivalence);
  CHECK(equiv == identity_order(3).rel());
}

TEST_CASE("derived relations decompose comparability") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const QuasiOrder q = random_quasi_order(8, 0.2 + 0.05 * (seed % 5), seed);
    const FiniteRelation comp = derive(q, DeriveKind::Comparable);
    const FiniteRelation equiv = derive(q, DeriveKind::Equivalence);
    const FiniteRelation strict = derive(q, DeriveKind::Strict);
    const FiniteRelation incomp = derive(q, DeriveKind::Incomparable);
    for (int i = 0; i < q.size(); ++i)
      for (int j = 0; j < q.size(); ++j) {
        CHECK(comp.test(i, j) ==
              (equiv.test(i, j) || strict.test(i, j) || strict.test(j, i)));
        if (i != j) CHECK(incomp.test(i, j) == !comp.test(i, j));
      }
  }
}

TEST_CASE("quotient of the fence is trivial") {
  const QuotientPoset qp = quotient(fence());
  CHECK(qp.classes.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(qp.classes[qp.class_of[v]] == VertexSet{v});
  CHECK(qp.order.strictly_less(qp.class_of[0], qp.class_of[2]));
  CHECK(qp.order.strictly_less(qp.class_of[1], qp.class_of[3]));
}

TEST_CASE("quotient collapses symmetric pairs") {
  const QuotientPoset qp = quotient(parse_quasi_order("2\n11\n11\n"));
  CHECK(qp.classes.size() == 1);
  CHECK(qp.classes[0] == VertexSet{0, 1});

  const QuotientPoset id3 = quotient(identity_order(3));
  CHECK(id3.classes.size() == 3);
}

TEST_CASE("quotient round-trip property") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const QuasiOrder q = random_quasi_order(9, 0.35, seed);
    const QuotientPoset qp = quotient(q);
    for (int u = 0; u < q.size(); ++u)
      for (int v = 0; v < q.size(); ++v)
        CHECK(q.equivalent(u, v) == (qp.class_of[u] == qp.class_of[v]));
    for (std::size_t a = 0; a < qp.classes.size(); ++a)
      for (std::size_t b = a + 1; b < qp.classes.size(); ++b)
        CHECK_FALSE(qp.order.equivalent(static_cast<int>(a), static_cast<int>(b)));
  }
}

TEST_CASE("intervals on the fence") {
  const QuasiOrder q = fence();
  CHECK(interval(q, 1, 2, IntervalKind::Closed) == VertexSet{1, 2});
  CHECK(interval(q, 1, 2, IntervalKind::OpenClosed) == VertexSet{2});
  CHECK(interval(q, 2, 1, IntervalKind::Closed).empty());
  CHECK_THROWS_AS(interval(q, 0, 5, IntervalKind::Closed), Error);
}

TEST_CASE("sections on the fence") {
  const QuasiOrder q = fence();
  CHECK(section(q.rel(), 1, SectionSide::Vertical) == VertexSet{1, 2, 3});
  CHECK(section(q.rel(), 2, SectionSide::Horizontal) == VertexSet{0, 1, 2});
  CHECK(section(identity_order(2).rel(), 0, SectionSide::Vertical) == VertexSet{0});
  CHECK_THROWS_AS(section(q.rel(), 4, SectionSide::Vertical), Error);
}

TEST_CASE("interval equals meet of sections") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QuasiOrder q = random_quasi_order(7, 0.4, seed);
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) {
        const VertexSet box = interval(q, x, y, IntervalKind::Closed);
        const VertexSet down = section(q.rel(), x, SectionSide::Vertical);
        const VertexSet up = section(q.rel(), y, SectionSide::Horizontal);
        VertexSet meet;
        std::set_intersection(down.begin(), down.end(), up.begin(), up.end(),
                              std::back_inserter(meet));
        CHECK(box == meet);
      }
  }
}

TEST_CASE("random_quasi_order edge cases") {
  CHECK(random_quasi_order(0, 0.5, 1).size() == 0);
  CHECK(random_quasi_order(5, 0.0, 7).rel() == identity_order(5).rel());
}

TEST_CASE("random_quasi_order is valid and deterministic") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const QuasiOrder a = random_quasi_order(6, 0.4, seed * 31 + 42);
    CHECK(is_quasi_order(a.rel()).ok);
    const QuasiOrder b = random_quasi_order(6, 0.4, seed * 31 + 42);
    CHECK(a.rel() == b.rel());
  }
}

TEST_CASE("random_quasi_order merge step caps classes at three") {
  bool saw_nontrivial_class = false;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const QuasiOrder q = random_quasi_order(10, 0.5, seed);
    const QuotientPoset qp = quotient(q);
    for (const VertexSet& cls : qp.classes) {
      CHECK(cls.size() <= 3);
      if (cls.size() > 1) saw_nontrivial_class = true;
    }
  }
  CHECK(saw_nontrivial_class);
}

TEST_CASE("random_graph is valid and deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(8, 0.5, seed);
    CHECK(is_graph(g.rel()).ok);
    CHECK(g.rel() == random_graph(8, 0.5, seed).rel());
  }
  CHECK(random_graph(4, 0.0, 3).edge_count() == 0);
}
