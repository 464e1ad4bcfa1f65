#ifndef QOLAB_RELATION_HPP
#define QOLAB_RELATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qolab/bitmatrix.hpp"
#include "qolab/error.hpp"

namespace qolab {

using Vertex = int;
// Vertex sets are kept sorted ascending; vector comparison is then exactly
// the lexicographic set order used for tie-breaking.
using VertexSet = std::vector<Vertex>;

// Binary relation on {0,...,n-1}.
class FiniteRelation {
 public:
  FiniteRelation() = default;
  explicit FiniteRelation(int n) : adj_(n) {}

  int size() const { return adj_.size(); }
  bool test(Vertex i, Vertex j) const { return adj_.test(i, j); }
  void set(Vertex i, Vertex j, bool value = true) { adj_.set(i, j, value); }
  int pair_count() const { return adj_.count(); }

  bool operator==(const FiniteRelation& other) const {
    return adj_ == other.adj_;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " outside ground set of size " +
                      std::to_string(size()));
  }

  BitMatrix& matrix() { return adj_; }
  const BitMatrix& matrix() const { return adj_; }

 private:
  BitMatrix adj_;
};

struct QuasiOrderVerdict {
  bool ok = true;
  bool reflexivity = false;  // witness kind: i not reflexive
  Vertex i = -1, j = -1, k = -1;  // transitivity witness i R j R k, not i R k
};

struct GraphVerdict {
  bool ok = true;
  bool irreflexivity = false;  // witness kind: loop at i
  Vertex i = -1, j = -1;       // symmetry witness: i R j but not j R i
};

QuasiOrderVerdict is_quasi_order(const FiniteRelation& rel);
GraphVerdict is_graph(const FiniteRelation& rel);

// Reflexive transitive relation; constructor validates.
class QuasiOrder {
 public:
  explicit QuasiOrder(FiniteRelation rel);

  int size() const { return rel_.size(); }
  const FiniteRelation& rel() const { return rel_; }

  bool le(Vertex i, Vertex j) const { return rel_.test(i, j); }
  bool equivalent(Vertex i, Vertex j) const { return le(i, j) && le(j, i); }
  bool strictly_less(Vertex i, Vertex j) const { return le(i, j) && !le(j, i); }
  bool comparable(Vertex i, Vertex j) const { return le(i, j) || le(j, i); }
  bool incomparable(Vertex i, Vertex j) const { return !comparable(i, j); }

  // Sub-quasi-order induced by `vertices` (local indices follow the given
  // ascending order).
  QuasiOrder induced(const VertexSet& vertices) const;

 private:
  FiniteRelation rel_;
};

// Irreflexive symmetric relation; constructor validates.
class Graph {
 public:
  explicit Graph(FiniteRelation rel);

  int size() const { return rel_.size(); }
  const FiniteRelation& rel() const { return rel_; }
  bool adjacent(Vertex i, Vertex j) const { return rel_.test(i, j); }
  int edge_count() const { return rel_.pair_count() / 2; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;  // i < j, lex order
  VertexSet neighbors(Vertex v) const;

  Graph induced(const VertexSet& vertices) const;

  static Graph edgeless(int n);
  static Graph complete(int n);
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

 private:
  FiniteRelation rel_;
};

enum class DeriveKind { Comparable, Equivalence, Incomparable, Strict };
enum class IntervalKind { Closed, OpenClosed };
enum class SectionSide { Vertical, Horizontal };

FiniteRelation derive(const QuasiOrder& q, DeriveKind kind);
Graph incomparability_graph(const QuasiOrder& q);

// Quotient by the equivalence x R y & y R x. Classes are listed by least
// member ascending; `order` is an antisymmetric quasi-order on class indices.
struct QuotientPoset {
  std::vector<VertexSet> classes;
  QuasiOrder order;
  std::vector<int> class_of;
};

QuotientPoset quotient(const QuasiOrder& q);

// [x,y] = {z : x R z R y}; the open-closed variant drops the class of x.
VertexSet interval(const QuasiOrder& q, Vertex x, Vertex y, IntervalKind kind);

// Vertical section {y : v R y} or horizontal section {x : x R v}.
VertexSet section(const FiniteRelation& rel, Vertex v, SectionSide side);

// Seeded instance generators (see docs/formats notes in README): a strict
// digraph sampled along a random linear order, transitively closed, made
// reflexive, then a few comparable cover pairs merged into small
// equivalence classes (size capped at 3).
QuasiOrder random_quasi_order(int n, double density, std::uint64_t seed);
Graph random_graph(int n, double density, std::uint64_t seed);

// In-place closures used by generators and parsers.
void transitive_close(FiniteRelation& rel);
void reflexive_close(FiniteRelation& rel);

// `.qo`/`.gr` text format: optional '#' comment or blank lines, a decimal
// size line, then n rows of n characters from {0,1}.
FiniteRelation parse_relation(const std::string& text);
QuasiOrder parse_quasi_order(const std::string& text);
Graph parse_graph(const std::string& text);
std::string serialize_relation(const FiniteRelation& rel);

bool is_chain(const QuasiOrder& q, const VertexSet& vertices);
bool is_antichain(const QuasiOrder& q, const VertexSet& vertices);

bool is_independent(const Graph& g, const VertexSet& vertices);
bool is_clique(const Graph& g, const VertexSet& vertices);

}  // namespace qolab

#endif
