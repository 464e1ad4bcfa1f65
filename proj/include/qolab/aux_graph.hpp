#ifndef QOLAB_AUX_GRAPH_HPP
#define QOLAB_AUX_GRAPH_HPP

#include <functional>
#include <utility>
#include <vector>

#include "qolab/relation.hpp"

namespace qolab {

struct ColoringCertificate {
  int k = 0;
  std::vector<int> colors;  // vertex -> color in {0,...,k-1}
};

// Exact chromatic number with a witnessing proper coloring. Backtracking
// with greedy upper bound and clique lower bound.
ColoringCertificate chromatic_number(const Graph& g, Budget* budget = nullptr);

// Decision procedure: proper coloring with at most k colors, if one exists.
bool try_color(const Graph& g, int k, std::vector<int>* out_colors,
               Budget* budget = nullptr);

// All proper colorings with color set {0,...,k-1}, emitted in lexicographic
// order of the color vector. Surjectivity is not required. The visitor
// returns false to stop early.
void enumerate_colorings(const Graph& g, int k,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         Budget* budget = nullptr);

std::vector<std::vector<int>> all_colorings(const Graph& g, int k,
                                            Budget* budget = nullptr);

// Supergraph joining the pairs that every optimal coloring separates.
struct AuxGraph {
  Graph base;
  int chi = 0;
  Graph aux;
};

// Contraction route: a non-adjacent pair joins the supergraph iff merging it
// pushes the chromatic number past chi(g).
AuxGraph aux_graph(const Graph& g, Budget* budget = nullptr);

// Independent oracle: enumerate every chi(g)-coloring of the whole ground
// set and join the pairs never colored equal. Intended for small n.
AuxGraph aux_graph_bruteforce(const Graph& g, Budget* budget = nullptr);

// Merge y into x (they must be distinct and non-adjacent); vertices above y
// shift down by one.
Graph contract_vertices(const Graph& g, Vertex x, Vertex y);

// Minimum-cardinality set F containing each requested pair such that every
// chi(g)-coloring of the restriction to F separates the pair; for several
// pairs, the union of the per-pair minima (verified by enumeration).
VertexSet witness_set(const Graph& g,
                      const std::vector<std::pair<Vertex, Vertex>>& pairs,
                      Budget* budget = nullptr);

// Same, with the supergraph precomputed by the caller.
VertexSet witness_set(const Graph& g, const AuxGraph& ag,
                      const std::vector<std::pair<Vertex, Vertex>>& pairs,
                      Budget* budget = nullptr);

// True when every coloring of the restriction to `subset` with at most
// `colors` colors assigns x and y distinct colors.
bool always_separated(const Graph& g, const VertexSet& subset, Vertex x,
                      Vertex y, int colors, Budget* budget = nullptr);

// Exact maximum clique (lexicographically least witness of maximum size).
VertexSet max_clique(const Graph& g, Budget* budget = nullptr);

// Does `within` contain a clique of exactly k vertices?
bool has_clique_of_size(const Graph& g, const VertexSet& within, int k,
                        Budget* budget = nullptr);

}  // namespace qolab

#endif
