#ifndef QOLAB_DILWORTH_HPP
#define QOLAB_DILWORTH_HPP

#include <optional>
#include <variant>
#include <vector>

#include "qolab/relation.hpp"

namespace qolab {

// Pairwise disjoint chains covering the ground set; empty chains are legal
// padding.
struct ChainCover {
  std::vector<VertexSet> chains;
};

struct WidthResult {
  int width = 0;
  VertexSet antichain;  // lexicographically least maximum antichain
};

// Exactly one alternative: a cover by k chains, or an antichain of size k+1.
struct DichotomyResult {
  std::variant<ChainCover, VertexSet> value;

  bool is_cover() const { return std::holds_alternative<ChainCover>(value); }
  const ChainCover& cover() const { return std::get<ChainCover>(value); }
  const VertexSet& antichain() const { return std::get<VertexSet>(value); }
};

// Width without a witness; maximum matching on the split bipartite graph of
// the quotient's strict order.
int poset_width(const QuasiOrder& q);

WidthResult width_and_antichain(const QuasiOrder& q);

// Minimum path cover of the quotient DAG, classes expanded back to vertices.
// Chain count equals the width; chains are emitted in lexicographic order.
ChainCover min_chain_cover(const QuasiOrder& q);

// All antichains of size k, lexicographically ordered. Brute-force oracle.
std::vector<VertexSet> enumerate_antichains(const QuasiOrder& q, int k,
                                            Budget* budget = nullptr);

// Lexicographically least antichain of size k, or nullopt if none exists.
std::optional<VertexSet> least_antichain_of_size(const QuasiOrder& q, int k);

// Constructive alternative for k >= 1; the cover branch reuses the layered
// chain construction from paper_procedures, padded with empty chains.
DichotomyResult dichotomy(const QuasiOrder& q, int k, Budget* budget = nullptr);

// Validation helpers used by tests and the CLI.
bool check_chain_cover(const QuasiOrder& q, const ChainCover& cover);

}  // namespace qolab

#endif
