#ifndef QOLAB_TREE_BOREL_HPP
#define QOLAB_TREE_BOREL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qolab/relation.hpp"

namespace qolab {

using NodeSeq = std::vector<int>;

// Prefix-closed set of finite sequences over {0,...,index_size-1}.
class FiniteTree {
 public:
  FiniteTree() = default;
  FiniteTree(int index_size, std::set<NodeSeq> nodes);

  int index_size() const { return index_size_; }
  const std::set<NodeSeq>& nodes() const { return nodes_; }
  bool contains(const NodeSeq& t) const { return nodes_.count(t) > 0; }
  bool empty() const { return nodes_.empty(); }

 private:
  int index_size_ = 0;
  std::set<NodeSeq> nodes_;
};

// Nodes having at least one child.
FiniteTree pruning_derivative(const FiniteTree& tree);

struct PruningRank {
  int rho = 0;                       // iterations of the derivative to a fixed point
  bool well_founded = true;          // fixed point empty (always, but computed)
  std::map<NodeSeq, int> node_ranks; // largest beta with the node in the beta-th iterate
};

PruningRank pruning_rank(const FiniteTree& tree);

// Sequences just off the tree: children of tree nodes not in the tree, or
// the empty sequence when the tree is empty.
std::set<NodeSeq> frontier(const FiniteTree& tree);

// Well-founded tree over alpha x alpha (pair (gamma,delta) encoded as
// gamma*alpha+delta) with leaf sets over a ground set of size m.
struct BorelCode {
  int alpha = 1;
  FiniteTree tree;
  std::map<NodeSeq, VertexSet> leaf_map;
  int ground_size = 0;

  BorelCode() = default;
  BorelCode(int alpha, FiniteTree tree, std::map<NodeSeq, VertexSet> leaf_map,
            int ground_size);
};

enum class EvalOrder {
  UnionOfIntersections,  // union over gamma of intersections over delta
  IntersectionOfUnions,  // the De Morgan dual
};

// Memoized recursion from the root.
VertexSet eval_borel_code(const BorelCode& code,
                          EvalOrder order = EvalOrder::UnionOfIntersections);

// Reference evaluator that materializes the staged maps rank by rank.
VertexSet eval_borel_code_staged(const BorelCode& code,
                                 EvalOrder order = EvalOrder::UnionOfIntersections);

// Leaf-complemented code; evaluating it with the dual order yields the
// complement of the original evaluation.
BorelCode complement_leaves(const BorelCode& code);

// Tree text format: one node per line, comma-separated indices, '-' for
// the empty sequence. Negative index_size infers max index + 1.
FiniteTree parse_tree(const std::string& text, int index_size = -1);
std::string serialize_tree(const FiniteTree& tree);

std::string node_to_string(const NodeSeq& t);
NodeSeq node_from_string(const std::string& text);

// Code JSON: {"alpha": a, "tree": [...], "leaves": {"seq": [members]}, "m": m}
BorelCode parse_borel_code(const std::string& json_text);
std::string serialize_borel_code(const BorelCode& code);

}  // namespace qolab

#endif
