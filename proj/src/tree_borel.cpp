#include "qolab/tree_borel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace qolab {

using nlohmann::json;

FiniteTree::FiniteTree(int index_size, std::set<NodeSeq> nodes)
    : index_size_(index_size), nodes_(std::move(nodes)) {
  if (index_size_ < 0)
    throw Error(ErrorCode::InvalidArgument, "negative index set size");
  for (const NodeSeq& t : nodes_) {
    for (int i : t)
      if (i < 0 || i >= index_size_)
        throw Error(ErrorCode::MalformedInput,
                    "node " + node_to_string(t) + " uses index " +
                        std::to_string(i) + " outside the index set");
    if (!t.empty()) {
      NodeSeq parent(t.begin(), t.end() - 1);
      if (!nodes_.count(parent))
        throw Error(ErrorCode::MalformedInput,
                    "node " + node_to_string(t) +
                        " lacks its predecessor: not closed under initial segments");
    }
  }
}

FiniteTree pruning_derivative(const FiniteTree& tree) {
  std::set<NodeSeq> kept;
  for (const NodeSeq& t : tree.nodes()) {
    if (t.empty()) continue;
    NodeSeq parent(t.begin(), t.end() - 1);
    kept.insert(std::move(parent));
  }
  return FiniteTree(tree.index_size(), std::move(kept));
}

PruningRank pruning_rank(const FiniteTree& tree) {
  PruningRank result;
  FiniteTree current = tree;
  int step = 0;
  while (true) {
    FiniteTree next = pruning_derivative(current);
    if (next.nodes() == current.nodes()) break;
    for (const NodeSeq& t : current.nodes())
      if (!next.contains(t)) result.node_ranks[t] = step;
    current = std::move(next);
    ++step;
  }
  result.rho = step;
  result.well_founded = current.empty();
  return result;
}

std::set<NodeSeq> frontier(const FiniteTree& tree) {
  std::set<NodeSeq> out;
  if (tree.empty()) {
    out.insert(NodeSeq{});
    return out;
  }
  for (const NodeSeq& t : tree.nodes())
    for (int i = 0; i < tree.index_size(); ++i) {
      NodeSeq child = t;
      child.push_back(i);
      if (!tree.contains(child)) out.insert(std::move(child));
    }
  return out;
}

BorelCode::BorelCode(int alpha_in, FiniteTree tree_in,
                     std::map<NodeSeq, VertexSet> leaf_map_in, int ground_size_in)
    : alpha(alpha_in),
      tree(std::move(tree_in)),
      leaf_map(std::move(leaf_map_in)),
      ground_size(ground_size_in) {
  if (alpha < 1)
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  if (ground_size < 0 || ground_size > 63)
    throw Error(ErrorCode::InvalidArgument, "ground set size outside 0..63");
  if (tree.index_size() != alpha * alpha)
    throw Error(ErrorCode::InvalidArgument,
                "tree index set must be alpha*alpha");
  const std::set<NodeSeq> front = frontier(tree);
  for (const NodeSeq& t : front)
    if (!leaf_map.count(t))
      throw Error(ErrorCode::MissingLeaf,
                  "frontier node " + node_to_string(t) + " has no leaf set");
  for (const auto& [t, members] : leaf_map) {
    if (!front.count(t))
      throw Error(ErrorCode::MalformedInput,
                  "leaf " + node_to_string(t) + " is not on the frontier");
    for (Vertex v : members)
      if (v < 0 || v >= ground_size)
        throw Error(ErrorCode::MalformedInput,
                    "leaf member " + std::to_string(v) + " outside the ground set");
  }
}

namespace {

std::uint64_t mask_of(const VertexSet& members) {
  std::uint64_t mask = 0;
  for (Vertex v : members) mask |= 1ull << v;
  return mask;
}

VertexSet set_of(std::uint64_t mask, int ground_size) {
  VertexSet out;
  for (int v = 0; v < ground_size; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

std::uint64_t combine_children(const BorelCode& code, const NodeSeq& t,
                               EvalOrder order,
                               const std::function<std::uint64_t(const NodeSeq&)>& value) {
  const std::uint64_t full =
      code.ground_size == 0 ? 0 : (~0ull >> (64 - code.ground_size));
  std::uint64_t outer = order == EvalOrder::UnionOfIntersections ? 0 : full;
  for (int gamma = 0; gamma < code.alpha; ++gamma) {
    std::uint64_t inner = order == EvalOrder::UnionOfIntersections ? full : 0;
    for (int delta = 0; delta < code.alpha; ++delta) {
      NodeSeq child = t;
      child.push_back(gamma * code.alpha + delta);
      const std::uint64_t v = value(child);
      inner = order == EvalOrder::UnionOfIntersections ? (inner & v) : (inner | v);
    }
    outer = order == EvalOrder::UnionOfIntersections ? (outer | inner) : (outer & inner);
  }
  return outer;
}

}  // namespace

VertexSet eval_borel_code(const BorelCode& code, EvalOrder order) {
  std::map<NodeSeq, std::uint64_t> memo;
  std::function<std::uint64_t(const NodeSeq&)> eval =
      [&](const NodeSeq& t) -> std::uint64_t {
    if (!code.tree.contains(t)) {
      const auto it = code.leaf_map.find(t);
      if (it == code.leaf_map.end())
        throw Error(ErrorCode::MissingLeaf,
                    "no leaf set for " + node_to_string(t));
      return mask_of(it->second);
    }
    const auto hit = memo.find(t);
    if (hit != memo.end()) return hit->second;
    const std::uint64_t v = combine_children(code, t, order, eval);
    memo.emplace(t, v);
    return v;
  };
  return set_of(eval(NodeSeq{}), code.ground_size);
}

VertexSet eval_borel_code_staged(const BorelCode& code, EvalOrder order) {
  std::map<NodeSeq, std::uint64_t> staged;
  for (const auto& [t, members] : code.leaf_map) staged[t] = mask_of(members);
  const PruningRank ranks = pruning_rank(code.tree);

  std::function<std::uint64_t(const NodeSeq&)> lookup =
      [&](const NodeSeq& t) -> std::uint64_t {
    const auto it = staged.find(t);
    if (it == staged.end())
      throw Error(ErrorCode::MissingLeaf,
                  "staged evaluation misses " + node_to_string(t));
    return it->second;
  };

  // Nodes of rank beta acquire their value at stage beta+1; children have
  // strictly smaller rank or sit on the frontier.
  for (int beta = 0; beta < ranks.rho; ++beta)
    for (const auto& [t, rank] : ranks.node_ranks)
      if (rank == beta) staged[t] = combine_children(code, t, order, lookup);
  return set_of(lookup(NodeSeq{}), code.ground_size);
}

BorelCode complement_leaves(const BorelCode& code) {
  std::map<NodeSeq, VertexSet> flipped;
  for (const auto& [t, members] : code.leaf_map) {
    VertexSet complement;
    for (int v = 0; v < code.ground_size; ++v)
      if (!std::binary_search(members.begin(), members.end(), v))
        complement.push_back(v);
    flipped.emplace(t, std::move(complement));
  }
  return BorelCode(code.alpha, code.tree, std::move(flipped), code.ground_size);
}

std::string node_to_string(const NodeSeq& t) {
  if (t.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(t[i]);
  }
  return out;
}

NodeSeq node_from_string(const std::string& text) {
  if (text == "-") return {};
  NodeSeq out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput,
                  "bad sequence entry \"" + item + "\"");
    }
  }
  if (out.empty())
    throw Error(ErrorCode::MalformedInput, "empty node line (use '-')");
  return out;
}

FiniteTree parse_tree(const std::string& text, int index_size) {
  std::istringstream in(text);
  std::string raw;
  std::set<NodeSeq> nodes;
  int max_index = -1;
  while (std::getline(in, raw)) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    NodeSeq t = node_from_string(line);
    for (int i : t) max_index = std::max(max_index, i);
    nodes.insert(std::move(t));
  }
  if (index_size < 0) index_size = max_index + 1;
  return FiniteTree(index_size, std::move(nodes));
}

std::string serialize_tree(const FiniteTree& tree) {
  std::string out;
  for (const NodeSeq& t : tree.nodes()) {
    out += node_to_string(t);
    out.push_back('\n');
  }
  return out;
}

BorelCode parse_borel_code(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad code JSON: ") + e.what());
  }
  try {
    const int alpha = j.at("alpha").get<int>();
    const int m = j.at("m").get<int>();
    std::set<NodeSeq> nodes;
    for (const auto& item : j.at("tree"))
      nodes.insert(node_from_string(item.get<std::string>()));
    std::map<NodeSeq, VertexSet> leaves;
    for (const auto& [key, value] : j.at("leaves").items()) {
      VertexSet members = value.get<VertexSet>();
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      leaves.emplace(node_from_string(key), std::move(members));
    }
    return BorelCode(alpha, FiniteTree(alpha * alpha, std::move(nodes)),
                     std::move(leaves), m);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad code JSON: ") + e.what());
  }
}

std::string serialize_borel_code(const BorelCode& code) {
  json j;
  j["alpha"] = code.alpha;
  j["m"] = code.ground_size;
  json tree = json::array();
  for (const NodeSeq& t : code.tree.nodes()) tree.push_back(node_to_string(t));
  j["tree"] = std::move(tree);
  json leaves = json::object();
  for (const auto& [t, members] : code.leaf_map)
    leaves[node_to_string(t)] = members;
  j["leaves"] = std::move(leaves);
  return j.dump(2) + "\n";
}

}  // namespace qolab
