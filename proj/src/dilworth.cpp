#include "qolab/dilworth.hpp"

#include <algorithm>

namespace qolab {

namespace {

// Kuhn's augmenting-path matching. adj[i] lists right endpoints of left
// vertex i in ascending order, so the matching is deterministic.
struct BipartiteMatching {
  explicit BipartiteMatching(std::vector<std::vector<int>> adj, int right_size)
      : adj_(std::move(adj)),
        match_left_(adj_.size(), -1),
        match_right_(right_size, -1),
        visited_(right_size, 0) {}

  int solve() {
    int matched = 0;
    for (int i = 0; i < static_cast<int>(adj_.size()); ++i) {
      std::fill(visited_.begin(), visited_.end(), 0);
      if (augment(i)) ++matched;
    }
    return matched;
  }

  const std::vector<int>& match_left() const { return match_left_; }
  const std::vector<int>& match_right() const { return match_right_; }

 private:
  bool augment(int left) {
    for (int right : adj_[left]) {
      if (visited_[right]) continue;
      visited_[right] = 1;
      if (match_right_[right] == -1 || augment(match_right_[right])) {
        match_right_[right] = left;
        match_left_[left] = right;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<char> visited_;
};

std::vector<std::vector<int>> strict_class_adjacency(const QuotientPoset& qp) {
  const int m = static_cast<int>(qp.classes.size());
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && qp.order.le(a, b)) adj[a].push_back(b);
  return adj;
}

}  // namespace

int poset_width(const QuasiOrder& q) {
  if (q.size() == 0) return 0;
  const QuotientPoset qp = quotient(q);
  const int m = static_cast<int>(qp.classes.size());
  BipartiteMatching matching(strict_class_adjacency(qp), m);
  return m - matching.solve();
}

std::optional<VertexSet> least_antichain_of_size(const QuasiOrder& q, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative antichain size");
  if (k == 0) return VertexSet{};
  if (poset_width(q) < k) return std::nullopt;
  const int n = q.size();
  VertexSet chosen;
  VertexSet candidates(n);
  for (int v = 0; v < n; ++v) candidates[v] = v;
  // Greedy in vertex order; a vertex joins when the candidates above it can
  // still complete the antichain (width check on the induced sub-order).
  for (int v = 0; v < n && static_cast<int>(chosen.size()) < k; ++v) {
    bool compatible = true;
    for (Vertex u : chosen)
      if (q.comparable(u, v)) {
        compatible = false;
        break;
      }
    if (!compatible) continue;
    const int needed = k - static_cast<int>(chosen.size()) - 1;
    if (needed > 0) {
      VertexSet rest;
      for (int u = v + 1; u < n; ++u) {
        if (q.comparable(u, v)) continue;
        bool ok = true;
        for (Vertex w : chosen)
          if (q.comparable(u, w)) {
            ok = false;
            break;
          }
        if (ok) rest.push_back(u);
      }
      if (poset_width(q.induced(rest)) < needed) continue;
    }
    chosen.push_back(v);
  }
  if (static_cast<int>(chosen.size()) != k)
    throw Error(ErrorCode::PropositionViolated,
                "lexicographic antichain extraction lost feasibility");
  return chosen;
}

WidthResult width_and_antichain(const QuasiOrder& q) {
  WidthResult result;
  result.width = poset_width(q);
  result.antichain = *least_antichain_of_size(q, result.width);
  return result;
}

ChainCover min_chain_cover(const QuasiOrder& q) {
  ChainCover cover;
  if (q.size() == 0) return cover;
  const QuotientPoset qp = quotient(q);
  const int m = static_cast<int>(qp.classes.size());
  BipartiteMatching matching(strict_class_adjacency(qp), m);
  matching.solve();
  const std::vector<int>& next = matching.match_left();
  const std::vector<int>& prev = matching.match_right();
  for (int start = 0; start < m; ++start) {
    if (prev[start] != -1) continue;  // interior of some path
    VertexSet chain;
    for (int c = start; c != -1; c = next[c])
      chain.insert(chain.end(), qp.classes[c].begin(), qp.classes[c].end());
    std::sort(chain.begin(), chain.end());
    cover.chains.push_back(std::move(chain));
  }
  std::sort(cover.chains.begin(), cover.chains.end());
  return cover;
}

std::vector<VertexSet> enumerate_antichains(const QuasiOrder& q, int k,
                                            Budget* budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative antichain size");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  std::vector<VertexSet> out;
  VertexSet current;
  const int n = q.size();

  auto extend = [&](auto&& self, int from) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    const int missing = k - static_cast<int>(current.size());
    for (int v = from; v + missing <= n; ++v) {
      b.spend();
      bool ok = true;
      for (Vertex u : current)
        if (q.comparable(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

bool check_chain_cover(const QuasiOrder& q, const ChainCover& cover) {
  std::vector<char> seen(q.size(), 0);
  for (const VertexSet& chain : cover.chains) {
    if (!is_chain(q, chain)) return false;
    for (Vertex v : chain) {
      if (v < 0 || v >= q.size() || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; });
}

}  // namespace qolab
