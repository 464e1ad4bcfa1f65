#include "qolab/aux_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qolab {

namespace {

// Vertex order for the branch-and-bound passes: descending degree, index
// tie-break.
std::vector<int> degree_order(const Graph& g) {
  const int n = g.size();
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) ++degree[i];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  return order;
}

// Greedy clique along the degree order; cheap chromatic lower bound.
int greedy_clique_bound(const Graph& g, const std::vector<int>& order) {
  VertexSet clique;
  for (int v : order) {
    bool fits = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        fits = false;
        break;
      }
    if (fits) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

int greedy_coloring_bound(const Graph& g, const std::vector<int>& order) {
  const int n = g.size();
  std::vector<int> color(n, -1);
  int used = 0;
  for (int v : order) {
    std::vector<char> taken(n + 1, 0);
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && color[u] >= 0) taken[color[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

bool color_backtrack(const Graph& g, const std::vector<int>& order, int k,
                     std::vector<int>& color, int pos, int used, Budget& b) {
  if (pos == static_cast<int>(order.size())) return true;
  const int v = order[pos];
  // Allowing at most one fresh color per step breaks color symmetry.
  const int limit = std::min(k - 1, used);
  for (int c = 0; c <= limit; ++c) {
    b.spend();
    bool ok = true;
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(v, u) && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_backtrack(g, order, k, color, pos + 1, std::max(used, c + 1), b))
      return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

bool try_color(const Graph& g, int k, std::vector<int>* out_colors,
               Budget* budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative color count");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const int n = g.size();
  if (n == 0) {
    if (out_colors) out_colors->clear();
    return true;
  }
  if (k == 0) return false;
  std::vector<int> color(n, -1);
  const std::vector<int> order = degree_order(g);
  if (!color_backtrack(g, order, k, color, 0, 0, b)) return false;
  if (out_colors) *out_colors = color;
  return true;
}

ColoringCertificate chromatic_number(const Graph& g, Budget* budget) {
  Budget local;
  Budget& b = resolve_budget(budget, local);
  ColoringCertificate cert;
  const int n = g.size();
  if (n == 0) return cert;
  const std::vector<int> order = degree_order(g);
  const int lower = std::max(1, greedy_clique_bound(g, order));
  const int upper = greedy_coloring_bound(g, order);
  for (int k = lower; k <= upper; ++k) {
    std::vector<int> colors;
    if (try_color(g, k, &colors, &b)) {
      cert.k = k;
      cert.colors = std::move(colors);
      return cert;
    }
  }
  throw Error(ErrorCode::PropositionViolated,
              "greedy upper bound is not colorable");  // unreachable
}

void enumerate_colorings(const Graph& g, int k,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         Budget* budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative color count");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const int n = g.size();
  std::vector<int> color(n, -1);
  bool stopped = false;

  auto rec = [&](auto&& self, int v) -> void {
    if (stopped) return;
    if (v == n) {
      if (!visit(color)) stopped = true;
      return;
    }
    for (int c = 0; c < k && !stopped; ++c) {
      b.spend();
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.adjacent(v, u) && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
      color[v] = -1;
    }
  };
  if (n == 0) {
    visit(color);
    return;
  }
  rec(rec, 0);
}

std::vector<std::vector<int>> all_colorings(const Graph& g, int k, Budget* budget) {
  std::vector<std::vector<int>> out;
  enumerate_colorings(
      g, k,
      [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

Graph contract_vertices(const Graph& g, Vertex x, Vertex y) {
  g.rel().check_vertex(x);
  g.rel().check_vertex(y);
  if (x == y)
    throw Error(ErrorCode::InvalidArgument, "cannot merge a vertex with itself");
  if (g.adjacent(x, y))
    throw Error(ErrorCode::InvalidArgument, "cannot merge adjacent vertices");
  if (x > y) std::swap(x, y);
  const int n = g.size();
  FiniteRelation rel(n - 1);
  auto remap = [&](Vertex v) { return v < y ? v : v - 1; };
  for (int i = 0; i < n; ++i) {
    if (i == y) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == y || !g.adjacent(i, j)) continue;
      rel.set(remap(i), remap(j));
      rel.set(remap(j), remap(i));
    }
  }
  for (int u = 0; u < n; ++u) {
    if (u == y || u == x || !g.adjacent(y, u)) continue;
    rel.set(remap(x), remap(u));
    rel.set(remap(u), remap(x));
  }
  return Graph(std::move(rel));
}

AuxGraph aux_graph(const Graph& g, Budget* budget) {
  if (g.size() == 0)
    throw Error(ErrorCode::InvalidArgument,
                "auxiliary graph needs a non-empty ground set");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const ColoringCertificate cert = chromatic_number(g, &b);
  FiniteRelation aux = g.rel();
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y) {
      if (g.adjacent(x, y)) continue;
      // Some optimal coloring merges x,y iff the contraction stays
      // chi-colorable.
      const Graph merged = contract_vertices(g, x, y);
      if (!try_color(merged, cert.k, nullptr, &b)) {
        aux.set(x, y);
        aux.set(y, x);
      }
    }
  return AuxGraph{g, cert.k, Graph(std::move(aux))};
}

AuxGraph aux_graph_bruteforce(const Graph& g, Budget* budget) {
  if (g.size() == 0)
    throw Error(ErrorCode::InvalidArgument,
                "auxiliary graph needs a non-empty ground set");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const ColoringCertificate cert = chromatic_number(g, &b);
  const int n = g.size();
  std::vector<char> merged_somewhere(static_cast<std::size_t>(n) * n, 0);
  enumerate_colorings(
      g, cert.k,
      [&](const std::vector<int>& colors) {
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y)
            if (colors[x] == colors[y])
              merged_somewhere[static_cast<std::size_t>(x) * n + y] = 1;
        return true;
      },
      &b);
  FiniteRelation aux = g.rel();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      if (!merged_somewhere[static_cast<std::size_t>(x) * n + y]) {
        aux.set(x, y);
        aux.set(y, x);
      }
    }
  return AuxGraph{g, cert.k, Graph(std::move(aux))};
}

bool always_separated(const Graph& g, const VertexSet& subset, Vertex x,
                      Vertex y, int colors, Budget* budget) {
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const Graph sub = g.induced(subset);
  const auto xi = std::lower_bound(subset.begin(), subset.end(), x);
  const auto yi = std::lower_bound(subset.begin(), subset.end(), y);
  if (xi == subset.end() || *xi != x || yi == subset.end() || *yi != y)
    throw Error(ErrorCode::InvalidArgument, "pair not inside the subset");
  const int lx = static_cast<int>(xi - subset.begin());
  const int ly = static_cast<int>(yi - subset.begin());
  if (sub.adjacent(lx, ly)) return true;
  const Graph merged = contract_vertices(sub, lx, ly);
  return !try_color(merged, colors, nullptr, &b);
}

namespace {

// Subsets of {0,...,n-1} of a fixed size in lexicographic order.
bool next_combination(VertexSet& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

VertexSet minimal_pair_witness(const Graph& g, int chi, Vertex x, Vertex y,
                               Budget& b) {
  const int n = g.size();
  for (int size = 2; size <= n; ++size) {
    VertexSet comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      if (!std::binary_search(comb.begin(), comb.end(), x) ||
          !std::binary_search(comb.begin(), comb.end(), y))
        continue;
      b.spend();
      if (always_separated(g, comb, x, y, chi, &b)) return comb;
    } while (next_combination(comb, n));
  }
  throw Error(ErrorCode::PropositionViolated,
              "whole ground set fails to separate a supergraph pair");
}

}  // namespace

VertexSet witness_set(const Graph& g,
                      const std::vector<std::pair<Vertex, Vertex>>& pairs,
                      Budget* budget) {
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const AuxGraph ag = aux_graph(g, &b);
  return witness_set(g, ag, pairs, &b);
}

VertexSet witness_set(const Graph& g, const AuxGraph& ag,
                      const std::vector<std::pair<Vertex, Vertex>>& pairs,
                      Budget* budget) {
  Budget local;
  Budget& b = resolve_budget(budget, local);
  for (auto [x, y] : pairs) {
    g.rel().check_vertex(x);
    g.rel().check_vertex(y);
    if (x == y || !ag.aux.adjacent(x, y))
      throw Error(ErrorCode::NotInAuxGraph,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") is not in the auxiliary graph");
  }
  VertexSet result;
  for (auto [x, y] : pairs) {
    const VertexSet w = minimal_pair_witness(g, ag.chi, x, y, b);
    result.insert(result.end(), w.begin(), w.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  if (pairs.size() > 1) {
    // The union must force every listed pair apart in every optimal
    // coloring of its restriction; confirmed by enumeration.
    const Graph sub = g.induced(result);
    std::vector<std::pair<int, int>> local_pairs;
    for (auto [x, y] : pairs) {
      const int lx = static_cast<int>(
          std::lower_bound(result.begin(), result.end(), x) - result.begin());
      const int ly = static_cast<int>(
          std::lower_bound(result.begin(), result.end(), y) - result.begin());
      local_pairs.emplace_back(lx, ly);
    }
    bool ok = true;
    enumerate_colorings(
        sub, ag.chi,
        [&](const std::vector<int>& colors) {
          for (auto [lx, ly] : local_pairs)
            if (colors[lx] == colors[ly]) {
              ok = false;
              return false;
            }
          return true;
        },
        &b);
    if (!ok)
      throw Error(ErrorCode::PropositionViolated,
                  "union of pair witnesses fails to separate a listed pair");
  }
  return result;
}

namespace {

void clique_backtrack(const Graph& g, VertexSet& current, int from,
                      VertexSet& best, Budget& b) {
  if (current.size() > best.size()) best = current;
  for (int v = from; v < g.size(); ++v) {
    b.spend();
    if (static_cast<int>(current.size()) + (g.size() - v) <=
        static_cast<int>(best.size()))
      return;  // cannot beat the incumbent
    bool ok = true;
    for (int u : current)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(v);
    clique_backtrack(g, current, v + 1, best, b);
    current.pop_back();
  }
}

}  // namespace

VertexSet max_clique(const Graph& g, Budget* budget) {
  Budget local;
  Budget& b = resolve_budget(budget, local);
  VertexSet best, current;
  clique_backtrack(g, current, 0, best, b);
  return best;
}

bool has_clique_of_size(const Graph& g, const VertexSet& within, int k,
                        Budget* budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative clique size");
  if (k == 0) return true;
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const Graph sub = g.induced(within);
  bool found = false;
  VertexSet current;
  auto rec = [&](auto&& self, int from) -> void {
    if (found) return;
    if (static_cast<int>(current.size()) == k) {
      found = true;
      return;
    }
    const int missing = k - static_cast<int>(current.size());
    for (int v = from; v + missing <= sub.size() && !found; ++v) {
      b.spend();
      bool ok = true;
      for (int u : current)
        if (!sub.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace qolab
