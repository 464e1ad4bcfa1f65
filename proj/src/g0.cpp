#include "qolab/g0.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qolab {

namespace {

// n-th binary word in length-then-lexicographic order (index 0 = empty).
std::string length_lex_word(int index) {
  int length = 0;
  int first = 0;  // index of the first word of this length
  while (index - first >= (1 << length)) {
    first += 1 << length;
    ++length;
  }
  const int value = index - first;
  std::string word(length, '0');
  for (int i = 0; i < length; ++i)
    if (value >> (length - 1 - i) & 1) word[i] = '1';
  return word;
}

}  // namespace

DenseSequences dense_sequences(int levels) {
  if (levels < 0)
    throw Error(ErrorCode::InvalidArgument, "negative level count");
  DenseSequences out;
  out.words.reserve(levels);
  for (int n = 0; n < levels; ++n) {
    std::string w = length_lex_word(n);
    w.resize(n, '0');  // length-lex index is never below the word length
    out.words.push_back(std::move(w));
  }
  return out;
}

DenseSequences dense_sequences_from_words(std::vector<std::string> words) {
  for (std::size_t n = 0; n < words.size(); ++n) {
    if (words[n].size() != n)
      throw Error(ErrorCode::MalformedInput,
                  "level " + std::to_string(n) + " word has length " +
                      std::to_string(words[n].size()));
    for (char c : words[n])
      if (c != '0' && c != '1')
        throw Error(ErrorCode::MalformedInput,
                    "level " + std::to_string(n) + " word has character '" +
                        std::string(1, c) + "'");
  }
  return DenseSequences{std::move(words)};
}

bool density_holds(const DenseSequences& seqs) {
  const int levels = seqs.levels();
  for (int index = 0; index < levels; ++index) {
    const std::string target = length_lex_word(index);
    bool found = false;
    for (int n = 0; n < levels && !found; ++n)
      found = seqs.words[n].compare(0, target.size(), target) == 0 &&
              target.size() <= seqs.words[n].size();
    if (!found) return false;
  }
  return true;
}

G0Level g0_level(int word_length, const DenseSequences& seqs) {
  if (word_length < 0 || word_length > 20)
    throw Error(ErrorCode::BudgetExceeded,
                "level " + std::to_string(word_length) + " outside 0..20");
  if (seqs.levels() < word_length)
    throw Error(ErrorCode::InvalidArgument, "not enough dense-sequence levels");
  G0Level level;
  level.word_length = word_length;
  for (int n = 0; n < word_length; ++n) {
    std::uint32_t prefix = 0;
    for (char c : seqs.words[n]) prefix = prefix << 1 | (c == '1');
    const int suffix_bits = word_length - n - 1;
    for (std::uint32_t c = 0; c < (1u << suffix_bits); ++c) {
      const std::uint32_t base = prefix << (suffix_bits + 1) | c;
      level.edges.emplace_back(base, base | (1u << suffix_bits));
    }
  }
  std::sort(level.edges.begin(), level.edges.end());
  return level;
}

G0Level g0_level(int word_length) {
  return g0_level(word_length, dense_sequences(std::max(word_length, 0)));
}

Graph g0_graph(const G0Level& level) {
  if (level.word_length > 14)
    throw Error(ErrorCode::BudgetExceeded,
                "matrix view limited to word length 14");
  FiniteRelation rel(static_cast<int>(level.vertex_count()));
  for (auto [a, b] : level.edges) {
    rel.set(static_cast<int>(a), static_cast<int>(b));
    rel.set(static_cast<int>(b), static_cast<int>(a));
  }
  return Graph(std::move(rel));
}

G0Stats g0_stats(const G0Level& level) {
  G0Stats stats;
  const std::uint64_t n = level.vertex_count();
  stats.vertices = n;
  stats.edges = level.edges.size();

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::uint64_t components = n;
  for (auto [a, b] : level.edges) {
    const std::uint32_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  stats.connected = components <= 1;

  std::vector<std::vector<std::uint32_t>> adjacency(n);
  for (auto [a, b] : level.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<signed char> side(n, -1);
  stats.bipartite = true;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < n && stats.bipartite; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    stack.push_back(start);
    while (!stack.empty() && stats.bipartite) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t u : adjacency[v]) {
        if (side[u] == -1) {
          side[u] = static_cast<signed char>(1 - side[v]);
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          stats.bipartite = false;
          break;
        }
      }
    }
  }
  // 0 marks "not determined"; levels are one-bit-flip graphs, hence
  // subgraphs of a hypercube, so the bipartite case is the expected one.
  stats.chi = stats.edges > 0 ? (stats.bipartite ? 2 : 0) : (n > 0 ? 1 : 0);
  return stats;
}

std::uint32_t g0_vertex_of_word(const std::string& word) {
  std::uint32_t v = 0;
  for (char c : word) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::MalformedInput, "binary word expected");
    v = v << 1 | (c == '1');
  }
  return v;
}

std::string g0_word_of_vertex(std::uint32_t vertex, int word_length) {
  std::string word(word_length, '0');
  for (int i = 0; i < word_length; ++i)
    if (vertex >> (word_length - 1 - i) & 1) word[i] = '1';
  return word;
}

std::optional<std::vector<int>> hom_search(const Graph& g, const Graph& h,
                                           Budget* budget) {
  if (g.size() > (1 << 14))
    throw Error(ErrorCode::InvalidArgument, "pattern graph too large");
  if (h.size() > 64)
    throw Error(ErrorCode::InvalidArgument, "target graph too large");
  Budget local;
  Budget& b = resolve_budget(budget, local);
  const int n = g.size();
  const int m = h.size();
  if (n == 0) return std::vector<int>{};
  if (m == 0) return std::nullopt;

  std::vector<std::uint64_t> target_adj(m, 0);
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d)
      if (h.adjacent(c, d)) target_adj[c] |= 1ull << d;
  const std::uint64_t full = m == 64 ? ~0ull : (1ull << m) - 1;

  std::vector<std::vector<int>> later_neighbors(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (g.adjacent(v, u)) later_neighbors[v].push_back(u);

  std::vector<std::uint64_t> candidates(n, full);
  std::vector<int> image(n, -1);
  // Forward checking keeps the merge conflicts of sparse patterns cheap
  // while the vertex-in-index-order, value-ascending search keeps the first
  // solution lexicographically least.
  std::vector<std::vector<std::pair<int, std::uint64_t>>> undo(n);

  auto assign = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    std::uint64_t options = candidates[v];
    while (options) {
      b.spend();
      const int c = __builtin_ctzll(options);
      options &= options - 1;
      image[v] = c;
      bool feasible = true;
      undo[v].clear();
      for (int u : later_neighbors[v]) {
        const std::uint64_t next = candidates[u] & target_adj[c];
        if (next != candidates[u]) {
          undo[v].emplace_back(u, candidates[u]);
          candidates[u] = next;
          if (next == 0) feasible = false;
        }
      }
      if (feasible && self(self, v + 1)) return true;
      for (auto [u, mask] : undo[v]) candidates[u] = mask;
      undo[v].clear();
    }
    image[v] = -1;
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return image;
}

std::string serialize_dense_sequences(const DenseSequences& seqs) {
  std::string out;
  for (const std::string& w : seqs.words) {
    out += w.empty() ? "-" : w;
    out.push_back('\n');
  }
  return out;
}

DenseSequences parse_dense_sequences(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::string> words;
  while (std::getline(in, raw)) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line == "-" ? std::string() : line);
  }
  return dense_sequences_from_words(std::move(words));
}

}  // namespace qolab
