#include "qolab/relation.hpp"

#include <algorithm>
#include <sstream>

#include "qolab/rng.hpp"

namespace qolab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotQuasiOrder: return "NotQuasiOrder";
    case ErrorCode::NotGraph: return "NotGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotInAuxGraph: return "NotInAuxGraph";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::PropositionViolated: return "PropositionViolated";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::MissingLeaf: return "MissingLeaf";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

QuasiOrderVerdict is_quasi_order(const FiniteRelation& rel) {
  const int n = rel.size();
  QuasiOrderVerdict v;
  for (int i = 0; i < n; ++i) {
    if (!rel.test(i, i)) {
      v.ok = false;
      v.reflexivity = true;
      v.i = i;
      return v;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rel.test(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (rel.test(j, k) && !rel.test(i, k)) {
          v.ok = false;
          v.i = i;
          v.j = j;
          v.k = k;
          return v;
        }
    }
  return v;
}

GraphVerdict is_graph(const FiniteRelation& rel) {
  const int n = rel.size();
  GraphVerdict v;
  for (int i = 0; i < n; ++i) {
    if (rel.test(i, i)) {
      v.ok = false;
      v.irreflexivity = true;
      v.i = i;
      return v;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel.test(i, j) != rel.test(j, i)) {
        v.ok = false;
        v.i = rel.test(i, j) ? i : j;
        v.j = rel.test(i, j) ? j : i;
        return v;
      }
  return v;
}

QuasiOrder::QuasiOrder(FiniteRelation rel) : rel_(std::move(rel)) {
  const QuasiOrderVerdict v = is_quasi_order(rel_);
  if (!v.ok) {
    std::string msg = v.reflexivity
                          ? "vertex " + std::to_string(v.i) + " is not reflexive"
                          : "transitivity fails at (" + std::to_string(v.i) +
                                "," + std::to_string(v.j) + "," +
                                std::to_string(v.k) + ")";
    throw Error(ErrorCode::NotQuasiOrder, msg);
  }
}

QuasiOrder QuasiOrder::induced(const VertexSet& vertices) const {
  const int m = static_cast<int>(vertices.size());
  FiniteRelation sub(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (le(vertices[a], vertices[b])) sub.set(a, b);
  return QuasiOrder(std::move(sub));
}

Graph::Graph(FiniteRelation rel) : rel_(std::move(rel)) {
  const GraphVerdict v = is_graph(rel_);
  if (!v.ok) {
    std::string msg = v.irreflexivity
                          ? "loop at vertex " + std::to_string(v.i)
                          : "edge (" + std::to_string(v.i) + "," +
                                std::to_string(v.j) + ") lacks its reverse";
    throw Error(ErrorCode::NotGraph, msg);
  }
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

VertexSet Graph::neighbors(Vertex v) const {
  rel_.check_vertex(v);
  VertexSet out;
  for (int u = 0; u < size(); ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
  const int m = static_cast<int>(vertices.size());
  FiniteRelation sub(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (adjacent(vertices[a], vertices[b])) sub.set(a, b);
  return Graph(std::move(sub));
}

Graph Graph::edgeless(int n) { return Graph(FiniteRelation(n)); }

Graph Graph::complete(int n) {
  FiniteRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) rel.set(i, j);
  return Graph(std::move(rel));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  FiniteRelation rel(n);
  for (auto [a, b] : edges) {
    rel.check_vertex(a);
    rel.check_vertex(b);
    if (a == b)
      throw Error(ErrorCode::InvalidArgument,
                  "loop at vertex " + std::to_string(a));
    rel.set(a, b);
    rel.set(b, a);
  }
  return Graph(std::move(rel));
}

FiniteRelation derive(const QuasiOrder& q, DeriveKind kind) {
  const int n = q.size();
  FiniteRelation out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bit = false;
      switch (kind) {
        case DeriveKind::Comparable: bit = q.comparable(i, j); break;
        case DeriveKind::Equivalence: bit = q.equivalent(i, j); break;
        case DeriveKind::Incomparable: bit = i != j && q.incomparable(i, j); break;
        case DeriveKind::Strict: bit = q.strictly_less(i, j); break;
      }
      if (bit) out.set(i, j);
    }
  return out;
}

Graph incomparability_graph(const QuasiOrder& q) {
  return Graph(derive(q, DeriveKind::Incomparable));
}

QuotientPoset quotient(const QuasiOrder& q) {
  const int n = q.size();
  std::vector<int> class_of(n, -1);
  std::vector<VertexSet> classes;
  for (int v = 0; v < n; ++v) {
    if (class_of[v] != -1) continue;
    const int id = static_cast<int>(classes.size());
    VertexSet members;
    for (int u = v; u < n; ++u)
      if (q.equivalent(v, u)) {
        class_of[u] = id;
        members.push_back(u);
      }
    classes.push_back(std::move(members));
  }
  const int m = static_cast<int>(classes.size());
  FiniteRelation order_rel(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (q.le(classes[a][0], classes[b][0])) order_rel.set(a, b);
  QuotientPoset result{std::move(classes), QuasiOrder(std::move(order_rel)),
                       std::move(class_of)};
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (result.order.equivalent(a, b))
        throw Error(ErrorCode::PropositionViolated,
                    "quotient order is not antisymmetric");
  return result;
}

VertexSet interval(const QuasiOrder& q, Vertex x, Vertex y, IntervalKind kind) {
  q.rel().check_vertex(x);
  q.rel().check_vertex(y);
  VertexSet out;
  for (int z = 0; z < q.size(); ++z) {
    if (!(q.le(x, z) && q.le(z, y))) continue;
    if (kind == IntervalKind::OpenClosed && q.equivalent(x, z)) continue;
    out.push_back(z);
  }
  return out;
}

VertexSet section(const FiniteRelation& rel, Vertex v, SectionSide side) {
  rel.check_vertex(v);
  VertexSet out;
  for (int u = 0; u < rel.size(); ++u) {
    const bool related =
        side == SectionSide::Vertical ? rel.test(v, u) : rel.test(u, v);
    if (related) out.push_back(u);
  }
  return out;
}

void transitive_close(FiniteRelation& rel) {
  const int n = rel.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel.test(i, k)) rel.matrix().or_row_into(k, i);
}

void reflexive_close(FiniteRelation& rel) {
  for (int i = 0; i < rel.size(); ++i) rel.set(i, i);
}

QuasiOrder random_quasi_order(int n, double density, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ground set size");
  Rng rng(seed);
  FiniteRelation rel(n);

  // Random linear order as permutation positions.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint32_t>(i + 1))]);

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.chance(density)) rel.set(perm[a], perm[b]);
  transitive_close(rel);
  reflexive_close(rel);

  // Merge a few cover pairs into equivalence classes of size at most 3.
  QuasiOrder q(rel);
  auto class_members = [&](Vertex v) {
    VertexSet members;
    for (int u = 0; u < n; ++u)
      if (q.equivalent(v, u)) members.push_back(u);
    return members;
  };
  const int attempts = n;
  for (int t = 0; t < attempts; ++t) {
    if (n < 2) break;
    const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint32_t>(n)));
    const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint32_t>(n)));
    const bool apply = rng.chance(0.15);
    if (!apply || !q.strictly_less(u, v)) continue;
    const VertexSet cu = class_members(u), cv = class_members(v);
    if (cu.size() + cv.size() > 3) continue;
    // Merging is safe only when nothing else sits strictly between.
    const VertexSet between = interval(q, u, v, IntervalKind::Closed);
    VertexSet allowed = cu;
    allowed.insert(allowed.end(), cv.begin(), cv.end());
    std::sort(allowed.begin(), allowed.end());
    if (!std::includes(allowed.begin(), allowed.end(), between.begin(),
                       between.end()))
      continue;
    FiniteRelation merged = q.rel();
    for (Vertex a : cv)
      for (Vertex b : cu) merged.set(a, b);
    transitive_close(merged);
    q = QuasiOrder(std::move(merged));
  }
  return q;
}

Graph random_graph(int n, double density, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ground set size");
  Rng rng(seed);
  FiniteRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(density)) {
        rel.set(i, j);
        rel.set(j, i);
      }
  return Graph(std::move(rel));
}

namespace {

std::string strip_line(const std::string& line) {
  std::string s = line;
  if (!s.empty() && s.back() == '\r') s.pop_back();
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  return s.substr(start);
}

}  // namespace

FiniteRelation parse_relation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  int rows_read = 0;
  FiniteRelation rel;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_line(raw);
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      try {
        std::size_t used = 0;
        n = std::stoi(line, &used);
        if (used != line.size() || n < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedInput,
                    "line " + std::to_string(line_no) +
                        ": expected a non-negative decimal size, got \"" + line +
                        "\"");
      }
      rel = FiniteRelation(n);
      continue;
    }
    if (rows_read >= n)
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": unexpected content after " +
                      std::to_string(n) + " rows");
    if (static_cast<int>(line.size()) != n)
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": row has " +
                      std::to_string(line.size()) + " characters, expected " +
                      std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (line[j] == '1')
        rel.set(rows_read, j);
      else if (line[j] != '0')
        throw Error(ErrorCode::MalformedInput,
                    "line " + std::to_string(line_no) + ": character '" +
                        std::string(1, line[j]) + "' is not 0/1");
    }
    ++rows_read;
  }
  if (n < 0)
    throw Error(ErrorCode::MalformedInput, "missing size line");
  if (rows_read != n)
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(n) + " rows, found " +
                    std::to_string(rows_read));
  return rel;
}

QuasiOrder parse_quasi_order(const std::string& text) {
  return QuasiOrder(parse_relation(text));
}

Graph parse_graph(const std::string& text) {
  return Graph(parse_relation(text));
}

std::string serialize_relation(const FiniteRelation& rel) {
  const int n = rel.size();
  std::string out = std::to_string(n);
  out.push_back('\n');
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(rel.test(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

bool is_chain(const QuasiOrder& q, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (q.incomparable(vertices[a], vertices[b])) return false;
  return true;
}

bool is_antichain(const QuasiOrder& q, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (q.comparable(vertices[a], vertices[b])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

}  // namespace qolab
