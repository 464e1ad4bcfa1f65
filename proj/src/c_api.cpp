#include "qolab/qolab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "qolab/aux_graph.hpp"
#include "qolab/dilworth.hpp"
#include "qolab/g0.hpp"
#include "qolab/harness.hpp"
#include "qolab/paper_procedures.hpp"
#include "qolab/relation.hpp"
#include "qolab/tree_borel.hpp"

struct qolab_relation {
  qolab::FiniteRelation rel;
};

struct qolab_cover {
  std::vector<qolab::VertexSet> chains;
  std::vector<qolab::VertexSet> layers;
};

struct qolab_tree {
  qolab::FiniteTree tree;
};

struct qolab_borel {
  qolab::BorelCode code;
};

namespace {

thread_local std::string g_last_error;

qolab_status map_code(qolab::ErrorCode code) {
  using qolab::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedInput: return QOLAB_ERR_MALFORMED_INPUT;
    case ErrorCode::InvalidArgument: return QOLAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::IndexOutOfRange: return QOLAB_ERR_INDEX_RANGE;
    case ErrorCode::NotQuasiOrder: return QOLAB_ERR_NOT_QUASI_ORDER;
    case ErrorCode::NotGraph: return QOLAB_ERR_NOT_GRAPH;
    case ErrorCode::BudgetExceeded: return QOLAB_ERR_BUDGET_EXCEEDED;
    case ErrorCode::NotInAuxGraph: return QOLAB_ERR_NOT_IN_AUX_GRAPH;
    case ErrorCode::NotAntichain: return QOLAB_ERR_NOT_ANTICHAIN;
    case ErrorCode::WrongCardinality: return QOLAB_ERR_WRONG_CARDINALITY;
    case ErrorCode::NotIndependent: return QOLAB_ERR_NOT_INDEPENDENT;
    case ErrorCode::PropositionViolated: return QOLAB_ERR_PROPOSITION_VIOLATED;
    case ErrorCode::HypothesisViolated: return QOLAB_ERR_HYPOTHESIS_VIOLATED;
    case ErrorCode::MissingLeaf: return QOLAB_ERR_MISSING_LEAF;
    case ErrorCode::Io: return QOLAB_ERR_IO;
  }
  return QOLAB_ERR_UNKNOWN;
}

template <typename F>
qolab_status wrap(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QOLAB_OK;
  } catch (const qolab::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QOLAB_ERR_UNKNOWN;
  }
}

qolab_status fail_null_argument() {
  g_last_error = "null argument";
  return QOLAB_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void fill_vertices(const qolab::VertexSet& vertices, int32_t* out,
                   int32_t* out_count) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out[i] = static_cast<int32_t>(vertices[i]);
  *out_count = static_cast<int32_t>(vertices.size());
}

qolab::Budget make_budget(uint64_t limit) { return qolab::Budget(limit); }

qolab::G0Level build_level(int32_t word_length, const char* sequences) {
  if (sequences)
    return qolab::g0_level(word_length, qolab::parse_dense_sequences(sequences));
  return qolab::g0_level(word_length);
}

}  // namespace

extern "C" {

const char* qolab_status_name(qolab_status status) {
  switch (status) {
    case QOLAB_OK: return "ok";
    case QOLAB_ERR_MALFORMED_INPUT: return "malformed_input";
    case QOLAB_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case QOLAB_ERR_INDEX_RANGE: return "index_out_of_range";
    case QOLAB_ERR_NOT_QUASI_ORDER: return "not_quasi_order";
    case QOLAB_ERR_NOT_GRAPH: return "not_graph";
    case QOLAB_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case QOLAB_ERR_NOT_IN_AUX_GRAPH: return "not_in_aux_graph";
    case QOLAB_ERR_NOT_ANTICHAIN: return "not_antichain";
    case QOLAB_ERR_WRONG_CARDINALITY: return "wrong_cardinality";
    case QOLAB_ERR_NOT_INDEPENDENT: return "not_independent";
    case QOLAB_ERR_PROPOSITION_VIOLATED: return "proposition_violated";
    case QOLAB_ERR_HYPOTHESIS_VIOLATED: return "hypothesis_violated";
    case QOLAB_ERR_MISSING_LEAF: return "missing_leaf";
    case QOLAB_ERR_IO: return "io_error";
    case QOLAB_ERR_UNKNOWN: break;
  }
  return "unknown";
}

const char* qolab_last_error(void) { return g_last_error.c_str(); }

void qolab_string_free(char* text) { std::free(text); }

qolab_status qolab_relation_parse(const char* text, qolab_relation** out) {
  if (!text || !out) return fail_null_argument();
  return wrap([&] { *out = new qolab_relation{qolab::parse_relation(text)}; });
}

void qolab_relation_free(qolab_relation* rel) { delete rel; }

int32_t qolab_relation_size(const qolab_relation* rel) {
  return rel ? rel->rel.size() : 0;
}

qolab_status qolab_relation_test(const qolab_relation* rel, int32_t i, int32_t j,
                                 int* out_related) {
  if (!rel || !out_related) return fail_null_argument();
  return wrap([&] {
    rel->rel.check_vertex(i);
    rel->rel.check_vertex(j);
    *out_related = rel->rel.test(i, j) ? 1 : 0;
  });
}

qolab_status qolab_relation_serialize(const qolab_relation* rel, char** out_text) {
  if (!rel || !out_text) return fail_null_argument();
  return wrap([&] { *out_text = copy_string(qolab::serialize_relation(rel->rel)); });
}

qolab_status qolab_check_quasi_order(const qolab_relation* rel, int* out_ok,
                                     int* out_kind, int32_t out_witness[3]) {
  if (!rel || !out_ok || !out_kind || !out_witness) return fail_null_argument();
  return wrap([&] {
    const qolab::QuasiOrderVerdict v = qolab::is_quasi_order(rel->rel);
    *out_ok = v.ok ? 1 : 0;
    *out_kind = v.reflexivity ? 0 : 1;
    out_witness[0] = v.i;
    out_witness[1] = v.j;
    out_witness[2] = v.k;
  });
}

qolab_status qolab_check_graph(const qolab_relation* rel, int* out_ok,
                               int* out_kind, int32_t out_witness[2]) {
  if (!rel || !out_ok || !out_kind || !out_witness) return fail_null_argument();
  return wrap([&] {
    const qolab::GraphVerdict v = qolab::is_graph(rel->rel);
    *out_ok = v.ok ? 1 : 0;
    *out_kind = v.irreflexivity ? 0 : 1;
    out_witness[0] = v.i;
    out_witness[1] = v.j;
  });
}

qolab_status qolab_derive(const qolab_relation* rel, qolab_derive_kind kind,
                          qolab_relation** out) {
  if (!rel || !out) return fail_null_argument();
  return wrap([&] {
    const qolab::QuasiOrder q(rel->rel);
    qolab::DeriveKind k;
    switch (kind) {
      case QOLAB_DERIVE_COMPARABLE: k = qolab::DeriveKind::Comparable; break;
      case QOLAB_DERIVE_EQUIVALENCE: k = qolab::DeriveKind::Equivalence; break;
      case QOLAB_DERIVE_INCOMPARABLE: k = qolab::DeriveKind::Incomparable; break;
      case QOLAB_DERIVE_STRICT: k = qolab::DeriveKind::Strict; break;
      default:
        throw qolab::Error(qolab::ErrorCode::InvalidArgument, "bad derive kind");
    }
    *out = new qolab_relation{qolab::derive(q, k)};
  });
}

qolab_status qolab_quotient(const qolab_relation* rel, char** out_json) {
  if (!rel || !out_json) return fail_null_argument();
  return wrap([&] {
    const qolab::QuotientPoset qp = qolab::quotient(qolab::QuasiOrder(rel->rel));
    nlohmann::json j;
    j["classes"] = qp.classes;
    j["class_of"] = qp.class_of;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < qp.order.size(); ++i) {
      std::string row(qp.order.size(), '0');
      for (int k = 0; k < qp.order.size(); ++k)
        if (qp.order.le(i, k)) row[k] = '1';
      rows.push_back(std::move(row));
    }
    j["order"] = std::move(rows);
    *out_json = copy_string(j.dump());
  });
}

qolab_status qolab_interval(const qolab_relation* rel, int32_t x, int32_t y,
                            qolab_interval_kind kind, int32_t* out_vertices,
                            int32_t* out_count) {
  if (!rel || !out_vertices || !out_count) return fail_null_argument();
  return wrap([&] {
    const qolab::QuasiOrder q(rel->rel);
    const qolab::VertexSet result =
        qolab::interval(q, x, y,
                        kind == QOLAB_INTERVAL_CLOSED
                            ? qolab::IntervalKind::Closed
                            : qolab::IntervalKind::OpenClosed);
    fill_vertices(result, out_vertices, out_count);
  });
}

qolab_status qolab_section(const qolab_relation* rel, int32_t v,
                           qolab_section_side side, int32_t* out_vertices,
                           int32_t* out_count) {
  if (!rel || !out_vertices || !out_count) return fail_null_argument();
  return wrap([&] {
    const qolab::VertexSet result =
        qolab::section(rel->rel, v,
                       side == QOLAB_SECTION_VERTICAL
                           ? qolab::SectionSide::Vertical
                           : qolab::SectionSide::Horizontal);
    fill_vertices(result, out_vertices, out_count);
  });
}

qolab_status qolab_random_quasi_order(int32_t n, double density, uint64_t seed,
                                      qolab_relation** out) {
  if (!out) return fail_null_argument();
  return wrap([&] {
    *out = new qolab_relation{qolab::random_quasi_order(n, density, seed).rel()};
  });
}

qolab_status qolab_random_graph(int32_t n, double density, uint64_t seed,
                                qolab_relation** out) {
  if (!out) return fail_null_argument();
  return wrap([&] {
    *out = new qolab_relation{qolab::random_graph(n, density, seed).rel()};
  });
}

void qolab_cover_free(qolab_cover* cover) { delete cover; }

int32_t qolab_cover_chain_count(const qolab_cover* cover) {
  return cover ? static_cast<int32_t>(cover->chains.size()) : 0;
}

int32_t qolab_cover_chain_len(const qolab_cover* cover, int32_t index) {
  if (!cover || index < 0 || index >= static_cast<int32_t>(cover->chains.size()))
    return -1;
  return static_cast<int32_t>(cover->chains[index].size());
}

qolab_status qolab_cover_chain(const qolab_cover* cover, int32_t index,
                               int32_t* out_vertices) {
  if (!cover || !out_vertices) return fail_null_argument();
  if (index < 0 || index >= static_cast<int32_t>(cover->chains.size())) {
    g_last_error = "chain index out of range";
    return QOLAB_ERR_INDEX_RANGE;
  }
  int32_t count = 0;
  fill_vertices(cover->chains[index], out_vertices, &count);
  return QOLAB_OK;
}

int32_t qolab_cover_layer_count(const qolab_cover* cover) {
  return cover ? static_cast<int32_t>(cover->layers.size()) : 0;
}

int32_t qolab_cover_layer_len(const qolab_cover* cover, int32_t index) {
  if (!cover || index < 0 || index >= static_cast<int32_t>(cover->layers.size()))
    return -1;
  return static_cast<int32_t>(cover->layers[index].size());
}

qolab_status qolab_cover_layer(const qolab_cover* cover, int32_t index,
                               int32_t* out_vertices) {
  if (!cover || !out_vertices) return fail_null_argument();
  if (index < 0 || index >= static_cast<int32_t>(cover->layers.size())) {
    g_last_error = "layer index out of range";
    return QOLAB_ERR_INDEX_RANGE;
  }
  int32_t count = 0;
  fill_vertices(cover->layers[index], out_vertices, &count);
  return QOLAB_OK;
}

qolab_status qolab_width(const qolab_relation* rel, int32_t* out_width,
                         int32_t* out_witness, int32_t* out_count) {
  if (!rel || !out_width || !out_witness || !out_count) return fail_null_argument();
  return wrap([&] {
    const qolab::WidthResult r = qolab::width_and_antichain(qolab::QuasiOrder(rel->rel));
    *out_width = r.width;
    fill_vertices(r.antichain, out_witness, out_count);
  });
}

qolab_status qolab_min_chain_cover(const qolab_relation* rel, qolab_cover** out) {
  if (!rel || !out) return fail_null_argument();
  return wrap([&] {
    qolab::ChainCover cover = qolab::min_chain_cover(qolab::QuasiOrder(rel->rel));
    *out = new qolab_cover{std::move(cover.chains), {}};
  });
}

qolab_status qolab_paper_chain_cover(const qolab_relation* rel, uint64_t budget,
                                     qolab_cover** out) {
  if (!rel || !out) return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    qolab::PaperCover cover = qolab::paper_chain_cover(qolab::QuasiOrder(rel->rel), &b);
    *out = new qolab_cover{std::move(cover.cover.chains), std::move(cover.layers)};
  });
}

qolab_status qolab_dichotomy(const qolab_relation* rel, int32_t k, uint64_t budget,
                             int* out_is_cover, qolab_cover** out_cover,
                             int32_t* out_antichain, int32_t* out_count) {
  if (!rel || !out_is_cover || !out_cover || !out_antichain || !out_count)
    return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    const qolab::DichotomyResult r =
        qolab::dichotomy(qolab::QuasiOrder(rel->rel), k, &b);
    if (r.is_cover()) {
      *out_is_cover = 1;
      *out_cover = new qolab_cover{r.cover().chains, {}};
      *out_count = 0;
    } else {
      *out_is_cover = 0;
      *out_cover = nullptr;
      fill_vertices(r.antichain(), out_antichain, out_count);
    }
  });
}

qolab_status qolab_enumerate_antichains(const qolab_relation* rel, int32_t k,
                                        uint64_t budget, char** out_json) {
  if (!rel || !out_json) return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    const auto antichains =
        qolab::enumerate_antichains(qolab::QuasiOrder(rel->rel), k, &b);
    *out_json = copy_string(nlohmann::json(antichains).dump());
  });
}

qolab_status qolab_chromatic_number(const qolab_relation* graph, uint64_t budget,
                                    int32_t* out_chi, int32_t* out_colors) {
  if (!graph || !out_chi || !out_colors) return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    const qolab::ColoringCertificate cert =
        qolab::chromatic_number(qolab::Graph(graph->rel), &b);
    *out_chi = cert.k;
    for (std::size_t i = 0; i < cert.colors.size(); ++i)
      out_colors[i] = cert.colors[i];
  });
}

qolab_status qolab_aux_graph(const qolab_relation* graph, uint64_t budget,
                             int use_bruteforce, qolab_relation** out_aux,
                             int32_t* out_chi) {
  if (!graph || !out_aux || !out_chi) return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    const qolab::Graph g(graph->rel);
    const qolab::AuxGraph ag =
        use_bruteforce ? qolab::aux_graph_bruteforce(g, &b) : qolab::aux_graph(g, &b);
    *out_aux = new qolab_relation{ag.aux.rel()};
    *out_chi = ag.chi;
  });
}

qolab_status qolab_witness_set(const qolab_relation* graph, const int32_t* pairs,
                               int32_t pair_count, uint64_t budget,
                               int32_t* out_vertices, int32_t* out_count) {
  if (!graph || !pairs || !out_vertices || !out_count || pair_count < 0)
    return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    std::vector<std::pair<qolab::Vertex, qolab::Vertex>> list;
    for (int32_t p = 0; p < pair_count; ++p)
      list.emplace_back(pairs[2 * p], pairs[2 * p + 1]);
    const qolab::VertexSet result =
        qolab::witness_set(qolab::Graph(graph->rel), list, &b);
    fill_vertices(result, out_vertices, out_count);
  });
}

qolab_status qolab_dense_sequences(int32_t levels, char** out_text) {
  if (!out_text) return fail_null_argument();
  return wrap([&] {
    *out_text = copy_string(
        qolab::serialize_dense_sequences(qolab::dense_sequences(levels)));
  });
}

qolab_status qolab_g0_stats(int32_t word_length, const char* sequences,
                            char** out_json) {
  if (!out_json) return fail_null_argument();
  return wrap([&] {
    const qolab::G0Stats stats = qolab::g0_stats(build_level(word_length, sequences));
    nlohmann::json j{{"vertices", stats.vertices},
                     {"edges", stats.edges},
                     {"connected", stats.connected},
                     {"bipartite", stats.bipartite},
                     {"chi", stats.chi}};
    *out_json = copy_string(j.dump());
  });
}

qolab_status qolab_g0_graph(int32_t word_length, const char* sequences,
                            qolab_relation** out) {
  if (!out) return fail_null_argument();
  return wrap([&] {
    *out = new qolab_relation{qolab::g0_graph(build_level(word_length, sequences)).rel()};
  });
}

qolab_status qolab_hom_search(const qolab_relation* pattern,
                              const qolab_relation* target, uint64_t budget,
                              int32_t* out_map, int* out_found) {
  if (!pattern || !target || !out_map || !out_found) return fail_null_argument();
  return wrap([&] {
    qolab::Budget b = make_budget(budget);
    const auto result = qolab::hom_search(qolab::Graph(pattern->rel),
                                          qolab::Graph(target->rel), &b);
    *out_found = result.has_value() ? 1 : 0;
    if (result)
      for (std::size_t i = 0; i < result->size(); ++i) out_map[i] = (*result)[i];
  });
}

qolab_status qolab_tree_parse(const char* text, int32_t index_size,
                              qolab_tree** out) {
  if (!text || !out) return fail_null_argument();
  return wrap([&] { *out = new qolab_tree{qolab::parse_tree(text, index_size)}; });
}

void qolab_tree_free(qolab_tree* tree) { delete tree; }

qolab_status qolab_tree_serialize(const qolab_tree* tree, char** out_text) {
  if (!tree || !out_text) return fail_null_argument();
  return wrap([&] { *out_text = copy_string(qolab::serialize_tree(tree->tree)); });
}

qolab_status qolab_tree_derivative(const qolab_tree* tree, qolab_tree** out) {
  if (!tree || !out) return fail_null_argument();
  return wrap([&] { *out = new qolab_tree{qolab::pruning_derivative(tree->tree)}; });
}

qolab_status qolab_tree_rank(const qolab_tree* tree, char** out_json) {
  if (!tree || !out_json) return fail_null_argument();
  return wrap([&] {
    const qolab::PruningRank r = qolab::pruning_rank(tree->tree);
    nlohmann::json ranks = nlohmann::json::object();
    for (const auto& [node, rank] : r.node_ranks)
      ranks[qolab::node_to_string(node)] = rank;
    nlohmann::json j{{"rho", r.rho},
                     {"well_founded", r.well_founded},
                     {"node_ranks", std::move(ranks)}};
    *out_json = copy_string(j.dump());
  });
}

qolab_status qolab_borel_parse(const char* json_text, qolab_borel** out) {
  if (!json_text || !out) return fail_null_argument();
  return wrap([&] { *out = new qolab_borel{qolab::parse_borel_code(json_text)}; });
}

void qolab_borel_free(qolab_borel* code) { delete code; }

int32_t qolab_borel_ground_size(const qolab_borel* code) {
  return code ? code->code.ground_size : 0;
}

qolab_status qolab_borel_eval(const qolab_borel* code, int dual_order,
                              int32_t* out_members, int32_t* out_count) {
  if (!code || !out_members || !out_count) return fail_null_argument();
  return wrap([&] {
    const qolab::VertexSet result = qolab::eval_borel_code(
        code->code, dual_order ? qolab::EvalOrder::IntersectionOfUnions
                               : qolab::EvalOrder::UnionOfIntersections);
    fill_vertices(result, out_members, out_count);
  });
}

qolab_status qolab_verify_proposition(const char* proposition,
                                      const qolab_relation* instance,
                                      uint64_t seed, uint64_t budget,
                                      char** out_report_json, int* out_pass) {
  if (!proposition || !instance || !out_report_json || !out_pass)
    return fail_null_argument();
  return wrap([&] {
    qolab::VerifyOptions opts;
    opts.seed = seed;
    qolab::Budget b = make_budget(budget);
    opts.budget = &b;
    const qolab::PropositionReport report = qolab::verify_proposition(
        qolab::prop_from_string(proposition), instance->rel, opts);
    nlohmann::json j{{"proposition", qolab::prop_name(report.prop)},
                     {"pass", report.pass},
                     {"exhaustive", report.exhaustive},
                     {"checks", report.checks},
                     {"counterexample", report.counterexample}};
    *out_report_json = copy_string(j.dump());
    *out_pass = report.pass ? 1 : 0;
  });
}

qolab_status qolab_prove(const char* options_json, char** out_report_json,
                         int* out_ok) {
  if (!out_report_json || !out_ok) return fail_null_argument();
  return wrap([&] {
    qolab::ProveOptions options;
    if (options_json && *options_json) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(options_json);
      } catch (const nlohmann::json::exception& e) {
        throw qolab::Error(qolab::ErrorCode::MalformedInput,
                           std::string("bad options JSON: ") + e.what());
      }
      options = qolab::prove_options_from_json(j);
    }
    const qolab::ProveOutcome outcome = qolab::prove(options);
    *out_report_json = copy_string(outcome.report.dump(2));
    *out_ok = outcome.ok ? 1 : 0;
  });
}

qolab_status qolab_replay(const char* bundle_json, char** out_report_json,
                          int* out_reproduced) {
  if (!bundle_json || !out_report_json || !out_reproduced)
    return fail_null_argument();
  return wrap([&] {
    nlohmann::json bundle;
    try {
      bundle = nlohmann::json::parse(bundle_json);
    } catch (const nlohmann::json::exception& e) {
      throw qolab::Error(qolab::ErrorCode::MalformedInput,
                         std::string("bad bundle JSON: ") + e.what());
    }
    const qolab::ReplayOutcome outcome = qolab::replay(bundle);
    *out_report_json = copy_string(outcome.report.dump(2));
    *out_reproduced = outcome.reproduced ? 1 : 0;
  });
}

}  // extern "C"
