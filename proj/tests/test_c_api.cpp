// Exercises the shared-library surface alone: handles, error codes, buffers.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qolab/qolab.h"

namespace {

int failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);         \
      ++failures;                                                         \
    }                                                                     \
  } while (0)

const char* kFence = "4\n1010\n0111\n0010\n0001\n";
const char* kFenceIncomparability = "4\n0101\n1000\n0001\n1010\n";

std::string take(char* text) {
  std::string out = text ? text : "";
  qolab_string_free(text);
  return out;
}

void relation_lifecycle() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse(kFence, &rel) == QOLAB_OK);
  EXPECT(qolab_relation_size(rel) == 4);

  int related = -1;
  EXPECT(qolab_relation_test(rel, 0, 2, &related) == QOLAB_OK);
  EXPECT(related == 1);
  EXPECT(qolab_relation_test(rel, 2, 0, &related) == QOLAB_OK);
  EXPECT(related == 0);
  EXPECT(qolab_relation_test(rel, 0, 9, &related) == QOLAB_ERR_INDEX_RANGE);

  char* text = nullptr;
  EXPECT(qolab_relation_serialize(rel, &text) == QOLAB_OK);
  qolab_relation* again = nullptr;
  EXPECT(qolab_relation_parse(text, &again) == QOLAB_OK);
  EXPECT(qolab_relation_size(again) == 4);
  qolab_string_free(text);
  qolab_relation_free(again);
  qolab_relation_free(rel);
}

void parse_errors() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse("2\n10\n", &rel) == QOLAB_ERR_MALFORMED_INPUT);
  EXPECT(std::strlen(qolab_last_error()) > 0);
  EXPECT(qolab_relation_parse(nullptr, &rel) == QOLAB_ERR_INVALID_ARGUMENT);
  EXPECT(std::string(qolab_status_name(QOLAB_ERR_MALFORMED_INPUT)) ==
         "malformed_input");
}

void verdicts() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse("2\n11\n01\n", &rel) == QOLAB_OK);
  int ok = -1, kind = -1;
  int32_t witness3[3];
  EXPECT(qolab_check_quasi_order(rel, &ok, &kind, witness3) == QOLAB_OK);
  EXPECT(ok == 1);
  int32_t witness2[2];
  EXPECT(qolab_check_graph(rel, &ok, &kind, witness2) == QOLAB_OK);
  EXPECT(ok == 0);
  EXPECT(kind == 0);  // loop
  qolab_relation_free(rel);
}

void width_and_covers() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse(kFence, &rel) == QOLAB_OK);

  int32_t width = 0, count = 0;
  int32_t witness[4];
  EXPECT(qolab_width(rel, &width, witness, &count) == QOLAB_OK);
  EXPECT(width == 2);
  EXPECT(count == 2);
  EXPECT(witness[0] == 0 && witness[1] == 1);

  qolab_cover* cover = nullptr;
  EXPECT(qolab_min_chain_cover(rel, &cover) == QOLAB_OK);
  EXPECT(qolab_cover_chain_count(cover) == 2);
  int32_t chain[4];
  EXPECT(qolab_cover_chain(cover, 0, chain) == QOLAB_OK);
  EXPECT(qolab_cover_chain_len(cover, 0) == 2);
  EXPECT(chain[0] == 0 && chain[1] == 2);
  EXPECT(qolab_cover_chain(cover, 7, chain) == QOLAB_ERR_INDEX_RANGE);
  qolab_cover_free(cover);

  qolab_cover* paper = nullptr;
  EXPECT(qolab_paper_chain_cover(rel, 0, &paper) == QOLAB_OK);
  EXPECT(qolab_cover_chain_count(paper) == 2);
  EXPECT(qolab_cover_layer_count(paper) == 1);
  EXPECT(qolab_cover_layer_len(paper, 0) == 2);
  int32_t layer[4];
  EXPECT(qolab_cover_layer(paper, 0, layer) == QOLAB_OK);
  EXPECT(layer[0] == 0 && layer[1] == 2);
  qolab_cover_free(paper);

  int is_cover = -1;
  qolab_cover* dichotomy_cover = nullptr;
  int32_t antichain[8];
  EXPECT(qolab_dichotomy(rel, 1, 0, &is_cover, &dichotomy_cover, antichain,
                         &count) == QOLAB_OK);
  EXPECT(is_cover == 0);
  EXPECT(count == 2);
  EXPECT(antichain[0] == 0 && antichain[1] == 1);

  EXPECT(qolab_dichotomy(rel, 3, 0, &is_cover, &dichotomy_cover, antichain,
                         &count) == QOLAB_OK);
  EXPECT(is_cover == 1);
  EXPECT(qolab_cover_chain_count(dichotomy_cover) == 3);
  EXPECT(qolab_cover_chain_len(dichotomy_cover, 2) == 0);
  qolab_cover_free(dichotomy_cover);

  char* antichains_json = nullptr;
  EXPECT(qolab_enumerate_antichains(rel, 2, 0, &antichains_json) == QOLAB_OK);
  EXPECT(take(antichains_json) == "[[0,1],[0,3],[2,3]]");

  qolab_relation_free(rel);
}

void derived_and_sections() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse(kFence, &rel) == QOLAB_OK);

  qolab_relation* incomp = nullptr;
  EXPECT(qolab_derive(rel, QOLAB_DERIVE_INCOMPARABLE, &incomp) == QOLAB_OK);
  int related = 0;
  EXPECT(qolab_relation_test(incomp, 0, 1, &related) == QOLAB_OK);
  EXPECT(related == 1);
  qolab_relation_free(incomp);

  char* quotient_json = nullptr;
  EXPECT(qolab_quotient(rel, &quotient_json) == QOLAB_OK);
  EXPECT(take(quotient_json).find("\"classes\"") != std::string::npos);

  int32_t verts[4];
  int32_t count = 0;
  EXPECT(qolab_interval(rel, 1, 2, QOLAB_INTERVAL_CLOSED, verts, &count) ==
         QOLAB_OK);
  EXPECT(count == 2 && verts[0] == 1 && verts[1] == 2);
  EXPECT(qolab_interval(rel, 1, 2, QOLAB_INTERVAL_OPEN_CLOSED, verts, &count) ==
         QOLAB_OK);
  EXPECT(count == 1 && verts[0] == 2);
  EXPECT(qolab_section(rel, 1, QOLAB_SECTION_VERTICAL, verts, &count) == QOLAB_OK);
  EXPECT(count == 3);
  EXPECT(qolab_section(rel, 9, QOLAB_SECTION_VERTICAL, verts, &count) ==
         QOLAB_ERR_INDEX_RANGE);

  qolab_relation_free(rel);
}

void coloring_and_aux() {
  qolab_relation* graph = nullptr;
  EXPECT(qolab_relation_parse(kFenceIncomparability, &graph) == QOLAB_OK);

  int32_t chi = 0;
  int32_t colors[4];
  EXPECT(qolab_chromatic_number(graph, 0, &chi, colors) == QOLAB_OK);
  EXPECT(chi == 2);

  for (int brute = 0; brute <= 1; ++brute) {
    qolab_relation* aux = nullptr;
    int32_t aux_chi = 0;
    EXPECT(qolab_aux_graph(graph, 0, brute, &aux, &aux_chi) == QOLAB_OK);
    EXPECT(aux_chi == 2);
    int related = 0;
    EXPECT(qolab_relation_test(aux, 1, 2, &related) == QOLAB_OK);
    EXPECT(related == 1);  // the forced distance-3 pair
    EXPECT(qolab_relation_test(aux, 0, 2, &related) == QOLAB_OK);
    EXPECT(related == 0);
    qolab_relation_free(aux);
  }

  const int32_t pair[2] = {1, 2};
  int32_t witness[4];
  int32_t count = 0;
  EXPECT(qolab_witness_set(graph, pair, 1, 0, witness, &count) == QOLAB_OK);
  EXPECT(count == 4);

  const int32_t bad_pair[2] = {0, 2};
  EXPECT(qolab_witness_set(graph, bad_pair, 1, 0, witness, &count) ==
         QOLAB_ERR_NOT_IN_AUX_GRAPH);

  qolab_relation_free(graph);
}

void g0_and_hom() {
  char* dense = nullptr;
  EXPECT(qolab_dense_sequences(3, &dense) == QOLAB_OK);
  EXPECT(take(dense) == "-\n0\n10\n");

  char* stats = nullptr;
  EXPECT(qolab_g0_stats(5, nullptr, &stats) == QOLAB_OK);
  const std::string s = take(stats);
  EXPECT(s.find("\"edges\":31") != std::string::npos);
  EXPECT(s.find("\"connected\":true") != std::string::npos);
  EXPECT(qolab_g0_stats(25, nullptr, &stats) == QOLAB_ERR_BUDGET_EXCEEDED);

  qolab_relation* level = nullptr;
  EXPECT(qolab_g0_graph(2, nullptr, &level) == QOLAB_OK);
  qolab_relation* k2 = nullptr;
  EXPECT(qolab_relation_parse("2\n01\n10\n", &k2) == QOLAB_OK);
  int32_t map[4];
  int found = 0;
  EXPECT(qolab_hom_search(level, k2, 0, map, &found) == QOLAB_OK);
  EXPECT(found == 1);
  EXPECT(map[0] == 0 && map[1] == 1 && map[2] == 1 && map[3] == 0);
  qolab_relation_free(level);
  qolab_relation_free(k2);
}

void trees_and_codes() {
  qolab_tree* tree = nullptr;
  EXPECT(qolab_tree_parse("-\n0\n0,0\n", -1, &tree) == QOLAB_OK);
  char* rank_json = nullptr;
  EXPECT(qolab_tree_rank(tree, &rank_json) == QOLAB_OK);
  const std::string r = take(rank_json);
  EXPECT(r.find("\"rho\":3") != std::string::npos);
  EXPECT(r.find("\"well_founded\":true") != std::string::npos);

  qolab_tree* derived = nullptr;
  EXPECT(qolab_tree_derivative(tree, &derived) == QOLAB_OK);
  char* text = nullptr;
  EXPECT(qolab_tree_serialize(derived, &text) == QOLAB_OK);
  EXPECT(take(text) == "-\n0\n");
  qolab_tree_free(derived);
  qolab_tree_free(tree);

  EXPECT(qolab_tree_parse("0,0\n", -1, &tree) == QOLAB_ERR_MALFORMED_INPUT);

  qolab_borel* code = nullptr;
  const char* code_json =
      "{\"alpha\":2,\"m\":3,\"tree\":[\"-\"],"
      "\"leaves\":{\"0\":[0,1],\"1\":[1,2],\"2\":[0],\"3\":[]}}";
  EXPECT(qolab_borel_parse(code_json, &code) == QOLAB_OK);
  EXPECT(qolab_borel_ground_size(code) == 3);
  int32_t members[3];
  int32_t count = 0;
  EXPECT(qolab_borel_eval(code, 0, members, &count) == QOLAB_OK);
  EXPECT(count == 1 && members[0] == 1);
  qolab_borel_free(code);

  EXPECT(qolab_borel_parse("{\"alpha\":2,\"m\":3,\"tree\":[\"-\"],\"leaves\":{}}",
                           &code) == QOLAB_ERR_MISSING_LEAF);
}

void proofs() {
  qolab_relation* rel = nullptr;
  EXPECT(qolab_relation_parse(kFence, &rel) == QOLAB_OK);
  char* report = nullptr;
  int pass = 0;
  EXPECT(qolab_verify_proposition("transitive", rel, 0, 0, &report, &pass) ==
         QOLAB_OK);
  EXPECT(pass == 1);
  EXPECT(take(report).find("\"pass\":true") != std::string::npos);
  EXPECT(qolab_verify_proposition("bogus", rel, 0, 0, &report, &pass) ==
         QOLAB_ERR_INVALID_ARGUMENT);
  qolab_relation_free(rel);

  char* prove_report = nullptr;
  int ok = 0;
  EXPECT(qolab_prove("{\"instances\":6,\"n_max\":5,\"seed\":3}", &prove_report,
                     &ok) == QOLAB_OK);
  EXPECT(ok == 1);
  const std::string pr = take(prove_report);
  EXPECT(pr.find("\"transitive\"") != std::string::npos);

  // a hand-made bundle for a passing instance does not reproduce
  std::string bundle =
      "{\"proposition\":\"transitive\",\"instance\":{\"n\":4,\"rows\":"
      "[\"1010\",\"0111\",\"0010\",\"0001\"]},\"verify_seed\":0,\"budget\":0}";
  char* replay_report = nullptr;
  int reproduced = -1;
  EXPECT(qolab_replay(bundle.c_str(), &replay_report, &reproduced) == QOLAB_OK);
  EXPECT(reproduced == 0);
  qolab_string_free(replay_report);
  EXPECT(qolab_replay("not json", &replay_report, &reproduced) ==
         QOLAB_ERR_MALFORMED_INPUT);
}

}  // namespace

int main() {
  relation_lifecycle();
  parse_errors();
  verdicts();
  width_and_covers();
  derived_and_sections();
  coloring_and_aux();
  g0_and_hom();
  trees_and_codes();
  proofs();
  if (failures == 0) std::printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
