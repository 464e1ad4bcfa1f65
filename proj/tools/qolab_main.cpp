// qolab: command-line front end over the shared C API.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qolab/qolab.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check_status(qolab_status status, const std::string& context) {
  if (status == QOLAB_OK) return;
  fail(kExitUsage, context + ": " + qolab_status_name(status) + ": " +
                       qolab_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitUsage, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(kExitUsage, "cannot write " + path);
  out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

// Owns a relation handle.
struct Relation {
  qolab_relation* ptr = nullptr;
  Relation() = default;
  explicit Relation(qolab_relation* p) : ptr(p) {}
  Relation(const Relation&) = delete;
  Relation& operator=(const Relation&) = delete;
  Relation(Relation&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  ~Relation() { qolab_relation_free(ptr); }
  int32_t size() const { return qolab_relation_size(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { qolab_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct RunReport {
  json inputs = json::object();
  json results = json::object();
  json violations = json::array();
  std::uint64_t seed = 0;
};

Relation load_relation(const std::string& path, RunReport& report) {
  const std::string text = read_file(path);
  report.inputs[path] = fnv1a_hex(text);
  qolab_relation* rel = nullptr;
  check_status(qolab_relation_parse(text.c_str(), &rel), path);
  return Relation(rel);
}

std::string vertex_list(const std::vector<int32_t>& vertices) {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices[i]);
  }
  return out + "]";
}

std::vector<int32_t> chain_of(const qolab_cover* cover, int32_t index) {
  const int32_t len = qolab_cover_chain_len(cover, index);
  if (len <= 0) return {};
  std::vector<int32_t> chain(len);
  check_status(qolab_cover_chain(cover, index, chain.data()), "cover chain");
  return chain;
}

std::vector<int32_t> layer_of(const qolab_cover* cover, int32_t index) {
  const int32_t len = qolab_cover_layer_len(cover, index);
  if (len <= 0) return {};
  std::vector<int32_t> layer(len);
  check_status(qolab_cover_layer(cover, index, layer.data()), "cover layer");
  return layer;
}

int count_edges(const Relation& rel) {
  const int32_t n = rel.size();
  int edges = 0;
  for (int32_t i = 0; i < n; ++i)
    for (int32_t j = i + 1; j < n; ++j) {
      int related = 0;
      check_status(qolab_relation_test(rel.ptr, i, j, &related), "edge scan");
      edges += related;
    }
  return edges;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale engine for finite quasi-orders: Dilworth covers, "
               "coloring-forcing supergraphs, constructive dichotomies, "
               "flip-graph truncations, tree ranks and set codes"};
  app.require_subcommand(1);

  std::string json_path;
  app.add_option("--json", json_path, "write a machine-readable run report");

  // ---- check ----
  auto* cmd_check = app.add_subcommand("check", "validate a .qo/.gr file");
  std::string check_file;
  std::string check_kind = "auto";
  cmd_check->add_option("file", check_file)->required();
  cmd_check->add_option("--kind", check_kind, "auto|qo|gr")
      ->check(CLI::IsMember({"auto", "qo", "gr"}));

  // ---- width ----
  auto* cmd_width = app.add_subcommand("width", "width and a maximum antichain");
  std::string width_file;
  cmd_width->add_option("file", width_file)->required();

  // ---- chains ----
  auto* cmd_chains = app.add_subcommand("chains", "matching-based minimum chain cover");
  std::string chains_file;
  cmd_chains->add_option("file", chains_file)->required();

  // ---- paperchains ----
  auto* cmd_paper = app.add_subcommand("paperchains", "layered chain cover");
  std::string paper_file;
  cmd_paper->add_option("file", paper_file)->required();

  // ---- auxgraph ----
  auto* cmd_aux = app.add_subcommand("auxgraph", "coloring-forcing supergraph");
  std::string aux_file, aux_out;
  bool aux_brute = false;
  cmd_aux->add_option("file", aux_file)->required();
  cmd_aux->add_option("-o,--out", aux_out, "write the supergraph as .gr");
  cmd_aux->add_flag("--brute", aux_brute, "coloring-enumeration oracle");

  // ---- witness ----
  auto* cmd_witness = app.add_subcommand("witness", "minimal separating vertex sets");
  std::string witness_file;
  std::vector<int32_t> witness_pairs;
  cmd_witness->add_option("file", witness_file)->required();
  cmd_witness->add_option("pairs", witness_pairs, "x y [x y ...]")->required();

  // ---- dichotomy ----
  auto* cmd_dich = app.add_subcommand("dichotomy", "k chains or an antichain of size k+1");
  std::string dich_file;
  int32_t dich_k = 1;
  cmd_dich->add_option("file", dich_file)->required();
  cmd_dich->add_option("-k", dich_k, "number of chains")->required();

  // ---- g0 ----
  auto* cmd_g0 = app.add_subcommand("g0", "flip-graph truncation statistics");
  int32_t g0_n = 0;
  std::string g0_seq_file, g0_out, g0_dense_out;
  cmd_g0->add_option("level", g0_n, "word length (<= 20)")->required();
  cmd_g0->add_option("--sequences", g0_seq_file, "dense-sequence file");
  cmd_g0->add_option("-o,--out", g0_out, "write the level as .gr (level <= 14)");
  cmd_g0->add_option("--dense-out", g0_dense_out, "write the canonical dense sequences");

  // ---- tree ----
  auto* cmd_tree = app.add_subcommand("tree", "pruning derivative and rank");
  std::string tree_file;
  bool tree_derivative = false;
  cmd_tree->add_option("file", tree_file)->required();
  cmd_tree->add_flag("--derivative", tree_derivative, "print the derivative");

  // ---- borel-eval ----
  auto* cmd_borel = app.add_subcommand("borel-eval", "evaluate a set code");
  std::string borel_file;
  bool borel_dual = false;
  cmd_borel->add_option("file", borel_file)->required();
  cmd_borel->add_flag("--dual", borel_dual, "intersection-of-unions order");

  // ---- gen ----
  auto* cmd_gen = app.add_subcommand("gen", "seeded random instances");
  int32_t gen_n = 0;
  double gen_density = 0.4;
  std::uint64_t gen_seed = 0;
  bool gen_graph = false;
  std::string gen_out;
  cmd_gen->add_option("n", gen_n)->required();
  cmd_gen->add_option("density", gen_density)->required();
  cmd_gen->add_option("--seed", gen_seed);
  cmd_gen->add_flag("--graph", gen_graph, "emit a graph instead of a quasi-order");
  cmd_gen->add_option("-o,--out", gen_out, "output file");

  // ---- prove ----
  auto* cmd_prove = app.add_subcommand("prove", "run the property suites");
  bool prove_all = false;
  std::vector<std::string> prove_props;
  int prove_nmin = 2, prove_nmax = 16, prove_instances = 200;
  bool prove_exhaustive = false;
  std::uint64_t prove_seed = 0, prove_budget = 0;
  cmd_prove->add_flag("--all", prove_all, "all propositions (default)");
  cmd_prove->add_option("--props", prove_props,
                        "subset of union,clique,antichain,transitive,independence,maximal");
  cmd_prove->add_option("--n-min", prove_nmin);
  cmd_prove->add_option("--n-max", prove_nmax);
  cmd_prove->add_option("--instances", prove_instances);
  cmd_prove->add_flag("--exhaustive", prove_exhaustive,
                      "add the full scan of ground sets up to 4");
  cmd_prove->add_option("--seed", prove_seed);
  cmd_prove->add_option("--budget", prove_budget, "search-node cap per check");

  // ---- replay ----
  auto* cmd_replay = app.add_subcommand("replay", "re-run a violation bundle");
  std::string replay_file;
  cmd_replay->add_option("bundle", replay_file)->required();

  // `--json` may follow the subcommand.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  RunReport report;
  int exit_code = kExitOk;
  std::string command;
  const auto started = std::chrono::steady_clock::now();

  try {
    if (cmd_check->parsed()) {
      command = "check";
      Relation rel = load_relation(check_file, report);
      std::string kind = check_kind;
      if (kind == "auto")
        kind = check_file.size() >= 3 &&
                       check_file.compare(check_file.size() - 3, 3, ".gr") == 0
                   ? "gr"
                   : "qo";
      int ok = 0, witness_kind = 0;
      if (kind == "gr") {
        int32_t witness[2] = {-1, -1};
        check_status(qolab_check_graph(rel.ptr, &ok, &witness_kind, witness), "check");
        if (ok) {
          std::cout << "ok graph n=" << rel.size() << "\n";
        } else {
          std::cout << (witness_kind == 0 ? "violation: loop at " : "violation: asymmetric pair ")
                    << vertex_list(witness_kind == 0
                                       ? std::vector<int32_t>{witness[0]}
                                       : std::vector<int32_t>{witness[0], witness[1]})
                    << "\n";
          report.violations.push_back(json{{"kind", "not_graph"},
                                           {"witness", {witness[0], witness[1]}}});
          exit_code = kExitViolation;
        }
      } else {
        int32_t witness[3] = {-1, -1, -1};
        check_status(qolab_check_quasi_order(rel.ptr, &ok, &witness_kind, witness),
                     "check");
        if (ok) {
          std::cout << "ok quasi-order n=" << rel.size() << "\n";
        } else {
          std::cout << (witness_kind == 0 ? "violation: not reflexive at "
                                          : "violation: transitivity fails at ")
                    << vertex_list(witness_kind == 0
                                       ? std::vector<int32_t>{witness[0]}
                                       : std::vector<int32_t>{witness[0], witness[1],
                                                              witness[2]})
                    << "\n";
          report.violations.push_back(
              json{{"kind", "not_quasi_order"},
                   {"witness", {witness[0], witness[1], witness[2]}}});
          exit_code = kExitViolation;
        }
      }
      report.results = json{{"ok", ok == 1}, {"n", rel.size()}};
    } else if (cmd_width->parsed()) {
      command = "width";
      Relation rel = load_relation(width_file, report);
      int32_t width = 0, count = 0;
      std::vector<int32_t> witness(std::max<int32_t>(rel.size(), 1));
      check_status(qolab_width(rel.ptr, &width, witness.data(), &count), "width");
      witness.resize(count);
      std::cout << "width=" << width << " antichain=" << vertex_list(witness) << "\n";
      report.results = json{{"width", width}, {"antichain", witness}};
    } else if (cmd_chains->parsed()) {
      command = "chains";
      Relation rel = load_relation(chains_file, report);
      qolab_cover* cover = nullptr;
      check_status(qolab_min_chain_cover(rel.ptr, &cover), "chains");
      json chains = json::array();
      for (int32_t i = 0; i < qolab_cover_chain_count(cover); ++i) {
        const auto chain = chain_of(cover, i);
        std::cout << "chain " << i << ": " << vertex_list(chain) << "\n";
        chains.push_back(chain);
      }
      qolab_cover_free(cover);
      std::cout << "chains=" << chains.size() << "\n";
      report.results = json{{"chains", std::move(chains)}};
    } else if (cmd_paper->parsed()) {
      command = "paperchains";
      Relation rel = load_relation(paper_file, report);
      qolab_cover* cover = nullptr;
      check_status(qolab_paper_chain_cover(rel.ptr, 0, &cover), "paperchains");
      json chains = json::array(), layers = json::array();
      for (int32_t i = 0; i < qolab_cover_chain_count(cover); ++i) {
        const auto chain = chain_of(cover, i);
        std::cout << "chain " << i << ": " << vertex_list(chain) << "\n";
        chains.push_back(chain);
      }
      for (int32_t i = 0; i < qolab_cover_layer_count(cover); ++i)
        layers.push_back(layer_of(cover, i));
      qolab_cover_free(cover);
      report.results = json{{"chains", std::move(chains)}, {"layers", std::move(layers)}};
    } else if (cmd_aux->parsed()) {
      command = "auxgraph";
      Relation rel = load_relation(aux_file, report);
      qolab_relation* aux_ptr = nullptr;
      int32_t chi = 0;
      check_status(qolab_aux_graph(rel.ptr, 0, aux_brute ? 1 : 0, &aux_ptr, &chi),
                   "auxgraph");
      Relation aux(aux_ptr);
      const json summary{{"chi", chi},
                         {"edges_base", count_edges(rel)},
                         {"edges_aux", count_edges(aux)}};
      std::cout << summary.dump() << "\n";
      if (!aux_out.empty()) {
        OwnedString text;
        check_status(qolab_relation_serialize(aux.ptr, &text.ptr), "serialize");
        write_file(aux_out, text.str());
      }
      report.results = summary;
    } else if (cmd_witness->parsed()) {
      command = "witness";
      if (witness_pairs.size() < 2 || witness_pairs.size() % 2 != 0)
        fail(kExitUsage, "witness needs an even number of vertices");
      Relation rel = load_relation(witness_file, report);
      int32_t count = 0;
      std::vector<int32_t> out(std::max<int32_t>(rel.size(), 1));
      check_status(qolab_witness_set(rel.ptr, witness_pairs.data(),
                                     static_cast<int32_t>(witness_pairs.size() / 2),
                                     0, out.data(), &count),
                   "witness");
      out.resize(count);
      std::cout << "witness=" << vertex_list(out) << "\n";
      report.results = json{{"witness", out}};
    } else if (cmd_dich->parsed()) {
      command = "dichotomy";
      Relation rel = load_relation(dich_file, report);
      int is_cover = 0;
      qolab_cover* cover = nullptr;
      int32_t count = 0;
      std::vector<int32_t> antichain(rel.size() + 2);
      check_status(qolab_dichotomy(rel.ptr, dich_k, 0, &is_cover, &cover,
                                   antichain.data(), &count),
                   "dichotomy");
      if (is_cover) {
        json chains = json::array();
        for (int32_t i = 0; i < qolab_cover_chain_count(cover); ++i) {
          const auto chain = chain_of(cover, i);
          std::cout << "chain " << i << ": " << vertex_list(chain) << "\n";
          chains.push_back(chain);
        }
        qolab_cover_free(cover);
        report.results = json{{"cover", std::move(chains)}};
      } else {
        antichain.resize(count);
        std::cout << "antichain of size " << count << ": " << vertex_list(antichain)
                  << "\n";
        report.results = json{{"antichain", antichain}};
      }
    } else if (cmd_g0->parsed()) {
      command = "g0";
      const char* seq_text_ptr = nullptr;
      std::string seq_text;
      if (!g0_seq_file.empty()) {
        seq_text = read_file(g0_seq_file);
        report.inputs[g0_seq_file] = fnv1a_hex(seq_text);
        seq_text_ptr = seq_text.c_str();
      }
      OwnedString stats;
      check_status(qolab_g0_stats(g0_n, seq_text_ptr, &stats.ptr), "g0");
      std::cout << stats.str() << "\n";
      if (!g0_out.empty()) {
        qolab_relation* level_ptr = nullptr;
        check_status(qolab_g0_graph(g0_n, seq_text_ptr, &level_ptr), "g0 graph");
        Relation level(level_ptr);
        OwnedString text;
        check_status(qolab_relation_serialize(level.ptr, &text.ptr), "serialize");
        write_file(g0_out, text.str());
      }
      if (!g0_dense_out.empty()) {
        OwnedString dense;
        check_status(qolab_dense_sequences(g0_n, &dense.ptr), "dense sequences");
        write_file(g0_dense_out, dense.str());
      }
      report.results = json::parse(stats.str());
    } else if (cmd_tree->parsed()) {
      command = "tree";
      const std::string text = read_file(tree_file);
      report.inputs[tree_file] = fnv1a_hex(text);
      qolab_tree* tree_ptr = nullptr;
      check_status(qolab_tree_parse(text.c_str(), -1, &tree_ptr), "tree");
      OwnedString rank;
      check_status(qolab_tree_rank(tree_ptr, &rank.ptr), "tree rank");
      std::cout << rank.str() << "\n";
      if (tree_derivative) {
        qolab_tree* derived = nullptr;
        check_status(qolab_tree_derivative(tree_ptr, &derived), "derivative");
        OwnedString serialized;
        check_status(qolab_tree_serialize(derived, &serialized.ptr), "serialize");
        std::cout << serialized.str();
        qolab_tree_free(derived);
      }
      qolab_tree_free(tree_ptr);
      report.results = json::parse(rank.str());
    } else if (cmd_borel->parsed()) {
      command = "borel-eval";
      const std::string text = read_file(borel_file);
      report.inputs[borel_file] = fnv1a_hex(text);
      qolab_borel* code = nullptr;
      check_status(qolab_borel_parse(text.c_str(), &code), "borel");
      std::vector<int32_t> members(std::max<int32_t>(qolab_borel_ground_size(code), 1));
      int32_t count = 0;
      check_status(qolab_borel_eval(code, borel_dual ? 1 : 0, members.data(), &count),
                   "borel eval");
      qolab_borel_free(code);
      members.resize(count);
      std::cout << "set=" << vertex_list(members) << "\n";
      report.results = json{{"members", members}};
    } else if (cmd_gen->parsed()) {
      command = "gen";
      report.seed = gen_seed;
      qolab_relation* rel_ptr = nullptr;
      check_status(gen_graph
                       ? qolab_random_graph(gen_n, gen_density, gen_seed, &rel_ptr)
                       : qolab_random_quasi_order(gen_n, gen_density, gen_seed, &rel_ptr),
                   "gen");
      Relation rel(rel_ptr);
      OwnedString text;
      check_status(qolab_relation_serialize(rel.ptr, &text.ptr), "serialize");
      if (gen_out.empty())
        std::cout << text.str();
      else
        write_file(gen_out, text.str());
      report.results = json{{"n", gen_n}, {"density", gen_density}, {"graph", gen_graph}};
    } else if (cmd_prove->parsed()) {
      command = "prove";
      report.seed = prove_seed;
      json options{{"n_min", prove_nmin},
                   {"n_max", prove_nmax},
                   {"instances", prove_instances},
                   {"exhaustive", prove_exhaustive},
                   {"seed", prove_seed}};
      if (prove_budget > 0) options["budget"] = prove_budget;
      if (!prove_props.empty() && !prove_all) options["props"] = prove_props;
      OwnedString out;
      int ok = 0;
      check_status(qolab_prove(options.dump().c_str(), &out.ptr, &ok), "prove");
      const json prove_report = json::parse(out.str());
      for (const auto& [name, entry] : prove_report.at("propositions").items())
        std::cout << name << ": instances=" << entry.at("instances")
                  << " checks=" << entry.at("checks")
                  << " violations=" << entry.at("violations") << "\n";
      std::cout << (ok ? "all propositions hold" : "VIOLATIONS FOUND") << "\n";
      report.results = prove_report;
      report.violations = prove_report.at("violations");
      if (!ok) exit_code = kExitViolation;
    } else if (cmd_replay->parsed()) {
      command = "replay";
      const std::string text = read_file(replay_file);
      report.inputs[replay_file] = fnv1a_hex(text);
      OwnedString out;
      int reproduced = 0;
      check_status(qolab_replay(text.c_str(), &out.ptr, &reproduced), "replay");
      const json replay_report = json::parse(out.str());
      std::cout << (reproduced ? "violation reproduced" : "violation NOT reproduced")
                << "\n";
      report.results = replay_report;
      if (reproduced) {
        report.violations.push_back(json::parse(text));
        exit_code = kExitViolation;
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }

  if (!json_path.empty()) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    const json run{{"command", command},
                   {"inputs", report.inputs},
                   {"results", report.results},
                   {"violations", report.violations},
                   {"seed", report.seed},
                   {"elapsed_ms", elapsed}};
    try {
      write_file(json_path, run.dump(2) + "\n");
    } catch (const CliError& e) {
      std::cerr << "error: " << e.message << "\n";
      return e.code;
    }
  }
  return exit_code;
}
