// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qolab/aux_graph.hpp"
#include "qolab/dilworth.hpp"
#include "qolab/g0.hpp"
#include "qolab/harness.hpp"
#include "qolab/paper_procedures.hpp"
#include "qolab/relation.hpp"
#include "qolab/tree_borel.hpp"

using namespace qolab;
using nlohmann::json;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  double limit_seconds;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > limit_seconds)
      problems.push_back("exceeded " + std::to_string(limit_seconds) + "s");
    if (problems.empty()) {
      std::printf("[PASS] %s (%.2fs)\n", name.c_str(), elapsed);
    } else {
      std::printf("[FAIL] %s (%.2fs): %s\n", name.c_str(), elapsed,
                  problems.front().c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

std::vector<QuasiOrder> seeded_corpus(int count, int n_max, std::uint64_t seed) {
  std::vector<QuasiOrder> corpus;
  const double densities[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < count; ++i) {
    Rng pick(Rng::mix(seed, i));
    const int n = static_cast<int>(pick.below(static_cast<std::uint32_t>(n_max + 1)));
    corpus.push_back(random_quasi_order(n, densities[i % 3], pick.next()));
  }
  return corpus;
}

void criterion_dilworth_equality() {
  Criterion c{"1 dilworth-equality (500 orders, n<=40)", 10.0};
  const auto corpus = seeded_corpus(500, 40, 0xD11);
  for (const QuasiOrder& q : corpus) {
    const ChainCover cover = min_chain_cover(q);
    const WidthResult width = width_and_antichain(q);
    c.expect(static_cast<int>(cover.chains.size()) == width.width,
             "cover size differs from width");
    c.expect(check_chain_cover(q, cover), "invalid chain cover");
    c.expect(is_antichain(q, width.antichain) &&
                 static_cast<int>(width.antichain.size()) == width.width,
             "invalid width witness");
  }
  c.finish();
}

void criterion_dichotomy() {
  Criterion c{"2 constructive-dichotomy (n<=14, k=1..width+1)", 60.0};
  const auto corpus = seeded_corpus(500, 40, 0xD11);
  for (const QuasiOrder& q : corpus) {
    if (q.size() > 14) continue;
    const int width = poset_width(q);
    for (int k = 1; k <= width + 1; ++k) {
      const DichotomyResult r = dichotomy(q, k);
      const bool big_antichain_exists = !enumerate_antichains(q, k + 1).empty();
      if (r.is_cover()) {
        c.expect(static_cast<int>(r.cover().chains.size()) == k,
                 "cover has wrong chain count");
        c.expect(check_chain_cover(q, r.cover()), "invalid cover");
        c.expect(!big_antichain_exists, "cover emitted although a large antichain exists");
      } else {
        c.expect(static_cast<int>(r.antichain().size()) == k + 1,
                 "antichain has wrong size");
        c.expect(is_antichain(q, r.antichain()), "witness is not an antichain");
        c.expect(big_antichain_exists, "antichain emitted but enumeration finds none");
      }
    }
  }
  c.finish();
}

void criterion_paper_cover() {
  Criterion c{"3 paper-cover-optimality (200 orders, n<=14)", 120.0};
  const auto corpus = seeded_corpus(200, 14, 0xC04E);
  for (const QuasiOrder& q : corpus) {
    const PaperCover pc = paper_chain_cover(q);
    c.expect(static_cast<int>(pc.cover.chains.size()) == poset_width(q),
             "paper cover is not optimal");
    c.expect(static_cast<int>(pc.cover.chains.size()) ==
                 static_cast<int>(min_chain_cover(q).chains.size()),
             "paper cover differs from the oracle count");
    c.expect(check_chain_cover(q, pc.cover), "invalid paper cover");

    VertexSet residual(q.size());
    std::iota(residual.begin(), residual.end(), 0);
    for (const VertexSet& layer : pc.layers) {
      const QuasiOrder sub = q.induced(residual);
      const int w = poset_width(sub);
      VertexSet local;
      for (Vertex v : layer)
        local.push_back(static_cast<int>(
            std::lower_bound(residual.begin(), residual.end(), v) -
            residual.begin()));
      for (const VertexSet& antichain : enumerate_antichains(sub, w)) {
        VertexSet meet;
        std::set_intersection(antichain.begin(), antichain.end(), local.begin(),
                              local.end(), std::back_inserter(meet));
        c.expect(!meet.empty(), "layer misses a maximum antichain");
        if (meet.empty()) break;
      }
      VertexSet rest;
      std::set_difference(residual.begin(), residual.end(), layer.begin(),
                          layer.end(), std::back_inserter(rest));
      residual = std::move(rest);
    }
  }
  c.finish();
}

void criterion_aux_equivalence() {
  Criterion c{"4 aux-oracle-equivalence (exhaustive n<=4 + 300 graphs n<=8)", 120.0};
  for (int n = 1; n <= 4; ++n)
    for (const QuasiOrder& q : exhaustive_quasi_orders(n)) {
      const Graph inc = incomparability_graph(q);
      c.expect(aux_graph(inc).aux.rel() == aux_graph_bruteforce(inc).aux.rel(),
               "constructions disagree on an incomparability graph");
    }
  for (int i = 0; i < 300; ++i) {
    Rng pick(Rng::mix(0xA0C, i));
    const int n = 1 + static_cast<int>(pick.below(8));
    const double density = 0.15 + 0.1 * (i % 7);
    const Graph g = random_graph(n, density, pick.next());
    c.expect(aux_graph(g).aux.rel() == aux_graph_bruteforce(g).aux.rel(),
             "constructions disagree on a random graph");
  }
  c.finish();
}

void criterion_propositions() {
  Criterion c{"5 propositions (exhaustive n<=4 + 200 instances n<=8 each)", 300.0};
  const PropName props[] = {PropName::Union,        PropName::Clique,
                            PropName::Antichain,    PropName::Transitive,
                            PropName::Independence, PropName::Maximal};
  for (int n = 0; n <= 4; ++n)
    for (const QuasiOrder& q : exhaustive_quasi_orders(n)) {
      const Graph inc = incomparability_graph(q);
      for (PropName prop : props) {
        const FiniteRelation& instance =
            prop_takes_graph(prop) ? inc.rel() : q.rel();
        const PropositionReport report = verify_proposition(prop, instance);
        c.expect(report.pass, std::string(prop_name(prop)) +
                                  " fails on the exhaustive corpus: " +
                                  report.counterexample.dump());
      }
    }
  for (PropName prop : props) {
    for (int i = 0; i < 200; ++i) {
      Rng pick(Rng::mix(0x5EED + static_cast<int>(prop), i));
      const int n = 2 + static_cast<int>(pick.below(7));
      const double density = 0.2 + 0.1 * (i % 5);
      FiniteRelation instance =
          prop_takes_graph(prop)
              ? random_graph(n, density, pick.next()).rel()
              : random_quasi_order(n, density, pick.next()).rel();
      VerifyOptions opts;
      opts.seed = Rng::mix(7, i);
      const PropositionReport report = verify_proposition(prop, instance, opts);
      if (!report.pass) {
        // emit the bundle so the failure can be replayed
        const json bundle{{"proposition", prop_name(prop)},
                          {"instance", relation_json(instance)},
                          {"verify_seed", opts.seed},
                          {"budget", 0},
                          {"detail", report.counterexample}};
        std::ofstream("acceptance_violation.json") << bundle.dump(2) << "\n";
      }
      c.expect(report.pass, std::string(prop_name(prop)) +
                                " fails on a random instance (bundle written)");
    }
  }
  c.finish();
}

void criterion_fence_golden() {
  Criterion c{"6 fence-golden", 10.0};
  const QuasiOrder q = parse_quasi_order("4\n1010\n0111\n0010\n0001\n");

  c.expect(width_and_antichain(q).width == 2, "width differs");
  c.expect(width_and_antichain(q).antichain == VertexSet{0, 1},
           "witness differs");

  const Graph inc = incomparability_graph(q);
  c.expect(serialize_relation(inc.rel()) == "4\n0101\n1000\n0001\n1010\n",
           "incomparability graph differs byte-wise");

  const AuxGraph ag = aux_graph(inc);
  c.expect(serialize_relation(ag.aux.rel()) == "4\n0101\n1010\n0101\n1010\n",
           "supergraph differs byte-wise");

  FiniteRelation reduced_expected(4);
  reflexive_close(reduced_expected);
  reduced_expected.set(0, 2);
  reduced_expected.set(1, 3);
  c.expect(reduced_relation(q) == reduced_expected, "reduced relation differs");
  c.expect(is_quasi_order(reduced_relation(q)).ok, "reduced relation invalid");

  const PaperCover pc = paper_chain_cover(q);
  c.expect(paper_cover_json(pc).dump() ==
               "{\"chains\":[[0,2],[1,3]],\"layers\":[[0,2]]}",
           "paper cover JSON differs byte-wise");
  c.finish();
}

void criterion_g0() {
  Criterion c{"7 g0-truncations (edges<=16, connectivity/chi<=12, density<=16)",
              30.0};
  for (int n = 0; n <= 16; ++n)
    c.expect(g0_level(n).edges.size() == (1ull << n) - 1, "edge count differs");
  for (int n = 1; n <= 12; ++n) {
    const G0Stats stats = g0_stats(g0_level(n));
    c.expect(stats.connected, "level disconnected");
    c.expect(stats.bipartite && stats.chi == 2, "chromatic number differs");
  }
  for (int n = 0; n <= 16; ++n)
    c.expect(density_holds(dense_sequences(n)), "density fails");
  c.finish();
}

void criterion_borel() {
  Criterion c{"8 borel-codes (500 random codes)", 10.0};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const BorelCode code = random_borel_code(3, 3, 6, Rng::mix(0xB0DE, seed));
    c.expect(eval_borel_code(code) == eval_borel_code_staged(code),
             "evaluators disagree");
  }
  std::map<NodeSeq, VertexSet> leaves{{NodeSeq{0}, {0, 1}},
                                      {NodeSeq{1}, {1, 2}},
                                      {NodeSeq{2}, {0}},
                                      {NodeSeq{3}, {}}};
  const BorelCode worked(2, FiniteTree(4, {NodeSeq{}}), std::move(leaves), 3);
  c.expect(eval_borel_code(worked) == VertexSet{1}, "worked example differs");
  c.finish();
}

void criterion_determinism(const std::string& cli) {
  Criterion c{"9 prove-determinism (two seeded CLI runs)", 600.0};
  if (cli.empty()) {
    c.expect(false, "no --cli path given");
    c.finish();
    return;
  }
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string r1 = (tmp / "qolab_accept_r1.json").string();
  const std::string r2 = (tmp / "qolab_accept_r2.json").string();
  for (const std::string& out : {r1, r2}) {
    const std::string command =
        "\"" + cli + "\" prove --all --seed 0 --json \"" + out + "\" > /dev/null";
    c.expect(std::system(command.c_str()) == 0, "prove run failed");
  }
  json a, b;
  std::ifstream(r1) >> a;
  std::ifstream(r2) >> b;
  // elapsed_ms is the report's only timestamp
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  c.expect(!a.empty() && a.dump() == b.dump(), "reports differ");
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  criterion_dilworth_equality();
  criterion_dichotomy();
  criterion_paper_cover();
  criterion_aux_equivalence();
  criterion_propositions();
  criterion_fence_golden();
  criterion_g0();
  criterion_borel();
  criterion_determinism(cli);

  if (failures == 0)
    std::printf("acceptance: all criteria hold\n");
  else
    std::printf("acceptance: %d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
