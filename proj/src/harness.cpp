#include "qolab/harness.hpp"

#include <algorithm>

#include "qolab/rng.hpp"

namespace qolab {

using nlohmann::json;

std::vector<QuasiOrder> exhaustive_quasi_orders(int n) {
  if (n < 0 || n > 4)
    throw Error(ErrorCode::InvalidArgument,
                "exhaustive scan supports ground sets of size 0..4");
  std::vector<QuasiOrder> out;
  const int off_diag = n * (n - 1);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  for (std::uint32_t mask = 0; mask < (1u << off_diag); ++mask) {
    FiniteRelation rel(n);
    for (int i = 0; i < n; ++i) rel.set(i, i);
    for (int s = 0; s < off_diag; ++s)
      if (mask >> s & 1) rel.set(slots[s].first, slots[s].second);
    if (is_quasi_order(rel).ok) out.emplace_back(std::move(rel));
  }
  return out;
}

BorelCode random_borel_code(int max_alpha, int max_depth, int max_ground,
                            std::uint64_t seed) {
  Rng rng(seed);
  const int alpha = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_alpha)));
  const int ground = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_ground)));
  const int fan = alpha * alpha;
  std::set<NodeSeq> nodes;
  if (rng.chance(0.85)) {
    nodes.insert(NodeSeq{});
    std::vector<NodeSeq> frontier_nodes{NodeSeq{}};
    for (int depth = 1; depth < max_depth && !frontier_nodes.empty(); ++depth) {
      std::vector<NodeSeq> next;
      for (const NodeSeq& t : frontier_nodes)
        for (int i = 0; i < fan; ++i)
          if (rng.chance(0.4)) {
            NodeSeq child = t;
            child.push_back(i);
            nodes.insert(child);
            next.push_back(std::move(child));
          }
      frontier_nodes = std::move(next);
    }
  }
  FiniteTree tree(fan, std::move(nodes));
  std::map<NodeSeq, VertexSet> leaves;
  for (const NodeSeq& t : frontier(tree)) {
    VertexSet members;
    for (int v = 0; v < ground; ++v)
      if (rng.chance(0.5)) members.push_back(v);
    leaves.emplace(t, std::move(members));
  }
  return BorelCode(alpha, std::move(tree), std::move(leaves), ground);
}

ProveOptions prove_options_from_json(const json& j) {
  ProveOptions options;
  try {
    if (j.contains("props")) {
      options.props.clear();
      for (const auto& name : j.at("props"))
        options.props.push_back(prop_from_string(name.get<std::string>()));
    }
    if (j.contains("n_min")) options.n_min = j.at("n_min").get<int>();
    if (j.contains("n_max")) options.n_max = j.at("n_max").get<int>();
    if (j.contains("instances")) options.instances = j.at("instances").get<int>();
    if (j.contains("densities"))
      options.densities = j.at("densities").get<std::vector<double>>();
    if (j.contains("exhaustive")) options.exhaustive = j.at("exhaustive").get<bool>();
    if (j.contains("seed")) options.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) options.budget = j.at("budget").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad options: ") + e.what());
  }
  if (options.n_min < 0 || options.n_max < options.n_min ||
      options.instances < 0 || options.densities.empty())
    throw Error(ErrorCode::InvalidArgument, "inconsistent prove options");
  return options;
}

json prove_options_json(const ProveOptions& options) {
  json props = json::array();
  for (PropName p : options.props) props.push_back(prop_name(p));
  return json{{"props", std::move(props)},
              {"n_min", options.n_min},
              {"n_max", options.n_max},
              {"instances", options.instances},
              {"densities", options.densities},
              {"exhaustive", options.exhaustive},
              {"seed", options.seed},
              {"budget", options.budget}};
}

json relation_json(const FiniteRelation& rel) {
  json rows = json::array();
  for (int i = 0; i < rel.size(); ++i) {
    std::string row(rel.size(), '0');
    for (int j = 0; j < rel.size(); ++j)
      if (rel.test(i, j)) row[j] = '1';
    rows.push_back(std::move(row));
  }
  return json{{"n", rel.size()}, {"rows", std::move(rows)}};
}

FiniteRelation relation_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorCode::MalformedInput, "negative size");
    FiniteRelation rel(n);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n)
      throw Error(ErrorCode::MalformedInput, "row count mismatch");
    for (int i = 0; i < n; ++i) {
      const std::string row = rows.at(i).get<std::string>();
      if (static_cast<int>(row.size()) != n)
        throw Error(ErrorCode::MalformedInput, "row length mismatch");
      for (int jx = 0; jx < n; ++jx)
        if (row[jx] == '1')
          rel.set(i, jx);
        else if (row[jx] != '0')
          throw Error(ErrorCode::MalformedInput, "rows must be 0/1 strings");
    }
    return rel;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad relation: ") + e.what());
  }
}

namespace {

struct Instance {
  std::string label;  // deterministic identifier inside the report
  FiniteRelation relation;
  bool graph_instance = false;
  std::uint64_t verify_seed = 0;
};

json make_bundle(const Instance& inst, PropName prop, const ProveOptions& options,
                 const PropositionReport& report) {
  return json{{"proposition", prop_name(prop)},
              {"instance", relation_json(inst.relation)},
              {"kind", inst.graph_instance ? "graph" : "quasi_order"},
              {"label", inst.label},
              {"verify_seed", inst.verify_seed},
              {"budget", options.budget},
              {"detail", report.counterexample}};
}

}  // namespace

ProveOutcome prove(const ProveOptions& options) {
  ProveOutcome outcome;
  json prop_reports = json::object();
  json violations = json::array();

  std::vector<Instance> order_corpus;
  std::vector<Instance> graph_corpus;

  if (options.exhaustive) {
    const int cap = std::min(options.n_max, 4);
    int index = 0;
    for (int n = 0; n <= cap; ++n) {
      int within = 0;
      for (const QuasiOrder& q : exhaustive_quasi_orders(n)) {
        const std::string label =
            "exhaustive/" + std::to_string(n) + "/" + std::to_string(within);
        order_corpus.push_back({label, q.rel(), false, Rng::mix(options.seed, index)});
        graph_corpus.push_back({label + "/incomparability",
                                incomparability_graph(q).rel(), true,
                                Rng::mix(options.seed, index)});
        ++index;
        ++within;
      }
    }
  }
  for (int i = 0; i < options.instances; ++i) {
    const std::uint64_t item_seed = Rng::mix(options.seed, 1000 + i);
    Rng pick(item_seed);
    const int span = options.n_max - options.n_min + 1;
    const int n = options.n_min + static_cast<int>(pick.below(static_cast<std::uint32_t>(span)));
    const double density = options.densities[i % options.densities.size()];
    order_corpus.push_back({"random/q/" + std::to_string(i),
                            random_quasi_order(n, density, pick.next()).rel(), false,
                            item_seed});
    const int gn = options.n_min + static_cast<int>(pick.below(static_cast<std::uint32_t>(span)));
    graph_corpus.push_back({"random/g/" + std::to_string(i),
                            random_graph(gn, density, pick.next()).rel(), true,
                            item_seed});
  }

  for (PropName prop : options.props) {
    const std::vector<Instance>& corpus =
        prop_takes_graph(prop) ? graph_corpus : order_corpus;
    std::uint64_t checks = 0;
    int failures = 0;
    int budget_exhausted = 0;
    int exhaustive_instances = 0;
    for (const Instance& inst : corpus) {
      VerifyOptions vopts;
      vopts.seed = inst.verify_seed;
      Budget budget(options.budget);
      vopts.budget = &budget;
      try {
        const PropositionReport report = verify_proposition(prop, inst.relation, vopts);
        checks += report.checks;
        if (report.exhaustive) ++exhaustive_instances;
        if (!report.pass) {
          ++failures;
          violations.push_back(make_bundle(inst, prop, options, report));
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        ++budget_exhausted;  // reported, not counted as a violation
      }
    }
    prop_reports[prop_name(prop)] =
        json{{"instances", corpus.size()},
             {"checks", checks},
             {"violations", failures},
             {"budget_exhausted", budget_exhausted},
             {"exhaustive_instances", exhaustive_instances}};
    if (failures > 0) outcome.ok = false;
  }

  outcome.report = json{{"options", prove_options_json(options)},
                        {"propositions", std::move(prop_reports)},
                        {"violations", std::move(violations)},
                        {"ok", outcome.ok}};
  return outcome;
}

ReplayOutcome replay(const json& bundle) {
  ReplayOutcome outcome;
  PropName prop;
  FiniteRelation rel;
  std::uint64_t verify_seed = 0;
  std::uint64_t budget_limit = 0;
  try {
    prop = prop_from_string(bundle.at("proposition").get<std::string>());
    rel = relation_from_json(bundle.at("instance"));
    if (bundle.contains("verify_seed"))
      verify_seed = bundle.at("verify_seed").get<std::uint64_t>();
    if (bundle.contains("budget"))
      budget_limit = bundle.at("budget").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad bundle: ") + e.what());
  }
  VerifyOptions vopts;
  vopts.seed = verify_seed;
  Budget budget(budget_limit);
  vopts.budget = &budget;
  const PropositionReport report = verify_proposition(prop, rel, vopts);
  outcome.reproduced = !report.pass;
  outcome.report = json{{"proposition", prop_name(prop)},
                        {"reproduced", outcome.reproduced},
                        {"checks", report.checks},
                        {"detail", report.counterexample}};
  return outcome;
}

}  // namespace qolab
