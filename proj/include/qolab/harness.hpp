#ifndef QOLAB_HARNESS_HPP
#define QOLAB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qolab/paper_procedures.hpp"
#include "qolab/relation.hpp"
#include "qolab/tree_borel.hpp"

namespace qolab {

// Every labeled quasi-order on {0,...,n-1}; n <= 4 keeps the scan feasible.
std::vector<QuasiOrder> exhaustive_quasi_orders(int n);

// Seeded prefix-closed tree with random leaf sets, for evaluator
// cross-validation.
BorelCode random_borel_code(int max_alpha, int max_depth, int max_ground,
                            std::uint64_t seed);

struct ProveOptions {
  std::vector<PropName> props{PropName::Union,      PropName::Clique,
                              PropName::Antichain,  PropName::Transitive,
                              PropName::Independence, PropName::Maximal};
  int n_min = 2;
  int n_max = 16;
  int instances = 200;
  std::vector<double> densities{0.2, 0.4, 0.6};
  bool exhaustive = false;  // adds the full n <= 4 scan
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;  // per instance and proposition
};

ProveOptions prove_options_from_json(const nlohmann::json& j);
nlohmann::json prove_options_json(const ProveOptions& options);

struct ProveOutcome {
  nlohmann::json report;
  bool ok = true;
};

// Runs every selected proposition over the corpus; verdicts and violation
// bundles are deterministic in the options.
ProveOutcome prove(const ProveOptions& options);

struct ReplayOutcome {
  nlohmann::json report;
  bool reproduced = false;
};

// Re-runs the checker recorded in a violation bundle on its embedded
// instance.
ReplayOutcome replay(const nlohmann::json& bundle);

nlohmann::json relation_json(const FiniteRelation& rel);
FiniteRelation relation_from_json(const nlohmann::json& j);

}  // namespace qolab

#endif
