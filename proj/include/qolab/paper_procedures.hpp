#ifndef QOLAB_PAPER_PROCEDURES_HPP
#define QOLAB_PAPER_PROCEDURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qolab/aux_graph.hpp"
#include "qolab/dilworth.hpp"
#include "qolab/relation.hpp"

namespace qolab {

// Finite family of vertex subsets; duplicates removed, input order kept.
struct SetFamily {
  std::vector<VertexSet> sets;

  static SetFamily of(std::vector<VertexSet> sets);
};

// Raised when a puncturing hypothesis fails: some member set admits no
// independent extension of the current set.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(VertexSet current, VertexSet member)
      : Error(ErrorCode::HypothesisViolated,
              "no independent extension punctures the family"),
        current_(std::move(current)),
        member_(std::move(member)) {}

  const VertexSet& current() const { return current_; }
  const VertexSet& member() const { return member_; }

 private:
  VertexSet current_;
  VertexSet member_;
};

// R with the supergraph of its incomparability graph removed; transitivity
// is asserted and a violation aborts loudly.
FiniteRelation reduced_relation(const QuasiOrder& q, Budget* budget = nullptr);

// Least x in the maximum antichain A whose addition keeps Y independent in
// the supergraph of the incomparability graph.
Vertex independence_extend(const QuasiOrder& q, const VertexSet& antichain,
                           const VertexSet& independent, Budget* budget = nullptr);

// Greedy extension of the independent set B to one meeting every member of
// the family; throws HypothesisViolation when stuck.
VertexSet puncture_extend(const Graph& g, const SetFamily& family,
                          const VertexSet& base);

// Members F of the family for which at least |F|-k elements break the
// independence of Y when added.
SetFamily staged_family(const Graph& g, const SetFamily& family,
                        const VertexSet& independent, int k);

// Optimal chain cover produced by peeling supergraph-independent layers
// that meet every maximum antichain of the residual.
struct PaperCover {
  ChainCover cover;
  std::vector<VertexSet> layers;
};

PaperCover paper_chain_cover(const QuasiOrder& q, Budget* budget = nullptr);

enum class PropName { Union, Clique, Antichain, Transitive, Independence, Maximal };

PropName prop_from_string(const std::string& name);
const char* prop_name(PropName prop);
// Union/Clique/Antichain/Maximal take a graph; the others a quasi-order.
bool prop_takes_graph(PropName prop);

struct VerifyOptions {
  std::uint64_t seed = 0;
  Budget* budget = nullptr;
  // Powerset sub-quantifiers are enumerated exhaustively up to this many
  // subsets and sampled beyond it.
  int max_enumerated_subsets = 1024;
  int sampled_subsets = 256;
  int max_antichain_sample = 512;
  int random_families = 12;
};

struct PropositionReport {
  PropName prop = PropName::Transitive;
  bool pass = true;
  bool exhaustive = true;  // false when any sub-quantifier was sampled
  std::uint64_t checks = 0;
  nlohmann::json counterexample;  // null on pass
};

// Checks the proposition's full quantified statement on one instance by
// brute force (sampled above the enumeration caps). The instance must be a
// graph or quasi-order according to the proposition.
PropositionReport verify_proposition(PropName prop, const FiniteRelation& instance,
                                     const VerifyOptions& options = {});

// One set per line, space-separated decimal vertex indices; blank lines
// and '#' comments ignored.
SetFamily parse_set_family(const std::string& text);
std::string serialize_set_family(const SetFamily& family);

nlohmann::json paper_cover_json(const PaperCover& cover);

}  // namespace qolab

#endif
