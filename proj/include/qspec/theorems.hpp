#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qspec/census.hpp"

namespace qspec {

/// External names (CLI tokens): "3.1-DLS", "3.1-DQS", "3.2", "3.3",
/// "3.4", "cor-Kn", "cor-Kn-minus-matching", "cor-(n-2)-regular",
/// "cor-(n-3)-regular", "cor-friendship".
enum class TheoremId {
  union_tree_dls,
  union_tree_dqs,
  union_odd_unicyclic,
  union_bicyclic_c4,
  union_nonbipartite,
  cor_complete,
  cor_complete_minus_matching,
  cor_regular_n2,
  cor_regular_n3,
  cor_friendship,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct TheoremInstance {
  TheoremId id = TheoremId::union_tree_dls;
  std::string base_graph6;            // as constructed
  std::string base_canonical_graph6;  // label-invariant identity
  int r = 0;
  int s = 0;
  int total_order = 0;
};

struct Counterexample {
  TheoremInstance instance;
  std::string mate_graph6;
};

struct TheoremReport {
  TheoremId id = TheoremId::union_tree_dls;
  int budget = 0;
  long long instances_checked = 0;
  long long instances_confirmed = 0;
  long long failed_instances = 0;
  std::vector<Counterexample> counterexamples;
  long long bases_considered = 0;
  long long bases_rejected = 0;  // failed the hypothesis gate
  long long graphs_scanned = 0;  // census sizes consulted; deterministic
  std::vector<std::string> notes;
  // exploratory probes outside the stated hypotheses; reported, never asserted
  long long exploratory_checked = 0;
  long long exploratory_confirmed = 0;
  std::vector<Counterexample> exploratory_counterexamples;

  bool all_confirmed() const { return counterexamples.empty(); }
};

/// Builds censuses on demand and keeps them for reuse; optionally backed
/// by a disk cache directory. The builder injects the (possibly parallel)
/// classify strategy.
class CensusProvider {
 public:
  using Builder = std::function<Census(int, MatrixKind)>;
  explicit CensusProvider(Builder builder = {}, std::string cache_dir = "");
  const Census& get(int order, MatrixKind kind);

 private:
  Builder builder_;
  std::string cache_dir_;
  std::map<std::pair<int, char>, Census> store_;
};

/// Is g the only graph of its order with its spectrum (for this kind)?
bool spectrum_determined(const Graph& g, MatrixKind kind, CensusProvider& censuses);

/// Exhaustive check that base u rK1 u sK2 is determined by its spectrum:
/// returns the graph6 strings of all non-isomorphic cospectral mates at
/// the union's order (empty = confirmed).
std::vector<std::string> verify_union_determined(const Graph& base, int r, int s, MatrixKind kind,
                                                 CensusProvider& censuses);

TheoremReport run_theorem(TheoremId id, int budget, CensusProvider& censuses,
                          bool exploratory = false);

/// The union's Q-characteristic polynomial factors exactly:
/// charQ(G u rK1 u sK2) = charQ(G) * x^(r+s) * (x-2)^s.
bool union_charpoly_identity_holds(const Graph& g, int r, int s);

std::string report_to_json(const TheoremReport& rep);
std::string report_to_text(const TheoremReport& rep);

}  // namespace qspec
