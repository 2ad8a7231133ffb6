#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>

#include "qspec/graph.hpp"

namespace qspec {

/// Label-invariant fingerprint: byte 0 is the order, the rest are the
/// upper-triangle bits of the canonical labeling (column-major, MSB first).
/// Equal codes iff isomorphic.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalForm {
  Graph graph;                                   // canonically relabeled copy
  std::array<uint8_t, kMaxOrder> to_canonical{}; // original vertex -> canonical position
};

CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

/// Packs an already canonically labeled graph; pack(canonical_form(g).graph)
/// equals canonical_code(g).
CanonicalCode pack_code(const Graph& canonical);
Graph code_to_graph(const CanonicalCode& code);

enum class FilterKind {
  all,
  connected,
  trees,
  unicyclic,
  connected_non_bipartite,
  connected_bipartite,
};

struct GraphFilter {
  FilterKind kind = FilterKind::all;
  int min_edges = 0;
  int max_edges = -1;   // -1 = unbounded
  int max_degree = -1;  // -1 = unbounded

  bool accepts(const Graph& g) const;
  std::string describe() const;
};

GraphFilter filter_from_name(const std::string& name);

/// Shards partition the output; the union over all shard indices is the
/// full isomorph-free enumeration and shards are pairwise disjoint.
struct WorkPartition {
  int shard_index = 0;
  int shard_count = 1;
};

/// Isomorph-free exhaustive generation by canonical-deletion augmentation.
/// Emits one canonically labeled representative per isomorphism class of
/// order n passing the filter, in a deterministic order per shard.
void enumerate(int n, const GraphFilter& filter, const WorkPartition& part,
               const std::function<void(const Graph&, const CanonicalCode&)>& emit);

}  // namespace qspec
