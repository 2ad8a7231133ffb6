#pragma once

#include <map>
#include <string>
#include <vector>

#include "qspec/enumerate.hpp"
#include "qspec/linalg.hpp"

namespace qspec {

inline constexpr const char* kToolVersion = "0.1.0";

struct SpectrumKey {
  MatrixKind kind = MatrixKind::Q;
  std::string coeffs;  // CharPoly::key(): decimal, constant term first
  auto operator<=>(const SpectrumKey&) const = default;
};

/// All isomorphism classes of one order grouped by exact characteristic
/// polynomial of one matrix kind. Classes partition the enumerated set.
struct Census {
  int order = 0;
  MatrixKind kind = MatrixKind::Q;
  std::map<std::string, std::vector<CanonicalCode>> classes;
  std::string generator_version = kToolVersion;
  std::string filter_desc = "all";

  size_t class_count() const { return classes.size(); }
  size_t graph_count() const;
  const std::vector<CanonicalCode>* find_class(const std::string& poly_key) const;
};

Census classify_shard(int n, MatrixKind kind, const WorkPartition& part);

/// Associative merge; the final key and member ordering is independent of
/// merge order once finalize_census has run.
void merge_census(Census& into, Census&& from);
void finalize_census(Census& c);

Census classify(int n, MatrixKind kind, int shard_count = 1);

/// Driver entry point: builds shard censuses on `threads` workers and
/// merges them. Library operations stay pure; only this helper spawns.
Census classify_parallel(int n, MatrixKind kind, int threads, int shard_count = 0);

struct DeterminationStatus {
  bool das = false;
  bool dls = false;
  bool dqs = false;
};

DeterminationStatus determination_status(const Graph& g, const Census& a_census,
                                         const Census& l_census, const Census& q_census);

/// Non-isomorphic graphs sharing g's spectrum; empty iff determined.
std::vector<Graph> mates(const Graph& g, MatrixKind kind, const Census& census);

/// Binary persistence: magic + JSON header (version, order, kind, class
/// count, payload checksum) + length-prefixed classes sorted by key.
/// Round trips are byte-identical.
void save_census(const Census& c, const std::string& path);
Census load_census(const std::string& path);

}  // namespace qspec
