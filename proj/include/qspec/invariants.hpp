#pragma once

#include <array>
#include <string>

#include "qspec/graph.hpp"
#include "qspec/linalg.hpp"

namespace qspec {

/// Everything here is recovered from the characteristic polynomial alone;
/// edge_count comes from the moments (T_1/2 for L and Q, T_2/2 for A).
struct SpectralSummary {
  MatrixKind kind = MatrixKind::Q;
  int order = 0;
  long long edge_count = 0;
  std::array<long long, 4> moments{};  // T_0..T_3
  int zero_mult = 0;
  BigInt pseudo_determinant;
  BigInt determinant;
  double largest_root_value = 0.0;
  double largest_root_tol = 0.0;
  bool regular_from_spectrum = false;
};

SpectralSummary summarize(const Graph& g, MatrixKind kind, double root_tol = 1e-9);
SpectralSummary summarize_poly(const CharPoly& p, MatrixKind kind, double root_tol = 1e-9);

struct LemmaCheckResult {
  std::string lemma;   // identity identifier, e.g. "trace-identities"
  std::string graph6;
  bool applicable = true;
  bool holds = true;
  std::string lhs;
  std::string rhs;

  std::string jsonl() const;
  std::string csv_row() const;
  static std::string csv_header();
};

/// Power-sum traces of Q against the vertex/edge/triangle/degree counts.
LemmaCheckResult check_trace_identities(const Graph& g);

/// For connected bipartite graphs: the products of nonzero L- and
/// Q-eigenvalues both equal n times the spanning-tree count.
LemmaCheckResult check_bipartite_product(const Graph& g);

/// det Q = 4 exactly on odd-unicyclic graphs; for connected non-bipartite
/// graphs with m > n, det Q >= 16 with equality exactly on non-bipartite
/// bicyclic graphs with an induced 4-cycle.
LemmaCheckResult check_det_q(const Graph& g);

/// Clause-level outcomes behind check_det_q. The printed equality
/// condition demands an induced 4-cycle; exhaustive checking shows the
/// condition that actually holds is a 4-cycle subgraph (two triangles
/// sharing an edge have det Q = 16 without an induced C4), so both forms
/// are reported and callers decide which one gates.
struct DetQClauses {
  bool applicable = false;              // connected, order >= 1
  bool four_iff_odd_unicyclic = true;
  bool second_clause_applicable = false;  // non-bipartite with m > n
  bool lower_bound_16 = true;
  bool equality_iff_induced_c4 = true;  // the printed form
  bool equality_iff_c4_subgraph = true; // the corrected form
};
DetQClauses det_q_clauses(const Graph& g);

/// Strict growth of the largest Q-eigenvalue from a proper subgraph H to a
/// connected supergraph G, decided by exact sign tests. H is given on the
/// same labeled vertex set (a prefix of G's vertices).
LemmaCheckResult check_q1_monotone(const Graph& g, const Graph& h);

}  // namespace qspec
