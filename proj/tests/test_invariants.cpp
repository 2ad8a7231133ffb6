#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qspec/invariants.hpp"

using namespace qspec;

TEST_CASE("summarize recovers everything from the polynomial") {
  SpectralSummary k3 = summarize(make_named(Family::complete, 3), MatrixKind::Q);
  CHECK(k3.order == 3);
  CHECK(k3.edge_count == 3);
  CHECK(k3.moments == std::array<long long, 4>{3, 6, 18, 66});
  CHECK(k3.zero_mult == 0);
  CHECK(k3.determinant == BigInt(4));
  CHECK(k3.largest_root_value == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(k3.regular_from_spectrum);

  SpectralSummary c4 = summarize(make_named(Family::cycle, 4), MatrixKind::Q);
  CHECK(c4.edge_count == 4);
  CHECK(c4.zero_mult == 1);
  CHECK(c4.pseudo_determinant == BigInt(16));
  CHECK(c4.regular_from_spectrum);

  SpectralSummary e3 = summarize(make_named(Family::empty, 3), MatrixKind::Q);
  CHECK(e3.edge_count == 0);
  CHECK(e3.zero_mult == 3);
  CHECK(e3.pseudo_determinant == BigInt(1));
  CHECK(e3.regular_from_spectrum);

  SpectralSummary p4l = summarize(make_named(Family::path, 4), MatrixKind::L);
  CHECK(p4l.edge_count == 3);
  CHECK(p4l.zero_mult == 1);
  CHECK(!p4l.regular_from_spectrum);

  SpectralSummary p4a = summarize(make_named(Family::path, 4), MatrixKind::A);
  CHECK(p4a.edge_count == 3);  // from T_2/2 for the adjacency matrix
  CHECK(!p4a.regular_from_spectrum);

  SpectralSummary c4a = summarize(make_named(Family::cycle, 4), MatrixKind::A);
  CHECK(c4a.regular_from_spectrum);
}

TEST_CASE("regularity flag agrees with the graph across kinds") {
  uint64_t rng = 8;
  for (int t = 0; t < 80; ++t) {
    int n = 1 + static_cast<int>(oracle::lcg_next(rng) % 7);
    Graph g = oracle::random_graph(n, rng);
    bool regular = structure_class(g).is_regular;
    for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q})
      CHECK(summarize(g, kind).regular_from_spectrum == regular);
  }
}

TEST_CASE("trace identities") {
  CHECK(check_trace_identities(make_named(Family::complete, 3)).holds);
  CHECK(check_trace_identities(make_named(Family::star, 4)).holds);
  CHECK(check_trace_identities(make_named(Family::empty, 6)).holds);
  auto res = check_trace_identities(make_named(Family::complete, 3));
  CHECK(res.lhs == "T=[3,6,18,66]");
}

TEST_CASE("bipartite pseudo-determinant product") {
  auto p4 = check_bipartite_product(make_named(Family::path, 4));
  CHECK(p4.applicable);
  CHECK(p4.holds);
  CHECK(p4.rhs == "n*tau=4");

  auto c4 = check_bipartite_product(make_named(Family::cycle, 4));
  CHECK(c4.holds);
  CHECK(c4.rhs == "n*tau=16");

  auto c6 = check_bipartite_product(make_named(Family::cycle, 6));
  CHECK(c6.holds);
  CHECK(c6.rhs == "n*tau=36");

  CHECK(!check_bipartite_product(make_named(Family::complete, 3)).applicable);
  CHECK(!check_bipartite_product(union_with_isolates_and_matching(make_named(Family::path, 2), 1, 0))
             .applicable);
}

TEST_CASE("determinant dichotomy") {
  CHECK(check_det_q(make_named(Family::cycle, 3)).holds);
  CHECK(check_det_q(make_named(Family::cycle, 5)).holds);

  // triangle and square sharing one vertex: n=6, m=7, det Q must be 16
  Graph shared(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(shared.edge_count() == 7);
  auto res = check_det_q(shared);
  CHECK(res.applicable);
  CHECK(res.holds);
  CHECK(determinant(build_matrix(shared, MatrixKind::Q)) == BigInt(16));

  CHECK(!check_det_q(union_with_isolates_and_matching(make_named(Family::complete, 3), 1, 0))
             .applicable);

  // two triangles sharing an edge: det Q = 16 with a 4-cycle subgraph but
  // no induced 4-cycle; the printed equality form breaks, the corrected
  // subgraph form holds
  Graph k4e = make_named(Family::complete, 4);
  k4e.remove_edge(2, 3);
  CHECK(determinant(build_matrix(k4e, MatrixKind::Q)) == BigInt(16));
  CHECK(!structure_class(k4e).has_induced_c4);
  DetQClauses cl = det_q_clauses(k4e);
  CHECK(cl.applicable);
  CHECK(cl.second_clause_applicable);
  CHECK(cl.four_iff_odd_unicyclic);
  CHECK(cl.lower_bound_16);
  CHECK(!cl.equality_iff_induced_c4);
  CHECK(cl.equality_iff_c4_subgraph);
  auto row = check_det_q(k4e);
  CHECK(!row.holds);
  CHECK(row.rhs.find("equality_iff_induced_c4=violated") != std::string::npos);
  CHECK(row.rhs.find("equality_iff_c4_subgraph=ok") != std::string::npos);
}

TEST_CASE("q1 monotonicity") {
  Graph k3 = make_named(Family::complete, 3);
  Graph p3 = make_named(Family::path, 3);
  CHECK(check_q1_monotone(k3, p3).holds);

  Graph c4 = make_named(Family::cycle, 4);
  Graph p4 = make_named(Family::path, 4);
  CHECK(check_q1_monotone(c4, p4).holds);

  Graph k4 = make_named(Family::complete, 4);
  CHECK(check_q1_monotone(k4, k3).holds);

  CHECK_THROWS_AS(check_q1_monotone(k3, k3), std::invalid_argument);  // not proper
  Graph not_sub(3, {{0, 2}});
  CHECK_THROWS_AS(check_q1_monotone(p3, not_sub), std::invalid_argument);
  Graph disconnected = union_with_isolates_and_matching(k3, 1, 0);
  CHECK_THROWS_AS(check_q1_monotone(disconnected, k3), std::invalid_argument);
}

TEST_CASE("serialization of check rows") {
  auto res = check_trace_identities(make_named(Family::complete, 3));
  CHECK(res.jsonl().find("\"lemma\":\"trace-identities\"") != std::string::npos);
  CHECK(res.jsonl().find("\"graph6\":\"Bw\"") != std::string::npos);
  CHECK(res.jsonl().find("\"holds\":true") != std::string::npos);
  CHECK(LemmaCheckResult::csv_header() == "lemma,graph6,holds,lhs,rhs");
  CHECK(res.csv_row().substr(0, 22) == "trace-identities,Bw,tr");
}
