// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Counterexamples and dichotomy
// violations are written to acceptance_findings.jsonl as evidence.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "qspec/census.hpp"
#include "qspec/enumerate.hpp"
#include "qspec/invariants.hpp"
#include "qspec/theorems.hpp"

using namespace qspec;

namespace {

int g_threads = 1;
std::ofstream g_findings;

struct Outcome {
  int id;
  std::string label;
  bool pass;
  std::string detail;
};

std::vector<Outcome> g_outcomes;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
  g_outcomes.push_back({id, label, pass, detail});
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << label << " (" << detail
            << ")" << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

// graphs of orders 0..8, canonical labeling, enumeration order
std::vector<std::vector<Graph>> enumerate_up_to_8() {
  std::vector<std::vector<Graph>> by_order(9);
  GraphFilter all;
  WorkPartition whole;
  for (int n = 0; n <= 8; ++n)
    enumerate(n, all, whole,
              [&by_order, n](const Graph& g, const CanonicalCode&) { by_order[n].push_back(g); });
  return by_order;
}

void criterion_trace_identities(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, violations = 0;
  for (const auto& level : by_order)
    for (const Graph& g : level) {
      ++checked;
      auto res = check_trace_identities(g);
      if (!res.holds) {
        ++violations;
        g_findings << res.jsonl() << "\n";
      }
    }
  report(1, "trace identities for every graph of order <= 8", violations == 0 && checked == 13599,
         std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations, " +
             fmt_secs(seconds_since(t0)));
}

void criterion_bipartite_product(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, violations = 0;
  for (const auto& level : by_order)
    for (const Graph& g : level) {
      if (g.order() == 0 || !is_connected(g) || !is_bipartite(g)) continue;
      ++checked;
      auto res = check_bipartite_product(g);
      if (!res.holds) {
        ++violations;
        g_findings << res.jsonl() << "\n";
      }
    }
  report(2, "pseudo-determinant product on connected bipartite graphs <= 8", violations == 0,
         std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations, " +
             fmt_secs(seconds_since(t0)));
}

// The det=4 dichotomy and the >=16 bound are asserted. The printed
// equality condition (induced C4) is knowably tense, so graphs violating
// it become findings rather than failures, while the corrected condition
// (C4 as a subgraph) is asserted exhaustively.
void criterion_det_dichotomy(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, hard_violations = 0, findings = 0;
  for (const auto& level : by_order)
    for (const Graph& g : level) {
      if (g.order() == 0 || !is_connected(g)) continue;
      ++checked;
      DetQClauses cl = det_q_clauses(g);
      if (!cl.four_iff_odd_unicyclic || !cl.lower_bound_16 || !cl.equality_iff_c4_subgraph) {
        ++hard_violations;
        g_findings << check_det_q(g).jsonl() << "\n";
      } else if (!cl.equality_iff_induced_c4) {
        ++findings;
        g_findings << check_det_q(g).jsonl() << "\n";
      }
    }
  report(3, "det(Q) dichotomy on connected graphs <= 8", hard_violations == 0,
         std::to_string(checked) + " graphs, " + std::to_string(hard_violations) +
             " violations, " + std::to_string(findings) +
             " findings against the printed induced-C4 equality form, " +
             fmt_secs(seconds_since(t0)));
}

void criterion_cospectral_agreement(CensusProvider& censuses) {
  auto t0 = std::chrono::steady_clock::now();
  long long classes_checked = 0, disagreements = 0;
  for (int n = 1; n <= 8; ++n)
    for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q}) {
      const Census& c = censuses.get(n, kind);
      for (const auto& [key, members] : c.classes) {
        if (members.size() < 2) continue;
        ++classes_checked;
        auto tuple_of = [kind](const Graph& g) {
          DegreeStats ds = degree_stats(g);
          StructureClass sc = structure_class(g);
          std::ostringstream os;
          os << g.order() << '/' << g.edge_count();
          if (kind == MatrixKind::Q)
            os << '/' << ds.sum_squares << '/' << sc.bipartite_component_count << '/'
               << sc.is_regular;
          else if (kind == MatrixKind::L)
            os << '/' << sc.component_count;
          else
            os << '/' << sc.is_regular;
          return os.str();
        };
        std::string expected = tuple_of(code_to_graph(members[0]));
        for (size_t i = 1; i < members.size(); ++i)
          if (tuple_of(code_to_graph(members[i])) != expected) {
            ++disagreements;
            g_findings << "{\"lemma\":\"cospectral-agreement\",\"kind\":\"" << kind_letter(kind)
                       << "\",\"graph6\":\"" << encode_graph6(code_to_graph(members[i]))
                       << "\"}\n";
          }
      }
    }
  report(4, "cospectral classes agree on spectrum-recoverable invariants", disagreements == 0,
         std::to_string(classes_checked) + " non-singleton classes, " +
             std::to_string(disagreements) + " disagreements, " + fmt_secs(seconds_since(t0)));
}

void criterion_q1_monotone(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  long long pairs = 0, violations = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : by_order[n]) {
      if (!is_connected(g)) continue;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (!g.has_edge(u, v)) continue;
          Graph h = g;
          h.remove_edge(u, v);
          if (!is_connected(h)) continue;
          ++pairs;
          auto res = check_q1_monotone(g, h);
          if (!res.holds) {
            ++violations;
            g_findings << res.jsonl() << "\n";
          }
        }
    }
  report(5, "q1 strictly decreases on connected one-edge-deleted subgraphs (order <= 6)",
         violations == 0,
         std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations, " +
             fmt_secs(seconds_since(t0)));
}

void criterion_enumeration(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  const long long expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 8; ++n)
    if (static_cast<long long>(by_order[n].size()) != expected[n - 1]) {
      ok = false;
      detail += "order " + std::to_string(n) + " count mismatch; ";
    }
  long long count9 = 0;
  {
    GraphFilter all;
    WorkPartition whole;
    enumerate(9, all, whole, [&count9](const Graph&, const CanonicalCode&) { ++count9; });
  }
  if (count9 != expected[8]) {
    ok = false;
    detail += "order 9 gave " + std::to_string(count9) + "; ";
  }

  // independent labeled-graph dedup oracle at small orders
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> brute;
    for (const Graph& g : oracle::classes_brute(n)) brute.insert(canonical_code(g).bytes);
    std::set<std::string> fast;
    for (const Graph& g : by_order[n]) fast.insert(pack_code(g).bytes);
    if (brute != fast) {
      ok = false;
      detail += "oracle mismatch at order " + std::to_string(n) + "; ";
    }
  }

  // shard invariance at order 8
  std::multiset<std::string> reference;
  for (const Graph& g : by_order[8]) reference.insert(pack_code(g).bytes);
  for (int shards : {4, 8}) {
    std::multiset<std::string> merged;
    GraphFilter all;
    for (int s = 0; s < shards; ++s)
      enumerate(8, all, WorkPartition{s, shards},
                [&merged](const Graph&, const CanonicalCode& c) { merged.insert(c.bytes); });
    if (merged != reference) {
      ok = false;
      detail += std::to_string(shards) + "-shard mismatch at order 8; ";
    }
  }
  report(6, "enumeration counts 1..9 with oracle and shard invariance", ok,
         (detail.empty() ? "counts 1,2,4,11,34,156,1044,12346,274668 confirmed" : detail) + ", " +
             fmt_secs(seconds_since(t0)));
}

long long emit_counterexamples(const TheoremReport& rep) {
  for (const auto& ce : rep.counterexamples) {
    g_findings << "{\"theorem\":\"" << theorem_name(rep.id) << "\",\"base_graph6\":\""
               << ce.instance.base_graph6 << "\",\"r\":" << ce.instance.r
               << ",\"s\":" << ce.instance.s << ",\"total_order\":" << ce.instance.total_order
               << ",\"mate_graph6\":\"" << ce.mate_graph6 << "\"}\n";
    std::cout << "      counterexample " << theorem_name(rep.id) << ": base "
              << ce.instance.base_graph6 << " r=" << ce.instance.r << " s=" << ce.instance.s
              << " mate " << ce.mate_graph6 << std::endl;
  }
  return rep.failed_instances;
}

void criterion_tree_unions(CensusProvider& censuses) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport dls = run_theorem(TheoremId::union_tree_dls, 9, censuses);
  TheoremReport dqs = run_theorem(TheoremId::union_tree_dqs, 9, censuses);
  long long failed = emit_counterexamples(dls) + emit_counterexamples(dqs);
  bool conserved = dls.instances_checked == dls.instances_confirmed + dls.failed_instances &&
                   dqs.instances_checked == dqs.instances_confirmed + dqs.failed_instances;
  report(7, "tree unions stay determined (DLS all; DQS for odd order, s=1)",
         failed == 0 && conserved && dls.instances_checked > 0 && dqs.instances_checked > 0,
         "DLS " + std::to_string(dls.instances_checked) + " instances, DQS " +
             std::to_string(dqs.instances_checked) + " instances, " + std::to_string(failed) +
             " failed, " + fmt_secs(seconds_since(t0)));
}

void criterion_union_theorems(CensusProvider& censuses) {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, failed = 0;
  bool coverage_ok = true;
  std::string note;
  for (TheoremId id :
       {TheoremId::union_odd_unicyclic, TheoremId::union_bicyclic_c4,
        TheoremId::union_nonbipartite, TheoremId::cor_complete,
        TheoremId::cor_complete_minus_matching, TheoremId::cor_regular_n2,
        TheoremId::cor_regular_n3, TheoremId::cor_friendship}) {
    TheoremReport rep = run_theorem(id, 9, censuses);
    checked += rep.instances_checked;
    failed += emit_counterexamples(rep);
    if (rep.failed_instances > 0)
      note += theorem_name(id) + ": " + std::to_string(rep.failed_instances) + " failed; ";
    if (rep.instances_checked != rep.instances_confirmed + rep.failed_instances) {
      coverage_ok = false;
      note += "conservation broken for " + theorem_name(id) + "; ";
    }
    if (id == TheoremId::cor_complete && rep.bases_considered < 9) {
      coverage_ok = false;
      note += "complete-graph bases missing; ";
    }
    if (id == TheoremId::union_odd_unicyclic && rep.instances_checked == 0) {
      coverage_ok = false;
      note += "no odd-unicyclic instances; ";
    }
    if (id == TheoremId::cor_friendship && rep.bases_considered < 4) {
      coverage_ok = false;
      note += "friendship bases missing; ";
    }
  }
  report(8, "union families confirmed determined by exhaustion (budget 9)",
         failed == 0 && coverage_ok,
         std::to_string(checked) + " instances, " + std::to_string(failed) + " failed" +
             (note.empty() ? "" : "; " + note) + ", " + fmt_secs(seconds_since(t0)));
}

void criterion_union_identity() {
  auto t0 = std::chrono::steady_clock::now();
  uint64_t rng = 20240501;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(oracle::lcg_next(rng) % 8);
    Graph g = oracle::random_graph(n, rng);
    int room = 12 - n;
    int s = static_cast<int>(oracle::lcg_next(rng) % static_cast<uint64_t>(room / 2 + 1));
    int r = static_cast<int>(oracle::lcg_next(rng) % static_cast<uint64_t>(room - 2 * s + 1));
    if (!union_charpoly_identity_holds(g, r, s)) ++failures;
  }
  report(9, "union charpoly factorization on 100 seeded random instances", failures == 0,
         std::to_string(failures) + " failures, " + fmt_secs(seconds_since(t0)));
}

void criterion_performance() {
  auto t0 = std::chrono::steady_clock::now();
  Census nine = classify_parallel(9, MatrixKind::Q, g_threads);
  double census9 = seconds_since(t0);
  bool ok9 = census9 < 600.0 && nine.graph_count() == 274668;

  auto t1 = std::chrono::steady_clock::now();
  Census shard10 = classify_shard(10, MatrixKind::Q, WorkPartition{0, 64});
  double shard_secs = seconds_since(t1);
  double extrapolated = shard_secs * 64.0 / std::max(1, g_threads);
  bool ok10 = shard10.graph_count() > 0 && extrapolated < 7200.0;

  report(10, "order-9 census under 10 minutes; order-10 within the flagged budget", ok9 && ok10,
         "order 9 in " + fmt_secs(census9) + " on " + std::to_string(g_threads) +
             " threads; order-10 shard 1/64 in " + fmt_secs(shard_secs) + ", extrapolated full " +
             fmt_secs(extrapolated));
}

void criterion_round_trips(const std::vector<std::vector<Graph>>& by_order) {
  auto t0 = std::chrono::steady_clock::now();
  long long bad = 0;
  for (const auto& level : by_order)
    for (const Graph& g : level) {
      std::string s = encode_graph6(g);
      if (!(decode_graph6(s) == g) || encode_graph6(decode_graph6(s)) != s) ++bad;
    }

  Census c5 = classify(5, MatrixKind::Q);
  const char* path_a = "acceptance_census_a.bin";
  const char* path_b = "acceptance_census_b.bin";
  save_census(c5, path_a);
  Census loaded = load_census(path_a);
  save_census(loaded, path_b);
  auto slurp = [](const char* p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  };
  bool census_ok =
      !slurp(path_a).empty() && slurp(path_a) == slurp(path_b) && loaded.classes == c5.classes;
  Census sharded = classify(5, MatrixKind::Q, 4);
  save_census(sharded, path_b);
  census_ok = census_ok && slurp(path_a) == slurp(path_b);
  std::remove(path_a);
  std::remove(path_b);

  report(11, "graph6 and census persistence round trips are exact", bad == 0 && census_ok,
         std::to_string(bad) + " graph6 mismatches, census round trip " +
             std::string(census_ok ? "byte-identical" : "BROKEN") + ", " +
             fmt_secs(seconds_since(t0)));
}

}  // namespace

int main() {
  if (const char* env = std::getenv("QSPEC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) g_threads = v;
  } else {
    unsigned hw = std::thread::hardware_concurrency();
    g_threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  g_findings.open("acceptance_findings.jsonl", std::ios::trunc);

  std::cout << "building the order <= 8 graph table..." << std::endl;
  auto by_order = enumerate_up_to_8();

  CensusProvider censuses(
      [](int n, MatrixKind kind) { return classify_parallel(n, kind, g_threads); });

  criterion_trace_identities(by_order);
  criterion_bipartite_product(by_order);
  criterion_det_dichotomy(by_order);
  criterion_cospectral_agreement(censuses);
  criterion_q1_monotone(by_order);
  criterion_enumeration(by_order);
  criterion_tree_unions(censuses);
  criterion_union_theorems(censuses);
  criterion_union_identity();
  criterion_performance();
  criterion_round_trips(by_order);

  int failed = 0;
  for (const auto& o : g_outcomes)
    if (!o.pass) ++failed;
  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED")
            << " (findings in acceptance_findings.jsonl)" << std::endl;
  return failed == 0 ? 0 : 1;
}
