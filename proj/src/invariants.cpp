#include "qspec/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace qspec {

namespace {

long long narrow(const BigInt& b) { return b.to_i64(); }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

SpectralSummary summarize_poly(const CharPoly& p, MatrixKind kind, double root_tol) {
  SpectralSummary s;
  s.kind = kind;
  s.order = p.degree();
  auto ms = moments_from_charpoly(p, 3);
  for (int k = 0; k <= 3; ++k) s.moments[k] = narrow(ms[k]);
  s.edge_count = (kind == MatrixKind::A ? s.moments[2] : s.moments[1]) / 2;
  s.zero_mult = zero_multiplicity(p);
  s.pseudo_determinant = pseudo_det(p);
  s.determinant = s.order % 2 == 0 ? p.coeffs[0] : -p.coeffs[0];
  s.largest_root_tol = root_tol;
  s.largest_root_value = s.order >= 1 ? largest_root(p, root_tol) : 0.0;
  if (s.order == 0) {
    s.regular_from_spectrum = true;
  } else if (kind == MatrixKind::L) {
    // Cauchy-Schwarz equality: degrees are constant iff (sum d)^2 = n*(sum d^2),
    // and the L-spectrum recovers sum d = T_1 and sum d^2 = T_2 - T_1.
    s.regular_from_spectrum =
        BigInt(s.moments[1]) * BigInt(s.moments[1]) ==
        BigInt(s.order) * (ms[2] - ms[1]);
  } else {
    // regular iff the average row sum is a root and bounds the spectrum
    long long num = (kind == MatrixKind::Q ? 4 : 2) * s.edge_count;
    BigInt bn(num), bd(s.order);
    s.regular_from_spectrum = is_root_at(p, bn, bd) && bounds_all_roots(p, bn, bd);
  }
  return s;
}

SpectralSummary summarize(const Graph& g, MatrixKind kind, double root_tol) {
  return summarize_poly(char_poly(g, kind), kind, root_tol);
}

std::string LemmaCheckResult::jsonl() const {
  std::ostringstream os;
  os << "{\"lemma\":\"" << json_escape(lemma) << "\",\"graph6\":\"" << json_escape(graph6)
     << "\",\"holds\":" << (holds ? "true" : "false") << ",\"applicable\":"
     << (applicable ? "true" : "false") << ",\"lhs\":\"" << json_escape(lhs)
     << "\",\"rhs\":\"" << json_escape(rhs) << "\"}";
  return os.str();
}

std::string LemmaCheckResult::csv_header() { return "lemma,graph6,holds,lhs,rhs"; }

std::string LemmaCheckResult::csv_row() const {
  std::ostringstream os;
  os << lemma << ',' << graph6 << ',' << (holds ? "true" : "false") << ",\"" << lhs << "\",\""
     << rhs << '"';
  return os.str();
}

LemmaCheckResult check_trace_identities(const Graph& g) {
  LemmaCheckResult res;
  res.lemma = "trace-identities";
  res.graph6 = encode_graph6(g);
  auto t = spectral_moments(g, MatrixKind::Q, 3);
  DegreeStats ds = degree_stats(g);
  StructureClass sc = structure_class(g);
  long long n = g.order();
  long long m = g.edge_count();
  BigInt r0(n), r1(2 * m);
  BigInt r2(2 * m + ds.sum_squares);
  BigInt r3(6 * static_cast<long long>(sc.triangle_count) + 3 * ds.sum_squares + ds.sum_cubes);
  res.holds = t[0] == r0 && t[1] == r1 && t[2] == r2 && t[3] == r3;
  res.lhs = "T=[" + t[0].str() + "," + t[1].str() + "," + t[2].str() + "," + t[3].str() + "]";
  res.rhs = "[n,2m,2m+sum_d2,6t+3sum_d2+sum_d3]=[" + r0.str() + "," + r1.str() + "," + r2.str() +
            "," + r3.str() + "]";
  return res;
}

LemmaCheckResult check_bipartite_product(const Graph& g) {
  LemmaCheckResult res;
  res.lemma = "bipartite-product";
  res.graph6 = encode_graph6(g);
  if (g.order() == 0 || !(is_connected(g) && is_bipartite(g))) {
    res.applicable = false;
    res.lhs = res.rhs = "n/a";
    return res;
  }
  BigInt pq = pseudo_det(char_poly(g, MatrixKind::Q));
  BigInt pl = pseudo_det(char_poly(g, MatrixKind::L));
  BigInt ntau = BigInt(g.order()) * spanning_tree_count(g);
  res.holds = pq == pl && pl == ntau;
  res.lhs = "PQ=" + pq.str() + ",PL=" + pl.str();
  res.rhs = "n*tau=" + ntau.str();
  return res;
}

namespace {

// any 4-cycle, chords allowed
bool has_c4_subgraph(const Graph& g) {
  int n = g.order();
  auto e = [&g](int u, int v) { return g.has_edge(u, v); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if ((e(a, b) && e(b, c) && e(c, d) && e(d, a)) ||
              (e(a, c) && e(c, b) && e(b, d) && e(d, a)) ||
              (e(a, b) && e(b, d) && e(d, c) && e(c, a)))
            return true;
        }
  return false;
}

}  // namespace

DetQClauses det_q_clauses(const Graph& g) {
  DetQClauses out;
  if (g.order() == 0 || !is_connected(g)) return out;
  out.applicable = true;
  BigInt det = determinant(build_matrix(g, MatrixKind::Q));
  StructureClass sc = structure_class(g);
  bool odd_unicyclic = sc.component_shapes.size() == 1 &&
                       sc.component_shapes[0] == ComponentShape::odd_unicyclic;
  out.four_iff_odd_unicyclic = (det == BigInt(4)) == odd_unicyclic;
  if (!sc.is_bipartite && g.edge_count() > g.order()) {
    out.second_clause_applicable = true;
    bool bicyclic = sc.component_shapes[0] == ComponentShape::bicyclic;
    out.lower_bound_16 = det >= BigInt(16);
    out.equality_iff_induced_c4 = (det == BigInt(16)) == (bicyclic && sc.has_induced_c4);
    out.equality_iff_c4_subgraph = (det == BigInt(16)) == (bicyclic && has_c4_subgraph(g));
  }
  return out;
}

LemmaCheckResult check_det_q(const Graph& g) {
  LemmaCheckResult res;
  res.lemma = "det-q-dichotomy";
  res.graph6 = encode_graph6(g);
  DetQClauses cl = det_q_clauses(g);
  if (!cl.applicable) {
    res.applicable = false;
    res.lhs = res.rhs = "n/a";
    return res;
  }
  BigInt det = determinant(build_matrix(g, MatrixKind::Q));
  res.holds = cl.four_iff_odd_unicyclic &&
              (!cl.second_clause_applicable || (cl.lower_bound_16 && cl.equality_iff_induced_c4));
  res.lhs = "det=" + det.str();
  res.rhs = std::string("four_iff_odd_unicyclic=") + (cl.four_iff_odd_unicyclic ? "ok" : "violated");
  if (cl.second_clause_applicable) {
    res.rhs += std::string(",lower_bound_16=") + (cl.lower_bound_16 ? "ok" : "violated");
    res.rhs += std::string(",equality_iff_induced_c4=") +
               (cl.equality_iff_induced_c4 ? "ok" : "violated");
    res.rhs += std::string(",equality_iff_c4_subgraph=") +
               (cl.equality_iff_c4_subgraph ? "ok" : "violated");
  }
  return res;
}

LemmaCheckResult check_q1_monotone(const Graph& g, const Graph& h) {
  if (!is_connected(g)) throw std::invalid_argument("check_q1_monotone: G must be connected");
  if (h.order() > g.order() || h.order() == 0)
    throw std::invalid_argument("check_q1_monotone: H must live on a prefix of G's vertices");
  bool subgraph = true;
  int hm = 0;
  for (int u = 0; u < h.order() && subgraph; ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.has_edge(u, v)) {
        ++hm;
        if (!g.has_edge(u, v)) {
          subgraph = false;
          break;
        }
      }
  if (!subgraph) throw std::invalid_argument("check_q1_monotone: H is not a subgraph of G");
  if (h.order() == g.order() && hm == g.edge_count())
    throw std::invalid_argument("check_q1_monotone: H must be a proper subgraph");

  LemmaCheckResult res;
  res.lemma = "q1-monotone";
  res.graph6 = encode_graph6(g);
  CharPoly pg = char_poly(g, MatrixKind::Q);
  CharPoly ph = char_poly(h, MatrixKind::Q);
  res.holds = largest_root_greater(pg, ph);
  res.lhs = "q1(G)~" + std::to_string(largest_root(pg, 1e-9));
  res.rhs = "q1(H)~" + std::to_string(largest_root(ph, 1e-9)) + ",H=" + encode_graph6(h);
  return res;
}

}  // namespace qspec
