#include "qspec/theorems.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qspec/invariants.hpp"

namespace qspec {

namespace {

const std::pair<TheoremId, const char*> kNames[] = {
    {TheoremId::union_tree_dls, "3.1-DLS"},
    {TheoremId::union_tree_dqs, "3.1-DQS"},
    {TheoremId::union_odd_unicyclic, "3.2"},
    {TheoremId::union_bicyclic_c4, "3.3"},
    {TheoremId::union_nonbipartite, "3.4"},
    {TheoremId::cor_complete, "cor-Kn"},
    {TheoremId::cor_complete_minus_matching, "cor-Kn-minus-matching"},
    {TheoremId::cor_regular_n2, "cor-(n-2)-regular"},
    {TheoremId::cor_regular_n3, "cor-(n-3)-regular"},
    {TheoremId::cor_friendship, "cor-friendship"},
};

}  // namespace

std::string theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  throw std::invalid_argument("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
  for (const auto& [tid, tname] : kNames)
    if (name == tname) return tid;
  throw std::invalid_argument("unknown theorem: " + name);
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& [tid, name] : kNames) v.push_back(tid);
    return v;
  }();
  return ids;
}

CensusProvider::CensusProvider(Builder builder, std::string cache_dir)
    : builder_(std::move(builder)), cache_dir_(std::move(cache_dir)) {
  if (!builder_) builder_ = [](int n, MatrixKind kind) { return classify(n, kind); };
}

const Census& CensusProvider::get(int order, MatrixKind kind) {
  auto key = std::make_pair(order, kind_letter(kind));
  auto it = store_.find(key);
  if (it != store_.end()) return it->second;

  if (!cache_dir_.empty()) {
    std::filesystem::path path = std::filesystem::path(cache_dir_) /
                                 ("census-n" + std::to_string(order) + "-" +
                                  std::string(1, kind_letter(kind)) + ".bin");
    if (std::filesystem::exists(path)) {
      Census c = load_census(path.string());
      if (c.order != order || c.kind != kind)
        throw std::runtime_error("census cache: file does not match its name: " + path.string());
      return store_.emplace(key, std::move(c)).first->second;
    }
    Census c = builder_(order, kind);
    std::filesystem::create_directories(cache_dir_);
    save_census(c, path.string());
    return store_.emplace(key, std::move(c)).first->second;
  }
  return store_.emplace(key, builder_(order, kind)).first->second;
}

bool spectrum_determined(const Graph& g, MatrixKind kind, CensusProvider& censuses) {
  const Census& c = censuses.get(g.order(), kind);
  const auto* cls = c.find_class(char_poly(g, kind).key());
  if (!cls) throw std::runtime_error("spectrum_determined: graph missing from census");
  return cls->size() == 1;
}

std::vector<std::string> verify_union_determined(const Graph& base, int r, int s, MatrixKind kind,
                                                 CensusProvider& censuses) {
  Graph u = union_with_isolates_and_matching(base, r, s);
  const Census& c = censuses.get(u.order(), kind);
  const auto* cls = c.find_class(char_poly(u, kind).key());
  if (!cls) throw std::runtime_error("verify_union_determined: union missing from census");
  CanonicalCode self = canonical_code(u);
  std::vector<std::string> out;
  for (const auto& code : *cls)
    if (!(code == self)) out.push_back(encode_graph6(code_to_graph(code)));
  return out;
}

namespace {

struct Runner {
  TheoremReport rep;
  CensusProvider* censuses = nullptr;
  int budget = 0;
  std::map<std::pair<int, char>, long long> scan_sizes;

  long long census_size(int order, MatrixKind kind) {
    auto key = std::make_pair(order, kind_letter(kind));
    auto it = scan_sizes.find(key);
    if (it == scan_sizes.end())
      it = scan_sizes.emplace(key, static_cast<long long>(censuses->get(order, kind).graph_count()))
               .first;
    return it->second;
  }

  void instance(const Graph& base, int r, int s, MatrixKind kind, bool probe) {
    auto mates = verify_union_determined(base, r, s, kind, *censuses);
    TheoremInstance inst{rep.id,
                         encode_graph6(base),
                         encode_graph6(canonical_form(base).graph),
                         r,
                         s,
                         base.order() + r + 2 * s};
    rep.graphs_scanned += census_size(inst.total_order, kind);
    auto& checked = probe ? rep.exploratory_checked : rep.instances_checked;
    auto& confirmed = probe ? rep.exploratory_confirmed : rep.instances_confirmed;
    auto& exs = probe ? rep.exploratory_counterexamples : rep.counterexamples;
    ++checked;
    if (mates.empty()) {
      ++confirmed;
    } else {
      if (!probe) ++rep.failed_instances;
      for (auto& m : mates) exs.push_back(Counterexample{inst, std::move(m)});
    }
  }

  // every (r, s) >= 0 with base order + r + 2s <= budget
  void all_unions(const Graph& base, MatrixKind kind) {
    for (int s = 0; base.order() + 2 * s <= budget; ++s)
      for (int r = 0; base.order() + r + 2 * s <= budget; ++r)
        instance(base, r, s, kind, false);
  }
};

// connected (n-3)-regular graphs are exactly complements of disjoint cycle
// covers; enumerate cycle-length multisets (parts >= 3, descending)
void cycle_partitions(int total, int max_part, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (total == 0) {
    fn(cur);
    return;
  }
  for (int part = std::min(total, max_part); part >= 3; --part) {
    if (total - part != 0 && total - part < 3) continue;
    cur.push_back(part);
    cycle_partitions(total - part, part, cur, fn);
    cur.pop_back();
  }
}

Graph complement_of_cycles(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  Graph g(n);
  int off = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i) g.add_edge(off + i, off + (i + 1) % p);
    off += p;
  }
  return complement(g);
}

}  // namespace

TheoremReport run_theorem(TheoremId id, int budget, CensusProvider& censuses, bool exploratory) {
  if (budget < 1 || budget > kMaxOrder)
    throw std::length_error("run_theorem: budget outside enumeration capacity");

  Runner run;
  run.rep.id = id;
  run.rep.budget = budget;
  run.censuses = &censuses;
  run.budget = budget;
  TheoremReport& rep = run.rep;
  WorkPartition whole;

  auto for_each_enumerated = [&](int order, const GraphFilter& f,
                                 const std::function<void(const Graph&)>& fn) {
    enumerate(order, f, whole, [&fn](const Graph& g, const CanonicalCode&) { fn(g); });
  };

  switch (id) {
    case TheoremId::union_tree_dls: {
      GraphFilter trees;
      trees.kind = FilterKind::trees;
      for (int t = 1; t <= budget; ++t)
        for_each_enumerated(t, trees, [&](const Graph& tree) {
          ++rep.bases_considered;
          if (!spectrum_determined(tree, MatrixKind::L, censuses)) {
            ++rep.bases_rejected;
            return;
          }
          run.all_unions(tree, MatrixKind::L);
        });
      break;
    }
    case TheoremId::union_tree_dqs: {
      GraphFilter trees;
      trees.kind = FilterKind::trees;
      for (int t = 1; t <= budget; ++t)
        for_each_enumerated(t, trees, [&](const Graph& tree) {
          ++rep.bases_considered;
          bool dqs = spectrum_determined(tree, MatrixKind::Q, censuses);
          bool hyp = dqs && tree.order() % 2 == 1;
          if (!hyp) ++rep.bases_rejected;
          if (hyp && tree.order() + 2 <= budget)
            for (int r = 0; tree.order() + r + 2 <= budget; ++r)
              run.instance(tree, r, 1, MatrixKind::Q, false);
          if (exploratory && dqs)
            for (int s = 0; tree.order() + 2 * s <= budget; ++s)
              for (int r = 0; tree.order() + r + 2 * s <= budget; ++r)
                if (!(tree.order() % 2 == 1 && s == 1))
                  run.instance(tree, r, s, MatrixKind::Q, true);
        });
      break;
    }
    case TheoremId::union_odd_unicyclic: {
      GraphFilter uni;
      uni.kind = FilterKind::unicyclic;
      for (int t = 7; t <= budget; ++t)
        for_each_enumerated(t, uni, [&](const Graph& g) {
          ++rep.bases_considered;
          if (is_bipartite(g) || !spectrum_determined(g, MatrixKind::Q, censuses)) {
            ++rep.bases_rejected;
            return;
          }
          run.all_unions(g, MatrixKind::Q);
        });
      if (budget < 7) rep.notes.push_back("no instances: hypothesis needs base order >= 7");
      break;
    }
    case TheoremId::union_bicyclic_c4: {
      for (int t = 5; t <= budget; ++t) {
        GraphFilter bic;
        bic.kind = FilterKind::connected_non_bipartite;
        bic.min_edges = t + 1;
        bic.max_edges = t + 1;
        long long found = 0;
        for_each_enumerated(t, bic, [&](const Graph& g) {
          ++rep.bases_considered;
          if (!structure_class(g).has_induced_c4 ||
              !spectrum_determined(g, MatrixKind::Q, censuses)) {
            ++rep.bases_rejected;
            return;
          }
          ++found;
          run.all_unions(g, MatrixKind::Q);
        });
        if (t == 5 && found == 0)
          rep.notes.push_back(
              "no qualifying bases at order 5: smallest non-bipartite bicyclic graphs with an "
              "induced 4-cycle have order 6");
      }
      break;
    }
    case TheoremId::union_nonbipartite: {
      GraphFilter cnb;
      cnb.kind = FilterKind::connected_non_bipartite;
      for (int t = 3; t <= budget; ++t)
        for_each_enumerated(t, cnb, [&](const Graph& g) {
          ++rep.bases_considered;
          if (!spectrum_determined(g, MatrixKind::Q, censuses)) {
            ++rep.bases_rejected;
            return;
          }
          run.all_unions(g, MatrixKind::Q);
        });
      break;
    }
    case TheoremId::cor_complete: {
      for (int t = 1; t <= budget; ++t) {
        Graph g = make_named(Family::complete, t);
        ++rep.bases_considered;
        if (!spectrum_determined(g, MatrixKind::Q, censuses)) {
          ++rep.bases_rejected;
          continue;
        }
        run.all_unions(g, MatrixKind::Q);
      }
      break;
    }
    case TheoremId::cor_complete_minus_matching: {
      for (int t = 3; t <= budget; ++t)
        for (int j = 1; 2 * j <= t; ++j) {
          Graph g = make_named(Family::complete, t);
          for (int i = 0; i < j; ++i) g.remove_edge(2 * i, 2 * i + 1);
          ++rep.bases_considered;
          if (!is_connected(g) || !spectrum_determined(g, MatrixKind::Q, censuses)) {
            ++rep.bases_rejected;
            continue;
          }
          run.all_unions(g, MatrixKind::Q);
        }
      break;
    }
    case TheoremId::cor_regular_n2: {
      for (int t = 4; t <= budget; t += 2) {
        Graph g = make_named(Family::complete_minus_perfect_matching, t);
        ++rep.bases_considered;
        if (!is_connected(g) || !spectrum_determined(g, MatrixKind::Q, censuses)) {
          ++rep.bases_rejected;
          continue;
        }
        run.all_unions(g, MatrixKind::Q);
      }
      break;
    }
    case TheoremId::cor_regular_n3: {
      for (int t = 4; t <= budget; ++t) {
        std::vector<int> cur;
        cycle_partitions(t, t, cur, [&](const std::vector<int>& parts) {
          Graph g = complement_of_cycles(parts);
          ++rep.bases_considered;
          if (!is_connected(g) || !spectrum_determined(g, MatrixKind::Q, censuses)) {
            ++rep.bases_rejected;
            return;
          }
          run.all_unions(g, MatrixKind::Q);
        });
      }
      break;
    }
    case TheoremId::cor_friendship: {
      for (int k = 1; 2 * k + 1 <= budget; ++k) {
        Graph g = make_named(Family::friendship, k);
        ++rep.bases_considered;
        if (!spectrum_determined(g, MatrixKind::Q, censuses)) {
          ++rep.bases_rejected;
          continue;
        }
        run.all_unions(g, MatrixKind::Q);
      }
      break;
    }
  }

  auto order_key = [](const Counterexample& c) {
    return std::tie(c.instance.total_order, c.instance.base_graph6, c.instance.r, c.instance.s,
                    c.mate_graph6);
  };
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
            [&](const Counterexample& a, const Counterexample& b) { return order_key(a) < order_key(b); });
  std::sort(rep.exploratory_counterexamples.begin(), rep.exploratory_counterexamples.end(),
            [&](const Counterexample& a, const Counterexample& b) { return order_key(a) < order_key(b); });
  return run.rep;
}

bool union_charpoly_identity_holds(const Graph& g, int r, int s) {
  CharPoly lhs = char_poly(union_with_isolates_and_matching(g, r, s), MatrixKind::Q);
  CharPoly base = char_poly(g, MatrixKind::Q);
  // rhs coefficients: base * (x-2)^s, then shift by x^(r+s)
  std::vector<BigInt> rhs = base.coeffs;
  for (int i = 0; i < s; ++i) {
    std::vector<BigInt> next(rhs.size() + 1);
    for (size_t k = 0; k < rhs.size(); ++k) {
      next[k + 1] += rhs[k];
      next[k] += BigInt(-2) * rhs[k];
    }
    rhs = std::move(next);
  }
  std::vector<BigInt> shifted(static_cast<size_t>(r + s), BigInt(0));
  shifted.insert(shifted.end(), rhs.begin(), rhs.end());
  return lhs.coeffs == shifted;
}

namespace {

nlohmann::json counterexample_json(const Counterexample& c) {
  nlohmann::json j;
  j["base_graph6"] = c.instance.base_graph6;
  j["base_canonical_graph6"] = c.instance.base_canonical_graph6;
  j["r"] = c.instance.r;
  j["s"] = c.instance.s;
  j["total_order"] = c.instance.total_order;
  j["mate_graph6"] = c.mate_graph6;
  return j;
}

}  // namespace

std::string report_to_json(const TheoremReport& rep) {
  nlohmann::json j;
  j["schema"] = "qspec.theorem-report/1";
  j["theorem"] = theorem_name(rep.id);
  j["budget"] = rep.budget;
  j["instances_checked"] = rep.instances_checked;
  j["instances_confirmed"] = rep.instances_confirmed;
  j["failed_instances"] = rep.failed_instances;
  j["bases_considered"] = rep.bases_considered;
  j["bases_rejected"] = rep.bases_rejected;
  j["graphs_scanned"] = rep.graphs_scanned;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : rep.counterexamples) j["counterexamples"].push_back(counterexample_json(c));
  j["notes"] = rep.notes;
  if (rep.exploratory_checked > 0) {
    nlohmann::json e;
    e["checked"] = rep.exploratory_checked;
    e["confirmed"] = rep.exploratory_confirmed;
    e["counterexamples"] = nlohmann::json::array();
    for (const auto& c : rep.exploratory_counterexamples)
      e["counterexamples"].push_back(counterexample_json(c));
    j["exploratory"] = e;
  }
  return j.dump(2);
}

std::string report_to_text(const TheoremReport& rep) {
  std::ostringstream os;
  os << "theorem " << theorem_name(rep.id) << "  (budget: total order <= " << rep.budget << ")\n";
  os << "  bases considered " << rep.bases_considered << ", rejected by hypothesis "
     << rep.bases_rejected << "\n";
  os << "  instances checked " << rep.instances_checked << ", confirmed "
     << rep.instances_confirmed << ", failed " << rep.failed_instances << "\n";
  os << "  graphs scanned " << rep.graphs_scanned << "\n";
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  for (const auto& c : rep.counterexamples)
    os << "  COUNTEREXAMPLE base=" << c.instance.base_graph6 << " r=" << c.instance.r
       << " s=" << c.instance.s << " order=" << c.instance.total_order
       << " mate=" << c.mate_graph6 << "\n";
  if (rep.exploratory_checked > 0) {
    os << "  exploratory probes: checked " << rep.exploratory_checked << ", confirmed "
       << rep.exploratory_confirmed << "\n";
    for (const auto& c : rep.exploratory_counterexamples)
      os << "  exploratory mate: base=" << c.instance.base_graph6 << " r=" << c.instance.r
         << " s=" << c.instance.s << " order=" << c.instance.total_order
         << " mate=" << c.mate_graph6 << "\n";
  }
  os << (rep.all_confirmed() ? "  result: all confirmed\n" : "  result: COUNTEREXAMPLES FOUND\n");
  return os.str();
}

}  // namespace qspec
