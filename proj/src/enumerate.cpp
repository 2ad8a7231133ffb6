#include "qspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

namespace qspec {

namespace {

inline AdjBits bit(int v) { return static_cast<AdjBits>(AdjBits(1) << v); }
inline int popcnt(AdjBits m) { return std::popcount(static_cast<uint32_t>(m)); }

// ---------------------------------------------------------------------
// Canonical labeling: equitable refinement with individualization
// backtracking. The canonical labeling maximizes the relabeled adjacency
// rows in lexicographic order; automorphisms discovered at equal leaves
// prune sibling branches.
// ---------------------------------------------------------------------

struct Canonicalizer {
  int n = 0;
  std::array<AdjBits, kMaxOrder> adj{};

  struct Partition {
    std::array<uint8_t, kMaxOrder> vertex_at{};
    uint32_t cell_start = 1;  // bit p set iff a cell starts at position p
  };

  bool have_best = false;
  std::array<AdjBits, kMaxOrder> best_rows{};
  std::array<uint8_t, kMaxOrder> best_pos{};        // vertex -> position
  std::array<uint8_t, kMaxOrder> best_vertex_at{};  // position -> vertex

  std::vector<std::array<uint8_t, kMaxOrder>> autos;
  std::array<uint8_t, kMaxOrder> base{};
  int base_len = 0;

  void run(const Graph& g) {
    n = g.order();
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    have_best = false;
    autos.clear();
    base_len = 0;
    if (n == 0) {
      have_best = true;
      return;
    }
    Partition p;
    for (int v = 0; v < n; ++v) p.vertex_at[v] = static_cast<uint8_t>(v);
    p.cell_start = 1;
    descend(p);
  }

  void refine(Partition& p) const {
    using Key = std::array<uint8_t, kMaxOrder>;
    std::array<Key, kMaxOrder> key;
    std::array<AdjBits, kMaxOrder> masks;
    bool changed = true;
    while (changed) {
      changed = false;
      int cell_cnt = 0;
      for (int pos = 0; pos < n; ++pos) {
        if ((p.cell_start >> pos) & 1) masks[cell_cnt++] = 0;
        masks[cell_cnt - 1] = static_cast<AdjBits>(masks[cell_cnt - 1] | bit(p.vertex_at[pos]));
      }
      if (cell_cnt == n) return;  // discrete
      for (int pos = 0; pos < n; ++pos) {
        Key& k = key[pos];
        k.fill(0);
        AdjBits av = adj[p.vertex_at[pos]];
        for (int c = 0; c < cell_cnt; ++c)
          k[c] = static_cast<uint8_t>(popcnt(static_cast<AdjBits>(av & masks[c])));
      }
      // split every cell by its key vectors, larger keys first
      for (int pos = 0; pos < n;) {
        int end = pos + 1;
        while (end < n && !((p.cell_start >> end) & 1)) ++end;
        if (end - pos > 1) {
          // stable insertion sort of positions pos..end-1, descending keys
          for (int i = pos + 1; i < end; ++i) {
            uint8_t v = p.vertex_at[i];
            Key k = key[i];
            int j = i - 1;
            while (j >= pos && key[j] < k) {
              p.vertex_at[j + 1] = p.vertex_at[j];
              key[j + 1] = key[j];
              --j;
            }
            p.vertex_at[j + 1] = v;
            key[j + 1] = k;
          }
          for (int i = pos + 1; i < end; ++i)
            if (key[i] != key[i - 1] && !((p.cell_start >> i) & 1)) {
              p.cell_start |= 1u << i;
              changed = true;
            }
        }
        pos = end;
      }
    }
  }

  bool in_processed_orbit(uint8_t v, uint32_t processed) const {
    if (autos.empty()) return false;
    std::array<uint8_t, kMaxOrder> parent;
    for (int i = 0; i < n; ++i) parent[i] = static_cast<uint8_t>(i);
    auto find = [&parent](uint8_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& g : autos) {
      bool fixes_base = true;
      for (int b = 0; b < base_len; ++b)
        if (g[base[b]] != base[b]) {
          fixes_base = false;
          break;
        }
      if (!fixes_base) continue;
      for (int u = 0; u < n; ++u) {
        uint8_t a = find(static_cast<uint8_t>(u)), b = find(g[u]);
        if (a != b) parent[a] = b;
      }
    }
    uint8_t rv = find(v);
    uint32_t rest = processed;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (find(static_cast<uint8_t>(u)) == rv) return true;
    }
    return false;
  }

  void descend(Partition p) {
    refine(p);
    int target = -1, tend = -1;
    for (int pos = 0; pos < n;) {
      int end = pos + 1;
      while (end < n && !((p.cell_start >> end) & 1)) ++end;
      if (end - pos > 1) {
        target = pos;
        tend = end;
        break;
      }
      pos = end;
    }
    if (target < 0) {
      leaf(p);
      return;
    }
    uint32_t processed = 0;
    for (int i = target; i < tend; ++i) {
      uint8_t v = p.vertex_at[i];
      if (processed && in_processed_orbit(v, processed)) continue;
      processed |= 1u << v;
      Partition child = p;
      // individualize: v becomes a singleton cell at the front
      for (int j = i; j > target; --j) child.vertex_at[j] = child.vertex_at[j - 1];
      child.vertex_at[target] = v;
      child.cell_start |= 1u << (target + 1);
      base[base_len++] = v;
      descend(child);
      --base_len;
    }
  }

  void leaf(const Partition& p) {
    std::array<uint8_t, kMaxOrder> pos_of{};
    for (int i = 0; i < n; ++i) pos_of[p.vertex_at[i]] = static_cast<uint8_t>(i);
    std::array<AdjBits, kMaxOrder> rows{};
    for (int i = 0; i < n; ++i) {
      AdjBits nb = adj[p.vertex_at[i]];
      AdjBits row = 0;
      while (nb) {
        int u = std::countr_zero(static_cast<uint32_t>(nb));
        nb = static_cast<AdjBits>(nb & (nb - 1));
        row = static_cast<AdjBits>(row | bit(pos_of[u]));
      }
      rows[i] = row;
    }
    if (!have_best) {
      have_best = true;
      best_rows = rows;
      best_pos = pos_of;
      for (int i = 0; i < n; ++i) best_vertex_at[i] = p.vertex_at[i];
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n; ++i) {
      if (rows[i] != best_rows[i]) {
        cmp = rows[i] > best_rows[i] ? 1 : -1;
        break;
      }
    }
    if (cmp > 0) {
      best_rows = rows;
      best_pos = pos_of;
      for (int i = 0; i < n; ++i) best_vertex_at[i] = p.vertex_at[i];
    } else if (cmp == 0) {
      // equal leaf: best^-1 composed with this labeling is an automorphism
      std::array<uint8_t, kMaxOrder> gamma{};
      bool identity = true;
      for (int v = 0; v < n; ++v) {
        gamma[v] = best_vertex_at[pos_of[v]];
        if (gamma[v] != v) identity = false;
      }
      if (!identity && autos.size() < 64 &&
          std::find(autos.begin(), autos.end(), gamma) == autos.end())
        autos.push_back(gamma);
    }
  }
};

Graph rows_to_graph(int n, const std::array<AdjBits, kMaxOrder>& rows) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rows[i] >> j) & 1) g.add_edge(i, j);
  return g;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Canonicalizer c;
  c.run(g);
  CanonicalForm out;
  out.graph = rows_to_graph(g.order(), c.best_rows);
  out.to_canonical = c.best_pos;
  return out;
}

CanonicalCode pack_code(const Graph& canonical) {
  int n = canonical.order();
  CanonicalCode code;
  code.bytes.push_back(static_cast<char>(n));
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (canonical.has_edge(row, col) ? 1 : 0);
      if (++filled == 8) {
        code.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) code.bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return code;
}

CanonicalCode canonical_code(const Graph& g) { return pack_code(canonical_form(g).graph); }

Graph code_to_graph(const CanonicalCode& code) {
  if (code.bytes.empty()) throw std::invalid_argument("canonical code: empty");
  int n = static_cast<unsigned char>(code.bytes[0]);
  if (n > kMaxOrder) throw std::length_error("canonical code: order exceeds capacity");
  int bits = n * (n - 1) / 2;
  if (static_cast<int>(code.bytes.size()) != 1 + (bits + 7) / 8)
    throw std::invalid_argument("canonical code: wrong length");
  Graph g(n);
  int pos = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      int byte = 1 + pos / 8, sh = 7 - pos % 8;
      if ((static_cast<unsigned char>(code.bytes[byte]) >> sh) & 1) g.add_edge(row, col);
      ++pos;
    }
  return g;
}

bool GraphFilter::accepts(const Graph& g) const {
  int m = g.edge_count();
  if (m < min_edges) return false;
  if (max_edges >= 0 && m > max_edges) return false;
  if (max_degree >= 0)
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > max_degree) return false;
  switch (kind) {
    case FilterKind::all:
      return true;
    case FilterKind::connected:
      return is_connected(g);
    case FilterKind::trees:
      return m == g.order() - 1 && is_connected(g);
    case FilterKind::unicyclic:
      return m == g.order() && is_connected(g);
    case FilterKind::connected_non_bipartite:
      return is_connected(g) && !is_bipartite(g);
    case FilterKind::connected_bipartite:
      return is_connected(g) && is_bipartite(g);
  }
  return false;
}

std::string GraphFilter::describe() const {
  std::string name;
  switch (kind) {
    case FilterKind::all: name = "all"; break;
    case FilterKind::connected: name = "connected"; break;
    case FilterKind::trees: name = "trees"; break;
    case FilterKind::unicyclic: name = "unicyclic"; break;
    case FilterKind::connected_non_bipartite: name = "connected-non-bipartite"; break;
    case FilterKind::connected_bipartite: name = "connected-bipartite"; break;
  }
  if (min_edges > 0) name += ";min-edges=" + std::to_string(min_edges);
  if (max_edges >= 0) name += ";max-edges=" + std::to_string(max_edges);
  if (max_degree >= 0) name += ";max-degree=" + std::to_string(max_degree);
  return name;
}

GraphFilter filter_from_name(const std::string& name) {
  GraphFilter f;
  if (name == "all") f.kind = FilterKind::all;
  else if (name == "connected") f.kind = FilterKind::connected;
  else if (name == "trees") f.kind = FilterKind::trees;
  else if (name == "unicyclic") f.kind = FilterKind::unicyclic;
  else if (name == "connected-non-bipartite") f.kind = FilterKind::connected_non_bipartite;
  else if (name == "connected-bipartite") f.kind = FilterKind::connected_bipartite;
  else throw std::invalid_argument("unknown filter: " + name);
  return f;
}

namespace {

// ---------------------------------------------------------------------
// Canonical-deletion augmentation. A child of order k+1 is kept iff
// deleting its canonical last vertex reproduces the parent's isomorphism
// class; children of one parent are deduplicated by code. Each class is
// then produced exactly once globally.
// ---------------------------------------------------------------------

Graph delete_vertex(const Graph& g, int d) {
  Graph out(g.order() - 1);
  for (int u = 0; u < g.order(); ++u) {
    if (u == d) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (v == d || !g.has_edge(u, v)) continue;
      out.add_edge(u - (u > d ? 1 : 0), v - (v > d ? 1 : 0));
    }
  }
  return out;
}

struct Generator {
  int target = 0;
  const GraphFilter* filter = nullptr;
  int eff_max_edges = -1;
  const std::function<void(const Graph&, const CanonicalCode&)>* emit = nullptr;

  static int pairs(int k) { return k * (k - 1) / 2; }

  void extend(const Graph& parent, const std::string& parent_code) {
    int k = parent.order();
    if (k == target) {
      if (filter->accepts(parent)) (*emit)(parent, CanonicalCode{parent_code});
      return;
    }
    int pm = parent.edge_count();
    std::array<uint8_t, kMaxOrder> parent_degs{};
    for (int v = 0; v < k; ++v) parent_degs[v] = static_cast<uint8_t>(parent.degree(v));
    std::sort(parent_degs.begin(), parent_degs.begin() + k);

    std::set<std::string> seen;
    const int max_future_after_child = pairs(target) - pairs(k + 1);
    for (uint32_t s = 0; s < (1u << k); ++s) {
      int extra = std::popcount(s);
      if (eff_max_edges >= 0 && pm + extra > eff_max_edges) continue;
      if (pm + extra + max_future_after_child < filter->min_edges) continue;

      Graph h(k + 1);
      for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
          if (parent.has_edge(u, v)) h.add_edge(u, v);
      for (uint32_t rest = s; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        h.add_edge(u, k);
      }

      CanonicalForm cf = canonical_form(h);
      int d = -1;
      for (int v = 0; v <= k; ++v)
        if (cf.to_canonical[v] == k) {
          d = v;
          break;
        }
      bool ok;
      if (d == k) {
        ok = true;  // deleting the designated vertex reproduces the parent exactly
      } else if (h.degree(d) != extra) {
        ok = false;  // vertex degrees must match for h-d to be isomorphic to h-new
      } else {
        std::array<uint8_t, kMaxOrder> degs{};
        for (int v = 0, i = 0; v <= k; ++v) {
          if (v == d) continue;
          int dv = h.degree(v) - (h.has_edge(v, d) ? 1 : 0);
          degs[i++] = static_cast<uint8_t>(dv);
        }
        std::sort(degs.begin(), degs.begin() + k);
        if (!std::equal(degs.begin(), degs.begin() + k, parent_degs.begin())) {
          ok = false;
        } else {
          ok = canonical_code(delete_vertex(h, d)).bytes == parent_code;
        }
      }
      if (!ok) continue;

      std::string child_code = pack_code(cf.graph).bytes;
      if (!seen.insert(child_code).second) continue;
      extend(cf.graph, child_code);
    }
  }
};

}  // namespace

void enumerate(int n, const GraphFilter& filter, const WorkPartition& part,
               const std::function<void(const Graph&, const CanonicalCode&)>& emit) {
  if (part.shard_count < 1 || part.shard_index < 0 || part.shard_index >= part.shard_count)
    throw std::invalid_argument("enumerate: bad work partition");
  if (n < 0 || n > kMaxOrder) throw std::length_error("enumerate: order out of range");

  if (n <= 1) {
    if (part.shard_index == 0) {
      Graph g(n);
      if (filter.accepts(g)) emit(g, pack_code(g));
    }
    return;
  }

  Generator gen;
  gen.target = n;
  gen.filter = &filter;
  gen.emit = &emit;
  gen.eff_max_edges = filter.max_edges;
  if (filter.kind == FilterKind::trees)
    gen.eff_max_edges = gen.eff_max_edges < 0 ? n - 1 : std::min(gen.eff_max_edges, n - 1);
  else if (filter.kind == FilterKind::unicyclic)
    gen.eff_max_edges = gen.eff_max_edges < 0 ? n : std::min(gen.eff_max_edges, n);

  const Graph k1(1);
  const std::string k1_code = pack_code(k1).bytes;

  // Roots of the shard subtrees: the full enumeration at a fixed split
  // level, assigned round-robin. Every shard recomputes the (cheap) root
  // list identically, so shards need no coordination.
  const int split = std::min(n - 1, 7);
  std::vector<std::pair<Graph, std::string>> roots;
  if (split == 1) {
    roots.emplace_back(k1, k1_code);
  } else {
    GraphFilter all;  // intermediate levels are unfiltered
    Generator rootgen;
    rootgen.target = split;
    rootgen.filter = &all;
    rootgen.eff_max_edges = gen.eff_max_edges;  // edges only grow downward
    std::function<void(const Graph&, const CanonicalCode&)> collect =
        [&roots](const Graph& g, const CanonicalCode& c) { roots.emplace_back(g, c.bytes); };
    rootgen.emit = &collect;
    rootgen.extend(k1, k1_code);
  }

  for (size_t i = 0; i < roots.size(); ++i) {
    if (static_cast<int>(i % part.shard_count) != part.shard_index) continue;
    gen.extend(roots[i].first, roots[i].second);
  }
}

}  // namespace qspec
