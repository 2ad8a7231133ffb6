#include "qspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qspec {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) throw std::length_error("Graph: order out of range");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loop");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(static_cast<uint32_t>(adj_[v]));
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_pair(u, v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] = static_cast<AdjBits>(adj_[u] | (AdjBits(1) << v));
  adj_[v] = static_cast<AdjBits>(adj_[v] | (AdjBits(1) << u));
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] = static_cast<AdjBits>(adj_[u] & ~(AdjBits(1) << v));
  adj_[v] = static_cast<AdjBits>(adj_[v] & ~(AdjBits(1) << u));
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return std::popcount(static_cast<uint32_t>(adj_[v]));
}

AdjBits Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return adj_[v];
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

Graph make_named(Family family, int param) {
  switch (family) {
    case Family::empty: {
      if (param < 0) throw std::invalid_argument("empty: order must be >= 0");
      return Graph(param);
    }
    case Family::complete: {
      if (param < 0) throw std::invalid_argument("complete: order must be >= 0");
      Graph g(param);
      for (int u = 0; u < param; ++u)
        for (int v = u + 1; v < param; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::path: {
      if (param < 0) throw std::invalid_argument("path: order must be >= 0");
      Graph g(param);
      for (int v = 1; v < param; ++v) g.add_edge(v - 1, v);
      return g;
    }
    case Family::cycle: {
      if (param < 3) throw std::invalid_argument("cycle: order must be >= 3");
      Graph g(param);
      for (int v = 1; v < param; ++v) g.add_edge(v - 1, v);
      g.add_edge(param - 1, 0);
      return g;
    }
    case Family::star: {
      if (param < 1) throw std::invalid_argument("star: order must be >= 1");
      Graph g(param);
      for (int v = 1; v < param; ++v) g.add_edge(0, v);
      return g;
    }
    case Family::friendship: {
      if (param < 1) throw std::invalid_argument("friendship: parameter must be >= 1");
      Graph g(2 * param + 1);
      for (int i = 0; i < param; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
      }
      return g;
    }
    case Family::complete_minus_perfect_matching: {
      if (param < 2 || param % 2 != 0)
        throw std::invalid_argument("complete_minus_perfect_matching: order must be even and >= 2");
      Graph g = make_named(Family::complete, param);
      for (int i = 0; i + 1 < param; i += 2) g.remove_edge(i, i + 1);
      return g;
    }
  }
  throw std::invalid_argument("make_named: unknown family");
}

Graph union_with_isolates_and_matching(const Graph& g, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("union: r, s must be >= 0");
  int n = g.order() + r + 2 * s;
  if (n > kMaxOrder) throw std::length_error("union: order exceeds capacity");
  Graph out(n);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  int base = g.order() + r;
  for (int i = 0; i < s; ++i) out.add_edge(base + 2 * i, base + 2 * i + 1);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > kMaxOrder) throw std::length_error("join: order exceeds capacity");
  Graph out(n);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  int off = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.has_edge(u, v)) out.add_edge(off + u, off + v);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, off + v);
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  st.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    long long d = g.degree(v);
    st.degrees.push_back(static_cast<int>(d));
    st.max_degree = std::max(st.max_degree, static_cast<int>(d));
    st.sum += d;
    st.sum_squares += d * d;
    st.sum_cubes += d * d * d;
  }
  return st;
}

namespace {

// Component masks in discovery order (lowest unvisited vertex first).
std::vector<AdjBits> component_masks(const Graph& g) {
  std::vector<AdjBits> comps;
  AdjBits seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((seen >> v) & 1) continue;
    AdjBits comp = static_cast<AdjBits>(AdjBits(1) << v);
    AdjBits frontier = comp;
    while (frontier) {
      AdjBits next = 0;
      for (int u = 0; u < g.order(); ++u)
        if ((frontier >> u) & 1) next = static_cast<AdjBits>(next | g.neighbors(u));
      frontier = static_cast<AdjBits>(next & ~comp);
      comp = static_cast<AdjBits>(comp | next);
    }
    seen = static_cast<AdjBits>(seen | comp);
    comps.push_back(comp);
  }
  return comps;
}

// 2-colorability of the component spanned by `mask`.
bool component_bipartite(const Graph& g, AdjBits mask) {
  std::array<int, kMaxOrder> color{};
  color.fill(-1);
  for (int s = 0; s < g.order(); ++s) {
    if (!((mask >> s) & 1) || color[s] != -1) continue;
    color[s] = 0;
    std::array<int, kMaxOrder> stack;
    int top = 0;
    stack[top++] = s;
    while (top) {
      int u = stack[--top];
      AdjBits nb = g.neighbors(u);
      for (int v = 0; v < g.order(); ++v) {
        if (!((nb >> v) & 1)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack[top++] = v;
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return component_masks(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
  return component_bipartite(g, g.vertex_mask());
}

StructureClass structure_class(const Graph& g) {
  StructureClass sc;
  auto comps = component_masks(g);
  sc.component_count = static_cast<int>(comps.size());
  sc.is_bipartite = true;

  for (AdjBits mask : comps) {
    int nc = std::popcount(static_cast<uint32_t>(mask));
    int mc = 0;
    for (int v = 0; v < g.order(); ++v)
      if ((mask >> v) & 1)
        mc += std::popcount(static_cast<uint32_t>(g.neighbors(v)));
    mc /= 2;
    int cyclomatic = mc - nc + 1;
    sc.cyclomatic_numbers.push_back(cyclomatic);
    bool bip = component_bipartite(g, mask);
    if (bip)
      ++sc.bipartite_component_count;
    else
      sc.is_bipartite = false;
    ComponentShape shape;
    if (cyclomatic == 0)
      shape = ComponentShape::tree;
    else if (cyclomatic == 1)
      shape = bip ? ComponentShape::even_unicyclic : ComponentShape::odd_unicyclic;
    else if (cyclomatic == 2)
      shape = ComponentShape::bicyclic;
    else
      shape = ComponentShape::other;
    sc.component_shapes.push_back(shape);
  }

  sc.is_regular = true;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0)) {
      sc.is_regular = false;
      break;
    }

  // Each triangle is counted once per edge.
  int tri3 = 0;
  for (int u = 0; u < g.order(); ++u) {
    AdjBits nu = g.neighbors(u);
    for (int v = u + 1; v < g.order(); ++v)
      if ((nu >> v) & 1)
        tri3 += std::popcount(static_cast<uint32_t>(nu & g.neighbors(v)));
  }
  sc.triangle_count = tri3 / 3;

  // Induced C4: a 4-subset whose induced degrees are all exactly 2 spans a
  // 4-cycle; n <= kMaxOrder keeps the subset scan cheap.
  int n = g.order();
  for (int a = 0; a < n && !sc.has_induced_c4; ++a)
    for (int b = a + 1; b < n && !sc.has_induced_c4; ++b)
      for (int c = b + 1; c < n && !sc.has_induced_c4; ++c)
        for (int d = c + 1; d < n && !sc.has_induced_c4; ++d) {
          AdjBits sub = static_cast<AdjBits>((AdjBits(1) << a) | (AdjBits(1) << b) |
                                             (AdjBits(1) << c) | (AdjBits(1) << d));
          bool all2 = true;
          for (int v : {a, b, c, d})
            if (std::popcount(static_cast<uint32_t>(g.neighbors(v) & sub)) != 2) {
              all2 = false;
              break;
            }
          if (all2) sc.has_induced_c4 = true;
        }

  return sc;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == ':' || header == ';' || header == '&')
    throw std::invalid_argument("graph6: unsupported variant header");
  if (header == 126)
    throw std::invalid_argument("graph6: multi-byte order not supported");
  if (header < 63 || header > 126) throw std::invalid_argument("graph6: bad header byte");
  int n = header - 63;
  if (n > kMaxOrder) throw std::length_error("graph6: order exceeds capacity");
  int bits = n * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body) throw std::invalid_argument("graph6: wrong length");
  Graph g(n);
  int pos = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad body byte");
    int val = c - 63;
    for (int bit = 5; bit >= 0; --bit) {
      bool set = (val >> bit) & 1;
      if (pos >= bits) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        int k = pos, col = 1;
        while (k >= col) k -= col++;
        g.add_edge(k, col);
      }
      ++pos;
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = n * (n - 1) / 2;
  int val = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      val = (val << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(val + 63));
        val = 0;
        filled = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    val <<= 6 - bits % 6;
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

}  // namespace qspec
