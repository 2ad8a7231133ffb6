#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace qspec {

#ifndef QSPEC_MAX_ORDER
#define QSPEC_MAX_ORDER 16
#endif

/// Hard cap on graph order. Adjacency rows are single machine words so
/// enumeration runs allocation-free.
inline constexpr int kMaxOrder = QSPEC_MAX_ORDER;
static_assert(kMaxOrder >= 1 && kMaxOrder <= 32, "QSPEC_MAX_ORDER must be in [1,32]");

using AdjBits = std::conditional_t<(kMaxOrder <= 16), std::uint16_t, std::uint32_t>;

/// Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.
/// No self-loops; rows are kept symmetric by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  AdjBits neighbors(int v) const;
  AdjBits vertex_mask() const {
    if (n_ == 0) return 0;
    if (n_ == 8 * static_cast<int>(sizeof(AdjBits))) return static_cast<AdjBits>(~AdjBits(0));
    return static_cast<AdjBits>((static_cast<uint64_t>(1) << n_) - 1);
  }

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<AdjBits, kMaxOrder> adj_{};

  void check_pair(int u, int v) const;
};

enum class Family {
  empty,
  complete,
  path,
  cycle,
  star,
  friendship,
  complete_minus_perfect_matching,
};

/// Named constructions with fixed vertex numbering:
///   path p:        edges (i, i+1)
///   cycle p:       path plus (p-1, 0), p >= 3
///   star p:        center 0, leaves 1..p-1, p >= 1
///   friendship k:  center 0, triangle i on {0, 2i+1, 2i+2}, k >= 1, order 2k+1
///   complete_minus_perfect_matching p: K_p minus edges (2i, 2i+1), p even
Graph make_named(Family family, int param);

/// Disjoint union G + r isolated vertices + s independent edges; G keeps
/// labels 0..n-1, isolates come next, then the edge pairs.
Graph union_with_isolates_and_matching(const Graph& g, int r, int s);

Graph complement(const Graph& g);

/// Disjoint copies of g and h plus all edges between them; h is relabeled
/// to g.order()..g.order()+h.order()-1.
Graph join(const Graph& g, const Graph& h);

struct DegreeStats {
  std::vector<int> degrees;
  int max_degree = 0;
  long long sum = 0;
  long long sum_squares = 0;
  long long sum_cubes = 0;
};

DegreeStats degree_stats(const Graph& g);

enum class ComponentShape { tree, odd_unicyclic, even_unicyclic, bicyclic, other };

struct StructureClass {
  int component_count = 0;
  int bipartite_component_count = 0;
  bool is_bipartite = false;  // every component bipartite
  bool is_regular = false;
  int triangle_count = 0;
  std::vector<int> cyclomatic_numbers;          // per component, traversal order
  std::vector<ComponentShape> component_shapes; // same order
  bool has_induced_c4 = false;
};

StructureClass structure_class(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// graph6 interchange, n <= 62 single-byte header form only.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace qspec
