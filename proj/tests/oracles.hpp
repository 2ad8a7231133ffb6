#pragma once

// Independent reference implementations used only as test oracles. They
// deliberately avoid the library's fast paths: characteristic polynomials
// and determinants come from permutation expansion, isomorphism from raw
// permutation search, spanning trees from edge-subset enumeration.

#include <cstdint>
#include <vector>

#include "qspec/bigint.hpp"
#include "qspec/graph.hpp"
#include "qspec/linalg.hpp"

namespace oracle {

std::vector<long long> graph_matrix(const qspec::Graph& g, qspec::MatrixKind kind);

// coefficients of det(lambda*I - M), constant term first; n <= 8
std::vector<qspec::BigInt> char_poly_perm(const std::vector<long long>& m, int n);

qspec::BigInt det_perm(const std::vector<long long>& m, int n);

long long spanning_trees_brute(const qspec::Graph& g);

bool isomorphic_brute(const qspec::Graph& a, const qspec::Graph& b);

// one representative per isomorphism class among all labeled graphs of
// order n, by pairwise permutation search; n <= 6
std::vector<qspec::Graph> classes_brute(int n);

uint64_t lcg_next(uint64_t& state);
qspec::Graph random_graph(int n, uint64_t& state);
qspec::Graph random_permutation_of(const qspec::Graph& g, uint64_t& state);

}  // namespace oracle
