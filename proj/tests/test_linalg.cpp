#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "qspec/enumerate.hpp"
#include "qspec/linalg.hpp"

using namespace qspec;

namespace {

CharPoly poly_from_strings(std::initializer_list<const char*> coeffs) {
  CharPoly p;
  for (const char* c : coeffs) p.coeffs.push_back(BigInt::from_string(c));
  return p;
}

}  // namespace

TEST_CASE("build_matrix") {
  Graph k2 = make_named(Family::complete, 2);
  IntMatrix q = build_matrix(k2, MatrixKind::Q);
  CHECK(q.at(0, 0) == BigInt(1));
  CHECK(q.at(0, 1) == BigInt(1));
  CHECK(q.at(1, 0) == BigInt(1));
  CHECK(q.at(1, 1) == BigInt(1));

  IntMatrix l = build_matrix(k2, MatrixKind::L);
  CHECK(l.at(0, 0) == BigInt(1));
  CHECK(l.at(0, 1) == BigInt(-1));

  IntMatrix q3 = build_matrix(make_named(Family::complete, 3), MatrixKind::Q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(q3.at(i, j) == BigInt(i == j ? 2 : 1));
}

TEST_CASE("char_poly matches the permutation-expansion oracle") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::classes_brute(n)) {
      for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q}) {
        CharPoly fast = char_poly(g, kind);
        auto expect = oracle::char_poly_perm(oracle::graph_matrix(g, kind), n);
        REQUIRE(fast.coeffs == expect);
        CharPoly via_matrix = char_poly(build_matrix(g, kind));
        CHECK(via_matrix.coeffs == expect);
      }
    }
  }
}

TEST_CASE("char_poly frozen examples") {
  CHECK(char_poly(make_named(Family::complete, 3), MatrixKind::Q).coeffs ==
        poly_from_strings({"-4", "9", "-6", "1"}).coeffs);
  CHECK(char_poly(make_named(Family::path, 4), MatrixKind::L).coeffs ==
        poly_from_strings({"0", "-4", "10", "-6", "1"}).coeffs);
  CHECK(char_poly(make_named(Family::empty, 3), MatrixKind::A).coeffs ==
        poly_from_strings({"0", "0", "0", "1"}).coeffs);
  CHECK(char_poly(make_named(Family::complete, 3), MatrixKind::Q).key() == "-4,9,-6,1");
  CHECK(char_poly(make_named(Family::complete, 3), MatrixKind::Q).display() == "-4, 9, -6, 1");
}

TEST_CASE("char_poly at zero equals signed determinant, exhaustively to order 8") {
  GraphFilter all;
  WorkPartition whole;
  long long checked = 0;
  for (int n = 1; n <= 8; ++n)
    enumerate(n, all, whole, [&checked, n](const Graph& g, const CanonicalCode&) {
      for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q}) {
        CharPoly p = char_poly(g, kind);
        BigInt det = determinant(build_matrix(g, kind));
        BigInt expect = n % 2 == 0 ? p.coeffs[0] : -p.coeffs[0];
        if (!(det == expect)) {
          REQUIRE(det == expect);
        }
        ++checked;
      }
    });
  CHECK(checked == 3 * 13598);
}

TEST_CASE("bipartite graphs have identical L and Q polynomials to order 8") {
  GraphFilter all;
  WorkPartition whole;
  long long checked = 0;
  for (int n = 1; n <= 8; ++n)
    enumerate(n, all, whole, [&checked](const Graph& g, const CanonicalCode&) {
      if (!is_bipartite(g)) return;
      ++checked;
      if (!(char_poly(g, MatrixKind::L) == char_poly(g, MatrixKind::Q))) {
        REQUIRE(char_poly(g, MatrixKind::L).key() == char_poly(g, MatrixKind::Q).key());
      }
    });
  CHECK(checked == 452);  // bipartite graphs on 1..8 vertices
}

TEST_CASE("zero multiplicities count components spectrally, exhaustively to order 7") {
  GraphFilter all;
  WorkPartition whole;
  for (int n = 1; n <= 7; ++n)
    enumerate(n, all, whole, [](const Graph& g, const CanonicalCode&) {
      StructureClass sc = structure_class(g);
      REQUIRE(zero_multiplicity(char_poly(g, MatrixKind::L)) == sc.component_count);
      REQUIRE(zero_multiplicity(char_poly(g, MatrixKind::Q)) == sc.bipartite_component_count);
    });
}

TEST_CASE("determinant") {
  CHECK(determinant(build_matrix(make_named(Family::complete, 3), MatrixKind::Q)) == BigInt(4));
  CHECK(determinant(build_matrix(make_named(Family::cycle, 4), MatrixKind::Q)) == BigInt(0));
  uint64_t rng = 17;
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(1 + static_cast<int>(oracle::lcg_next(rng) % 6), rng);
    CHECK(determinant(build_matrix(g, MatrixKind::L)) == BigInt(0));
  }
  // random small integer matrices vs permutation expansion
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(oracle::lcg_next(rng) % 5);
    IntMatrix m(n);
    std::vector<long long> raw(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long v = static_cast<long long>(oracle::lcg_next(rng) % 19) - 9;
        if (t % 5 == 0 && i == 0) v = 0;  // exercise pivoting and singularity
        m.at(i, j) = BigInt(v);
        raw[static_cast<size_t>(i) * n + j] = v;
      }
    CHECK(determinant(m) == oracle::det_perm(raw, n));
  }
}

TEST_CASE("arbitrary-precision fallback beyond 128 bits") {
  // diag(2^100, 2^100): charpoly (x - 2^100)^2, determinant 2^200
  BigInt big = BigInt::from_string("1267650600228229401496703205376");
  IntMatrix m(2);
  m.at(0, 0) = big;
  m.at(1, 1) = big;
  CharPoly p = char_poly(m);
  CHECK(p.coeffs[2] == BigInt(1));
  CHECK(p.coeffs[1] == -(big + big));
  CHECK(p.coeffs[0] == big * big);
  CHECK(determinant(m) == big * big);
}

TEST_CASE("spectral moments") {
  auto t = spectral_moments(make_named(Family::complete, 3), MatrixKind::Q, 3);
  CHECK(t == std::vector<BigInt>{BigInt(3), BigInt(6), BigInt(18), BigInt(66)});
  CHECK(spectral_moments(make_named(Family::empty, 4), MatrixKind::Q, 2) ==
        std::vector<BigInt>{BigInt(4), BigInt(0), BigInt(0)});
  CHECK(spectral_moments(make_named(Family::complete, 2), MatrixKind::Q, 2) ==
        std::vector<BigInt>{BigInt(2), BigInt(2), BigInt(4)});
}

TEST_CASE("Newton identities recover the power traces, exhaustively to order 7") {
  GraphFilter all;
  WorkPartition whole;
  for (int n = 1; n <= 7; ++n)
    enumerate(n, all, whole, [](const Graph& g, const CanonicalCode&) {
      for (MatrixKind kind : {MatrixKind::A, MatrixKind::L, MatrixKind::Q}) {
        CharPoly p = char_poly(g, kind);
        REQUIRE(moments_from_charpoly(p, 4) == spectral_moments(g, kind, 4));
      }
    });
}

TEST_CASE("zero multiplicity and pseudo determinant") {
  CharPoly lp4 = char_poly(make_named(Family::path, 4), MatrixKind::L);
  CHECK(zero_multiplicity(lp4) == 1);
  CHECK(pseudo_det(lp4) == BigInt(4));

  CharPoly qc4 = char_poly(make_named(Family::cycle, 4), MatrixKind::Q);
  CHECK(zero_multiplicity(qc4) == 1);

  CharPoly qk3 = char_poly(make_named(Family::complete, 3), MatrixKind::Q);
  CHECK(zero_multiplicity(qk3) == 0);

  CharPoly lc4 = char_poly(make_named(Family::cycle, 4), MatrixKind::L);
  CHECK(pseudo_det(lc4) == BigInt(16));

  CharPoly ae5 = char_poly(make_named(Family::empty, 5), MatrixKind::A);
  CHECK(pseudo_det(ae5) == BigInt(1));
}

TEST_CASE("spanning tree count") {
  CHECK(spanning_tree_count(make_named(Family::cycle, 4)) == BigInt(4));
  CHECK(spanning_tree_count(make_named(Family::complete, 4)) == BigInt(16));
  CHECK(spanning_tree_count(union_with_isolates_and_matching(make_named(Family::path, 3), 1, 0)) ==
        BigInt(0));
  CHECK(spanning_tree_count(make_named(Family::empty, 1)) == BigInt(1));
  // Cayley at the capacity boundary: 16^14
  CHECK(spanning_tree_count(make_named(Family::complete, 16)) ==
        BigInt::from_string("72057594037927936"));

  uint64_t rng = 31;
  for (int t = 0; t < 25; ++t) {
    Graph g = oracle::random_graph(1 + static_cast<int>(oracle::lcg_next(rng) % 6), rng);
    CHECK(spanning_tree_count(g) == BigInt(oracle::spanning_trees_brute(g)));
  }
}

TEST_CASE("largest root") {
  CHECK(largest_root(char_poly(make_named(Family::complete, 3), MatrixKind::Q), 1e-9) ==
        doctest::Approx(4.0).epsilon(1e-8));
  CHECK(largest_root(char_poly(make_named(Family::complete, 2), MatrixKind::Q), 1e-9) ==
        doctest::Approx(2.0).epsilon(1e-8));
  // Q(P3) is bipartite so its Q-spectrum is the L-spectrum {0, 1, 3}
  CHECK(largest_root(char_poly(make_named(Family::path, 3), MatrixKind::Q), 1e-9) ==
        doctest::Approx(3.0).epsilon(1e-8));
  // 2 + sqrt(2) is the top of the P4 Laplacian spectrum
  CHECK(largest_root(char_poly(make_named(Family::path, 4), MatrixKind::L), 1e-9) ==
        doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-8));
  CHECK(largest_root(char_poly(make_named(Family::empty, 3), MatrixKind::A), 1e-9) ==
        doctest::Approx(0.0).epsilon(1e-8));
  // repeated largest root (disconnected union of two triangles)
  Graph two_k3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(largest_root(char_poly(two_k3, MatrixKind::Q), 1e-9) == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("exact rational point predicates") {
  CharPoly qc4 = char_poly(make_named(Family::cycle, 4), MatrixKind::Q);
  CHECK(is_root_at(qc4, BigInt(4), BigInt(1)));
  CHECK(bounds_all_roots(qc4, BigInt(4), BigInt(1)));
  CHECK(!bounds_all_roots(qc4, BigInt(7), BigInt(2)));  // 3.5 < 4
  CharPoly qp4 = char_poly(make_named(Family::path, 4), MatrixKind::Q);
  CHECK(!is_root_at(qp4, BigInt(3), BigInt(1)));
  CHECK(sign_at(qc4, BigInt(5), BigInt(1)) > 0);
  CHECK_THROWS_AS(sign_at(qc4, BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("largest root brackets the true root within tolerance") {
  uint64_t rng = 404;
  const double tol = 1e-9;
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(oracle::lcg_next(rng) % 8);
    Graph g = oracle::random_graph(n, rng);
    for (MatrixKind kind : {MatrixKind::A, MatrixKind::Q}) {
      CharPoly p = char_poly(g, kind);
      double r = largest_root(p, tol);
      // scale to an exact dyadic rational and test both sides of the bracket
      const long long den = 1ll << 40;
      auto at = [&](double x) {
        return BigInt(static_cast<long long>(x * static_cast<double>(den)));
      };
      CHECK(bounds_all_roots(p, at(r + 2 * tol), BigInt(den)));
      CHECK(!bounds_all_roots(p, at(r - 2 * tol), BigInt(den)));
    }
  }
}

TEST_CASE("exact largest-root comparison") {
  CharPoly k3 = char_poly(make_named(Family::complete, 3), MatrixKind::Q);
  CharPoly p3 = char_poly(make_named(Family::path, 3), MatrixKind::Q);
  CHECK(largest_root_greater(k3, p3));
  CHECK(!largest_root_greater(p3, k3));
  CHECK_THROWS_AS(largest_root_greater(k3, k3), std::runtime_error);
}
