#pragma once

#include <string>
#include <vector>

#include "qspec/bigint.hpp"
#include "qspec/graph.hpp"

namespace qspec {

enum class MatrixKind { A, L, Q };

char kind_letter(MatrixKind k);
MatrixKind kind_from_letter(char c);

/// Dense square matrix with exact integer entries, row-major.
struct IntMatrix {
  int order = 0;
  std::vector<BigInt> entries;

  IntMatrix() = default;
  explicit IntMatrix(int n) : order(n), entries(static_cast<size_t>(n) * n) {}
  BigInt& at(int i, int j) { return entries[static_cast<size_t>(i) * order + j]; }
  const BigInt& at(int i, int j) const { return entries[static_cast<size_t>(i) * order + j]; }
};

IntMatrix build_matrix(const Graph& g, MatrixKind kind);

/// Monic characteristic polynomial det(lambda*I - M) with exact integer
/// coefficients; coeffs[k] multiplies lambda^k, coeffs.back() == 1.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }

  /// Census/report serialization: decimal coefficients, constant term
  /// first, joined by commas.
  std::string key() const;
  /// Human-readable variant with ", " separators.
  std::string display() const;
};

CharPoly char_poly(const IntMatrix& m);
CharPoly char_poly(const Graph& g, MatrixKind kind);

BigInt determinant(const IntMatrix& m);

/// T_0..T_kmax with T_k = trace(M^k), exact.
std::vector<BigInt> spectral_moments(const Graph& g, MatrixKind kind, int k_max);

/// Power sums of the roots recovered from the coefficients alone
/// (Newton's identities).
std::vector<BigInt> moments_from_charpoly(const CharPoly& p, int k_max);

/// Multiplicity of the eigenvalue 0 = number of trailing zero coefficients.
int zero_multiplicity(const CharPoly& p);

/// Product of all nonzero roots; 1 when every root is zero.
BigInt pseudo_det(const CharPoly& p);

/// Matrix-tree count: first cofactor of the Laplacian. 0 for disconnected
/// graphs, 1 for K1.
BigInt spanning_tree_count(const Graph& g);

/// Sign of p(num/den), den > 0, decided in exact integer arithmetic.
int sign_at(const CharPoly& p, const BigInt& num, const BigInt& den);

bool is_root_at(const CharPoly& p, const BigInt& num, const BigInt& den);

/// Whether num/den >= every real root of p. Exact; valid for polynomials
/// whose roots are all real (characteristic polynomials of symmetric
/// matrices): x bounds the roots iff p and all its derivatives are
/// nonnegative at x.
bool bounds_all_roots(const CharPoly& p, const BigInt& num, const BigInt& den);

/// Largest real root within +-tol by bisection on exact sign tests.
double largest_root(const CharPoly& p, double tol);

/// Exact strict comparison of largest roots: maxroot(p) > maxroot(q).
/// Both polynomials must be real-rooted. Throws if the two largest roots
/// cannot be separated within the bisection depth limit (they are equal
/// or closer than 2^-256 of the root bound).
bool largest_root_greater(const CharPoly& p, const CharPoly& q);

}  // namespace qspec
