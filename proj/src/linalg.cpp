#include "qspec/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qspec {

char kind_letter(MatrixKind k) {
  switch (k) {
    case MatrixKind::A: return 'A';
    case MatrixKind::L: return 'L';
    case MatrixKind::Q: return 'Q';
  }
  throw std::invalid_argument("unknown matrix kind");
}

MatrixKind kind_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return MatrixKind::A;
    case 'L': case 'l': return MatrixKind::L;
    case 'Q': case 'q': return MatrixKind::Q;
  }
  throw std::invalid_argument("matrix kind must be one of A, L, Q");
}

IntMatrix build_matrix(const Graph& g, MatrixKind kind) {
  int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (kind != MatrixKind::A) m.at(i, i) = BigInt(g.degree(i));
    for (int j = 0; j < n; ++j) {
      if (i == j || !((g.neighbors(i) >> j) & 1)) continue;
      m.at(i, j) = BigInt(kind == MatrixKind::L ? -1 : 1);
    }
  }
  return m;
}

namespace {

struct OverflowSignal {};

// 128-bit signed integer with overflow-checked ring operations; the fast
// arithmetic path. Overflow escapes to the arbitrary-precision path.
struct Checked128 {
  __int128 v = 0;
  Checked128() = default;
  Checked128(long long x) : v(x) {}

  friend Checked128 operator+(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
    return r;
  }
  friend Checked128 operator-(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
    return r;
  }
  friend Checked128 operator*(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw OverflowSignal{};
    return r;
  }
  Checked128& operator+=(Checked128 o) { *this = *this + o; return *this; }
  bool operator==(const Checked128& o) const { return v == o.v; }
};

Checked128 div_exact(Checked128 a, Checked128 b) {
  Checked128 r;
  r.v = a.v / b.v;
  return r;
}
Checked128 div_exact_int(Checked128 a, long long k) {
  Checked128 r;
  r.v = a.v / k;
  return r;
}
BigInt div_exact(const BigInt& a, const BigInt& b) { return a.divexact(b); }
BigInt div_exact_int(const BigInt& a, long long k) { return a.divexact(BigInt(k)); }

// Faddeev-LeVerrier: exact integer coefficients of det(lambda*I - A);
// the division at step k is always exact.
template <typename T>
std::vector<T> faddeev_leverrier(const std::vector<T>& a, int n) {
  std::vector<T> c(static_cast<size_t>(n) + 1, T(0));
  c[n] = T(1);
  if (n == 0) return c;
  std::vector<T> m(static_cast<size_t>(n) * n, T(0));
  std::vector<T> am(static_cast<size_t>(n) * n, T(0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = T(1);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        T acc(0);
        for (int t = 0; t < n; ++t)
          acc += a[static_cast<size_t>(i) * n + t] * m[static_cast<size_t>(t) * n + j];
        am[static_cast<size_t>(i) * n + j] = acc;
      }
    T tr(0);
    for (int i = 0; i < n; ++i) tr += am[static_cast<size_t>(i) * n + i];
    c[n - k] = div_exact_int(T(0) - tr, k);
    if (k < n) {
      m = am;
      for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += c[n - k];
    }
  }
  return c;
}

// Bareiss fraction-free elimination; every division is exact.
template <typename T>
T bareiss_determinant(std::vector<T> a, int n) {
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<size_t>(k) * n + k] == T(0)) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!(a[static_cast<size_t>(i) * n + k] == T(0))) {
          pivot = i;
          break;
        }
      if (pivot < 0) return T(0);
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(pivot) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(k) * n + k] -
                a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j];
        a[static_cast<size_t>(i) * n + j] = div_exact(num, prev);
      }
      a[static_cast<size_t>(i) * n + k] = T(0);
    }
    prev = a[static_cast<size_t>(k) * n + k];
  }
  T det = a[static_cast<size_t>(n - 1) * n + (n - 1)];
  return sign < 0 ? T(0) - det : det;
}

// Small integer image of the graph matrix for the fast path.
std::vector<Checked128> graph_matrix_i128(const Graph& g, MatrixKind kind) {
  int n = g.order();
  std::vector<Checked128> m(static_cast<size_t>(n) * n, Checked128(0));
  for (int i = 0; i < n; ++i) {
    if (kind != MatrixKind::A) m[static_cast<size_t>(i) * n + i] = Checked128(g.degree(i));
    AdjBits nb = g.neighbors(i);
    for (int j = 0; j < n; ++j)
      if (i != j && ((nb >> j) & 1))
        m[static_cast<size_t>(i) * n + j] = Checked128(kind == MatrixKind::L ? -1 : 1);
  }
  return m;
}

std::vector<BigInt> graph_matrix_big(const Graph& g, MatrixKind kind) {
  IntMatrix m = build_matrix(g, kind);
  return std::move(m.entries);
}

CharPoly coeffs_to_charpoly(const std::vector<Checked128>& c) {
  CharPoly p;
  p.coeffs.reserve(c.size());
  for (const auto& x : c) p.coeffs.push_back(BigInt::from_i128(x.v));
  return p;
}

bool matrix_fits_i128(const IntMatrix& m) {
  // conservative: entries must fit in 64 bits so products stay inside the
  // checked range with headroom
  for (const auto& e : m.entries)
    if (!e.fits_i64()) return false;
  return true;
}

}  // namespace

std::string CharPoly::key() const {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out.push_back(',');
    out += coeffs[i].str();
  }
  return out;
}

std::string CharPoly::display() const {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].str();
  }
  return out;
}

CharPoly char_poly(const IntMatrix& m) {
  int n = m.order;
  if (matrix_fits_i128(m)) {
    std::vector<Checked128> a(m.entries.size());
    for (size_t i = 0; i < m.entries.size(); ++i) a[i] = Checked128(m.entries[i].to_i64());
    try {
      return coeffs_to_charpoly(faddeev_leverrier(a, n));
    } catch (const OverflowSignal&) {
      // fall through to the arbitrary-precision path
    }
  }
  CharPoly p;
  p.coeffs = faddeev_leverrier(m.entries, n);
  return p;
}

CharPoly char_poly(const Graph& g, MatrixKind kind) {
  try {
    return coeffs_to_charpoly(faddeev_leverrier(graph_matrix_i128(g, kind), g.order()));
  } catch (const OverflowSignal&) {
    CharPoly p;
    p.coeffs = faddeev_leverrier(graph_matrix_big(g, kind), g.order());
    return p;
  }
}

BigInt determinant(const IntMatrix& m) {
  if (matrix_fits_i128(m)) {
    std::vector<Checked128> a(m.entries.size());
    for (size_t i = 0; i < m.entries.size(); ++i) a[i] = Checked128(m.entries[i].to_i64());
    try {
      return BigInt::from_i128(bareiss_determinant(std::move(a), m.order).v);
    } catch (const OverflowSignal&) {
    }
  }
  return bareiss_determinant(m.entries, m.order);
}

std::vector<BigInt> spectral_moments(const Graph& g, MatrixKind kind, int k_max) {
  if (k_max < 0) throw std::invalid_argument("spectral_moments: k_max must be >= 0");
  int n = g.order();
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(k_max) + 1);
  out.emplace_back(n);  // trace of the identity
  if (k_max == 0) return out;
  try {
    auto a = graph_matrix_i128(g, kind);
    auto p = a;
    for (int k = 1; k <= k_max; ++k) {
      if (k > 1) {
        std::vector<Checked128> next(static_cast<size_t>(n) * n, Checked128(0));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Checked128 acc(0);
            for (int t = 0; t < n; ++t)
              acc += p[static_cast<size_t>(i) * n + t] * a[static_cast<size_t>(t) * n + j];
            next[static_cast<size_t>(i) * n + j] = acc;
          }
        p = std::move(next);
      }
      Checked128 tr(0);
      for (int i = 0; i < n; ++i) tr += p[static_cast<size_t>(i) * n + i];
      out.push_back(BigInt::from_i128(tr.v));
    }
    return out;
  } catch (const OverflowSignal&) {
    out.resize(1);
  }
  auto a = graph_matrix_big(g, kind);
  auto p = a;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      std::vector<BigInt> next(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          BigInt acc;
          for (int t = 0; t < n; ++t)
            acc += p[static_cast<size_t>(i) * n + t] * a[static_cast<size_t>(t) * n + j];
          next[static_cast<size_t>(i) * n + j] = std::move(acc);
        }
      p = std::move(next);
    }
    BigInt tr;
    for (int i = 0; i < n; ++i) tr += p[static_cast<size_t>(i) * n + i];
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<BigInt> moments_from_charpoly(const CharPoly& p, int k_max) {
  if (k_max < 0) throw std::invalid_argument("moments_from_charpoly: k_max must be >= 0");
  int n = p.degree();
  std::vector<BigInt> ps;
  ps.reserve(static_cast<size_t>(k_max) + 1);
  ps.emplace_back(n);
  // p_k + c_{n-1} p_{k-1} + ... + c_{n-k+1} p_1 + k c_{n-k} = 0  (k <= n)
  // p_k + c_{n-1} p_{k-1} + ... + c_0 p_{k-n} = 0                (k > n)
  for (int k = 1; k <= k_max; ++k) {
    BigInt acc;
    for (int j = 1; j < k && j <= n; ++j) acc += p.coeffs[n - j] * ps[k - j];
    if (k <= n) acc += BigInt(k) * p.coeffs[n - k];
    ps.push_back(-acc);
  }
  return ps;
}

int zero_multiplicity(const CharPoly& p) {
  int z = 0;
  while (z < p.degree() && p.coeffs[z].is_zero()) ++z;
  return z;
}

BigInt pseudo_det(const CharPoly& p) {
  int z = zero_multiplicity(p);
  if (z == p.degree()) return BigInt(1);  // all roots zero (or degree 0)
  BigInt a = p.coeffs[z];
  return (p.degree() - z) % 2 == 0 ? a : -a;
}

BigInt spanning_tree_count(const Graph& g) {
  int n = g.order();
  if (n <= 1) return BigInt(1);
  IntMatrix lap = build_matrix(g, MatrixKind::L);
  IntMatrix minor(n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor.at(i - 1, j - 1) = lap.at(i, j);
  return determinant(minor);
}

namespace {

// sign of sum c_i num^i den^(d-i), i.e. of p(num/den) for den > 0
int homogeneous_sign(const std::vector<BigInt>& coeffs, const BigInt& num, const BigInt& den) {
  int d = static_cast<int>(coeffs.size()) - 1;
  BigInt acc;
  // Horner in num with a running power of den
  // acc = c_d; acc = acc*num + c_{d-1}*den; acc = acc*num + c_{d-2}*den^2; ...
  BigInt den_pow(1);
  acc = coeffs[d];
  for (int i = d - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + coeffs[i] * den_pow;
  }
  return acc.sign();
}

std::vector<std::vector<BigInt>> derivative_chain(const CharPoly& p) {
  std::vector<std::vector<BigInt>> chain;
  chain.push_back(p.coeffs);
  while (chain.back().size() > 1) {
    const auto& cur = chain.back();
    std::vector<BigInt> der(cur.size() - 1);
    for (size_t i = 1; i < cur.size(); ++i) der[i - 1] = BigInt(static_cast<long long>(i)) * cur[i];
    chain.push_back(std::move(der));
  }
  return chain;
}

bool chain_all_nonneg(const std::vector<std::vector<BigInt>>& chain, const BigInt& num,
                      const BigInt& den) {
  for (const auto& cf : chain)
    if (homogeneous_sign(cf, num, den) < 0) return false;
  return true;
}

BigInt cauchy_bound(const CharPoly& p) {
  BigInt b(0);
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = p.coeffs[i].is_negative() ? -p.coeffs[i] : p.coeffs[i];
    if (a > b) b = a;
  }
  return b + BigInt(1);
}

}  // namespace

int sign_at(const CharPoly& p, const BigInt& num, const BigInt& den) {
  if (den.sign() <= 0) throw std::invalid_argument("sign_at: denominator must be positive");
  return homogeneous_sign(p.coeffs, num, den);
}

bool is_root_at(const CharPoly& p, const BigInt& num, const BigInt& den) {
  return sign_at(p, num, den) == 0;
}

bool bounds_all_roots(const CharPoly& p, const BigInt& num, const BigInt& den) {
  if (den.sign() <= 0) throw std::invalid_argument("bounds_all_roots: denominator must be positive");
  return chain_all_nonneg(derivative_chain(p), num, den);
}

double largest_root(const CharPoly& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("largest_root: polynomial has no roots");
  if (tol <= 0) throw std::invalid_argument("largest_root: tolerance must be positive");
  auto chain = derivative_chain(p);
  BigInt bound = cauchy_bound(p);
  BigInt lo = -bound, hi = bound, den(1);
  const BigInt two(2);
  double width = 2.0 * std::stod(bound.str());
  while (width > tol) {
    BigInt mid = lo + hi;  // denominator doubles
    lo = lo * two;
    hi = hi * two;
    den = den * two;
    if (chain_all_nonneg(chain, mid, den))
      hi = mid;
    else
      lo = mid;
    width /= 2.0;
  }
  return (std::stod(lo.str()) + std::stod(hi.str())) / (2.0 * std::stod(den.str()));
}

bool largest_root_greater(const CharPoly& p, const CharPoly& q) {
  if (p.degree() < 1 || q.degree() < 1)
    throw std::invalid_argument("largest_root_greater: polynomials must have roots");
  auto pc = derivative_chain(p);
  auto qc = derivative_chain(q);
  BigInt bp = cauchy_bound(p), bq = cauchy_bound(q);
  BigInt bound = bp > bq ? bp : bq;
  BigInt lo = -bound, hi = bound, den(1);
  const BigInt two(2);
  for (int iter = 0; iter < 256; ++iter) {
    BigInt mid = lo + hi;
    lo = lo * two;
    hi = hi * two;
    den = den * two;
    bool ub_p = chain_all_nonneg(pc, mid, den);
    bool ub_q = chain_all_nonneg(qc, mid, den);
    if (ub_q && !ub_p) return true;   // maxroot(q) <= mid < maxroot(p)
    if (ub_p && !ub_q) return false;  // maxroot(p) <= mid < maxroot(q)
    if (ub_p)
      hi = mid;
    else
      lo = mid;
  }
  throw std::runtime_error("largest_root_greater: roots not separable at depth 256");
}

}  // namespace qspec
