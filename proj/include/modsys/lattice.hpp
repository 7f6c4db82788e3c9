#pragma once

// Exact kernel lattice of x -> A*x mod m, LLL reduction, and reduction of
// particular solutions into the fundamental parallelepiped.

#include <limits>

#include "modsys/system_model.hpp"

namespace modsys {

/// Rows of `basis` span { x in Z^k : A*x == 0 mod m }; |det(basis)| == det_abs.
struct KernelLattice {
  Mat basis;
  Int det_abs;
  bool reduced = false;
};

struct HnfResult {
  Mat h;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Row-style Hermite normal form via unimodular row operations: pivots
/// positive, entries below a pivot zero, entries above reduced into [0, pivot).
/// Only the first `reduce_cols` columns are eliminated; remaining columns ride
/// along, which lets callers carry a transform block.
inline HnfResult hnf_rows(Mat w, std::size_t reduce_cols = std::numeric_limits<std::size_t>::max()) {
  const std::size_t rows = row_count(w);
  const std::size_t cols = col_count(w);
  const std::size_t rcols = reduce_cols < cols ? reduce_cols : cols;
  HnfResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < rcols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (w[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(w[r], w[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (w[i][c] == 0) continue;
      EgcdResult e = egcd(w[r][c], w[i][c]);
      Int p = w[r][c] / e.g;
      Int q = w[i][c] / e.g;
      for (std::size_t j = 0; j < cols; ++j) {
        Int top = e.u * w[r][j] + e.v * w[i][j];
        Int bot = p * w[i][j] - q * w[r][j];
        w[r][j] = top;
        w[i][j] = bot;
      }
    }
    if (w[r][c] < 0)
      for (Int& x : w[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      if (w[i][c] == 0) continue;
      Int f = w[i][c] / w[r][c];
      if (w[i][c] < 0 && w[i][c] % w[r][c] != 0) f -= 1;  // floor
      if (f != 0)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] -= f * w[r][j];
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.h = std::move(w);
  return res;
}

/// Full kernel of x -> A*x mod m, computed as the projection onto the x-block
/// of the integer null space of [A | diag(m)], then canonicalized by HNF.
/// The projection is injective (diag(m) has full rank), so the result is a
/// basis of the whole kernel, not a sublattice.
inline KernelLattice kernel_lattice(const ModularSystem& sys) {
  const std::size_t n = sys.rows(), k = sys.cols();
  // W = [ B^T | I ] with B = [A | diag(m)]; left-kernel rows of B^T appear as
  // the transform block of the zero rows after eliminating the first n columns.
  Mat w(k + n, Vec(n + k + n, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) w[j][i] = sys.A[i][j];
  for (std::size_t j = 0; j < n; ++j) w[k + j][j] = sys.m[j];
  for (std::size_t i = 0; i < k + n; ++i) w[i][n + i] = 1;

  HnfResult red = hnf_rows(std::move(w), n);
  if (red.rank != n) throw std::logic_error("kernel_lattice: unexpected rank");

  Mat kernel;
  for (std::size_t i = n; i < k + n; ++i) {
    Vec x(k);
    for (std::size_t j = 0; j < k; ++j) x[j] = red.h[i][n + j];
    kernel.push_back(std::move(x));
  }

  HnfResult canon = hnf_rows(std::move(kernel));
  if (canon.rank != k) throw std::logic_error("kernel_lattice: basis not full rank");
  Int det = 1;
  for (std::size_t i = 0; i < k; ++i) det *= canon.h[i][i];
  if (det < 0) det = -det;
  return {std::move(canon.h), det, false};
}

namespace detail {

inline Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q;
  if (num >= 0)
    q = num / den;
  else
    q = -((-num + den - 1) / den);
  return q;
}

inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

struct Gso {
  std::vector<std::vector<Rat>> bstar;
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norms;
};

inline Gso gram_schmidt(const Mat& b) {
  const std::size_t n = row_count(b), k = col_count(b);
  Gso g;
  g.bstar.assign(n, std::vector<Rat>(k));
  g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  g.norms.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) g.bstar[i][t] = Rat(b[i][t]);
    for (std::size_t j = 0; j < i; ++j) {
      Rat num(0);
      for (std::size_t t = 0; t < k; ++t) num += Rat(b[i][t]) * g.bstar[j][t];
      g.mu[i][j] = num / g.norms[j];
      for (std::size_t t = 0; t < k; ++t) g.bstar[i][t] -= g.mu[i][j] * g.bstar[j][t];
    }
    Rat nrm(0);
    for (std::size_t t = 0; t < k; ++t) nrm += g.bstar[i][t] * g.bstar[i][t];
    g.norms[i] = nrm;
  }
  return g;
}

/// Exact solve of x = c * basis for rational coefficients c.
inline std::vector<Rat> basis_coordinates(const Vec& x, const Mat& basis) {
  const std::size_t k = row_count(basis);
  if (x.size() != k) throw std::invalid_argument("basis_coordinates: length mismatch");
  // Solve basis^T * c = x by Gauss elimination over rationals.
  std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rat(basis[j][i]);
    aug[i][k] = Rat(x[i]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && aug[piv][col] == 0) ++piv;
    if (piv == k) throw std::invalid_argument("basis_coordinates: basis not full rank");
    std::swap(aug[col], aug[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat f = aug[r][col] / aug[col][col];
      for (std::size_t t = col; t <= k; ++t) aug[r][t] -= f * aug[col][t];
    }
  }
  std::vector<Rat> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = aug[i][k] / aug[i][i];
  return c;
}

}  // namespace detail

/// LLL with Lovasz parameter 3/4 over exact rational Gram-Schmidt data.
/// Same lattice, same |det|; basis vectors become short and near-orthogonal.
inline KernelLattice lll_reduce(KernelLattice lat) {
  Mat& b = lat.basis;
  const std::size_t n = row_count(b);
  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    detail::Gso g = detail::gram_schmidt(b);
    for (std::size_t jj = k; jj > 0; --jj) {
      std::size_t j = jj - 1;
      Int q = detail::rat_round(g.mu[k][j]);
      if (q != 0) {
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
        g = detail::gram_schmidt(b);
      }
    }
    Rat lhs = g.norms[k];
    Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norms[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = k > 1 ? k - 1 : 1;
    }
  }
  lat.reduced = true;
  return lat;
}

/// Representative of x modulo the lattice inside the half-open fundamental
/// parallelepiped { sum c_i b_i : 0 <= c_i < 1 } of the given basis.
inline Vec reduce_solution(const Vec& x, const KernelLattice& lat) {
  std::vector<Rat> c = detail::basis_coordinates(x, lat.basis);
  Vec out = x;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int f = detail::rat_floor(c[i]);
    if (f != 0)
      for (std::size_t t = 0; t < out.size(); ++t) out[t] -= f * lat.basis[i][t];
  }
  return out;
}

/// True iff v is an integer combination of the basis rows.
inline bool lattice_membership(const Vec& v, const KernelLattice& lat) {
  if (v.size() != col_count(lat.basis)) return false;
  HnfResult h = hnf_rows(lat.basis);
  Vec rem = v;
  for (std::size_t i = 0; i < h.rank; ++i) {
    std::size_t p = h.pivot_cols[i];
    if (rem[p] % h.h[i][p] != 0) return false;
    Int f = rem[p] / h.h[i][p];
    if (f != 0)
      for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= f * h.h[i][t];
  }
  for (const Int& r : rem)
    if (r != 0) return false;
  return true;
}

}  // namespace modsys
