#pragma once

// Dense exact-integer vectors and matrices, sized for desk-scale systems.

#include <cstddef>

#include "modsys/int_core.hpp"

namespace modsys {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline std::size_t row_count(const Mat& a) { return a.size(); }
inline std::size_t col_count(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

inline bool is_rectangular(const Mat& a) {
  for (const Vec& row : a)
    if (row.size() != col_count(a)) return false;
  return true;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(row_count(a));
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c(row_count(a), Vec(col_count(b), 0));
  for (std::size_t i = 0; i < row_count(a); ++i)
    for (std::size_t t = 0; t < col_count(a); ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < col_count(b); ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(col_count(a), Vec(row_count(a)));
  for (std::size_t i = 0; i < row_count(a); ++i)
    for (std::size_t j = 0; j < col_count(a); ++j) t[j][i] = a[i][j];
  return t;
}

inline Mat identity(std::size_t n) {
  Mat id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline Int norm_sq(const Vec& v) { return dot(v, v); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(Mat a) {
  const std::size_t n = row_count(a);
  if (n == 0 || col_count(a) != n) throw std::invalid_argument("determinant: square matrix required");
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Int d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

/// Classical adjugate: adj(A) * A == det(A) * I.
inline Mat adjugate(const Mat& a) {
  const std::size_t n = row_count(a);
  if (n == 0 || col_count(a) != n) throw std::invalid_argument("adjugate: square matrix required");
  if (n == 1) return {{Int(1)}};
  Mat adj(n, Vec(n));
  Mat minor(n - 1, Vec(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[mr][mc++] = a[r][c];
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;
    }
  }
  return adj;
}

}  // namespace modsys
