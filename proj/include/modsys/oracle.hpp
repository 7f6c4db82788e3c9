#pragma once

// Exhaustive ground truth for desk-scale instances: solution enumeration,
// image/index analysis, homogeneous kernel scans.

#include <algorithm>
#include <cstdint>

#include "modsys/system_model.hpp"

namespace modsys {

/// lcm of the moduli: period * e_j lies in the kernel for every coordinate,
/// so [0, period)^k always contains a full set of residue representatives.
inline Int system_period(const ModularSystem& sys) { return vec_lcm(sys.m); }

struct ImageAnalysis {
  Int total_b;               // |Z_m1 x ... x Z_mn|
  Int solvable_b_count;      // image size of x -> A*x mod m
  Int index_d;               // total_b / solvable_b_count
  Int solutions_per_solvable_b;  // counted over the enumeration box
  std::optional<std::vector<Vec>> coset_representatives;
};

namespace detail {

/// Odometer scan of an axis-aligned integer box with incremental residue
/// accumulators: visiting a state costs O(n) additions, not a full mat-vec.
/// visit(x, acc) is called for every point in lexicographic order;
/// acc[i] == (A*x - b)[i] mod m[i].
template <typename Visit>
void scan_box(const ModularSystem& sys, const Vec& b, const Int& lo, const Int& len, Visit visit) {
  const std::size_t n = sys.rows(), k = sys.cols();
  Mat amod(n, Vec(k));
  Mat wrap(n, Vec(k));  // residue delta when a coordinate wraps hi -> lo
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      amod[i][j] = mod_floor(sys.A[i][j], sys.m[i]);
      wrap[i][j] = mod_floor(-(len - 1) * sys.A[i][j], sys.m[i]);
    }
  Vec x(k, lo);
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int v = -b[i];
    for (std::size_t j = 0; j < k; ++j) v += sys.A[i][j] * lo;
    acc[i] = mod_floor(v, sys.m[i]);
  }
  const Int hi = lo + len - 1;
  while (true) {
    visit(x, acc);
    std::size_t j = k;
    while (j > 0 && x[j - 1] == hi) {
      --j;
      x[j] = lo;
      for (std::size_t i = 0; i < n; ++i) {
        acc[i] += wrap[i][j];
        if (acc[i] >= sys.m[i]) acc[i] -= sys.m[i];
      }
    }
    if (j == 0) break;
    --j;
    ++x[j];
    for (std::size_t i = 0; i < n; ++i) {
      acc[i] += amod[i][j];
      if (acc[i] >= sys.m[i]) acc[i] -= sys.m[i];
    }
  }
}

inline bool all_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

/// All x in [0, period)^k with A*x == b (mod m), lexicographically sorted.
inline std::vector<Vec> enumerate_solutions(const ModularSystem& sys, const Int& bound = kDefaultBudget) {
  Int period = system_period(sys);
  if (int_pow(period, static_cast<unsigned>(sys.cols())) > bound)
    throw BudgetExceeded("enumerate_solutions: " + period.str() + "^" + std::to_string(sys.cols()) +
                         " points exceed budget " + bound.str());
  std::vector<Vec> out;
  detail::scan_box(sys, sys.b, 0, period, [&](const Vec& x, const Vec& acc) {
    if (detail::all_zero(acc)) out.push_back(x);
  });
  return out;
}

/// All x in [-box, box]^k with A*x == 0 (mod m).
inline std::vector<Vec> homogeneous_solutions(const ModularSystem& sys, const Int& box) {
  std::vector<Vec> out;
  Vec zero(sys.rows(), 0);
  detail::scan_box(sys, zero, -box, 2 * box + 1, [&](const Vec& x, const Vec& acc) {
    if (detail::all_zero(acc)) out.push_back(x);
  });
  return out;
}

/// Enumerates the image of x -> A*x mod m over one full period box and reports
/// image size, index, and the uniform per-b solution count. With emit_cosets,
/// also returns one representative per coset of the image inside the full
/// residue space (their translates partition it).
inline ImageAnalysis image_analysis(const ModularSystem& sys, const Int& bound = kDefaultBudget,
                                    bool emit_cosets = false) {
  const std::size_t n = sys.rows(), k = sys.cols();
  Int period = system_period(sys);
  Int total = 1;
  for (const Int& mi : sys.m) total *= mi;
  if (int_pow(period, static_cast<unsigned>(k)) > bound)
    throw BudgetExceeded("image_analysis: enumeration exceeds budget " + bound.str());
  if (total > bound)
    throw BudgetExceeded("image_analysis: residue space " + total.str() + " exceeds budget " + bound.str());

  // strides for flattening residue tuples, last coordinate fastest
  std::vector<std::size_t> stride(n);
  std::size_t acc_sz = 1;
  for (std::size_t i = n; i > 0; --i) {
    stride[i - 1] = acc_sz;
    acc_sz *= sys.m[i - 1].convert_to<std::size_t>();
  }
  std::vector<std::uint64_t> hits(total.convert_to<std::size_t>(), 0);

  Vec zero(n, 0);
  detail::scan_box(sys, zero, 0, period, [&](const Vec&, const Vec& val) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx += val[i].convert_to<std::size_t>() * stride[i];
    ++hits[idx];
  });

  ImageAnalysis res;
  res.total_b = total;
  Int image_size = 0;
  std::uint64_t per = 0;
  for (std::uint64_t h : hits) {
    if (h == 0) continue;
    ++image_size;
    if (per == 0) per = h;
    if (h != per) throw std::logic_error("image_analysis: fibers of a homomorphism must be uniform");
  }
  res.solvable_b_count = image_size;
  if (total % image_size != 0) throw std::logic_error("image_analysis: image size must divide total");
  res.index_d = total / image_size;
  res.solutions_per_solvable_b = per;

  if (emit_cosets) {
    std::vector<std::vector<std::size_t>> image_pts;
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t flat = 0; flat < hits.size(); ++flat) {
      if (hits[flat]) image_pts.push_back(digits);
      for (std::size_t i = n; i > 0; --i) {
        if (++digits[i - 1] < sys.m[i - 1].convert_to<std::size_t>()) break;
        digits[i - 1] = 0;
      }
    }
    std::vector<std::uint8_t> covered(hits.size(), 0);
    std::vector<Vec> reps;
    digits.assign(n, 0);
    for (std::size_t flat = 0; flat < hits.size(); ++flat) {
      if (!covered[flat]) {
        Vec rep(n);
        for (std::size_t i = 0; i < n; ++i) rep[i] = digits[i];
        for (const auto& pt : image_pts) {
          std::size_t shifted = 0;
          for (std::size_t i = 0; i < n; ++i) {
            std::size_t mi = sys.m[i].convert_to<std::size_t>();
            shifted += ((pt[i] + digits[i]) % mi) * stride[i];
          }
          if (covered[shifted]) throw std::logic_error("image_analysis: coset translates must not overlap");
          covered[shifted] = 1;
        }
        reps.push_back(std::move(rep));
      }
      for (std::size_t i = n; i > 0; --i) {
        if (++digits[i - 1] < sys.m[i - 1].convert_to<std::size_t>()) break;
        digits[i - 1] = 0;
      }
    }
    res.coset_representatives = std::move(reps);
  }
  return res;
}

}  // namespace modsys
