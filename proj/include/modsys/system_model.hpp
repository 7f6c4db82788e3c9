#pragma once

// Problem instances A*x == b (mod m), one modulus per row, plus the classical
// system-to-system rewrites that preserve the solution set.

#include <optional>

#include "modsys/linalg.hpp"

namespace modsys {

struct BadDimensions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadModulus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A is n x k; row i is an equation modulo m[i]. Rectangular shapes allowed.
struct ModularSystem {
  Mat A;
  Vec b;
  Vec m;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A[0].size(); }

  bool operator==(const ModularSystem&) const = default;
};

struct SolvabilityReport {
  bool moduli_pairwise_coprime = false;
  std::vector<std::optional<std::size_t>> pivot_column;
  bool hypotheses_met = false;

  bool operator==(const SolvabilityReport&) const = default;
};

inline ModularSystem validate(ModularSystem sys) {
  if (sys.rows() == 0 || sys.cols() == 0) throw BadDimensions("empty system");
  if (!is_rectangular(sys.A)) throw BadDimensions("ragged matrix rows");
  if (sys.b.size() != sys.rows()) throw BadDimensions("rhs length != row count");
  if (sys.m.size() != sys.rows()) throw BadDimensions("moduli length != row count");
  for (const Int& mi : sys.m)
    if (mi < 2) throw BadModulus("modulus " + mi.str() + " must be >= 2");
  return sys;
}

/// Pivot for row i: smallest column j with gcd(A[i][j], m[i]) == 1.
inline SolvabilityReport check_hypotheses(const ModularSystem& sys) {
  SolvabilityReport rep;
  rep.moduli_pairwise_coprime = pairwise_coprime(sys.m);
  rep.pivot_column.resize(sys.rows());
  bool all_pivots = true;
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    for (std::size_t j = 0; j < sys.cols(); ++j) {
      if (gcd(mod_floor(sys.A[i][j], sys.m[i]), sys.m[i]) == 1) {
        rep.pivot_column[i] = j;
        break;
      }
    }
    all_pivots = all_pivots && rep.pivot_column[i].has_value();
  }
  rep.hypotheses_met = rep.moduli_pairwise_coprime && all_pivots;
  return rep;
}

/// Rescale every row to the common modulus lcm(m); solution set unchanged.
inline ModularSystem mathews_reduce(const ModularSystem& sys) {
  Int common = vec_lcm(sys.m);
  ModularSystem out = sys;
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    Int f = common / sys.m[i];
    for (Int& a : out.A[i]) a *= f;
    out.b[i] *= f;
    out.m[i] = common;
  }
  return out;
}

/// Replace each row of composite modulus by one copy per maximal prime-power
/// factor; rows whose modulus already is a prime power pass through.
inline ModularSystem split_prime_powers(const ModularSystem& sys) {
  ModularSystem out;
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    for (const PrimePower& pp : factorize(sys.m[i])) {
      out.A.push_back(sys.A[i]);
      out.b.push_back(sys.b[i]);
      out.m.push_back(int_pow(pp.prime, pp.exponent));
    }
  }
  return out;
}

/// Equivalent linear Diophantine system B*(x, s) == y with one fresh slack
/// variable per row carrying that row's modulus as coefficient.
inline std::pair<Mat, Vec> modular_to_diophantine(const ModularSystem& sys) {
  const std::size_t n = sys.rows(), k = sys.cols();
  Mat B(n, Vec(k + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) B[i][j] = sys.A[i][j];
    B[i][k + i] = sys.m[i];
  }
  return {B, sys.b};
}

/// a1*x1 + ... + an*xn == rhs has an integer solution iff gcd(a) | rhs.
inline bool single_equation_solvable(const Vec& coeffs, const Int& rhs) {
  Int g = vec_gcd(coeffs);
  if (g == 0) return rhs == 0;
  return rhs % g == 0;
}

}  // namespace modsys
