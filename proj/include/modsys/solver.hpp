#pragma once

// Constructive solution of A*x == b (mod m) by successive line substitution,
// the equal-moduli matrix-inverse path, and a dispatching general solver.

#include "modsys/oracle.hpp"

namespace modsys {

struct HypothesesNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeterminantNotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SolveMethod { constructive, equal_moduli_inverse, unimodular_inverse, oracle_search };

inline const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::constructive: return "constructive";
    case SolveMethod::equal_moduli_inverse: return "equal_moduli_inverse";
    case SolveMethod::unimodular_inverse: return "unimodular_inverse";
    case SolveMethod::oracle_search: return "oracle_search";
  }
  return "?";
}

struct Solution {
  Vec x;
  SolveMethod method = SolveMethod::constructive;
  bool reduced = false;
};

/// Per-step record of the line construction; partial[i] already satisfies
/// equations 0..i for every later adjustment.
struct ConstructionTrace {
  std::vector<Vec> partial;
  std::vector<Int> t_values;
  std::vector<std::size_t> pivot_cols;
};

/// Residual vector r with r[i] = (A*x - b)[i] mod m[i], each in [0, m[i]).
inline Vec verify(const ModularSystem& sys, const Vec& x) {
  if (x.size() != sys.cols()) throw BadDimensions("verify: solution length != column count");
  Vec r(sys.rows());
  for (std::size_t i = 0; i < sys.rows(); ++i) r[i] = mod_floor(dot(sys.A[i], x) - sys.b[i], sys.m[i]);
  return r;
}

/// Line construction with caller-chosen pivot columns. At step i the partial
/// solution moves along q * e_{j(i)} with q = m_0 * ... * m_{i-1}; since q is
/// divisible by every earlier modulus, equations 0..i-1 stay solved, and q is
/// invertible mod m[i] by pairwise coprimality.
inline Solution solve(const ModularSystem& sys, const std::vector<std::size_t>& pivots,
                      ConstructionTrace* trace = nullptr) {
  const std::size_t n = sys.rows(), k = sys.cols();
  if (pivots.size() != n) throw HypothesesNotMet("pivot list length != row count");
  if (!pairwise_coprime(sys.m)) throw HypothesesNotMet("moduli not pairwise coprime");
  for (std::size_t i = 0; i < n; ++i) {
    if (pivots[i] >= k) throw HypothesesNotMet("pivot column out of range");
    if (gcd(mod_floor(sys.A[i][pivots[i]], sys.m[i]), sys.m[i]) != 1)
      throw HypothesesNotMet("row " + std::to_string(i) + " pivot not coprime to its modulus");
  }
  Vec x(k, 0);
  Int q = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = pivots[i];
    Int acc = dot(sys.A[i], x);
    Int w = mod_inverse(q * sys.A[i][j], sys.m[i]);
    Int t = mod_floor(w * (sys.b[i] - acc), sys.m[i]);
    x[j] += t * q;
    if (trace) {
      trace->partial.push_back(x);
      trace->t_values.push_back(t);
      trace->pivot_cols.push_back(j);
    }
    q *= sys.m[i];
  }
  return {std::move(x), SolveMethod::constructive, false};
}

/// Default pivots: smallest qualifying column per row.
inline Solution solve(const ModularSystem& sys) {
  SolvabilityReport rep = check_hypotheses(sys);
  if (!rep.hypotheses_met) throw HypothesesNotMet("pairwise-coprime moduli with a unit pivot per row required");
  std::vector<std::size_t> pivots(sys.rows());
  for (std::size_t i = 0; i < sys.rows(); ++i) pivots[i] = *rep.pivot_column[i];
  return solve(sys, pivots);
}

/// One-column shortcut: when a single column is coprime to every row modulus,
/// the system collapses to a one-variable CRT along that column.
inline Solution solve_crt_column(const ModularSystem& sys, std::size_t column) {
  return solve(sys, std::vector<std::size_t>(sys.rows(), column));
}

/// x = A^{-1} b over Z_m via adjugate and inverted determinant (Cramer).
inline Solution solve_equal_moduli(const ModularSystem& sys) {
  const std::size_t n = sys.rows();
  if (sys.cols() != n) throw BadDimensions("solve_equal_moduli: square matrix required");
  const Int& m = sys.m[0];
  for (const Int& mi : sys.m)
    if (mi != m) throw std::invalid_argument("solve_equal_moduli: moduli must all be equal");
  Int det = determinant(sys.A);
  if (gcd(mod_floor(det, m), m) != 1)
    throw DeterminantNotInvertible("det = " + det.str() + " shares a factor with modulus " + m.str());
  Int det_inv = mod_inverse(det, m);
  Vec x = mat_vec(adjugate(sys.A), sys.b);
  for (Int& xi : x) xi = mod_floor(xi * det_inv, m);
  return {std::move(x), SolveMethod::equal_moduli_inverse, false};
}

/// Integer inverse path for det(A) = +-1: x = A^{-1} b exactly over Z, which
/// satisfies the congruences for any moduli.
inline Solution solve_unimodular(const ModularSystem& sys) {
  const std::size_t n = sys.rows();
  if (sys.cols() != n) throw BadDimensions("solve_unimodular: square matrix required");
  Int det = determinant(sys.A);
  if (det != 1 && det != -1)
    throw DeterminantNotInvertible("matrix is not unimodular, det = " + det.str());
  Vec x = mat_vec(adjugate(sys.A), sys.b);
  if (det == -1)
    for (Int& xi : x) xi = -xi;
  return {std::move(x), SolveMethod::unimodular_inverse, false};
}

/// Dispatcher: structural paths first, exhaustive search last.
/// Returns nullopt only when enumeration proves there is no solution.
inline std::optional<Solution> general_solve(const ModularSystem& sys, const Int& budget = kDefaultBudget) {
  SolvabilityReport rep = check_hypotheses(sys);
  if (rep.hypotheses_met) return solve(sys);
  const bool square = sys.cols() == sys.rows();
  if (square) {
    bool equal = true;
    for (const Int& mi : sys.m) equal = equal && mi == sys.m[0];
    if (equal) {
      try {
        return solve_equal_moduli(sys);
      } catch (const DeterminantNotInvertible&) {
      }
    }
    Int det = determinant(sys.A);
    if (det == 1 || det == -1) return solve_unimodular(sys);
  }
  std::vector<Vec> found = enumerate_solutions(sys, budget);  // may throw BudgetExceeded
  if (found.empty()) return std::nullopt;
  return Solution{std::move(found.front()), SolveMethod::oracle_search, false};
}

}  // namespace modsys
