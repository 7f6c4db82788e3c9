#pragma once

// Exact unbounded-integer primitives shared by every other header.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace modsys {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Moduli products grow multiplicatively, so enumeration work is capped by a
// point budget rather than a dimension limit.
inline const Int kDefaultBudget = 1000000;

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical residue in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

struct EgcdResult {
  Int g;  // gcd(a, b), never negative
  Int u;
  Int v;  // u*a + v*b == g
};

inline EgcdResult egcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline Int vec_lcm(const std::vector<Int>& v) {
  Int l = 1;
  for (const Int& x : v) l = lcm(l, x);
  return l;
}

/// w in [0, m) with a*w == 1 (mod m). Requires m >= 2.
inline Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  EgcdResult e = egcd(mod_floor(a, m), m);
  if (e.g != 1) {
    throw NotInvertible("mod_inverse: gcd(" + a.str() + ", " + m.str() + ") = " + e.g.str());
  }
  return mod_floor(e.u, m);
}

inline bool pairwise_coprime(const std::vector<Int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (gcd(v[i], v[j]) != 1) return false;
  return true;
}

struct PrimePower {
  Int prime;
  unsigned exponent;
};

/// Trial division; primes strictly increasing, product reconstructs n.
inline std::vector<PrimePower> factorize(Int n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  std::vector<PrimePower> out;
  Int d = 2;
  while (d * d <= n) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline Int int_pow(const Int& base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace modsys
