#pragma once

// Counting simple modules of H_q(p,p,n) through the fixed points of hbar^m:
// closed formulas, Moebius inversion and brute-force oracles.

#include "kleshchev/involution.hpp"

#include <cstdint>
#include <map>

namespace kleshchev {

using Count = std::int64_t;

int mobius(int a);
/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// |K_n| for the single-orbit environment (pp, 1, ell), via the lattice.
/// Results are cached per (pp, ell); the cache is safe for concurrent use.
Count count_irr_single_orbit(int pp, int ell, int n);

/// |K_n| for env: a composition sum over the k blocks when k > 1.
Count count_irr_pn(const ParamEnv &env, int n);

/// Size of the fixed-point set of hbar^m on K_n, by direct enumeration.
Count n_tilde_bruteforce(const ParamEnv &env, int n, int m);
/// Closed formula for the same number; m must divide p.
Count n_tilde_formula(const ParamEnv &env, int n, int m);
/// Number of elements of K_n with hbar-order exactly m, by Moebius inversion
/// of n_tilde_formula.
Count n_exact(const ParamEnv &env, int n, int m);

/// Number of simple H_q(p,p,n)-modules from the orbit-counting identity,
/// evaluated in exact rational arithmetic.
Count count_irr_ppn(const ParamEnv &env, int n);
/// Sum over hbar-orbits of the stabilizer size.
Count orbit_sum_oracle(const ParamEnv &env, int n);

/// Literal fixed-point set of hbar^m on K_n, sorted.
std::vector<Multipartition> fixed_points(const ParamEnv &env, int n, int m);

/// Path-expansion map from Kleshchev m-multipartitions (environment (m, ell))
/// to hbar^m-fixed Kleshchev p-multipartitions. Needs k = 1 and m | p.
Multipartition eta_map(const ParamEnv &env, int m, const Multipartition &small);

struct CountReport {
  std::map<int, Count> n_tilde; ///< every divisor m of p
  std::map<int, Count> n_exact; ///< every divisor m of p
  Count irr_pn = 0;
  Count irr_ppn = 0;
  bool cross_checked = false;
  /// Filled only when cross-checking: brute-force values per divisor.
  std::map<int, Count> n_tilde_oracle;
  Count orbit_sum = 0;
  bool oracle_agrees = true;
};

CountReport build_count_report(const ParamEnv &env, int n, bool check);

} // namespace kleshchev
