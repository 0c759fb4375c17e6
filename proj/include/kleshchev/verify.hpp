#pragma once

// Exhaustive property checks over parameter grids. Each check reports the
// number of cases examined and, on failure, the first counterexample.

#include "kleshchev/counting.hpp"
#include "kleshchev/fock.hpp"

#include <cstdint>

namespace kleshchev::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness; ///< first failing case, empty on success
};

std::string describe(const ParamEnv &env);

// crystal
CheckResult inverse_pair(const ParamEnv &env, int max_n);
CheckResult f_tilde_soundness(const ParamEnv &env, int max_n);
CheckResult greedy_termination(const ParamEnv &env, int max_n);
CheckResult membership_equivalence(const ParamEnv &env, int max_n);
CheckResult blockwise_membership(const ParamEnv &env, int max_n);
CheckResult reduce_confluence(std::uint64_t seed, int trials);

// involution
/// hbar along `paths` random descents agrees with the canonical one, every
/// shifted step is defined (k = 1), and hbar^p = id.
CheckResult path_independence(const ParamEnv &env, int max_n, int paths,
                              std::uint64_t seed);
/// hbar permutes K_n, preserves size, and order * stabilizer = p.
CheckResult h_is_permutation(const ParamEnv &env, int max_n);
/// k = 1: a fixed point's path residues are stable under a shift by ell.
CheckResult fixed_point_residue_shift(const ParamEnv &env, int max_n);
/// k > 1: hbar^k applies hbar' to every block in place.
CheckResult block_rotation(const ParamEnv &env, int max_n);

// counting
CheckResult n_tilde_formula_vs_bruteforce(const ParamEnv &env, int max_n);
CheckResult inversion_consistency(const ParamEnv &env, int max_n);
CheckResult ppn_vs_orbit_sum(const ParamEnv &env, int max_n);
/// ell = 1, k = 1: no hbar-fixed points for n >= 1.
CheckResult no_fixed_points_when_ell_one(const ParamEnv &env, int max_n);
/// gcd(p, n) = 1: N~(m) = 0 for m < p and every orbit is free.
CheckResult coprime_orbits_free(const ParamEnv &env, int max_n);
/// eta is injective with image the fixed-point set (k = 1, p | n*m).
CheckResult eta_bijection(const ParamEnv &env, int max_n);
CheckResult mobius_sum(int max_n);

// fock (k = 1)
CheckResult commutator_relations(const ParamEnv &env, int max_n);
CheckResult weight_identity(const ParamEnv &env, int max_n);
CheckResult crystal_fock_compatibility(const ParamEnv &env, int max_n);
CheckResult support_and_degree(const ParamEnv &env, int max_n);

struct GridConfig {
  int max_n = 4;
  int paths = 10;
  std::uint64_t seed = 20240601;
};

/// Environments exercised by the full grid: six single-orbit (p, ell) pairs
/// and four multi-orbit (p, k, ell) triples.
std::vector<ParamEnv> single_orbit_grid();
std::vector<ParamEnv> multi_orbit_grid();

/// Every check above over the standard grids.
std::vector<CheckResult> run_grid(const GridConfig &cfg);

} // namespace kleshchev::verify
