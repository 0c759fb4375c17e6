#pragma once

// The automorphism hbar of K_n induced by twisting T_0 with a primitive p-th
// root of unity, and the cyclic orbit structure it generates.

#include "kleshchev/crystal.hpp"

namespace kleshchev {

/// Splits a p-multipartition into its k blocks of d consecutive components.
std::vector<Multipartition> theta(const ParamEnv &env,
                                  const Multipartition &mp);
Multipartition theta_inverse(const ParamEnv &env,
                             std::span<const Multipartition> blocks);

/// hbar' on a single-orbit environment: shift every residue of a good-node
/// path by ell and follow the shifted path. block_env must have k = 1.
Multipartition h_prime(const ParamEnv &block_env, const Multipartition &mp);
/// As h_prime, but along a caller-supplied path to mp.
Multipartition h_prime_along(const ParamEnv &block_env,
                             std::span<const Residue> path);

/// hbar: k = 1 is h_prime itself; for k > 1 the blocks rotate one step and
/// the last block picks up hbar'.
Multipartition h_map(const ParamEnv &env, const Multipartition &mp);
Multipartition h_power(const ParamEnv &env, const Multipartition &mp, int m);

struct OrbitReport {
  Multipartition representative;
  std::vector<Multipartition> orbit; ///< mp, hbar(mp), ... until return
  int order = 1;
  int stabilizer_size = 1;
};

OrbitReport orbit_report(const ParamEnv &env, const Multipartition &mp);

struct OrbitPartition {
  std::vector<OrbitReport> free_orbits;     ///< trivial stabilizer
  std::vector<OrbitReport> non_free_orbits; ///< nontrivial stabilizer
};

/// Groups K_n into hbar-orbits, each keyed by its smallest element.
OrbitPartition partition_orbits(const ParamEnv &env, int n);
OrbitPartition partition_orbits(const CrystalLattice &lattice);

} // namespace kleshchev
