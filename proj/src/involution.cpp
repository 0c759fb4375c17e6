#include "kleshchev/involution.hpp"

#include <algorithm>

namespace kleshchev {

std::vector<Multipartition> theta(const ParamEnv &env,
                                  const Multipartition &mp) {
  if (mp.num_components() != env.p())
    throw ParameterError("theta: expected " + std::to_string(env.p()) +
                         " components, got " +
                         std::to_string(mp.num_components()));
  std::vector<Multipartition> blocks;
  const auto &comps = mp.components();
  for (int i = 0; i < env.k(); ++i)
    blocks.emplace_back(std::vector<Partition>(
        comps.begin() + i * env.d(), comps.begin() + (i + 1) * env.d()));
  return blocks;
}

Multipartition theta_inverse(const ParamEnv &env,
                             std::span<const Multipartition> blocks) {
  if (static_cast<int>(blocks.size()) != env.k())
    throw ParameterError("theta_inverse: expected " + std::to_string(env.k()) +
                         " blocks");
  std::vector<Partition> comps;
  for (const auto &b : blocks) {
    if (b.num_components() != env.d())
      throw ParameterError("theta_inverse: block has " +
                           std::to_string(b.num_components()) +
                           " components, expected " + std::to_string(env.d()));
    comps.insert(comps.end(), b.components().begin(), b.components().end());
  }
  return Multipartition(std::move(comps));
}

Multipartition h_prime_along(const ParamEnv &block_env,
                             std::span<const Residue> path) {
  if (block_env.k() != 1)
    throw ParameterError("h_prime needs a single-orbit environment");
  Multipartition cur = Multipartition::empty(block_env.p());
  for (const auto &r : path) {
    const Residue shifted{0, (r.value + block_env.ell()) % block_env.e()};
    auto next = f_tilde(block_env, cur, shifted);
    if (!next)
      throw InternalError("shifted path step " +
                          to_string(shifted, block_env) +
                          " undefined at " + to_string(cur));
    cur = std::move(*next);
  }
  return cur;
}

Multipartition h_prime(const ParamEnv &block_env, const Multipartition &mp) {
  if (block_env.k() != 1)
    throw ParameterError("h_prime needs a single-orbit environment");
  const auto path = path_from_empty(block_env, mp);
  return h_prime_along(block_env, path);
}

Multipartition h_map(const ParamEnv &env, const Multipartition &mp) {
  if (env.k() == 1)
    return h_prime(env, mp);
  if (!is_kleshchev(env, mp))
    throw DomainError(to_string(mp) + " is not a Kleshchev multipartition");
  auto blocks = theta(env, mp);
  std::vector<Multipartition> rotated;
  rotated.reserve(blocks.size());
  rotated.push_back(h_prime(env.block_env(), blocks.back()));
  rotated.insert(rotated.end(), blocks.begin(), blocks.end() - 1);
  return theta_inverse(env, rotated);
}

Multipartition h_power(const ParamEnv &env, const Multipartition &mp, int m) {
  if (m < 0)
    throw ParameterError("h_power: exponent must be non-negative");
  if (!is_kleshchev(env, mp))
    throw DomainError(to_string(mp) + " is not a Kleshchev multipartition");
  Multipartition cur = mp;
  for (int i = 0; i < m; ++i)
    cur = h_map(env, cur);
  return cur;
}

OrbitReport orbit_report(const ParamEnv &env, const Multipartition &mp) {
  OrbitReport rep;
  rep.orbit.push_back(mp);
  Multipartition cur = h_map(env, mp);
  while (cur != mp) {
    if (static_cast<int>(rep.orbit.size()) >= env.p())
      throw InternalError("hbar orbit of " + to_string(mp) +
                          " exceeds p elements");
    rep.orbit.push_back(cur);
    cur = h_map(env, cur);
  }
  rep.order = static_cast<int>(rep.orbit.size());
  if (env.p() % rep.order != 0)
    throw InternalError("hbar order does not divide p");
  rep.stabilizer_size = env.p() / rep.order;
  rep.representative = *std::ranges::min_element(rep.orbit);
  return rep;
}

OrbitPartition partition_orbits(const CrystalLattice &lattice) {
  OrbitPartition out;
  const auto &level = lattice.levels.back();
  std::vector<bool> seen(level.size(), false);
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (seen[i])
      continue;
    OrbitReport rep = orbit_report(lattice.env, level[i]);
    for (const auto &mp : rep.orbit) {
      auto idx = lattice.index_of(mp);
      if (!idx)
        throw InternalError("hbar left K_n at " + to_string(mp));
      seen[*idx] = true;
    }
    (rep.stabilizer_size == 1 ? out.free_orbits : out.non_free_orbits)
        .push_back(std::move(rep));
  }
  return out;
}

OrbitPartition partition_orbits(const ParamEnv &env, int n) {
  return partition_orbits(generate_lattice(env, n));
}

} // namespace kleshchev
