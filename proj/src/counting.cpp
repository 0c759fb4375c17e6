#include "kleshchev/counting.hpp"

#include <boost/rational.hpp>

#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace kleshchev {

int mobius(int a) {
  if (a < 1)
    throw ParameterError("mobius needs a positive argument");
  int sign = 1;
  for (int prime = 2; prime * prime <= a; ++prime) {
    if (a % prime != 0)
      continue;
    a /= prime;
    if (a % prime == 0)
      return 0;
    sign = -sign;
  }
  return a > 1 ? -sign : sign;
}

std::vector<int> divisors(int n) {
  if (n < 1)
    throw ParameterError("divisors needs a positive argument");
  std::vector<int> out;
  for (int m = 1; m <= n; ++m)
    if (n % m == 0)
      out.push_back(m);
  return out;
}

namespace {

class LevelCountCache {
public:
  Count get(int pp, int ell, int n) {
    const auto key = std::make_pair(pp, ell);
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end() && static_cast<int>(it->second.size()) > n)
        return it->second[static_cast<std::size_t>(n)];
    }
    const CrystalLattice lat = generate_lattice(ParamEnv(pp, 1, ell), n);
    std::vector<Count> counts;
    for (const auto &level : lat.levels)
      counts.push_back(static_cast<Count>(level.size()));
    std::unique_lock lock(mutex_);
    auto &slot = table_[key];
    if (slot.size() < counts.size())
      slot = std::move(counts);
    return slot[static_cast<std::size_t>(n)];
  }

private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::vector<Count>> table_;
};

LevelCountCache &level_cache() {
  static LevelCountCache cache;
  return cache;
}

// Sum over compositions of `total` into `parts` non-negative pieces of the
// product of term(n_i).
template <typename Term>
Count composition_sum(int parts, int total, Term term) {
  std::vector<Count> single(static_cast<std::size_t>(total) + 1);
  for (int s = 0; s <= total; ++s)
    single[static_cast<std::size_t>(s)] = term(s);
  std::vector<Count> acc(static_cast<std::size_t>(total) + 1, 0);
  acc[0] = 1;
  for (int i = 0; i < parts; ++i) {
    std::vector<Count> next(acc.size(), 0);
    for (int s = 0; s <= total; ++s)
      for (int t = 0; s + t <= total; ++t)
        next[static_cast<std::size_t>(s + t)] +=
            acc[static_cast<std::size_t>(s)] *
            single[static_cast<std::size_t>(t)];
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(total)];
}

void check_divisor(const ParamEnv &env, int m) {
  if (m < 1 || m > env.p() || env.p() % m != 0)
    throw ParameterError("m=" + std::to_string(m) + " must divide p=" +
                         std::to_string(env.p()));
}

} // namespace

Count count_irr_single_orbit(int pp, int ell, int n) {
  if (pp < 1 || ell < 1 || n < 0)
    throw ParameterError("count_irr_single_orbit: bad arguments");
  return level_cache().get(pp, ell, n);
}

Count count_irr_pn(const ParamEnv &env, int n) {
  if (n < 0)
    throw ParameterError("n must be non-negative");
  if (env.k() == 1)
    return count_irr_single_orbit(env.p(), env.ell(), n);
  return composition_sum(env.k(), n, [&](int s) {
    return count_irr_single_orbit(env.d(), env.ell(), s);
  });
}

std::vector<Multipartition> fixed_points(const ParamEnv &env, int n, int m) {
  if (m < 1 || m > env.p())
    throw ParameterError("m must lie in 1..p");
  const CrystalLattice lat = generate_lattice(env, n);
  std::vector<Multipartition> out;
  for (const auto &mp : lat.levels.back())
    if (h_power(env, mp, m) == mp)
      out.push_back(mp);
  return out;
}

Count n_tilde_bruteforce(const ParamEnv &env, int n, int m) {
  return static_cast<Count>(fixed_points(env, n, m).size());
}

Count n_tilde_formula(const ParamEnv &env, int n, int m) {
  check_divisor(env, m);
  if (n < 0)
    throw ParameterError("n must be non-negative");
  if (env.k() == 1) {
    if ((m * n) % env.p() != 0)
      return 0;
    return count_irr_single_orbit(m, env.ell(), m * n / env.p());
  }
  const int a = std::gcd(m, env.k());
  const int dt = std::gcd(env.d(), m / a);
  if ((n * a) % env.k() != 0)
    return 0;
  return composition_sum(a, n * a / env.k(), [&](int ni) -> Count {
    if ((dt * ni) % env.d() != 0)
      return 0;
    return count_irr_single_orbit(dt, env.ell(), dt * ni / env.d());
  });
}

Count n_exact(const ParamEnv &env, int n, int m) {
  check_divisor(env, m);
  Count total = 0;
  for (int a : divisors(m))
    total += mobius(m / a) * n_tilde_formula(env, n, a);
  return total;
}

Count count_irr_ppn(const ParamEnv &env, int n) {
  using Q = boost::rational<Count>;
  const Count p = env.p();
  Q free_part(count_irr_pn(env, n));
  Q fixed_part(0);
  for (int m : divisors(env.p())) {
    if (m == env.p())
      continue;
    const Count exact = n_exact(env, n, m);
    free_part -= exact;
    fixed_part += Q(exact, m) * Q(p, m);
  }
  const Q total = free_part / p + fixed_part;
  if (total.denominator() != 1 || total.numerator() < 0)
    throw InternalError("simple-module count is not a non-negative integer");
  return total.numerator();
}

Count orbit_sum_oracle(const ParamEnv &env, int n) {
  const OrbitPartition parts = partition_orbits(env, n);
  Count total = static_cast<Count>(parts.free_orbits.size());
  for (const auto &rep : parts.non_free_orbits)
    total += rep.stabilizer_size;
  return total;
}

Multipartition eta_map(const ParamEnv &env, int m,
                       const Multipartition &small) {
  if (env.k() != 1)
    throw ParameterError("eta_map needs a single-orbit environment");
  check_divisor(env, m);
  const ParamEnv small_env(m, 1, env.ell());
  if (small.num_components() != m)
    throw ParameterError("eta_map: input must have m components");
  const auto path = path_from_empty(small_env, small);
  std::vector<Residue> expanded;
  const int step = m * env.ell();
  for (const auto &r : path)
    for (int j = 0; j < env.p() / m; ++j)
      expanded.push_back({0, (r.value + j * step) % env.e()});
  auto out = follow_path(env, expanded);
  if (!out)
    throw InternalError("expanded path undefined for " + to_string(small));
  return *out;
}

CountReport build_count_report(const ParamEnv &env, int n, bool check) {
  CountReport rep;
  for (int m : divisors(env.p())) {
    rep.n_tilde[m] = n_tilde_formula(env, n, m);
    rep.n_exact[m] = n_exact(env, n, m);
  }
  rep.irr_pn = count_irr_pn(env, n);
  rep.irr_ppn = count_irr_ppn(env, n);
  if (check) {
    bool ok = true;
    for (int m : divisors(env.p())) {
      rep.n_tilde_oracle[m] = n_tilde_bruteforce(env, n, m);
      ok = ok && rep.n_tilde_oracle[m] == rep.n_tilde[m];
    }
    rep.orbit_sum = orbit_sum_oracle(env, n);
    ok = ok && rep.orbit_sum == rep.irr_ppn &&
         rep.n_tilde[env.p()] == rep.irr_pn;
    rep.cross_checked = true;
    rep.oracle_agrees = ok;
  }
  return rep;
}

} // namespace kleshchev
