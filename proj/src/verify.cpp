#include "kleshchev/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace kleshchev::verify {

std::string describe(const ParamEnv &env) {
  std::ostringstream os;
  os << "(p=" << env.p() << ",k=" << env.k() << ",ell=" << env.ell() << ")";
  return os.str();
}

namespace {

// Records cases and keeps the first failure.
class Tally {
public:
  Tally(std::string name, const ParamEnv *env = nullptr)
      : result_{std::move(name), true, 0, {}} {
    if (env)
      result_.name += " " + describe(*env);
  }

  void expect(bool cond, const std::string &witness) {
    ++result_.cases;
    if (!cond && result_.passed) {
      result_.passed = false;
      result_.witness = witness;
    }
  }
  void fail(const std::string &witness) { expect(false, witness); }
  CheckResult take() { return std::move(result_); }

private:
  CheckResult result_;
};

std::string show(const Multipartition &mp) { return to_string(mp); }

std::string show(const Multipartition &mp, const Residue &r,
                 const ParamEnv &env) {
  return to_string(mp) + " r=" + to_string(r, env);
}

std::vector<Multipartition> all_upto(int p, int max_n) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= max_n; ++n) {
    auto level = enumerate_multipartitions(p, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace

CheckResult inverse_pair(const ParamEnv &env, int max_n) {
  Tally t("crystal inverse pair", &env);
  const auto lat = generate_lattice(env, max_n);
  const auto alphabet = residue_alphabet(env);
  for (const auto &level : lat.levels)
    for (const auto &mp : level)
      for (const auto &r : alphabet) {
        const auto up = f_tilde(env, mp, r);
        const auto down = e_tilde(env, mp, r);
        if (up)
          t.expect(e_tilde(env, *up, r) == mp, "e(f(x)) != x at " +
                                                   show(mp, r, env));
        if (down)
          t.expect(f_tilde(env, *down, r) == mp, "f(e(x)) != x at " +
                                                     show(mp, r, env));
        t.expect((epsilon_count(env, mp, r) > 0) == down.has_value() &&
                     (phi_count(env, mp, r) > 0) == up.has_value(),
                 "epsilon/phi disagree with definedness at " +
                     show(mp, r, env));
      }
  return t.take();
}

CheckResult f_tilde_soundness(const ParamEnv &env, int max_n) {
  Tally t("f_tilde adds a good node", &env);
  for (const auto &mp : all_upto(env.p(), max_n - 1))
    for (const auto &r : residue_alphabet(env)) {
      const auto cg = cogood_node(env, mp, r);
      if (!cg)
        continue;
      const auto mu = mp.with_node(*cg);
      t.expect(good_node(env, mu, r) == cg, "added node is not good at " +
                                                show(mp, r, env));
    }
  return t.take();
}

// Every chain of e_tilde steps from K_t stays inside the lattice and can
// always continue until the empty multipartition; checked one level at a
// time this covers all chains.
CheckResult greedy_termination(const ParamEnv &env, int max_n) {
  Tally t("greedy termination", &env);
  const auto lat = generate_lattice(env, max_n);
  const auto alphabet = residue_alphabet(env);
  for (int n = 1; n <= max_n; ++n)
    for (const auto &mp : lat.levels[static_cast<std::size_t>(n)]) {
      bool any = false;
      for (const auto &r : alphabet)
        if (auto down = e_tilde(env, mp, r)) {
          any = true;
          t.expect(lat.contains(*down),
                   "e_tilde left the lattice at " + show(mp, r, env));
        }
      t.expect(any, "stuck above the empty multipartition at " + show(mp));
    }
  return t.take();
}

CheckResult membership_equivalence(const ParamEnv &env, int max_n) {
  Tally t("membership equals lattice level", &env);
  const auto lat = generate_lattice(env, max_n);
  for (const auto &mp : all_upto(env.p(), max_n))
    t.expect(is_kleshchev(env, mp) == lat.contains(mp),
             "is_kleshchev disagrees with the lattice at " + show(mp));
  return t.take();
}

CheckResult blockwise_membership(const ParamEnv &env, int max_n) {
  Tally t("blockwise membership equals greedy", &env);
  for (const auto &mp : all_upto(env.p(), max_n))
    t.expect(is_kleshchev(env, mp) == is_kleshchev_greedy(env, mp),
             "blockwise and greedy membership differ at " + show(mp));
  return t.take();
}

CheckResult reduce_confluence(std::uint64_t seed, int trials) {
  Tally t("signature reduction confluence");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int len = std::uniform_int_distribution<int>(0, 14)(rng);
    SignatureWord word;
    for (int i = 0; i < len; ++i)
      word.letters.push_back(
          {std::bernoulli_distribution(0.5)(rng) ? Letter::Addable
                                                 : Letter::Removable,
           Node{i + 1, 1, 1}});
    const SignatureWord scanned = reduce(word);

    SignatureWord slow = word;
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < slow.letters.size(); ++i)
        if (slow.letters[i].tag == Letter::Addable &&
            slow.letters[i + 1].tag == Letter::Removable)
          spots.push_back(i);
      if (spots.empty())
        break;
      const auto at = spots[std::uniform_int_distribution<std::size_t>(
          0, spots.size() - 1)(rng)];
      slow.letters.erase(slow.letters.begin() + static_cast<long>(at),
                         slow.letters.begin() + static_cast<long>(at) + 2);
    }
    t.expect(scanned == slow && reduce(scanned) == scanned,
             "word " + word.str() + " reduces inconsistently");
  }
  return t.take();
}

CheckResult path_independence(const ParamEnv &env, int max_n, int paths,
                              std::uint64_t seed) {
  Tally t("hbar path independence", &env);
  std::mt19937_64 rng(seed);
  const auto lat = generate_lattice(env, max_n);
  const ParamEnv block = env.block_env();
  for (const auto &level : lat.levels)
    for (const auto &mp : level) {
      try {
        const Multipartition canonical = h_map(env, mp);
        // hbar' only touches the last block, so random descents are taken
        // there.
        const Multipartition last = theta(env, mp).back();
        const Multipartition canonical_last = h_prime(block, last);
        for (int i = 0; i < paths; ++i) {
          const auto path = random_path_from_empty(block, last, rng);
          t.expect(h_prime_along(block, path) == canonical_last,
                   "hbar depends on the path at " + show(mp));
        }
        t.expect(h_power(env, mp, env.p()) == mp,
                 "hbar^p is not the identity at " + show(mp));
        t.expect(is_kleshchev(env, canonical),
                 "hbar image not Kleshchev at " + show(mp));
      } catch (const InternalError &err) {
        t.fail(std::string("shifted step undefined: ") + err.what());
      }
    }
  return t.take();
}

CheckResult h_is_permutation(const ParamEnv &env, int max_n) {
  Tally t("hbar permutes K_n", &env);
  const auto lat = generate_lattice(env, max_n);
  for (std::size_t n = 0; n < lat.levels.size(); ++n) {
    const auto &level = lat.levels[n];
    std::vector<Multipartition> image;
    for (const auto &mp : level) {
      const auto h = h_map(env, mp);
      t.expect(h.size() == mp.size(), "hbar changed the size of " + show(mp));
      const auto rep = orbit_report(env, mp);
      t.expect(rep.order * rep.stabilizer_size == env.p(),
               "order * stabilizer != p at " + show(mp));
      image.push_back(h);
    }
    std::ranges::sort(image);
    t.expect(image == level,
             "hbar is not a bijection on level " + std::to_string(n));
  }
  return t.take();
}

CheckResult fixed_point_residue_shift(const ParamEnv &env, int max_n) {
  Tally t("fixed points have shift-stable residues", &env);
  if (env.k() != 1)
    return t.take();
  const auto lat = generate_lattice(env, max_n);
  for (const auto &level : lat.levels)
    for (const auto &mp : level) {
      if (h_map(env, mp) != mp)
        continue;
      auto path = path_from_empty(env, mp);
      std::vector<int> values, shifted;
      for (const auto &r : path) {
        values.push_back(r.value);
        shifted.push_back((r.value + env.ell()) % env.e());
      }
      std::ranges::sort(values);
      std::ranges::sort(shifted);
      t.expect(values == shifted, "residue multiset not shift-stable at " +
                                      show(mp));
    }
  return t.take();
}

CheckResult block_rotation(const ParamEnv &env, int max_n) {
  Tally t("hbar^k applies hbar' to each block", &env);
  if (env.k() == 1)
    return t.take();
  const auto lat = generate_lattice(env, max_n);
  for (const auto &level : lat.levels)
    for (const auto &mp : level) {
      auto expected = theta(env, mp);
      for (auto &b : expected)
        b = h_prime(env.block_env(), b);
      t.expect(theta(env, h_power(env, mp, env.k())) == expected,
               "block rotation mismatch at " + show(mp));
    }
  return t.take();
}

CheckResult n_tilde_formula_vs_bruteforce(const ParamEnv &env, int max_n) {
  Tally t("fixed-point formula equals enumeration", &env);
  for (int n = 0; n <= max_n; ++n)
    for (int m : divisors(env.p())) {
      const Count formula = n_tilde_formula(env, n, m);
      const Count brute = n_tilde_bruteforce(env, n, m);
      t.expect(formula == brute,
               "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   ": formula " + std::to_string(formula) + " vs enumeration " +
                   std::to_string(brute));
    }
  return t.take();
}

CheckResult inversion_consistency(const ParamEnv &env, int max_n) {
  Tally t("Moebius inversion consistency", &env);
  for (int n = 0; n <= max_n; ++n) {
    std::map<int, Count> by_order;
    const auto lat = generate_lattice(env, n);
    for (const auto &mp : lat.levels.back())
      ++by_order[orbit_report(env, mp).order];
    for (int m : divisors(env.p())) {
      Count sum = 0;
      for (int a : divisors(m))
        sum += n_exact(env, n, a);
      const std::string where =
          "n=" + std::to_string(n) + " m=" + std::to_string(m);
      t.expect(sum == n_tilde_formula(env, n, m),
               where + ": divisor sum of exact counts differs");
      t.expect(n_exact(env, n, m) == by_order[m],
               where + ": exact-order count differs from enumeration");
    }
  }
  return t.take();
}

CheckResult ppn_vs_orbit_sum(const ParamEnv &env, int max_n) {
  Tally t("H(p,p,n) count equals orbit sum", &env);
  for (int n = 0; n <= max_n; ++n) {
    try {
      const Count formula = count_irr_ppn(env, n);
      const Count oracle = orbit_sum_oracle(env, n);
      t.expect(formula == oracle, "n=" + std::to_string(n) + ": " +
                                      std::to_string(formula) + " vs " +
                                      std::to_string(oracle));
    } catch (const InternalError &err) {
      t.fail("n=" + std::to_string(n) + ": " + err.what());
    }
  }
  return t.take();
}

CheckResult no_fixed_points_when_ell_one(const ParamEnv &env, int max_n) {
  Tally t("no hbar-fixed points when ell = 1", &env);
  if (env.k() != 1 || env.ell() != 1)
    return t.take();
  for (int n = 1; n <= max_n; ++n) {
    t.expect(n_tilde_formula(env, n, 1) == 0,
             "formula nonzero at n=" + std::to_string(n));
    t.expect(n_tilde_bruteforce(env, n, 1) == 0,
             "fixed point found at n=" + std::to_string(n));
  }
  return t.take();
}

CheckResult coprime_orbits_free(const ParamEnv &env, int max_n) {
  Tally t("coprime sizes have only free orbits", &env);
  for (int n = 1; n <= max_n; ++n) {
    if (std::gcd(env.p(), n) != 1)
      continue;
    for (int m : divisors(env.p())) {
      if (m == env.p())
        continue;
      t.expect(n_tilde_bruteforce(env, n, m) == 0 &&
                   n_tilde_formula(env, n, m) == 0,
               "nonzero fixed points at n=" + std::to_string(n) +
                   " m=" + std::to_string(m));
    }
    t.expect(partition_orbits(env, n).non_free_orbits.empty(),
             "non-free orbit at n=" + std::to_string(n));
  }
  return t.take();
}

CheckResult eta_bijection(const ParamEnv &env, int max_n) {
  Tally t("eta is a bijection onto fixed points", &env);
  if (env.k() != 1)
    return t.take();
  for (int n = 0; n <= max_n; ++n)
    for (int m : divisors(env.p())) {
      if ((n * m) % env.p() != 0)
        continue;
      const std::string where =
          "n=" + std::to_string(n) + " m=" + std::to_string(m);
      try {
        const auto small =
            generate_lattice(ParamEnv(m, 1, env.ell()), n * m / env.p());
        std::vector<Multipartition> image;
        for (const auto &s : small.levels.back()) {
          auto img = eta_map(env, m, s);
          t.expect(h_power(env, img, m) == img,
                   where + ": image of " + show(s) + " not fixed");
          image.push_back(std::move(img));
        }
        std::ranges::sort(image);
        t.expect(std::ranges::adjacent_find(image) == image.end(),
                 where + ": eta not injective");
        t.expect(image == fixed_points(env, n, m),
                 where + ": image differs from the fixed-point set");
      } catch (const InternalError &err) {
        t.fail(where + ": " + err.what());
      }
    }
  return t.take();
}

CheckResult mobius_sum(int max_n) {
  Tally t("Moebius divisor sum");
  for (int n = 1; n <= max_n; ++n) {
    int sum = 0;
    for (int d : divisors(n))
      sum += mobius(d);
    t.expect(sum == (n == 1 ? 1 : 0), "n=" + std::to_string(n));
  }
  return t.take();
}

CheckResult commutator_relations(const ParamEnv &env, int max_n) {
  Tally t("[E_i, F_j] = delta_ij [N_i]", &env);
  const auto alphabet = residue_alphabet(env);
  for (const auto &mp : all_upto(env.p(), max_n))
    for (const auto &r : alphabet)
      for (const auto &s : alphabet) {
        if (r == s)
          t.expect(commutator_check(env, mp, r),
                   "diagonal commutator fails at " + show(mp, r, env));
        else
          t.expect(commutator(env, mp, r, s).is_zero(),
                   "mixed commutator nonzero at " + show(mp, r, env) +
                       " s=" + to_string(s, env));
      }
  return t.take();
}

CheckResult weight_identity(const ParamEnv &env, int max_n) {
  Tally t("N_i = phi - epsilon = #A - #R", &env);
  for (const auto &mp : all_upto(env.p(), max_n))
    for (const auto &r : residue_alphabet(env)) {
      const auto word = signature(env, mp, r);
      const auto a = std::ranges::count_if(
          word.letters, [](const auto &l) { return l.tag == Letter::Addable; });
      const auto rem = static_cast<long>(word.letters.size()) - a;
      const int ni = n_i(env, mp, r);
      t.expect(ni == a - rem &&
                   ni == phi_count(env, mp, r) - epsilon_count(env, mp, r),
               "weight identity fails at " + show(mp, r, env));
    }
  return t.take();
}

CheckResult crystal_fock_compatibility(const ParamEnv &env, int max_n) {
  Tally t("crystal operators lie in Fock supports", &env);
  for (const auto &mp : all_upto(env.p(), max_n))
    for (const auto &r : residue_alphabet(env)) {
      const FockVector x(mp);
      if (auto up = f_tilde(env, mp, r))
        t.expect(!f_op(env, x, r).coeff(*up).is_zero(),
                 "f_tilde outside F support at " + show(mp, r, env));
      if (auto down = e_tilde(env, mp, r))
        t.expect(!e_op(env, x, r).coeff(*down).is_zero(),
                 "e_tilde outside E support at " + show(mp, r, env));
    }
  return t.take();
}

CheckResult support_and_degree(const ParamEnv &env, int max_n) {
  Tally t("Fock support and degree", &env);
  for (const auto &mp : all_upto(env.p(), max_n))
    for (const auto &r : residue_alphabet(env)) {
      const FockVector x(mp);
      std::vector<Multipartition> want_f, want_e, got_f, got_e;
      for (const auto &ln : addable_nodes(mp, env))
        if (ln.residue == r)
          want_f.push_back(mp.with_node(ln.node));
      for (const auto &ln : removable_nodes(mp, env))
        if (ln.residue == r)
          want_e.push_back(mp.without_node(ln.node));
      const FockVector fx = f_op(env, x, r);
      const FockVector ex = e_op(env, x, r);
      for (const auto &[mu, c] : fx.terms()) {
        got_f.push_back(mu);
        t.expect(mu.size() == mp.size() + 1, "F changed degree wrongly");
      }
      for (const auto &[nu, c] : ex.terms()) {
        got_e.push_back(nu);
        t.expect(nu.size() == mp.size() - 1, "E changed degree wrongly");
      }
      std::ranges::sort(want_f);
      std::ranges::sort(want_e);
      t.expect(got_f == want_f && got_e == want_e,
               "support mismatch at " + show(mp, r, env));
    }
  return t.take();
}

std::vector<ParamEnv> single_orbit_grid() {
  return {ParamEnv(2, 1, 1), ParamEnv(2, 1, 2), ParamEnv(3, 1, 1),
          ParamEnv(3, 1, 2), ParamEnv(4, 1, 1), ParamEnv(4, 1, 2)};
}

std::vector<ParamEnv> multi_orbit_grid() {
  return {ParamEnv(4, 2, 1), ParamEnv(4, 2, 2), ParamEnv(6, 2, 1),
          ParamEnv(6, 3, 1)};
}

std::vector<CheckResult> run_grid(const GridConfig &cfg) {
  std::vector<CheckResult> out;
  const int n = cfg.max_n;
  out.push_back(mobius_sum(100));
  out.push_back(reduce_confluence(cfg.seed, 500));
  std::vector<ParamEnv> all = single_orbit_grid();
  for (const auto &env : multi_orbit_grid())
    all.push_back(env);
  for (const auto &env : all) {
    out.push_back(inverse_pair(env, n));
    out.push_back(f_tilde_soundness(env, n));
    out.push_back(greedy_termination(env, n));
    out.push_back(membership_equivalence(env, n));
    if (env.k() > 1) {
      out.push_back(blockwise_membership(env, n));
      out.push_back(block_rotation(env, n));
    } else {
      out.push_back(fixed_point_residue_shift(env, n));
      out.push_back(eta_bijection(env, n));
      out.push_back(no_fixed_points_when_ell_one(env, n));
      if (env.p() <= 3) {
        out.push_back(commutator_relations(env, n));
        out.push_back(weight_identity(env, n));
        out.push_back(crystal_fock_compatibility(env, n));
        out.push_back(support_and_degree(env, n));
      }
    }
    out.push_back(path_independence(env, n, cfg.paths, cfg.seed));
    out.push_back(h_is_permutation(env, n));
    out.push_back(n_tilde_formula_vs_bruteforce(env, n));
    out.push_back(inversion_consistency(env, n));
    out.push_back(ppn_vs_orbit_sum(env, n));
    out.push_back(coprime_orbits_free(env, n));
  }
  return out;
}

} // namespace kleshchev::verify
