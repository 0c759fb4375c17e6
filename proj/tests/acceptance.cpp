// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include "kleshchev/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace kleshchev;
namespace kv = kleshchev::verify;

namespace {

Multipartition mp(std::vector<std::vector<int>> shape) {
  std::vector<Partition> comps;
  for (auto &c : shape)
    comps.emplace_back(std::move(c));
  return Multipartition(std::move(comps));
}

const ParamEnv kThree(3, 1, 2);

// The nineteen Kleshchev 3-multipartitions of 3 for (p, ell) = (3, 2).
std::vector<Multipartition> golden_level() {
  return {
      mp({{}, {}, {1, 1, 1}}), mp({{}, {}, {2, 1}}),   mp({{}, {}, {3}}),
      mp({{}, {1}, {1, 1}}),   mp({{}, {1}, {2}}),     mp({{}, {1, 1}, {1}}),
      mp({{}, {1, 1, 1}, {}}), mp({{}, {2}, {1}}),     mp({{}, {2, 1}, {}}),
      mp({{1}, {}, {1, 1}}),   mp({{1}, {}, {2}}),     mp({{1}, {1}, {1}}),
      mp({{1}, {1, 1}, {}}),   mp({{1}, {2}, {}}),     mp({{1, 1}, {}, {1}}),
      mp({{1, 1}, {1}, {}}),   mp({{2}, {}, {1}}),     mp({{2}, {1}, {}}),
      mp({{2, 1}, {}, {}}),
  };
}

// Rows x -> hbar(x) -> hbar^2(x).
std::vector<std::vector<Multipartition>> golden_hbar_rows() {
  return {
      {mp({{}, {}, {1, 1, 1}}), mp({{1, 1}, {}, {1}}), mp({{}, {1, 1, 1}, {}})},
      {mp({{}, {}, {2, 1}}), mp({{2, 1}, {}, {}}), mp({{}, {2, 1}, {}})},
      {mp({{}, {}, {3}}), mp({{2}, {1}, {}}), mp({{}, {2}, {1}})},
      {mp({{}, {1}, {1, 1}}), mp({{1}, {}, {2}}), mp({{1}, {1, 1}, {}})},
      {mp({{}, {1}, {2}}), mp({{2}, {}, {1}}), mp({{1}, {2}, {}})},
      {mp({{}, {1, 1}, {1}}), mp({{1}, {}, {1, 1}}), mp({{1, 1}, {1}, {}})},
      {mp({{1}, {1}, {1}}), mp({{1}, {1}, {1}}), mp({{1}, {1}, {1}})},
  };
}

std::vector<ParamEnv> single_grid() { return kv::single_orbit_grid(); }

std::vector<ParamEnv> full_grid() {
  auto g = kv::single_orbit_grid();
  for (const auto &e : kv::multi_orbit_grid())
    g.push_back(e);
  return g;
}

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool cond, const std::string &what) {
    if (!cond && passed) {
      passed = false;
      note = what;
    }
  }
  void absorb(const kv::CheckResult &r) {
    require(r.passed, r.name + ": " + r.witness);
  }
};

int failures = 0;

void criterion(int id, const char *title, double budget_s,
               const std::function<Outcome()> &body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception &e) {
    out.passed = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (secs > budget_s)
    out.require(false, "over time budget");
  if (!out.passed)
    ++failures;
  std::printf("AC%-2d %s  %-52s %7.3f s (limit %g s)%s%s\n", id,
              out.passed ? "PASS" : "FAIL", title, secs, budget_s,
              out.note.empty() ? "" : "  ", out.note.c_str());
  std::fflush(stdout);
}

} // namespace

int main() {
  constexpr int kMaxN = 6;

  criterion(1, "golden K_3 for (p, ell) = (3, 2)", 1, [] {
    Outcome o;
    auto want = golden_level();
    std::ranges::sort(want);
    o.require(generate_lattice(kThree, 3).levels[3] == want,
              "level 3 differs from the 19-element list");
    return o;
  });

  criterion(2, "golden hbar table", 1, [] {
    Outcome o;
    std::set<Multipartition> seen;
    for (const auto &row : golden_hbar_rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        seen.insert(row[i]);
        o.require(h_map(kThree, row[i]) == row[(i + 1) % row.size()],
                  "row mismatch at " + to_string(row[i]));
      }
    }
    o.require(seen.size() == 19, "rows do not cover K_3");
    const auto parts = partition_orbits(kThree, 3);
    o.require(parts.free_orbits.size() == 6 &&
                  parts.non_free_orbits.size() == 1,
              "expected 6 three-cycles and 1 fixed point");
    return o;
  });

  criterion(3, "golden signature ARR", 1, [] {
    Outcome o;
    const ParamEnv env(4, 1, 2);
    const auto x = mp({{2, 1}, {1, 1}, {1, 1, 1}, {2}});
    const Residue one{0, 1};
    o.require(signature(env, x, one).str() == "ARR", "signature");
    o.require(reduce(signature(env, x, one)).str() == "R", "reduced word");
    o.require(epsilon_count(env, x, one) == 1, "normal node count");
    o.require(good_node(env, x, one) == Node{1, 2, 1}, "good node");
    o.require(removable_nodes(x, env).size() == 5, "removable count");
    return o;
  });

  criterion(4, "hbar path independence and hbar^p = id", 60, [] {
    Outcome o;
    for (const auto &env : single_grid())
      o.absorb(kv::path_independence(env, kMaxN, 10, 20240601));
    return o;
  });

  criterion(5, "fixed-point formula = brute force", 300, [] {
    Outcome o;
    for (const auto &env : full_grid())
      o.absorb(kv::n_tilde_formula_vs_bruteforce(env, kMaxN));
    return o;
  });

  criterion(6, "orbit-count identity = orbit sum", 60, [] {
    Outcome o;
    for (const auto &env : full_grid())
      o.absorb(kv::ppn_vs_orbit_sum(env, kMaxN));
    o.require(count_irr_ppn(kThree, 3) == 9, "value for (3, 2, n = 3)");
    return o;
  });

  criterion(7, "no fixed points when ell = 1", 60, [] {
    Outcome o;
    for (int p : {2, 3, 4}) {
      const ParamEnv env(p, 1, 1);
      for (int n = 1; n <= 8; ++n) {
        o.require(n_tilde_formula(env, n, 1) == 0 &&
                      n_tilde_bruteforce(env, n, 1) == 0,
                  "p=" + std::to_string(p) + " n=" + std::to_string(n));
      }
    }
    return o;
  });

  criterion(8, "gcd(p, n) = 1 gives free orbits", 60, [] {
    Outcome o;
    for (const auto &env : full_grid())
      o.absorb(kv::coprime_orbits_free(env, kMaxN));
    return o;
  });

  criterion(9, "eta is a bijection onto the fixed points", 60, [] {
    Outcome o;
    for (const auto &env : single_grid())
      o.absorb(kv::eta_bijection(env, kMaxN));
    o.require(eta_map(kThree, 1, mp({{1}})) == mp({{1}, {1}, {1}}),
              "(1) does not map to ((1),(1),(1))");
    return o;
  });

  const std::vector<ParamEnv> fock_grid = {ParamEnv(2, 1, 1), ParamEnv(2, 1, 2),
                                           ParamEnv(3, 1, 1), ParamEnv(3, 1, 2)};

  criterion(10, "Fock commutators and weights, |x| <= 5", 120, [&] {
    Outcome o;
    for (const auto &env : fock_grid) {
      o.absorb(kv::commutator_relations(env, 5));
      o.absorb(kv::weight_identity(env, 5));
    }
    return o;
  });

  criterion(11, "crystal operators inside Fock supports", 60, [&] {
    Outcome o;
    for (const auto &env : fock_grid)
      o.absorb(kv::crystal_fock_compatibility(env, 5));
    return o;
  });

  criterion(12, "inverse pair and greedy termination", 60, [] {
    Outcome o;
    std::vector<ParamEnv> envs = {ParamEnv(1, 1, 2), ParamEnv(4, 2, 1),
                                  ParamEnv(4, 2, 2)};
    for (int p = 2; p <= 4; ++p)
      for (int ell = 1; ell <= 2; ++ell)
        envs.emplace_back(p, 1, ell);
    for (const auto &env : envs) {
      o.absorb(kv::inverse_pair(env, 5));
      o.absorb(kv::greedy_termination(env, 5));
      o.absorb(kv::f_tilde_soundness(env, 5));
      // the inverse pair also holds off the lattice
      for (int n = 0; n <= 5; ++n)
        for (const auto &x : enumerate_multipartitions(env.p(), n))
          for (const auto &r : residue_alphabet(env)) {
            if (auto y = f_tilde(env, x, r))
              o.require(e_tilde(env, *y, r) == x,
                        "e(f(x)) != x at " + to_string(x));
            if (auto y = e_tilde(env, x, r))
              o.require(f_tilde(env, *y, r) == x,
                        "f(e(x)) != x at " + to_string(x));
          }
    }
    return o;
  });

  std::printf("%s: %d of 12 criteria failed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
