#include "reference.hpp"

#include "kleshchev/crystal.hpp"

#include <doctest.h>

#include <random>

using namespace kleshchev;

namespace {

Multipartition mp(const ref::Shape &s) { return ref::to_mp(s); }

const ref::Shape kWorked = {{2, 1}, {1, 1}, {1, 1, 1}, {2}};
const ParamEnv kThree(3, 1, 2);

SignatureWord word_of(const std::string &letters) {
  SignatureWord w;
  int row = 1;
  for (char ch : letters)
    w.letters.push_back({ch == 'A' ? Letter::Addable : Letter::Removable,
                         Node{row++, 1, 1}});
  return w;
}

} // namespace

TEST_CASE("signature of the worked example") {
  const ParamEnv env(4, 1, 2);
  const auto w = signature(env, mp(kWorked), {0, 1});
  CHECK(w.str() == "ARR");
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[0].node == Node{4, 1, 3});
  CHECK(w.letters[1].node == Node{2, 1, 2});
  CHECK(w.letters[2].node == Node{1, 2, 1});

  const auto red = reduce(w);
  CHECK(red.str() == "R");
  CHECK(red.letters[0].node == Node{1, 2, 1});
  CHECK(good_node(env, mp(kWorked), {0, 1}) == Node{1, 2, 1});
  CHECK(epsilon_count(env, mp(kWorked), {0, 1}) == 1);
  CHECK(phi_count(env, mp(kWorked), {0, 1}) == 0);
  CHECK(e_tilde(env, mp(kWorked), {0, 1}) ==
        mp({{1, 1}, {1, 1}, {1, 1, 1}, {2}}));
}

TEST_CASE("signatures of small multipartitions") {
  const auto empty = Multipartition::empty(3);
  for (const auto &r : residue_alphabet(kThree)) {
    const auto w = signature(kThree, empty, r);
    CHECK(w.str() == std::string(r.value % 2 == 0 ? "A" : ""));
    CHECK(epsilon_count(kThree, empty, r) == 0);
  }
  const auto w = signature(kThree, mp({{1}, {}, {}}), {0, 0});
  CHECK(w.str() == "R");
  CHECK(w.letters[0].node == Node{1, 1, 1});
  CHECK(epsilon_count(kThree, mp({{1}, {}, {}}), {0, 0}) == 1);
  CHECK(phi_count(kThree, mp({{1}, {}, {}}), {0, 0}) == 0);
}

TEST_CASE("reduce") {
  CHECK(reduce(word_of("ARR")).str() == "R");
  CHECK(reduce(word_of("AR")).str().empty());
  CHECK(reduce(word_of("RAAR")).str() == "RA");
  CHECK(reduce(word_of("AARR")).str().empty());
  CHECK(reduce(word_of("RRAA")).str() == "RRAA");
}

TEST_CASE("good and cogood nodes") {
  const auto empty = Multipartition::empty(3);
  CHECK_FALSE(good_node(kThree, empty, {0, 0}).has_value());
  CHECK(cogood_node(kThree, empty, {0, 0}) == Node{1, 1, 1});
  CHECK(good_node(kThree, mp({{1}, {1}, {1}}), {0, 2}) == Node{1, 1, 2});
}

TEST_CASE("crystal operators") {
  CHECK(f_tilde(kThree, Multipartition::empty(3), {0, 0}) ==
        mp({{1}, {}, {}}));
  CHECK(f_tilde(kThree, mp({{1}, {1}, {}}), {0, 4}) == mp({{1}, {1}, {1}}));
  CHECK_FALSE(f_tilde(kThree, Multipartition::empty(3), {0, 1}).has_value());
  CHECK_FALSE(e_tilde(kThree, Multipartition::empty(3), {0, 0}).has_value());
}

TEST_CASE("membership") {
  CHECK(is_kleshchev(kThree, mp({{1}, {1}, {1}})));
  CHECK_FALSE(is_kleshchev(kThree, mp({{3}, {}, {}})));
  CHECK(is_kleshchev(kThree, Multipartition::empty(3)));
  CHECK_THROWS_AS(is_kleshchev(kThree, mp({{1}})), ParameterError);
  // e = 1: nothing beyond the empty multipartition
  CHECK_FALSE(is_kleshchev(ParamEnv(1, 1, 1), mp({{1}})));
  CHECK(generate_lattice(ParamEnv(1, 1, 1), 3).levels[3].empty());
}

TEST_CASE("lattice agrees with the reference closure") {
  const std::vector<ref::Env> envs = {{2, 1, 1}, {2, 1, 2}, {3, 1, 1},
                                      {3, 1, 2}, {4, 1, 1}, {4, 1, 2},
                                      {4, 2, 1}, {1, 1, 3}};
  for (const auto &re : envs) {
    const ParamEnv env(re.p, re.k, re.ell);
    const int max_n = re.p == 4 ? 5 : 6;
    const auto lat = generate_lattice(env, max_n);
    for (int n = 0; n <= max_n; ++n) {
      const auto expected = ref::kleshchev_level(re, n);
      const auto &level = lat.levels[n];
      REQUIRE(level.size() == expected.size());
      for (const auto &x : level)
        CHECK(expected.count(ref::from_mp(x)) == 1);
      // membership on every multipartition of n
      for (const auto &x : enumerate_multipartitions(re.p, n))
        CHECK(is_kleshchev(env, x) == (expected.count(ref::from_mp(x)) == 1));
    }
  }
}

TEST_CASE("lattice shape") {
  const auto lat = generate_lattice(kThree, 3);
  CHECK(lat.depth() == 3);
  CHECK(lat.levels[0] == std::vector{Multipartition::empty(3)});
  CHECK(lat.levels[1].size() == 3);
  CHECK(lat.levels[3].size() == 19);
  CHECK(lat.contains(mp({{1}, {1}, {1}})));
  CHECK_FALSE(lat.contains(mp({{3}, {}, {}})));
  CHECK(generate_lattice(kThree, 0).edges.empty());
  for (int t = 0; t < lat.depth(); ++t)
    for (const auto &e : lat.edges[t])
      CHECK(f_tilde(kThree, lat.levels[t][e.from], e.residue) ==
            lat.levels[t + 1][e.to]);
  CHECK_THROWS_AS(generate_lattice(kThree, -1), ParameterError);
}

TEST_CASE("paths") {
  CHECK(path_from_empty(kThree, mp({{1}, {}, {}})) ==
        std::vector<Residue>{{0, 0}});
  // canonical descent removes residue 0 first, so the path ends with it
  CHECK(path_from_empty(kThree, mp({{1}, {1}, {1}})) ==
        std::vector<Residue>{{0, 4}, {0, 2}, {0, 0}});
  const std::vector<Residue> ascending = {{0, 0}, {0, 2}, {0, 4}};
  CHECK(follow_path(kThree, ascending) == mp({{1}, {1}, {1}}));
  const auto col = path_from_empty(kThree, mp({{}, {}, {1, 1, 1}}));
  REQUIRE(col.size() == 3);
  CHECK(col[0] == Residue{0, 4});
  CHECK_THROWS_AS(path_from_empty(kThree, mp({{3}, {}, {}})), DomainError);

  std::mt19937_64 rng(7);
  const auto lat = generate_lattice(kThree, 5);
  for (const auto &x : lat.levels[5]) {
    CHECK(follow_path(kThree, path_from_empty(kThree, x)) == x);
    const auto path = random_path_from_empty(kThree, x, rng);
    CHECK(follow_path(kThree, path) == x);
  }
}

TEST_CASE("e and f are partial inverses") {
  for (int p = 1; p <= 4; ++p)
    for (int ell = 1; ell <= 2; ++ell) {
      const ParamEnv env(p, 1, ell);
      for (int n = 0; n <= 4; ++n)
        for (const auto &x : enumerate_multipartitions(p, n))
          for (const auto &r : residue_alphabet(env)) {
            if (auto y = f_tilde(env, x, r))
              CHECK(e_tilde(env, *y, r) == x);
            if (auto y = e_tilde(env, x, r))
              CHECK(f_tilde(env, *y, r) == x);
          }
    }
}

TEST_CASE("reduced words have the form R...RA...A") {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    for (int i = 0; i < trial % 13; ++i)
      s += coin(rng) ? 'A' : 'R';
    const std::string red = reduce(word_of(s)).str();
    CHECK(red.find("AR") == std::string::npos);
    CHECK(std::ranges::count(red, 'R') - std::ranges::count(red, 'A') ==
          std::ranges::count(s, 'R') - std::ranges::count(s, 'A'));
  }
}
