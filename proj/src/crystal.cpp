#include "kleshchev/crystal.hpp"

#include <algorithm>

namespace kleshchev {

std::string SignatureWord::str() const {
  std::string s;
  s.reserve(letters.size());
  for (const auto &l : letters)
    s += l.tag == Letter::Addable ? 'A' : 'R';
  return s;
}

namespace {

// Bottom-up rim order. Within one row the removable node (column lambda_a)
// precedes the addable node (column lambda_a + 1); that tie only arises for
// e = 1.
bool rim_before(const SignatureLetter &x, const SignatureLetter &y) {
  if (x.node.comp != y.node.comp)
    return x.node.comp > y.node.comp;
  if (x.node.row != y.node.row)
    return x.node.row > y.node.row;
  return x.node.col < y.node.col;
}

} // namespace

SignatureWord signature(const ParamEnv &env, const Multipartition &mp,
                        const Residue &r) {
  SignatureWord word;
  for (const auto &ln : addable_nodes(mp, env))
    if (ln.residue == r)
      word.letters.push_back({Letter::Addable, ln.node});
  for (const auto &ln : removable_nodes(mp, env))
    if (ln.residue == r)
      word.letters.push_back({Letter::Removable, ln.node});
  std::stable_sort(word.letters.begin(), word.letters.end(), rim_before);
  return word;
}

SignatureWord reduce(const SignatureWord &word) {
  SignatureWord out;
  for (const auto &l : word.letters) {
    if (l.tag == Letter::Removable && !out.letters.empty() &&
        out.letters.back().tag == Letter::Addable)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

std::optional<Node> good_node(const ParamEnv &env, const Multipartition &mp,
                              const Residue &r) {
  const SignatureWord red = reduce(signature(env, mp, r));
  std::optional<Node> good;
  for (const auto &l : red.letters)
    if (l.tag == Letter::Removable)
      good = l.node;
  return good;
}

std::optional<Node> cogood_node(const ParamEnv &env, const Multipartition &mp,
                                const Residue &r) {
  const SignatureWord red = reduce(signature(env, mp, r));
  for (const auto &l : red.letters)
    if (l.tag == Letter::Addable)
      return l.node;
  return std::nullopt;
}

std::optional<Multipartition> e_tilde(const ParamEnv &env,
                                      const Multipartition &mp,
                                      const Residue &r) {
  if (auto node = good_node(env, mp, r))
    return mp.without_node(*node);
  return std::nullopt;
}

std::optional<Multipartition> f_tilde(const ParamEnv &env,
                                      const Multipartition &mp,
                                      const Residue &r) {
  auto node = cogood_node(env, mp, r);
  if (!node)
    return std::nullopt;
  Multipartition out = mp.with_node(*node);
  // The added node must be good in the result. This always holds for e >= 2;
  // for e = 1 the addable and removable node of a row collide and it fails.
  if (good_node(env, out, r) != node)
    return std::nullopt;
  return out;
}

int epsilon_count(const ParamEnv &env, const Multipartition &mp,
                  const Residue &r) {
  const SignatureWord red = reduce(signature(env, mp, r));
  return static_cast<int>(std::ranges::count_if(
      red.letters, [](const auto &l) { return l.tag == Letter::Removable; }));
}

int phi_count(const ParamEnv &env, const Multipartition &mp,
              const Residue &r) {
  const SignatureWord red = reduce(signature(env, mp, r));
  return static_cast<int>(std::ranges::count_if(
      red.letters, [](const auto &l) { return l.tag == Letter::Addable; }));
}

namespace {

// Residues that occur on removable nodes; only these can carry a good node.
std::vector<Residue> removable_residues(const ParamEnv &env,
                                        const Multipartition &mp) {
  std::vector<Residue> out;
  for (const auto &ln : removable_nodes(mp, env))
    out.push_back(ln.residue);
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

} // namespace

bool is_kleshchev_greedy(const ParamEnv &env, const Multipartition &mp) {
  if (mp.num_components() != env.p())
    throw ParameterError("multipartition does not match the environment");
  Multipartition cur = mp;
  while (!cur.is_empty()) {
    bool moved = false;
    for (const auto &r : removable_residues(env, cur)) {
      if (auto next = e_tilde(env, cur, r)) {
        cur = std::move(*next);
        moved = true;
        break;
      }
    }
    if (!moved)
      return false;
  }
  return true;
}

bool is_kleshchev(const ParamEnv &env, const Multipartition &mp) {
  if (env.k() == 1)
    return is_kleshchev_greedy(env, mp);
  if (mp.num_components() != env.p())
    throw ParameterError("multipartition does not match the environment");
  const ParamEnv block = env.block_env();
  const auto &comps = mp.components();
  for (int i = 0; i < env.k(); ++i) {
    Multipartition part(std::vector<Partition>(comps.begin() + i * env.d(),
                                               comps.begin() +
                                                   (i + 1) * env.d()));
    if (!is_kleshchev_greedy(block, part))
      return false;
  }
  return true;
}

std::optional<std::size_t>
CrystalLattice::index_of(const Multipartition &mp) const {
  const int n = mp.size();
  if (n > depth() || mp.num_components() != env.p())
    return std::nullopt;
  const auto &level = levels[static_cast<std::size_t>(n)];
  auto it = std::lower_bound(level.begin(), level.end(), mp);
  if (it == level.end() || *it != mp)
    return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

CrystalLattice generate_lattice(const ParamEnv &env, int n) {
  if (n < 0)
    throw ParameterError("lattice depth must be non-negative");
  CrystalLattice lat{env, {{Multipartition::empty(env.p())}}, {}};
  const auto alphabet = residue_alphabet(env);
  for (int t = 0; t < n; ++t) {
    const auto &parents = lat.levels.back();
    struct Raw {
      std::size_t from;
      Residue residue;
      Multipartition child;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < parents.size(); ++i)
      for (const auto &r : alphabet)
        if (auto child = f_tilde(env, parents[i], r))
          raw.push_back({i, r, std::move(*child)});

    std::vector<Multipartition> next;
    next.reserve(raw.size());
    for (const auto &e : raw)
      next.push_back(e.child);
    std::ranges::sort(next);
    auto dup = std::ranges::unique(next);
    next.erase(dup.begin(), dup.end());

    std::vector<LatticeEdge> edges;
    edges.reserve(raw.size());
    for (const auto &e : raw) {
      auto it = std::lower_bound(next.begin(), next.end(), e.child);
      edges.push_back(
          {e.from, static_cast<std::size_t>(it - next.begin()), e.residue});
    }
    lat.levels.push_back(std::move(next));
    lat.edges.push_back(std::move(edges));
  }
  return lat;
}

namespace {

template <typename Pick>
std::vector<Residue> descend(const ParamEnv &env, const Multipartition &mp,
                             Pick pick) {
  if (!is_kleshchev(env, mp))
    throw DomainError(to_string(mp) + " is not a Kleshchev multipartition");
  std::vector<Residue> path;
  Multipartition cur = mp;
  while (!cur.is_empty()) {
    std::vector<std::pair<Residue, Node>> options;
    for (const auto &r : removable_residues(env, cur))
      if (auto node = good_node(env, cur, r))
        options.emplace_back(r, *node);
    if (options.empty())
      throw InternalError("Kleshchev multipartition " + to_string(cur) +
                          " has no good node");
    const auto &[r, node] = options[pick(options.size())];
    path.push_back(r);
    cur = cur.without_node(node);
  }
  std::ranges::reverse(path);
  return path;
}

} // namespace

std::vector<Residue> path_from_empty(const ParamEnv &env,
                                     const Multipartition &mp) {
  return descend(env, mp, [](std::size_t) { return std::size_t{0}; });
}

std::vector<Residue> random_path_from_empty(const ParamEnv &env,
                                            const Multipartition &mp,
                                            std::mt19937_64 &rng) {
  return descend(env, mp, [&rng](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

std::optional<Multipartition> follow_path(const ParamEnv &env,
                                          std::span<const Residue> path) {
  Multipartition cur = Multipartition::empty(env.p());
  for (const auto &r : path) {
    auto next = f_tilde(env, cur, r);
    if (!next)
      return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

} // namespace kleshchev
