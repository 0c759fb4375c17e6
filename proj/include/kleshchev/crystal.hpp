#pragma once

// Good-node calculus and the Kleshchev good lattice.

#include "kleshchev/core.hpp"

#include <cstdint>
#include <random>

namespace kleshchev {

enum class Letter : std::uint8_t { Addable, Removable };

struct SignatureLetter {
  Letter tag;
  Node node;
  friend bool operator==(const SignatureLetter &,
                         const SignatureLetter &) = default;
};

/// Addable/removable nodes of one residue, read bottom-up along the rim.
struct SignatureWord {
  std::vector<SignatureLetter> letters;

  /// "A"/"R" rendering, e.g. "ARR".
  std::string str() const;
  friend bool operator==(const SignatureWord &, const SignatureWord &) = default;
};

SignatureWord signature(const ParamEnv &env, const Multipartition &mp,
                        const Residue &r);

/// Cancels adjacent "AR" pairs until none remain. The result is R...RA...A:
/// surviving R's are the normal nodes, surviving A's the conormal nodes.
SignatureWord reduce(const SignatureWord &word);

/// Highest normal r-node.
std::optional<Node> good_node(const ParamEnv &env, const Multipartition &mp,
                              const Residue &r);
/// Lowest conormal r-node.
std::optional<Node> cogood_node(const ParamEnv &env, const Multipartition &mp,
                                const Residue &r);

/// Removes the good r-node.
std::optional<Multipartition> e_tilde(const ParamEnv &env,
                                      const Multipartition &mp,
                                      const Residue &r);
/// Adds the cogood r-node, provided it is the good r-node of the result.
std::optional<Multipartition> f_tilde(const ParamEnv &env,
                                      const Multipartition &mp,
                                      const Residue &r);

int epsilon_count(const ParamEnv &env, const Multipartition &mp,
                  const Residue &r);
int phi_count(const ParamEnv &env, const Multipartition &mp, const Residue &r);

/// Kleshchev membership. For k > 1 each block is tested in its own
/// single-orbit environment; for k = 1 this is is_kleshchev_greedy.
bool is_kleshchev(const ParamEnv &env, const Multipartition &mp);
/// Applies e_tilde (smallest residue first) until stuck; Kleshchev iff the
/// terminal multipartition is empty.
bool is_kleshchev_greedy(const ParamEnv &env, const Multipartition &mp);

struct LatticeEdge {
  std::size_t from; // index into levels[t]
  std::size_t to;   // index into levels[t + 1]
  Residue residue;
  friend bool operator==(const LatticeEdge &, const LatticeEdge &) = default;
};

/// Levels 0..n of the Kleshchev good lattice. levels[t] is K_t in
/// Multipartition order; edges[t] joins level t to level t+1.
struct CrystalLattice {
  ParamEnv env;
  std::vector<std::vector<Multipartition>> levels;
  std::vector<std::vector<LatticeEdge>> edges;

  int depth() const noexcept { return static_cast<int>(levels.size()) - 1; }
  /// Index of mp within levels[mp.size()], if present.
  std::optional<std::size_t> index_of(const Multipartition &mp) const;
  bool contains(const Multipartition &mp) const {
    return index_of(mp).has_value();
  }
};

CrystalLattice generate_lattice(const ParamEnv &env, int n);

/// Residues r_1..r_n of a good-node path from the empty multipartition to mp.
/// Each descent step removes the good node of the smallest available
/// residue. Throws DomainError if mp is not Kleshchev.
std::vector<Residue> path_from_empty(const ParamEnv &env,
                                     const Multipartition &mp);
/// Same as path_from_empty but picks the residue uniformly at random among
/// those with a good node at every step.
std::vector<Residue> random_path_from_empty(const ParamEnv &env,
                                            const Multipartition &mp,
                                            std::mt19937_64 &rng);

/// Follows a residue path by f_tilde from the empty multipartition. Returns
/// nullopt if some step is undefined.
std::optional<Multipartition> follow_path(const ParamEnv &env,
                                          std::span<const Residue> path);

} // namespace kleshchev
