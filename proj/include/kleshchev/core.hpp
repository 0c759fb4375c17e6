#pragma once

// Partitions, multipartitions, nodes and residues for Ariki-Koike algebras
// with parameters split into q-orbits.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleshchev {

/// Raised when caller-supplied parameters are inconsistent.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is applied outside its mathematical domain
/// (e.g. a non-Kleshchev multipartition where one is required).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An internal invariant guaranteed by theory failed to hold. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Normalised parameter system: p = d*k components split into k q-orbits of
/// d components each; q has order e = d*ell.
class ParamEnv {
public:
  ParamEnv(int p, int k, int ell);
  /// Single-orbit environment (k = 1).
  static ParamEnv single(int p, int ell) { return ParamEnv(p, 1, ell); }

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int d() const noexcept { return d_; }
  int ell() const noexcept { return ell_; }
  int e() const noexcept { return e_; }

  /// Environment governing one block of d components: (d, 1, ell).
  ParamEnv block_env() const { return ParamEnv(d_, 1, ell_); }

  friend bool operator==(const ParamEnv &, const ParamEnv &) = default;

private:
  int p_, k_, d_, ell_, e_;
};

struct Residue {
  int orbit = 0;
  int value = 0;
  friend auto operator<=>(const Residue &, const Residue &) = default;
};

/// Every residue label of the environment, in (orbit, value) order.
std::vector<Residue> residue_alphabet(const ParamEnv &env);

/// A partition stored without trailing zeros. Ordering is reverse
/// lexicographic on the parts, so (3) < (2,1) < (1,1,1) and every
/// non-empty partition precedes the empty one.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int> &parts() const noexcept { return parts_; }
  int size() const noexcept;
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Row length, 1-based; 0 beyond the last row.
  int row(int a) const noexcept {
    return a >= 1 && a <= length() ? parts_[a - 1] : 0;
  }

  friend bool operator==(const Partition &, const Partition &) = default;
  friend std::strong_ordering operator<=>(const Partition &a,
                                          const Partition &b) {
    return b.parts_ <=> a.parts_;
  }

private:
  std::vector<int> parts_;
};

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;
  friend auto operator<=>(const Node &, const Node &) = default;
};

/// Strict "below" relation: larger component, or same component and lower row.
bool is_below(const Node &x, const Node &y) noexcept;

class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  /// The empty p-multipartition.
  static Multipartition empty(int p);

  int num_components() const noexcept {
    return static_cast<int>(components_.size());
  }
  const std::vector<Partition> &components() const noexcept {
    return components_;
  }
  /// 1-based component access.
  const Partition &component(int c) const { return components_.at(c - 1); }
  int size() const noexcept;
  bool is_empty() const noexcept { return size() == 0; }
  bool contains(const Node &node) const noexcept;

  /// Returns a copy with node added; the node must be addable.
  Multipartition with_node(const Node &node) const;
  /// Returns a copy with node removed; the node must be removable.
  Multipartition without_node(const Node &node) const;

  friend bool operator==(const Multipartition &,
                         const Multipartition &) = default;
  friend std::strong_ordering operator<=>(const Multipartition &,
                                          const Multipartition &) = default;

private:
  std::vector<Partition> components_;
};

std::string to_string(const Partition &part);
std::string to_string(const Multipartition &mp);
std::string to_string(const Residue &res, const ParamEnv &env);
std::string to_string(const Node &node);

/// Residue of a node: component c-1 = (i-1)d + (j-1) lies in orbit i-1 and
/// carries charge (j-1)*ell.
Residue residue_of(const ParamEnv &env, const Node &node);

/// All nodes of [mp], topmost first (component 1 row 1 leftmost first).
std::vector<Node> diagram_nodes(const Multipartition &mp);

struct LabeledNode {
  Node node;
  Residue residue;
  friend bool operator==(const LabeledNode &, const LabeledNode &) = default;
};

/// Addable nodes with residues, most-below first.
std::vector<LabeledNode> addable_nodes(const Multipartition &mp,
                                       const ParamEnv &env);
/// Removable nodes with residues, most-below first.
std::vector<LabeledNode> removable_nodes(const Multipartition &mp,
                                         const ParamEnv &env);

/// Dominance order on multipartitions of equal shape and size.
bool dominance_geq(const Multipartition &lhs, const Multipartition &rhs);

/// All partitions of n, in Partition order.
std::vector<Partition> enumerate_partitions(int n);
/// All p-multipartitions of n, sorted in Multipartition order.
std::vector<Multipartition> enumerate_multipartitions(int p, int n);

} // namespace kleshchev
