#include "kleshchev/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kleshchev {

ParamEnv::ParamEnv(int p, int k, int ell) : p_(p), k_(k), ell_(ell) {
  if (p < 1 || k < 1 || ell < 1)
    throw ParameterError("p, k and ell must be positive");
  if (p % k != 0)
    throw ParameterError("k must divide p (p=" + std::to_string(p) +
                         ", k=" + std::to_string(k) + ")");
  d_ = p / k;
  e_ = d_ * ell;
}

std::vector<Residue> residue_alphabet(const ParamEnv &env) {
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(env.k() * env.e()));
  for (int o = 0; o < env.k(); ++o)
    for (int v = 0; v < env.e(); ++v)
      out.push_back({o, v});
  return out;
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw ParameterError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParameterError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool is_below(const Node &x, const Node &y) noexcept {
  return x.comp > y.comp || (x.comp == y.comp && x.row > y.row);
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

Multipartition Multipartition::empty(int p) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(p)));
}

int Multipartition::size() const noexcept {
  int n = 0;
  for (const auto &c : components_)
    n += c.size();
  return n;
}

bool Multipartition::contains(const Node &node) const noexcept {
  if (node.comp < 1 || node.comp > num_components() || node.row < 1 ||
      node.col < 1)
    return false;
  return node.col <= components_[node.comp - 1].row(node.row);
}

Multipartition Multipartition::with_node(const Node &node) const {
  if (node.comp < 1 || node.comp > num_components())
    throw ParameterError("component index out of range");
  const Partition &old = components_[node.comp - 1];
  const bool ok = node.col == old.row(node.row) + 1 &&
                  (node.row == 1 || old.row(node.row - 1) >= node.col) &&
                  node.row <= old.length() + 1;
  if (!ok)
    throw ParameterError("node " + to_string(node) + " is not addable");
  std::vector<int> parts = old.parts();
  if (node.row == old.length() + 1)
    parts.push_back(1);
  else
    ++parts[node.row - 1];
  Multipartition out = *this;
  out.components_[node.comp - 1] = Partition(std::move(parts));
  return out;
}

Multipartition Multipartition::without_node(const Node &node) const {
  if (node.comp < 1 || node.comp > num_components())
    throw ParameterError("component index out of range");
  const Partition &old = components_[node.comp - 1];
  const bool ok = node.row <= old.length() && node.col == old.row(node.row) &&
                  old.row(node.row + 1) < node.col;
  if (!ok)
    throw ParameterError("node " + to_string(node) + " is not removable");
  std::vector<int> parts = old.parts();
  --parts[node.row - 1];
  Multipartition out = *this;
  out.components_[node.comp - 1] = Partition(std::move(parts));
  return out;
}

std::string to_string(const Partition &part) {
  if (part.empty())
    return "()";
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < part.length(); ++i)
    os << (i ? "," : "") << part.parts()[i];
  os << ')';
  return os.str();
}

std::string to_string(const Multipartition &mp) {
  std::string s = "(";
  for (int c = 1; c <= mp.num_components(); ++c) {
    if (c > 1)
      s += ',';
    s += to_string(mp.component(c));
  }
  return s + ")";
}

std::string to_string(const Residue &res, const ParamEnv &env) {
  if (env.k() == 1)
    return std::to_string(res.value);
  return "(" + std::to_string(res.orbit) + "," + std::to_string(res.value) +
         ")";
}

std::string to_string(const Node &node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) +
         "," + std::to_string(node.comp) + ")";
}

Residue residue_of(const ParamEnv &env, const Node &node) {
  if (node.comp < 1 || node.comp > env.p())
    throw ParameterError("component index " + std::to_string(node.comp) +
                         " out of range 1.." + std::to_string(env.p()));
  const int orbit = (node.comp - 1) / env.d();
  const int slot = (node.comp - 1) % env.d();
  int value = (node.col - node.row + slot * env.ell()) % env.e();
  if (value < 0)
    value += env.e();
  return {orbit, value};
}

std::vector<Node> diagram_nodes(const Multipartition &mp) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(mp.size()));
  for (int c = 1; c <= mp.num_components(); ++c) {
    const Partition &part = mp.component(c);
    for (int a = 1; a <= part.length(); ++a)
      for (int b = 1; b <= part.row(a); ++b)
        out.push_back({a, b, c});
  }
  return out;
}

namespace {

void check_shape(const Multipartition &mp, const ParamEnv &env) {
  if (mp.num_components() != env.p())
    throw ParameterError("multipartition has " +
                         std::to_string(mp.num_components()) +
                         " components, expected " + std::to_string(env.p()));
}

} // namespace

// Both scans run components last-to-first and rows bottom-to-top, which is
// the most-below-first order.
std::vector<LabeledNode> addable_nodes(const Multipartition &mp,
                                       const ParamEnv &env) {
  check_shape(mp, env);
  std::vector<LabeledNode> out;
  for (int c = mp.num_components(); c >= 1; --c) {
    const Partition &part = mp.component(c);
    for (int a = part.length() + 1; a >= 1; --a) {
      if (a == 1 || part.row(a - 1) > part.row(a)) {
        Node node{a, part.row(a) + 1, c};
        out.push_back({node, residue_of(env, node)});
      }
    }
  }
  return out;
}

std::vector<LabeledNode> removable_nodes(const Multipartition &mp,
                                         const ParamEnv &env) {
  check_shape(mp, env);
  std::vector<LabeledNode> out;
  for (int c = mp.num_components(); c >= 1; --c) {
    const Partition &part = mp.component(c);
    for (int a = part.length(); a >= 1; --a) {
      if (part.row(a) > part.row(a + 1)) {
        Node node{a, part.row(a), c};
        out.push_back({node, residue_of(env, node)});
      }
    }
  }
  return out;
}

bool dominance_geq(const Multipartition &lhs, const Multipartition &rhs) {
  if (lhs.num_components() != rhs.num_components())
    throw ParameterError("dominance: component counts differ");
  if (lhs.size() != rhs.size())
    throw ParameterError("dominance: sizes differ");
  int before_l = 0, before_r = 0;
  for (int i = 1; i <= lhs.num_components(); ++i) {
    const Partition &pl = lhs.component(i);
    const Partition &pr = rhs.component(i);
    const int rows = std::max(pl.length(), pr.length());
    int sum_l = before_l, sum_r = before_r;
    for (int m = 1; m <= rows; ++m) {
      sum_l += pl.row(m);
      sum_r += pr.row(m);
      if (sum_l < sum_r)
        return false;
    }
    before_l = sum_l;
    before_r = sum_r;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur,
                    std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void multipartitions_rec(int p, int remaining,
                         const std::vector<std::vector<Partition>> &table,
                         std::vector<Partition> &cur,
                         std::vector<Multipartition> &out) {
  if (static_cast<int>(cur.size()) == p - 1) {
    for (const auto &last : table[remaining]) {
      cur.push_back(last);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int size = remaining; size >= 0; --size) {
    for (const auto &part : table[size]) {
      cur.push_back(part);
      multipartitions_rec(p, remaining - size, table, cur, out);
      cur.pop_back();
    }
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0)
    throw ParameterError("partition size must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int p, int n) {
  if (p < 1 || n < 0)
    throw ParameterError("enumerate_multipartitions needs p >= 1, n >= 0");
  std::vector<std::vector<Partition>> table;
  for (int s = 0; s <= n; ++s)
    table.push_back(enumerate_partitions(s));
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  multipartitions_rec(p, n, table, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace kleshchev
