#include "kleshchev/fock.hpp"

#include <algorithm>
#include <sstream>

namespace kleshchev {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly out;
  out.add_term(exponent, coeff);
  return out;
}

LaurentPoly LaurentPoly::quantum_integer(int k) {
  LaurentPoly out;
  const int sign = k < 0 ? -1 : 1;
  const int n = k < 0 ? -k : k;
  for (int j = n - 1; j >= 1 - n; j -= 2)
    out.add_term(j, sign);
  return out;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
  LaurentPoly out;
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : rhs.terms_)
      out.add_term(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.add_term(e, -c);
  return out;
}

std::string to_string(const LaurentPoly &poly) {
  if (poly.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto [e, c] = *it;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const auto mag = c < 0 ? -c : c;
    if (e == 0)
      os << mag;
    else {
      if (mag != 1)
        os << mag << '*';
      os << "v";
      if (e != 1)
        os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly FockVector::coeff(const Multipartition &mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add(const Multipartition &mp, const LaurentPoly &coeff) {
  if (coeff.is_zero())
    return;
  if (!terms_.empty() &&
      terms_.begin()->first.num_components() != mp.num_components())
    throw ParameterError("Fock vector terms must share the number of "
                         "components");
  auto [it, inserted] = terms_.try_emplace(mp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

FockVector &FockVector::operator+=(const FockVector &rhs) {
  for (const auto &[mp, c] : rhs.terms_)
    add(mp, c);
  return *this;
}

FockVector &FockVector::operator-=(const FockVector &rhs) {
  for (const auto &[mp, c] : rhs.terms_)
    add(mp, -c);
  return *this;
}

namespace {

void require_single_orbit(const ParamEnv &env) {
  if (env.k() != 1)
    throw ParameterError("Fock space actions need a single-orbit environment");
}

// The unique node of `bigger` not in `smaller`, which must have residue r.
Node added_node(const ParamEnv &env, const Multipartition &smaller,
                const Multipartition &bigger, const Residue &r) {
  if (smaller.num_components() != bigger.num_components() ||
      bigger.size() != smaller.size() + 1)
    throw ParameterError("expected multipartitions differing by one node");
  std::optional<Node> found;
  for (const auto &ln : addable_nodes(smaller, env))
    if (bigger.contains(ln.node)) {
      found = ln.node;
      break;
    }
  if (!found || smaller.with_node(*found) != bigger)
    throw ParameterError(to_string(bigger) + " is not " + to_string(smaller) +
                         " plus one node");
  if (residue_of(env, *found) != r)
    throw ParameterError("added node has the wrong residue");
  return *found;
}

template <typename Pred>
int count_nodes(const std::vector<LabeledNode> &nodes, const Residue &r,
                Pred pred) {
  return static_cast<int>(std::ranges::count_if(nodes, [&](const auto &ln) {
    return ln.residue == r && pred(ln.node);
  }));
}

} // namespace

int n_i(const ParamEnv &env, const Multipartition &mp, const Residue &r) {
  require_single_orbit(env);
  auto any = [](const Node &) { return true; };
  return count_nodes(addable_nodes(mp, env), r, any) -
         count_nodes(removable_nodes(mp, env), r, any);
}

int n_d_stat(const ParamEnv &env, const Multipartition &mp) {
  require_single_orbit(env);
  int count = 0;
  for (const auto &node : diagram_nodes(mp))
    if (residue_of(env, node).value == 0)
      ++count;
  return count;
}

int n_l(const ParamEnv &env, const Multipartition &lambda,
        const Multipartition &mu, const Residue &r) {
  require_single_orbit(env);
  const Node g = added_node(env, lambda, mu, r);
  auto below = [&](const Node &x) { return is_below(x, g); };
  return count_nodes(addable_nodes(mu, env), r, below) -
         count_nodes(removable_nodes(lambda, env), r, below);
}

int n_r(const ParamEnv &env, const Multipartition &nu,
        const Multipartition &lambda, const Residue &r) {
  require_single_orbit(env);
  const Node g = added_node(env, nu, lambda, r);
  auto above = [&](const Node &x) { return is_below(g, x); };
  return count_nodes(addable_nodes(lambda, env), r, above) -
         count_nodes(removable_nodes(nu, env), r, above);
}

FockVector f_op(const ParamEnv &env, const FockVector &x, const Residue &r) {
  require_single_orbit(env);
  FockVector out;
  for (const auto &[lambda, c] : x.terms())
    for (const auto &ln : addable_nodes(lambda, env)) {
      if (ln.residue != r)
        continue;
      const Multipartition mu = lambda.with_node(ln.node);
      out.add(mu, c * LaurentPoly::monomial(n_l(env, lambda, mu, r)));
    }
  return out;
}

FockVector e_op(const ParamEnv &env, const FockVector &x, const Residue &r) {
  require_single_orbit(env);
  FockVector out;
  for (const auto &[lambda, c] : x.terms())
    for (const auto &ln : removable_nodes(lambda, env)) {
      if (ln.residue != r)
        continue;
      const Multipartition nu = lambda.without_node(ln.node);
      out.add(nu, c * LaurentPoly::monomial(-n_r(env, nu, lambda, r)));
    }
  return out;
}

FockVector k_op(const ParamEnv &env, const FockVector &x, const Residue &r) {
  require_single_orbit(env);
  FockVector out;
  for (const auto &[lambda, c] : x.terms())
    out.add(lambda, c * LaurentPoly::monomial(n_i(env, lambda, r)));
  return out;
}

FockVector commutator(const ParamEnv &env, const Multipartition &mp,
                      const Residue &r, const Residue &s) {
  const FockVector x(mp);
  return e_op(env, f_op(env, x, s), r) - f_op(env, e_op(env, x, r), s);
}

bool commutator_check(const ParamEnv &env, const Multipartition &mp,
                      const Residue &r) {
  FockVector expected;
  expected.add(mp, LaurentPoly::quantum_integer(n_i(env, mp, r)));
  return commutator(env, mp, r, r) == expected;
}

std::vector<FockLetter> parse_operator_word(const std::string &word) {
  std::vector<FockLetter> out;
  std::istringstream in(word);
  std::string token;
  while (in >> token) {
    if (token.size() < 2)
      throw ParameterError("bad operator token '" + token + "'");
    FockOp op;
    switch (token[0]) {
    case 'E': op = FockOp::E; break;
    case 'F': op = FockOp::F; break;
    case 'K': op = FockOp::K; break;
    default:
      throw ParameterError("operator must be E, F or K: '" + token + "'");
    }
    const std::string digits = token.substr(1);
    if (!std::ranges::all_of(digits, [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParameterError("bad residue in operator token '" + token + "'");
    out.push_back({op, std::stoi(digits)});
  }
  return out;
}

FockVector apply_word(const ParamEnv &env, std::span<const FockLetter> word,
                      FockVector x) {
  require_single_orbit(env);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->residue < 0 || it->residue >= env.e())
      throw ParameterError("residue " + std::to_string(it->residue) +
                           " out of range 0.." + std::to_string(env.e() - 1));
    const Residue r{0, it->residue};
    switch (it->op) {
    case FockOp::E: x = e_op(env, x, r); break;
    case FockOp::F: x = f_op(env, x, r); break;
    case FockOp::K: x = k_op(env, x, r); break;
    }
  }
  return x;
}

} // namespace kleshchev
