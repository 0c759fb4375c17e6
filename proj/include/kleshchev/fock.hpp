#pragma once

// Level-p Fock space for the single-orbit case: the E_i, F_i, K_{h_i} actions
// with exact Laurent-polynomial coefficients in v.

#include "kleshchev/core.hpp"

#include <cstdint>
#include <map>

namespace kleshchev {

/// Finite sum of c_j v^j with integer coefficients; zero terms are never
/// stored.
class LaurentPoly {
public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant) { add_term(0, constant); }
  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  /// [k] = (v^k - v^-k)/(v - v^-1) = v^{k-1} + v^{k-3} + ... + v^{1-k};
  /// [-k] = -[k] and [0] = 0.
  static LaurentPoly quantum_integer(int k);

  const std::map<int, Coeff> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const;

  void add_term(int exponent, Coeff coeff);
  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) {
    return a -= b;
  }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly &b) {
    return a *= b;
  }
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  std::map<int, Coeff> terms_;
};

std::string to_string(const LaurentPoly &poly);

class FockVector {
public:
  FockVector() = default;
  /// The basis vector mp with coefficient 1.
  explicit FockVector(const Multipartition &mp) { add(mp, LaurentPoly(1)); }

  const std::map<Multipartition, LaurentPoly> &terms() const noexcept {
    return terms_;
  }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const Multipartition &mp) const;
  void add(const Multipartition &mp, const LaurentPoly &coeff);

  FockVector &operator+=(const FockVector &rhs);
  FockVector &operator-=(const FockVector &rhs);
  friend FockVector operator+(FockVector a, const FockVector &b) {
    return a += b;
  }
  friend FockVector operator-(FockVector a, const FockVector &b) {
    return a -= b;
  }
  friend bool operator==(const FockVector &, const FockVector &) = default;

private:
  std::map<Multipartition, LaurentPoly> terms_;
};

/// #addable r-nodes minus #removable r-nodes.
int n_i(const ParamEnv &env, const Multipartition &mp, const Residue &r);
/// Number of residue-0 nodes.
int n_d_stat(const ParamEnv &env, const Multipartition &mp);
/// Exponent of mu in F_r(lambda), where mu = lambda + one r-node.
int n_l(const ParamEnv &env, const Multipartition &lambda,
        const Multipartition &mu, const Residue &r);
/// Exponent (negated) of nu in E_r(lambda), where lambda = nu + one r-node.
int n_r(const ParamEnv &env, const Multipartition &nu,
        const Multipartition &lambda, const Residue &r);

FockVector f_op(const ParamEnv &env, const FockVector &x, const Residue &r);
FockVector e_op(const ParamEnv &env, const FockVector &x, const Residue &r);
FockVector k_op(const ParamEnv &env, const FockVector &x, const Residue &r);

/// E_r F_s - F_s E_r applied to mp.
FockVector commutator(const ParamEnv &env, const Multipartition &mp,
                      const Residue &r, const Residue &s);
/// True iff [E_r, F_r] mp = [n_i(mp, r)] mp.
bool commutator_check(const ParamEnv &env, const Multipartition &mp,
                      const Residue &r);

enum class FockOp : std::uint8_t { E, F, K };
struct FockLetter {
  FockOp op;
  int residue;
};
/// Parses a word such as "F0 F2 E0".
std::vector<FockLetter> parse_operator_word(const std::string &word);
/// Applies a word as an operator product: the rightmost letter acts first.
FockVector apply_word(const ParamEnv &env, std::span<const FockLetter> word,
                      FockVector x);

} // namespace kleshchev
