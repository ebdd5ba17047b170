#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ujac/numeric.hpp"

namespace ujac {

// One basis monomial L^l * V_v, or L^l * S[s_weight] with an Adams twist
// applied s_twist times. v >= 1 and s_weight >= 12 are mutually exclusive;
// v == 0 and s_weight == 0 is the Tate monomial L^l.
struct MotiveMonomial {
  int l = 0;
  int v = 0;
  int s_weight = 0;
  int s_twist = 1;

  bool operator<(const MotiveMonomial& o) const {
    if (l != o.l) return l < o.l;
    if (v != o.v) return v < o.v;
    if (s_weight != o.s_weight) return s_weight < o.s_weight;
    return s_twist < o.s_twist;
  }
  bool operator==(const MotiveMonomial& o) const {
    return l == o.l && v == o.v && s_weight == o.s_weight && s_twist == o.s_twist;
  }
};

// Integer polynomial in u, v (the Hodge-Deligne variables).
struct EPoly {
  std::map<std::pair<int, int>, i64> coeff;

  void add_term(int u, int v, i64 c);
  EPoly operator+(const EPoly& o) const;
  EPoly operator-(const EPoly& o) const;
  EPoly operator*(const EPoly& o) const;
  bool operator==(const EPoly& o) const { return coeff == o.coeff; }
  bool is_zero() const { return coeff.empty(); }

  // E(u,v) == (uv)^dim * E(1/u,1/v)
  bool is_palindromic(int dim) const;
  // Only (uv)^k monomials, all with nonnegative coefficients.
  bool is_nonnegative_tate() const;

  std::string str() const;        // in u,v
  std::string str_q() const;      // pure-Tate classes printed in q = uv
};

// Normal-form integer combination of motive monomials. Immutable value type.
class MotiveClass {
 public:
  MotiveClass() = default;
  explicit MotiveClass(i64 constant);

  static MotiveClass lefschetz(int power = 1);   // L^power
  static MotiveClass local_system(int k);        // V_k
  static MotiveClass cusp_symbol(int weight, int twist = 1);  // S[weight], twisted

  bool is_zero() const { return terms_.empty(); }
  // No V_k with k >= 1 present.
  bool is_absolute() const;
  // Constant term only (multiple of the unit).
  bool is_constant() const;
  i64 constant_value() const;

  MotiveClass operator+(const MotiveClass& o) const;
  MotiveClass operator-(const MotiveClass& o) const;
  MotiveClass operator-() const;
  MotiveClass operator*(const MotiveClass& o) const;
  MotiveClass operator*(i64 c) const;
  MotiveClass& operator+=(const MotiveClass& o);
  MotiveClass& operator-=(const MotiveClass& o);
  bool operator==(const MotiveClass& o) const { return terms_ == o.terms_; }
  bool operator!=(const MotiveClass& o) const { return !(*this == o); }
  bool operator<(const MotiveClass& o) const { return terms_ < o.terms_; }

  // Exact division by an integer; throws internal_error if not divisible.
  MotiveClass divide_exact(i64 c) const;

  const std::map<MotiveMonomial, i64>& terms() const { return terms_; }

  std::string str() const;

 private:
  std::map<MotiveMonomial, i64> terms_;
  void add_term(const MotiveMonomial& m, i64 c);
  friend MotiveClass adams(int r, const MotiveClass& x);
  friend MotiveClass integrate_M11(const MotiveClass& x);
};

// Adams operation psi^r. Ring homomorphism for each r; psi^r psi^s = psi^{rs}.
MotiveClass adams(int r, const MotiveClass& x);

// Alternating sum of exterior powers of V_1 (class of the Jacobian fiber):
// g=0 -> 1, g=1 -> 1 - V_1 + L. Higher genus requires plugin data.
MotiveClass jacobian_factor(int g);

// chi_c(M_{1,1}, V_k): 0 for odd k, L for k=0, -S[k+2]-1 for even k>0. At
// weights without cusp forms S[k+2] vanishes and the value is -1, the class
// of the weight-0 Eisenstein line in H^1_c.
MotiveClass eichler_shimura(int k);

// Substitute each V_k by eichler_shimura(k); linear over Z[L]. The unit maps
// to L (the class of M_{1,1} itself).
MotiveClass integrate_M11(const MotiveClass& x);

// Hodge-Deligne polynomial: L -> uv, S[12]@r -> u^{11r}+v^{11r}.
// Throws domain_error if a V_k (k>=1) or an unevaluable symbol is present.
EPoly e_polynomial(const MotiveClass& x);

// True for level-1 weights with no cusp forms; such S[m] are eliminated.
bool cusp_dimension_is_zero(int weight);

}  // namespace ujac
