#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ujac/equivariant.hpp"

namespace ujac {

// S_n-equivariant class of the n-th power of an object of class x:
// character at mu is prod_i psi^{mu_i}(x).
EquivariantClass power_class(const MotiveClass& x, int n);

// S_n-equivariant class of the configuration space of n distinct points on an
// object of class x, by inverting the coincidence stratification of the n-th
// power. Character at mu is the falling product prod_k prod_j (b_k - j k)
// with b_k = sum_{d | k} moebius(d) psi^{k/d}(x).
EquivariantClass configuration_class(const MotiveClass& x, int n);

// chi^{S_n} of M_{0,n} (= J_{0,n}) via twisted point counts on the projective
// line: character at mu is T_mu(L), an exact quotient by L^3 - L.
EquivariantClass genus0_class(int n);

// chi^{S_n} of J_{1,n}: configuration class of the elliptic-curve fiber,
// integrated over M_{1,1} coefficientwise.
EquivariantClass genus1_class(int n);

// Computes interior classes for g <= 1 and serves user-supplied tables for
// g >= 2. Thread-safe memoization.
class InteriorProvider {
 public:
  InteriorProvider() = default;

  // Table format: {"g":int,"n":int,"class":{"<mu as k1,k2,...>":[terms]}}
  // where each term is {"l":int,"coeff":int} plus optionally "v" or
  // "s"/"s_twist". Characters must define a virtual representation.
  void load_plugin_table(const std::string& json_text);
  bool has_plugin(int g, int n) const;

  EquivariantClass interior(int g, int n) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, EquivariantClass> cache_;
  std::map<std::pair<int, int>, EquivariantClass> plugin_;
};

// Shared JSON helpers for motive classes.
MotiveClass motive_from_json_text(const std::string& text);
std::string motive_to_json_text(const MotiveClass& x);

}  // namespace ujac
