#pragma once

#include <map>
#include <vector>

#include "ujac/motive.hpp"
#include "ujac/partition.hpp"

namespace ujac {

// Conjugacy class of a Young subgroup S_{n_1} x ... x S_{n_p}: one cycle
// type per factor.
using MultiPartition = std::vector<Partition>;

// Degree-n symmetric function with MotiveClass coefficients in the power-sum
// basis, stored through its character values: chars[mu] = z_mu * c_mu. All
// classes produced by the pipeline have integer characters, so integrality
// holds by construction.
class EquivariantClass {
 public:
  explicit EquivariantClass(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }

  // z_mu * c_mu; at mu = 1^n this is the non-equivariant class.
  const MotiveClass& character_at(const Partition& mu) const;
  void set_character(const Partition& mu, MotiveClass value);
  const std::map<Partition, MotiveClass>& characters() const { return chars_; }

  EquivariantClass operator+(const EquivariantClass& o) const;
  EquivariantClass operator-(const EquivariantClass& o) const;
  // Scale all coefficients by a motive.
  EquivariantClass scale(const MotiveClass& x) const;
  bool operator==(const EquivariantClass& o) const {
    return degree_ == o.degree_ && normalized() == o.normalized();
  }

  // Induction product; degree adds.
  EquivariantClass product(const EquivariantClass& o) const;

  // h_n: trivial representation (character 1 everywhere).
  static EquivariantClass h(int n);
  // e_n: sign representation.
  static EquivariantClass e(int n);
  // x * p_nu as a single power-sum monomial.
  static EquivariantClass p_monomial(const MotiveClass& x, const Partition& nu);

 private:
  int degree_;
  std::map<Partition, MotiveClass> chars_;
  std::map<Partition, MotiveClass> normalized() const;
};

// p_r plethysm: p_mu -> p_{r mu} with coefficients transformed by psi^r.
EquivariantClass plethysm_cycle(int r, const EquivariantClass& F);

// Inner product with h_n: sum of the Frobenius coefficients c_mu.
MotiveClass invariants(const EquivariantClass& F);

// Restriction to S_{n_1} x ... x S_{n_p}: class-function table indexed by
// tuples of cycle types.
std::map<MultiPartition, MotiveClass> restrict_to(const EquivariantClass& F,
                                                  const std::vector<int>& blocks);

// Multiplicity of the Schur function s_lambda (irreducible decomposition).
std::map<Partition, MotiveClass> schur_multiplicities(const EquivariantClass& F);

}  // namespace ujac
