#pragma once

#include <string>
#include <vector>

#include "ujac/picard.hpp"
#include "ujac/stable_graph.hpp"

namespace ujac {

// The set D of degrees admitting equivariant stability conditions for type
// (g; n_1..n_p): d in D iff gcd(d-g+1, M) = 1 with M = gcd(2g-2, n_1..n_p).
struct DegreeWindow {
  int g = 0;
  std::vector<int> colors;

  i64 modulus() const;  // M
  bool contains(i64 d) const;
};

// gcd(g-1+d, 2g-2, n_1, ..., n_p) == 1; agrees with DegreeWindow membership.
bool degree_admissible(int g, const std::vector<int>& colors, i64 d);

// (2 g(v) - 2 + val(v))_v, total 2g-2, Aut-invariant.
Multidegree canonical_multidegree(const StableGraph& g);
// (n_k(v))_v for a leg color k, total n_k, Aut-invariant.
Multidegree leg_multidegree(const StableGraph& g, int color);

struct BijectionStep {
  enum class Kind { translate, multiply };
  Kind kind = Kind::translate;
  Multidegree shift;  // translate
  i64 factor = 0;     // multiply: an odd prime exceeding |Pic^0|

  Multidegree apply(const Multidegree& m) const;
};

BijectionStep translate_step(const StableGraph& g, const Multidegree& m);
// Componentwise multiplication by a; requires a an odd prime > |Pic^0(g)|.
BijectionStep multiply_step(const StableGraph& g, i64 a);

// Smallest odd prime congruent to abar mod modulus and exceeding bound.
i64 select_prime(i64 abar, i64 modulus, i64 bound);

// Composite of translations and componentwise multiplications carrying
// Pic^{d1} to Pic^{d2}, equivariant for color-preserving automorphisms.
struct ComposedBijection {
  i64 d1 = 0, d2 = 0;
  std::vector<BijectionStep> steps;

  Multidegree apply(const Multidegree& m) const;
  PicClass apply(const PicardGroup& pic, const PicClass& c) const;
};

// Requires d1, d2 in the degree window of g's type.
ComposedBijection build_bijection(const StableGraph& g, i64 d1, i64 d2);

// Exhaustive bijectivity + equivariance check of a composed bijection on the
// full torsor, against every color-preserving automorphism.
struct BijectionCheck {
  bool bijective = false;
  bool equivariant = false;
  i64 set_size = 0;
  std::vector<std::string> witnesses;  // failures, if any
  bool ok() const { return bijective && equivariant; }
};
BijectionCheck verify_bijection(const StableGraph& g, const ComposedBijection& b);

// Reduction of the stability-set matching to the cut graph: builds the degree
// bijection on Pic^{d-e}(Gamma_0) and checks it exhaustively under the image
// of Aut(Gamma, Gamma_0).
struct ClaimReport {
  bool admissible = false;  // gcd preconditions hold for both degrees
  bool verified = false;
  i64 set_size = 0;
  int excess = 0;
  ComposedBijection bijection;
  std::vector<std::string> witnesses;
  std::string to_json(const StableGraph& g, const SpanningSubgraph& sub, i64 d, i64 d_prime) const;
};
ClaimReport verify_combinatorial_claim(const StableGraph& g, const SpanningSubgraph& sub, i64 d,
                                       i64 d_prime);

// Feusi criterion: J^d and J^{d'} are S_n-isomorphic over M_{g,n} iff
// d == d' or -d == d' mod gcd(2g-2, n).
bool sn_iso_criterion(int g, int n, i64 d, i64 d_prime);

// Conditions (i) and (ii) of a stability assignment, on canonical pairs.
struct StabilityAssignment {
  int g = 0;
  std::vector<int> colors;
  i64 degree = 0;
  std::vector<GraphPair> pairs;
  std::vector<std::vector<Multidegree>> sets;  // aligned with pairs
};

// Equivariant transversal of Pic^{d-e}(Gamma_0) for every canonical pair.
StabilityAssignment canonical_stability(int g, const std::vector<int>& colors, i64 d);

// Condition (i): each set is a minimal system of coset representatives.
bool stability_condition_i(const StabilityAssignment& s);
// Condition (ii): each set is setwise invariant under Aut(Gamma, Gamma_0).
bool stability_condition_ii(const StabilityAssignment& s);

}  // namespace ujac
