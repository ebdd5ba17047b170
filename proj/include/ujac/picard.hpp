#pragma once

#include <vector>

#include "ujac/numeric.hpp"
#include "ujac/stable_graph.hpp"

namespace ujac {

using IntMatrix = std::vector<std::vector<i64>>;

// Integer function on the vertices of a graph (degrees of a line bundle).
struct Multidegree {
  std::vector<i64> values;

  i64 total() const;
  Multidegree operator+(const Multidegree& o) const;
  Multidegree operator-(const Multidegree& o) const;
  Multidegree operator*(i64 c) const;
  bool operator==(const Multidegree& o) const { return values == o.values; }
  bool operator<(const Multidegree& o) const { return values < o.values; }
  // Push values forward along a vertex permutation: (f.m)(f(v)) = m(v).
  Multidegree permuted(const std::vector<int>& vertex_map) const;
};

// U * M * V = D with D diagonal, d_i | d_{i+1}, U and V unimodular.
struct SNFResult {
  IntMatrix d, u, v, u_inv, v_inv;
};

SNFResult smith_normal_form(const IntMatrix& m);

IntMatrix identity_matrix(int n);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
i64 matrix_determinant(IntMatrix m);

// Graph Laplacian restricted to an edge subset; loops contribute nothing.
IntMatrix twist_lattice(int num_vertices, const std::vector<std::pair<int, int>>& edges);
IntMatrix twist_lattice(const StableGraph& g);

// Element of Pic^degree as torsion coordinates (reduced modulo the invariant
// factors > 1) plus the total degree.
struct PicClass {
  std::vector<i64> torsion;
  i64 degree = 0;

  bool operator==(const PicClass& o) const { return torsion == o.torsion && degree == o.degree; }
  bool operator<(const PicClass& o) const {
    if (degree != o.degree) return degree < o.degree;
    return torsion < o.torsion;
  }
};

// Pic(Gamma) = Z^V / Twist_Gamma through the Smith normal form of the
// Laplacian. Finite torsion of order the spanning-tree count, plus Z tracked
// by the total degree.
class PicardGroup {
 public:
  PicardGroup(int num_vertices, std::vector<std::pair<int, int>> edges);
  explicit PicardGroup(const StableGraph& g);
  PicardGroup(const StableGraph& g, const SpanningSubgraph& sub);

  int num_vertices() const { return num_vertices_; }
  // |Pic^0|, the product of the nontrivial invariant factors.
  i64 order() const;
  // Invariant factors > 1.
  const std::vector<i64>& invariant_factors() const { return factors_; }

  PicClass project(const Multidegree& m) const;
  // Representative with the given torsion coordinates and total degree;
  // project(section(t, d)) == (t, d).
  Multidegree section(const std::vector<i64>& torsion, i64 degree) const;
  Multidegree section(const PicClass& c) const { return section(c.torsion, c.degree); }

  bool equivalent(const Multidegree& a, const Multidegree& b) const;

  // Exactly |Pic^0| pairwise-inequivalent multidegrees of total degree d, in
  // canonical (torsion-lexicographic) order.
  std::vector<Multidegree> torsor_representatives(i64 d) const;
  std::vector<PicClass> torsor_classes(i64 d) const;

  PicClass aut_action(const std::vector<int>& vertex_map, const PicClass& c) const;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
  SNFResult snf_;
  std::vector<i64> factors_;       // invariant factors > 1
  std::vector<int> factor_slots_;  // their diagonal positions
  int free_slot_ = -1;             // the single zero invariant factor
  i64 free_sign_ = 1;              // that row of U is free_sign * (1,...,1)
};

}  // namespace ujac
