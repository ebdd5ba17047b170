#pragma once

#include <map>
#include <string>
#include <vector>

#include "ujac/bijection.hpp"
#include "ujac/interior.hpp"
#include "ujac/picard.hpp"
#include "ujac/stable_graph.hpp"

namespace ujac {

// Conjugacy class of S_lambda = S_{n_1} x ... x S_{n_p}: a cycle type per
// color block.
using LambdaClass = std::vector<Partition>;

LambdaClass identity_lambda_class(const std::vector<int>& colors);
std::string lambda_class_str(const LambdaClass& c);
i64 lambda_centralizer_order(const LambdaClass& c);

// Trace of a subgraph-preserving automorphism on the compactly supported
// cohomology of the torus Hom(H_1(Gamma_0), Gm):
// sum_j (-1)^{b-j} tr(Lambda^{b-j}(A^{-1})) L^j for A the action on a cycle
// basis.
MotiveClass torus_trace(const StableGraph& g, const SpanningSubgraph& sub, const GraphIso& f);

// Number of classes in Pic^degree fixed by the vertex permutation.
i64 pic_trace(const PicardGroup& pic, i64 degree, const std::vector<int>& vertex_map);

// Product over vertex orbits of psi^{orbit size} applied to the character of
// the vertex moduli class at the induced marking permutation.
MotiveClass vertex_trace(const StableGraph& g, const GraphIso& f, const InteriorProvider& provider);

struct TraceLogEntry {
  LambdaClass leg_class;
  MotiveClass torus;
  i64 pic_fixed = 0;
  MotiveClass vertex;
  MotiveClass total;
};

// Contribution of one (Gamma, Gamma_0) pair, with its full S_lambda
// class-function table. The motive is the identity row.
struct StratumContribution {
  StableGraph graph;
  std::vector<int> sub_edges;
  i64 aut_order = 0;
  int torus_rank = 0;
  i64 torsor_size = 0;
  MotiveClass motive;
  std::map<LambdaClass, MotiveClass> table;
  std::vector<TraceLogEntry> log;
};

StratumContribution stratum_class(const StableGraph& g, const SpanningSubgraph& sub, i64 d,
                                  const InteriorProvider& provider);

struct ChiResult {
  int g = 0;
  std::vector<int> colors;
  i64 degree = 0;
  MotiveClass total;
  EPoly e_poly;
  std::map<LambdaClass, MotiveClass> table;
  std::vector<StratumContribution> strata;
};

// Sum of all boundary-stratum contributions of the degree-d compactified
// universal Jacobian of type (g; colors). Colors with multiplicity > 1 yield
// the S_lambda-equivariant refinement in `table`.
ChiResult chi_compactified(int g, const std::vector<int>& colors, i64 d,
                           const InteriorProvider& provider, int jobs = 1);

std::string chi_result_to_json(const ChiResult& r);
std::string chi_result_to_csv(const ChiResult& r);
std::string chi_result_to_text(const ChiResult& r);

// Orbifold Euler characteristic: only spanning trees with all-rational
// vertices contribute; each pair weighs torsor size over |Aut|.
Rational orbifold_euler(int g, const std::vector<int>& colors, i64 d = 0);

// chi(Mbar_{0,2g+n}) / (2^g g!), the tree-sum engine specialized to genus 0.
Rational wood_rhs(int g, int n);
// chi(Mbar_{0,m}) by summing over stable trees with m labeled legs.
Rational chi_mbar0(int m);

struct IndependenceReport {
  bool pass = false;
  bool precondition_failed = false;
  std::vector<std::string> notes;
  std::vector<i64> degrees;
  std::vector<ChiResult> results;
  std::string to_json() const;
};

// chi_compactified must agree across the listed degrees, totally and stratum
// by stratum; strata are matched via the combinatorial-claim bijections.
IndependenceReport verify_independence(int g, const std::vector<int>& colors,
                                       const std::vector<i64>& degrees,
                                       const InteriorProvider& provider);

namespace testing {
// Test-build mutation hooks; selftest uses them to prove the acceptance
// suite detects injected faults.
extern bool mutate_torus_trace_sign;
}  // namespace testing

}  // namespace ujac
