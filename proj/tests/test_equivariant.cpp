#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ujac/equivariant.hpp"

using namespace ujac;

namespace {
MotiveClass L(int k = 1) { return MotiveClass::lefschetz(k); }
MotiveClass V(int k) { return MotiveClass::local_system(k); }

// Character of Ind_{S_a x S_b}^{S_{a+b}}(A x B) at sigma, by the explicit
// finite-group induction formula. A and B are class functions given by
// characters per cycle type.
i64 induced_character(int a, int b, const std::function<i64(const Partition&)>& chiA,
                      const std::function<i64(const Partition&)>& chiB,
                      const std::vector<int>& sigma) {
  int n = a + b;
  i64 sum = 0;
  for (auto& tau : oracle::all_permutations(n)) {
    // conjugate = tau o sigma o tau^{-1}
    std::vector<int> tinv(n), conj(n);
    for (int i = 0; i < n; ++i) tinv[tau[i]] = i;
    for (int i = 0; i < n; ++i) conj[i] = tau[sigma[tinv[i]]];
    // must preserve the blocks {0..a-1}, {a..n-1}
    bool in_subgroup = true;
    for (int i = 0; i < a; ++i)
      if (conj[i] >= a) in_subgroup = false;
    for (int i = a; i < n; ++i)
      if (conj[i] < a) in_subgroup = false;
    if (!in_subgroup) continue;
    std::vector<int> pa(conj.begin(), conj.begin() + a), pb;
    for (int i = a; i < n; ++i) pb.push_back(conj[i] - a);
    sum += chiA(cycle_type(pa)) * chiB(cycle_type(pb));
  }
  return sum / (factorial(a) * factorial(b));
}
}  // namespace

TEST_CASE("characters of basic symmetric functions") {
  for (int n = 1; n <= 5; ++n) {
    EquivariantClass h = EquivariantClass::h(n);
    for (auto& mu : partitions_of(n)) CHECK(h.character_at(mu) == MotiveClass(1));
  }
  EquivariantClass e2 = EquivariantClass::e(2);
  CHECK(e2.character_at({1, 1}) == MotiveClass(1));
  CHECK(e2.character_at({2}) == MotiveClass(-1));
  // p_1^n is the regular representation.
  EquivariantClass reg = EquivariantClass::p_monomial(MotiveClass(1), {1});
  for (int i = 1; i < 4; ++i) reg = reg.product(EquivariantClass::p_monomial(MotiveClass(1), {1}));
  CHECK(reg.character_at({1, 1, 1, 1}) == MotiveClass(factorial(4)));
  CHECK(reg.character_at({2, 1, 1}).is_zero());
  CHECK(reg.character_at({4}).is_zero());
}

TEST_CASE("product: h1*h1 and unit law") {
  EquivariantClass h1 = EquivariantClass::h(1);
  EquivariantClass p = h1.product(h1);
  CHECK(p.character_at({1, 1}) == MotiveClass(2));
  CHECK(p.character_at({2}).is_zero());

  EquivariantClass one(0);
  one.set_character({}, MotiveClass(1));
  EquivariantClass f = EquivariantClass::p_monomial(V(1), {2, 1});
  CHECK(f.product(one) == f);
}

TEST_CASE("product dimension count") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      EquivariantClass F = EquivariantClass::p_monomial(V(1) + L(), Partition(m, 1));
      EquivariantClass G = EquivariantClass::p_monomial(L(2) - MotiveClass(1), Partition(n, 1));
      Partition ones(m + n, 1);
      MotiveClass lhs = F.product(G).character_at(ones);
      MotiveClass rhs =
          (F.character_at(Partition(m, 1)) * G.character_at(Partition(n, 1))) * binomial(m + n, n);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("product agrees with explicit finite-group induction (n <= 4)") {
  struct Gen {
    std::string name;
    std::function<EquivariantClass(int)> make;
    std::function<i64(const Partition&)> chi;
  };
  std::vector<Gen> gens = {
      {"h", [](int n) { return EquivariantClass::h(n); }, [](const Partition&) -> i64 { return 1; }},
      {"e", [](int n) { return EquivariantClass::e(n); },
       [](const Partition& mu) -> i64 {
         return ((partition_size(mu) - mu.size()) % 2 == 0) ? 1 : -1;
       }}};
  for (auto& ga : gens)
    for (auto& gb : gens)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          EquivariantClass prod = ga.make(a).product(gb.make(b));
          for (auto& mu : partitions_of(a + b)) {
            std::vector<int> sigma = oracle::permutation_of_type(mu);
            i64 expect = induced_character(a, b, ga.chi, gb.chi, sigma);
            CHECK(prod.character_at(mu) == MotiveClass(expect));
          }
        }
}

TEST_CASE("plethysm_cycle contract and composition") {
  EquivariantClass f = EquivariantClass::p_monomial(V(1), {1});
  EquivariantClass g = plethysm_cycle(2, f);
  // psi^2(V_1) p_2: character at (2) is z_2 psi^2(V_1).
  CHECK(g.degree() == 2);
  CHECK(g.character_at({2}) == adams(2, V(1)) * 2);
  CHECK(g.character_at({1, 1}).is_zero());

  EquivariantClass p2 = EquivariantClass::p_monomial(MotiveClass(1), {2});
  CHECK(plethysm_cycle(1, p2) == p2);
  EquivariantClass p4 = plethysm_cycle(2, p2);
  CHECK(p4.character_at({4}) == MotiveClass(4));

  // Composition law and character bookkeeping chi'(r mu) = r^len psi^r(chi).
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    EquivariantClass F(3);
    for (auto& mu : partitions_of(3)) {
      MotiveClass c = (pick(rng) == 0 ? V(1) : L(pick(rng))) * (pick(rng) - 1);
      F.set_character(mu, c * z_of(mu));
    }
    for (int r = 2; r <= 3; ++r) {
      EquivariantClass G = plethysm_cycle(r, F);
      for (auto& mu : partitions_of(3)) {
        i64 factor = 1;
        for (size_t i = 0; i < mu.size(); ++i) factor *= r;
        CHECK(G.character_at(scale_partition(mu, r)) == adams(r, F.character_at(mu)) * factor);
      }
    }
    CHECK(plethysm_cycle(2, plethysm_cycle(3, F)) == plethysm_cycle(6, F));
  }
}

TEST_CASE("invariants") {
  EquivariantClass reg = EquivariantClass::p_monomial(MotiveClass(1), {1, 1, 1});
  CHECK(invariants(reg) == MotiveClass(1));
  CHECK(invariants(EquivariantClass::e(2)).is_zero());
  for (int n = 1; n <= 5; ++n) CHECK(invariants(EquivariantClass::h(n)) == MotiveClass(1));
  // Induction multiplicativity of invariants.
  EquivariantClass a = EquivariantClass::e(2), b = EquivariantClass::h(3);
  CHECK(invariants(a.product(b)) == invariants(a) * invariants(b));
}

TEST_CASE("restriction to Young subgroups") {
  auto r1 = restrict_to(EquivariantClass::h(2), {1, 1});
  CHECK(r1.size() == 1);
  CHECK(r1.at(MultiPartition{{1}, {1}}) == MotiveClass(1));

  auto r2 = restrict_to(EquivariantClass::e(2), {1, 1});
  CHECK(r2.at(MultiPartition{{1}, {1}}) == MotiveClass(1));

  EquivariantClass f = EquivariantClass::p_monomial(V(2), {2, 1});
  auto r3 = restrict_to(f, {3});
  for (auto& mu : partitions_of(3))
    CHECK((r3.count(MultiPartition{mu}) ? r3.at(MultiPartition{mu}) : MotiveClass()) ==
          f.character_at(mu));

  // Frobenius reciprocity: the trivial-isotypic average of the restriction
  // table equals the pairing <F, h_a * h_b> over S_{a+b}.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      EquivariantClass F =
          EquivariantClass::e(a).product(EquivariantClass::h(b)) +
          EquivariantClass::p_monomial(V(1), Partition(a + b, 1));
      auto table = restrict_to(F, {a, b});
      MotiveClass avg;
      for (auto& [cls, val] : table) {
        i64 weight = 1;
        for (size_t i = 0; i < cls.size(); ++i) weight *= class_size(cls[i]);
        avg += val * weight;
      }
      avg = avg.divide_exact(factorial(a) * factorial(b));
      EquivariantClass hh = EquivariantClass::h(a).product(EquivariantClass::h(b));
      MotiveClass pairing;
      for (auto& mu : partitions_of(a + b))
        pairing += (F.character_at(mu) * hh.character_at(mu)) * class_size(mu);
      pairing = pairing.divide_exact(factorial(a + b));
      CHECK(avg == pairing);
    }
}

TEST_CASE("schur multiplicities") {
  auto h = schur_multiplicities(EquivariantClass::h(4));
  CHECK(h.size() == 1);
  CHECK(h.at(Partition{4}) == MotiveClass(1));
  auto e = schur_multiplicities(EquivariantClass::e(4));
  CHECK(e.size() == 1);
  CHECK(e.at(Partition{1, 1, 1, 1}) == MotiveClass(1));
  // Regular representation: multiplicity of lambda is its dimension.
  EquivariantClass reg = EquivariantClass::p_monomial(MotiveClass(1), {1, 1, 1, 1});
  auto m = schur_multiplicities(reg);
  for (auto& lambda : partitions_of(4))
    CHECK(m.at(lambda) == MotiveClass(sn_character(lambda, {1, 1, 1, 1})));
}
