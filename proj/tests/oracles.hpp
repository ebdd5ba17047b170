#pragma once

// Independent test oracles. These deliberately avoid the implementation
// paths they are used to check.

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ujac/motive.hpp"
#include "ujac/partition.hpp"

namespace oracle {

using ujac::i64;

// --------------------------------------------------------------------------
// Two-variable root expansion: V_k -> sum_i alpha^{k-i} beta^i, L -> alpha
// beta. Motive classes without cusp symbols embed injectively.
using RootPoly = std::map<std::pair<int, int>, i64>;

inline void root_add(RootPoly& p, int a, int b, i64 c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  p[key] += c;
  if (p[key] == 0) p.erase(key);
}

inline RootPoly root_mul(const RootPoly& x, const RootPoly& y) {
  RootPoly r;
  for (auto& [k1, c1] : x)
    for (auto& [k2, c2] : y) root_add(r, k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

inline RootPoly roots_of_monomial(int l, int v) {
  RootPoly r;
  root_add(r, 0, 0, 1);
  if (l > 0) {
    RootPoly L;
    root_add(L, l, l, 1);
    r = root_mul(r, L);
  }
  if (v > 0) {
    RootPoly h;
    for (int i = 0; i <= v; ++i) root_add(h, v - i, i, 1);
    r = root_mul(r, h);
  }
  return r;
}

inline RootPoly roots_of(const ujac::MotiveClass& x) {
  RootPoly r;
  for (auto& [m, c] : x.terms()) {
    if (m.s_weight > 0) throw std::runtime_error("root oracle: cusp symbol present");
    for (auto& [k, a] : roots_of_monomial(m.l, m.v)) root_add(r, k.first, k.second, a * c);
  }
  return r;
}

// psi^r at the root level: (a, b) -> (ra, rb).
inline RootPoly root_adams(int r, const RootPoly& p) {
  RootPoly out;
  for (auto& [k, c] : p) root_add(out, r * k.first, r * k.second, c);
  return out;
}

// --------------------------------------------------------------------------
// Permutations of [n], as image vectors.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> permutation_of_type(const ujac::Partition& mu) {
  std::vector<int> perm;
  int base = 0;
  for (int k : mu) {
    for (int i = 0; i < k; ++i) perm.push_back(base + (i + 1) % k);
    base += k;
  }
  return perm;
}

// Number of injections f: [n] -> [N] fixed by f -> f o sigma.
inline i64 twisted_injections(int N, const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<int> f(n, 0);
  i64 count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int j = 0; j < n; ++j)
        if (f[j] != f[sigma[j]]) return;
      ++count;
      return;
    }
    for (int v = 0; v < N; ++v) {
      bool used = false;
      for (int j = 0; j < i; ++j)
        if (f[j] == v) used = true;
      if (used) continue;
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// --------------------------------------------------------------------------
// Closed-form configuration character: prod_k prod_j (b_k - j k), where
// b_k = sum_{d | k} moebius(d) psi^{k/d}(x). Derived from twisted point
// counts; independent of the stratification-inversion implementation.
inline ujac::MotiveClass configuration_character(const ujac::MotiveClass& x,
                                                 const ujac::Partition& mu) {
  ujac::MotiveClass out(1);
  for (auto& [k, m] : ujac::part_multiplicities(mu)) {
    ujac::MotiveClass bk;
    for (int d : ujac::divisors_of(k)) {
      int mo = ujac::moebius(d);
      if (mo != 0) bk += ujac::adams(k / d, x) * mo;
    }
    for (int j = 0; j < m; ++j) out = out * (bk - ujac::MotiveClass(static_cast<i64>(j) * k));
  }
  return out;
}

// --------------------------------------------------------------------------
// Spanning trees by exhaustive edge-subset search.
inline i64 count_spanning_trees(int n, const std::vector<std::pair<int, int>>& edges) {
  int ne = static_cast<int>(edges.size());
  i64 count = 0;
  for (int mask = 0; mask < (1 << ne); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
    bool ok = true;
    for (int e = 0; e < ne && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b)
        ok = false;
      else
        comp[a] = b;
    }
    if (!ok) continue;
    for (int v = 0; v < n; ++v)
      if (find(v) != find(0)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
