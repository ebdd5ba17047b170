#include "ujac/picard.hpp"

#include <algorithm>
#include <cstdlib>

namespace ujac {

// ---------------------------------------------------------------------------
// Multidegree

i64 Multidegree::total() const {
  i64 s = 0;
  for (i64 x : values) s += x;
  return s;
}

Multidegree Multidegree::operator+(const Multidegree& o) const {
  if (values.size() != o.values.size()) throw domain_error("Multidegree: size mismatch");
  Multidegree r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

Multidegree Multidegree::operator-(const Multidegree& o) const {
  if (values.size() != o.values.size()) throw domain_error("Multidegree: size mismatch");
  Multidegree r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
  return r;
}

Multidegree Multidegree::operator*(i64 c) const {
  Multidegree r = *this;
  for (i64& x : r.values) x *= c;
  return r;
}

Multidegree Multidegree::permuted(const std::vector<int>& vertex_map) const {
  Multidegree r;
  r.values.assign(values.size(), 0);
  for (size_t v = 0; v < values.size(); ++v) r.values[vertex_map[v]] = values[v];
  return r;
}

// ---------------------------------------------------------------------------
// Matrices and Smith normal form

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int p = k ? static_cast<int>(b[0].size()) : 0;
  IntMatrix r(n, std::vector<i64>(p, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      for (int t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
  return r;
}

i64 matrix_determinant(IntMatrix m) {
  // Fraction-free Gaussian elimination (Bareiss).
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

struct SnfWork {
  IntMatrix m, u, v, u_inv, v_inv;

  void row_swap(int i, int j) {
    std::swap(m[i], m[j]);
    std::swap(u[i], u[j]);
    for (auto& row : u_inv) std::swap(row[i], row[j]);
  }
  void col_swap(int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(v_inv[i], v_inv[j]);
  }
  void row_negate(int i) {
    for (auto& x : m[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (auto& row : u_inv) row[i] = -row[i];
  }
  // row i += c * row j
  void row_add(int i, int j, i64 c) {
    for (size_t t = 0; t < m[i].size(); ++t) m[i][t] += c * m[j][t];
    for (size_t t = 0; t < u[i].size(); ++t) u[i][t] += c * u[j][t];
    for (auto& row : u_inv) row[j] -= c * row[i];
  }
  // col i += c * col j
  void col_add(int i, int j, i64 c) {
    for (auto& row : m) row[i] += c * row[j];
    for (auto& row : v) row[i] += c * row[j];
    for (size_t t = 0; t < v_inv[j].size(); ++t) v_inv[j][t] -= c * v_inv[i][t];
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& input) {
  int rows = static_cast<int>(input.size());
  int cols = rows ? static_cast<int>(input[0].size()) : 0;
  SnfWork w;
  w.m = input;
  w.u = identity_matrix(rows);
  w.u_inv = identity_matrix(rows);
  w.v = identity_matrix(cols);
  w.v_inv = identity_matrix(cols);

  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    // Pivot selection: smallest nonzero absolute value in the trailing block.
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        i64 a = std::abs(w.m[i][j]);
        if (a != 0 && (pi < 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);
    if (w.m[t][t] < 0) w.row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (w.m[i][t] != 0) {
        i64 q = w.m[i][t] / w.m[t][t];
        w.row_add(i, t, -q);
        if (w.m[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (w.m[t][j] != 0) {
        i64 q = w.m[t][j] / w.m[t][t];
        w.col_add(j, t, -q);
        if (w.m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // remainders left; repeat with a smaller pivot

    // Divisibility: the pivot must divide every trailing entry.
    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (w.m[i][j] % w.m[t][t] != 0) {
          w.row_add(t, i, 1);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    ++t;
  }
  return SNFResult{w.m, w.u, w.v, w.u_inv, w.v_inv};
}

IntMatrix twist_lattice(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix L(num_vertices, std::vector<i64>(num_vertices, 0));
  for (auto& e : edges) {
    if (e.first == e.second) continue;
    L[e.first][e.first] += 1;
    L[e.second][e.second] += 1;
    L[e.first][e.second] -= 1;
    L[e.second][e.first] -= 1;
  }
  return L;
}

IntMatrix twist_lattice(const StableGraph& g) { return twist_lattice(g.num_vertices(), g.edges); }

// ---------------------------------------------------------------------------
// PicardGroup

PicardGroup::PicardGroup(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  IntMatrix L = twist_lattice(num_vertices_, edges_);
  snf_ = smith_normal_form(L);
  int zero_count = 0;
  for (int i = 0; i < num_vertices_; ++i) {
    i64 d = snf_.d[i][i];
    if (d == 0) {
      ++zero_count;
      free_slot_ = i;
    } else if (d > 1) {
      factors_.push_back(d);
      factor_slots_.push_back(i);
    }
  }
  if (zero_count != 1)
    throw domain_error("PicardGroup: graph must be connected (Laplacian corank != 1)");
  // The free row of U is a primitive functional killing the twist lattice,
  // hence +-(1,...,1) on a connected graph.
  i64 first = snf_.u[free_slot_][0];
  if (first != 1 && first != -1) throw internal_error("PicardGroup: free row of U is not +-1");
  for (i64 x : snf_.u[free_slot_])
    if (x != first) throw internal_error("PicardGroup: free row of U is not constant");
  free_sign_ = first;
}

PicardGroup::PicardGroup(const StableGraph& g) : PicardGroup(g.num_vertices(), g.edges) {}

PicardGroup::PicardGroup(const StableGraph& g, const SpanningSubgraph& sub)
    : PicardGroup(g.num_vertices(),
                  [&] {
                    std::vector<std::pair<int, int>> es;
                    for (int e : sub.edge_subset) es.push_back(g.edges[e]);
                    return es;
                  }()) {}

i64 PicardGroup::order() const {
  i64 o = 1;
  for (i64 f : factors_) o *= f;
  return o;
}

PicClass PicardGroup::project(const Multidegree& m) const {
  if (static_cast<int>(m.values.size()) != num_vertices_)
    throw domain_error("project: multidegree size mismatch");
  PicClass c;
  c.degree = m.total();
  for (size_t k = 0; k < factors_.size(); ++k) {
    i64 y = 0;
    for (int j = 0; j < num_vertices_; ++j) y += snf_.u[factor_slots_[k]][j] * m.values[j];
    c.torsion.push_back(mod_positive(y, factors_[k]));
  }
  return c;
}

Multidegree PicardGroup::section(const std::vector<i64>& torsion, i64 degree) const {
  if (torsion.size() != factors_.size()) throw domain_error("section: torsion size mismatch");
  std::vector<i64> y(num_vertices_, 0);
  for (size_t k = 0; k < factors_.size(); ++k) y[factor_slots_[k]] = torsion[k];
  y[free_slot_] = free_sign_ * degree;
  Multidegree m;
  m.values.assign(num_vertices_, 0);
  for (int i = 0; i < num_vertices_; ++i)
    for (int j = 0; j < num_vertices_; ++j) m.values[i] += snf_.u_inv[i][j] * y[j];
  PicClass check = project(m);
  if (check.degree != degree || check.torsion != [&] {
        std::vector<i64> t;
        for (size_t k = 0; k < factors_.size(); ++k)
          t.push_back(mod_positive(torsion[k], factors_[k]));
        return t;
      }())
    throw internal_error("section: projection round trip failed");
  return m;
}

bool PicardGroup::equivalent(const Multidegree& a, const Multidegree& b) const {
  if (a.values.size() != b.values.size()) throw domain_error("equivalent: size mismatch");
  return project(a) == project(b);
}

std::vector<PicClass> PicardGroup::torsor_classes(i64 d) const {
  std::vector<PicClass> out;
  std::vector<i64> t(factors_.size(), 0);
  while (true) {
    out.push_back(PicClass{t, d});
    int k = static_cast<int>(factors_.size()) - 1;
    while (k >= 0) {
      if (++t[k] < factors_[k]) break;
      t[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<Multidegree> PicardGroup::torsor_representatives(i64 d) const {
  std::vector<Multidegree> out;
  for (auto& c : torsor_classes(d)) out.push_back(section(c));
  return out;
}

PicClass PicardGroup::aut_action(const std::vector<int>& vertex_map, const PicClass& c) const {
  return project(section(c).permuted(vertex_map));
}

}  // namespace ujac
