#include "ujac/assembly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "json.hpp"

namespace ujac {

namespace testing {
bool mutate_torus_trace_sign = false;
}

LambdaClass identity_lambda_class(const std::vector<int>& colors) {
  LambdaClass c;
  for (int n : colors) c.push_back(Partition(n, 1));
  return c;
}

std::string lambda_class_str(const LambdaClass& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += "|";
    for (size_t j = 0; j < c[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(c[i][j]);
    }
  }
  return s;
}

i64 lambda_centralizer_order(const LambdaClass& c) {
  i64 z = 1;
  for (auto& mu : c) z *= z_of(mu);
  return z;
}

// ---------------------------------------------------------------------------
// Torus trace

namespace {

// Integer inverse of a unimodular matrix via the adjugate.
IntMatrix unimodular_inverse(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  i64 det = matrix_determinant(a);
  if (det != 1 && det != -1) throw internal_error("unimodular_inverse: determinant is not a unit");
  IntMatrix inv(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<i64> row;
        for (int s = 0; s < n; ++s)
          if (s != i) row.push_back(a[r][s]);
        minor.push_back(std::move(row));
      }
      i64 cof = matrix_determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * det;  // det = +-1
    }
  return inv;
}

// Sum of principal k x k minors = trace of the k-th exterior power.
i64 exterior_trace(const IntMatrix& a, int k) {
  int n = static_cast<int>(a.size());
  if (k == 0) return 1;
  std::vector<int> idx(k);
  std::function<i64(int, int)> rec = [&](int pos, int start) -> i64 {
    if (pos == k) {
      IntMatrix sub(k, std::vector<i64>(k));
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) sub[r][s] = a[idx[r]][idx[s]];
      return matrix_determinant(sub);
    }
    i64 total = 0;
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      total += rec(pos + 1, i + 1);
    }
    return total;
  };
  return rec(0, 0);
}

// Oriented edge sign of an isomorphism: +1 when the first half-edge of e maps
// to the first half-edge of its image.
int edge_sign(const GraphIso& f, int e) { return (apply_half_edge(f, 2 * e) % 2 == 0) ? 1 : -1; }

}  // namespace

MotiveClass torus_trace(const StableGraph& g, const SpanningSubgraph& sub, const GraphIso& f) {
  for (int e : sub.edge_subset)
    if (!sub.contains_edge(f.edge_map[e]))
      throw domain_error("torus_trace: automorphism does not preserve the subgraph");
  int b = sub.first_betti();
  if (b == 0) return MotiveClass(1);

  // Spanning tree of the subgraph; the remaining subgraph edges are chords.
  int m = g.num_vertices();
  std::vector<int> comp(m);
  for (int i = 0; i < m; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  std::vector<int> tree, chords;
  for (int e : sub.edge_subset) {
    int a = find(g.edges[e].first), bb = find(g.edges[e].second);
    if (a != bb) {
      comp[a] = bb;
      tree.push_back(e);
    } else {
      chords.push_back(e);
    }
  }
  if (static_cast<int>(chords.size()) != b) throw internal_error("torus_trace: chord count != b1");

  // Fundamental cycle of each chord as a signed edge vector. Tree paths via
  // BFS parent pointers.
  std::vector<std::vector<std::pair<int, int>>> adj(m);  // (edge, neighbor)
  for (int e : tree) {
    adj[g.edges[e].first].emplace_back(e, g.edges[e].second);
    adj[g.edges[e].second].emplace_back(e, g.edges[e].first);
  }
  auto tree_path = [&](int from, int to) {
    // Signed edges of the tree path from -> to; edge e = (u,v) counts +1 when
    // traversed u -> v.
    std::vector<std::pair<int, int>> parent(m, {-1, -1});  // (edge, prev vertex)
    std::vector<bool> seen(m, false);
    std::vector<int> queue{from};
    seen[from] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (u == to) break;
      for (auto& [e, w] : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = {e, u};
          queue.push_back(w);
        }
    }
    std::vector<std::pair<int, i64>> path;  // (edge, sign)
    int cur = to;
    while (cur != from) {
      auto [e, prev] = parent[cur];
      if (e < 0) throw internal_error("torus_trace: tree path not found");
      path.emplace_back(e, g.edges[e].first == prev ? 1 : -1);
      cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  int ne = g.num_edges();
  std::vector<std::vector<i64>> cycles(b, std::vector<i64>(ne, 0));
  for (int i = 0; i < b; ++i) {
    int c = chords[i];
    cycles[i][c] += 1;
    for (auto& [e, s] : tree_path(g.edges[c].second, g.edges[c].first)) cycles[i][e] += s;
  }

  // Matrix A of the action on the cycle basis: image cycles read off on the
  // chord coordinates.
  IntMatrix a(b, std::vector<i64>(b, 0));
  for (int j = 0; j < b; ++j) {
    std::vector<i64> image(ne, 0);
    for (int e = 0; e < ne; ++e)
      if (cycles[j][e] != 0) image[f.edge_map[e]] += edge_sign(f, e) * cycles[j][e];
    for (int i = 0; i < b; ++i) a[i][j] = image[chords[i]];
  }

  IntMatrix ainv = unimodular_inverse(a);
  MotiveClass out;
  for (int j = 0; j <= b; ++j) {
    i64 t = exterior_trace(ainv, b - j);
    if ((b - j) % 2 == 1) t = -t;
    if (t != 0) out += MotiveClass::lefschetz(j) * t;
  }
  if (testing::mutate_torus_trace_sign) out = -out;
  return out;
}

i64 pic_trace(const PicardGroup& pic, i64 degree, const std::vector<int>& vertex_map) {
  i64 fixed = 0;
  for (auto& c : pic.torsor_classes(degree))
    if (pic.aut_action(vertex_map, c) == c) ++fixed;
  return fixed;
}

// ---------------------------------------------------------------------------
// Vertex trace

namespace {

GraphIso iso_power(const StableGraph& g, const GraphIso& f, int r) {
  GraphIso p = identity_iso(g);
  for (int i = 0; i < r; ++i) p = compose(f, p);
  return p;
}

// Markings of v: legs first (in leg-id order), then half-edges (ascending).
std::vector<int> markings_at(const StableGraph& g, int v) {
  std::vector<int> m;
  for (int id : g.leg_ids_at(v)) m.push_back(~id);  // legs encoded as ~id
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edges[e].first == v) m.push_back(2 * e);
    if (g.edges[e].second == v) m.push_back(2 * e + 1);
  }
  return m;
}

}  // namespace

MotiveClass vertex_trace(const StableGraph& g, const GraphIso& f, const InteriorProvider& provider) {
  MotiveClass out(1);
  int m = g.num_vertices();
  std::vector<bool> seen(m, false);
  for (int v = 0; v < m; ++v) {
    if (seen[v]) continue;
    int r = 0, u = v;
    do {
      seen[u] = true;
      u = f.vertex_map[u];
      ++r;
    } while (u != v);
    GraphIso ret = iso_power(g, f, r);  // fixes v
    auto marks = markings_at(g, v);
    auto index_of = [&](int mark) {
      for (size_t i = 0; i < marks.size(); ++i)
        if (marks[i] == mark) return static_cast<int>(i);
      throw internal_error("vertex_trace: marking not found");
    };
    std::vector<int> perm(marks.size());
    for (size_t i = 0; i < marks.size(); ++i) {
      int mk = marks[i];
      int image = mk < 0 ? ~ret.leg_map[~mk] : apply_half_edge(ret, mk);
      perm[i] = index_of(image);
    }
    Partition nu = cycle_type(perm);
    MotiveClass ch = provider.interior(g.genus[v], static_cast<int>(marks.size())).character_at(nu);
    out = out * adams(r, ch);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stratum contribution

StratumContribution stratum_class(const StableGraph& g, const SpanningSubgraph& sub, i64 d,
                                  const InteriorProvider& provider) {
  StratumContribution out;
  out.graph = g;
  out.sub_edges = sub.edge_subset;
  out.torus_rank = sub.first_betti();

  PicardGroup pic(g, sub);
  out.torsor_size = pic.order();
  i64 torsor_degree = d - sub.excess();

  auto auts = automorphism_group(g, sub);
  out.aut_order = static_cast<i64>(auts.size());
  auto colors = g.color_multiplicities();

  // Legs of each color, for reading off the induced S_lambda class.
  std::vector<std::vector<int>> legs_by_color(colors.size());
  int total_legs = g.num_legs();
  for (int id = 0; id < total_legs; ++id) legs_by_color[g.leg_color(id) - 1].push_back(id);

  std::map<LambdaClass, MotiveClass> sums;
  for (auto& f : auts) {
    LambdaClass cls;
    for (auto& ids : legs_by_color) {
      std::vector<int> perm(ids.size());
      for (size_t i = 0; i < ids.size(); ++i) {
        int image = f.leg_map[ids[i]];
        int pos = -1;
        for (size_t j = 0; j < ids.size(); ++j)
          if (ids[j] == image) pos = static_cast<int>(j);
        if (pos < 0) throw internal_error("stratum_class: leg image leaves its color class");
        perm[i] = pos;
      }
      cls.push_back(cycle_type(perm));
    }
    TraceLogEntry entry;
    entry.leg_class = cls;
    entry.torus = torus_trace(g, sub, f);
    entry.pic_fixed = pic_trace(pic, torsor_degree, f.vertex_map);
    entry.vertex = vertex_trace(g, f, provider);
    entry.total = entry.torus * entry.vertex * entry.pic_fixed;
    sums[cls] += entry.total;
    out.log.push_back(std::move(entry));
  }

  // Row at tau: |C_{S_lambda}(tau)| / |G| * sum over automorphisms mapping to
  // the class of tau. Group averages must clear their denominators.
  for (auto& [cls, sum] : sums) {
    MotiveClass row = (sum * lambda_centralizer_order(cls)).divide_exact(out.aut_order);
    if (!row.is_zero()) out.table[cls] = row;
  }
  LambdaClass id_cls = identity_lambda_class(colors);
  auto it = out.table.find(id_cls);
  out.motive = it == out.table.end() ? MotiveClass() : it->second;
  return out;
}

// ---------------------------------------------------------------------------
// Global sums

ChiResult chi_compactified(int g, const std::vector<int>& colors, i64 d,
                           const InteriorProvider& provider, int jobs) {
  if (!degree_admissible(g, colors, d))
    throw domain_error("chi_compactified: degree fails the gcd admissibility test");
  ChiResult r;
  r.g = g;
  r.colors = colors;
  r.degree = d;

  auto pairs = enumerate_pairs(g, colors);
  std::vector<StratumContribution> strata(pairs.size());
  auto worker = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < pairs.size(); i += step) {
      SpanningSubgraph sub = pairs[i].subgraph();
      strata[i] = stratum_class(pairs[i].graph, sub, d, provider);
    }
  };
  int width = std::max(1, jobs);
  if (width == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < width; ++t) threads.emplace_back(worker, t, width);
    for (auto& t : threads) t.join();
  }

  // Deterministic reduction in canonical pair order.
  for (auto& s : strata) {
    for (auto& [cls, row] : s.table) {
      auto it = r.table.find(cls);
      if (it == r.table.end())
        r.table.emplace(cls, row);
      else
        it->second += row;
    }
  }
  r.strata = std::move(strata);
  LambdaClass id_cls = identity_lambda_class(colors);
  auto it = r.table.find(id_cls);
  r.total = it == r.table.end() ? MotiveClass() : it->second;
  r.e_poly = e_polynomial(r.total);
  return r;
}

Rational orbifold_euler(int g, const std::vector<int>& colors, i64 d) {
  (void)d;  // the torsor size is degree-independent
  Rational total(0);
  for (auto& pair : enumerate_pairs(g, colors)) {
    SpanningSubgraph sub = pair.subgraph();
    if (sub.first_betti() != 0) continue;  // positive torus rank kills chi
    bool rational_vertices = true;
    for (int gv : pair.graph.genus)
      if (gv > 0) {
        rational_vertices = false;
        break;
      }
    if (!rational_vertices) continue;  // abelian factor kills chi
    PicardGroup pic(pair.graph, sub);
    i64 numer = pic.order();
    for (int v = 0; v < pair.graph.num_vertices(); ++v) {
      int m = pair.graph.degree(v);
      i64 chi = factorial(m - 3);
      if ((m - 3) % 2 == 1) chi = -chi;
      numer *= chi;
    }
    i64 auts = static_cast<i64>(automorphism_group(pair.graph, sub).size());
    total += Rational(numer, auts);
  }
  return total;
}

Rational chi_mbar0(int m) {
  if (m < 3) throw domain_error("chi_mbar0: needs m >= 3");
  std::vector<int> colors(m, 1);
  Rational r = orbifold_euler(0, colors);
  if (r.den != 1) throw internal_error("chi_mbar0: non-integer Euler characteristic");
  return r;
}

Rational wood_rhs(int g, int n) {
  if (2 * g - 2 + n <= 0) throw domain_error("wood_rhs: unstable type");
  i64 denom = factorial(g);
  for (int i = 0; i < g; ++i) denom *= 2;
  return chi_mbar0(2 * g + n) * Rational(1, denom);
}

// ---------------------------------------------------------------------------
// Output rendering

namespace {

nlohmann::json epoly_json(const EPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [k, c] : p.coeff) arr.push_back({{"u", k.first}, {"v", k.second}, {"c", c}});
  return arr;
}

std::vector<std::string> symbol_list(const MotiveClass& x) {
  std::set<std::string> syms;
  for (auto& [m, c] : x.terms())
    if (m.s_weight > 0) {
      std::string s = "S" + std::to_string(m.s_weight);
      if (m.s_twist > 1) s += "@" + std::to_string(m.s_twist);
      syms.insert(s);
    }
  return std::vector<std::string>(syms.begin(), syms.end());
}

}  // namespace

std::string chi_result_to_json(const ChiResult& r) {
  nlohmann::json j;
  j["type"] = {r.g, r.colors};
  j["degree"] = r.degree;
  j["e_polynomial"] = epoly_json(r.e_poly);
  j["symbols"] = symbol_list(r.total);
  bool equivariant = false;
  for (int c : r.colors)
    if (c > 1) equivariant = true;
  if (equivariant) {
    nlohmann::json table;
    for (auto& [cls, row] : r.table)
      table[lambda_class_str(cls)] = epoly_json(e_polynomial(row));
    j["character_table"] = table;
    // Irreducible multiplicities for a single merged block.
    if (r.colors.size() == 1) {
      EquivariantClass F(r.colors[0]);
      for (auto& [cls, row] : r.table) F.set_character(cls[0], row);
      nlohmann::json irr;
      for (auto& [lambda, mult] : schur_multiplicities(F))
        irr[partition_str(lambda)] = epoly_json(e_polynomial(mult));
      j["irreducible_multiplicities"] = irr;
    }
  }
  j["strata"] = nlohmann::json::array();
  for (auto& s : r.strata) {
    nlohmann::json js;
    js["graph"] = nlohmann::json::parse(graph_to_json(s.graph));
    js["subgraph"] = s.sub_edges;
    js["aut_order"] = s.aut_order;
    js["torus_rank"] = s.torus_rank;
    js["torsor_size"] = s.torsor_size;
    js["e_polynomial"] = epoly_json(e_polynomial(s.motive));
    j["strata"].push_back(js);
  }
  return j.dump();
}

std::string chi_result_to_csv(const ChiResult& r) {
  std::string out = "u,v,c\n";
  for (auto& [k, c] : r.e_poly.coeff)
    out += std::to_string(k.first) + "," + std::to_string(k.second) + "," + std::to_string(c) + "\n";
  return out;
}

std::string chi_result_to_text(const ChiResult& r) {
  std::string out = "type (" + std::to_string(r.g) + "; ";
  for (size_t i = 0; i < r.colors.size(); ++i)
    out += (i ? "," : "") + std::to_string(r.colors[i]);
  out += ") degree " + std::to_string(r.degree) + "\n";
  out += "E = " + r.e_poly.str_q() + "\n";
  bool equivariant = false;
  for (int c : r.colors)
    if (c > 1) equivariant = true;
  if (equivariant) {
    for (auto& [cls, row] : r.table)
      out += "  class " + lambda_class_str(cls) + ": " + e_polynomial(row).str_q() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independence verification

std::string IndependenceReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["precondition_failed"] = precondition_failed;
  j["degrees"] = degrees;
  j["notes"] = notes;
  return j.dump();
}

IndependenceReport verify_independence(int g, const std::vector<int>& colors,
                                       const std::vector<i64>& degrees,
                                       const InteriorProvider& provider) {
  IndependenceReport rep;
  rep.degrees = degrees;
  for (i64 d : degrees)
    if (!degree_admissible(g, colors, d)) {
      rep.precondition_failed = true;
      rep.notes.push_back("degree " + std::to_string(d) + " is inadmissible (gcd test)");
      return rep;
    }
  if (degrees.empty()) {
    rep.notes.push_back("no degrees given");
    return rep;
  }
  for (i64 d : degrees) rep.results.push_back(chi_compactified(g, colors, d, provider));

  bool ok = true;
  const ChiResult& base = rep.results.front();
  for (size_t i = 1; i < rep.results.size(); ++i) {
    const ChiResult& other = rep.results[i];
    if (!(other.table == base.table)) {
      ok = false;
      rep.notes.push_back("class tables differ between degrees " + std::to_string(base.degree) +
                          " and " + std::to_string(other.degree));
    }
    // Stratum-by-stratum: pairs are degree-independent, so strata align.
    for (size_t s = 0; s < base.strata.size(); ++s) {
      if (!(base.strata[s].table == other.strata[s].table)) {
        ok = false;
        rep.notes.push_back("stratum " + std::to_string(s) + " differs between degrees");
      }
      // The matching is witnessed by the combinatorial-claim bijection.
      SpanningSubgraph sub;
      sub.parent = &base.strata[s].graph;
      sub.edge_subset = base.strata[s].sub_edges;
      ClaimReport claim =
          verify_combinatorial_claim(base.strata[s].graph, sub, base.degree, other.degree);
      if (!claim.admissible || !claim.verified) {
        ok = false;
        rep.notes.push_back("combinatorial claim fails on stratum " + std::to_string(s));
      }
    }
  }
  rep.pass = ok;
  return rep;
}

}  // namespace ujac
