#include "ujac/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"

namespace ujac {

// ---------------------------------------------------------------------------
// StableGraph basics

int StableGraph::total_genus() const {
  int s = 0;
  for (int gv : genus) s += gv;
  return s + first_betti();
}

int StableGraph::num_legs() const {
  int s = 0;
  for (auto& l : legs) s += static_cast<int>(l.size());
  return s;
}

int StableGraph::valence(int v) const {
  int d = 0;
  for (auto& e : edges) {
    if (e.first == v) ++d;
    if (e.second == v) ++d;
  }
  return d;
}

int StableGraph::degree(int v) const { return valence(v) + static_cast<int>(legs[v].size()); }

int StableGraph::leg_count(int v, int color) const {
  return static_cast<int>(std::count(legs[v].begin(), legs[v].end(), color));
}

std::vector<int> StableGraph::color_multiplicities() const {
  int maxc = 0;
  for (auto& l : legs)
    for (int c : l) maxc = std::max(maxc, c);
  std::vector<int> n(maxc, 0);
  for (auto& l : legs)
    for (int c : l) ++n[c - 1];
  return n;
}

bool StableGraph::is_connected() const {
  int m = num_vertices();
  if (m == 0) return false;
  std::vector<int> comp(m);
  for (int i = 0; i < m; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto& e : edges) comp[find(e.first)] = find(e.second);
  for (int i = 0; i < m; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

void StableGraph::validate() const {
  int m = num_vertices();
  if (m == 0) throw domain_error("StableGraph: no vertices");
  if (static_cast<int>(legs.size()) != m) throw domain_error("StableGraph: legs size mismatch");
  for (int gv : genus)
    if (gv < 0) throw domain_error("StableGraph: negative genus");
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= m || e.second >= m || e.first > e.second)
      throw domain_error("StableGraph: bad edge");
  }
  auto n = color_multiplicities();
  for (size_t k = 0; k < n.size(); ++k)
    if (n[k] == 0) throw domain_error("StableGraph: leg colors must be contiguous from 1");
  if (!is_connected()) throw domain_error("StableGraph: not connected");
  for (int v = 0; v < m; ++v)
    if (2 * genus[v] - 2 + degree(v) <= 0) throw domain_error("StableGraph: unstable vertex");
}

std::vector<int> StableGraph::leg_ids_at(int v) const {
  std::vector<int> ids;
  int base = 0;
  for (int u = 0; u < v; ++u) base += static_cast<int>(legs[u].size());
  for (size_t i = 0; i < legs[v].size(); ++i) ids.push_back(base + static_cast<int>(i));
  return ids;
}

int StableGraph::leg_vertex(int leg_id) const {
  for (int v = 0; v < num_vertices(); ++v) {
    int sz = static_cast<int>(legs[v].size());
    if (leg_id < sz) return v;
    leg_id -= sz;
  }
  throw internal_error("leg_vertex: leg id out of range");
}

int StableGraph::leg_color(int leg_id) const {
  for (int v = 0; v < num_vertices(); ++v) {
    int sz = static_cast<int>(legs[v].size());
    if (leg_id < sz) return legs[v][leg_id];
    leg_id -= sz;
  }
  throw internal_error("leg_color: leg id out of range");
}

bool StableGraph::operator<(const StableGraph& o) const {
  if (genus != o.genus) return genus < o.genus;
  if (legs != o.legs) return legs < o.legs;
  return edges < o.edges;
}

StableGraph make_stable_graph(std::vector<int> genus, std::vector<std::vector<int>> legs,
                              std::vector<std::pair<int, int>> edges) {
  for (auto& l : legs) std::sort(l.begin(), l.end());
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  StableGraph g{std::move(genus), std::move(legs), std::move(edges)};
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// SpanningSubgraph

int SpanningSubgraph::first_betti() const {
  return static_cast<int>(edge_subset.size()) - parent->num_vertices() + 1;
}

int SpanningSubgraph::excess() const {
  return parent->num_edges() - static_cast<int>(edge_subset.size());
}

bool SpanningSubgraph::contains_edge(int e) const {
  return std::binary_search(edge_subset.begin(), edge_subset.end(), e);
}

// ---------------------------------------------------------------------------
// GraphIso

int apply_half_edge(const GraphIso& f, int h) {
  int e = h / 2, side = h % 2;
  int flipped = f.edge_flip[e] ? 1 - side : side;
  return 2 * f.edge_map[e] + flipped;
}

GraphIso compose(const GraphIso& g, const GraphIso& f) {
  GraphIso r;
  r.vertex_map.resize(f.vertex_map.size());
  for (size_t i = 0; i < f.vertex_map.size(); ++i) r.vertex_map[i] = g.vertex_map[f.vertex_map[i]];
  r.edge_map.resize(f.edge_map.size());
  r.edge_flip.resize(f.edge_map.size());
  for (size_t i = 0; i < f.edge_map.size(); ++i) {
    r.edge_map[i] = g.edge_map[f.edge_map[i]];
    r.edge_flip[i] = f.edge_flip[i] != g.edge_flip[f.edge_map[i]];
  }
  r.leg_map.resize(f.leg_map.size());
  for (size_t i = 0; i < f.leg_map.size(); ++i) r.leg_map[i] = g.leg_map[f.leg_map[i]];
  return r;
}

GraphIso inverse_iso(const GraphIso& f) {
  GraphIso r;
  r.vertex_map.resize(f.vertex_map.size());
  for (size_t i = 0; i < f.vertex_map.size(); ++i) r.vertex_map[f.vertex_map[i]] = static_cast<int>(i);
  r.edge_map.resize(f.edge_map.size());
  r.edge_flip.resize(f.edge_map.size());
  for (size_t i = 0; i < f.edge_map.size(); ++i) {
    r.edge_map[f.edge_map[i]] = static_cast<int>(i);
    r.edge_flip[f.edge_map[i]] = f.edge_flip[i];
  }
  r.leg_map.resize(f.leg_map.size());
  for (size_t i = 0; i < f.leg_map.size(); ++i) r.leg_map[f.leg_map[i]] = static_cast<int>(i);
  return r;
}

GraphIso identity_iso(const StableGraph& g) {
  GraphIso r;
  r.vertex_map.resize(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) r.vertex_map[i] = i;
  r.edge_map.resize(g.num_edges());
  r.edge_flip.assign(g.num_edges(), false);
  for (int i = 0; i < g.num_edges(); ++i) r.edge_map[i] = i;
  r.leg_map.resize(g.num_legs());
  for (int i = 0; i < g.num_legs(); ++i) r.leg_map[i] = i;
  return r;
}

bool GraphIso::operator<(const GraphIso& o) const {
  if (vertex_map != o.vertex_map) return vertex_map < o.vertex_map;
  if (edge_map != o.edge_map) return edge_map < o.edge_map;
  if (edge_flip != o.edge_flip) return edge_flip < o.edge_flip;
  return leg_map < o.leg_map;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

std::map<std::pair<int, int>, std::vector<int>> edges_by_pair(const StableGraph& g) {
  std::map<std::pair<int, int>, std::vector<int>> m;
  for (int i = 0; i < g.num_edges(); ++i) m[g.edges[i]].push_back(i);
  return m;
}

// All ways to biject src onto dst (as index lists), invoking fn per choice.
void for_each_bijection(const std::vector<int>& src, std::vector<int> dst,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::sort(dst.begin(), dst.end());
  std::vector<std::pair<int, int>> assignment(src.size());
  do {
    for (size_t i = 0; i < src.size(); ++i) assignment[i] = {src[i], dst[i]};
    fn(assignment);
  } while (std::next_permutation(dst.begin(), dst.end()));
}

void extend_edges(const StableGraph& a, const StableGraph& b, const std::vector<int>& vmap,
                  const std::vector<std::vector<int>>& groups_a,
                  const std::vector<std::vector<int>>& groups_b, size_t gi, GraphIso& cur,
                  std::vector<GraphIso>& out,
                  const std::function<void(GraphIso&, std::vector<GraphIso>&)>& finish) {
  if (gi == groups_a.size()) {
    finish(cur, out);
    return;
  }
  const auto& src = groups_a[gi];
  const auto& dst = groups_b[gi];
  bool is_loop = a.edges[src[0]].first == a.edges[src[0]].second;
  for_each_bijection(src, dst, [&](const std::vector<std::pair<int, int>>& assign) {
    // Loops can additionally flip; enumerate sign patterns.
    int loops = is_loop ? static_cast<int>(assign.size()) : 0;
    for (int mask = 0; mask < (1 << loops); ++mask) {
      for (size_t i = 0; i < assign.size(); ++i) {
        auto [ea, eb] = assign[i];
        cur.edge_map[ea] = eb;
        if (is_loop) {
          cur.edge_flip[ea] = (mask >> i) & 1;
        } else {
          // Orientation forced by the endpoint images.
          cur.edge_flip[ea] = (vmap[a.edges[ea].first] != b.edges[eb].first);
        }
      }
      extend_edges(a, b, vmap, groups_a, groups_b, gi + 1, cur, out, finish);
    }
  });
}

void extend_legs(const StableGraph& a, const StableGraph& b, const std::vector<int>& vmap,
                 GraphIso& cur, std::vector<GraphIso>& out) {
  // Per (vertex, color) the legs map bijectively; enumerate all choices.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
  for (int v = 0; v < a.num_vertices(); ++v) {
    auto ids_a = a.leg_ids_at(v);
    auto ids_b = b.leg_ids_at(vmap[v]);
    std::map<int, std::vector<int>> by_color_a, by_color_b;
    for (int id : ids_a) by_color_a[a.leg_color(id)].push_back(id);
    for (int id : ids_b) by_color_b[b.leg_color(id)].push_back(id);
    if (by_color_a.size() != by_color_b.size()) return;
    for (auto& [c, list_a] : by_color_a) {
      auto it = by_color_b.find(c);
      if (it == by_color_b.end() || it->second.size() != list_a.size()) return;
      groups.emplace_back(list_a, it->second);
    }
  }
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      out.push_back(cur);
      return;
    }
    for_each_bijection(groups[gi].first, groups[gi].second,
                       [&](const std::vector<std::pair<int, int>>& assign) {
                         for (auto& [la, lb] : assign) cur.leg_map[la] = lb;
                         rec(gi + 1);
                       });
  };
  rec(0);
}

}  // namespace

std::vector<GraphIso> find_isomorphisms(const StableGraph& a, const StableGraph& b) {
  std::vector<GraphIso> out;
  int m = a.num_vertices();
  if (m != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_legs() != b.num_legs())
    return out;
  auto pairs_a = edges_by_pair(a);
  auto pairs_b = edges_by_pair(b);
  std::vector<int> vmap(m, -1);
  std::vector<bool> used(m, false);
  std::function<void()> try_complete = [&]() {
    // Adjacency multiplicities must match under vmap.
    std::vector<std::vector<int>> groups_a, groups_b;
    for (auto& [p, list] : pairs_a) {
      auto q = std::make_pair(vmap[p.first], vmap[p.second]);
      if (q.first > q.second) std::swap(q.first, q.second);
      auto it = pairs_b.find(q);
      if (it == pairs_b.end() || it->second.size() != list.size()) return;
      groups_a.push_back(list);
      groups_b.push_back(it->second);
    }
    if (pairs_a.size() != pairs_b.size()) return;
    GraphIso cur;
    cur.vertex_map = vmap;
    cur.edge_map.assign(a.num_edges(), -1);
    cur.edge_flip.assign(a.num_edges(), false);
    cur.leg_map.assign(a.num_legs(), -1);
    extend_edges(a, b, vmap, groups_a, groups_b, 0, cur, out,
                 [&](GraphIso& c, std::vector<GraphIso>& res) { extend_legs(a, b, vmap, c, res); });
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == m) {
      try_complete();
      return;
    }
    for (int w = 0; w < m; ++w) {
      if (used[w]) continue;
      if (a.genus[v] != b.genus[w]) continue;
      if (a.legs[v] != b.legs[w]) continue;
      if (a.degree(v) != b.degree(w)) continue;
      used[w] = true;
      vmap[v] = w;
      rec(v + 1);
      used[w] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphIso> automorphism_group(const StableGraph& g,
                                         const std::optional<SpanningSubgraph>& sub) {
  auto all = find_isomorphisms(g, g);
  if (!sub) return all;
  std::vector<GraphIso> kept;
  for (auto& f : all) {
    bool ok = true;
    for (int e : sub->edge_subset)
      if (!sub->contains_edge(f.edge_map[e])) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(f);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

std::vector<int> encode_with_order(const StableGraph& g, const std::vector<int>& order) {
  // order[i] = old vertex placed at new position i.
  int m = g.num_vertices();
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) inv[order[i]] = i;
  std::vector<int> key;
  for (int i = 0; i < m; ++i) key.push_back(g.genus[order[i]]);
  for (int i = 0; i < m; ++i) {
    key.push_back(static_cast<int>(g.legs[order[i]].size()));
    for (int c : g.legs[order[i]]) key.push_back(c);
  }
  std::vector<std::vector<int>> mult(m, std::vector<int>(m, 0));
  for (auto& e : g.edges) {
    int u = inv[e.first], v = inv[e.second];
    if (u > v) std::swap(u, v);
    ++mult[u][v];
  }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) key.push_back(mult[i][j]);
  return key;
}

}  // namespace

GraphIso canonical_iso(const StableGraph& g) {
  int m = g.num_vertices();
  std::vector<int> order(m), best_order;
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<int> best_key;
  std::vector<int> perm = order;
  std::sort(perm.begin(), perm.end());
  do {
    auto key = encode_with_order(g, perm);
    if (best_key.empty() || key < best_key) {
      best_key = key;
      best_order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  int mm = m;
  std::vector<int> vmap(mm);
  for (int i = 0; i < mm; ++i) vmap[best_order[i]] = i;

  // Rebuild the canonical graph.
  std::vector<int> genus(mm);
  std::vector<std::vector<int>> legs(mm);
  for (int i = 0; i < mm; ++i) {
    genus[i] = g.genus[best_order[i]];
    legs[i] = g.legs[best_order[i]];
  }
  std::map<std::pair<int, int>, std::vector<int>> old_by_new_pair;
  for (int e = 0; e < g.num_edges(); ++e) {
    int u = vmap[g.edges[e].first], v = vmap[g.edges[e].second];
    if (u > v) std::swap(u, v);
    old_by_new_pair[{u, v}].push_back(e);
  }
  std::vector<std::pair<int, int>> edges;
  GraphIso f;
  f.vertex_map = vmap;
  f.edge_map.assign(g.num_edges(), -1);
  f.edge_flip.assign(g.num_edges(), false);
  for (auto& [p, olds] : old_by_new_pair) {
    for (int old_e : olds) {
      f.edge_map[old_e] = static_cast<int>(edges.size());
      f.edge_flip[old_e] = (vmap[g.edges[old_e].first] != p.first) && (p.first != p.second);
      edges.push_back(p);
    }
  }
  // Legs: within each vertex the sorted color list is preserved, so legs map
  // in order.
  f.leg_map.assign(g.num_legs(), -1);
  StableGraph canon{genus, legs, edges};
  for (int v = 0; v < mm; ++v) {
    auto old_ids = g.leg_ids_at(v);
    auto new_ids = canon.leg_ids_at(vmap[v]);
    for (size_t i = 0; i < old_ids.size(); ++i) f.leg_map[old_ids[i]] = new_ids[i];
  }
  return f;
}

StableGraph canonical_form(const StableGraph& g) {
  GraphIso f = canonical_iso(g);
  int m = g.num_vertices();
  std::vector<int> genus(m);
  std::vector<std::vector<int>> legs(m);
  for (int v = 0; v < m; ++v) {
    genus[f.vertex_map[v]] = g.genus[v];
    legs[f.vertex_map[v]] = g.legs[v];
  }
  std::vector<std::pair<int, int>> edges(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    int u = f.vertex_map[g.edges[e].first], v = f.vertex_map[g.edges[e].second];
    if (u > v) std::swap(u, v);
    edges[f.edge_map[e]] = {u, v};
  }
  return StableGraph{std::move(genus), std::move(legs), std::move(edges)};
}

bool are_isomorphic(const StableGraph& a, const StableGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void compositions(int total, int slots, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (slots == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, slots - 1, cur, fn);
    cur.pop_back();
  }
}

void genus_vectors(int remaining, int slots, int max_first, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& fn) {
  if (slots == 0) {
    fn(cur);
    return;
  }
  for (int x = std::min(remaining, max_first); x >= 0; --x) {
    cur.push_back(x);
    genus_vectors(remaining - x, slots - 1, x, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int g, const std::vector<int>& colors) {
  int n = 0;
  for (int c : colors) n += c;
  if (2 * g - 2 + n <= 0) throw domain_error("enumerate_stable_graphs: unstable type");
  std::set<StableGraph> found;
  int vmax = 2 * g - 2 + n;
  for (int m = 1; m <= vmax; ++m) {
    std::vector<std::pair<int, int>> slots;  // unordered vertex pairs incl. loops
    for (int u = 0; u < m; ++u)
      for (int v = u; v < m; ++v) slots.emplace_back(u, v);
    std::vector<int> gv;
    genus_vectors(g, m, g, gv, [&](const std::vector<int>& genus) {
      int sum = 0;
      for (int x : genus) sum += x;
      int b1 = g - sum;
      int num_edges = b1 + m - 1;
      if (num_edges < 0) return;
      std::vector<int> ec;
      compositions(num_edges, static_cast<int>(slots.size()), ec, [&](const std::vector<int>& edge_counts) {
        std::vector<std::pair<int, int>> edges;
        for (size_t s = 0; s < slots.size(); ++s)
          for (int i = 0; i < edge_counts[s]; ++i) edges.push_back(slots[s]);
        // Distribute legs color by color.
        std::vector<std::vector<int>> legs(m);
        std::function<void(size_t)> place_color = [&](size_t k) {
          if (k == colors.size()) {
            StableGraph cand{genus, legs, edges};
            if (!cand.is_connected()) return;
            for (int v = 0; v < m; ++v)
              if (2 * cand.genus[v] - 2 + cand.degree(v) <= 0) return;
            found.insert(canonical_form(cand));
            return;
          }
          std::vector<int> lc;
          compositions(colors[k], m, lc, [&](const std::vector<int>& leg_counts) {
            for (int v = 0; v < m; ++v)
              for (int i = 0; i < leg_counts[v]; ++i) legs[v].push_back(static_cast<int>(k) + 1);
            place_color(k + 1);
            for (int v = 0; v < m; ++v)
              for (int i = 0; i < leg_counts[v]; ++i) legs[v].pop_back();
          });
        };
        place_color(0);
      });
    });
  }
  return std::vector<StableGraph>(found.begin(), found.end());
}

std::vector<SpanningSubgraph> connected_spanning_subgraphs(const StableGraph& g) {
  int ne = g.num_edges();
  int m = g.num_vertices();
  std::vector<SpanningSubgraph> out;
  for (int mask = 0; mask < (1 << ne); ++mask) {
    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int e = 0; e < ne; ++e)
      if ((mask >> e) & 1) comp[find(g.edges[e].first)] = find(g.edges[e].second);
    bool connected = true;
    for (int i = 0; i < m; ++i)
      if (find(i) != find(0)) {
        connected = false;
        break;
      }
    if (!connected) continue;
    SpanningSubgraph s;
    s.parent = &g;
    for (int e = 0; e < ne; ++e)
      if ((mask >> e) & 1) s.edge_subset.push_back(e);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SpanningSubgraph& a, const SpanningSubgraph& b) {
    if (a.edge_subset.size() != b.edge_subset.size())
      return a.edge_subset.size() < b.edge_subset.size();
    return a.edge_subset < b.edge_subset;
  });
  return out;
}

StableGraph cut_graph(const StableGraph& g, const SpanningSubgraph& sub) {
  if (sub.parent != &g) throw domain_error("cut_graph: subgraph belongs to a different graph");
  int e_cut = sub.excess();
  std::vector<int> genus = g.genus;
  std::vector<std::vector<int>> legs = g.legs;
  std::vector<std::pair<int, int>> edges;
  int fresh = static_cast<int>(g.color_multiplicities().size()) + 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (sub.contains_edge(e)) {
      edges.push_back(g.edges[e]);
    } else {
      legs[g.edges[e].first].push_back(fresh);
      legs[g.edges[e].second].push_back(fresh);
    }
  }
  (void)e_cut;
  return make_stable_graph(std::move(genus), std::move(legs), std::move(edges));
}

SpanningSubgraph GraphPair::subgraph() const {
  SpanningSubgraph s;
  s.parent = &graph;
  s.edge_subset = sub_edges;
  return s;
}

std::vector<GraphPair> enumerate_pairs(int g, const std::vector<int>& colors) {
  std::vector<GraphPair> out;
  for (auto& graph : enumerate_stable_graphs(g, colors)) {
    auto subs = connected_spanning_subgraphs(graph);
    auto auts = automorphism_group(graph);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> reps;
    for (auto& s : subs) {
      if (seen.count(s.edge_subset)) continue;
      // Collect the Aut-orbit and mark all members.
      std::vector<int> best = s.edge_subset;
      for (auto& f : auts) {
        std::vector<int> image;
        for (int e : s.edge_subset) image.push_back(f.edge_map[e]);
        std::sort(image.begin(), image.end());
        seen.insert(image);
        if (image < best) best = image;
      }
      reps.push_back(best);
    }
    for (auto& r : reps) {
      GraphPair p;
      p.graph = graph;
      p.sub_edges = r;
      out.push_back(std::move(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

std::string graph_to_json(const StableGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"genus", g.genus[v]}, {"legs", g.legs[v]}});
  j["edges"] = nlohmann::json::array();
  for (auto& e : g.edges) j["edges"].push_back({e.first, e.second});
  return j.dump();
}

StableGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw domain_error(std::string("graph_from_json: parse error: ") + ex.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw domain_error("graph_from_json: missing vertices");
  std::vector<int> genus;
  std::vector<std::vector<int>> legs;
  for (auto& v : j["vertices"]) {
    genus.push_back(v.at("genus").get<int>());
    legs.push_back(v.value("legs", std::vector<int>{}));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j.value("edges", nlohmann::json::array())) {
    if (!e.is_array() || e.size() != 2) throw domain_error("graph_from_json: bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_stable_graph(std::move(genus), std::move(legs), std::move(edges));
}

}  // namespace ujac
