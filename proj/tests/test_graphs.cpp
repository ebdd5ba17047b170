#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ujac/stable_graph.hpp"

using namespace ujac;

namespace {

StableGraph theta() {
  return make_stable_graph({0, 0}, {{}, {}}, {{0, 1}, {0, 1}, {0, 1}});
}

StableGraph loop_with_leg() { return make_stable_graph({0}, {{1}}, {{0, 0}}); }

StableGraph two_banana_colored() {
  return make_stable_graph({0, 0}, {{1}, {2}}, {{0, 1}, {0, 1}});
}

SpanningSubgraph sub_of(const StableGraph& g, std::vector<int> edges) {
  SpanningSubgraph s;
  s.parent = &g;
  s.edge_subset = std::move(edges);
  return s;
}

}  // namespace

TEST_CASE("validation rejects bad graphs") {
  CHECK_THROWS_AS(make_stable_graph({0}, {{}}, {}), domain_error);            // unstable vertex
  CHECK_THROWS_AS(make_stable_graph({0, 1}, {{}, {}}, {}), domain_error);     // disconnected
  CHECK_THROWS_AS(make_stable_graph({1}, {{2}}, {}), domain_error);           // color gap
  CHECK_THROWS_AS(make_stable_graph({-1}, {{1, 1, 1}}, {}), domain_error);    // negative genus
}

TEST_CASE("basic graph quantities") {
  StableGraph t = theta();
  CHECK(t.total_genus() == 2);
  CHECK(t.first_betti() == 2);
  CHECK(t.valence(0) == 3);
  StableGraph l = loop_with_leg();
  CHECK(l.total_genus() == 1);
  CHECK(l.valence(0) == 2);
  CHECK(l.degree(0) == 3);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_stable_graphs(0, {1, 1, 1}).size() == 1);
  CHECK(enumerate_stable_graphs(1, {1}).size() == 2);
  CHECK(enumerate_stable_graphs(2, {}).size() == 7);
  CHECK_THROWS_AS(enumerate_stable_graphs(0, {1, 1}), domain_error);
  CHECK_THROWS_AS(enumerate_stable_graphs(1, {}), domain_error);
}

TEST_CASE("genus identity holds for every enumerated graph") {
  for (auto& [g, colors] : std::vector<std::pair<int, std::vector<int>>>{
           {0, {1, 1, 1, 1}}, {1, {1, 1}}, {1, {2}}, {2, {}}, {2, {1}}}) {
    for (auto& graph : enumerate_stable_graphs(g, colors)) {
      int sum = 0;
      for (int gv : graph.genus) sum += gv;
      CHECK(sum + graph.first_betti() == g);
      auto n = graph.color_multiplicities();
      std::vector<int> expect = colors;
      CHECK(n == expect);
    }
  }
}

TEST_CASE("canonical form: idempotent, and equality detects isomorphism") {
  std::vector<StableGraph> catalog;
  for (auto& [g, colors] : std::vector<std::pair<int, std::vector<int>>>{
           {1, {1}}, {1, {2}}, {1, {1, 1}}, {2, {}}, {2, {1}}})
    for (auto& graph : enumerate_stable_graphs(g, colors))
      if (graph.num_edges() <= 4) catalog.push_back(graph);

  for (auto& g : catalog) CHECK(canonical_form(canonical_form(g)) == canonical_form(g));

  // Pairwise: canonical forms agree iff a brute-force half-edge isomorphism
  // exists.
  for (auto& a : catalog)
    for (auto& b : catalog) {
      bool canon_equal = canonical_form(a) == canonical_form(b);
      bool iso = !find_isomorphisms(a, b).empty();
      CHECK(canon_equal == iso);
    }

  // Relabeled copies are recognized.
  StableGraph g = make_stable_graph({1, 0}, {{}, {1, 1}}, {{0, 1}});
  StableGraph h = make_stable_graph({0, 1}, {{1, 1}, {}}, {{0, 1}});
  CHECK(are_isomorphic(g, h));
  CHECK(canonical_form(g) == canonical_form(h));

  // canonical_iso really is an isomorphism onto the canonical form.
  for (auto& graph : catalog) {
    GraphIso f = canonical_iso(graph);
    auto isos = find_isomorphisms(graph, canonical_form(graph));
    CHECK(std::find(isos.begin(), isos.end(), f) != isos.end());
  }
}

TEST_CASE("connected spanning subgraphs") {
  StableGraph point = make_stable_graph({2}, {{}}, {});
  auto s0 = connected_spanning_subgraphs(point);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].edge_subset.empty());

  StableGraph l = loop_with_leg();
  CHECK(connected_spanning_subgraphs(l).size() == 2);

  StableGraph t = theta();
  auto subs = connected_spanning_subgraphs(t);
  CHECK(subs.size() == 7);  // all nonempty subsets of three parallel edges

  // Subsets with b1 = 0 are exactly the spanning trees.
  for (auto& [g, colors] : std::vector<std::pair<int, std::vector<int>>>{{2, {}}, {1, {1, 1}}}) {
    for (auto& graph : enumerate_stable_graphs(g, colors)) {
      auto all = connected_spanning_subgraphs(graph);
      i64 trees = 0;
      for (auto& s : all)
        if (s.first_betti() == 0) ++trees;
      CHECK(trees == oracle::count_spanning_trees(graph.num_vertices(), graph.edges));
      CHECK(static_cast<i64>(all.size()) >= trees);
    }
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(theta()).size() == 12);
  CHECK(automorphism_group(loop_with_leg()).size() == 2);
  CHECK(automorphism_group(two_banana_colored()).size() == 2);

  // Same-color legs are interchangeable.
  StableGraph v12 = make_stable_graph({1}, {{1, 1}}, {});
  CHECK(automorphism_group(v12).size() == 2);

  // Closure under composition and inverse, identity present.
  for (auto& g : {theta(), loop_with_leg(), two_banana_colored()}) {
    auto auts = automorphism_group(g);
    std::set<GraphIso> set(auts.begin(), auts.end());
    CHECK(set.count(identity_iso(g)) == 1);
    for (auto& f1 : auts) {
      CHECK(set.count(inverse_iso(f1)) == 1);
      for (auto& f2 : auts) CHECK(set.count(compose(f1, f2)) == 1);
    }
  }
}

TEST_CASE("subgraph-filtered automorphisms") {
  StableGraph t = theta();
  auto full = automorphism_group(t, sub_of(t, {0, 1, 2}));
  CHECK(full.size() == 12);
  auto partial = automorphism_group(t, sub_of(t, {0, 1}));
  // Edge 2 must be fixed; the other two may swap; vertices may swap.
  CHECK(partial.size() == 4);
}

TEST_CASE("cut graph") {
  StableGraph t = theta();
  StableGraph cut2 = cut_graph(t, sub_of(t, {0, 1}));
  CHECK(cut2.num_vertices() == 2);
  CHECK(cut2.num_edges() == 2);
  CHECK(cut2.total_genus() == 1);
  CHECK(cut2.legs[0] == std::vector<int>{1});
  CHECK(cut2.legs[1] == std::vector<int>{1});

  CHECK(cut_graph(t, sub_of(t, {0, 1, 2})) == t);

  StableGraph l = loop_with_leg();
  StableGraph lcut = cut_graph(l, sub_of(l, {}));
  CHECK(lcut.total_genus() == 0);
  CHECK(lcut.num_edges() == 0);
  CHECK(lcut.legs[0] == std::vector<int>{1, 2, 2});

  // Cutting never destabilizes.
  for (auto& graph : enumerate_stable_graphs(2, {})) {
    for (auto& s : connected_spanning_subgraphs(graph)) {
      StableGraph c = cut_graph(graph, s);
      CHECK(c.total_genus() == graph.total_genus() - s.excess());
    }
  }
}

TEST_CASE("pair enumeration matches the worked examples") {
  CHECK(enumerate_pairs(1, {1}).size() == 3);
  CHECK(enumerate_pairs(0, {1, 1, 1}).size() == 1);
  // Exhaustive cross-check: total subgraph classes counted orbitwise.
  for (auto& graph : enumerate_stable_graphs(2, {})) {
    auto subs = connected_spanning_subgraphs(graph);
    auto auts = automorphism_group(graph);
    // Burnside count of orbits.
    i64 fixed_total = 0;
    for (auto& f : auts) {
      for (auto& s : subs) {
        std::vector<int> image;
        for (int e : s.edge_subset) image.push_back(f.edge_map[e]);
        std::sort(image.begin(), image.end());
        if (image == s.edge_subset) ++fixed_total;
      }
    }
    i64 orbits = fixed_total / static_cast<i64>(auts.size());
    i64 listed = 0;
    for (auto& p : enumerate_pairs(2, {}))
      if (p.graph == graph) ++listed;
    CHECK(listed == orbits);
  }
}

TEST_CASE("graph json round trip and errors") {
  for (auto& [g, colors] :
       std::vector<std::pair<int, std::vector<int>>>{{1, {1, 1}}, {2, {}}, {0, {2, 1, 1}}}) {
    for (auto& graph : enumerate_stable_graphs(g, colors)) {
      CHECK(graph_from_json(graph_to_json(graph)) == graph);
    }
  }
  CHECK_THROWS_AS(graph_from_json("{not json"), domain_error);
  CHECK_THROWS_AS(graph_from_json("{\"vertices\":[]}"), domain_error);
  CHECK_THROWS_AS(graph_from_json(
                      "{\"vertices\":[{\"genus\":0,\"legs\":[1]}],\"edges\":[[0]]}"),
                  domain_error);
}
