#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ujac/numeric.hpp"

namespace ujac {

// Labeled multigraph with vertex genera and colored legs: the dual graph of a
// stable curve. Edge i carries half-edges 2i (at edges[i].first) and 2i+1
// (at edges[i].second); loops have both ends at one vertex. Legs are indexed
// globally in (vertex, position) order. Colors are 1..p; legs of equal color
// are indistinguishable.
struct StableGraph {
  std::vector<int> genus;                  // per vertex
  std::vector<std::vector<int>> legs;      // legs[v] = sorted colors
  std::vector<std::pair<int, int>> edges;  // (u,v) with u <= v, sorted

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int first_betti() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  int num_legs() const;
  // Non-leg half-edges at v; loops count twice.
  int valence(int v) const;
  // valence(v) + number of legs at v.
  int degree(int v) const;
  int leg_count(int v, int color) const;
  // n_k for k = 1..max color.
  std::vector<int> color_multiplicities() const;
  bool is_connected() const;
  void validate() const;

  int half_edge_vertex(int h) const { return h % 2 == 0 ? edges[h / 2].first : edges[h / 2].second; }
  // Global leg ids at v, in order.
  std::vector<int> leg_ids_at(int v) const;
  int leg_vertex(int leg_id) const;
  int leg_color(int leg_id) const;

  bool operator==(const StableGraph& o) const {
    return genus == o.genus && legs == o.legs && edges == o.edges;
  }
  bool operator<(const StableGraph& o) const;
};

// Normalizes (orients and sorts edges, sorts legs) and validates.
StableGraph make_stable_graph(std::vector<int> genus, std::vector<std::vector<int>> legs,
                              std::vector<std::pair<int, int>> edges);

// A connected subgraph on all vertices, as a sorted set of edge indices.
struct SpanningSubgraph {
  const StableGraph* parent = nullptr;
  std::vector<int> edge_subset;

  int first_betti() const;
  // Number of edges of the parent outside the subgraph.
  int excess() const;
  bool contains_edge(int e) const;
};

// Isomorphism between stable graphs (or automorphism when source == target),
// as compatible vertex / edge / leg maps. edge_flip[i] records whether the
// two half-edges of edge i swap sides.
struct GraphIso {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<bool> edge_flip;
  std::vector<int> leg_map;

  bool operator==(const GraphIso& o) const {
    return vertex_map == o.vertex_map && edge_map == o.edge_map && edge_flip == o.edge_flip &&
           leg_map == o.leg_map;
  }
  bool operator<(const GraphIso& o) const;
};

int apply_half_edge(const GraphIso& f, int h);
// g . f (apply f first). Both must relate compatible graphs.
GraphIso compose(const GraphIso& g, const GraphIso& f);
GraphIso inverse_iso(const GraphIso& f);
GraphIso identity_iso(const StableGraph& g);

// All isomorphisms a -> b respecting genera and leg colors.
std::vector<GraphIso> find_isomorphisms(const StableGraph& a, const StableGraph& b);

// Full element list; when sub is given, only elements mapping its edge set to
// itself.
std::vector<GraphIso> automorphism_group(const StableGraph& g,
                                         const std::optional<SpanningSubgraph>& sub = std::nullopt);

// Deterministic representative of the isomorphism class: minimal lexicographic
// encoding over vertex relabelings, keyed by (genus, legs, adjacency).
StableGraph canonical_form(const StableGraph& g);
// The relabeling that carries g to its canonical form.
GraphIso canonical_iso(const StableGraph& g);

bool are_isomorphic(const StableGraph& a, const StableGraph& b);

// One canonical representative per isomorphism class of stable graphs of
// genus g with color multiplicities `colors`, sorted.
std::vector<StableGraph> enumerate_stable_graphs(int g, const std::vector<int>& colors);

// All edge subsets spanning a connected subgraph on every vertex, sorted by
// (size, lexicographic).
std::vector<SpanningSubgraph> connected_spanning_subgraphs(const StableGraph& g);

// Cut every edge outside the subgraph: the result keeps the subgraph's edges
// and gains two legs in one fresh shared color per cut edge. Genus drops by
// the number of cut edges.
StableGraph cut_graph(const StableGraph& g, const SpanningSubgraph& sub);

// (Gamma, Gamma_0) pairs up to isomorphism: for each canonical graph, one
// representative subgraph per Aut-orbit.
struct GraphPair {
  StableGraph graph;
  std::vector<int> sub_edges;
  SpanningSubgraph subgraph() const;
};
std::vector<GraphPair> enumerate_pairs(int g, const std::vector<int>& colors);

std::string graph_to_json(const StableGraph& g);
StableGraph graph_from_json(const std::string& text);

}  // namespace ujac
