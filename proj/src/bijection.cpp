#include "ujac/bijection.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ujac {

i64 DegreeWindow::modulus() const {
  std::vector<i64> xs{2 * static_cast<i64>(g) - 2};
  for (int c : colors) xs.push_back(c);
  i64 m = gcd_list(xs);
  if (m == 0) throw domain_error("DegreeWindow: type (1,0) has no stability data");
  return m;
}

bool DegreeWindow::contains(i64 d) const { return gcd_i64(d - g + 1, modulus()) == 1; }

bool degree_admissible(int g, const std::vector<int>& colors, i64 d) {
  std::vector<i64> xs{g - 1 + d, 2 * static_cast<i64>(g) - 2};
  for (int c : colors) xs.push_back(c);
  return gcd_list(xs) == 1;
}

Multidegree canonical_multidegree(const StableGraph& g) {
  Multidegree m;
  for (int v = 0; v < g.num_vertices(); ++v)
    m.values.push_back(2 * static_cast<i64>(g.genus[v]) - 2 + g.valence(v));
  if (m.total() != 2 * static_cast<i64>(g.total_genus()) - 2)
    throw internal_error("canonical_multidegree: total != 2g-2");
  return m;
}

Multidegree leg_multidegree(const StableGraph& g, int color) {
  auto n = g.color_multiplicities();
  if (color < 1 || color > static_cast<int>(n.size()))
    throw domain_error("leg_multidegree: color absent");
  Multidegree m;
  for (int v = 0; v < g.num_vertices(); ++v) m.values.push_back(g.leg_count(v, color));
  return m;
}

Multidegree BijectionStep::apply(const Multidegree& m) const {
  if (kind == Kind::translate) return m + shift;
  return m * factor;
}

BijectionStep translate_step(const StableGraph& g, const Multidegree& m) {
  if (static_cast<int>(m.values.size()) != g.num_vertices())
    throw domain_error("translate_step: size mismatch");
  BijectionStep s;
  s.kind = BijectionStep::Kind::translate;
  s.shift = m;
  return s;
}

BijectionStep multiply_step(const StableGraph& g, i64 a) {
  PicardGroup pic(g);
  if (!is_prime(a) || a % 2 == 0 || a <= pic.order())
    throw domain_error("multiply_step: factor must be an odd prime exceeding |Pic^0|");
  BijectionStep s;
  s.kind = BijectionStep::Kind::multiply;
  s.factor = a;
  return s;
}

i64 select_prime(i64 abar, i64 modulus, i64 bound) {
  if (modulus < 1) throw domain_error("select_prime: modulus must be >= 1");
  if (gcd_i64(abar, modulus) != 1) throw domain_error("select_prime: residue not a unit");
  for (i64 a = std::max<i64>(3, bound + 1);; ++a) {
    if (a % 2 == 0) continue;
    if (mod_positive(a - abar, modulus) != 0) continue;
    if (is_prime(a)) return a;
  }
}

Multidegree ComposedBijection::apply(const Multidegree& m) const {
  Multidegree r = m;
  for (auto& s : steps) r = s.apply(r);
  return r;
}

PicClass ComposedBijection::apply(const PicardGroup& pic, const PicClass& c) const {
  return pic.project(apply(pic.section(c)));
}

// Assembled as in the degree-multiplication lemma: shift to d' = d - g + 1
// coordinates, scale by a Dirichlet prime congruent to d2'/d1' mod M, correct
// by -(a-1)/2 times the canonical multidegree, and close the remaining gap
// (a multiple of M) by a Bezout combination of the invariant multidegrees.
ComposedBijection build_bijection(const StableGraph& g, i64 d1, i64 d2) {
  int genus = g.total_genus();
  auto colors = g.color_multiplicities();
  DegreeWindow window{genus, colors};
  if (!window.contains(d1) || !window.contains(d2))
    throw domain_error("build_bijection: degree outside the admissible window");
  i64 M = window.modulus();
  i64 d1p = d1 - genus + 1, d2p = d2 - genus + 1;

  ComposedBijection b;
  b.d1 = d1;
  b.d2 = d2;

  Multidegree dcan = canonical_multidegree(g);
  i64 reached = d1p;
  if (M > 1) {
    i64 abar = mod_positive(d2p % M * mod_inverse(d1p, M), M);
    // When the degrees already agree mod M, translations alone suffice.
    if (abar != 1) {
      PicardGroup pic(g);
      i64 a = select_prime(abar, M, pic.order());
      b.steps.push_back(multiply_step(g, a));
      b.steps.push_back(translate_step(g, dcan * (-(a - 1) / 2)));
      reached = a * d1p;
    }
  }
  i64 gap = d2p - reached;
  if (gap % M != 0) throw internal_error("build_bijection: residual gap not divisible by M");
  if (gap != 0) {
    std::vector<i64> gens{2 * static_cast<i64>(genus) - 2};
    for (int c : colors) gens.push_back(c);
    std::vector<i64> coeffs;
    i64 got = bezout_list(gens, coeffs);
    if (got != M) throw internal_error("build_bijection: Bezout gcd mismatch");
    i64 scale = gap / M;
    Multidegree shift;
    shift.values.assign(g.num_vertices(), 0);
    shift = shift + dcan * (coeffs[0] * scale);
    for (size_t k = 0; k < colors.size(); ++k)
      shift = shift + leg_multidegree(g, static_cast<int>(k) + 1) * (coeffs[k + 1] * scale);
    if (shift.total() != gap) throw internal_error("build_bijection: translation total mismatch");
    b.steps.push_back(translate_step(g, shift));
  }
  return b;
}

BijectionCheck verify_bijection(const StableGraph& g, const ComposedBijection& b) {
  BijectionCheck r;
  PicardGroup pic(g);
  auto classes = pic.torsor_classes(b.d1);
  r.set_size = static_cast<i64>(classes.size());
  std::set<PicClass> image;
  for (auto& c : classes) {
    PicClass ic = b.apply(pic, c);
    if (ic.degree != b.d2) r.witnesses.push_back("image degree mismatch");
    image.insert(ic);
  }
  r.bijective = (static_cast<i64>(image.size()) == r.set_size);
  if (!r.bijective) r.witnesses.push_back("image not of full size");
  r.equivariant = true;
  for (auto& f : automorphism_group(g)) {
    for (auto& c : classes) {
      PicClass lhs = b.apply(pic, pic.aut_action(f.vertex_map, c));
      PicClass rhs = pic.aut_action(f.vertex_map, b.apply(pic, c));
      if (!(lhs == rhs)) {
        r.equivariant = false;
        std::string w = "equivariance fails: vertex_map=(";
        for (size_t i = 0; i < f.vertex_map.size(); ++i)
          w += (i ? "," : "") + std::to_string(f.vertex_map[i]);
        w += ")";
        r.witnesses.push_back(w);
      }
    }
  }
  return r;
}

ClaimReport verify_combinatorial_claim(const StableGraph& g, const SpanningSubgraph& sub, i64 d,
                                       i64 d_prime) {
  ClaimReport rep;
  int e = sub.excess();
  rep.excess = e;
  StableGraph cut = cut_graph(g, sub);
  int cut_genus = cut.total_genus();
  if (cut_genus != g.total_genus() - e) throw internal_error("cut graph genus mismatch");
  auto cut_colors = cut.color_multiplicities();
  DegreeWindow window{cut_genus, cut_colors};
  rep.admissible = window.contains(d - e) && window.contains(d_prime - e);
  if (!rep.admissible) return rep;

  rep.bijection = build_bijection(cut, d - e, d_prime - e);
  PicardGroup pic(g, sub);  // Pic(Gamma_0) = Pic(cut graph): legs do not enter
  auto classes = pic.torsor_classes(d - e);
  rep.set_size = static_cast<i64>(classes.size());

  std::set<PicClass> image;
  bool ok = true;
  for (auto& c : classes) {
    PicClass ic = rep.bijection.apply(pic, c);
    if (ic.degree != d_prime - e) {
      ok = false;
      rep.witnesses.push_back("image degree mismatch");
    }
    image.insert(ic);
  }
  if (static_cast<i64>(image.size()) != rep.set_size) {
    ok = false;
    rep.witnesses.push_back("not bijective");
  }
  // Equivariance under the image of Aut(Gamma, Gamma_0) acting by vertex
  // permutation (V(cut) = V(Gamma)).
  for (auto& f : automorphism_group(g, sub)) {
    for (auto& c : classes) {
      PicClass lhs = rep.bijection.apply(pic, pic.aut_action(f.vertex_map, c));
      PicClass rhs = pic.aut_action(f.vertex_map, rep.bijection.apply(pic, c));
      if (!(lhs == rhs)) {
        ok = false;
        rep.witnesses.push_back("equivariance fails for an automorphism");
      }
    }
  }
  rep.verified = ok;
  return rep;
}

std::string ClaimReport::to_json(const StableGraph& g, const SpanningSubgraph& sub, i64 d,
                                 i64 d_prime) const {
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(graph_to_json(g));
  j["subgraph"] = sub.edge_subset;
  j["d"] = d;
  j["d_prime"] = d_prime;
  j["admissible"] = admissible;
  j["set_size"] = set_size;
  j["equivariant"] = verified;
  j["steps"] = nlohmann::json::array();
  for (auto& s : bijection.steps) {
    if (s.kind == BijectionStep::Kind::multiply) {
      j["steps"].push_back({{"multiply", s.factor}});
    } else {
      j["steps"].push_back({{"translate", s.shift.values}});
    }
  }
  j["witnesses"] = witnesses;
  return j.dump();
}

bool sn_iso_criterion(int g, int n, i64 d, i64 d_prime) {
  if (g < 1 || 2 * g - 2 + n <= 0) throw domain_error("sn_iso_criterion: invalid type");
  i64 m = gcd_i64(2 * static_cast<i64>(g) - 2, n);
  if (m == 0) throw domain_error("sn_iso_criterion: trivial modulus");
  return mod_positive(d - d_prime, m) == 0 || mod_positive(-d - d_prime, m) == 0;
}

// ---------------------------------------------------------------------------
// Stability assignments

namespace {

// A multidegree in the class of `target`, constant on the vertex orbits of
// `stab`, found by a bounded box search over orbit values.
Multidegree invariant_representative(const PicardGroup& pic, const PicClass& target,
                                     const std::vector<GraphIso>& stab, int num_vertices) {
  // Vertex orbits of the stabilizer.
  std::vector<int> orbit(num_vertices, -1);
  int orbits = 0;
  for (int v = 0; v < num_vertices; ++v) {
    if (orbit[v] >= 0) continue;
    std::vector<int> frontier{v};
    orbit[v] = orbits;
    while (!frontier.empty()) {
      int u = frontier.back();
      frontier.pop_back();
      for (auto& f : stab) {
        int w = f.vertex_map[u];
        if (orbit[w] < 0) {
          orbit[w] = orbits;
          frontier.push_back(w);
        }
      }
    }
    ++orbits;
  }
  std::vector<i64> orbit_size(orbits, 0);
  for (int v = 0; v < num_vertices; ++v) ++orbit_size[orbit[v]];

  for (i64 box = 2; box <= 16; box *= 2) {
    std::vector<i64> vals(orbits, -box);
    while (true) {
      i64 total = 0;
      for (int i = 0; i < orbits; ++i) total += orbit_size[i] * vals[i];
      if (total == target.degree) {
        Multidegree m;
        for (int v = 0; v < num_vertices; ++v) m.values.push_back(vals[orbit[v]]);
        if (pic.project(m) == target) return m;
      }
      int k = orbits - 1;
      while (k >= 0) {
        if (++vals[k] <= box) break;
        vals[k] = -box;
        --k;
      }
      if (k < 0) break;
    }
  }
  throw internal_error("invariant_representative: no invariant multidegree found in search box");
}

}  // namespace

StabilityAssignment canonical_stability(int g, const std::vector<int>& colors, i64 d) {
  if (!degree_admissible(g, colors, d))
    throw domain_error("canonical_stability: inadmissible degree");
  StabilityAssignment s;
  s.g = g;
  s.colors = colors;
  s.degree = d;
  s.pairs = enumerate_pairs(g, colors);
  for (auto& pair : s.pairs) {
    SpanningSubgraph sub = pair.subgraph();
    i64 dd = d - sub.excess();
    PicardGroup pic(pair.graph, sub);
    auto auts = automorphism_group(pair.graph, sub);
    auto classes = pic.torsor_classes(dd);
    std::vector<bool> done(classes.size(), false);
    std::vector<Multidegree> chosen(classes.size());
    auto index_of = [&](const PicClass& c) {
      for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == c) return static_cast<int>(i);
      throw internal_error("canonical_stability: class not found");
    };
    for (size_t i = 0; i < classes.size(); ++i) {
      if (done[i]) continue;
      // Stabilizer of the orbit's least class.
      std::vector<GraphIso> stab;
      for (auto& f : auts)
        if (pic.aut_action(f.vertex_map, classes[i]) == classes[i]) stab.push_back(f);
      Multidegree rep =
          invariant_representative(pic, classes[i], stab, pair.graph.num_vertices());
      chosen[i] = rep;
      done[i] = true;
      for (auto& f : auts) {
        int j = index_of(pic.aut_action(f.vertex_map, classes[i]));
        if (!done[j]) {
          chosen[j] = rep.permuted(f.vertex_map);
          done[j] = true;
        }
      }
    }
    std::sort(chosen.begin(), chosen.end());
    s.sets.push_back(std::move(chosen));
  }
  return s;
}

bool stability_condition_i(const StabilityAssignment& s) {
  for (size_t p = 0; p < s.pairs.size(); ++p) {
    SpanningSubgraph sub = s.pairs[p].subgraph();
    PicardGroup pic(s.pairs[p].graph, sub);
    i64 dd = s.degree - sub.excess();
    const auto& set = s.sets[p];
    if (static_cast<i64>(set.size()) != pic.order()) return false;
    std::set<PicClass> classes;
    for (auto& m : set) {
      if (m.total() != dd) return false;
      classes.insert(pic.project(m));
    }
    if (classes.size() != set.size()) return false;
  }
  return true;
}

bool stability_condition_ii(const StabilityAssignment& s) {
  for (size_t p = 0; p < s.pairs.size(); ++p) {
    SpanningSubgraph sub = s.pairs[p].subgraph();
    auto auts = automorphism_group(s.pairs[p].graph, sub);
    std::set<Multidegree> set(s.sets[p].begin(), s.sets[p].end());
    for (auto& f : auts)
      for (auto& m : set)
        if (!set.count(m.permuted(f.vertex_map))) return false;
  }
  return true;
}

}  // namespace ujac
