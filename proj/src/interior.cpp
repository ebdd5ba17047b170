#include "ujac/interior.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace ujac {

EquivariantClass power_class(const MotiveClass& x, int n) {
  if (n < 0) throw domain_error("power_class: negative n");
  EquivariantClass r(n);
  for (auto& mu : partitions_of(n)) {
    MotiveClass c(1);
    for (int part : mu) c = c * adams(part, x);
    r.set_character(mu, c);
  }
  return r;
}

namespace {

// Concrete permutation of [n] with the given cycle type, cycles laid out
// consecutively.
std::vector<int> permutation_of_type(const Partition& mu) {
  std::vector<int> perm;
  int base = 0;
  for (int k : mu) {
    for (int i = 0; i < k; ++i) perm.push_back(base + (i + 1) % k);
    base += k;
  }
  return perm;
}

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> block_of(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      fn(block_of, used);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block_of[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0)
    fn(block_of, 0);
  else
    rec(0, 0);
}

// Tables conf[0..n] computed by inverting the coincidence stratification of
// the powers: the trace of sigma on x^n is the sum, over sigma-invariant set
// partitions, of the trace of the induced block permutation on the
// configuration space of the blocks.
std::vector<EquivariantClass> configuration_table(const MotiveClass& x, int n) {
  std::vector<EquivariantClass> conf;
  for (int b = 0; b <= n; ++b) {
    EquivariantClass cb(b);
    for (auto& mu : partitions_of(b)) {
      MotiveClass total(1);
      for (int part : mu) total = total * adams(part, x);
      auto sigma = permutation_of_type(mu);
      MotiveClass lower;
      for_each_set_partition(b, [&](const std::vector<int>& block_of, int blocks) {
        if (blocks == b) return;  // the discrete partition is conf_b itself
        // sigma-invariance and induced block permutation.
        std::vector<int> image(blocks, -1);
        for (int i = 0; i < b; ++i) {
          int ib = block_of[sigma[i]];
          if (image[block_of[i]] < 0)
            image[block_of[i]] = ib;
          else if (image[block_of[i]] != ib)
            return;
        }
        lower += conf[blocks].character_at(cycle_type(image));
      });
      cb.set_character(mu, total - lower);
    }
    conf.push_back(std::move(cb));
  }
  return conf;
}

using Poly = std::vector<i64>;  // coefficients by ascending power of q

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by q^3 - q.
Poly poly_div_q3_minus_q(Poly num) {
  poly_trim(num);
  if (num.empty()) return {};
  if (num.size() < 4) throw internal_error("genus0_class: division by q^3-q not exact");
  Poly quot(num.size() - 3, 0);
  for (int d = static_cast<int>(num.size()) - 1; d >= 3; --d) {
    i64 c = num[d];
    if (c == 0) continue;
    quot[d - 3] = c;
    num[d] = 0;
    num[d - 2] += c;
  }
  for (i64 c : num)
    if (c != 0) throw internal_error("genus0_class: division by q^3-q not exact");
  return quot;
}

MotiveClass poly_to_motive(const Poly& p) {
  MotiveClass x;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) x += MotiveClass::lefschetz(static_cast<int>(i)) * p[i];
  return x;
}

// b_k(q) = sum_{d | k} moebius(d) (q^{k/d} + 1): the number of F_{q^k}-points
// of the projective line on closed points of exact degree k.
Poly point_count_poly(int k) {
  Poly b;
  for (int d : divisors_of(k)) {
    int m = moebius(d);
    if (m == 0) continue;
    int e = k / d;
    if (static_cast<int>(b.size()) < e + 1) b.resize(e + 1, 0);
    b[e] += m;
    b[0] += m;
  }
  poly_trim(b);
  return b;
}

}  // namespace

EquivariantClass configuration_class(const MotiveClass& x, int n) {
  if (n < 0) throw domain_error("configuration_class: negative n");
  return configuration_table(x, n)[n];
}

EquivariantClass genus0_class(int n) {
  if (n < 3) throw domain_error("genus0_class: needs n >= 3");
  EquivariantClass r(n);
  for (auto& mu : partitions_of(n)) {
    Poly num{1};
    for (auto& [k, m] : part_multiplicities(mu)) {
      Poly bk = point_count_poly(k);
      for (int j = 0; j < m; ++j) {
        Poly factor = bk;
        if (factor.empty()) factor.assign(1, 0);
        factor[0] -= static_cast<i64>(j) * k;
        num = poly_mul(num, factor);
      }
    }
    r.set_character(mu, poly_to_motive(poly_div_q3_minus_q(std::move(num))));
  }
  return r;
}

EquivariantClass genus1_class(int n) {
  if (n < 1) throw domain_error("genus1_class: needs n >= 1");
  MotiveClass fiber = jacobian_factor(1);  // 1 - V_1 + L, the elliptic fiber class
  EquivariantClass conf = configuration_class(fiber, n);
  EquivariantClass r(n);
  for (auto& [mu, c] : conf.characters()) r.set_character(mu, integrate_M11(c));
  return r;
}

// ---------------------------------------------------------------------------
// InteriorProvider

EquivariantClass InteriorProvider::interior(int g, int n) const {
  if (g < 0 || n < 0) throw domain_error("interior: invalid type");
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(g, n);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  EquivariantClass result(n);
  if (g == 0) {
    result = genus0_class(n);
  } else if (g == 1) {
    result = genus1_class(n);
  } else {
    auto pit = plugin_.find(key);
    if (pit == plugin_.end())
      throw missing_data_error(
          "interior: no table for genus " + std::to_string(g) + ", n=" + std::to_string(n) +
          "; supply one with --plugin (JSON {\"g\":..,\"n\":..,\"class\":{\"k1,k2,..\":[{\"l\":..,"
          "\"coeff\":..,..}]}})");
    result = pit->second;
  }
  cache_.emplace(key, result);
  return result;
}

bool InteriorProvider::has_plugin(int g, int n) const {
  return plugin_.count(std::make_pair(g, n)) > 0;
}

namespace {

Partition parse_partition_key(const std::string& key) {
  Partition p;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    p.push_back(std::stoi(item));
  }
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

MotiveClass motive_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw domain_error("motive json: expected an array of terms");
  MotiveClass x;
  for (auto& t : j) {
    i64 coeff = t.at("coeff").get<i64>();
    int l = t.value("l", 0);
    MotiveClass term = l > 0 ? MotiveClass::lefschetz(l) : MotiveClass(1);
    if (t.contains("v") && t["v"].get<int>() > 0)
      term = term * MotiveClass::local_system(t["v"].get<int>());
    if (t.contains("s")) term = term * MotiveClass::cusp_symbol(t["s"].get<int>(), t.value("s_twist", 1));
    x += term * coeff;
  }
  return x;
}

nlohmann::json motive_to_json(const MotiveClass& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [m, c] : x.terms()) {
    nlohmann::json t;
    t["l"] = m.l;
    if (m.v >= 1) t["v"] = m.v;
    if (m.s_weight > 0) {
      t["s"] = m.s_weight;
      if (m.s_twist > 1) t["s_twist"] = m.s_twist;
    }
    t["coeff"] = c;
    arr.push_back(t);
  }
  return arr;
}

}  // namespace

MotiveClass motive_from_json_text(const std::string& text) {
  return motive_from_json(nlohmann::json::parse(text));
}

std::string motive_to_json_text(const MotiveClass& x) { return motive_to_json(x).dump(); }

void InteriorProvider::load_plugin_table(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& ex) {
    throw domain_error(std::string("plugin table: parse error: ") + ex.what());
  }
  int g = j.at("g").get<int>();
  int n = j.at("n").get<int>();
  if (g < 2) throw domain_error("plugin table: only genus >= 2 tables may be supplied");
  EquivariantClass cls(n);
  for (auto& [key, value] : j.at("class").items()) {
    Partition mu = parse_partition_key(key);
    if (partition_size(mu) != n) throw domain_error("plugin table: partition key of wrong size");
    cls.set_character(mu, motive_from_json(value));
  }
  // The characters must assemble into a virtual representation: integral
  // multiplicity of every irreducible.
  try {
    schur_multiplicities(cls);
  } catch (const internal_error&) {
    throw domain_error("plugin table: characters are not a virtual representation");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  plugin_[std::make_pair(g, n)] = std::move(cls);
  cache_.erase(std::make_pair(g, n));
}

}  // namespace ujac
