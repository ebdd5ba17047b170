#include "ujac/motive.hpp"

#include <algorithm>
#include <sstream>

namespace ujac {

// ---------------------------------------------------------------------------
// EPoly

void EPoly::add_term(int u, int v, i64 c) {
  if (c == 0) return;
  auto key = std::make_pair(u, v);
  auto it = coeff.find(key);
  if (it == coeff.end()) {
    coeff.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) coeff.erase(it);
  }
}

EPoly EPoly::operator+(const EPoly& o) const {
  EPoly r = *this;
  for (auto& [k, c] : o.coeff) r.add_term(k.first, k.second, c);
  return r;
}

EPoly EPoly::operator-(const EPoly& o) const {
  EPoly r = *this;
  for (auto& [k, c] : o.coeff) r.add_term(k.first, k.second, -c);
  return r;
}

EPoly EPoly::operator*(const EPoly& o) const {
  EPoly r;
  for (auto& [k1, c1] : coeff)
    for (auto& [k2, c2] : o.coeff) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

bool EPoly::is_palindromic(int dim) const {
  for (auto& [k, c] : coeff) {
    auto mirror = std::make_pair(dim - k.first, dim - k.second);
    auto it = coeff.find(mirror);
    if (it == coeff.end() || it->second != c) return false;
  }
  return true;
}

bool EPoly::is_nonnegative_tate() const {
  for (auto& [k, c] : coeff)
    if (k.first != k.second || c < 0) return false;
  return true;
}

std::string EPoly::str() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : coeff) {
    i64 a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (k.first == 0 && k.second == 0);
    if (a != 1 || unit) os << a;
    if (a != 1 && !unit) os << "*";
    if (k.first > 0) {
      os << "u";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      if (k.first > 0) os << "*";
      os << "v";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

std::string EPoly::str_q() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : coeff) {
    if (k.first != k.second) return str();  // not pure Tate, fall back
    i64 a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || k.first == 0) os << a;
    if (k.first > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (k.first > 1) os << "^" << k.first;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// MotiveClass

bool cusp_dimension_is_zero(int weight) {
  return weight == 4 || weight == 6 || weight == 8 || weight == 10 || weight == 14;
}

MotiveClass::MotiveClass(i64 constant) {
  if (constant != 0) terms_[MotiveMonomial{}] = constant;
}

void MotiveClass::add_term(const MotiveMonomial& m, i64 c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MotiveClass MotiveClass::lefschetz(int power) {
  if (power < 0) throw domain_error("lefschetz: negative power");
  MotiveClass x;
  x.terms_[MotiveMonomial{power, 0, 0, 1}] = 1;
  return x;
}

MotiveClass MotiveClass::local_system(int k) {
  if (k < 0) throw domain_error("local_system: negative index");
  if (k == 0) return MotiveClass(1);
  MotiveClass x;
  x.terms_[MotiveMonomial{0, k, 0, 1}] = 1;
  return x;
}

MotiveClass MotiveClass::cusp_symbol(int weight, int twist) {
  if (weight < 4 || weight % 2 != 0) throw domain_error("cusp_symbol: weight must be even and >= 4");
  if (twist < 1) throw domain_error("cusp_symbol: twist must be >= 1");
  // No cusp forms at these level-1 weights: the cusp motive vanishes. (The
  // whole of H^1_c is then the weight-0 Eisenstein class, accounted for by
  // the -1 in eichler_shimura.)
  if (cusp_dimension_is_zero(weight)) return MotiveClass();
  MotiveClass x;
  x.terms_[MotiveMonomial{0, 0, weight, twist}] = 1;
  return x;
}

bool MotiveClass::is_absolute() const {
  for (auto& [m, c] : terms_)
    if (m.v >= 1) return false;
  return true;
}

bool MotiveClass::is_constant() const {
  for (auto& [m, c] : terms_)
    if (!(m == MotiveMonomial{})) return false;
  return true;
}

i64 MotiveClass::constant_value() const {
  if (!is_constant()) throw internal_error("constant_value: class is not constant");
  auto it = terms_.find(MotiveMonomial{});
  return it == terms_.end() ? 0 : it->second;
}

MotiveClass MotiveClass::operator+(const MotiveClass& o) const {
  MotiveClass r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MotiveClass MotiveClass::operator-(const MotiveClass& o) const {
  MotiveClass r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MotiveClass MotiveClass::operator-() const { return MotiveClass() - *this; }

MotiveClass& MotiveClass::operator+=(const MotiveClass& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MotiveClass& MotiveClass::operator-=(const MotiveClass& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MotiveClass MotiveClass::operator*(i64 c) const {
  MotiveClass r;
  if (c == 0) return r;
  for (auto& [m, a] : terms_) r.terms_[m] = a * c;
  return r;
}

// V_a * V_b = sum_{i=0}^{min(a,b)} L^i V_{a+b-2i}  (Clebsch-Gordan with Tate
// twists for the rank-1 symplectic group).
MotiveClass MotiveClass::operator*(const MotiveClass& o) const {
  MotiveClass r;
  for (auto& [m1, c1] : terms_) {
    for (auto& [m2, c2] : o.terms_) {
      i64 c = c1 * c2;
      int l = m1.l + m2.l;
      bool s1 = m1.s_weight > 0, s2 = m2.s_weight > 0;
      if (s1 && s2) throw domain_error("MotiveClass: products of cusp symbols are unsupported");
      if ((s1 && m2.v >= 1) || (s2 && m1.v >= 1))
        throw domain_error("MotiveClass: mixed V * S products are unsupported");
      if (s1 || s2) {
        const MotiveMonomial& s = s1 ? m1 : m2;
        r.add_term(MotiveMonomial{l, 0, s.s_weight, s.s_twist}, c);
        continue;
      }
      if (m1.v == 0 || m2.v == 0) {
        r.add_term(MotiveMonomial{l, m1.v + m2.v, 0, 1}, c);
        continue;
      }
      int a = m1.v, b = m2.v;
      for (int i = 0; i <= std::min(a, b); ++i)
        r.add_term(MotiveMonomial{l + i, a + b - 2 * i, 0, 1}, c);
    }
  }
  return r;
}

MotiveClass MotiveClass::divide_exact(i64 c) const {
  if (c == 0) throw internal_error("divide_exact: division by zero");
  MotiveClass r;
  for (auto& [m, a] : terms_) {
    if (a % c != 0) throw internal_error("divide_exact: non-integral division");
    r.terms_[m] = a / c;
  }
  return r;
}

std::string MotiveClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    i64 a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    if (m.l > 0) factors.push_back(m.l == 1 ? "L" : "L^" + std::to_string(m.l));
    if (m.v >= 1) factors.push_back("V" + std::to_string(m.v));
    if (m.s_weight > 0) {
      std::string s = "S[" + std::to_string(m.s_weight) + "]";
      if (m.s_twist > 1) s = "psi" + std::to_string(m.s_twist) + "(" + s + ")";
      factors.push_back(s);
    }
    if (a != 1 || factors.empty()) os << a;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (a != 1 || i > 0) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Lambda-ring operations

namespace {

// Reduce a symmetric polynomial in the roots alpha, beta (alpha*beta = L,
// alpha + beta = V_1) to the L,V basis. Terms are exponent pairs -> coeff.
MotiveClass reduce_roots(std::map<std::pair<int, int>, i64> poly) {
  MotiveClass out;
  while (!poly.empty()) {
    // Pick the term with maximal alpha-exponent.
    auto best = poly.begin();
    for (auto it = poly.begin(); it != poly.end(); ++it)
      if (it->first.first > best->first.first) best = it;
    auto [a, b] = best->first;
    i64 c = best->second;
    if (a < b) throw internal_error("reduce_roots: polynomial is not symmetric");
    int l = b, k = a - b;
    MotiveClass term = MotiveClass::local_system(k) * c;
    if (l > 0) term = term * MotiveClass::lefschetz(l);
    out += term;
    // Subtract c * (alpha*beta)^l * h_k(alpha,beta).
    for (int i = 0; i <= k; ++i) {
      auto key = std::make_pair(l + k - i, l + i);
      poly[key] -= c;
      if (poly[key] == 0) poly.erase(key);
    }
  }
  return out;
}

MotiveClass adams_v(int r, int k) {
  // h_k(alpha^r, beta^r) reduced to the L,V basis.
  std::map<std::pair<int, int>, i64> poly;
  for (int i = 0; i <= k; ++i) poly[std::make_pair(r * (k - i), r * i)] += 1;
  return reduce_roots(std::move(poly));
}

}  // namespace

MotiveClass adams(int r, const MotiveClass& x) {
  if (r < 1) throw domain_error("adams: r must be >= 1");
  MotiveClass out;
  for (auto& [m, c] : x.terms_) {
    MotiveClass piece = MotiveClass(1);
    if (m.l > 0) piece = MotiveClass::lefschetz(r * m.l);
    if (m.v >= 1) piece = piece * adams_v(r, m.v);
    if (m.s_weight > 0) piece = piece * MotiveClass::cusp_symbol(m.s_weight, r * m.s_twist);
    out += piece * c;
  }
  return out;
}

MotiveClass jacobian_factor(int g) {
  if (g == 0) return MotiveClass(1);
  if (g == 1) return MotiveClass(1) - MotiveClass::local_system(1) + MotiveClass::lefschetz();
  throw missing_data_error("jacobian_factor: genus >= 2 needs a plugin table");
}

MotiveClass eichler_shimura(int k) {
  if (k < 0) throw domain_error("eichler_shimura: negative weight");
  if (k % 2 == 1) return MotiveClass();
  if (k == 0) return MotiveClass::lefschetz();
  return -MotiveClass::cusp_symbol(k + 2) - MotiveClass(1);
}

MotiveClass integrate_M11(const MotiveClass& x) {
  MotiveClass out;
  for (auto& [m, c] : x.terms_) {
    if (m.s_weight > 0) throw domain_error("integrate_M11: input is not a relative class");
    MotiveClass piece = eichler_shimura(m.v);
    if (m.l > 0) piece = piece * MotiveClass::lefschetz(m.l);
    out += piece * c;
  }
  return out;
}

EPoly e_polynomial(const MotiveClass& x) {
  EPoly out;
  for (auto& [m, c] : x.terms()) {
    if (m.v >= 1) throw domain_error("e_polynomial: class is not absolute (contains V_k)");
    if (m.s_weight > 0) {
      if (m.s_weight != 12)
        throw domain_error("e_polynomial: symbol S[" + std::to_string(m.s_weight) +
                           "] has no pinned evaluation");
      int d = 11 * m.s_twist;
      out.add_term(m.l + d, m.l, c);
      out.add_term(m.l, m.l + d, c);
      continue;
    }
    out.add_term(m.l, m.l, c);
  }
  return out;
}

}  // namespace ujac
