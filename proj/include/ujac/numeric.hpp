#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ujac {

using i64 = std::int64_t;

// Bad input or violated operation precondition (CLI exit code 2).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Data that must be supplied externally is missing (CLI exit code 3).
struct missing_data_error : std::runtime_error {
  explicit missing_data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug (CLI exit code 4).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 gcd_list(const std::vector<i64>& xs) {
  i64 g = 0;
  for (i64 x : xs) g = gcd_i64(g, x);
  return g;
}

// g = gcd(a,b) together with u,v such that u*a + v*b = g.
inline i64 ext_gcd(i64 a, i64 b, i64& u, i64& v) {
  if (b == 0) {
    u = (a < 0) ? -1 : 1;
    v = 0;
    return a < 0 ? -a : a;
  }
  i64 u1, v1;
  i64 g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

// Coefficients c with sum c_i * xs_i = gcd(xs). Deterministic left fold.
inline i64 bezout_list(const std::vector<i64>& xs, std::vector<i64>& coeffs) {
  coeffs.assign(xs.size(), 0);
  if (xs.empty()) return 0;
  i64 g = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    i64 u, v;
    i64 g2 = ext_gcd(g, xs[i], u, v);
    for (size_t j = 0; j < i; ++j) coeffs[j] *= u;
    coeffs[i] = v;
    g = g2;
  }
  return g;
}

inline i64 mod_positive(i64 a, i64 m) {
  if (m <= 0) throw internal_error("mod_positive: modulus must be positive");
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a mod m; requires gcd(a,m)=1.
inline i64 mod_inverse(i64 a, i64 m) {
  i64 u, v;
  i64 g = ext_gcd(mod_positive(a, m), m, u, v);
  if (g != 1) throw domain_error("mod_inverse: arguments are not coprime");
  return mod_positive(u, m);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Exact rational arithmetic, normalized with positive denominator.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}
  Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw internal_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
  Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw internal_error("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline i64 factorial(int n) {
  i64 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline i64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  i64 b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace ujac
