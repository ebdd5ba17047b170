#include "ujac/partition.hpp"

#include <numeric>

namespace ujac {

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

static void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw domain_error("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::map<int, int> part_multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

i64 z_of(const Partition& p) {
  i64 z = 1;
  for (auto& [k, m] : part_multiplicities(p)) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

i64 class_size(const Partition& p) { return factorial(partition_size(p)) / z_of(p); }

Partition merge_partitions(const Partition& a, const Partition& b) {
  Partition m = a;
  m.insert(m.end(), b.begin(), b.end());
  std::sort(m.begin(), m.end(), std::greater<int>());
  return m;
}

Partition scale_partition(const Partition& p, int r) {
  Partition q = p;
  for (int& x : q) x *= r;
  return q;
}

Partition cycle_type(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  Partition type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

int moebius(int n) {
  if (n <= 0) throw domain_error("moebius: n must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<int> divisors_of(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

// Murnaghan-Nakayama via beta numbers: removing a border strip of length k
// means replacing a beta number b by b-k (no collision), with sign given by
// the number of beta numbers strictly between them.
static i64 mn_rec(std::vector<int> lambda, const std::vector<int>& mu, size_t mi) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (mi == mu.size()) return lambda.empty() ? 1 : 0;
  if (lambda.empty()) return 0;
  int k = mu[mi];
  int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
  i64 total = 0;
  for (int i = 0; i < m; ++i) {
    int b = beta[i] - k;
    if (b < 0) continue;
    bool collide = false;
    int crossings = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (beta[j] == b) {
        collide = true;
        break;
      }
      if (beta[j] < beta[i] && beta[j] > b) ++crossings;
    }
    if (collide) continue;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nl(m);
    for (int j = 0; j < m; ++j) nl[j] = nb[j] - (m - 1 - j);
    total += ((crossings % 2 == 0) ? 1 : -1) * mn_rec(nl, mu, mi + 1);
  }
  return total;
}

i64 sn_character(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu))
    throw domain_error("sn_character: partition sizes differ");
  return mn_rec(lambda, mu, 0);
}

std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace ujac
