#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ujac/numeric.hpp"

namespace ujac {

// Weakly decreasing list of positive parts. The empty partition has size 0.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
bool is_valid_partition(const Partition& p);

// All partitions of n, in a fixed deterministic order (lexicographically
// decreasing: (n), (n-1,1), ...).
std::vector<Partition> partitions_of(int n);

// Multiplicity of each part value.
std::map<int, int> part_multiplicities(const Partition& p);

// z_mu = prod_k k^{m_k} m_k!  (centralizer order of the conjugacy class).
i64 z_of(const Partition& p);

// n! / z_mu, the size of the conjugacy class.
i64 class_size(const Partition& p);

// Merge two partitions as multisets of parts.
Partition merge_partitions(const Partition& a, const Partition& b);

// Multiply every part by r.
Partition scale_partition(const Partition& p, int r);

// Cycle type of a permutation given as images (perm[i] = image of i).
Partition cycle_type(const std::vector<int>& perm);

// Number-theoretic Moebius function.
int moebius(int n);

std::vector<int> divisors_of(int n);

// Irreducible S_n character chi^lambda(mu) via Murnaghan-Nakayama.
i64 sn_character(const Partition& lambda, const Partition& mu);

std::string partition_str(const Partition& p);

}  // namespace ujac
