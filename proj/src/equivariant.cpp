#include "ujac/equivariant.hpp"

namespace ujac {

namespace {
const MotiveClass kZero;
}

const MotiveClass& EquivariantClass::character_at(const Partition& mu) const {
  if (partition_size(mu) != degree_) throw domain_error("character_at: partition size != degree");
  auto it = chars_.find(mu);
  return it == chars_.end() ? kZero : it->second;
}

void EquivariantClass::set_character(const Partition& mu, MotiveClass value) {
  if (partition_size(mu) != degree_) throw domain_error("set_character: partition size != degree");
  if (value.is_zero())
    chars_.erase(mu);
  else
    chars_[mu] = std::move(value);
}

std::map<Partition, MotiveClass> EquivariantClass::normalized() const {
  std::map<Partition, MotiveClass> out;
  for (auto& [mu, x] : chars_)
    if (!x.is_zero()) out.emplace(mu, x);
  return out;
}

EquivariantClass EquivariantClass::operator+(const EquivariantClass& o) const {
  if (degree_ != o.degree_) throw domain_error("EquivariantClass: degree mismatch in +");
  EquivariantClass r = *this;
  for (auto& [mu, x] : o.chars_) r.set_character(mu, r.character_at(mu) + x);
  return r;
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& o) const {
  if (degree_ != o.degree_) throw domain_error("EquivariantClass: degree mismatch in -");
  EquivariantClass r = *this;
  for (auto& [mu, x] : o.chars_) r.set_character(mu, r.character_at(mu) - x);
  return r;
}

EquivariantClass EquivariantClass::scale(const MotiveClass& x) const {
  EquivariantClass r(degree_);
  for (auto& [mu, c] : chars_) r.set_character(mu, c * x);
  return r;
}

// Characters multiply with binomial weights: chi_{FG}(merge(nu,rho)) picks up
// prod_k C(m_k(mu), m_k(nu)) from the ways of splitting equal parts.
EquivariantClass EquivariantClass::product(const EquivariantClass& o) const {
  EquivariantClass r(degree_ + o.degree_);
  for (auto& [nu, xf] : chars_) {
    if (xf.is_zero()) continue;
    for (auto& [rho, xg] : o.chars_) {
      if (xg.is_zero()) continue;
      Partition mu = merge_partitions(nu, rho);
      auto mult_mu = part_multiplicities(mu);
      auto mult_nu = part_multiplicities(nu);
      i64 weight = 1;
      for (auto& [k, m] : mult_mu) {
        auto it = mult_nu.find(k);
        int j = it == mult_nu.end() ? 0 : it->second;
        weight *= binomial(m, j);
      }
      r.set_character(mu, r.character_at(mu) + (xf * xg) * weight);
    }
  }
  return r;
}

EquivariantClass EquivariantClass::h(int n) {
  if (n < 0) throw domain_error("h: negative degree");
  EquivariantClass r(n);
  for (auto& mu : partitions_of(n)) r.set_character(mu, MotiveClass(1));
  return r;
}

EquivariantClass EquivariantClass::e(int n) {
  if (n < 0) throw domain_error("e: negative degree");
  EquivariantClass r(n);
  for (auto& mu : partitions_of(n)) {
    int sign = ((n - static_cast<int>(mu.size())) % 2 == 0) ? 1 : -1;
    r.set_character(mu, MotiveClass(sign));
  }
  return r;
}

EquivariantClass EquivariantClass::p_monomial(const MotiveClass& x, const Partition& nu) {
  if (!is_valid_partition(nu)) throw domain_error("p_monomial: invalid partition");
  EquivariantClass r(partition_size(nu));
  r.set_character(nu, x * z_of(nu));
  return r;
}

EquivariantClass plethysm_cycle(int r, const EquivariantClass& F) {
  if (r < 1) throw domain_error("plethysm_cycle: r must be >= 1");
  EquivariantClass out(r * F.degree());
  for (auto& [mu, x] : F.characters()) {
    if (x.is_zero()) continue;
    // c_{r mu} = psi^r(c_mu), so the character picks up z_{r mu}/z_mu = r^len.
    i64 factor = 1;
    for (size_t i = 0; i < mu.size(); ++i) factor *= r;
    out.set_character(scale_partition(mu, r), adams(r, x) * factor);
  }
  return out;
}

MotiveClass invariants(const EquivariantClass& F) {
  MotiveClass total;
  for (auto& [mu, x] : F.characters()) total += x * class_size(mu);
  return total.divide_exact(factorial(F.degree()));
}

namespace {
void restrict_rec(const EquivariantClass& F, const std::vector<int>& blocks, size_t idx,
                  MultiPartition& cur, Partition merged,
                  std::map<MultiPartition, MotiveClass>& out) {
  if (idx == blocks.size()) {
    MotiveClass x = F.character_at(merged);
    if (!x.is_zero()) out[cur] = x;
    return;
  }
  for (auto& mu : partitions_of(blocks[idx])) {
    cur.push_back(mu);
    restrict_rec(F, blocks, idx + 1, cur, merge_partitions(merged, mu), out);
    cur.pop_back();
  }
}
}  // namespace

std::map<MultiPartition, MotiveClass> restrict_to(const EquivariantClass& F,
                                                  const std::vector<int>& blocks) {
  int total = 0;
  for (int b : blocks) total += b;
  if (total != F.degree()) throw domain_error("restrict_to: block sizes must sum to the degree");
  std::map<MultiPartition, MotiveClass> out;
  MultiPartition cur;
  restrict_rec(F, blocks, 0, cur, Partition{}, out);
  return out;
}

std::map<Partition, MotiveClass> schur_multiplicities(const EquivariantClass& F) {
  int n = F.degree();
  std::map<Partition, MotiveClass> out;
  for (auto& lambda : partitions_of(n)) {
    MotiveClass m;
    for (auto& mu : partitions_of(n)) {
      const MotiveClass& x = F.character_at(mu);
      if (x.is_zero()) continue;
      m += x * (class_size(mu) * sn_character(lambda, mu));
    }
    m = m.divide_exact(factorial(n));
    if (!m.is_zero()) out[lambda] = m;
  }
  return out;
}

}  // namespace ujac
