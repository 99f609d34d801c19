#include "hopfrep/rackql/group.hpp"

#include <deque>

#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>(k);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint8_t>(x);
  return r;
}

Perm transposition(std::size_t n, std::size_t i, std::size_t j) {
  Perm p = perm_identity(n);
  std::swap(p[i], p[j]);
  return p;
}

int perm_sign(const Perm& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string perm_cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      out += std::to_string(y + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw ValidationError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw ValidationError("generator is not a permutation");
      hit[x] = true;
    }
  }
  elems_.push_back(perm_identity(degree));
  index_[elems_[0]] = 0;
  words_.emplace_back();
  std::vector<std::size_t> gen_index;
  for (std::size_t q = 0; q < elems_.size(); ++q) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Perm p = perm_compose(elems_[q], generators[k]);
      if (index_.count(p)) continue;
      index_[p] = elems_.size();
      auto w = words_[q];
      w.push_back(k);
      words_.push_back(std::move(w));
      elems_.push_back(std::move(p));
      if (elems_.size() > 50000) throw ValidationError("group too large");
    }
  }
  for (const auto& g : generators) gens_.push_back(index_.at(g));
  std::size_t n = elems_.size();
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv_[a] = index_.at(perm_inverse(elems_[a]));
    for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = index_.at(perm_compose(elems_[a], elems_[b]));
  }
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t k = 0; k + 1 < n; ++k) gens.push_back(transposition(n, k, k + 1));
  return {n, gens};
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw ValidationError("permutation " + perm_cycle_string(p) + " not in group");
  return it->second;
}

}  // namespace hopfrep
