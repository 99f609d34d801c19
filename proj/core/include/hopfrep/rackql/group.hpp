#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hopfrep {

/// Permutation of {0,...,n-1} in one-line notation.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(std::size_t n);
/// (a*b)(x) = a(b(x))
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm transposition(std::size_t n, std::size_t i, std::size_t j);
int perm_sign(const Perm& p);
/// Cycle notation with 1-based points, e.g. "(123)" or "e".
std::string perm_cycle_string(const Perm& p);

/// Finite permutation group given by generators. Element 0 is the identity;
/// elements are listed in breadth-first order from the generators.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  static PermGroup symmetric(std::size_t n);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t order() const { return elems_.size(); }
  [[nodiscard]] const Perm& element(std::size_t k) const { return elems_[k]; }
  [[nodiscard]] const std::vector<Perm>& elements() const { return elems_; }
  [[nodiscard]] const std::vector<std::size_t>& generators() const { return gens_; }
  [[nodiscard]] std::size_t index_of(const Perm& p) const;
  [[nodiscard]] bool contains(const Perm& p) const { return index_.count(p) != 0; }

  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * elems_.size() + b]; }
  [[nodiscard]] std::size_t inv(std::size_t a) const { return inv_[a]; }
  [[nodiscard]] std::size_t identity() const { return 0; }

  /// Shortest word in the generators (indices into generators()) for each element.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& words() const { return words_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elems_;
  std::map<Perm, std::size_t> index_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::vector<std::size_t>> words_;
};

}  // namespace hopfrep
