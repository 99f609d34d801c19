#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfrep/exact/gaussian_rational.hpp"

namespace hopfrep {

/// Finite rack: op(i,j) = i |> j.
struct Rack {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> op;

  [[nodiscard]] std::size_t size() const { return labels.size(); }
  [[nodiscard]] std::size_t act(std::size_t i, std::size_t j) const { return op[i][j]; }
  [[nodiscard]] std::size_t index_of(const std::string& label) const;
};

/// Conjugation rack on the transpositions of S_n, lexicographic order.
Rack transposition_rack(std::size_t n);

/// Each failure is a human readable line with a witness.
std::vector<std::string> rack_failures(const Rack& r);

using Cocycle2 = std::vector<std::vector<GQ>>;

Cocycle2 constant_cocycle(std::size_t n, const GQ& c);
std::vector<std::string> cocycle_failures(const Rack& r, const Cocycle2& q);

struct ClassData {
  /// pairs[h-1] = (i_{h+1}, i_h), starting at the lexicographically smallest pair
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t size = 0;
  std::vector<GQ> eta;   // eta[h-1] = eta_h, h = 1..n
  std::vector<GQ> zeta;  // zeta[h-1] = zeta_h, h = 1..n+1
  bool in_Rprime = false;
  /// element index i_k for k = 1..n+2 (seq[k-1])
  std::vector<std::size_t> seq;

  [[nodiscard]] bool singleton() const { return size == 1; }
  [[nodiscard]] std::size_t position_of(std::size_t i, std::size_t j) const;
};

std::vector<ClassData> enumerate_classes(const Rack& r, const Cocycle2& q);

/// Index of the class containing (i,j).
std::size_t class_of(const std::vector<ClassData>& classes, std::size_t i, std::size_t j);

/// (alpha_j(C), beta_j(C)) as the literal geometric sums.
std::pair<GQ, GQ> alpha_beta(const ClassData& c, const GQ& chi_j_gj);

/// Scale of lambda when the class relation is re-read from the pair at
/// position `to` instead of position `from` (both indices into pairs).
GQ lambda_start_factor(const ClassData& c, const Cocycle2& q, std::size_t from, std::size_t to);

}  // namespace hopfrep
