#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfrep/exact/matrix.hpp"

namespace hopfrep {

using SparseRow = std::vector<std::pair<std::uint32_t, GQ>>;

/// Incremental row echelon form over Q(i) on a fixed number of variables.
///
/// Used two ways: as a homogeneous equation system (kernel_basis gives the
/// solution space) and as a growing subspace (add returns whether the new
/// vector was independent, reduce gives the residual).
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars);

  [[nodiscard]] std::size_t nvars() const { return n_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row was independent of those already added.
  bool add(const SparseRow& row);
  bool add(const Vec& row);

  /// Residual of v after elimination by the stored rows (zero iff v in span).
  [[nodiscard]] Vec reduce(const Vec& v) const;
  [[nodiscard]] bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  /// Solutions of the homogeneous system row . x = 0 for all added rows.
  [[nodiscard]] std::vector<Vec> kernel_basis() const;

  [[nodiscard]] const std::vector<std::uint32_t>& pivots() const { return pivot_col_; }

 private:
  // reduce the dense accumulator in place; returns index of first nonzero or n_
  std::size_t eliminate(Vec& acc) const;

  std::size_t n_;
  std::vector<SparseRow> rows_;          // leading entry 1 at pivot_col_[k]
  std::vector<std::uint32_t> pivot_col_;
  std::vector<std::int32_t> row_of_col_;  // -1 if column has no pivot
};

}  // namespace hopfrep
