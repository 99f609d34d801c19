#pragma once

#include <optional>
#include <vector>

#include "hopfrep/exact/matrix.hpp"

namespace hopfrep {

/// Coordinates with respect to a linearly independent family of n x n
/// matrices. A set of entry positions on which the family is already
/// independent is chosen once, so a coordinate solve is a d x d product plus
/// a sparse verification.
class MatrixSpan {
 public:
  /// Drops dependent members of `family`.
  explicit MatrixSpan(const std::vector<ExactMatrix>& family);

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const std::vector<ExactMatrix>& basis() const { return basis_; }

  /// Coordinates of m, or nullopt if m is outside the span.
  [[nodiscard]] std::optional<Vec> coords(const ExactMatrix& m) const;
  [[nodiscard]] ExactMatrix combine(const Vec& c) const;

 private:
  std::size_t n_ = 0;
  std::vector<ExactMatrix> basis_;
  std::vector<std::size_t> positions_;  // flat indices
  ExactMatrix inv_;                     // inverse of basis evaluated at positions_
};

/// Basis of the smallest subalgebra (unital if requested) containing gens.
std::vector<ExactMatrix> subalgebra_closure(const std::vector<ExactMatrix>& gens, bool unital,
                                            std::size_t stop_at = 0);

/// Structure constants c[a][b] = coordinates of B_a B_b. Throws NotClosedError.
std::vector<std::vector<Vec>> structure_constants(const MatrixSpan& span);

/// Radical of the bilinear form (x,y) -> tr(xy) given structure constants
/// and the trace of each basis element; result as coordinate vectors.
std::vector<Vec> trace_form_radical_coords(const std::vector<std::vector<Vec>>& constants, const Vec& traces);

/// {x in span : tr(xy) = 0 for all y}. Throws NotClosedError if the basis is
/// not product-closed.
std::vector<ExactMatrix> trace_form_radical(const std::vector<ExactMatrix>& basis);

/// Idempotent e congruent to e0 modulo the radical, by e <- 3e^2 - 2e^3.
/// `algebra` and `radical` are used to check the input and output; either
/// may be empty to skip that check.
ExactMatrix lift_idempotent(const ExactMatrix& e0, const std::vector<ExactMatrix>& radical,
                            const std::vector<ExactMatrix>& algebra);

}  // namespace hopfrep
