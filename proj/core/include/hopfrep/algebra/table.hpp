#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfrep/algebra/rewriting.hpp"
#include "hopfrep/exact/linear_system.hpp"
#include "hopfrep/exact/matrix.hpp"

namespace hopfrep {

/// Structure constants of H(Q) on the basis {w H_g}, index = word*|G| + g.
class AlgebraTable {
 public:
  [[nodiscard]] std::size_t dim() const { return words_.size() * order_; }
  [[nodiscard]] std::size_t group_order() const { return order_; }
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  [[nodiscard]] std::size_t index(std::size_t word, std::size_t g) const { return word * order_ + g; }
  [[nodiscard]] std::size_t word_index(const Word& w) const;
  [[nodiscard]] std::size_t unit() const { return 0; }
  [[nodiscard]] std::string label(std::size_t k) const;
  [[nodiscard]] const QlDatum& datum() const { return *datum_; }
  [[nodiscard]] std::shared_ptr<const QlDatum> datum_ptr() const { return datum_; }
  [[nodiscard]] const RewriteSystem& rewriting() const { return *rw_; }

  /// e_i e_j as a sparse coordinate row.
  [[nodiscard]] const SparseRow& mult(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  [[nodiscard]] Vec product(const Vec& x, const Vec& y) const;
  /// Coordinates of an element (normal form taken first).
  [[nodiscard]] Vec coords(const Element& e) const;
  [[nodiscard]] Vec basis_vector(std::size_t k) const;
  [[nodiscard]] Vec generator_a(std::size_t l) const;
  [[nodiscard]] Vec generator_h(std::size_t g) const;
  [[nodiscard]] ExactMatrix left_regular(std::size_t i) const;

  /// First failure of (e_i e_j) e_k = e_i (e_j e_k), or empty string.
  [[nodiscard]] std::string associativity_audit() const;
  [[nodiscard]] std::string unit_audit() const;
  /// Every relation of relation_set evaluates to zero; returns failures.
  [[nodiscard]] std::vector<std::string> relation_audit() const;

  [[nodiscard]] nlohmann::json to_json() const;

 private:
  friend AlgebraTable build_table(std::shared_ptr<const QlDatum>, const std::vector<Word>&, std::size_t);
  std::shared_ptr<const QlDatum> datum_;
  std::shared_ptr<RewriteSystem> rw_;
  std::vector<Word> words_;
  std::size_t order_ = 0;
  std::vector<SparseRow> mult_;
};

/// Parse "a12a13" style labels (or "1") into words over the datum's rack.
Word parse_word(const QlDatum& d, const std::string& label);

/// The twelve monomials of the basis of A_lambda.
std::vector<Word> a3_candidate_basis(const QlDatum& d);

/// Throws RewriteLimitError on a runaway orientation and NotClosedError when
/// the irreducible words differ from the candidate list.
AlgebraTable build_table(std::shared_ptr<const QlDatum> d, const std::vector<Word>& monomials,
                         std::size_t step_limit = 10000);

struct RadicalInfo {
  std::size_t dim_radical = 0;
  std::size_t dim_semisimple = 0;
  std::vector<Vec> radical_basis;
};

RadicalInfo algebra_radical(const AlgebraTable& t);

/// Group algebra kG as a table (no a-letters), for sanity checks.
AlgebraTable group_algebra_table(std::shared_ptr<const QlDatum> d);

}  // namespace hopfrep
