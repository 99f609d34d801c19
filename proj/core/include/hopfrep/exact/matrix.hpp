#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfrep/exact/gaussian_rational.hpp"

namespace hopfrep {

using Vec = std::vector<GQ>;

/// Dense exact matrix, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GQ> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<GQ>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t r, std::size_t c) { return {r, c}; }
  static ExactMatrix diagonal(const Vec& d);
  static ExactMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const std::vector<GQ>& entries() const { return data_; }

  GQ& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GQ& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vec column(std::size_t c) const;
  [[nodiscard]] Vec row(std::size_t r) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] GQ trace() const;
  [[nodiscard]] ExactMatrix transpose() const;
  [[nodiscard]] ExactMatrix scaled(const GQ& s) const;
  [[nodiscard]] ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);

  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] GQ determinant() const;
  [[nodiscard]] bool is_invertible() const { return is_square() && rank() == rows_; }
  /// Throws DivisionByZero when singular.
  [[nodiscard]] ExactMatrix inverse() const;
  /// Basis of the right null space {x : Mx = 0}.
  [[nodiscard]] std::vector<Vec> kernel_basis() const;
  /// Basis of the column space, chosen among the columns.
  [[nodiscard]] std::vector<Vec> column_space_basis() const;
  [[nodiscard]] bool is_nilpotent() const;
  [[nodiscard]] ExactMatrix power(unsigned k) const;

  [[nodiscard]] Vec apply(const Vec& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const { return scaled(GQ(-1)); }
  ExactMatrix& operator+=(const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GQ> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
/// a*b - b*a
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Free function form.
inline std::vector<Vec> kernel_basis(const ExactMatrix& m) { return m.kernel_basis(); }

bool is_zero_vec(const Vec& v);
Vec scale_vec(const Vec& v, const GQ& s);
Vec add_vec(const Vec& a, const Vec& b);
/// Scale so that the first nonzero entry is 1.
Vec normalize_leading(const Vec& v);

}  // namespace hopfrep
