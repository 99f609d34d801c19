#pragma once

#include <optional>
#include <vector>

#include "hopfrep/exact/matrix.hpp"

namespace hopfrep {

/// Univariate polynomial over Q(i), coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GQ> coeffs);
  static Polynomial monomial(const GQ& c, std::size_t deg);
  static Polynomial constant(const GQ& c) { return monomial(c, 0); }
  /// x - r
  static Polynomial linear_root(const GQ& r);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<GQ>& coeffs() const { return c_; }
  [[nodiscard]] GQ coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GQ(); }
  [[nodiscard]] GQ leading() const { return c_.empty() ? GQ() : c_.back(); }
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] GQ eval(const GQ& x) const;
  [[nodiscard]] ExactMatrix eval(const ExactMatrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

 private:
  void trim();
  std::vector<GQ> c_;
};

/// Monic gcd.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
/// Returns monic g = s*a + t*b.
Polynomial poly_xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& t);
Polynomial squarefree_part(const Polynomial& p);

/// Roots of p lying in Q(i), found by the rational root theorem over Z[i].
/// Returns nullopt if the coefficients are too large to enumerate divisors.
std::optional<std::vector<GQ>> gaussian_rational_roots(const Polynomial& p);

/// Minimal polynomial of a square matrix (monic).
Polynomial minimal_polynomial(const ExactMatrix& m);

}  // namespace hopfrep
