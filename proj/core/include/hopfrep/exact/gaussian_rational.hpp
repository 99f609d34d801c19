#pragma once

#include <string>
#include <string_view>

#include "hopfrep/exact/rational.hpp"

namespace hopfrep {

/// Element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t n) : re_(n) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "p/q", "p/q*i", "i", "-i", "p/q+r/s*i", "p/q-i" and so on.
  static GaussianRational parse(std::string_view text);

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] GaussianRational inverse() const;
  [[nodiscard]] std::string to_string() const;

  /// Square root inside Q(i), if one exists.
  [[nodiscard]] bool exact_sqrt(GaussianRational& out) const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& b);
  GaussianRational& operator-=(const GaussianRational& b);
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  [[nodiscard]] std::size_t hash() const { return re_.hash() * 1000003u ^ im_.hash(); }

 private:
  Rational re_;
  Rational im_;
};

using GQ = GaussianRational;

/// Add a*b into acc without creating temporaries for the common real cases.
void fma_into(GaussianRational& acc, const GaussianRational& a, const GaussianRational& b);

}  // namespace hopfrep

template <>
struct std::hash<hopfrep::GaussianRational> {
  std::size_t operator()(const hopfrep::GaussianRational& g) const noexcept { return g.hash(); }
};
