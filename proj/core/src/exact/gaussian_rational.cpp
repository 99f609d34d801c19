#include "hopfrep/exact/gaussian_rational.hpp"

#include <cctype>

#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

namespace {

Rational parse_imag_coefficient(std::string term, std::string_view whole) {
  // term still carries its sign and the trailing "i"
  term.pop_back();
  if (!term.empty() && term.back() == '*') {
    term.pop_back();
    if (term.empty() || term == "+" || term == "-")
      throw ParseError("bad scalar literal '" + std::string(whole) + "'");
  }
  if (term.empty() || term == "+") return Rational(1);
  if (term == "-") return Rational(-1);
  return Rational::parse(term);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar literal");
  // "2i/3", "-i/3": a denominator after the i
  auto slash = s.rfind("i/");
  if (slash != std::string::npos) {
    Rational den = Rational::parse(s.substr(slash + 2));
    if (den.is_zero()) throw ParseError("bad scalar literal '" + std::string(text) + "'");
    GaussianRational head = parse(s.substr(0, slash + 1));
    return {head.re(), head.im() / den};
  }
  if (s.back() != 'i') return {Rational::parse(s)};
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '*') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_imag_coefficient(s, text)};
  return {Rational::parse(s.substr(0, split)), parse_imag_coefficient(s.substr(split), text)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return {re_.inverse()};
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  auto imag = [](const Rational& r) -> std::string {
    if (r.is_one()) return "i";
    if (r == Rational(-1)) return "-i";
    return r.to_string() + "*i";
  };
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag(im_);
  std::string im = imag(im_);
  if (im[0] != '-') im = "+" + im;
  return re_.to_string() + im;
}

bool GaussianRational::exact_sqrt(GaussianRational& out) const {
  // (x+iy)^2 = a+ib  =>  x^2 = (a+|z|)/2, y^2 = (|z|-a)/2 with |z| = sqrt(a^2+b^2)
  if (is_zero()) {
    out = GaussianRational();
    return true;
  }
  Rational modulus;
  if (!norm().exact_sqrt(modulus)) return false;
  Rational x, y;
  if (!((re_ + modulus) / Rational(2)).exact_sqrt(x)) return false;
  if (!((modulus - re_) / Rational(2)).exact_sqrt(y)) return false;
  if (im_.sign() < 0) y = -y;
  GaussianRational cand(x, y);
  if (!(cand * cand == *this)) return false;
  out = cand;
  return true;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
  if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
  if (!b.re_.is_zero()) re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
  if (!b.re_.is_zero()) re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

void fma_into(GaussianRational& acc, const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  acc += a * b;
}

}  // namespace hopfrep
