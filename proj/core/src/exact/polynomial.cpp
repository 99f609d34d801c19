#include "hopfrep/exact/polynomial.hpp"

#include <map>
#include <set>

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/linear_system.hpp"

namespace hopfrep {

Polynomial::Polynomial(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const GQ& c, std::size_t deg) {
  std::vector<GQ> v(deg + 1);
  v[deg] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const GQ& r) { return Polynomial({-r, GQ(1)}); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  GQ inv = leading().inverse();
  std::vector<GQ> v = c_;
  for (auto& x : v) x *= inv;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GQ> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GQ(static_cast<std::int64_t>(k));
  return Polynomial(std::move(v));
}

GQ Polynomial::eval(const GQ& x) const {
  GQ acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

ExactMatrix Polynomial::eval(const ExactMatrix& m) const {
  ExactMatrix acc = ExactMatrix::zero(m.rows(), m.cols());
  ExactMatrix id = ExactMatrix::identity(m.rows());
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * m + id.scaled(c_[k]);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GQ> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<GQ> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GQ> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) fma_into(v[i + j], a.c_[i], b.c_[j]);
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<GQ> rem = a.c_;
  std::vector<GQ> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  GQ inv = b.leading().inverse();
  for (std::size_t k = quo.size(); k-- > 0;) {
    GQ f = rem[k + b.c_.size() - 1] * inv;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial s, t;
  return poly_xgcd(a, b, s, t);
}

Polynomial poly_xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& t) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(GQ(1)), s1;
  Polynomial t0, t1 = Polynomial::constant(GQ(1));
  while (!r1.is_zero()) {
    Polynomial q, r;
    Polynomial::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    Polynomial ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  GQ inv = r0.leading().inverse();
  s = s0 * Polynomial::constant(inv);
  t = t0 * Polynomial::constant(inv);
  return r0.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = poly_gcd(p, p.derivative());
  Polynomial q, r;
  Polynomial::divmod(p, g, q, r);
  return q.monic();
}

namespace {

struct GInt {
  mpz_class re, im;
};

bool gint_divides(const GInt& d, const GInt& z) {
  // z / d = z * conj(d) / N(d)
  mpz_class n = d.re * d.re + d.im * d.im;
  if (n == 0) return false;
  mpz_class a = z.re * d.re + z.im * d.im;
  mpz_class b = z.im * d.re - z.re * d.im;
  return mpz_divisible_p(a.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(b.get_mpz_t(), n.get_mpz_t());
}

constexpr unsigned long kNormLimit = 1000000000000UL;

// All Gaussian-integer divisors of z (every associate), or nullopt if too large.
std::optional<std::vector<GInt>> gint_divisors(const GInt& z) {
  mpz_class n = z.re * z.re + z.im * z.im;
  if (n > kNormLimit) return std::nullopt;
  unsigned long nn = n.get_ui();
  std::vector<unsigned long> ms;
  for (unsigned long m = 1; m * m <= nn; ++m)
    if (nn % m == 0) {
      ms.push_back(m);
      if (m != nn / m) ms.push_back(nn / m);
    }
  std::vector<GInt> out;
  for (unsigned long m : ms) {
    for (long x = 0; static_cast<unsigned long>(x * x) <= m; ++x) {
      unsigned long y2 = m - static_cast<unsigned long>(x * x);
      mpz_class y2z = y2, yz;
      if (!mpz_perfect_square_p(y2z.get_mpz_t())) continue;
      mpz_sqrt(yz.get_mpz_t(), y2z.get_mpz_t());
      long y = yz.get_si();
      std::set<std::pair<long, long>> seen;
      for (long sx : {1L, -1L})
        for (long sy : {1L, -1L})
          if (seen.insert({sx * x, sy * y}).second) {
            GInt d{mpz_class(sx * x), mpz_class(sy * y)};
            if (gint_divides(d, z)) out.push_back(d);
          }
    }
  }
  return out;
}

GQ gq_from_gint(const GInt& g) { return {Rational(mpq_class(g.re)), Rational(mpq_class(g.im))}; }

}  // namespace

std::optional<std::vector<GQ>> gaussian_rational_roots(const Polynomial& p0) {
  if (p0.is_zero()) throw Error("roots of the zero polynomial");
  std::vector<GQ> roots;
  Polynomial p = p0;
  // strip the root 0
  std::size_t shift = 0;
  while (shift < p.coeffs().size() && p.coeffs()[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.emplace_back();
    p = Polynomial(std::vector<GQ>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
  }
  if (p.degree() <= 0) return roots;
  // clear denominators
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().denominator().get_mpz_t());
  }
  auto to_gint = [&](const GQ& c) {
    mpq_class re = c.re().to_mpq() * l, im = c.im().to_mpq() * l;
    return GInt{re.get_num(), im.get_num()};
  };
  auto num_div = gint_divisors(to_gint(p.coeffs().front()));
  auto den_div = gint_divisors(to_gint(p.leading()));
  if (!num_div || !den_div) return std::nullopt;
  std::map<std::string, GQ> cand;
  for (const auto& a : *num_div)
    for (const auto& b : *den_div) {
      GQ r = gq_from_gint(a) / gq_from_gint(b);
      cand.emplace(r.to_string(), r);
    }
  for (const auto& [key, r] : cand)
    if (p.eval(r).is_zero()) roots.push_back(r);
  return roots;
}

Polynomial minimal_polynomial(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  std::size_t n = m.rows();
  LinearSystem span(n * n);
  std::vector<Vec> powers;
  ExactMatrix p = ExactMatrix::identity(n);
  while (true) {
    const Vec& flat = p.entries();
    powers.push_back(flat);
    if (!span.add(flat)) break;
    p = p * m;
  }
  ExactMatrix cols = ExactMatrix::from_columns(powers, n * n);
  auto ker = cols.kernel_basis();
  // the last power is the first dependent one, so the kernel is one-dimensional
  Polynomial mp(ker.at(0));
  return mp.monic();
}

}  // namespace hopfrep
