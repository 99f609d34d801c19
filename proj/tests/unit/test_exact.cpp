#include <random>

#include "doctest.h"
#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/gaussian_rational.hpp"
#include "hopfrep/exact/linear_system.hpp"
#include "hopfrep/exact/matrix.hpp"
#include "hopfrep/exact/matrix_algebra.hpp"
#include "hopfrep/exact/polynomial.hpp"

using namespace hopfrep;

namespace {
GQ q(const char* s) { return GQ::parse(s); }
}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, -5).to_string() == "0");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("rational overflow promotes and demotes") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  CHECK(sq.to_mpq() == mpq_class(big.to_mpq() * big.to_mpq()));
}

TEST_CASE("rational agrees with gmp on random expressions") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  std::uniform_int_distribution<std::int64_t> huge(-(1LL << 62), 1LL << 62);
  for (int t = 0; t < 2000; ++t) {
    auto pick = [&](bool wide) {
      std::int64_t n = wide ? huge(rng) : small(rng);
      std::int64_t d = wide ? huge(rng) : small(rng);
      if (d == 0) d = 1;
      return Rational(n, d);
    };
    Rational a = pick(t % 3 == 0), b = pick(t % 5 == 0);
    mpq_class ma = a.to_mpq(), mb = b.to_mpq();
    CHECK((a + b).to_mpq() == mpq_class(ma + mb));
    CHECK((a - b).to_mpq() == mpq_class(ma - mb));
    CHECK((a * b).to_mpq() == mpq_class(ma * mb));
    if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(ma / mb));
    CHECK(((a <=> b) < 0) == (ma < mb));
  }
}

TEST_CASE("gaussian rational products") {
  CHECK(q("1+i") * q("1-i") == GQ(2));
  CHECK(q("1/3*i") * q("1/3*i") == q("-1/9"));
  GQ a = GQ::i(), b = -GQ::i();
  CHECK(GQ(-5) * a * a + GQ(-4) * a * b == GQ(1));
}

TEST_CASE("gaussian rational inverse") {
  CHECK(q("1/3*i").inverse() == q("-3*i"));
  CHECK(GQ(2).inverse() == q("1/2"));
  CHECK(q("1+i").inverse() == q("1/2-1/2*i"));
  CHECK(q("1+i") * q("1+i").inverse() == GQ(1));
  CHECK_THROWS_AS((void)GQ().inverse(), DivisionByZero);
}

TEST_CASE("gaussian rational string grammar") {
  for (const char* s : {"0", "2", "-1/3", "i", "-i", "2*i", "-1/3*i", "1/2-1/2*i", "1+i", "-7/2+3/5*i"})
    CHECK(q(s).to_string() == s);
  CHECK(q("1/2+1/3*i") == GQ(Rational(1, 2), Rational(1, 3)));
  CHECK(q("+i") == GQ::i());
  CHECK(q("3/6+0*i") == q("1/2"));
  CHECK_THROWS_AS(q("1+*i"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
}

TEST_CASE("gaussian rational square roots") {
  GQ r;
  CHECK(q("-1/9").exact_sqrt(r));
  CHECK(r * r == q("-1/9"));
  CHECK(q("2*i").exact_sqrt(r));
  CHECK(r == q("1+i"));
  CHECK_FALSE(GQ(2).exact_sqrt(r));
  CHECK_FALSE(GQ::i().exact_sqrt(r));
}

TEST_CASE("kernel basis") {
  ExactMatrix m{{1, 1}, {1, 1}};
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]) == Vec{0, 0});
  CHECK(ExactMatrix::identity(3).kernel_basis().empty());
  CHECK(ExactMatrix::zero(1, 1).kernel_basis().size() == 1);
}

TEST_CASE("rank nullity and transpose rank on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = GQ(Rational(d(rng)), Rational(t % 2 ? d(rng) : 0));
    CHECK(m.rank() + m.kernel_basis().size() == c);
    CHECK(m.rank() == m.transpose().rank());
    LinearSystem ls(c);
    for (std::size_t i = 0; i < r; ++i) ls.add(m.row(i));
    CHECK(ls.rank() == m.rank());
    auto ker = ls.kernel_basis();
    CHECK(ker.size() == c - m.rank());
    for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("inverse and determinant") {
  ExactMatrix m{{1, 2}, {3, 4}};
  CHECK(m.determinant() == GQ(-2));
  CHECK((m * m.inverse()).is_identity());
  CHECK_THROWS_AS((void)(ExactMatrix{{1, 1}, {1, 1}}).inverse(), DivisionByZero);
}

TEST_CASE("subalgebra closure") {
  CHECK(subalgebra_closure({ExactMatrix::identity(2)}, true).size() == 1);
  ExactMatrix h{{1, 0}, {0, -1}}, a{{0, 0}, {1, 0}};
  // lower triangular pair
  CHECK(subalgebra_closure({h, a}, true).size() == 3);
  ExactMatrix b{{0, 1}, {0, 0}};
  CHECK(subalgebra_closure({a, b}, true).size() == 4);
}

TEST_CASE("trace form radical") {
  std::vector<ExactMatrix> full;
  for (int k = 0; k < 4; ++k) {
    ExactMatrix e(2, 2);
    e(k / 2, k % 2) = GQ(1);
    full.push_back(e);
  }
  CHECK(trace_form_radical(full).empty());
  std::vector<ExactMatrix> upper{ExactMatrix{{1, 0}, {0, 0}}, ExactMatrix{{0, 0}, {0, 1}}, ExactMatrix{{0, 1}, {0, 0}}};
  auto j = trace_form_radical(upper);
  REQUIRE(j.size() == 1);
  CHECK(j[0].is_nilpotent());
  CHECK_THROWS_AS(trace_form_radical({ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0, 0}, {1, 0}}}), NotClosedError);
}

TEST_CASE("idempotent lifting") {
  std::vector<ExactMatrix> upper{ExactMatrix{{1, 0}, {0, 0}}, ExactMatrix{{0, 0}, {0, 1}}, ExactMatrix{{0, 1}, {0, 0}}};
  std::vector<ExactMatrix> rad{ExactMatrix{{0, 1}, {0, 0}}};
  ExactMatrix e0{{1, 5}, {0, 0}};
  CHECK(lift_idempotent(e0, rad, upper) == e0);  // already idempotent
  ExactMatrix noisy{{1, GQ(Rational(7, 3))}, {0, 0}};
  ExactMatrix e = lift_idempotent(noisy, rad, upper);
  CHECK(e * e == e);
  CHECK(lift_idempotent(ExactMatrix::identity(3), {}, {}).is_identity());
}

TEST_CASE("idempotent lifting with genuine radical noise") {
  // e0 = diag(1,0,0) + nilpotent noise in the upper-triangular 3x3 algebra
  ExactMatrix e0{{1, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  ExactMatrix e = lift_idempotent(e0, {}, {});
  CHECK(e * e == e);
  CHECK(e.trace() == GQ(1));
}

TEST_CASE("polynomials and gaussian roots") {
  // (x - i)(x + i/3)(x - 2)
  Polynomial p = Polynomial::linear_root(GQ::i()) * Polynomial::linear_root(q("-1/3*i")) * Polynomial::linear_root(GQ(2));
  auto roots = gaussian_rational_roots(p * Polynomial::constant(GQ(9)));
  REQUIRE(roots);
  CHECK(roots->size() == 3);
  auto none = gaussian_rational_roots(Polynomial({GQ(-2), GQ(0), GQ(1)}));  // x^2 - 2
  REQUIRE(none);
  CHECK(none->empty());
  Polynomial sq = p * p;
  CHECK(squarefree_part(sq) == p.monic());
  ExactMatrix m{{0, 1}, {0, 0}};
  CHECK(minimal_polynomial(m) == Polynomial({GQ(0), GQ(0), GQ(1)}));
  CHECK(minimal_polynomial(ExactMatrix::identity(3)) == Polynomial({GQ(-1), GQ(1)}));
  Polynomial s, t;
  Polynomial g = poly_xgcd(Polynomial::linear_root(GQ(1)), Polynomial::linear_root(GQ(2)), s, t);
  CHECK(g == Polynomial::constant(GQ(1)));
}
