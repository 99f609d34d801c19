#include <memory>

#include "doctest.h"
#include "hopfrep/algebra/table.hpp"
#include "hopfrep/exact/errors.hpp"

using namespace hopfrep;

namespace {

std::shared_ptr<const QlDatum> a3(int lam) {
  return std::make_shared<const QlDatum>(build_builtin(Builtin::Q3_minus, 3, {GQ(lam)}));
}

Element single(const QlDatum& d, const std::string& w, std::size_t g = 0) {
  return Element{{Term{parse_word(d, w), static_cast<std::uint32_t>(g)}, GQ(1)}};
}

}  // namespace

TEST_CASE("word labels") {
  auto d = a3(0);
  CHECK(word_label(*d, parse_word(*d, "a12a13a23")) == "a12a13a23");
  CHECK(parse_word(*d, "1").empty());
  CHECK_THROWS_AS(parse_word(*d, "b12"), ParseError);
  auto basis = a3_candidate_basis(*d);
  CHECK(basis.size() == 12);
  CHECK(word_label(*d, basis.back()) == "a12a13a12a23");
}

TEST_CASE("oriented relations of A_lambda") {
  auto d = a3(1);
  auto rs = relation_set(*d);
  CHECK(rs.swaps.size() == 6);
  CHECK(rs.quadratics.size() == 5);
  std::size_t g123 = d->group.index_of(Perm{1, 2, 0});
  // a23a13 -> lambda - lambda H(123) - a12a23 - a13a12
  bool found = false;
  for (const auto& q : rs.quadratics) {
    if (q.lhs != parse_word(*d, "a23a13")) continue;
    found = true;
    Element want;
    add_term(want, Term{Word{}, 0}, GQ(1));
    add_term(want, Term{Word{}, static_cast<std::uint32_t>(g123)}, GQ(-1));
    add_term(want, Term{parse_word(*d, "a12a23"), 0}, GQ(-1));
    add_term(want, Term{parse_word(*d, "a13a12"), 0}, GQ(-1));
    CHECK(q.rhs == want);
  }
  CHECK(found);
}

TEST_CASE("A_0 and A_1 tables") {
  for (int lam : {0, 1}) {
    CAPTURE(lam);
    auto d = a3(lam);
    auto t = build_table(d, a3_candidate_basis(*d));
    CHECK(t.dim() == 72);
    CHECK(t.associativity_audit().empty());
    CHECK(t.unit_audit().empty());
    CHECK(t.relation_audit().empty());
    // a cubic rule is needed for confluence
    CHECK(t.rewriting().rules().count(parse_word(*d, "a13a12a13")) == 1);
    // squares vanish
    for (std::size_t l = 0; l < 3; ++l) CHECK(is_zero_vec(t.product(t.generator_a(l), t.generator_a(l))));
    // top monomial survives
    CHECK(!is_zero_vec(t.coords(single(*d, "a12a13a12a23"))));
    auto r = algebra_radical(t);
    if (lam == 0) {
      CHECK(r.dim_radical == 66);
      CHECK(r.dim_semisimple == 6);
    } else {
      CHECK(r.dim_radical == 54);
      CHECK(r.dim_semisimple == 18);
    }
  }
}

TEST_CASE("braided commutator in A_1") {
  auto d = a3(1);
  auto t = build_table(d, a3_candidate_basis(*d));
  std::size_t g132 = d->group.index_of(Perm{2, 0, 1});
  // a12a13 + a23a12 + a13a23 = 1 - H(132)
  Vec lhs = add_vec(add_vec(t.coords(single(*d, "a12a13")), t.coords(single(*d, "a23a12"))),
                    t.coords(single(*d, "a13a23")));
  Vec rhs = add_vec(t.generator_h(0), scale_vec(t.generator_h(g132), GQ(-1)));
  CHECK(lhs == rhs);
}

TEST_CASE("radical is an ideal and J=0 for the group algebra") {
  auto d = a3(1);
  auto t = build_table(d, a3_candidate_basis(*d));
  auto r = algebra_radical(t);
  // products of radical elements with generators stay in the radical
  LinearSystem span(t.dim());
  for (const auto& v : r.radical_basis) span.add(v);
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec& v = r.radical_basis[k * 7 % r.radical_basis.size()];
    for (std::size_t l = 0; l < 3; ++l) {
      CHECK(span.contains(t.product(t.generator_a(l), v)));
      CHECK(span.contains(t.product(v, t.generator_a(l))));
    }
  }
  auto kg = group_algebra_table(d);
  CHECK(kg.dim() == 6);
  CHECK(kg.associativity_audit().empty());
  CHECK(algebra_radical(kg).dim_radical == 0);
}

TEST_CASE("bad candidate lists and step limits") {
  auto d = a3(0);
  auto short_list = a3_candidate_basis(*d);
  short_list.pop_back();
  CHECK_THROWS_AS(build_table(d, short_list), NotClosedError);
  auto with_reducible = a3_candidate_basis(*d);
  with_reducible.back() = parse_word(*d, "a23a13");
  CHECK_THROWS_AS(build_table(d, with_reducible), NotClosedError);
  CHECK_THROWS_AS(build_table(d, a3_candidate_basis(*d), 1), RewriteLimitError);
}
