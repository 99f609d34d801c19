#include "doctest.h"
#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/exact/errors.hpp"

using namespace hopfrep;

namespace {

const HModule& s1(const std::string& name) {
  static const auto list = simples(1);
  return find_entry(list, name).module;
}

}  // namespace

TEST_CASE("group matrices from generators") {
  const auto& m = s1("S_st(i)");
  const auto& G = m.datum().group;
  CHECK(m.group().size() == 6);
  CHECK(m.h(0).is_identity());
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) CHECK(m.h(G.mul(x, y)) == m.h(x) * m.h(y));
}

TEST_CASE("json round trip") {
  const auto& m = s1("S_st(-i/3)");
  auto j = m.to_json();
  CHECK(j["name"] == "S_st(-i/3)");
  auto back = module_from_json(m.datum_ptr(), j);
  CHECK(back.a_all() == m.a_all());
  CHECK(back.h_gens() == m.h_gens());
  j["a"].erase("(13)");
  CHECK_THROWS_AS(module_from_json(m.datum_ptr(), j), ParseError);
}

TEST_CASE("wrong shapes are rejected") {
  const auto& m = s1("S_eps");
  CHECK_THROWS_AS(HModule(m.datum_ptr(), m.h_gens(), {}, "x"), DimensionMismatch);
}

TEST_CASE("hom spaces between simples") {
  std::vector<std::string> names{"S_eps", "S_sg", "S_st(i)", "S_st(-i)", "S_st(i/3)", "S_st(-i/3)"};
  for (const auto& a : names)
    for (const auto& b : names) CHECK(hom_space(s1(a), s1(b)).size() == (a == b ? 1U : 0U));
  // the group alone sees the four W_st as equal
  CHECK(hom_space_group(s1("S_st(i)"), s1("S_st(-i)")).size() == 1);
}

TEST_CASE("tensor products are associative up to isomorphism") {
  std::vector<std::string> names{"S_sg", "S_st(i)", "S_st(i/3)"};
  for (const auto& a : names)
    for (const auto& b : names)
      for (const auto& c : names) {
        INFO(a << " " << b << " " << c);
        auto l = tensor(tensor(s1(a), s1(b)), s1(c));
        auto r = tensor(s1(a), tensor(s1(b), s1(c)));
        CHECK(verify_module(l).ok());
        // same basis order, so the identity is an isomorphism
        CHECK(l.a_all() == r.a_all());
        CHECK(is_isomorphic(l, r) == Verdict::yes);
      }
}

TEST_CASE("duals and the unit object") {
  for (const auto& n : {"S_sg", "S_st(i)", "S_st(-i/3)"}) {
    auto d = dual(s1(n));
    CHECK(verify_module(d).ok());
    CHECK(is_simple(d));
    // evaluation lives on M* (x) M
    CHECK(hom_space(tensor(d, s1(n)), s1("S_eps")).size() == 1);
    // S^2(a_i) = -a_i, so M** is M with the a_i negated
    std::vector<ExactMatrix> neg;
    for (const auto& a : s1(n).a_all()) neg.push_back(-a);
    HModule twist(s1(n).datum_ptr(), s1(n).h_gens(), neg, "twist");
    CHECK(is_isomorphic(dual(d), twist) == Verdict::yes);
  }
  CHECK(is_isomorphic(dual(dual(s1("S_st(i)"))), s1("S_st(-i)")) == Verdict::yes);
}

TEST_CASE("direct sums, submodules and quotients") {
  auto s = direct_sum(s1("S_eps"), s1("S_st(i)"));
  CHECK(verify_module(s).ok());
  CHECK(is_indecomposable(s) == Verdict::no);
  Vec e0(3);
  e0[0] = GQ(1);
  CHECK(is_submodule(s, {e0}));
  auto q = quotient_module(s, {e0});
  CHECK(is_isomorphic(q, s1("S_st(i)")) == Verdict::yes);
  Vec e1(3);
  e1[1] = GQ(1);
  CHECK_FALSE(is_submodule(s, {e1}));
}

TEST_CASE("decompose and reassemble") {
  auto big = direct_sum(direct_sum(s1("S_sg"), s1("S_st(i)")), tensor(s1("S_st(i)"), s1("S_st(i)")));
  auto dec = decompose(big);
  CHECK(dec.complete);
  std::size_t total = 0;
  for (const auto& m : dec.summands) {
    CHECK(verify_module(m).ok());
    CHECK(is_indecomposable(m) == Verdict::yes);
    total += m.dim();
  }
  CHECK(total == big.dim());
  REQUIRE(dec.summands.size() == 3);
  auto back = dec.summands[0];
  for (std::size_t k = 1; k < dec.summands.size(); ++k) back = direct_sum(back, dec.summands[k]);
  CHECK(is_isomorphic(back, big) == Verdict::yes);
}

TEST_CASE("isotypic profiles") {
  CHECK(profile_string(restrict_isotypic(s1("S_st(i)"))) == "{eps:0, sg:0, st:1}");
  auto t = tensor(s1("S_st(i)"), s1("S_st(i/3)"));
  CHECK(profile_string(restrict_isotypic(t)) == "{eps:1, sg:1, st:1}");
}

TEST_CASE("induced modules") {
  const auto& t = a_table(1);
  auto ie = induce(t, s1("S_eps").h_gens(), "I");
  CHECK(ie.dim() == 12);
  CHECK(verify_module(ie).ok());
  auto ist = induce(t, s1("S_st(i)").h_gens());
  CHECK(ist.dim() == 24);
  CHECK(verify_module(ist).ok());
  CHECK(is_indecomposable(ist) == Verdict::no);
}

TEST_CASE("endomorphism rings") {
  auto e = endomorphisms(s1("S_st(i)"));
  CHECK(e.basis.size() == 1);
  CHECK(e.top_dim() == 1);
  auto p = endomorphisms(find_entry(projectives(1), "P_st(i)").module);
  CHECK(p.top_dim() == 1);
}
