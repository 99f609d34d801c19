#include <set>

#include "doctest.h"
#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/exact/errors.hpp"

using namespace hopfrep;

namespace {

GQ q(const char* s) { return GQ::parse(s); }

Vec col(const ExactMatrix& m, std::size_t c) { return m.column(c); }

void all_pairwise_distinct(const std::vector<CatalogEntry>& list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      INFO(list[i].name << " vs " << list[j].name);
      CHECK(is_isomorphic(list[i].module, list[j].module) == Verdict::no);
    }
}

}  // namespace

TEST_CASE("standard representation matrices") {
  auto h = standard_rep();
  REQUIRE(h.size() == 3);
  CHECK(h[0] == ExactMatrix{{0, 1}, {1, 0}});
  CHECK(h[1] == ExactMatrix{{1, 0}, {-1, -1}});
  CHECK(h[2] == ExactMatrix{{-1, -1}, {0, 1}});
  for (const auto& m : h) CHECK((m * m).is_identity());
}

TEST_CASE("simples of A_0 and A_1") {
  auto s0 = simples(0);
  REQUIRE(s0.size() == 3);
  for (const auto& e : s0) {
    CHECK(verify_module(e.module).ok());
    CHECK(is_simple(e.module));
    for (const auto& a : e.module.a_all()) CHECK(a.is_zero());
  }
  auto s1 = simples(1);
  REQUIRE(s1.size() == 6);
  std::vector<std::size_t> dims;
  for (const auto& e : s1) {
    INFO(e.name);
    CHECK(verify_module(e.module).ok());
    CHECK(is_simple(e.module));
    CHECK(restrict_isotypic(e.module) == e.profile);
    dims.push_back(e.module.dim());
  }
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 2, 2, 2});
  all_pairwise_distinct(s1);

  // a12 v = i(v-w), a12 w = i(v-w)
  const auto& a = find_entry(s1, "S_st(i)").module.a(0);
  CHECK(col(a, 0) == Vec{q("i"), q("-i")});
  CHECK(col(a, 1) == Vec{q("i"), q("-i")});
  // a12 v = (i/3)(v+w), a12 w = -(i/3)(v+w)
  const auto& b = find_entry(s1, "S_st(i/3)").module.a(0);
  CHECK(col(b, 0) == Vec{q("i/3"), q("i/3")});
  CHECK(col(b, 1) == Vec{q("-i/3"), q("-i/3")});
  CHECK_THROWS(find_entry(s1, "S_st(2i)"));
}

TEST_CASE("a corrupted simple fails verification") {
  auto s1 = simples(1);
  const auto& m = find_entry(s1, "S_st(i)").module;
  auto bad = module_from_a12(m.datum_ptr(), {GBlock::st}, m.a(0).scaled(GQ(2)), "bad");
  CHECK_FALSE(verify_module(bad).ok());
}

TEST_CASE("eigenvalue law for a12 on W_st") {
  auto sols = st_solutions(GQ(1));
  std::set<std::string> got;
  for (const auto& [al, be] : sols) {
    got.insert(al.to_string() + "," + be.to_string());
    auto s = al * al + GQ(Rational(5, 9));
    CHECK(s * s == GQ(Rational(16, 81)));
  }
  CHECK(got == std::set<std::string>{"i,-i", "-i,i", "1/3*i,1/3*i", "-1/3*i,-1/3*i"});
  // lambda = 0 only admits alpha = beta = 0
  auto zero = st_solutions(GQ(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].first.is_zero());
}

TEST_CASE("three-dimensional indecomposables") {
  auto m0 = indecomposables3(0);
  CHECK(m0.size() == 4);
  auto m1 = indecomposables3(1);
  CHECK(m1.size() == 8);
  for (const auto* list : {&m0, &m1}) {
    for (const auto& e : *list) {
      INFO(e.name);
      CHECK(e.module.dim() == 3);
      CHECK(verify_module(e.module).ok());
      CHECK(is_indecomposable(e.module) == Verdict::yes);
      CHECK_FALSE(is_simple(e.module));
    }
    all_pairwise_distinct(*list);
  }
  // basis (y, v, w): a12 v = i(v-w) + y
  const auto& a = find_entry(m1, "M_{st,sg}[i]").module.a(0);
  CHECK(col(a, 1) == Vec{GQ(1), q("i"), q("-i")});
  CHECK(col(a, 0) == Vec{GQ(0), GQ(0), GQ(0)});
  // a12 y = v + w
  const auto& b = find_entry(m1, "M_{sg,st}[i/3]").module.a(0);
  CHECK(col(b, 0) == Vec{GQ(0), GQ(1), GQ(1)});
}

TEST_CASE("four-dimensional indecomposables") {
  auto m4 = indecomposables4();
  CHECK(m4.size() == 16);
  for (const auto& e : m4) {
    INFO(e.name);
    CHECK(verify_module(e.module).ok());
    CHECK(is_indecomposable(e.module) == Verdict::yes);
    CHECK(profile_string(restrict_isotypic(e.module)) == "{eps:1, sg:1, st:1}");
  }
  all_pairwise_distinct(m4);
  CHECK_NOTHROW(find_entry(m4, "M(0,0,1,0,1,0)[i/3]"));
  CHECK_NOTHROW(find_entry(m4, "M(1,0,0,0,0,1)[i]"));
  CHECK_NOTHROW(find_entry(m4, "M(0,-2i,1,1,0,0)[i]"));
}

TEST_CASE("fusion rules of A_1") {
  auto s = simples(1);
  auto m4 = indecomposables4();
  auto rules = fusion_expected();
  CHECK(rules.size() == 36);
  for (const auto& r : rules) {
    INFO(r.left << " x " << r.right << " -> " << r.expected);
    auto t = tensor(find_entry(s, r.left).module, find_entry(s, r.right).module);
    CHECK(verify_module(t).ok());
    const HModule* want = nullptr;
    for (const auto* list : {&s, &m4})
      for (const auto& e : *list)
        if (e.name == r.expected) want = &e.module;
    REQUIRE(want != nullptr);
    CHECK(is_isomorphic(t, *want) == Verdict::yes);
  }
}

TEST_CASE("A_1 is not quasitriangular") {
  auto s = simples(1);
  const auto& sg = find_entry(s, "S_sg").module;
  const auto& st = find_entry(s, "S_st(i)").module;
  CHECK(is_isomorphic(tensor(sg, st), tensor(st, sg)) == Verdict::no);
}

TEST_CASE("projective covers") {
  for (int lam : {0, 1}) {
    auto p = projectives(lam);
    auto tops = projective_tops(lam);
    auto s = simples(lam);
    REQUIRE(p.size() == tops.size());
    std::vector<std::pair<HModule, HModule>> pairs;
    for (std::size_t k = 0; k < p.size(); ++k) {
      INFO(p[k].name);
      CHECK(verify_module(p[k].module).ok());
      auto c = certify_projective_cover(p[k].module, find_entry(s, tops[k]).module, a_table(lam));
      CHECK(c.ok());
      pairs.emplace_back(p[k].module, find_entry(s, tops[k]).module);
    }
    CHECK(cover_dimension_sum(pairs) == 72);
  }
  auto p1 = projectives(1);
  CHECK(find_entry(p1, "I_eps").module.dim() == 12);
  CHECK(find_entry(p1, "P_st(i)").module.dim() == 6);
  auto s1 = simples(1);
  auto twisted = tensor(find_entry(p1, "P_st(i)").module, find_entry(s1, "S_sg").module);
  CHECK(is_isomorphic(twisted, find_entry(p1, "P_st(-i/3)").module) == Verdict::yes);
  CHECK(find_entry(projectives(0), "I_st").module.dim() == 24);
}

TEST_CASE("P1 family of self-extensions of S_st") {
  std::vector<std::pair<GQ, GQ>> ps{{GQ(1), GQ(0)}, {GQ(0), GQ(1)}, {GQ(1), GQ(1)}, {GQ(2), GQ(2)}};
  std::vector<HModule> ms;
  for (const auto& [a, b] : ps) {
    auto e = p1_family(a, b);
    CHECK(verify_module(e.module).ok());
    CHECK(is_indecomposable(e.module) == Verdict::yes);
    ms.push_back(e.module);
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      bool prop = ps[i].first * ps[j].second == ps[i].second * ps[j].first;
      CHECK(is_isomorphic(ms[i], ms[j]) == (prop ? Verdict::yes : Verdict::no));
    }
  CHECK(is_isomorphic(p1_family(GQ(1), GQ(0)).module, p1_family(GQ(2), GQ(0)).module) == Verdict::yes);
  CHECK_THROWS_AS(p1_family(GQ(0), GQ(0)), ValidationError);
}

TEST_CASE("scalar labels") {
  CHECK(scalar_label(q("i")) == "i");
  CHECK(scalar_label(q("-2i/3")) == "-2i/3");
  CHECK(scalar_label(GQ(1)) == "1");
  CHECK(q("-2i/3") == GQ(Rational(0), Rational(-2, 3)));
  CHECK(q("2i") == GQ(Rational(0), Rational(2)));
}
