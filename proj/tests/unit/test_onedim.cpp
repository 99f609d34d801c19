#include <memory>

#include "doctest.h"
#include "hopfrep/exact/errors.hpp"
#include "hopfrep/extquiver/extquiver.hpp"
#include "hopfrep/modules/operations.hpp"
#include "hopfrep/onedim/onedim.hpp"

using namespace hopfrep;

namespace {

using DatumPtr = std::shared_ptr<const QlDatum>;

DatumPtr q3(int lam) { return std::make_shared<const QlDatum>(build_builtin(Builtin::Q3_minus, 3, {GQ(lam)})); }
DatumPtr q4minus() {
  return std::make_shared<const QlDatum>(build_builtin(Builtin::Qn_minus, 4, {GQ(1), GQ(1)}));
}
DatumPtr q4chi() { return std::make_shared<const QlDatum>(build_builtin(Builtin::Qn_chi, 4, {GQ(1)})); }

AbelianCharacter character(const QlDatum& d, const std::string& name) {
  for (auto& c : abelian_characters(d))
    if (c.name == name) return c;
  FAIL("no character " << name);
  return {};
}

CharacterExtension only(const QlDatum& d, const std::string& name) {
  auto e = extend_character(d, character(d, name));
  REQUIRE(e.size() == 1);
  return e[0];
}

}  // namespace

TEST_CASE("character extensions") {
  auto d = q3(1);
  for (const auto* n : {"eps", "sg"}) {
    auto rep = extend_character_report(*d, character(*d, n));
    REQUIRE(rep.extensions.size() == 1);
    CHECK(rep.extensions[0].gamma_zero());
    CHECK(rep.linear_dim == 0);  // chi_i(g_i) = -1 forces gamma = 0
    CHECK(rep.even_classes_failed.empty());
  }
  CHECK(only(*q3(0), "eps").gamma_zero());
  CHECK(abelian_characters(*d).size() == 2);
}

TEST_CASE("one-dimensional census") {
  for (const auto& d : {q3(1), q3(0), q4minus(), q4chi()}) {
    auto c = one_dim_census(*d);
    REQUIRE(c.size() == 2);
    CHECK(c[0].label() == "S_eps");
    CHECK(c[1].label() == "S_sg");
    for (const auto& e : c) {
      auto m = build_S(d, e);
      CHECK(m.dim() == 1);
      CHECK(verify_module(m).ok());
    }
  }
}

TEST_CASE("S_sg acts by the sign") {
  auto d = q3(1);
  auto m = build_S(d, only(*d, "sg"));
  for (std::size_t t = 0; t < d->group.order(); ++t) CHECK(m.h(t)(0, 0) == GQ(perm_sign(d->group.element(t))));
  for (const auto& a : m.a_all()) CHECK(a.is_zero());
}

TEST_CASE("inconsistent gamma is rejected") {
  auto d = q3(1);
  auto e = only(*d, "eps");
  e.gamma[0] = GQ(1);
  CHECK_THROWS_AS(build_S(d, e), ValidationError);
}

TEST_CASE("extension spaces between one-dimensional modules") {
  auto d = q3(1);
  auto eps = only(*d, "eps"), sg = only(*d, "sg");
  CHECK(ext_space_1dim(*d, eps, sg).dim == 1);
  CHECK(ext_space_1dim(*d, sg, eps).dim == 1);
  CHECK(ext_space_1dim(*d, eps, eps).dim == 0);
  CHECK(ext_space_1dim(*d, sg, sg).dim == 0);
  auto sol = ext_space_1dim(*d, eps, sg).basis[0];
  CHECK(sol.f == std::vector<GQ>{GQ(1), GQ(1), GQ(1)});

  auto c = q4chi();
  auto e4 = only(*c, "eps"), s4 = only(*c, "sg");
  CHECK(ext_space_1dim(*c, e4, s4).dim == 0);
  CHECK(ext_space_1dim(*c, s4, e4).dim == 0);
}

TEST_CASE("two implementations of Ext agree") {
  for (const auto& d : {q3(1), q3(0), q4minus(), q4chi()}) {
    auto c = one_dim_census(*d);
    for (const auto& a : c)
      for (const auto& b : c) {
        INFO(d->name << " " << a.name << " -> " << b.name);
        CHECK(ext_space_1dim(*d, a, b).dim == ext1_dim(build_S(d, a), build_S(d, b)));
      }
  }
}

TEST_CASE("middle terms M_{rho,mu}") {
  for (const auto& d : {q3(1), q3(0), q4minus()}) {
    auto eps = only(*d, "eps"), sg = only(*d, "sg");
    auto m = build_M(d, ext_space_1dim(*d, eps, sg).basis[0]);
    auto n = build_M(d, ext_space_1dim(*d, sg, eps).basis[0]);
    CHECK(m.name() == "M_{eps,sg}");
    CHECK(is_indecomposable(m) == Verdict::yes);
    CHECK(is_indecomposable(n) == Verdict::yes);
    CHECK(is_isomorphic(m, n) == Verdict::no);
    // S_mu is the submodule, S_rho the quotient
    Vec w(2);
    w[0] = GQ(1);
    CHECK(is_submodule(m, {w}));
    CHECK(is_isomorphic(quotient_module(m, {w}), build_S(d, eps)) == Verdict::yes);
    CHECK(hom_space(m, build_S(d, eps)).size() == 1);
    CHECK(hom_space(m, build_S(d, sg)).empty());
  }
}

TEST_CASE("proportionality of solutions") {
  for (const auto& d : {q3(1), q4minus()}) {
    auto c = one_dim_census(*d);
    for (const auto& a : c)
      for (const auto& b : c)
        for (const auto& s : ext_space_1dim(*d, a, b).basis) CHECK(proportionality_holds(*d, s));
  }
}

TEST_CASE("word length and psi") {
  auto d = q3(1);
  auto w = word_length(*d);
  const auto& G = d->group;
  CHECK(w.ell[G.index_of(Perm{1, 2, 0})] == 2);
  CHECK(w.ell[G.identity()] == 0);
  CHECK(w.psi[G.identity()] == GQ(1));
  CHECK(w.psi[G.index_of(Perm{1, 0, 2})] == GQ(-1));
  for (const auto& dd : {q3(1), q4minus(), q4chi()}) {
    auto ww = word_length(*dd);
    for (std::size_t t = 0; t < dd->group.order(); ++t) CHECK(ww.psi[t] == GQ(perm_sign(dd->group.element(t))));
  }
}

TEST_CASE("no extension unless mu = psi rho") {
  for (const auto& d : {q3(1), q4minus(), q4chi()}) {
    auto w = word_length(*d);
    auto c = one_dim_census(*d);
    for (const auto& a : c)
      for (const auto& b : c) {
        bool law = true;
        for (std::size_t t = 0; t < d->group.order(); ++t)
          if (!(b.rho[t] == w.psi[t] * a.rho[t])) law = false;
        if (!law) CHECK(ext_space_1dim(*d, a, b).dim == 0);
      }
  }
}
