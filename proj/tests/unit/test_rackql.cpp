#include <algorithm>
#include <map>

#include "doctest.h"
#include "hopfrep/exact/errors.hpp"
#include "hopfrep/rackql/ql_datum.hpp"

using namespace hopfrep;

TEST_CASE("transposition racks") {
  CHECK(transposition_rack(3).size() == 3);
  CHECK(transposition_rack(4).size() == 6);
  Rack r = transposition_rack(3);
  CHECK(r.labels[r.act(r.index_of("(12)"), r.index_of("(23)"))] == "(13)");
  CHECK_THROWS_AS(transposition_rack(2), ValidationError);
  for (std::size_t n = 3; n <= 5; ++n) CHECK(rack_failures(transposition_rack(n)).empty());
}

TEST_CASE("permutation composition convention") {
  auto s12 = transposition(3, 0, 1), s23 = transposition(3, 1, 2), s13 = transposition(3, 0, 2);
  CHECK(perm_cycle_string(perm_compose(s12, s23)) == "(123)");
  CHECK(perm_cycle_string(perm_compose(s12, s13)) == "(132)");
  CHECK(PermGroup::symmetric(4).order() == 24);
}

TEST_CASE("class enumeration for O_2^3") {
  Rack r = transposition_rack(3);
  auto cls = enumerate_classes(r, constant_cocycle(3, GQ(-1)));
  REQUIRE(cls.size() == 5);
  int singles = 0, triples = 0;
  for (const auto& c : cls) {
    CHECK(c.in_Rprime);
    if (c.size == 1) ++singles;
    if (c.size == 3) {
      ++triples;
      CHECK(c.eta == std::vector<GQ>{1, 1, 1});
    }
  }
  CHECK(singles == 3);
  CHECK(triples == 2);
}

TEST_CASE("class enumeration for O_2^4") {
  Rack r = transposition_rack(4);
  auto cls = enumerate_classes(r, constant_cocycle(6, GQ(-1)));
  CHECK(cls.size() == 17);
  std::map<std::size_t, int> by_size;
  std::size_t covered = 0;
  for (const auto& c : cls) {
    ++by_size[c.size];
    covered += c.size;
    CHECK(c.in_Rprime);
  }
  CHECK(by_size[1] == 6);
  CHECK(by_size[2] == 3);
  CHECK(by_size[3] == 8);
  CHECK(covered == 36);
}

TEST_CASE("zeta eta identity") {
  for (auto fam : {std::pair{Builtin::Q3_minus, 3}, {Builtin::Qn_minus, 4}, {Builtin::Qn_chi, 4}, {Builtin::Qn_chi, 5}}) {
    std::vector<GQ> params = fam.first == Builtin::Qn_minus ? std::vector<GQ>{1, 1} : std::vector<GQ>{1};
    auto d = build_builtin(fam.first, static_cast<std::size_t>(fam.second), params);
    for (const auto& c : d.classes) {
      CHECK(c.zeta[0] == GQ(1));
      if (c.zeta.size() > 1) CHECK(c.zeta[1] == GQ(1));
      for (std::size_t h = 1; h <= c.size; ++h) CHECK(c.zeta[h] * c.zeta[h - 1] == c.eta[h - 1]);
    }
  }
}

TEST_CASE("alpha beta sums") {
  ClassData c3;
  c3.size = 3;
  CHECK(alpha_beta(c3, GQ(-1)) == std::pair<GQ, GQ>{1, 0});
  ClassData c2;
  c2.size = 2;
  auto ab = alpha_beta(c2, GQ::i());
  CHECK(ab.first == ab.second);
  ClassData c1;
  c1.size = 1;
  CHECK(alpha_beta(c1, GQ(-1)) == std::pair<GQ, GQ>{0, 1});
}

TEST_CASE("builtins") {
  auto d = build_builtin(Builtin::Q3_minus, 3, {1});
  CHECK(d.nx() == 3);
  CHECK(d.group.order() == 6);
  std::vector<GQ> lambdas;
  for (std::size_t c = 0; c < d.classes.size(); ++c) lambdas.push_back(d.lambda[c]);
  std::sort(lambdas.begin(), lambdas.end(), [](const GQ& a, const GQ& b) { return a.re() < b.re(); });
  CHECK(lambdas == std::vector<GQ>{0, 0, 0, 1, 1});
  auto chi = build_builtin(Builtin::Qn_chi, 4, {1});
  std::size_t x12 = chi.rack.index_of("(12)");
  CHECK(chi.chi[x12][chi.g[x12]] == GQ(-1));
  auto zero = build_builtin(Builtin::Q3_minus, 3, {0});
  for (const auto& l : zero.lambda) CHECK(l.is_zero());
  CHECK_THROWS_AS(build_builtin(Builtin::Q3_minus, 4, {1}), ValidationError);
  CHECK_THROWS_AS(build_builtin(Builtin::Qn_chi, 3, {1}), ValidationError);
}

TEST_CASE("validate across families") {
  for (std::size_t n = 4; n <= 5; ++n) {
    CHECK(validate(build_builtin(Builtin::Qn_minus, n, {1, GQ::parse("2/3")})).ok());
    CHECK(validate(build_builtin(Builtin::Qn_chi, n, {1})).ok());
    CHECK(validate(build_builtin(Builtin::Qn_chi, n, {GQ::i()})).ok());
  }
  CHECK(validate(build_builtin(Builtin::Q3_minus, 3, {1})).ok());
}

TEST_CASE("validate rejects broken data") {
  auto d = build_builtin(Builtin::Q3_minus, 3, {1});
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    if (d.classes[c].singleton()) d.lambda[c] = GQ(1);
  auto rep = validate(d);
  CHECK_FALSE(rep.ok());
  bool saw2a = false;
  for (const auto& f : rep.failures) saw2a |= f.find("(2a)") != std::string::npos;
  CHECK(saw2a);

  auto chi = build_builtin(Builtin::Qn_chi, 4, {1});
  for (auto& row : chi.chi)
    for (auto& v : row) v = GQ(1);
  auto rep2 = validate(chi);
  CHECK_FALSE(rep2.ok());
}

TEST_CASE("chi family lambda depends on the reading pair") {
  auto d = build_builtin(Builtin::Qn_chi, 4, {1});
  bool some_minus = false;
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    if (d.classes[c].size == 3) {
      for (std::size_t p = 0; p < 3; ++p) some_minus |= d.lambda_at(c, p) == GQ(-1);
    }
  CHECK(some_minus);
}

TEST_CASE("datum json round trip") {
  for (auto d : {build_builtin(Builtin::Q3_minus, 3, {1}), build_builtin(Builtin::Qn_chi, 4, {GQ::parse("1/2")})}) {
    auto back = datum_from_json(datum_to_json(d));
    CHECK(validate(back).ok());
    CHECK(back.lambda == d.lambda);
    CHECK(back.chi == d.chi);
    CHECK(back.q == d.q);
  }
  CHECK_THROWS_AS(datum_from_json(nlohmann::json::parse("{\"degree\": 3}")), ParseError);
}
