#include <random>

#include "doctest.h"
#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/extquiver/extquiver.hpp"

using namespace hopfrep;

namespace {

Graph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  Graph g;
  for (std::size_t k = 0; k < n; ++k) g.labels.push_back(std::to_string(k));
  g.edges = std::move(edges);
  return g;
}

Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t k = 0; k + 1 < n; ++k) e.emplace_back(k, k + 1);
  return make_graph(n, e);
}

// star with arms of the given lengths around vertex 0
Graph star(const std::vector<std::size_t>& arms) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t next = 1;
  for (auto len : arms) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < len; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_graph(next, e);
}

// two branch vertices joined by a path, two leaves on each
Graph dtilde(std::size_t n) {
  std::size_t inner = n - 4;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t k = 0; k + 1 < inner; ++k) e.emplace_back(k, k + 1);
  e.emplace_back(0, inner);
  e.emplace_back(0, inner + 1);
  e.emplace_back(inner - 1, inner + 2);
  e.emplace_back(inner - 1, inner + 3);
  return make_graph(n, e);
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  Graph h = g;
  for (auto& [u, v] : h.edges) {
    u = perm[u];
    v = perm[v];
  }
  return h;
}

std::vector<HModule> simple_modules(int lam) {
  std::vector<HModule> out;
  for (const auto& e : simples(lam)) out.push_back(e.module);
  return out;
}

}  // namespace

TEST_CASE("Ext table of A_1") {
  auto s = simple_modules(1);
  // eps, sg, st(i), st(-i), st(i/3), st(-i/3)
  std::vector<std::vector<std::size_t>> want{{0, 1, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      INFO(s[i].name() << " -> " << s[j].name());
      CHECK(ext1_dim(s[i], s[j]) == want[i][j]);
    }
}

TEST_CASE("Ext table of A_0") {
  auto s = simple_modules(0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(ext1_dim(s[i], s[j]) == 1);
  CHECK(ext1_dim(s[0], s[0]) == 0);
  CHECK(ext1_dim(s[1], s[1]) == 0);
  // the self-extensions of S_st form a P^1, so the space is two-dimensional
  CHECK(ext1_dim(s[2], s[2]) == 2);
}

TEST_CASE("every cocycle builds a non-split extension") {
  for (int lam : {0, 1}) {
    auto s = simple_modules(lam);
    for (const auto& m : s)
      for (const auto& n : s) {
        auto e = ext1(m, n);
        CHECK(e.cocycle_dim == e.dim + e.coboundary_dim);
        for (const auto& f : e.cocycles) {
          INFO(m.name() << " by " << n.name());
          auto mid = build_extension(m, n, f);
          CHECK(verify_module(mid).ok());
          std::vector<Vec> sub;
          for (std::size_t k = 0; k < n.dim(); ++k) {
            Vec v(mid.dim());
            v[k] = GQ(1);
            sub.push_back(v);
          }
          REQUIRE(is_submodule(mid, sub));
          CHECK(is_isomorphic(submodule(mid, sub), n) == Verdict::yes);
          CHECK(is_isomorphic(quotient_module(mid, sub), m) == Verdict::yes);
          CHECK(is_indecomposable(mid) == Verdict::yes);
        }
      }
  }
}

TEST_CASE("the P1 family is a family of self-extensions of S_st") {
  auto st = find_entry(simples(0), "S_st").module;
  auto e = ext1(st, st);
  REQUIRE(e.dim == 2);
  for (const auto& f : e.cocycles) CHECK(is_indecomposable(build_extension(st, st, f)) == Verdict::yes);
  auto m = p1_family(GQ(1), GQ(0)).module;
  auto n = p1_family(GQ(0), GQ(1)).module;
  CHECK(is_isomorphic(m, n) == Verdict::no);
}

TEST_CASE("quivers") {
  auto q1 = gabriel_quiver(simple_modules(1));
  CHECK(q1.arrow_count() == 10);
  auto d1 = separation_diagram(q1);
  CHECK(d1.graph.edges.size() == 10);
  auto comps = d1.nontrivial_components();
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) {
    CHECK(c.size() == 6);
    auto cl = classify_graph(c);
    CHECK(cl.kind == GraphKind::affine);
    CHECK(cl.name == "D_5^(1)");
  }
  auto v1 = rep_type_verdict(q1);
  CHECK(v1.square_zero_type == RepType::tame);
  CHECK(v1.text.rfind("not of finite representation type", 0) == 0);

  auto q0 = gabriel_quiver(simple_modules(0));
  CHECK(q0.arrow_count() == 8);
  auto c0 = separation_diagram(q0).nontrivial_components();
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].size() == 6);
  CHECK(classify_graph(c0[0]).kind == GraphKind::neither);
  CHECK(rep_type_verdict(q0).text == "not of finite representation type; square-zero quotient wild");
}

TEST_CASE("small quivers") {
  Quiver a2{{"1", "2"}, {{0, 1}, {0, 0}}};
  auto d = separation_diagram(a2);
  REQUIRE(d.graph.edges.size() == 1);
  CHECK(d.graph.labels[d.graph.edges[0].first] == "1'");
  CHECK(d.graph.labels[d.graph.edges[0].second] == "2''");
  CHECK(rep_type_verdict(a2).square_zero_type == RepType::finite);
  Quiver empty{{"1"}, {{0}}};
  CHECK(empty.arrow_count() == 0);
  CHECK(separation_diagram(empty).nontrivial_components().empty());
  CHECK(rep_type_verdict(empty).text == "square-zero quotient of finite representation type");
  Quiver kronecker{{"1", "2"}, {{0, 2}, {0, 0}}};
  CHECK(rep_type_verdict(kronecker).square_zero_type == RepType::tame);
}

TEST_CASE("graph names") {
  CHECK(classify_graph(path(4)).to_string() == "Dynkin A_4");
  CHECK(classify_graph(star({1, 1, 3})).to_string() == "Dynkin D_6");
  CHECK(classify_graph(star({1, 2, 2})).to_string() == "Dynkin E_6");
  CHECK(classify_graph(star({1, 2, 3})).to_string() == "Dynkin E_7");
  CHECK(classify_graph(star({1, 2, 4})).to_string() == "Dynkin E_8");
  CHECK(classify_graph(star({2, 2, 2})).to_string() == "Affine E_6^(1)");
  CHECK(classify_graph(star({1, 3, 3})).to_string() == "Affine E_7^(1)");
  CHECK(classify_graph(star({1, 2, 5})).to_string() == "Affine E_8^(1)");
  CHECK(classify_graph(star({1, 1, 1, 1})).to_string() == "Affine D_4^(1)");
  CHECK(classify_graph(dtilde(6)).to_string() == "Affine D_5^(1)");
  CHECK(classify_graph(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})).to_string() == "Affine A_2^(1)");
  CHECK(classify_graph(make_graph(2, {{0, 1}, {0, 1}})).to_string() == "Affine A_1^(1)");
  CHECK(classify_graph(make_graph(1, {{0, 0}})).to_string() == "Affine A_0^(1)");
  CHECK(classify_graph(make_graph(2, {{0, 0}, {0, 1}})).kind == GraphKind::neither);
  CHECK(classify_graph(star({2, 2, 3})).kind == GraphKind::neither);
  CHECK(classify_graph(star({1, 1, 1, 1, 1})).kind == GraphKind::neither);
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const auto& g : {dtilde(7), star({1, 2, 4}), star({2, 2, 2}), path(5)}) {
    auto base = classify_graph(g).to_string();
    std::vector<std::size_t> perm(g.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    for (int r = 0; r < 20; ++r) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(classify_graph(relabel(g, perm)).to_string() == base);
    }
  }
}

TEST_CASE("Tits form agrees with shape matching") {
  std::size_t checked = 0;
  auto agree = [&](const Graph& g) {
    if (connected_components(g).size() != 1) return;
    auto a = classify_graph(g);
    auto b = shape_classify(g);
    CHECK(a.kind == b.kind);
    if (a.kind == b.kind) CHECK(a.name == b.name);
    ++checked;
  };
  // every simple graph on up to 6 vertices
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1) e.push_back(all[k]);
      agree(make_graph(n, e));
    }
  }
  // random trees on 7..9 vertices (Pruefer codes), some with a doubled edge or a loop
  std::mt19937 rng(11);
  for (std::size_t n = 7; n <= 9; ++n)
    for (int r = 0; r < 3000; ++r) {
      std::vector<std::size_t> code(n - 2);
      for (auto& c : code) c = rng() % n;
      std::vector<std::size_t> deg(n, 1);
      for (auto c : code) ++deg[c];
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (auto c : code)
        for (std::size_t v = 0; v < n; ++v)
          if (deg[v] == 1) {
            e.emplace_back(v, c);
            --deg[v];
            --deg[c];
            break;
          }
      std::size_t u = n, w = n;
      for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 1) (u == n ? u : w) = v;
      e.emplace_back(u, w);
      agree(make_graph(n, e));
      if (r % 10 == 0) {
        auto e2 = e;
        e2.push_back(e[0]);
        agree(make_graph(n, e2));
        auto e3 = e;
        e3.emplace_back(e[0].first, e[0].first);
        agree(make_graph(n, e3));
      }
    }
  // all ADE and affine shapes up to 9 vertices
  for (std::size_t n = 1; n <= 9; ++n) agree(path(n));
  for (std::size_t k = 1; k <= 6; ++k) agree(star({1, 1, k}));
  for (std::size_t n = 6; n <= 9; ++n) agree(dtilde(n));
  for (std::size_t n = 3; n <= 9; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t k = 0; k < n; ++k) e.emplace_back(k, (k + 1) % n);
    agree(make_graph(n, e));
  }
  CHECK(checked > 20000);
}

TEST_CASE("dot output") {
  Quiver q{{"S_a", "S_b"}, {{0, 2}, {1, 0}}};
  auto dot = quiver_dot(q);
  CHECK(dot.find("digraph quiver {") != std::string::npos);
  CHECK(dot.find("\"S_a\" -> \"S_b\";\n  \"S_a\" -> \"S_b\";") != std::string::npos);
  CHECK(dot.find("\"S_b\" -> \"S_a\";") != std::string::npos);
  auto dd = diagram_dot(separation_diagram(q));
  CHECK(dd.find("\"S_a'\" -- \"S_b''\";") != std::string::npos);
  CHECK(dd.find("\"S_b'\" -- \"S_a''\";") != std::string::npos);
  CHECK(quiver_dot(q) == dot);
}
