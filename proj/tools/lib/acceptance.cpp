#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/extquiver/extquiver.hpp"
#include "hopfrep/onedim/onedim.hpp"

namespace hopfrep::tools {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string expected, computed;
};

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + xs[k];
  return s;
}

std::string dims_string(const std::vector<CatalogEntry>& list) {
  std::vector<std::string> d;
  for (const auto& e : list) d.push_back(std::to_string(e.module.dim()));
  return "{" + join(d, ",") + "}";
}

std::vector<CatalogEntry> census(int lam, const AcceptanceOptions& opt) {
  auto s = simples(lam);
  if (opt.corrupt_catalog && lam == 1)
    for (auto& e : s)
      if (e.name == "S_st(i)")
        e.module = module_from_a12(e.module.datum_ptr(), {GBlock::st}, e.module.a(0).scaled(GQ(2)), e.name);
  return s;
}

std::vector<HModule> modules_of(const std::vector<CatalogEntry>& list) {
  std::vector<HModule> out;
  for (const auto& e : list) out.push_back(e.module);
  return out;
}

// number of pairs i<j that are not certified non-isomorphic
std::size_t iso_clashes(const std::vector<CatalogEntry>& list, std::vector<std::string>& who) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (is_isomorphic(list[i].module, list[j].module) != Verdict::no) {
        ++bad;
        who.push_back(list[i].name + "~" + list[j].name);
      }
  return bad;
}

Outcome check_dimension() {
  Outcome o;
  o.expected = "dim 72 and associativity holds for lambda=0,1";
  std::vector<std::string> parts;
  for (int lam : {0, 1}) {
    auto d = a_datum(lam);
    auto t0 = Clock::now();
    auto t = build_table(d, a3_candidate_basis(*d));
    auto audit = t.associativity_audit();
    double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = t.dim() == 72 && audit.empty() && sec < 10;
    o.pass = o.pass && ok;
    std::ostringstream os;
    os << "lambda=" << lam << ": dim " << t.dim() << ", associativity " << (audit.empty() ? "ok" : audit);
    parts.push_back(os.str());
  }
  o.computed = join(parts, "; ");
  return o;
}

Outcome check_simple_census(const AcceptanceOptions& opt) {
  Outcome o;
  o.expected = "A0: dims {1,1,2}, J=66, A/J=6; A1: dims {1,1,2,2,2,2}, simple, distinct, J=54, A/J=18";
  std::vector<std::string> parts;
  for (int lam : {0, 1}) {
    auto s = census(lam, opt);
    std::size_t sq = 0;
    std::vector<std::string> bad;
    for (const auto& e : s) {
      sq += e.module.dim() * e.module.dim();
      if (!verify_module(e.module).ok()) bad.push_back(e.name + " fails verification");
      else if (!is_simple(e.module)) bad.push_back(e.name + " not simple");
    }
    if (lam == 1) iso_clashes(s, bad);
    auto rad = algebra_radical(a_table(lam));
    std::string want_dims = lam == 0 ? "{1,1,2}" : "{1,1,2,2,2,2}";
    std::size_t want_j = lam == 0 ? 66 : 54;
    bool ok = dims_string(s) == want_dims && bad.empty() && rad.dim_radical == want_j &&
              rad.dim_semisimple == 72 - want_j && sq == rad.dim_semisimple;
    o.pass = o.pass && ok;
    std::ostringstream os;
    os << "A" << lam << ": dims " << dims_string(s) << ", J=" << rad.dim_radical << ", A/J=" << rad.dim_semisimple
       << ", sum dim^2=" << sq;
    if (!bad.empty()) os << " [" << join(bad) << "]";
    parts.push_back(os.str());
  }
  o.computed = join(parts, "; ");
  return o;
}

Outcome check_eigenvalues() {
  Outcome o;
  o.expected = "{(i,-i), (-i,i), (i/3,i/3), (-i/3,-i/3)}, (alpha^2+5/9)^2 = 16/81";
  std::set<std::string> got;
  bool law = true;
  for (const auto& [a, b] : st_solutions(GQ(1))) {
    got.insert("(" + scalar_label(a) + "," + scalar_label(b) + ")");
    GQ s = a * a + GQ(Rational(5, 9));
    if (!(s * s == GQ(Rational(16, 81)))) law = false;
  }
  std::set<std::string> want{"(i,-i)", "(-i,i)", "(i/3,i/3)", "(-i/3,-i/3)"};
  o.pass = got == want && law;
  o.computed = "{" + join(std::vector<std::string>(got.begin(), got.end())) + "}" + (law ? ", law holds" : ", law fails");
  return o;
}

Outcome check_fusion() {
  Outcome o;
  o.expected = "36/36 ordered products match, 16 of them 2x2 -> M(...)[theta]";
  auto s = simples(1);
  auto m4 = indecomposables4();
  std::size_t ok = 0, two = 0, total = 0;
  std::vector<std::string> bad;
  for (const auto& r : fusion_expected()) {
    ++total;
    auto t = tensor(find_entry(s, r.left).module, find_entry(s, r.right).module);
    const HModule* want = nullptr;
    for (const auto* list : {&s, &m4})
      for (const auto& e : *list)
        if (e.name == r.expected) want = &e.module;
    if (want && is_isomorphic(t, *want) == Verdict::yes) {
      ++ok;
      if (r.expected.rfind("M(", 0) == 0) ++two;
    } else {
      bad.push_back(r.left + "x" + r.right);
    }
  }
  o.pass = ok == 36 && total == 36 && two == 16;
  o.computed = std::to_string(ok) + "/" + std::to_string(total) + " match, " + std::to_string(two) + " 2x2";
  if (!bad.empty()) o.computed += " [" + join(bad) + "]";
  return o;
}

Outcome check_witness() {
  Outcome o;
  auto s = simples(1);
  const auto& sg = find_entry(s, "S_sg").module;
  const auto& st = find_entry(s, "S_st(i)").module;
  auto v = is_isomorphic(tensor(sg, st), tensor(st, sg));
  o.expected = "S_sg(x)S_st(i) vs S_st(i)(x)S_sg: no";
  o.computed = verdict_name(v);
  o.pass = v == Verdict::no;
  return o;
}

std::string matrix_string(const std::vector<std::vector<std::size_t>>& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) {
    std::string s;
    for (auto x : r) s += std::to_string(x);
    rows.push_back(s);
  }
  return "[" + join(rows, " ") + "]";
}

Outcome check_ext_tables() {
  Outcome o;
  // A1 order: eps, sg, st(i), st(-i), st(i/3), st(-i/3)
  auto s1 = modules_of(simples(1));
  std::vector<std::string> th{"", "", "i", "-i", "i/3", "-i/3"};
  auto is_pm_i = [&](std::size_t k) { return th[k] == "i" || th[k] == "-i"; };
  auto is_pm_i3 = [&](std::size_t k) { return th[k] == "i/3" || th[k] == "-i/3"; };
  std::vector<std::vector<std::size_t>> want1(6, std::vector<std::size_t>(6, 0)), got1 = want1;
  // eps <-> sg: the one-dimensional solver gives 1 each way over Q3[1]
  want1[0][1] = want1[1][0] = 1;
  for (std::size_t k = 2; k < 6; ++k) {
    want1[0][k] = is_pm_i(k);
    want1[k][1] = is_pm_i(k);
    want1[1][k] = is_pm_i3(k);
    want1[k][0] = is_pm_i3(k);
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) got1[i][j] = ext1_dim(s1[i], s1[j]);
  // A0 order: eps, sg, st
  auto s0 = modules_of(simples(0));
  std::vector<std::vector<std::size_t>> want0{{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}, got0(3, std::vector<std::size_t>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) got0[i][j] = ext1_dim(s0[i], s0[j]);
  o.pass = got1 == want1 && got0 == want0;
  o.expected = "A1 " + matrix_string(want1) + "; A0 " + matrix_string(want0);
  o.computed = "A1 " + matrix_string(got1) + "; A0 " + matrix_string(got0);
  return o;
}

Outcome check_quivers() {
  Outcome o;
  o.expected = "A1: 10 arrows, components {D_5^(1), D_5^(1)}, not finite; A0: a Neither component, wild square-zero quotient";
  auto q1 = gabriel_quiver(modules_of(simples(1)));
  auto v1 = rep_type_verdict(q1);
  std::vector<std::string> c1;
  bool aff = v1.components.size() == 2;
  for (const auto& c : v1.components) {
    c1.push_back(c.to_string());
    if (!(c.kind == GraphKind::affine && c.name == "D_5^(1)")) aff = false;
  }
  auto q0 = gabriel_quiver(modules_of(simples(0)));
  auto v0 = rep_type_verdict(q0);
  bool neither = false;
  std::vector<std::string> c0;
  for (const auto& c : v0.components) {
    c0.push_back(c.to_string());
    if (c.kind == GraphKind::neither) neither = true;
  }
  o.pass = q1.arrow_count() == 10 && aff && v1.text.rfind("not of finite representation type", 0) == 0 && neither &&
           v0.text == "not of finite representation type; square-zero quotient wild";
  o.computed = "A1: " + std::to_string(q1.arrow_count()) + " arrows, {" + join(c1) + "}, \"" + v1.text + "\"; A0: " +
               std::to_string(q0.arrow_count()) + " arrows, {" + join(c0) + "}, \"" + v0.text + "\"";
  return o;
}

Outcome check_projectives() {
  Outcome o;
  o.expected = "A1: I_eps, I_sg 12, four P_st 6, certified; A0: I_eps, I_sg 12, I_st 24, certified; sums 72";
  std::vector<std::string> parts;
  for (int lam : {1, 0}) {
    auto p = projectives(lam);
    auto tops = projective_tops(lam);
    auto s = simples(lam);
    std::vector<std::pair<HModule, HModule>> pairs;
    std::vector<std::string> items;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto& top = find_entry(s, tops[k]).module;
      auto c = certify_projective_cover(p[k].module, top, a_table(lam));
      bool ok = c.ok() && verify_module(p[k].module).ok();
      o.pass = o.pass && ok;
      items.push_back(p[k].name + ":" + std::to_string(p[k].module.dim()) + (ok ? "" : "!"));
      pairs.emplace_back(p[k].module, top);
    }
    std::size_t sum = cover_dimension_sum(pairs);
    std::vector<std::size_t> want = lam == 1 ? std::vector<std::size_t>{12, 12, 6, 6, 6, 6} : std::vector<std::size_t>{12, 12, 24};
    std::vector<std::size_t> got;
    for (const auto& e : p) got.push_back(e.module.dim());
    o.pass = o.pass && sum == 72 && got == want;
    parts.push_back("A" + std::to_string(lam) + ": " + join(items) + ", sum " + std::to_string(sum));
  }
  o.computed = join(parts, "; ");
  return o;
}

Outcome check_onedim() {
  Outcome o;
  o.expected = "Q3[1], Q4^-1[(1,1)]: census {S_eps, S_sg}, ext 1 both ways; Q4^chi[1]: census {S_eps, S_sg}, ext 0; generic agrees";
  struct Case {
    std::string name;
    QlDatum d;
    std::size_t want;
  };
  std::vector<Case> cases{{"Q3[1]", build_builtin(Builtin::Q3_minus, 3, {GQ(1)}), 1},
                          {"Q4^-1[(1,1)]", build_builtin(Builtin::Qn_minus, 4, {GQ(1), GQ(1)}), 1},
                          {"Q4^chi[1]", build_builtin(Builtin::Qn_chi, 4, {GQ(1)}), 0}};
  std::vector<std::string> parts;
  for (auto& c : cases) {
    auto d = std::make_shared<const QlDatum>(c.d);
    auto cen = one_dim_census(*d);
    std::vector<std::string> labels;
    for (const auto& e : cen) labels.push_back(e.label());
    bool ok = labels == std::vector<std::string>{"S_eps", "S_sg"};
    std::string dims;
    if (ok) {
      for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}}) {
        auto x = ext_space_1dim(*d, cen[a], cen[b]).dim;
        auto y = ext1_dim(build_S(d, cen[a]), build_S(d, cen[b]));
        ok = ok && x == c.want && x == y;
        dims += (dims.empty() ? "" : "/") + std::to_string(x) + (x == y ? "" : "(generic " + std::to_string(y) + ")");
      }
    }
    o.pass = o.pass && ok;
    parts.push_back(c.name + ": {" + join(labels) + "} ext " + dims);
  }
  o.computed = join(parts, "; ");
  return o;
}

Outcome check_indecomposables() {
  Outcome o;
  o.expected = "3-dim: 4 (A0) + 8 (A1), 4-dim: both theta signs of each list, all verified, indecomposable, distinct; "
               "P1 family iso iff proportional";
  std::vector<std::string> parts, bad;
  for (const auto& [label, list] : {std::pair{"A0 3-dim", indecomposables3(0)}, std::pair{"A1 3-dim", indecomposables3(1)},
                                    std::pair{"A1 4-dim", indecomposables4()}}) {
    std::size_t good = 0;
    for (const auto& e : list)
      if (verify_module(e.module).ok() && is_indecomposable(e.module) == Verdict::yes) ++good;
      else bad.push_back(e.name);
    iso_clashes(list, bad);
    parts.push_back(std::string(label) + " " + std::to_string(good) + "/" + std::to_string(list.size()));
  }
  bool counts = parts[0] == "A0 3-dim 4/4" && parts[1] == "A1 3-dim 8/8" && parts[2] == "A1 4-dim 16/16";
  std::vector<std::pair<GQ, GQ>> ps{{GQ(1), GQ(0)}, {GQ(0), GQ(1)}, {GQ(1), GQ(1)}, {GQ(2), GQ(2)}};
  std::vector<HModule> ms;
  for (const auto& [a, b] : ps) ms.push_back(p1_family(a, b).module);
  std::size_t p1_ok = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      bool prop = ps[i].first * ps[j].second == ps[i].second * ps[j].first;
      if (is_isomorphic(ms[i], ms[j]) == (prop ? Verdict::yes : Verdict::no)) ++p1_ok;
    }
  o.pass = counts && bad.empty() && p1_ok == 16;
  o.computed = join(parts) + ", P1 pairs " + std::to_string(p1_ok) + "/16";
  if (!bad.empty()) o.computed += " [" + join(bad) + "]";
  return o;
}

Outcome check_properties() {
  Outcome o;
  o.expected = "extension round trips, decompose audit, tensor associativity, zeta_{h+1} zeta_h = eta_h";
  // round trips over every pair of simples
  std::size_t trips = 0, trip_bad = 0;
  for (int lam : {0, 1}) {
    auto s = modules_of(simples(lam));
    for (const auto& m : s)
      for (const auto& n : s)
        for (const auto& f : ext1(m, n).cocycles) {
          ++trips;
          auto mid = build_extension(m, n, f);
          std::vector<Vec> sub;
          for (std::size_t k = 0; k < n.dim(); ++k) {
            Vec v(mid.dim());
            v[k] = GQ(1);
            sub.push_back(v);
          }
          bool ok = verify_module(mid).ok() && is_submodule(mid, sub) &&
                    is_isomorphic(submodule(mid, sub), n) == Verdict::yes &&
                    is_isomorphic(quotient_module(mid, sub), m) == Verdict::yes;
          if (!ok) ++trip_bad;
        }
  }
  // decompose / reassemble
  auto s1 = simples(1);
  auto get = [&](const char* n) { return find_entry(s1, n).module; };
  std::vector<HModule> samples{
      direct_sum(direct_sum(tensor(get("S_st(i)"), get("S_st(i)")), get("S_sg")), get("S_st(-i/3)")),
      direct_sum(find_entry(projectives(1), "P_st(i)").module, get("S_eps")),
      induce(a_table(1), get("S_st(i)").h_gens(), "I_st"),
  };
  std::size_t dec_bad = 0;
  std::vector<std::string> dec_shapes;
  for (const auto& m : samples) {
    auto d = decompose(m);
    std::size_t total = 0;
    std::vector<std::string> dims;
    bool ok = d.complete;
    for (const auto& x : d.summands) {
      total += x.dim();
      dims.push_back(std::to_string(x.dim()));
      if (!verify_module(x).ok() || is_indecomposable(x) != Verdict::yes) ok = false;
    }
    if (total != m.dim()) ok = false;
    if (m.dim() <= 12) {
      auto back = d.summands.front();
      for (std::size_t k = 1; k < d.summands.size(); ++k) back = direct_sum(back, d.summands[k]);
      if (is_isomorphic(back, m) != Verdict::yes) ok = false;
    }
    if (!ok) ++dec_bad;
    dec_shapes.push_back(std::to_string(m.dim()) + "=" + join(dims, "+"));
  }
  // tensor associativity
  std::size_t assoc = 0, assoc_bad = 0;
  std::vector<std::string> names{"S_sg", "S_st(i)", "S_st(-i/3)"};
  for (const auto& a : names)
    for (const auto& b : names)
      for (const auto& c : names) {
        ++assoc;
        auto l = tensor(tensor(get(a.c_str()), get(b.c_str())), get(c.c_str()));
        auto r = tensor(get(a.c_str()), tensor(get(b.c_str()), get(c.c_str())));
        if (is_isomorphic(l, r) != Verdict::yes) ++assoc_bad;
      }
  // zeta eta identity
  std::size_t classes = 0, zeta_bad = 0;
  for (const auto& d : {build_builtin(Builtin::Q3_minus, 3, {GQ(1)}), build_builtin(Builtin::Qn_minus, 4, {GQ(1), GQ(1)}),
                        build_builtin(Builtin::Qn_chi, 4, {GQ(1)})})
    for (const auto& c : d.classes) {
      ++classes;
      bool ok = c.zeta[0] == GQ(1);
      for (std::size_t h = 1; h <= c.size; ++h)
        if (!(c.zeta[h] * c.zeta[h - 1] == c.eta[h - 1])) ok = false;
      if (!ok) ++zeta_bad;
    }
  o.pass = trip_bad == 0 && trips > 0 && dec_bad == 0 && assoc_bad == 0 && zeta_bad == 0;
  std::ostringstream os;
  os << "round trips " << trips - trip_bad << "/" << trips << ", decompositions {" << join(dec_shapes) << "} "
     << (dec_bad ? "failed" : "ok") << ", associativity " << assoc - assoc_bad << "/" << assoc << ", zeta-eta "
     << classes - zeta_bad << "/" << classes << " classes";
  o.computed = os.str();
  return o;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"algebra dimension", check_dimension},
      {"simple census", [&] { return check_simple_census(opt); }},
      {"eigenvalue law", check_eigenvalues},
      {"fusion rules", check_fusion},
      {"non-quasitriangularity witness", check_witness},
      {"Ext tables", check_ext_tables},
      {"quivers and representation type", check_quivers},
      {"projective covers", check_projectives},
      {"one-dimensional solver", check_onedim},
      {"indecomposables by list", check_indecomposables},
      {"property suite", check_properties},
  };
  std::vector<CheckResult> out;
  int id = 0;
  for (auto& [title, fn] : checks) {
    CheckResult r;
    r.id = ++id;
    r.title = title;
    auto t0 = Clock::now();
    try {
      auto o = fn();
      r.pass = o.pass;
      r.expected = o.expected;
      r.computed = o.computed;
    } catch (const std::exception& e) {
      r.pass = false;
      r.computed = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.seconds << "s): expected " << r.expected
     << "; computed " << r.computed;
  return os.str();
}

}  // namespace hopfrep::tools
