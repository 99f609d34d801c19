#include "report.hpp"

#include <sstream>

#include "hopfrep/onedim/onedim.hpp"

namespace hopfrep::tools {

using nlohmann::json;

json algebra_section(const AlgebraTable& t) {
  auto rad = algebra_radical(t);
  json j;
  j["dim"] = t.dim();
  j["monomials"] = t.words().size();
  j["group_order"] = t.group_order();
  j["radical_dim"] = rad.dim_radical;
  j["semisimple_dim"] = rad.dim_semisimple;
  auto assoc = t.associativity_audit();
  j["associativity"] = assoc.empty() ? "ok" : assoc;
  auto unit = t.unit_audit();
  j["unit"] = unit.empty() ? "ok" : unit;
  j["relation_failures"] = t.relation_audit();
  return j;
}

namespace {

std::string f_string(const std::vector<GQ>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].to_string();
  return s + ")";
}

}  // namespace

json onedim_section(const std::shared_ptr<const QlDatum>& d) {
  json j;
  j["census"] = json::array();
  for (const auto& rho : abelian_characters(*d)) {
    auto rep = extend_character_report(*d, rho);
    json c;
    c["character"] = rho.name;
    c["extensions"] = json::array();
    for (const auto& e : rep.extensions) {
      json x;
      x["label"] = e.label();
      std::vector<std::string> g;
      for (const auto& v : e.gamma) g.push_back(v.to_string());
      x["gamma"] = g;
      c["extensions"].push_back(x);
    }
    c["even_classes_failed"] = rep.even_classes_failed;
    c["odd_classes_used"] = rep.odd_classes_used;
    j["census"].push_back(c);
  }
  auto cen = one_dim_census(*d);
  j["ext"] = json::array();
  for (const auto& a : cen)
    for (const auto& b : cen) {
      auto e = ext_space_1dim(*d, a, b);
      json x;
      x["source"] = a.label();
      x["target"] = b.label();
      x["dim"] = e.dim;
      if (!e.basis.empty()) {
        std::vector<std::string> f;
        for (const auto& v : e.basis[0].f) f.push_back(v.to_string());
        x["f"] = f;
      }
      j["ext"].push_back(x);
    }
  return j;
}

std::string onedim_text(const std::shared_ptr<const QlDatum>& d) {
  std::ostringstream os;
  os << "# one-dimensional modules over " << d->name << "\n";
  for (const auto& rho : abelian_characters(*d)) {
    auto rep = extend_character_report(*d, rho);
    os << rho.name << ": " << rep.extensions.size() << " extension(s)";
    for (const auto& e : rep.extensions) os << " " << e.label();
    if (!rep.even_classes_failed.empty()) {
      os << " (fails on";
      for (const auto& c : rep.even_classes_failed) os << " " << c;
      os << ")";
    }
    os << "\n";
  }
  os << "# Ext^1(source, target): extension 0 -> target -> M -> source -> 0\n";
  auto cen = one_dim_census(*d);
  for (const auto& a : cen)
    for (const auto& b : cen) {
      auto e = ext_space_1dim(*d, a, b);
      os << a.label() << " -> " << b.label() << "  dim " << e.dim;
      if (!e.basis.empty()) os << "  f=" << f_string(e.basis[0].f);
      os << "\n";
    }
  return os.str();
}

std::string name_module(const HModule& m, const std::vector<const std::vector<CatalogEntry>*>& lists) {
  auto prof = restrict_isotypic(m);
  for (const auto* list : lists)
    for (const auto& e : *list) {
      if (e.module.dim() != m.dim() || restrict_isotypic(e.module) != prof) continue;
      if (is_isomorphic(m, e.module) == Verdict::yes) return e.name;
    }
  return "dim " + std::to_string(m.dim()) + " " + profile_string(prof);
}

std::vector<ProductEntry> product_table(int lambda) {
  auto s = simples(lambda);
  auto i3 = indecomposables3(lambda);
  std::vector<CatalogEntry> i4;
  if (lambda == 1) i4 = indecomposables4();
  auto p = projectives(lambda);
  std::vector<const std::vector<CatalogEntry>*> lists{&s, &i3, &i4, &p};
  std::vector<FusionRule> rules;
  if (lambda == 1) rules = fusion_expected();
  std::vector<ProductEntry> out;
  for (const auto& a : s)
    for (const auto& b : s) {
      ProductEntry e{a.name, b.name, {}, "", true};
      auto dec = decompose(tensor(a.module, b.module));
      for (const auto& x : dec.summands) e.summands.push_back(name_module(x, lists));
      if (!dec.complete) e.summands.push_back("(incomplete)");
      for (const auto& r : rules)
        if (r.left == a.name && r.right == b.name) {
          e.expected = r.expected;
          e.matches = e.summands == std::vector<std::string>{r.expected};
        }
      out.push_back(std::move(e));
    }
  return out;
}

json simples_section(int lambda) {
  json j = json::array();
  for (const auto& e : simples(lambda)) {
    json x;
    x["name"] = e.name;
    x["dim"] = e.module.dim();
    auto open = e.name.find('(');
    if (open != std::string::npos) x["theta"] = e.name.substr(open + 1, e.name.size() - open - 2);
    x["profile"] = profile_string(restrict_isotypic(e.module));
    x["verified"] = verify_module(e.module).ok();
    x["simple"] = is_simple(e.module);
    j.push_back(x);
  }
  return j;
}

json products_section(const std::vector<ProductEntry>& p) {
  json j = json::array();
  for (const auto& e : p) {
    json x;
    x["left"] = e.left;
    x["right"] = e.right;
    x["summands"] = e.summands;
    if (!e.expected.empty()) {
      x["expected"] = e.expected;
      x["matches"] = e.matches;
    }
    j.push_back(x);
  }
  return j;
}

json ext_section(const Quiver& q) {
  json j;
  j["convention"] = "row i, column j: dim Ext^1(S_i, S_j)";
  j["simples"] = q.vertices;
  j["table"] = q.arrows;
  return j;
}

json quiver_section(const Quiver& q) {
  json j;
  j["convention"] = "arrows i -> j: dim Ext^1(S_i, S_j)";
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t k = 0; k < q.vertices.size(); ++k)
      if (q.arrows[i][k]) j["arrows"].push_back({{"from", q.vertices[i]}, {"to", q.vertices[k]}, {"count", q.arrows[i][k]}});
  j["arrow_count"] = q.arrow_count();
  j["dot"] = quiver_dot(q);
  auto d = separation_diagram(q);
  auto v = rep_type_verdict(q);
  json comps = json::array();
  auto nontrivial = d.nontrivial_components();
  for (std::size_t k = 0; k < nontrivial.size(); ++k)
    comps.push_back({{"vertices", nontrivial[k].labels},
                     {"edges", nontrivial[k].edges.size()},
                     {"classification", v.components[k].to_string()}});
  j["separation_diagram"] = {{"components", comps}, {"dot", diagram_dot(d)}};
  j["verdict"] = v.text;
  return j;
}

json projectives_section(int lambda, const AlgebraTable& t) {
  json j = json::array();
  auto p = projectives(lambda);
  auto tops = projective_tops(lambda);
  auto s = simples(lambda);
  std::vector<std::pair<HModule, HModule>> pairs;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& top = find_entry(s, tops[k]).module;
    auto c = certify_projective_cover(p[k].module, top, t);
    pairs.emplace_back(p[k].module, top);
    j.push_back({{"name", p[k].name},
                 {"cover_of", tops[k]},
                 {"dim", p[k].module.dim()},
                 {"indecomposable", verdict_name(c.indecomposable)},
                 {"surjects", c.surjects},
                 {"summand_of_induced", verdict_name(c.summand_of_induced)},
                 {"certified", c.ok()},
                 {"failures", c.failures}});
  }
  return {{"covers", j}, {"dimension_sum", cover_dimension_sum(pairs)}};
}

Quiver catalog_quiver(int lambda) {
  std::vector<HModule> mods;
  for (const auto& e : simples(lambda)) mods.push_back(e.module);
  return gabriel_quiver(mods);
}

json full_report(int lambda, const AlgebraTable& t) {
  json j;
  j["algebra"] = algebra_section(t);
  j["simples"] = simples_section(lambda);
  j["simple_count"] = j["simples"].size();
  j["products"] = products_section(product_table(lambda));
  auto q = catalog_quiver(lambda);
  j["ext"] = ext_section(q);
  j["quiver"] = quiver_section(q);
  j["projectives"] = projectives_section(lambda, t);
  return j;
}

}  // namespace hopfrep::tools
