#include "hopfrep/algebra/relations.hpp"

#include <tuple>

namespace hopfrep {

RelationSet relation_set(const QlDatum& d) {
  RelationSet rs;
  for (auto t : d.group.generators())
    for (std::size_t l = 0; l < d.nx(); ++l) rs.swaps.push_back({t, l, d.chi[l][t], d.act[t][l]});
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const auto& C = d.classes[c];
    if (!C.in_Rprime) continue;
    QuadraticRule qr;
    qr.cls = c;
    qr.lambda = d.lambda[c];
    qr.group_element = d.class_group_element(c);
    for (std::size_t h = 0; h < C.size; ++h) qr.terms.emplace_back(C.eta[h], C.pairs[h].first, C.pairs[h].second);
    Element rel;
    for (const auto& [eta, a, b] : qr.terms) add_term(rel, Term{word_of({a, b}), 0}, eta);
    add_term(rel, Term{Word{}, 0}, -qr.lambda);
    add_term(rel, Term{Word{}, static_cast<std::uint32_t>(qr.group_element)}, qr.lambda);
    qr.relation = rel;
    // orient at the deglex-largest word
    const auto& [lead, lc] = *rel.rbegin();
    qr.lhs = lead.word;
    GQ inv = -lc.inverse();
    for (const auto& [t, v] : rel)
      if (t.word != lead.word || t.g != lead.g) add_term(qr.rhs, t, v * inv);
    rs.quadratics.push_back(std::move(qr));
  }
  return rs;
}

std::vector<std::string> RelationSet::describe(const QlDatum& d) const {
  std::vector<std::string> out;
  for (const auto& s : swaps)
    out.push_back("H" + perm_cycle_string(d.group.element(s.t)) + " " + word_label(d, word_of({s.l})) + " = (" +
                  s.coef.to_string() + ") " + word_label(d, word_of({s.target})) + " H" +
                  perm_cycle_string(d.group.element(s.t)));
  for (const auto& q : quadratics) {
    std::string lhs;
    for (const auto& [eta, a, b] : q.terms) {
      if (!lhs.empty()) lhs += " + ";
      lhs += (eta == GQ(1) ? "" : "(" + eta.to_string() + ")") + word_label(d, word_of({a, b}));
    }
    out.push_back(lhs + " = (" + q.lambda.to_string() + ")(1 - H" + perm_cycle_string(d.group.element(q.group_element)) +
                  ")   [rewrite " + word_label(d, q.lhs) + " -> " + element_label(d, q.rhs) + "]");
  }
  return out;
}

std::vector<GeneratorCoalgebra> coproduct_antipode_data(const QlDatum& d) {
  std::vector<GeneratorCoalgebra> out;
  for (std::size_t t = 0; t < d.group.order(); ++t) {
    std::string h = "H" + perm_cycle_string(d.group.element(t));
    out.push_back({GeneratorKind::grouplike, t, t, d.group.inv(t), GQ(1), h + " (x) " + h,
                   "H" + perm_cycle_string(d.group.element(d.group.inv(t)))});
  }
  for (std::size_t i = 0; i < d.nx(); ++i) {
    std::string a = word_label(d, word_of({i}));
    std::string g = "H" + perm_cycle_string(d.group.element(d.g[i]));
    out.push_back({GeneratorKind::skew_primitive, i, d.g[i], d.group.inv(d.g[i]), GQ(-1),
                   g + " (x) " + a + " + " + a + " (x) 1",
                   "-H" + perm_cycle_string(d.group.element(d.group.inv(d.g[i]))) + " " + a});
  }
  return out;
}

}  // namespace hopfrep
