#include "hopfrep/algebra/element.hpp"

namespace hopfrep {

void add_term(Element& e, const Term& t, const GQ& c) {
  if (c.is_zero()) return;
  auto it = e.find(t);
  if (it == e.end()) {
    e.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

void add_scaled(Element& e, const Element& f, const GQ& c) {
  if (c.is_zero()) return;
  for (const auto& [t, v] : f) add_term(e, t, v * c);
}

bool is_zero(const Element& e) { return e.empty(); }

Word word_of(std::initializer_list<std::size_t> letters) {
  Word w;
  for (auto l : letters) w.push_back(static_cast<char>(l));
  return w;
}

std::string word_label(const QlDatum& d, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) {
    const std::string& lab = d.rack.labels[static_cast<unsigned char>(c)];
    // "(12)" -> "a12"
    std::string inner = lab;
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    s += "a" + inner;
  }
  return s;
}

std::string term_label(const QlDatum& d, const Term& t) {
  std::string w = word_label(d, t.word);
  if (t.g == 0) return w;
  std::string h = "H" + perm_cycle_string(d.group.element(t.g));
  return t.word.empty() ? h : w + h;
}

std::string element_label(const QlDatum& d, const Element& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : e) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + term_label(d, t);
  }
  return s;
}

GQ move_group_left_past(const QlDatum& d, std::uint32_t g, Word& w) {
  GQ s(1);
  for (char& c : w) {
    auto l = static_cast<unsigned char>(c);
    s *= d.chi[l][g];
    c = static_cast<char>(d.act[g][l]);
  }
  return s;
}

Element free_product(const QlDatum& d, const Element& a, const Element& b) {
  Element out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      Word w = tb.word;
      GQ s = move_group_left_past(d, ta.g, w);
      add_term(out, Term{ta.word + w, static_cast<std::uint32_t>(d.group.mul(ta.g, tb.g))}, ca * cb * s);
    }
  return out;
}

Element conjugate(const QlDatum& d, std::uint32_t t, const Element& e) {
  Element out;
  auto tinv = d.group.inv(t);
  for (const auto& [term, c] : e) {
    Word w = term.word;
    GQ s = move_group_left_past(d, t, w);
    add_term(out, Term{w, static_cast<std::uint32_t>(d.group.mul(d.group.mul(t, term.g), tinv))}, c * s);
  }
  return out;
}

}  // namespace hopfrep
