#include "hopfrep/algebra/rewriting.hpp"

#include <deque>

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/matrix.hpp"

namespace hopfrep {

RewriteSystem::RewriteSystem(const QlDatum& d, std::size_t step_limit) : d_(d), step_limit_(step_limit) {
  for (const auto& q : relation_set(d).quadratics) {
    rules_[q.lhs] = q.rhs;
    lengths_.insert(q.lhs.size());
  }
}

Element RewriteSystem::reduce_once(const Word& w, bool& changed) const {
  changed = false;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (auto len : lengths_) {
      if (pos + len > w.size()) break;
      auto it = rules_.find(w.substr(pos, len));
      if (it == rules_.end()) continue;
      changed = true;
      Word u = w.substr(0, pos), v = w.substr(pos + len);
      Element out;
      for (const auto& [t, c] : it->second) {
        Word moved = v;
        GQ s = move_group_left_past(d_, t.g, moved);
        add_term(out, Term{u + t.word + moved, t.g}, c * s);
      }
      return out;
    }
  return {{Term{w, 0}, GQ(1)}};
}

const Element& RewriteSystem::nf_word(const Word& w, std::size_t depth) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (depth == 0) steps_ = 0;
  if (++steps_ > step_limit_)
    throw RewriteLimitError("non-terminating orientation: step limit " + std::to_string(step_limit_) +
                            " exceeded while reducing " + word_label(d_, w));
  if (!active_.insert(w).second)
    throw RewriteLimitError("non-terminating orientation: " + word_label(d_, w) + " rewrites to itself");
  bool changed = false;
  Element once = reduce_once(w, changed);
  Element result;
  if (!changed) {
    result = std::move(once);
  } else {
    for (const auto& [t, c] : once) {
      const Element& sub = nf_word(t.word, depth + 1);
      for (const auto& [st, sc] : sub)
        add_term(result, Term{st.word, static_cast<std::uint32_t>(d_.group.mul(st.g, t.g))}, sc * c);
    }
  }
  active_.erase(w);
  return memo_.emplace(w, std::move(result)).first->second;
}

const Element& RewriteSystem::normal_form(const Word& w) const {
  try {
    return nf_word(w, 0);
  } catch (...) {
    active_.clear();
    throw;
  }
}

Element RewriteSystem::normal_form(const Element& e) const {
  Element out;
  for (const auto& [t, c] : e) {
    const Element& sub = normal_form(t.word);
    for (const auto& [st, sc] : sub)
      add_term(out, Term{st.word, static_cast<std::uint32_t>(d_.group.mul(st.g, t.g))}, sc * c);
  }
  return out;
}

bool RewriteSystem::add_equation(const Element& e0) {
  Element e = normal_form(e0);
  if (e.empty()) return false;
  Word lead = e.rbegin()->first.word;
  // coefficient of the leading word in kG
  std::size_t n = d_.group.order();
  Vec kg(n);
  for (const auto& [t, c] : e)
    if (t.word == lead) kg[t.g] = c;
  // solve (sum c_g g) y = 1 in kG
  ExactMatrix L(n, n);
  for (std::size_t g = 0; g < n; ++g)
    if (!kg[g].is_zero())
      for (std::size_t h = 0; h < n; ++h) L(d_.group.mul(g, h), h) += kg[g];
  if (!L.is_invertible())
    throw Error("cannot orient derived relation at " + word_label(d_, lead) + ": leading coefficient not invertible in kG");
  Vec unit(n);
  unit[0] = GQ(1);
  Vec y = L.inverse().apply(unit);
  // lead = -(rest) * y
  Element rhs;
  for (const auto& [t, c] : e) {
    if (t.word == lead) continue;
    for (std::size_t h = 0; h < n; ++h)
      if (!y[h].is_zero())
        add_term(rhs, Term{t.word, static_cast<std::uint32_t>(d_.group.mul(t.g, h))}, -c * y[h]);
  }
  std::deque<Element> requeue;
  for (auto it = rules_.begin(); it != rules_.end();) {
    if (it->first.size() > lead.size() && it->first.find(lead) != Word::npos) {
      Element old = it->second;
      add_term(old, Term{it->first, 0}, GQ(-1));
      requeue.push_back(std::move(old));
      it = rules_.erase(it);
    } else {
      ++it;
    }
  }
  rules_[lead] = std::move(rhs);
  derived_.push_back(lead);
  lengths_.clear();
  for (const auto& [l, r] : rules_) lengths_.insert(l.size());
  memo_.clear();
  for (const auto& r : requeue) add_equation(r);
  return true;
}

std::size_t RewriteSystem::complete(std::size_t max_rules) {
  std::size_t before = derived_.size();
  while (true) {
    std::vector<Element> eqs;
    std::vector<std::pair<Word, Element>> snapshot(rules_.begin(), rules_.end());
    for (const auto& [l1, r1] : snapshot)
      for (const auto& [l2, r2] : snapshot)
        for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
          Element left = free_product(d_, r1, Element{{Term{l2.substr(k), 0}, GQ(1)}});
          Element right = free_product(d_, Element{{Term{l1.substr(0, l1.size() - k), 0}, GQ(1)}}, r2);
          add_scaled(left, right, GQ(-1));
          eqs.push_back(std::move(left));
        }
    for (const auto& [l, r] : snapshot) {
      Element rel = r;
      add_term(rel, Term{l, 0}, GQ(-1));
      for (auto t : d_.group.generators()) eqs.push_back(conjugate(d_, static_cast<std::uint32_t>(t), rel));
    }
    bool added = false;
    for (const auto& e : eqs) {
      if (add_equation(e)) added = true;
      if (rules_.size() > max_rules) throw Error("rewriting completion exceeded " + std::to_string(max_rules) + " rules");
    }
    if (!added) break;
  }
  return derived_.size() - before;
}

std::vector<Word> RewriteSystem::irreducible_words(std::size_t max_len) const {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; !level.empty(); ++len) {
    if (len > max_len) throw Error("rewriting system has irreducible words longer than " + std::to_string(max_len));
    std::vector<Word> next;
    for (const auto& w : level)
      for (std::size_t l = 0; l < d_.nx(); ++l) {
        Word c = w + static_cast<char>(l);
        bool reducible = false;
        for (auto L : lengths_)
          if (L <= c.size() && rules_.count(c.substr(c.size() - L))) {
            reducible = true;
            break;
          }
        if (!reducible) next.push_back(c);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<std::string> RewriteSystem::describe() const {
  std::vector<std::string> out;
  for (const auto& [l, r] : rules_) out.push_back(word_label(d_, l) + " -> " + element_label(d_, r));
  return out;
}

}  // namespace hopfrep
