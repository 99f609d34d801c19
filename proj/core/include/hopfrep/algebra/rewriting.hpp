#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfrep/algebra/relations.hpp"

namespace hopfrep {

/// Word rewriting for H(Q): rules lhs -> rhs on a-words, group letters kept on
/// the right. Starts from the squares and one orientation per class relation
/// and, on request, adds the consequences needed for a confluent system
/// (overlap ambiguities and conjugates by G), each oriented at its
/// deglex-leading word.
class RewriteSystem {
 public:
  RewriteSystem(const QlDatum& d, std::size_t step_limit);

  /// Normal form of a word (as an element with group letters on the right).
  [[nodiscard]] const Element& normal_form(const Word& w) const;
  [[nodiscard]] Element normal_form(const Element& e) const;

  /// Resolve ambiguities until none produce new rules. Returns the number of
  /// derived rules. Throws Error if `max_rules` is exceeded.
  std::size_t complete(std::size_t max_rules = 200);

  /// Irreducible words; throws if there are words longer than max_len.
  [[nodiscard]] std::vector<Word> irreducible_words(std::size_t max_len = 16) const;

  [[nodiscard]] const std::map<Word, Element, DeglexLess>& rules() const { return rules_; }
  [[nodiscard]] const std::vector<Word>& derived() const { return derived_; }
  [[nodiscard]] std::vector<std::string> describe() const;
  [[nodiscard]] const QlDatum& datum() const { return d_; }

 private:
  bool add_equation(const Element& e);
  [[nodiscard]] Element reduce_once(const Word& w, bool& changed) const;
  const Element& nf_word(const Word& w, std::size_t depth) const;

  const QlDatum& d_;
  std::size_t step_limit_;
  std::map<Word, Element, DeglexLess> rules_;
  std::set<std::size_t> lengths_;
  std::vector<Word> derived_;
  mutable std::unordered_map<Word, Element> memo_;
  mutable std::set<Word> active_;
  mutable std::size_t steps_ = 0;
};

}  // namespace hopfrep
