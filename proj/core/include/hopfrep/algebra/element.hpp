#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfrep/exact/gaussian_rational.hpp"
#include "hopfrep/rackql/ql_datum.hpp"

namespace hopfrep {

/// Word in the letters a_l; each char is a rack index.
using Word = std::string;

/// Degree-lexicographic order on words.
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Monomial a_{w_1}...a_{w_k} H_g.
struct Term {
  Word word;
  std::uint32_t g = 0;
  bool operator==(const Term&) const = default;
};

struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    if (a.word != b.word) return DeglexLess{}(a.word, b.word);
    return a.g < b.g;
  }
};

/// Element of the free algebra on a_l smash kG, with group letters moved right.
using Element = std::map<Term, GQ, TermLess>;

void add_term(Element& e, const Term& t, const GQ& c);
void add_scaled(Element& e, const Element& f, const GQ& c);
bool is_zero(const Element& e);

Word word_of(std::initializer_list<std::size_t> letters);
std::string word_label(const QlDatum& d, const Word& w);
std::string term_label(const QlDatum& d, const Term& t);
std::string element_label(const QlDatum& d, const Element& e);

/// H_g * (word): returns the scalar and rewrites the letters.
GQ move_group_left_past(const QlDatum& d, std::uint32_t g, Word& w);

/// Product of two elements in the free smash algebra (no rewriting).
Element free_product(const QlDatum& d, const Element& a, const Element& b);

/// H_t e H_t^{-1}
Element conjugate(const QlDatum& d, std::uint32_t t, const Element& e);

}  // namespace hopfrep
