#include "hopfrep/algebra/table.hpp"

#include <map>
#include <set>

#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

std::size_t AlgebraTable::word_index(const Word& w) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] == w) return k;
  throw NotClosedError("word " + word_label(*datum_, w) + " is not a basis monomial");
}

std::string AlgebraTable::label(std::size_t k) const {
  return term_label(*datum_, Term{words_[k / order_], static_cast<std::uint32_t>(k % order_)});
}

Vec AlgebraTable::product(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      GQ c = x[i] * y[j];
      for (const auto& [k, v] : mult(i, j)) out[k] += c * v;
    }
  }
  return out;
}

Vec AlgebraTable::coords(const Element& e) const {
  Element nf = rw_->normal_form(e);
  Vec out(dim());
  for (const auto& [t, c] : nf) out[index(word_index(t.word), t.g)] += c;
  return out;
}

Vec AlgebraTable::basis_vector(std::size_t k) const {
  Vec v(dim());
  v[k] = GQ(1);
  return v;
}

Vec AlgebraTable::generator_a(std::size_t l) const { return basis_vector(index(word_index(word_of({l})), 0)); }
Vec AlgebraTable::generator_h(std::size_t g) const { return basis_vector(index(0, g)); }

ExactMatrix AlgebraTable::left_regular(std::size_t i) const {
  ExactMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, v] : mult(i, j)) m(k, j) = v;
  return m;
}

std::string AlgebraTable::associativity_audit() const {
  std::size_t n = dim();
  Vec acc(n);
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(n, 0);
  auto bump = [&](std::uint32_t k, const GQ& v) {
    if (!mark[k]) {
      mark[k] = 1;
      touched.push_back(k);
    }
    acc[k] += v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = mult(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k - e_i (e_j e_k)
        for (const auto& [m, c] : ij)
          for (const auto& [r, v] : mult(m, k)) bump(r, c * v);
        for (const auto& [m, c] : mult(j, k))
          for (const auto& [r, v] : mult(i, m)) bump(r, -(c * v));
        bool bad = false;
        for (auto t : touched) {
          if (!acc[t].is_zero()) bad = true;
          acc[t] = GQ();
          mark[t] = 0;
        }
        touched.clear();
        if (bad) return "(" + label(i) + " " + label(j) + ") " + label(k) + " != " + label(i) + " (" + label(j) + " " +
                        label(k) + ")";
      }
    }
  return {};
}

std::string AlgebraTable::unit_audit() const {
  for (std::size_t j = 0; j < dim(); ++j) {
    SparseRow e{{static_cast<std::uint32_t>(j), GQ(1)}};
    if (mult(unit(), j) != e || mult(j, unit()) != e) return "unit fails on " + label(j);
  }
  return {};
}

std::vector<std::string> AlgebraTable::relation_audit() const {
  std::vector<std::string> out;
  const QlDatum& d = *datum_;
  for (std::size_t t = 0; t < d.group.order(); ++t)
    for (std::size_t s = 0; s < d.group.order(); ++s)
      if (product(generator_h(t), generator_h(s)) != generator_h(d.group.mul(t, s)))
        out.push_back("group relation H_t H_s = H_ts fails");
  auto rs = relation_set(d);
  for (const auto& sw : rs.swaps) {
    Vec lhs = product(generator_h(sw.t), generator_a(sw.l));
    Vec rhs = scale_vec(product(generator_a(sw.target), generator_h(sw.t)), sw.coef);
    if (lhs != rhs) out.push_back("swap relation fails for H" + perm_cycle_string(d.group.element(sw.t)));
  }
  for (const auto& q : rs.quadratics) {
    Vec acc(dim());
    for (const auto& [eta, a, b] : q.terms) acc = add_vec(acc, scale_vec(product(generator_a(a), generator_a(b)), eta));
    acc = add_vec(acc, scale_vec(generator_h(0), -q.lambda));
    acc = add_vec(acc, scale_vec(generator_h(q.group_element), q.lambda));
    if (!is_zero_vec(acc)) out.push_back("quadratic relation of class " + d.class_label(q.cls) + " fails");
  }
  return out;
}

nlohmann::json AlgebraTable::to_json() const {
  nlohmann::json j;
  j["datum"] = datum_->name;
  j["dim"] = dim();
  j["unit"] = unit();
  j["basis"] = nlohmann::json::array();
  for (std::size_t k = 0; k < dim(); ++k) j["basis"].push_back(label(k));
  j["mult"] = nlohmann::json::array();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (const auto& [k, v] : mult(a, b)) j["mult"].push_back({a, b, k, v.to_string()});
  j["rewrite_rules"] = rw_->describe();
  return j;
}

Word parse_word(const QlDatum& d, const std::string& label) {
  if (label == "1" || label.empty()) return {};
  Word w;
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] != 'a') throw ParseError("bad monomial '" + label + "'");
    std::size_t end = label.find('a', pos + 1);
    std::string inner = label.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1);
    w.push_back(static_cast<char>(d.rack.index_of("(" + inner + ")")));
    pos = end == std::string::npos ? label.size() : end;
  }
  return w;
}

std::vector<Word> a3_candidate_basis(const QlDatum& d) {
  std::vector<Word> out;
  for (const char* s : {"1", "a12", "a13", "a23", "a12a13", "a12a23", "a13a23", "a13a12", "a12a13a23", "a12a13a12",
                        "a13a12a23", "a12a13a12a23"})
    out.push_back(parse_word(d, s));
  return out;
}

AlgebraTable build_table(std::shared_ptr<const QlDatum> d, const std::vector<Word>& monomials, std::size_t step_limit) {
  AlgebraTable t;
  t.datum_ = d;
  t.order_ = d->group.order();
  t.words_ = monomials;
  t.rw_ = std::make_shared<RewriteSystem>(*d, step_limit);
  bool group_only = monomials.size() == 1 && monomials[0].empty();
  if (!group_only) {
    t.rw_->complete();
    auto irr = t.rw_->irreducible_words();
    std::set<Word> irr_set(irr.begin(), irr.end()), cand(monomials.begin(), monomials.end());
    if (cand.size() != monomials.size()) throw NotClosedError("candidate monomial list has duplicates");
    for (const auto& w : monomials)
      if (!irr_set.count(w))
        throw NotClosedError("candidate monomial " + word_label(*d, w) + " is reducible, so the list is not a basis");
    for (const auto& w : irr)
      if (!cand.count(w))
        throw NotClosedError("product escapes the span: irreducible word " + word_label(*d, w) +
                             " is not in the candidate list");
  }
  std::map<Word, std::size_t> widx;
  for (std::size_t k = 0; k < monomials.size(); ++k) widx[monomials[k]] = k;
  std::size_t n = t.dim();
  t.mult_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t g1 = i % t.order_, g2 = j % t.order_;
      Word w2 = monomials[j / t.order_];
      GQ s = move_group_left_past(*d, static_cast<std::uint32_t>(g1), w2);
      std::size_t g12 = d->group.mul(g1, g2);
      std::map<std::uint32_t, GQ> row;
      const Word full = monomials[i / t.order_] + w2;
      if (group_only && !full.empty()) throw NotClosedError("group algebra table got a letter");
      const Element& nf = group_only ? Element{{Term{Word{}, 0}, GQ(1)}} : t.rw_->normal_form(full);
      for (const auto& [term, c] : nf) {
        auto it = widx.find(term.word);
        if (it == widx.end()) throw NotClosedError("product escapes the span: " + word_label(*d, term.word));
        auto k = static_cast<std::uint32_t>(it->second * t.order_ + d->group.mul(term.g, g12));
        row[k] += c * s;
      }
      SparseRow sr;
      for (auto& [k, v] : row)
        if (!v.is_zero()) sr.emplace_back(k, v);
      t.mult_[i * n + j] = std::move(sr);
    }
  return t;
}

AlgebraTable group_algebra_table(std::shared_ptr<const QlDatum> d) { return build_table(d, {Word{}}, 10000); }

RadicalInfo algebra_radical(const AlgebraTable& t) {
  std::size_t n = t.dim();
  Vec traces(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [r, v] : t.mult(k, j))
        if (r == j) traces[k] += v;
  LinearSystem gram(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vec row(n);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, v] : t.mult(a, b)) fma_into(row[b], v, traces[k]);
    gram.add(row);
  }
  RadicalInfo info;
  info.radical_basis = gram.kernel_basis();
  info.dim_radical = info.radical_basis.size();
  info.dim_semisimple = n - info.dim_radical;
  return info;
}

}  // namespace hopfrep
