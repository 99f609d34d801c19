#include "hopfrep/exact/matrix_algebra.hpp"

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/linear_system.hpp"

namespace hopfrep {

MatrixSpan::MatrixSpan(const std::vector<ExactMatrix>& family) {
  if (family.empty()) return;
  n_ = family.front().rows();
  LinearSystem ls(n_ * n_);
  for (const auto& m : family) {
    if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("span members must share a square shape");
    if (ls.add(m.entries())) basis_.push_back(m);
  }
  for (auto p : ls.pivots()) positions_.push_back(p);
  std::size_t d = basis_.size();
  ExactMatrix sub(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) sub(k, j) = basis_[k].entries()[positions_[j]];
  inv_ = d ? sub.inverse() : ExactMatrix();
}

std::optional<Vec> MatrixSpan::coords(const ExactMatrix& m) const {
  std::size_t d = basis_.size();
  if (d == 0) {
    if (m.is_zero()) return Vec{};
    return std::nullopt;
  }
  if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("matrix shape differs from span");
  Vec c(d);
  for (std::size_t j = 0; j < d; ++j) {
    const GQ& pj = m.entries()[positions_[j]];
    if (pj.is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k) fma_into(c[k], pj, inv_(j, k));
  }
  if (!(combine(c) == m)) return std::nullopt;
  return c;
}

ExactMatrix MatrixSpan::combine(const Vec& c) const {
  ExactMatrix out(n_, n_);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out += basis_[k].scaled(c[k]);
  return out;
}

std::vector<ExactMatrix> subalgebra_closure(const std::vector<ExactMatrix>& gens, bool unital, std::size_t stop_at) {
  if (gens.empty() && !unital) return {};
  std::size_t n = gens.empty() ? 0 : gens.front().rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("closure generators must share a square shape");
  if (gens.empty()) return {};
  LinearSystem ls(n * n);
  std::vector<ExactMatrix> basis;
  auto push = [&](const ExactMatrix& m) {
    if (ls.add(m.entries())) basis.push_back(m);
  };
  if (unital) push(ExactMatrix::identity(n));
  for (const auto& g : gens) push(g);
  // the span of words is closed once it is stable under left multiplication by generators
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (stop_at && basis.size() >= stop_at) break;
    for (const auto& g : gens) {
      push(g * basis[k]);
      if (stop_at && basis.size() >= stop_at) break;
    }
  }
  return basis;
}

std::vector<std::vector<Vec>> structure_constants(const MatrixSpan& span) {
  const auto& b = span.basis();
  std::vector<std::vector<Vec>> c(b.size(), std::vector<Vec>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto co = span.coords(b[i] * b[j]);
      if (!co) throw NotClosedError("product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                                    " leaves the span");
      c[i][j] = std::move(*co);
    }
  return c;
}

std::vector<Vec> trace_form_radical_coords(const std::vector<std::vector<Vec>>& constants, const Vec& traces) {
  std::size_t d = traces.size();
  ExactMatrix gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      GQ s;
      const Vec& c = constants[a][b];
      for (std::size_t k = 0; k < d; ++k) fma_into(s, c[k], traces[k]);
      gram(a, b) = s;
    }
  return gram.kernel_basis();
}

std::vector<ExactMatrix> trace_form_radical(const std::vector<ExactMatrix>& basis) {
  MatrixSpan span(basis);
  if (span.dim() != basis.size()) throw Error("trace_form_radical: basis is linearly dependent");
  auto constants = structure_constants(span);
  Vec traces(span.dim());
  for (std::size_t k = 0; k < span.dim(); ++k) traces[k] = span.basis()[k].trace();
  std::vector<ExactMatrix> out;
  for (const auto& v : trace_form_radical_coords(constants, traces)) out.push_back(span.combine(v));
  return out;
}

ExactMatrix lift_idempotent(const ExactMatrix& e0, const std::vector<ExactMatrix>& radical,
                            const std::vector<ExactMatrix>& algebra) {
  if (!e0.is_square()) throw DimensionMismatch("idempotent must be square");
  std::optional<MatrixSpan> rad;
  if (!radical.empty()) rad.emplace(radical);
  if (!algebra.empty()) {
    MatrixSpan alg(algebra);
    if (!alg.coords(e0)) throw Error("lift_idempotent: e0 is not in the algebra");
  }
  if (rad && !rad->coords(e0 * e0 - e0)) throw Error("lift_idempotent: e0 is not idempotent modulo the radical");
  ExactMatrix e = e0;
  std::size_t limit = e0.rows() + 1;
  for (std::size_t it = 0; it <= limit; ++it) {
    ExactMatrix e2 = e * e;
    if (e2 == e) {
      if (rad && !rad->coords(e - e0)) throw Error("lift_idempotent: result drifted outside e0 + radical");
      return e;
    }
    e = e2.scaled(GQ(3)) - (e2 * e).scaled(GQ(2));
  }
  throw Error("lift_idempotent: no convergence within the nilpotency bound");
}

}  // namespace hopfrep
