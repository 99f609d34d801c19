#include "hopfrep/exact/linear_system.hpp"

#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

LinearSystem::LinearSystem(std::size_t nvars) : n_(nvars), row_of_col_(nvars, -1) {}

std::size_t LinearSystem::eliminate(Vec& acc) const {
  std::size_t first = n_;
  for (std::size_t c = 0; c < n_; ++c) {
    if (acc[c].is_zero()) continue;
    auto r = row_of_col_[c];
    if (r < 0) {
      if (first == n_) first = c;
      continue;
    }
    GQ f = acc[c];
    for (const auto& [k, v] : rows_[static_cast<std::size_t>(r)]) acc[k] -= f * v;
  }
  return first;
}

bool LinearSystem::add(const SparseRow& row) {
  Vec acc(n_);
  for (const auto& [k, v] : row) {
    if (k >= n_) throw DimensionMismatch("equation index out of range");
    acc[k] += v;
  }
  return add(acc);
}

bool LinearSystem::add(const Vec& row) {
  if (row.size() != n_) throw DimensionMismatch("equation length mismatch");
  Vec acc = row;
  std::size_t lead = eliminate(acc);
  if (lead == n_) return false;
  GQ inv = acc[lead].inverse();
  SparseRow stored;
  for (std::size_t k = lead; k < n_; ++k)
    if (!acc[k].is_zero()) stored.emplace_back(static_cast<std::uint32_t>(k), k == lead ? GQ(1) : acc[k] * inv);
  row_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
  pivot_col_.push_back(static_cast<std::uint32_t>(lead));
  rows_.push_back(std::move(stored));
  return true;
}

Vec LinearSystem::reduce(const Vec& v) const {
  if (v.size() != n_) throw DimensionMismatch("vector length mismatch");
  Vec acc = v;
  eliminate(acc);
  return acc;
}

std::vector<Vec> LinearSystem::kernel_basis() const {
  // rows_ are in echelon form only relative to their own leads; order by pivot
  std::vector<std::int32_t> order;
  for (std::size_t c = n_; c-- > 0;)
    if (row_of_col_[c] >= 0) order.push_back(row_of_col_[c]);
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (row_of_col_[f] >= 0) continue;
    Vec x(n_);
    x[f] = GQ(1);
    // pivots in decreasing column order: each row refers only to larger columns
    for (auto r : order) {
      const auto& row = rows_[static_cast<std::size_t>(r)];
      GQ s;
      for (std::size_t t = 1; t < row.size(); ++t) fma_into(s, row[t].second, x[row[t].first]);
      x[row[0].first] = -s;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace hopfrep
