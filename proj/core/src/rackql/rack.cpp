#include "hopfrep/rackql/rack.hpp"

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/rackql/group.hpp"

namespace hopfrep {

std::size_t Rack::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return k;
  throw ValidationError("unknown rack element '" + label + "'");
}

Rack transposition_rack(std::size_t n) {
  if (n < 3) throw ValidationError("transposition rack needs n >= 3");
  if (n > 9) throw ValidationError("transposition rack supports n <= 9");
  std::vector<Perm> elems;
  Rack r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      elems.push_back(transposition(n, a, b));
      r.labels.push_back("(" + std::to_string(a + 1) + std::to_string(b + 1) + ")");
    }
  std::size_t m = elems.size();
  r.op.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Perm c = perm_compose(perm_compose(elems[i], elems[j]), perm_inverse(elems[i]));
      for (std::size_t k = 0; k < m; ++k)
        if (elems[k] == c) r.op[i][j] = k;
    }
  return r;
}

std::vector<std::string> rack_failures(const Rack& r) {
  std::vector<std::string> out;
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> hit(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (r.op[i][j] >= n) {
        out.push_back("rack table entry out of range at (" + r.labels[i] + "," + r.labels[j] + ")");
        return out;
      }
      hit[r.op[i][j]] = true;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!hit[j]) {
        out.push_back("phi_" + r.labels[i] + " is not a bijection");
        break;
      }
    if (r.op[i][i] != i) out.push_back("not a quandle: " + r.labels[i] + " |> " + r.labels[i] + " != " + r.labels[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r.op[i][r.op[j][k]] != r.op[r.op[i][j]][r.op[i][k]]) {
          out.push_back("self-distributivity fails at (" + r.labels[i] + "," + r.labels[j] + "," + r.labels[k] + ")");
          return out;
        }
  return out;
}

Cocycle2 constant_cocycle(std::size_t n, const GQ& c) { return Cocycle2(n, std::vector<GQ>(n, c)); }

std::vector<std::string> cocycle_failures(const Rack& r, const Cocycle2& q) {
  std::vector<std::string> out;
  std::size_t n = r.size();
  if (q.size() != n) return {"cocycle table has wrong size"};
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) return {"cocycle table has wrong size"};
    for (std::size_t j = 0; j < n; ++j)
      if (q[i][j].is_zero()) out.push_back("cocycle value q(" + r.labels[i] + "," + r.labels[j] + ") is zero");
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(q[i][r.op[j][k]] * q[j][k] == q[r.op[i][j]][r.op[i][k]] * q[i][k])) {
          out.push_back("2-cocycle condition fails at (" + r.labels[i] + "," + r.labels[j] + "," + r.labels[k] + ")");
          return out;
        }
  return out;
}

std::size_t ClassData::position_of(std::size_t i, std::size_t j) const {
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].first == i && pairs[k].second == j) return k;
  throw Error("pair not in class");
}

std::vector<ClassData> enumerate_classes(const Rack& r, const Cocycle2& q) {
  std::size_t n = r.size();
  std::vector<bool> seen(n * n, false);
  std::vector<ClassData> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[i * n + j]) continue;
      ClassData c;
      // orbit of (i,j) -> (i |> j, i)
      std::size_t a = i, b = j;
      do {
        seen[a * n + b] = true;
        c.pairs.emplace_back(a, b);
        std::size_t na = r.op[a][b];
        b = a;
        a = na;
      } while (!(a == i && b == j));
      c.size = c.pairs.size();
      c.seq = {j, i};
      while (c.seq.size() < c.size + 2) {
        std::size_t m = c.seq.size();
        c.seq.push_back(r.op[c.seq[m - 1]][c.seq[m - 2]]);
      }
      auto qq = [&](std::size_t a1, std::size_t b1) { return q[c.seq[a1 - 1]][c.seq[b1 - 1]]; };  // 1-based
      GQ prod(1);
      for (std::size_t h = 1; h <= c.size; ++h) {
        if (h == 1) {
          c.eta.emplace_back(1);
        } else {
          prod *= qq(h, h - 1);
          c.eta.push_back((h % 2 == 1) ? prod : -prod);  // (-1)^{h+1}
        }
      }
      GQ full(1);
      for (std::size_t h = 1; h <= c.size; ++h) full *= qq(h + 1, h);
      c.in_Rprime = full == GQ(c.size % 2 == 0 ? 1 : -1);
      for (std::size_t h = 1; h <= c.size + 1; ++h) {
        std::size_t terms = (h % 2 == 0) ? h / 2 - 1 : (h - 1) / 2;
        GQ z(terms % 2 == 0 ? 1 : -1);
        for (std::size_t l = 1; l <= terms; ++l) z *= qq(h - 2 * l + 1, h - 2 * l);
        c.zeta.push_back(z);
      }
      out.push_back(std::move(c));
    }
  return out;
}

std::size_t class_of(const std::vector<ClassData>& classes, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (const auto& p : classes[k].pairs)
      if (p.first == i && p.second == j) return k;
  throw Error("pair not covered by classes");
}

std::pair<GQ, GQ> alpha_beta(const ClassData& c, const GQ& x) {
  auto geometric = [&](std::size_t terms) {
    GQ s, p(1);
    for (std::size_t r = 0; r < terms; ++r) {
      s += p;
      p *= x;
    }
    return s;
  };
  // [n/2] - 1 + 1 terms and [(n+1)/2] - 1 + 1 terms
  return {geometric(c.size / 2), geometric((c.size + 1) / 2)};
}

GQ lambda_start_factor(const ClassData& c, const Cocycle2& q, std::size_t from, std::size_t to) {
  GQ f(1);
  std::size_t k = from;
  while (k != to) {
    const auto& [a, b] = c.pairs[k];
    f *= -q[a][b].inverse();
    k = (k + 1) % c.size;
  }
  return f;
}

}  // namespace hopfrep
