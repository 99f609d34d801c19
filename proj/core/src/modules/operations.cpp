#include "hopfrep/modules/operations.hpp"

#include <functional>

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/linear_system.hpp"
#include "hopfrep/exact/matrix_algebra.hpp"
#include "hopfrep/exact/polynomial.hpp"

namespace hopfrep {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    default: return "unknown";
  }
}

namespace {

void same_datum(const HModule& m, const HModule& n) {
  if (m.datum_ptr() != n.datum_ptr() && m.datum().name != n.datum().name)
    throw DimensionMismatch("modules over different data: " + m.datum().name + " vs " + n.datum().name);
}

bool in_span(const std::vector<ExactMatrix>& family, const ExactMatrix& x) {
  if (family.empty()) return x.is_zero();
  return MatrixSpan(family).coords(x).has_value();
}

// r independent rows of a full-column-rank matrix
std::vector<std::size_t> independent_rows(const ExactMatrix& b) {
  LinearSystem ls(b.cols());
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < b.rows() && rows.size() < b.cols(); ++r)
    if (ls.add(b.row(r))) rows.push_back(r);
  if (rows.size() != b.cols()) throw DimensionMismatch("submodule basis is not linearly independent");
  return rows;
}

ExactMatrix select_rows(const ExactMatrix& m, const std::vector<std::size_t>& rows) {
  ExactMatrix out(rows.size(), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < m.cols(); ++c) out(k, c) = m(rows[k], c);
  return out;
}

}  // namespace

HModule tensor(const HModule& m, const HModule& n) {
  same_datum(m, n);
  const QlDatum& d = m.datum();
  std::vector<ExactMatrix> h, a;
  for (std::size_t k = 0; k < m.h_gens().size(); ++k) h.push_back(kron(m.h_gens()[k], n.h_gens()[k]));
  ExactMatrix id = ExactMatrix::identity(n.dim());
  for (std::size_t i = 0; i < d.nx(); ++i) a.push_back(kron(m.h(d.g[i]), n.a(i)) + kron(m.a(i), id));
  return {m.datum_ptr(), h, a, m.name().empty() || n.name().empty() ? "" : m.name() + " (x) " + n.name()};
}

HModule dual(const HModule& m) {
  const QlDatum& d = m.datum();
  std::vector<ExactMatrix> h, a;
  for (auto t : d.group.generators()) h.push_back(m.h(d.group.inv(t)).transpose());
  for (std::size_t i = 0; i < d.nx(); ++i) a.push_back((m.h(d.group.inv(d.g[i])) * m.a(i)).scaled(GQ(-1)).transpose());
  return {m.datum_ptr(), h, a, m.name().empty() ? "" : m.name() + "*"};
}

HModule direct_sum(const HModule& m, const HModule& n) {
  same_datum(m, n);
  std::vector<ExactMatrix> h, a;
  for (std::size_t k = 0; k < m.h_gens().size(); ++k) h.push_back(hopfrep::direct_sum(m.h_gens()[k], n.h_gens()[k]));
  for (std::size_t i = 0; i < m.datum().nx(); ++i) a.push_back(hopfrep::direct_sum(m.a(i), n.a(i)));
  return {m.datum_ptr(), h, a, m.name().empty() || n.name().empty() ? "" : m.name() + " + " + n.name()};
}

bool is_submodule(const HModule& m, const std::vector<Vec>& basis) {
  LinearSystem ls(m.dim());
  for (const auto& v : basis) ls.add(v);
  for (const auto& x : m.generators())
    for (const auto& v : basis)
      if (!ls.contains(x.apply(v))) return false;
  return true;
}

HModule submodule(const HModule& m, const std::vector<Vec>& basis) {
  ExactMatrix b = ExactMatrix::from_columns(basis, m.dim());
  auto rows = independent_rows(b);
  ExactMatrix pinv = select_rows(b, rows).inverse();
  auto restrict = [&](const ExactMatrix& x) {
    ExactMatrix xb = x * b;
    ExactMatrix r = pinv * select_rows(xb, rows);
    if (b * r != xb) throw NotClosedError("subspace is not stable under the action");
    return r;
  };
  std::vector<ExactMatrix> h, a;
  for (const auto& x : m.h_gens()) h.push_back(restrict(x));
  for (const auto& x : m.a_all()) a.push_back(restrict(x));
  return {m.datum_ptr(), h, a};
}

HModule quotient_module(const HModule& m, const std::vector<Vec>& basis) {
  std::size_t n = m.dim(), r = basis.size();
  LinearSystem ls(n);
  std::vector<Vec> cols;
  for (const auto& v : basis) {
    if (!ls.add(v)) throw DimensionMismatch("submodule basis is not linearly independent");
    cols.push_back(v);
  }
  for (std::size_t k = 0; k < n && cols.size() < n; ++k) {
    Vec e(n);
    e[k] = GQ(1);
    if (ls.add(e)) cols.push_back(e);
  }
  ExactMatrix q = ExactMatrix::from_columns(cols, n), qinv = q.inverse();
  auto restrict = [&](const ExactMatrix& x) {
    ExactMatrix y = qinv * x * q;
    if (!y.block(r, 0, n - r, r).is_zero()) throw NotClosedError("subspace is not stable under the action");
    return y.block(r, r, n - r, n - r);
  };
  std::vector<ExactMatrix> h, a;
  for (const auto& x : m.h_gens()) h.push_back(restrict(x));
  for (const auto& x : m.a_all()) a.push_back(restrict(x));
  return {m.datum_ptr(), h, a};
}

bool is_simple(const HModule& m) {
  std::size_t n = m.dim();
  if (n == 0) return false;
  if (n == 1) return true;
  return subalgebra_closure(m.generators(), true, n * n).size() == n * n;
}

namespace {

std::vector<ExactMatrix> intertwiners(const std::vector<ExactMatrix>& xm, const std::vector<ExactMatrix>& xn,
                                      std::size_t dm, std::size_t dn) {
  // unknown T(r,c) at r*dm + c;  T Xm - Xn T = 0
  LinearSystem ls(dm * dn);
  for (std::size_t g = 0; g < xm.size(); ++g) {
    const auto& A = xm[g];
    const auto& B = xn[g];
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        std::map<std::uint32_t, GQ> row;
        for (std::size_t k = 0; k < dm; ++k)
          if (!A(k, c).is_zero()) row[static_cast<std::uint32_t>(r * dm + k)] += A(k, c);
        for (std::size_t k = 0; k < dn; ++k)
          if (!B(r, k).is_zero()) row[static_cast<std::uint32_t>(k * dm + c)] -= B(r, k);
        SparseRow sr;
        for (auto& [i, v] : row)
          if (!v.is_zero()) sr.emplace_back(i, v);
        if (!sr.empty()) ls.add(sr);
      }
  }
  std::vector<ExactMatrix> out;
  for (const auto& v : ls.kernel_basis()) out.emplace_back(dn, dm, v);
  return out;
}

}  // namespace

std::vector<ExactMatrix> hom_space(const HModule& m, const HModule& n) {
  same_datum(m, n);
  return intertwiners(m.generators(), n.generators(), m.dim(), n.dim());
}

std::vector<ExactMatrix> hom_space_group(const HModule& m, const HModule& n) {
  same_datum(m, n);
  return intertwiners(m.h_gens(), n.h_gens(), m.dim(), n.dim());
}

EndInfo endomorphisms(const HModule& m) {
  EndInfo e;
  e.basis = hom_space(m, m);
  e.radical = trace_form_radical(e.basis);
  return e;
}

namespace {

// Deterministic candidate elements of a span: the basis, then small combinations.
void sweep(const std::vector<ExactMatrix>& basis, const std::function<bool(const ExactMatrix&)>& f) {
  for (const auto& b : basis)
    if (f(b)) return;
  if (basis.size() < 2) return;
  const int patterns[][4] = {{1, 1, 1, 1}, {1, 2, 3, 4}, {1, -1, 2, -2}, {1, 3, 9, 27}, {2, 1, 5, 3}, {1, -2, 4, -8}};
  for (const auto& p : patterns) {
    ExactMatrix acc = basis[0].scaled(GQ(0));
    for (std::size_t k = 0; k < basis.size(); ++k) acc += basis[k].scaled(GQ(p[k % 4] + static_cast<int>(k / 4)));
    if (f(acc)) return;
  }
}

// Combinatorial Nullstellensatz: det(sum c_k F_k) has degree <= n in each c_k,
// so it vanishes on {0..n}^k only if it is identically zero.
std::optional<bool> grid_invertible(const std::vector<ExactMatrix>& basis, std::size_t n, std::size_t budget) {
  std::size_t k = basis.size(), pts = 1;
  for (std::size_t i = 0; i < k; ++i) {
    pts *= (n + 1);
    if (pts > budget) return std::nullopt;
  }
  std::vector<std::size_t> c(k, 0);
  for (std::size_t it = 0; it < pts; ++it) {
    ExactMatrix acc(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i]) acc += basis[i].scaled(GQ(static_cast<long long>(c[i])));
    if (acc.is_invertible()) return true;
    for (std::size_t i = 0; i < k; ++i) {
      if (++c[i] <= n) break;
      c[i] = 0;
    }
  }
  return false;
}

// Nontrivial idempotent in End(m) built from an element with two eigenvalue
// clusters: e = t(z) p2(z) where p1 p2 is the coprime split of minpoly(z).
std::optional<ExactMatrix> split_idempotent(const std::vector<ExactMatrix>& endo, std::size_t n) {
  std::optional<ExactMatrix> found;
  sweep(endo, [&](const ExactMatrix& z) {
    Polynomial p = minimal_polynomial(z);
    Polynomial sf = squarefree_part(p);
    if (sf.degree() < 2) return false;
    auto roots = gaussian_rational_roots(sf);
    if (!roots || roots->empty()) return false;
    Polynomial lin = Polynomial::linear_root((*roots)[0]);
    Polynomial p1 = Polynomial::constant(GQ(1)), rest = p, q, r;
    while (true) {
      Polynomial::divmod(rest, lin, q, r);
      if (!r.is_zero()) break;
      p1 = p1 * lin;
      rest = q;
    }
    Polynomial s, t;
    Polynomial g = poly_xgcd(p1, rest, s, t);
    if (g.degree() != 0) return false;
    ExactMatrix e = (t.eval(z) * rest.eval(z)).scaled(g.leading().inverse());
    if (e * e != e || e.is_zero() || e == ExactMatrix::identity(n)) return false;
    found = e;
    return true;
  });
  return found;
}

}  // namespace

Verdict is_isomorphic(const HModule& m, const HModule& n) {
  same_datum(m, n);
  if (m.dim() != n.dim()) return Verdict::no;
  if (m.dim() == 0) return Verdict::yes;
  auto f = hom_space(m, n);
  if (f.empty()) return Verdict::no;
  bool inv = false;
  sweep(f, [&](const ExactMatrix& x) { return inv = x.is_invertible(); });
  if (inv) return Verdict::yes;
  auto g = hom_space(n, m);
  if (g.empty()) return Verdict::no;
  // local endomorphism ring: m is a summand of n iff some g f is a unit
  for (int side = 0; side < 2; ++side) {
    const HModule& a = side == 0 ? m : n;
    const auto& fs = side == 0 ? f : g;
    const auto& gs = side == 0 ? g : f;
    auto e = endomorphisms(a);
    if (e.top_dim() != 1) continue;
    for (const auto& y : gs)
      for (const auto& x : fs)
        if (!in_span(e.radical, y * x)) return Verdict::yes;
    return Verdict::no;
  }
  auto grid = grid_invertible(f, m.dim(), 20000);
  if (grid) return *grid ? Verdict::yes : Verdict::no;
  return Verdict::unknown;
}

Verdict is_indecomposable(const HModule& m) {
  if (m.dim() == 0) return Verdict::no;
  if (m.dim() == 1) return Verdict::yes;
  auto e = endomorphisms(m);
  if (e.top_dim() == 1) return Verdict::yes;
  if (split_idempotent(e.basis, m.dim())) return Verdict::no;
  return Verdict::unknown;
}

Decomposition decompose(const HModule& m) {
  Decomposition out;
  std::vector<HModule> work{m};
  while (!work.empty()) {
    HModule cur = work.back();
    work.pop_back();
    if (cur.dim() <= 1) {
      out.summands.push_back(cur);
      continue;
    }
    auto e = endomorphisms(cur);
    if (e.top_dim() == 1) {
      out.summands.push_back(cur);
      continue;
    }
    auto idem = split_idempotent(e.basis, cur.dim());
    if (!idem) {
      out.summands.push_back(cur);
      out.complete = false;
      continue;
    }
    ExactMatrix other = ExactMatrix::identity(cur.dim()) - *idem;
    // pushed in reverse so the first summand comes out first
    work.push_back(submodule(cur, other.column_space_basis()));
    work.push_back(submodule(cur, idem->column_space_basis()));
  }
  return out;
}

CharacterTable s3_character_table(const PermGroup& g) {
  if (g.degree() != 3 || g.order() != 6) throw Error("built-in character table is only for S3");
  CharacterTable ct;
  ct.names = {"eps", "sg", "st"};
  ct.degrees = {1, 1, 2};
  ct.values.assign(3, std::vector<GQ>(g.order()));
  for (std::size_t t = 0; t < g.order(); ++t) {
    int fixed = 0;
    for (std::size_t x = 0; x < 3; ++x) fixed += g.element(t)[x] == x;
    ct.values[0][t] = GQ(1);
    ct.values[1][t] = GQ(perm_sign(g.element(t)));
    ct.values[2][t] = GQ(fixed - 1);
  }
  return ct;
}

IsotypicProfile restrict_isotypic(const HModule& m, const CharacterTable& chars) {
  const auto& G = m.datum().group;
  IsotypicProfile out;
  std::size_t total = 0;
  for (std::size_t k = 0; k < chars.names.size(); ++k) {
    GQ s;
    for (std::size_t t = 0; t < G.order(); ++t) s += chars.values[k][G.inv(t)] * m.h(t).trace();
    s = s * GQ(Rational(1, static_cast<long long>(G.order())));
    if (!s.im().is_zero() || !s.re().is_integer() || s.re().sign() < 0)
      throw Error("non-integral isotypic multiplicity " + s.to_string() + " for " + chars.names[k]);
    auto mult = static_cast<std::size_t>(s.re().numerator().get_ui());
    out[chars.names[k]] = mult;
    total += mult * chars.degrees[k];
  }
  if (total != m.dim()) throw Error("isotypic multiplicities do not add up to the dimension");
  return out;
}

IsotypicProfile restrict_isotypic(const HModule& m) { return restrict_isotypic(m, s3_character_table(m.datum().group)); }

std::string profile_string(const IsotypicProfile& p) {
  std::string s = "{";
  for (const auto& [k, v] : p) s += (s.size() > 1 ? ", " : "") + k + ":" + std::to_string(v);
  return s + "}";
}

HModule induce(const AlgebraTable& t, const std::vector<ExactMatrix>& w_gens, std::string name) {
  const QlDatum& d = t.datum();
  auto wg = group_matrices(d.group, w_gens);
  std::size_t w = w_gens.empty() ? 0 : w_gens[0].rows();
  std::size_t nw = t.words().size(), n = nw * w;
  auto action = [&](std::size_t bx) {
    ExactMatrix out(n, n);
    for (std::size_t k = 0; k < nw; ++k)
      for (const auto& [idx, c] : t.mult(bx, t.index(k, 0))) {
        std::size_t k2 = idx / t.group_order(), g2 = idx % t.group_order();
        const auto& rho = wg[g2];
        for (std::size_t j = 0; j < w; ++j)
          for (std::size_t r = 0; r < w; ++r)
            if (!rho(r, j).is_zero()) out(k2 * w + r, k * w + j) += c * rho(r, j);
      }
    return out;
  };
  std::vector<ExactMatrix> h, a;
  for (auto g : d.group.generators()) h.push_back(action(t.index(0, g)));
  for (std::size_t l = 0; l < d.nx(); ++l) a.push_back(action(t.index(t.word_index(word_of({l})), 0)));
  return {t.datum_ptr(), h, a, std::move(name)};
}

CoverCertificate certify_projective_cover(const HModule& p, const HModule& s, const AlgebraTable& t) {
  CoverCertificate cert;
  if (!is_simple(s)) cert.failures.push_back("target is not simple");
  auto e = endomorphisms(p);
  cert.indecomposable = e.top_dim() == 1 ? Verdict::yes : is_indecomposable(p);
  if (cert.indecomposable != Verdict::yes)
    cert.failures.push_back("indecomposability: " + verdict_name(cert.indecomposable));
  auto f = hom_space(p, s);
  sweep(f, [&](const ExactMatrix& x) { return cert.surjects = x.rank() == s.dim(); });
  if (!cert.surjects) cert.failures.push_back("no surjection onto the simple module");
  HModule ind = induce(t, s.h_gens());
  if (e.top_dim() == 1) {
    auto into = hom_space(p, ind), back = hom_space(ind, p);
    cert.summand_of_induced = Verdict::no;
    for (const auto& y : back) {
      for (const auto& x : into)
        if (!in_span(e.radical, y * x)) {
          cert.summand_of_induced = Verdict::yes;
          break;
        }
      if (cert.summand_of_induced == Verdict::yes) break;
    }
  }
  if (cert.summand_of_induced != Verdict::yes)
    cert.failures.push_back("direct summand of the induced module: " + verdict_name(cert.summand_of_induced));
  return cert;
}

std::size_t cover_dimension_sum(const std::vector<std::pair<HModule, HModule>>& covers_and_simples) {
  std::size_t s = 0;
  for (const auto& [p, simple] : covers_and_simples) s += p.dim() * simple.dim();
  return s;
}

}  // namespace hopfrep
