#include "hopfrep/onedim/onedim.hpp"

#include <deque>
#include <optional>

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/linear_system.hpp"

namespace hopfrep {

namespace {

SparseRow sparse(std::initializer_list<std::pair<std::size_t, GQ>> terms) {
  SparseRow row;
  for (const auto& [k, v] : terms) {
    if (v.is_zero()) continue;
    bool merged = false;
    for (auto& [c, x] : row)
      if (c == k) {
        x += v;
        merged = true;
      }
    if (!merged) row.emplace_back(static_cast<std::uint32_t>(k), v);
  }
  return row;
}

std::string gamma_string(const std::vector<GQ>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + g[i].to_string();
  return s + ")";
}

void normalize_first(Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      GQ inv = x.inverse();
      for (auto& y : v) y *= inv;
      return;
    }
}

}  // namespace

std::vector<AbelianCharacter> abelian_characters(const QlDatum& d) {
  const auto& G = d.group;
  AbelianCharacter eps{"eps", GroupFunction(G.order(), GQ(1))};
  AbelianCharacter sg{"sg", GroupFunction(G.order(), GQ(1))};
  bool odd = false;
  for (std::size_t t = 0; t < G.order(); ++t)
    if (perm_sign(G.element(t)) < 0) {
      sg.values[t] = GQ(-1);
      odd = true;
    }
  if (!odd) return {eps};
  return {eps, sg};
}

bool CharacterExtension::gamma_zero() const {
  for (const auto& g : gamma)
    if (!g.is_zero()) return false;
  return true;
}

std::string CharacterExtension::label() const {
  if (gamma_zero()) return "S_" + name;
  return "S_" + name + "^" + gamma_string(gamma);
}

ExtendReport extend_character_report(const QlDatum& d, const AbelianCharacter& rho) {
  ExtendReport rep;
  const auto& G = d.group;
  auto rp = d.rprime();

  for (auto c : rp) {
    const auto& C = d.classes[c];
    if (C.size % 2 != 0) continue;
    GQ lhs = d.lambda[c] * (GQ(1) - rho.values[d.class_group_element(c)]);
    if (!lhs.is_zero()) rep.even_classes_failed.push_back(d.class_label(c));
  }
  if (!rep.even_classes_failed.empty()) return rep;

  // gamma_j = chi_j(t) gamma_{t.j}
  LinearSystem lin(d.nx());
  for (std::size_t t = 0; t < G.order(); ++t)
    for (std::size_t j = 0; j < d.nx(); ++j) lin.add(sparse({{j, GQ(1)}, {d.act[t][j], -d.chi[j][t]}}));
  auto K = lin.kernel_basis();
  rep.linear_dim = K.size();
  if (K.size() > 1) throw Error("character extensions form a family of dimension > 1; not supported");

  // gamma_i gamma_j = lambda(1 - rho(g_i g_j)) on odd classes, gamma = c v
  struct Eq {
    GQ coef, rhs;
  };
  std::vector<Eq> eqs;
  for (auto c : rp) {
    const auto& C = d.classes[c];
    if (C.size % 2 == 0) continue;
    bool used = false;
    for (std::size_t pos = 0; pos < C.pairs.size(); ++pos) {
      auto [i, j] = C.pairs[pos];
      GQ rhs = d.lambda_at(c, pos) * (GQ(1) - rho.values[G.mul(d.g[i], d.g[j])]);
      GQ coef = K.empty() ? GQ(0) : K[0][i] * K[0][j];
      if (!rhs.is_zero() || !coef.is_zero()) used = true;
      eqs.push_back({coef, rhs});
    }
    if (used) rep.odd_classes_used.push_back(d.class_label(c));
  }

  auto make = [&](const GQ& c) {
    CharacterExtension e{rho.name, rho.values, std::vector<GQ>(d.nx())};
    if (!K.empty())
      for (std::size_t i = 0; i < d.nx(); ++i) e.gamma[i] = c * K[0][i];
    return e;
  };

  // c^2 coef = rhs for every equation
  std::optional<GQ> c2;
  for (const auto& e : eqs) {
    if (e.coef.is_zero()) {
      if (!e.rhs.is_zero()) return rep;
      continue;
    }
    GQ val = e.rhs / e.coef;
    if (c2 && !(*c2 == val)) return rep;
    c2 = val;
  }
  if (K.empty() || (c2 && c2->is_zero())) {
    rep.extensions.push_back(make(GQ(0)));
    return rep;
  }
  if (!c2) throw Error("character extensions form a one-parameter family; not supported");
  GQ root;
  if (!c2->exact_sqrt(root)) return rep;  // solutions leave Q(i)
  rep.extensions.push_back(make(root));
  rep.extensions.push_back(make(-root));
  return rep;
}

std::vector<CharacterExtension> extend_character(const QlDatum& d, const AbelianCharacter& rho) {
  return extend_character_report(d, rho).extensions;
}

std::vector<CharacterExtension> one_dim_census(const QlDatum& d) {
  std::vector<CharacterExtension> out;
  for (const auto& rho : abelian_characters(d))
    for (auto& e : extend_character(d, rho)) out.push_back(std::move(e));
  return out;
}

HModule build_S(std::shared_ptr<const QlDatum> d, const CharacterExtension& e) {
  std::vector<ExactMatrix> h, a;
  for (auto t : d->group.generators()) h.push_back(ExactMatrix{{e.rho[t]}});
  for (const auto& g : e.gamma) a.push_back(ExactMatrix{{g}});
  HModule m(d, h, a, e.label());
  auto rep = verify_module(m);
  if (!rep.ok()) throw ValidationError(e.label() + " is not a module: " + rep.failures.front());
  return m;
}

ExtSpace1 ext_space_1dim(const QlDatum& d, const CharacterExtension& src, const CharacterExtension& tgt) {
  const auto& G = d.group;
  const auto& rho = src.rho;
  const auto& mu = tgt.rho;
  const auto& gamma = src.gamma;
  const auto& delta = tgt.gamma;
  std::size_t n = d.nx();
  LinearSystem sys(n);
  // f_i mu(t) = chi_i(t) f_{t.i} rho(t)
  for (std::size_t t = 0; t < G.order(); ++t)
    for (std::size_t i = 0; i < n; ++i) sys.add(sparse({{i, mu[t]}, {d.act[t][i], -(d.chi[i][t] * rho[t])}}));
  // sum_h eta_h (f_{i_h} delta_{i_{h+1}} + f_{i_{h+1}} gamma_{i_h}) = 0
  for (auto c : d.rprime()) {
    const auto& C = d.classes[c];
    Vec row(n);
    for (std::size_t h = 0; h < C.size; ++h) {
      auto [hi, lo] = C.pairs[h];
      row[lo] += C.eta[h] * delta[hi];
      row[hi] += C.eta[h] * gamma[lo];
    }
    sys.add(row);
  }
  auto V = sys.kernel_basis();

  // coboundaries only when rho = mu: f_i = T (delta_i - gamma_i)
  LinearSystem cob(n);
  if (rho == mu) {
    Vec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = delta[i] - gamma[i];
    cob.add(b);
  }
  ExtSpace1 out;
  for (auto& v : V) {
    if (!cob.add(v)) continue;
    normalize_first(v);
    out.basis.push_back({v, src, tgt});
  }
  out.dim = out.basis.size();
  return out;
}

HModule build_M(std::shared_ptr<const QlDatum> d, const ExtensionSolution& sol) {
  std::vector<ExactMatrix> h, a;
  for (auto t : d->group.generators()) h.push_back(ExactMatrix{{sol.target.rho[t], GQ(0)}, {GQ(0), sol.source.rho[t]}});
  for (std::size_t i = 0; i < d->nx(); ++i)
    a.push_back(ExactMatrix{{sol.target.gamma[i], sol.f[i]}, {GQ(0), sol.source.gamma[i]}});
  HModule m(d, h, a, "M_{" + sol.source.name + "," + sol.target.name + "}");
  auto rep = verify_module(m);
  if (!rep.ok()) throw ValidationError(m.name() + " is not a module: " + rep.failures.front());
  return m;
}

WordLength word_length(const QlDatum& d) {
  const auto& G = d.group;
  constexpr auto unset = static_cast<std::size_t>(-1);
  WordLength w{std::vector<std::size_t>(G.order(), unset), std::vector<GQ>(G.order())};
  w.ell[G.identity()] = 0;
  std::deque<std::size_t> queue{G.identity()};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto gi : d.g) {
      auto y = G.mul(x, gi);
      if (w.ell[y] != unset) continue;
      w.ell[y] = w.ell[x] + 1;
      queue.push_back(y);
    }
  }
  for (auto l : w.ell)
    if (l == unset) throw ValidationError("G is not generated by the g_i");
  GQ base = d.nx() ? d.chi[0][d.g[0]] : GQ(1);
  for (std::size_t t = 0; t < G.order(); ++t) {
    GQ p(1);
    for (std::size_t k = 0; k < w.ell[t]; ++k) p *= base;
    w.psi[t] = p;
  }
  return w;
}

bool proportionality_holds(const QlDatum& d, const ExtensionSolution& sol) {
  std::size_t n = d.nx();
  std::size_t j = n;
  for (std::size_t k = 0; k < n; ++k)
    if (!sol.f[k].is_zero()) {
      j = k;
      break;
    }
  if (j == n) return true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t t = 0;
    while (t < d.group.order() && d.act[t][j] != i) ++t;
    if (t == d.group.order()) return false;  // rack not indecomposable
    GQ want = sol.f[j] * d.chi[j][t].inverse() * sol.target.rho[t] / sol.source.rho[t];
    if (!(sol.f[i] == want)) return false;
  }
  return true;
}

}  // namespace hopfrep
