#include "hopfrep/extquiver/extquiver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hopfrep/algebra/relations.hpp"
#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/linear_system.hpp"
#include "hopfrep/modules/operations.hpp"

namespace hopfrep {

Ext1 ext1(const HModule& m, const HModule& n) {
  if (m.datum_ptr() != n.datum_ptr() && m.datum().name != n.datum().name)
    throw DimensionMismatch("ext1 needs modules over the same datum");
  const QlDatum& d = m.datum();
  std::size_t dm = m.dim(), dn = n.dim(), nx = d.nx();
  std::size_t block = dn * dm;
  std::size_t nvars = nx * block;
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) { return static_cast<std::uint32_t>(i * block + r * dm + c); };
  LinearSystem sys(nvars);

  auto rs = relation_set(d);
  // rho_n(t) F_l - coef F_target rho_m(t) = 0
  for (const auto& sw : rs.swaps) {
    const auto& hn = n.h(sw.t);
    const auto& hm = m.h(sw.t);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Vec row(nvars);
        for (std::size_t k = 0; k < dn; ++k) row[var(sw.l, k, c)] += hn(r, k);
        for (std::size_t k = 0; k < dm; ++k) row[var(sw.target, r, k)] -= sw.coef * hm(k, c);
        sys.add(row);
      }
  }
  // off-diagonal block of sum eta a_a a_b: A^n_a F_b + F_a A^m_b
  for (const auto& q : rs.quadratics)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Vec row(nvars);
        for (const auto& [eta, a, b] : q.terms) {
          for (std::size_t k = 0; k < dn; ++k) row[var(b, k, c)] += eta * n.a(a)(r, k);
          for (std::size_t k = 0; k < dm; ++k) row[var(a, r, k)] += eta * m.a(b)(k, c);
        }
        sys.add(row);
      }
  auto Z = sys.kernel_basis();

  LinearSystem span(nvars);
  Ext1 out;
  out.cocycle_dim = Z.size();
  for (const auto& T : hom_space_group(m, n)) {
    Vec v(nvars);
    for (std::size_t i = 0; i < nx; ++i) {
      ExactMatrix b = n.a(i) * T - T * m.a(i);
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) v[var(i, r, c)] = b(r, c);
    }
    if (span.add(v)) ++out.coboundary_dim;
  }
  for (const auto& z : Z) {
    if (!span.add(z)) continue;
    std::vector<ExactMatrix> f(nx, ExactMatrix(dn, dm));
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) f[i](r, c) = z[var(i, r, c)];
    out.cocycles.push_back(std::move(f));
  }
  out.dim = out.cocycles.size();
  return out;
}

HModule build_extension(const HModule& m, const HModule& n, const std::vector<ExactMatrix>& f) {
  std::size_t dm = m.dim(), dn = n.dim();
  std::vector<ExactMatrix> h, a;
  for (std::size_t k = 0; k < m.h_gens().size(); ++k) {
    ExactMatrix x(dn + dm, dn + dm);
    x.set_block(0, 0, n.h_gens()[k]);
    x.set_block(dn, dn, m.h_gens()[k]);
    h.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < m.datum().nx(); ++i) {
    ExactMatrix x(dn + dm, dn + dm);
    x.set_block(0, 0, n.a(i));
    x.set_block(0, dn, f[i]);
    x.set_block(dn, dn, m.a(i));
    a.push_back(std::move(x));
  }
  return {m.datum_ptr(), h, a, "E(" + m.name() + "," + n.name() + ")"};
}

std::size_t Quiver::arrow_count() const {
  std::size_t s = 0;
  for (const auto& row : arrows)
    for (auto x : row) s += x;
  return s;
}

Quiver gabriel_quiver(const std::vector<HModule>& simples) {
  Quiver q;
  std::size_t k = simples.size();
  for (const auto& s : simples) q.vertices.push_back(s.name());
  q.arrows.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) q.arrows[i][j] = ext1_dim(simples[i], simples[j]);
  return q;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(size(), 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (auto y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
  Graph out;
  std::vector<std::size_t> pos(g.size(), g.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    pos[vertices[k]] = k;
    out.labels.push_back(g.labels[vertices[k]]);
  }
  for (auto [u, v] : g.edges)
    if (pos[u] < g.size() && pos[v] < g.size()) out.edges.emplace_back(pos[u], pos[v]);
  return out;
}

std::vector<Graph> DiagramGraph::nontrivial_components() const {
  std::vector<Graph> out;
  for (const auto& c : components) {
    auto sub = induced_subgraph(graph, c);
    if (!sub.edges.empty()) out.push_back(std::move(sub));
  }
  return out;
}

DiagramGraph separation_diagram(const Quiver& q) {
  DiagramGraph d;
  std::size_t k = q.vertices.size();
  for (const auto& v : q.vertices) d.graph.labels.push_back(v + "'");
  for (const auto& v : q.vertices) d.graph.labels.push_back(v + "''");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < q.arrows[i][j]; ++r) d.graph.edges.emplace_back(i, k + j);
  d.components = connected_components(d.graph);
  return d;
}

std::string graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::dynkin: return "Dynkin";
    case GraphKind::affine: return "Affine";
    case GraphKind::neither: return "Neither";
  }
  return "?";
}

std::string Classification::to_string() const {
  if (kind == GraphKind::neither) return "Neither";
  return graph_kind_name(kind) + " " + name;
}

namespace {

// 0: positive definite, 1: semidefinite with nullity `nullity`, 2: indefinite
int tits_form_signature(const Graph& g, std::size_t& nullity) {
  std::size_t n = g.size();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) q[i][i] = Rational(2);
  for (auto [u, v] : g.edges) {
    if (u == v) {
      q[u][u] -= Rational(2);
    } else {
      q[u][v] -= Rational(1);
      q[v][u] -= Rational(1);
    }
  }
  nullity = 0;
  for (std::size_t k = 0; k < n; ++k) {
    int s = q[k][k].sign();
    if (s < 0) return 2;
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (!q[k][j].is_zero()) return 2;
      ++nullity;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (q[i][k].is_zero()) continue;
      Rational f = q[i][k] / q[k][k];
      for (std::size_t j = k; j < n; ++j) q[i][j] -= f * q[k][j];
    }
  }
  return nullity == 0 ? 0 : 1;
}

std::string sub(const std::string& letter, std::size_t k) { return letter + "_" + std::to_string(k); }
std::string aff(const std::string& letter, std::size_t k) { return sub(letter, k) + "^(1)"; }

}  // namespace

Classification shape_classify(const Graph& g) {
  std::size_t n = g.size();
  Classification none;
  if (n == 0) return none;
  if (connected_components(g).size() != 1) return none;
  std::size_t loops = 0;
  for (auto [u, v] : g.edges)
    if (u == v) ++loops;
  if (loops > 0) {
    if (n == 1 && g.edges.size() == 1) return {GraphKind::affine, aff("A", 0)};
    return none;
  }
  if (n == 1) return {GraphKind::dynkin, sub("A", 1)};
  // multiplicities
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : g.edges) {
    if (mult[u][v] == 0) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    mult[v][u] = ++mult[u][v];
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (mult[u][v] > 1) {
        if (n == 2 && mult[u][v] == 2 && g.edges.size() == 2) return {GraphKind::affine, aff("A", 1)};
        return none;
      }
  auto deg = g.degrees();
  std::size_t m = g.edges.size();
  if (m == n) {
    for (auto x : deg)
      if (x != 2) return none;
    return {GraphKind::affine, aff("A", n - 1)};
  }
  if (m != n - 1) return none;
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] > 4) return none;
    if (deg[v] >= 3) branch.push_back(v);
  }
  if (branch.empty()) return {GraphKind::dynkin, sub("A", n)};
  // vertices on the arm starting at nb, walking away from b
  auto arm = [&](std::size_t b, std::size_t nb) {
    std::size_t len = 1, prev = b, cur = nb;
    while (deg[cur] == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    return deg[cur] == 1 ? len : 0;  // 0: the arm ends at another branch vertex
  };
  if (branch.size() == 1) {
    std::size_t b = branch[0];
    std::vector<std::size_t> arms;
    for (auto nb : adj[b]) arms.push_back(arm(b, nb));
    std::sort(arms.begin(), arms.end());
    if (deg[b] == 4) {
      if (arms == std::vector<std::size_t>{1, 1, 1, 1}) return {GraphKind::affine, aff("D", 4)};
      return none;
    }
    std::size_t a = arms[0], bb = arms[1], c = arms[2];
    if (a == 1 && bb == 1) return {GraphKind::dynkin, sub("D", n)};
    if (a == 1 && bb == 2 && c >= 2 && c <= 4) return {GraphKind::dynkin, sub("E", n)};
    if (a == 2 && bb == 2 && c == 2) return {GraphKind::affine, aff("E", 6)};
    if (a == 1 && bb == 3 && c == 3) return {GraphKind::affine, aff("E", 7)};
    if (a == 1 && bb == 2 && c == 5) return {GraphKind::affine, aff("E", 8)};
    return none;
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    // each branch vertex carries two leaves; the rest is the path between them
    for (auto b : branch) {
      std::size_t leaves = 0;
      for (auto nb : adj[b])
        if (deg[nb] == 1) ++leaves;
      if (leaves != 2) return none;
    }
    return {GraphKind::affine, aff("D", n - 1)};
  }
  return none;
}

Classification classify_graph(const Graph& g) {
  std::size_t nullity = 0;
  int sig = tits_form_signature(g, nullity);
  Classification shape = shape_classify(g);
  if (sig == 0) return {GraphKind::dynkin, shape.kind == GraphKind::dynkin ? shape.name : "?"};
  if (sig == 1 && nullity == 1 && connected_components(g).size() == 1)
    return {GraphKind::affine, shape.kind == GraphKind::affine ? shape.name : "?"};
  return {GraphKind::neither, ""};
}

RepTypeVerdict rep_type_verdict(const Quiver& q) {
  RepTypeVerdict v;
  auto d = separation_diagram(q);
  bool affine = false, wild = false;
  for (const auto& c : d.nontrivial_components()) {
    auto cl = classify_graph(c);
    if (cl.kind == GraphKind::affine) affine = true;
    if (cl.kind == GraphKind::neither) wild = true;
    v.components.push_back(cl);
  }
  if (wild) {
    v.square_zero_type = RepType::wild;
    v.text = "not of finite representation type; square-zero quotient wild";
  } else if (affine) {
    v.square_zero_type = RepType::tame;
    v.text = "not of finite representation type; square-zero quotient tame";
  } else {
    v.square_zero_type = RepType::finite;
    v.text = "square-zero quotient of finite representation type";
  }
  return v;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "// arrows i -> j: dim Ext^1(S_i, S_j)\n";
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices) os << "  " << quoted(v) << ";\n";
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j)
      for (std::size_t r = 0; r < q.arrows[i][j]; ++r)
        os << "  " << quoted(q.vertices[i]) << " -> " << quoted(q.vertices[j]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string diagram_dot(const DiagramGraph& d) {
  std::ostringstream os;
  os << "// separation diagram: an edge i' -- j'' for each arrow i -> j\n";
  os << "graph separation {\n";
  for (const auto& v : d.graph.labels) os << "  " << quoted(v) << ";\n";
  for (auto [u, v] : d.graph.edges) os << "  " << quoted(d.graph.labels[u]) << " -- " << quoted(d.graph.labels[v]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hopfrep
