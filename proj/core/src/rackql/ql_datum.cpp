#include "hopfrep/rackql/ql_datum.hpp"

#include <deque>
#include <map>

#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

std::size_t QlDatum::class_group_element(std::size_t c) const {
  const auto& [a, b] = classes[c].pairs[0];
  return group.mul(g[a], g[b]);
}

GQ QlDatum::lambda_at(std::size_t c, std::size_t pos) const {
  return lambda[c] * lambda_start_factor(classes[c], q, 0, pos);
}

std::string QlDatum::class_label(std::size_t c) const {
  const auto& [a, b] = classes[c].pairs[0];
  return "[" + rack.labels[a] + "," + rack.labels[b] + "]";
}

std::vector<std::size_t> QlDatum::rprime() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].in_Rprime) out.push_back(c);
  return out;
}

ValidationReport validate(const QlDatum& d) {
  ValidationReport rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  const auto& X = d.rack;
  std::size_t n = X.size(), order = d.group.order();
  for (auto& s : rack_failures(X)) fail("rack: " + s);
  for (auto& s : cocycle_failures(X, d.q)) fail("cocycle: " + s);
  if (!rep.ok()) return rep;
  if (d.g.size() != n || d.chi.size() != n || d.act.size() != order) {
    fail("datum tables have inconsistent sizes");
    return rep;
  }
  for (std::size_t t = 0; t < order; ++t)
    for (std::size_t s = 0; s < order; ++s)
      for (std::size_t i = 0; i < n; ++i)
        if (d.act[t][d.act[s][i]] != d.act[d.group.mul(t, s)][i]) {
          fail("action is not a group action at (" + perm_cycle_string(d.group.element(t)) + "," +
               perm_cycle_string(d.group.element(s)) + "," + X.labels[i] + ")");
          goto action_done;
        }
action_done:
  for (std::size_t t = 0; t < order; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t conj = d.group.mul(d.group.mul(t, d.g[i]), d.group.inv(t));
      if (d.g[d.act[t][i]] != conj) {
        fail("g is not equivariant: g_{t.i} != t g_i t^-1 at t=" + perm_cycle_string(d.group.element(t)) +
             ", i=" + X.labels[i]);
        goto equiv_done;
      }
    }
equiv_done:
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.act[d.g[i]][j] != X.act(i, j))
        fail("g_i . j != i |> j at (" + X.labels[i] + "," + X.labels[j] + ")");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.chi[i].size() != order) {
      fail("chi_" + X.labels[i] + " has wrong length");
      continue;
    }
    bool law = true;
    for (std::size_t h = 0; h < order && law; ++h)
      for (std::size_t t = 0; t < order && law; ++t)
        if (!(d.chi[i][d.group.mul(h, t)] == d.chi[i][t] * d.chi[d.act[t][i]][h])) {
          fail("chi_" + X.labels[i] + "(ht) != chi_i(t) chi_{t.i}(h) at h=" + perm_cycle_string(d.group.element(h)) +
               ", t=" + perm_cycle_string(d.group.element(t)));
          law = false;
        }
    for (std::size_t j = 0; j < n; ++j)
      if (!(d.chi[i][d.g[j]] == d.q[j][i]))
        fail("chi_" + X.labels[i] + "(g_" + X.labels[j] + ") = " + d.chi[i][d.g[j]].to_string() + " != q = " +
             d.q[j][i].to_string());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d.g[i] == d.group.mul(d.g[j], d.g[k]))
          fail("g_i = g_j g_k at (" + X.labels[i] + "," + X.labels[j] + "," + X.labels[k] + ")");
  if (d.lambda.size() != d.classes.size()) {
    fail("lambda table has wrong length");
    return rep;
  }
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const auto& C = d.classes[c];
    if (d.lambda[c].is_zero()) continue;
    if (!C.in_Rprime) {
      fail("lambda nonzero on class " + d.class_label(c) + " outside R'");
      continue;
    }
    if (d.class_group_element(c) == d.group.identity())
      fail("(2a) violated: lambda_" + d.class_label(c) + " = " + d.lambda[c].to_string() + " but g_i g_j = 1");
  }
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const auto& C = d.classes[c];
    if (!C.in_Rprime) continue;
    auto [i2, i1] = C.pairs[0];
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t a = X.act(k, i2), b = X.act(k, i1);
      std::size_t dcls = class_of(d.classes, a, b);
      GQ rhs = d.q[k][i2] * d.q[k][i1] * d.lambda_at(dcls, d.classes[dcls].position_of(a, b));
      if (!(d.lambda[c] == rhs))
        fail("lambda compatibility violated: lambda_" + d.class_label(c) + " = " + d.lambda[c].to_string() + " but q q lambda_{" +
             X.labels[k] + "|>C} = " + rhs.to_string());
    }
  }
  return rep;
}

Builtin parse_builtin(const std::string& name) {
  if (name == "Q3_minus") return Builtin::Q3_minus;
  if (name == "Qn_minus") return Builtin::Qn_minus;
  if (name == "Qn_chi") return Builtin::Qn_chi;
  throw ParseError("unknown builtin datum '" + name + "' (expected Q3_minus, Qn_minus or Qn_chi)");
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Q3_minus: return "Q3_minus";
    case Builtin::Qn_minus: return "Qn_minus";
    case Builtin::Qn_chi: return "Qn_chi";
  }
  return "?";
}

GQ milinski_schneider_chi(const Perm& sigma, const Perm& tau) {
  std::size_t i = tau.size(), j = tau.size();
  for (std::size_t x = 0; x < tau.size(); ++x)
    if (tau[x] != x) {
      if (i == tau.size()) i = x;
      else j = x;
    }
  if (j == tau.size()) throw ValidationError("chi: second argument is not a transposition");
  return GQ(sigma[i] < sigma[j] ? 1 : -1);
}

void propagate_lambdas(QlDatum& d, const std::vector<std::pair<std::size_t, GQ>>& seeds) {
  std::vector<bool> set(d.classes.size(), false);
  std::deque<std::size_t> queue;
  for (const auto& [c, v] : seeds) {
    d.lambda[c] = v;
    set[c] = true;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    auto [i2, i1] = d.classes[c].pairs[0];
    for (std::size_t k = 0; k < d.nx(); ++k) {
      std::size_t a = d.rack.act(k, i2), b = d.rack.act(k, i1);
      std::size_t t = class_of(d.classes, a, b);
      if (set[t]) continue;
      // lambda_{k|>C} read at (a,b), then moved back to the canonical start
      GQ at_ab = d.lambda[c] / (d.q[k][i2] * d.q[k][i1]);
      std::size_t pos = d.classes[t].position_of(a, b);
      d.lambda[t] = at_ab * lambda_start_factor(d.classes[t], d.q, pos, 0);
      set[t] = true;
      queue.push_back(t);
    }
  }
}

namespace {

QlDatum symmetric_skeleton(std::size_t n) {
  QlDatum d;
  d.group = PermGroup::symmetric(n);
  d.rack = transposition_rack(n);
  std::vector<Perm> elems;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) elems.push_back(transposition(n, a, b));
  for (const auto& p : elems) d.g.push_back(d.group.index_of(p));
  std::map<std::size_t, std::size_t> x_of_g;
  for (std::size_t i = 0; i < elems.size(); ++i) x_of_g[d.g[i]] = i;
  d.act.assign(d.group.order(), std::vector<std::size_t>(elems.size()));
  for (std::size_t t = 0; t < d.group.order(); ++t)
    for (std::size_t i = 0; i < elems.size(); ++i)
      d.act[t][i] = x_of_g.at(d.group.mul(d.group.mul(t, d.g[i]), d.group.inv(t)));
  return d;
}

}  // namespace

QlDatum build_builtin(Builtin family, std::size_t n, const std::vector<GQ>& params) {
  if (family == Builtin::Q3_minus && n != 3) throw ValidationError("Q3_minus requires n = 3");
  if (family != Builtin::Q3_minus && n < 4) throw ValidationError(builtin_name(family) + " requires n >= 4");
  if (n > 6) throw ValidationError("builtin data support n <= 6");
  std::size_t want = family == Builtin::Qn_minus ? 2 : 1;
  if (params.size() != want)
    throw ValidationError(builtin_name(family) + " takes " + std::to_string(want) + " parameter(s)");
  QlDatum d = symmetric_skeleton(n);
  std::size_t m = d.rack.size();
  if (family == Builtin::Qn_chi) {
    d.q.assign(m, std::vector<GQ>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        d.q[i][j] = milinski_schneider_chi(d.group.element(d.g[i]), d.group.element(d.g[j]));
    d.chi.assign(m, GroupFunction(d.group.order()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < d.group.order(); ++t)
        d.chi[i][t] = milinski_schneider_chi(d.group.element(t), d.group.element(d.g[i]));
  } else {
    d.q = constant_cocycle(m, GQ(-1));
    d.chi.assign(m, GroupFunction(d.group.order()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < d.group.order(); ++t) d.chi[i][t] = GQ(perm_sign(d.group.element(t)));
  }
  d.classes = enumerate_classes(d.rack, d.q);
  d.lambda.assign(d.classes.size(), GQ());
  std::string params_text;
  for (const auto& p : params) params_text += (params_text.empty() ? "" : ",") + p.to_string();
  switch (family) {
    case Builtin::Q3_minus:
      d.name = "Q3_minus[" + params_text + "]";
      for (std::size_t c = 0; c < d.classes.size(); ++c)
        if (d.classes[c].size == 3) d.lambda[c] = params[0];
      break;
    case Builtin::Qn_minus:
      d.name = "Qn_minus[n=" + std::to_string(n) + ";" + params_text + "]";
      for (std::size_t c = 0; c < d.classes.size(); ++c) {
        if (d.classes[c].size == 2) d.lambda[c] = params[0];
        if (d.classes[c].size == 3) d.lambda[c] = params[1];
      }
      break;
    case Builtin::Qn_chi: {
      d.name = "Qn_chi[n=" + std::to_string(n) + ";" + params_text + "]";
      // one seed per orbit of size-3 classes, the rest follows from lambda compatibility
      std::vector<std::pair<std::size_t, GQ>> seeds;
      std::vector<bool> reached(d.classes.size(), false);
      for (std::size_t c = 0; c < d.classes.size(); ++c) {
        if (d.classes[c].size != 3 || reached[c]) continue;
        seeds.emplace_back(c, params[0]);
        std::deque<std::size_t> qu{c};
        reached[c] = true;
        while (!qu.empty()) {
          auto cur = qu.front();
          qu.pop_front();
          auto [i2, i1] = d.classes[cur].pairs[0];
          for (std::size_t k = 0; k < m; ++k) {
            auto t = class_of(d.classes, d.rack.act(k, i2), d.rack.act(k, i1));
            if (!reached[t]) {
              reached[t] = true;
              qu.push_back(t);
            }
          }
        }
      }
      propagate_lambdas(d, seeds);
      break;
    }
  }
  auto rep = validate(d);
  if (!rep.ok()) throw ValidationError("builtin datum " + d.name + " failed validation: " + rep.failures.front());
  return d;
}

nlohmann::json datum_to_json(const QlDatum& d) {
  using nlohmann::json;
  json j;
  j["name"] = d.name;
  j["degree"] = d.group.degree();
  auto one_line = [](const Perm& p) {
    json a = json::array();
    for (auto x : p) a.push_back(x + 1);
    return a;
  };
  j["group_generators"] = json::array();
  for (auto gi : d.group.generators()) j["group_generators"].push_back(one_line(d.group.element(gi)));
  j["rack"]["elements"] = d.rack.labels;
  j["rack"]["table"] = d.rack.op;
  json q = json::array();
  for (const auto& row : d.q) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    q.push_back(r);
  }
  j["cocycle"] = q;
  j["g_map"] = json::array();
  for (auto gi : d.g) j["g_map"].push_back(one_line(d.group.element(gi)));
  for (std::size_t i = 0; i < d.nx(); ++i) {
    json vals = json::array();
    for (auto gi : d.group.generators()) vals.push_back(d.chi[i][gi].to_string());
    j["chi"][d.rack.labels[i]] = vals;
  }
  j["lambdas"] = json::array();
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (!d.classes[c].in_Rprime) continue;
    const auto& [a, b] = d.classes[c].pairs[0];
    j["lambdas"].push_back({{"pair", {d.rack.labels[a], d.rack.labels[b]}}, {"value", d.lambda[c].to_string()}});
  }
  return j;
}

QlDatum datum_from_json(const nlohmann::json& j) {
  try {
    QlDatum d;
    d.name = j.value("name", std::string("custom"));
    std::size_t n = j.at("degree").get<std::size_t>();
    auto perm_of = [&](const nlohmann::json& a) {
      Perm p;
      for (const auto& x : a) {
        int v = x.get<int>();
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError("permutation entry out of range");
        p.push_back(static_cast<std::uint8_t>(v - 1));
      }
      if (p.size() != n) throw ParseError("permutation has wrong length");
      return p;
    };
    std::vector<Perm> gens;
    for (const auto& g : j.at("group_generators")) gens.push_back(perm_of(g));
    d.group = PermGroup(n, gens);
    d.rack.labels = j.at("rack").at("elements").get<std::vector<std::string>>();
    d.rack.op = j.at("rack").at("table").get<std::vector<std::vector<std::size_t>>>();
    std::size_t m = d.rack.size();
    if (d.rack.op.size() != m) throw ParseError("rack table has wrong size");
    for (const auto& row : d.rack.op)
      if (row.size() != m) throw ParseError("rack table has wrong size");
    d.q.assign(m, std::vector<GQ>(m));
    const auto& cq = j.at("cocycle");
    if (cq.size() != m) throw ParseError("cocycle table has wrong size");
    for (std::size_t a = 0; a < m; ++a) {
      if (cq[a].size() != m) throw ParseError("cocycle table has wrong size");
      for (std::size_t b = 0; b < m; ++b) d.q[a][b] = GQ::parse(cq[a][b].get<std::string>());
    }
    const auto& gm = j.at("g_map");
    if (gm.size() != m) throw ParseError("g_map has wrong length");
    for (const auto& p : gm) d.g.push_back(d.group.index_of(perm_of(p)));
    // action by conjugation through g; requires g injective
    std::map<std::size_t, std::size_t> x_of_g;
    for (std::size_t i = 0; i < m; ++i)
      if (!x_of_g.emplace(d.g[i], i).second) throw ParseError("g_map must be injective to derive the action");
    d.act.assign(d.group.order(), std::vector<std::size_t>(m));
    for (std::size_t t = 0; t < d.group.order(); ++t)
      for (std::size_t i = 0; i < m; ++i) {
        auto it = x_of_g.find(d.group.mul(d.group.mul(t, d.g[i]), d.group.inv(t)));
        if (it == x_of_g.end()) throw ParseError("image of g is not closed under conjugation");
        d.act[t][i] = it->second;
      }
    // chi from generator values: chi_i(t s) = chi_i(s) chi_{s.i}(t), elements in BFS order
    const auto& gens_idx = d.group.generators();
    std::vector<std::vector<GQ>> on_gen(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& vals = j.at("chi").at(d.rack.labels[i]);
      if (vals.size() != gens_idx.size()) throw ParseError("chi needs one value per group generator");
      for (const auto& v : vals) on_gen[i].push_back(GQ::parse(v.get<std::string>()));
    }
    d.chi.assign(m, GroupFunction(d.group.order()));
    for (std::size_t i = 0; i < m; ++i) d.chi[i][0] = GQ(1);
    const auto& words = d.group.words();
    for (std::size_t e = 1; e < d.group.order(); ++e) {
      std::vector<std::size_t> prefix(words[e].begin(), words[e].end() - 1);
      std::size_t k = words[e].back();
      std::size_t tq = 0;
      for (auto w : prefix) tq = d.group.mul(tq, gens_idx[w]);
      std::size_t s = gens_idx[k];
      for (std::size_t i = 0; i < m; ++i) d.chi[i][e] = on_gen[i][k] * d.chi[d.act[s][i]][tq];
    }
    d.classes = enumerate_classes(d.rack, d.q);
    d.lambda.assign(d.classes.size(), GQ());
    if (j.contains("lambdas")) {
      for (const auto& entry : j.at("lambdas")) {
        auto pair = entry.at("pair").get<std::vector<std::string>>();
        if (pair.size() != 2) throw ParseError("lambda pair must have two entries");
        std::size_t a = d.rack.index_of(pair[0]), b = d.rack.index_of(pair[1]);
        std::size_t c = class_of(d.classes, a, b);
        GQ v = GQ::parse(entry.at("value").get<std::string>());
        // the value is read at (a,b); store it at the canonical start
        d.lambda[c] = v * lambda_start_factor(d.classes[c], d.q, d.classes[c].position_of(a, b), 0);
      }
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed datum JSON: ") + e.what());
  }
}

}  // namespace hopfrep
