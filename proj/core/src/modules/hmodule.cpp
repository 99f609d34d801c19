#include "hopfrep/modules/hmodule.hpp"

#include <deque>

#include "hopfrep/algebra/relations.hpp"
#include "hopfrep/exact/errors.hpp"

namespace hopfrep {

std::vector<ExactMatrix> group_matrices(const PermGroup& g, const std::vector<ExactMatrix>& gens) {
  if (gens.size() != g.generators().size()) throw DimensionMismatch("wrong number of group generator matrices");
  std::size_t n = gens.empty() ? 0 : gens[0].rows();
  std::vector<ExactMatrix> out(g.order());
  std::vector<char> seen(g.order(), 0);
  out[0] = ExactMatrix::identity(n);
  seen[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto y = g.mul(g.generators()[k], x);
      if (seen[y]) continue;
      seen[y] = 1;
      out[y] = gens[k] * out[x];
      queue.push_back(y);
    }
  }
  return out;
}

HModule::HModule(std::shared_ptr<const QlDatum> d, std::vector<ExactMatrix> h_gens, std::vector<ExactMatrix> a,
                 std::string name)
    : datum_(std::move(d)), h_gens_(std::move(h_gens)), a_(std::move(a)), name_(std::move(name)) {
  if (h_gens_.size() != datum_->group.generators().size())
    throw DimensionMismatch("module needs one matrix per group generator");
  if (a_.size() != datum_->nx()) throw DimensionMismatch("module needs one matrix per rack element");
  dim_ = h_gens_.empty() ? 0 : h_gens_[0].rows();
  for (const auto& m : h_gens_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("group generator matrix has wrong size");
  for (const auto& m : a_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("a_i matrix has wrong size");
  group_ = group_matrices(datum_->group, h_gens_);
}

std::vector<ExactMatrix> HModule::generators() const {
  std::vector<ExactMatrix> out = h_gens_;
  out.insert(out.end(), a_.begin(), a_.end());
  return out;
}

HModule HModule::change_basis(const ExactMatrix& p) const {
  ExactMatrix pinv = p.inverse();
  std::vector<ExactMatrix> h, a;
  for (const auto& m : h_gens_) h.push_back(pinv * m * p);
  for (const auto& m : a_) a.push_back(pinv * m * p);
  return {datum_, h, a, name_};
}

namespace {

nlohmann::json matrix_json(const ExactMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

ExactMatrix matrix_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("matrix must have " + std::to_string(n) + " rows");
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix row has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = j[r][c];
      m(r, c) = e.is_string() ? GQ::parse(e.get<std::string>()) : GQ(e.get<long long>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json HModule::to_json() const {
  nlohmann::json j;
  if (!name_.empty()) j["name"] = name_;
  j["dim"] = dim_;
  j["H"] = nlohmann::json::object();
  for (std::size_t k = 0; k < h_gens_.size(); ++k)
    j["H"][perm_cycle_string(datum_->group.element(datum_->group.generators()[k]))] = matrix_json(h_gens_[k]);
  j["a"] = nlohmann::json::object();
  for (std::size_t i = 0; i < a_.size(); ++i) j["a"][datum_->rack.labels[i]] = matrix_json(a_[i]);
  return j;
}

HModule module_from_json(std::shared_ptr<const QlDatum> d, const nlohmann::json& j) {
  try {
    auto n = j.at("dim").get<std::size_t>();
    std::vector<ExactMatrix> h, a;
    for (auto t : d->group.generators()) h.push_back(matrix_from_json(j.at("H").at(perm_cycle_string(d->group.element(t))), n));
    for (const auto& l : d->rack.labels) a.push_back(matrix_from_json(j.at("a").at(l), n));
    return {d, h, a, j.value("name", std::string{})};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad module json: ") + e.what());
  }
}

ModuleReport verify_module(const HModule& m) {
  ModuleReport rep;
  const QlDatum& d = m.datum();
  const auto& G = d.group;
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t k = 0; k < G.generators().size(); ++k)
      if (m.h(G.mul(G.generators()[k], x)) != m.h_gens()[k] * m.h(x)) {
        rep.failures.push_back("group relations fail at H" + perm_cycle_string(G.element(G.generators()[k])) + " H" +
                               perm_cycle_string(G.element(x)));
        k = G.generators().size();
        x = G.order();
      }
  auto rs = relation_set(d);
  for (const auto& sw : rs.swaps) {
    const auto& ht = m.h(sw.t);
    if (ht * m.a(sw.l) != (m.a(sw.target) * ht).scaled(sw.coef))
      rep.failures.push_back("H" + perm_cycle_string(G.element(sw.t)) + " a" + d.rack.labels[sw.l] + " = (" +
                             sw.coef.to_string() + ") a" + d.rack.labels[sw.target] + " H" +
                             perm_cycle_string(G.element(sw.t)) + " fails");
  }
  std::size_t n = m.dim();
  for (const auto& q : rs.quadratics) {
    ExactMatrix acc(n, n);
    for (const auto& [eta, i, j] : q.terms) acc += (m.a(i) * m.a(j)).scaled(eta);
    acc += (ExactMatrix::identity(n) - m.h(q.group_element)).scaled(-q.lambda);
    if (!acc.is_zero()) rep.failures.push_back("quadratic relation of class " + d.class_label(q.cls) + " fails");
  }
  return rep;
}

std::vector<ExactMatrix> a_from_one(const QlDatum& d, const std::vector<ExactMatrix>& group, std::size_t j,
                                    const ExactMatrix& aj) {
  std::vector<ExactMatrix> out(d.nx());
  std::vector<char> seen(d.nx(), 0);
  for (std::size_t t = 0; t < d.group.order(); ++t) {
    auto i = d.act[t][j];
    if (seen[i]) continue;
    seen[i] = 1;
    out[i] = (group[t] * aj * group[d.group.inv(t)]).scaled(d.chi[j][t].inverse());
  }
  for (std::size_t i = 0; i < d.nx(); ++i)
    if (!seen[i]) throw ValidationError("rack element " + d.rack.labels[i] + " is not in the orbit of " + d.rack.labels[j]);
  return out;
}

}  // namespace hopfrep
