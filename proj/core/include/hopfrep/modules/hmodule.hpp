#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfrep/exact/matrix.hpp"
#include "hopfrep/rackql/ql_datum.hpp"

namespace hopfrep {

/// rho(t) for every group element, from the matrices of the generators.
/// gens[k] is the matrix of group.generators()[k].
std::vector<ExactMatrix> group_matrices(const PermGroup& g, const std::vector<ExactMatrix>& gens);

/// A module over H(Q), stored as matrices of the group generators and of all a_i.
/// Column j of a matrix is the image of basis vector j.
class HModule {
 public:
  HModule() = default;
  HModule(std::shared_ptr<const QlDatum> d, std::vector<ExactMatrix> h_gens, std::vector<ExactMatrix> a,
          std::string name = {});

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const QlDatum& datum() const { return *datum_; }
  [[nodiscard]] const std::shared_ptr<const QlDatum>& datum_ptr() const { return datum_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  [[nodiscard]] const std::vector<ExactMatrix>& h_gens() const { return h_gens_; }
  [[nodiscard]] const ExactMatrix& h(std::size_t t) const { return group_[t]; }
  [[nodiscard]] const std::vector<ExactMatrix>& group() const { return group_; }
  [[nodiscard]] const ExactMatrix& a(std::size_t i) const { return a_[i]; }
  [[nodiscard]] const std::vector<ExactMatrix>& a_all() const { return a_; }
  /// group generator matrices followed by the a_i
  [[nodiscard]] std::vector<ExactMatrix> generators() const;

  /// Same module in the basis given by the columns of p.
  [[nodiscard]] HModule change_basis(const ExactMatrix& p) const;

  [[nodiscard]] nlohmann::json to_json() const;

 private:
  std::shared_ptr<const QlDatum> datum_;
  std::size_t dim_ = 0;
  std::vector<ExactMatrix> h_gens_;
  std::vector<ExactMatrix> group_;
  std::vector<ExactMatrix> a_;
  std::string name_;
};

HModule module_from_json(std::shared_ptr<const QlDatum> d, const nlohmann::json& j);

struct ModuleReport {
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Evaluate every defining relation on the matrices.
ModuleReport verify_module(const HModule& m);

/// a_{t.j} = chi_j(t)^-1 H_t a_j H_t^-1 for all i reachable from j; throws if
/// some rack element is not in the orbit of j.
std::vector<ExactMatrix> a_from_one(const QlDatum& d, const std::vector<ExactMatrix>& group, std::size_t j,
                                    const ExactMatrix& aj);

}  // namespace hopfrep
