#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfrep/rackql/group.hpp"
#include "hopfrep/rackql/rack.hpp"

namespace hopfrep {

/// A character (or any scalar function) on G, indexed by group element.
using GroupFunction = std::vector<GQ>;

struct QlDatum {
  std::string name;
  PermGroup group;
  Rack rack;
  Cocycle2 q;
  std::vector<std::size_t> g;                  // X -> G
  std::vector<std::vector<std::size_t>> act;   // act[t][i] = t . i
  std::vector<GroupFunction> chi;              // chi[i][t]
  std::vector<ClassData> classes;
  std::vector<GQ> lambda;                      // per class, read from pairs[0]

  [[nodiscard]] std::size_t nx() const { return rack.size(); }
  /// g_{i_2} g_{i_1} for the class (independent of the representative)
  [[nodiscard]] std::size_t class_group_element(std::size_t c) const;
  /// lambda_C read from the pair at position pos of the class cycle
  [[nodiscard]] GQ lambda_at(std::size_t c, std::size_t pos) const;
  [[nodiscard]] std::string class_label(std::size_t c) const;
  /// Indices of classes in R'.
  [[nodiscard]] std::vector<std::size_t> rprime() const;
};

struct ValidationReport {
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

ValidationReport validate(const QlDatum& d);

enum class Builtin { Q3_minus, Qn_minus, Qn_chi };

Builtin parse_builtin(const std::string& name);
std::string builtin_name(Builtin b);

/// params: Q3_minus {lambda}; Qn_minus {Lambda, Gamma}; Qn_chi {lambda}.
QlDatum build_builtin(Builtin family, std::size_t n, const std::vector<GQ>& params);

/// Assign lambda to one class per orbit of X acting on classes and propagate
/// through the compatibility rule; `seed` gives the value for each orbit
/// representative (class index) or nothing.
void propagate_lambdas(QlDatum& d, const std::vector<std::pair<std::size_t, GQ>>& seeds);

/// The chi family sigma -> chi(sigma, tau), tau = (ij) with i < j.
GQ milinski_schneider_chi(const Perm& sigma, const Perm& tau);

nlohmann::json datum_to_json(const QlDatum& d);
/// Throws ParseError/ValidationError on malformed input. Does not run validate().
QlDatum datum_from_json(const nlohmann::json& j);

}  // namespace hopfrep
