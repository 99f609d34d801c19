#pragma once

#include <string>
#include <vector>

#include "hopfrep/algebra/element.hpp"

namespace hopfrep {

/// H_t a_l = coef * a_{target} H_t, t a group generator.
struct SwapRule {
  std::size_t t = 0;  // group element index of the generator
  std::size_t l = 0;
  GQ coef;
  std::size_t target = 0;
};

/// phi_C(a) = lambda_C (1 - H_g), oriented as lhs -> rhs.
struct QuadraticRule {
  std::size_t cls = 0;
  /// (eta_h, i_{h+1}, i_h)
  std::vector<std::tuple<GQ, std::size_t, std::size_t>> terms;
  GQ lambda;  // read at the class's canonical start
  std::size_t group_element = 0;
  Word lhs;
  Element rhs;
  /// phi_C - lambda(1 - H_g) as an element (zero in the algebra)
  Element relation;
};

struct RelationSet {
  std::vector<SwapRule> swaps;
  std::vector<QuadraticRule> quadratics;
  std::vector<std::string> describe(const QlDatum& d) const;
};

RelationSet relation_set(const QlDatum& d);

enum class GeneratorKind { grouplike, skew_primitive };

/// Coproduct and antipode of one generator:
/// H_t: Delta = H_t (x) H_t, S(H_t) = H_{t^-1};
/// a_i: Delta = H_{g_i} (x) a_i + a_i (x) 1, S(a_i) = -H_{g_i}^{-1} a_i.
struct GeneratorCoalgebra {
  GeneratorKind kind;
  std::size_t index = 0;      // group element t, or rack element i
  std::size_t group_left = 0;  // t for grouplikes, g_i for a_i
  std::size_t antipode_group = 0;  // t^-1, or g_i^-1
  GQ antipode_scale;           // 1, or -1
  std::string coproduct_text;
  std::string antipode_text;
};

std::vector<GeneratorCoalgebra> coproduct_antipode_data(const QlDatum& d);

}  // namespace hopfrep
