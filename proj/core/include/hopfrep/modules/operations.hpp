#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfrep/algebra/table.hpp"
#include "hopfrep/modules/hmodule.hpp"

namespace hopfrep {

enum class Verdict { no, yes, unknown };
std::string verdict_name(Verdict v);

HModule tensor(const HModule& m, const HModule& n);
HModule dual(const HModule& m);
HModule direct_sum(const HModule& m, const HModule& n);

/// Submodule spanned by the columns of `basis` (must be stable) and the quotient by it.
HModule submodule(const HModule& m, const std::vector<Vec>& basis);
HModule quotient_module(const HModule& m, const std::vector<Vec>& basis);
bool is_submodule(const HModule& m, const std::vector<Vec>& basis);

/// Burnside: the generated matrix algebra is the full matrix algebra.
bool is_simple(const HModule& m);

/// Intertwiners m -> n, as dim(n) x dim(m) matrices.
std::vector<ExactMatrix> hom_space(const HModule& m, const HModule& n);
/// Intertwiners for the group action only.
std::vector<ExactMatrix> hom_space_group(const HModule& m, const HModule& n);

Verdict is_isomorphic(const HModule& m, const HModule& n);
Verdict is_indecomposable(const HModule& m);

struct Decomposition {
  std::vector<HModule> summands;
  bool complete = true;  // false when some summand could not be split or certified
};
Decomposition decompose(const HModule& m);

/// Irreducible characters of the group, for isotypic projections.
struct CharacterTable {
  std::vector<std::string> names;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<GQ>> values;  // values[k][t]
};
/// Built-in table for S_3 (eps, sg, st); throws for other groups.
CharacterTable s3_character_table(const PermGroup& g);

using IsotypicProfile = std::map<std::string, std::size_t>;
IsotypicProfile restrict_isotypic(const HModule& m, const CharacterTable& chars);
IsotypicProfile restrict_isotypic(const HModule& m);
std::string profile_string(const IsotypicProfile& p);

/// A ⊗_{kG} W for W given by group generator matrices.
HModule induce(const AlgebraTable& t, const std::vector<ExactMatrix>& w_gens, std::string name = {});

struct CoverCertificate {
  Verdict indecomposable = Verdict::unknown;
  bool surjects = false;
  Verdict summand_of_induced = Verdict::unknown;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};
CoverCertificate certify_projective_cover(const HModule& p, const HModule& s, const AlgebraTable& t);

/// sum dim P(S) * dim S over a full list of simples and covers
std::size_t cover_dimension_sum(const std::vector<std::pair<HModule, HModule>>& covers_and_simples);

/// Endomorphism data used by several tests.
struct EndInfo {
  std::vector<ExactMatrix> basis;
  std::vector<ExactMatrix> radical;
  [[nodiscard]] std::size_t top_dim() const { return basis.size() - radical.size(); }
};
EndInfo endomorphisms(const HModule& m);

}  // namespace hopfrep
