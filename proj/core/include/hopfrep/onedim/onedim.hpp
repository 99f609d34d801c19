#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfrep/modules/hmodule.hpp"

namespace hopfrep {

/// A character of G_ab pulled back to G, with a name.
struct AbelianCharacter {
  std::string name;
  GroupFunction values;
};

/// eps, and sg when G has odd permutations.
std::vector<AbelianCharacter> abelian_characters(const QlDatum& d);

/// rho on G together with the values gamma_i of the a_i.
struct CharacterExtension {
  std::string name;  // character name, e.g. "eps"
  GroupFunction rho;
  std::vector<GQ> gamma;
  [[nodiscard]] bool gamma_zero() const;
  [[nodiscard]] std::string label() const;  // "S_eps", or "S_eps^(g1,...)"
};

struct ExtendReport {
  std::vector<CharacterExtension> extensions;
  std::vector<std::string> even_classes_failed;  // classes where lambda_C(1 - rho(g)) != 0
  std::vector<std::string> odd_classes_used;      // classes that constrained gamma
  std::size_t linear_dim = 0;                     // dim of the gamma space cut out by the swaps
};

ExtendReport extend_character_report(const QlDatum& d, const AbelianCharacter& rho);
std::vector<CharacterExtension> extend_character(const QlDatum& d, const AbelianCharacter& rho);

/// All one-dimensional modules, over all characters.
std::vector<CharacterExtension> one_dim_census(const QlDatum& d);

HModule build_S(std::shared_ptr<const QlDatum> d, const CharacterExtension& e);

struct ExtensionSolution {
  std::vector<GQ> f;
  CharacterExtension source;  // quotient, spanned by z
  CharacterExtension target;  // submodule, spanned by w
};

struct ExtSpace1 {
  std::size_t dim = 0;
  std::vector<ExtensionSolution> basis;  // first nonzero f is 1
};

/// Ext^1(S_src, S_tgt): a_i z = gamma_i z + f_i w, a_i w = delta_i w.
ExtSpace1 ext_space_1dim(const QlDatum& d, const CharacterExtension& src, const CharacterExtension& tgt);

/// The middle term, in the basis (w, z).
HModule build_M(std::shared_ptr<const QlDatum> d, const ExtensionSolution& sol);

struct WordLength {
  std::vector<std::size_t> ell;
  std::vector<GQ> psi;
};
/// Lengths in the generators {g_i}; psi(t) = chi_j(g_j)^ell(t) with j the first rack element.
WordLength word_length(const QlDatum& d);

/// f_i = f_j chi_j(t_i)^-1 mu(t_i) / rho(t_i) for i = t_i . j, j the first index with f_j != 0.
bool proportionality_holds(const QlDatum& d, const ExtensionSolution& sol);

}  // namespace hopfrep
