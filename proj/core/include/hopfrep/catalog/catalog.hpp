#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfrep/algebra/table.hpp"
#include "hopfrep/modules/operations.hpp"

namespace hopfrep {

/// Q3_minus[lambda] for lambda in {0,1}; built once and shared.
std::shared_ptr<const QlDatum> a_datum(int lambda);
/// The 72-dimensional table of A_lambda; built once.
const AlgebraTable& a_table(int lambda);

/// Standard representation of S3 on {v,w}: {H12, H23, H13}.
std::vector<ExactMatrix> standard_rep();

enum class GBlock { eps, sg, st };
/// Group generator matrices for a direct sum of S3 simples in the given order.
std::vector<ExactMatrix> s3_blocks(const QlDatum& d, const std::vector<GBlock>& blocks);

/// Module from the G-structure and the matrix of a12; a13, a23 by conjugation.
HModule module_from_a12(std::shared_ptr<const QlDatum> d, const std::vector<GBlock>& blocks, const ExactMatrix& a12,
                        std::string name);

struct CatalogEntry {
  std::string name;
  HModule module;
  bool simple = false;
  bool indecomposable = true;
  IsotypicProfile profile;  // G-support as listed
};

std::vector<CatalogEntry> simples(int lambda);
std::vector<CatalogEntry> indecomposables3(int lambda);
/// The 4-dimensional A_1-modules M(alpha,beta,gamma,eta,a,b)[theta], both signs of theta.
std::vector<CatalogEntry> indecomposables4();
/// Projective covers: lambda=1 gives I_eps, I_sg and P_st at the four theta;
/// lambda=0 gives I_eps, I_sg, I_st.
std::vector<CatalogEntry> projectives(int lambda);
/// Simple module name covered by each entry of projectives(lambda), same order.
std::vector<std::string> projective_tops(int lambda);

/// A_0 self-extension of S_st with a12 v2 = a v1 + b w1.
CatalogEntry p1_family(const GQ& a, const GQ& b);

/// All (alpha, beta) in Q(i) with alpha^2 = beta^2 and -5 alpha^2 - 4 alpha beta = lambda.
std::vector<std::pair<GQ, GQ>> st_solutions(const GQ& lambda);

struct FusionRule {
  std::string left, right, expected;
};
/// The expected products of A_1 simples, all 36 ordered pairs.
std::vector<FusionRule> fusion_expected();

/// "i", "-i/3", "2i", "-2i/3", "1", ...
std::string scalar_label(const GQ& x);

/// Find an entry by name in a list; throws if absent.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& list, const std::string& name);

}  // namespace hopfrep
