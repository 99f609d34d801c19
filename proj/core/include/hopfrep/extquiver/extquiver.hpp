#pragma once

#include <string>
#include <vector>

#include "hopfrep/modules/hmodule.hpp"

namespace hopfrep {

/// Ext^1(m, n) classifies 0 -> n -> E -> m -> 0. E has basis (n, m) and
/// a_i acts by [[A^n_i, F_i], [0, A^m_i]]; the group part stays block diagonal.
struct Ext1 {
  std::size_t dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  /// a basis complement to the coboundaries; F[i] is dim(n) x dim(m), one per rack element
  std::vector<std::vector<ExactMatrix>> cocycles;
};

Ext1 ext1(const HModule& m, const HModule& n);
inline std::size_t ext1_dim(const HModule& m, const HModule& n) { return ext1(m, n).dim; }

/// Middle term for a cocycle F.
HModule build_extension(const HModule& m, const HModule& n, const std::vector<ExactMatrix>& f);

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> arrows;  // arrows[i][j] = dim Ext^1(S_i, S_j)
  [[nodiscard]] std::size_t arrow_count() const;
};

Quiver gabriel_quiver(const std::vector<HModule>& simples);

/// Undirected multigraph; loops are edges (v, v).
struct Graph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  [[nodiscard]] std::size_t size() const { return labels.size(); }
  [[nodiscard]] std::vector<std::size_t> degrees() const;
};

struct DiagramGraph {
  Graph graph;  // vertices 0..n-1 are i', n..2n-1 are i''
  std::vector<std::vector<std::size_t>> components;
  /// components with at least one edge, as standalone graphs
  [[nodiscard]] std::vector<Graph> nontrivial_components() const;
};

DiagramGraph separation_diagram(const Quiver& q);

/// Connected components as vertex lists (sorted).
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

enum class GraphKind { dynkin, affine, neither };
std::string graph_kind_name(GraphKind k);

struct Classification {
  GraphKind kind = GraphKind::neither;
  std::string name;  // "A_4", "D_5^(1)", "" for neither
  [[nodiscard]] std::string to_string() const;
};

/// Tits form 2I - A: positive definite -> Dynkin, semidefinite with a
/// one-dimensional radical -> affine, else neither. The name comes from the shape.
Classification classify_graph(const Graph& g);

/// Kind and name from shape matching alone (no quadratic form).
Classification shape_classify(const Graph& g);

enum class RepType { finite, tame, wild };

struct RepTypeVerdict {
  RepType square_zero_type = RepType::finite;
  std::vector<Classification> components;
  std::string text;
};

RepTypeVerdict rep_type_verdict(const Quiver& q);

std::string quiver_dot(const Quiver& q);
std::string diagram_dot(const DiagramGraph& d);

}  // namespace hopfrep
