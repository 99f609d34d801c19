#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfrep/algebra/table.hpp"
#include "hopfrep/catalog/catalog.hpp"
#include "hopfrep/extquiver/extquiver.hpp"

namespace hopfrep::tools {

/// dim, radical, audits
nlohmann::json algebra_section(const AlgebraTable& t);

/// census of one-dimensional modules and the Ext table between them
nlohmann::json onedim_section(const std::shared_ptr<const QlDatum>& d);
/// plain-text version of the same
std::string onedim_text(const std::shared_ptr<const QlDatum>& d);

/// Name of the first catalog entry isomorphic to m, else "dim d {profile}".
std::string name_module(const HModule& m, const std::vector<const std::vector<CatalogEntry>*>& lists);

struct ProductEntry {
  std::string left, right;
  std::vector<std::string> summands;
  std::string expected;  // empty when no expectation is known
  bool matches = true;
};
std::vector<ProductEntry> product_table(int lambda);

nlohmann::json simples_section(int lambda);
nlohmann::json products_section(const std::vector<ProductEntry>& p);
nlohmann::json ext_section(const Quiver& q);
nlohmann::json quiver_section(const Quiver& q);
nlohmann::json projectives_section(int lambda, const AlgebraTable& t);

/// Everything for A_lambda, lambda in {0,1}.
nlohmann::json full_report(int lambda, const AlgebraTable& t);

Quiver catalog_quiver(int lambda);

}  // namespace hopfrep::tools
