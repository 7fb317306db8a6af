// Built-in catalog: the 6-dimensional Lie algebras of the classification
// lists plus the parametric adapted frames used by the instanton analysis.
#pragma once

#include <vector>

#include "hexforms/liealg.hpp"

namespace hexforms {

struct CatalogEntry {
  std::string id;
  std::string display_name;
  LieAlgebra algebra;
  // Adapted families carry symbolic parameters and assumption predicates;
  // plain algebras have a trivial ring.
  bool is_family = false;
  std::vector<std::string> params;
};

const std::vector<CatalogEntry>& algebra_catalog();
const std::vector<CatalogEntry>& family_catalog();

const CatalogEntry& find_algebra(const std::string& id);
const CatalogEntry& find_family(const std::string& id);
bool has_family(const std::string& id);

std::vector<const CatalogEntry*> algebras_with_tag(const std::string& tag);

}  // namespace hexforms
