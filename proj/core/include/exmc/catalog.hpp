#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace exmc {

struct CatalogEntry {
  std::string name;
  std::string claim;  // what the experiment exercises
  std::string config_text;
};

/// Built-in experiments, each a complete config document.
const std::vector<CatalogEntry>& catalog();

/// nullptr when there is no entry of that name.
const CatalogEntry* find_experiment(std::string_view name);

}  // namespace exmc
