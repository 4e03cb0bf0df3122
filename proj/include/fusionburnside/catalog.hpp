#pragma once

#include <string>
#include <vector>

#include "fusionburnside/io.hpp"

namespace fusionburnside {

/// A built-in group with its default prime.
struct CatalogEntry
{
  std::string name;
  int degree = 0;
  std::vector<std::string> generators;
  int prime = 2;
  std::string description;

  GroupSpec spec() const;
};

std::vector<CatalogEntry> const &catalog();

/// Throws InputError listing the available names when `name` is unknown.
CatalogEntry const &catalog_lookup(std::string const &name);

} // namespace fusionburnside
