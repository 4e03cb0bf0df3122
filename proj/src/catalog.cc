#include "fusionburnside/catalog.hpp"

#include "fusionburnside/error.hpp"

namespace fusionburnside {

GroupSpec CatalogEntry::spec() const
{
  GroupSpec s;
  s.degree = degree;
  for (auto const &g : generators)
    s.generators.push_back(Permutation::parse_cycles(g, degree));
  return s;
}

std::vector<CatalogEntry> const &catalog()
{
  static std::vector<CatalogEntry> const entries = {
    {"C2", 2, {"(1 2)"}, 2, "cyclic group of order 2"},
    {"C4", 4, {"(1 2 3 4)"}, 2, "cyclic group of order 4"},
    {"C2xC2", 4, {"(1 2)", "(3 4)"}, 2, "Klein four-group"},
    {"C8", 8, {"(1 2 3 4 5 6 7 8)"}, 2, "cyclic group of order 8"},
    {"D8", 4, {"(1 2 3 4)", "(1 3)"}, 2, "dihedral group of order 8"},
    {"Q8", 8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}, 2,
     "quaternion group, regular representation"},
    {"C2xC4", 6, {"(1 2)", "(3 4 5 6)"}, 2, "abelian group of order 8"},
    {"D16", 8, {"(1 2 3 4 5 6 7 8)", "(1 8)(2 7)(3 6)(4 5)"}, 2,
     "dihedral group of order 16"},
    {"S3", 3, {"(1 2)", "(1 2 3)"}, 3, "symmetric group on 3 letters"},
    {"S4", 4, {"(1 2)", "(1 2 3 4)"}, 2, "symmetric group on 4 letters"},
    {"S5", 5, {"(1 2)", "(1 2 3 4 5)"}, 2, "symmetric group on 5 letters"},
    {"A4", 4, {"(1 2 3)", "(2 3 4)"}, 2, "alternating group on 4 letters"},
  };
  return entries;
}

CatalogEntry const &catalog_lookup(std::string const &name)
{
  for (auto const &e : catalog())
    if (e.name == name)
      return e;
  std::string names;
  for (auto const &e : catalog())
    names += (names.empty() ? "" : ", ") + e.name;
  throw InputError("unknown catalog group '" + name + "'; available: " + names);
}

} // namespace fusionburnside
