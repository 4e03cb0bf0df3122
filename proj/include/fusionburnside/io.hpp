#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusionburnside/class_table.hpp"
#include "fusionburnside/group.hpp"
#include "fusionburnside/permutation.hpp"

namespace fusionburnside {

struct GroupSpec
{
  int degree = 0;
  std::vector<Permutation> generators;

  Group build(Limits const &limits = {}) const
  { return Group::generate(degree, generators, limits); }
};

/// Group file: `degree n` on the first significant line, then one generator
/// per line in 1-based disjoint-cycle notation. Blank lines and `#` comments
/// are ignored.
GroupSpec parse_group_text(std::string_view text);
GroupSpec read_group_file(std::string const &path);

/// Two-line CSV: header of class labels, one row of integers.
std::string format_row_csv(std::vector<std::string> const &labels,
                           std::vector<std::int64_t> const &values);

/// Reads the two-line CSV layout and returns the values in table order.
/// Columns may appear in any order but every label must be present once.
std::vector<std::int64_t> parse_row_csv(std::string_view text,
                                        SubgroupClassTable const &table);

std::string read_text_file(std::string const &path);

} // namespace fusionburnside
