#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionburnside/group.hpp"

namespace fusionburnside {

/// One S-conjugacy class of subgroups.
struct SubgroupClass
{
  /// Member with the lexicographically least key.
  Subgroup representative;
  /// All members, sorted by key.
  std::vector<Subgroup> members;
  std::size_t normalizer_order = 0;

  std::size_t order() const { return representative.order(); }
  std::size_t weyl_order() const { return normalizer_order / order(); }
};

/// The S-conjugacy classes of subgroups of S, ordered by decreasing subgroup
/// order with ties broken by representative key. Class 0 is [S], the last
/// class is [1].
class SubgroupClassTable
{
public:
  static SubgroupClassTable build(Group const &s, Limits const &limits = {});

  Group const &group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  SubgroupClass const &operator[](std::size_t i) const { return classes_[i]; }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  /// Class index of any subgroup of S.
  std::size_t class_of(Subgroup const &h) const;
  std::optional<std::size_t> find_class(std::vector<Index> const &key) const;

  /// "order:k", k counting classes of equal order from 0.
  std::string const &label(std::size_t i) const { return labels_[i]; }
  std::vector<std::string> const &labels() const { return labels_; }
  std::optional<std::size_t> find_label(std::string const &label) const;

private:
  Group group_;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<Index>, std::size_t> lookup_;
  std::vector<std::string> labels_;
};

} // namespace fusionburnside
