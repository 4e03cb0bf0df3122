#include "fusionburnside/class_table.hpp"

#include <algorithm>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

SubgroupClassTable SubgroupClassTable::build(Group const &s, Limits const &limits)
{
  auto subgroups = enumerate_subgroups(s, limits);

  std::map<std::vector<Index>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    position.emplace(subgroups[i].key(), i);

  // Subgroups arrive sorted by key, so the first unassigned member of each
  // orbit is its least-key member.
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<SubgroupClass> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i])
      continue;
    std::vector<std::size_t> orbit;
    for (Index g = 0; static_cast<std::size_t>(g) < s.order(); ++g) {
      std::size_t j = position.at(subgroups[i].conjugate(g).key());
      if (!assigned[j]) {
        assigned[j] = true;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    SubgroupClass c{subgroups[orbit.front()], {}, 0};
    for (std::size_t j : orbit)
      c.members.push_back(subgroups[j]);
    c.normalizer_order = normalizer(s, c.representative).order();
    if (c.normalizer_order * c.members.size() != s.order())
      throw InvariantError("orbit-stabilizer count failed in class table");
    classes.push_back(std::move(c));
  }

  std::stable_sort(classes.begin(), classes.end(),
                   [](SubgroupClass const &a, SubgroupClass const &b) {
                     if (a.order() != b.order())
                       return a.order() > b.order();
                     return a.representative.key() < b.representative.key();
                   });

  SubgroupClassTable t;
  t.group_ = s;
  t.classes_ = std::move(classes);
  std::size_t run = 0;
  for (std::size_t i = 0; i < t.classes_.size(); ++i) {
    if (i > 0 && t.classes_[i].order() != t.classes_[i - 1].order())
      run = 0;
    t.labels_.push_back(std::to_string(t.classes_[i].order()) + ":" +
                        std::to_string(run++));
    for (auto const &m : t.classes_[i].members)
      t.lookup_.emplace(m.key(), i);
  }
  return t;
}

std::size_t SubgroupClassTable::class_of(Subgroup const &h) const
{
  if (!h.parent().same_as(group_))
    throw InputError("subgroup does not belong to the class table's group");
  auto c = find_class(h.key());
  if (!c)
    throw InvariantError("subgroup missing from class table");
  return *c;
}

std::optional<std::size_t> SubgroupClassTable::find_class(std::vector<Index> const &key) const
{
  auto it = lookup_.find(key);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubgroupClassTable::find_label(std::string const &label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

} // namespace fusionburnside
