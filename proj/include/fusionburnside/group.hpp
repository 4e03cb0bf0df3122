#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fusionburnside/permutation.hpp"

namespace fusionburnside {

/// Position of an element in its group's sorted element list.
using Index = std::int32_t;

/// Desk-scale caps. Exceeding any of them raises SizeError.
struct Limits
{
  std::size_t max_group_order = 10000;
  std::size_t max_enumeration_order = 64;
  std::size_t max_subgroups = 4096;
};

/// A finite permutation group with its complete element list.
///
/// Elements are sorted lexicographically by their images, so the identity has
/// index 0 and the ordering does not depend on the generating set. Copies
/// share the same immutable data.
class Group
{
public:
  /// Closure of `generators` on points 1..degree.
  static Group generate(int degree, std::vector<Permutation> generators,
                        Limits const &limits = {});

  int degree() const;
  std::size_t order() const;
  std::vector<Permutation> const &generators() const;
  std::span<Permutation const> elements() const;
  Permutation const &element(Index i) const;

  static constexpr Index identity() { return 0; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  /// g x g^-1
  Index conj(Index g, Index x) const;
  Index power(Index x, std::int64_t k) const;
  int element_order(Index x) const;

  std::optional<Index> find(Permutation const &p) const;
  /// Throws InputError if `p` is not an element.
  Index index_of(Permutation const &p) const;

  /// True iff both handles refer to the same group data.
  bool same_as(Group const &other) const { return data_ == other.data_; }

private:
  struct Data;
  std::shared_ptr<Data const> data_;
};

/// A subgroup of a parent group, stored as the sorted list of parent indices.
class Subgroup
{
public:
  /// Subgroup of `parent` generated by `generators` (parent indices).
  static Subgroup generated(Group const &parent, std::span<Index const> generators);
  /// Validates closure; throws InputError otherwise.
  static Subgroup from_elements(Group const &parent, std::vector<Index> elements);
  static Subgroup whole(Group const &parent);
  static Subgroup trivial(Group const &parent);

  Group const &parent() const { return parent_; }
  std::size_t order() const { return elements_.size(); }
  std::vector<Index> const &elements() const { return elements_; }
  bool contains(Index x) const { return member_[static_cast<std::size_t>(x)]; }
  bool is_subgroup_of(Subgroup const &other) const;

  /// Canonical key: the sorted list of parent indices.
  std::vector<Index> const &key() const { return elements_; }

  /// g H g^-1
  Subgroup conjugate(Index g) const;
  /// <H, x>
  Subgroup join(Index x) const;

  /// The subgroup as a standalone Group on the same points. Its element
  /// ordering agrees with the order of `elements()` in the parent.
  Group as_group() const;

  bool operator==(Subgroup const &other) const;

private:
  Subgroup(Group parent, std::vector<Index> elements);

  Group parent_;
  std::vector<Index> elements_;
  std::vector<bool> member_;
};

Subgroup normalizer(Group const &g, Subgroup const &p);
Subgroup centralizer(Group const &g, Subgroup const &p);
/// All g with g Q g^-1 <= P, in increasing index order.
std::vector<Index> transporter(Group const &g, Subgroup const &q, Subgroup const &p);

bool is_prime(std::int64_t n);
/// Largest power of p dividing n.
std::int64_t p_part(std::int64_t n, std::int64_t p);

/// A Sylow p-subgroup of G, grown from a cyclic p-subgroup through
/// normalizers. Returns the trivial subgroup if p does not divide |G|.
Subgroup sylow_subgroup(Group const &g, int p);

/// Every subgroup of S exactly once, sorted by canonical key.
std::vector<Subgroup> enumerate_subgroups(Group const &s, Limits const &limits = {});

/// Indices [G:H] <= max_index: those allowed by Lagrange and those realized
/// by an actual subgroup, found by exhaustive enumeration of G.
struct SmallIndexScan
{
  std::vector<std::size_t> feasible;
  std::vector<std::size_t> realized;
};

SmallIndexScan scan_small_index_subgroups(Group const &g, std::size_t max_index,
                                          Limits const &limits = {});

} // namespace fusionburnside
