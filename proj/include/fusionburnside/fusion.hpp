#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionburnside/burnside.hpp"
#include "fusionburnside/group.hpp"

namespace fusionburnside {

/// g with g source g^-1 = target, where source and target are subgroups of
/// the Sylow group S.
struct ConjugationWitness
{
  Permutation element;
  Index ambient_index = 0;
  Subgroup source;
  Subgroup target;
};

/// Answers "which ambient element conjugates this subgroup of S into that
/// one". The stable-set machinery only sees the partition, never the oracle.
class ConjugationOracle
{
public:
  virtual ~ConjugationOracle() = default;

  /// Elements g with g Q g^-1 <= P, in ambient element order. Q and P are
  /// subgroups of S.
  virtual std::vector<Index> transporter(Subgroup const &q, Subgroup const &p) const = 0;
  virtual Permutation const &element(Index g) const = 0;
  /// Image of S-element x under conjugation by g, or nullopt if it leaves S.
  virtual std::optional<Index> conjugate(Index g, Index x) const = 0;
};

/// The fusion system F_S(G) for S a Sylow p-subgroup of G, reduced to the
/// partition of S-classes into F-classes and a fully normalized
/// representative per F-class. Copies share the same immutable data.
class FusionData
{
public:
  Group const &ambient() const;
  /// S as a subgroup of the ambient group.
  Subgroup const &sylow() const;
  int prime() const;
  RingPtr const &ring() const;
  SubgroupClassTable const &table() const;

  std::size_t size() const;
  /// S-class indices of F-class f, increasing.
  std::vector<std::size_t> const &members(std::size_t f) const;
  std::size_t fclass_of(std::size_t s_class) const;
  /// S-class index of the chosen fully normalized representative.
  std::size_t representative(std::size_t f) const;
  /// Label of the first member S-class.
  std::string const &label(std::size_t f) const;

  /// Q <~_F P: some F-conjugate of the F-class qf lies in a member of pf.
  bool subconjugate(std::size_t qf, std::size_t pf) const;
  bool fully_normalized(std::size_t s_class) const;

  ConjugationOracle const &oracle() const;

  /// Same fusion system with a different choice of fully normalized
  /// representatives. Throws PreconditionError if a choice is not fully
  /// normalized or not a member of its F-class.
  FusionData with_representatives(std::vector<std::size_t> const &reps) const;

  /// Every valid assignment of fully normalized representatives.
  std::vector<std::vector<std::size_t>> representative_choices() const;

  bool operator==(FusionData const &rhs) const { return data_ == rhs.data_; }

private:
  friend FusionData fusion_from_group(Group const &, int, Limits const &);
  struct Data;
  std::shared_ptr<Data const> data_;
};

/// Builds F_S(G) from a Sylow p-subgroup of G. A prime not dividing |G| gives
/// the degenerate system over the trivial group.
FusionData fusion_from_group(Group const &g, int p, Limits const &limits = {});

std::size_t fully_normalized_rep(FusionData const &f, std::size_t fclass);

/// g in G with g Q g^-1 = P and g N_S(Q) g^-1 <= N_S(P), first in ambient
/// element order. Q and P are subgroups of S (the ring's group), P fully
/// normalized and F-conjugate to Q.
ConjugationWitness normalizer_lift(FusionData const &f, Subgroup const &q,
                                   Subgroup const &p);

} // namespace fusionburnside
