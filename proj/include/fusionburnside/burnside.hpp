#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fusionburnside/class_table.hpp"
#include "fusionburnside/group.hpp"

namespace fusionburnside {

/// Dense square integer matrix, row-major.
class IntMatrix
{
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool operator==(IntMatrix const &) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Table of marks: entry ([Q], [P]) = |N_S(Q, P)| / |P|, the number of points
/// of S/P fixed by Q.
IntMatrix mark_matrix(SubgroupClassTable const &table);

/// The Burnside ring A(S) of a finite group S, with everything that depends
/// only on S precomputed: class table, table of marks, Weyl group orders and
/// the index pattern of the congruence map.
class BurnsideRing
{
public:
  static std::shared_ptr<BurnsideRing const> create(Group const &s,
                                                    Limits const &limits = {});

  Group const &group() const { return table_.group(); }
  SubgroupClassTable const &table() const { return table_; }
  std::size_t rank() const { return table_.size(); }
  IntMatrix const &marks() const { return marks_; }

  /// |W_S P| = |N_S P| / |P| for class i.
  std::int64_t weyl_order(std::size_t i) const { return weyl_[i]; }
  std::vector<std::int64_t> const &weyl_orders() const { return weyl_; }

  /// For class i with representative P: the class of <s>P for each coset sP
  /// of P in N_S P, in order of the least coset element.
  std::vector<std::size_t> const &psi_terms(std::size_t i) const { return psi_terms_[i]; }

  /// The transitive set [S/P_j] expressed over the classes of S.
  std::vector<std::int64_t> basis_product(std::size_t i, std::size_t j) const;

private:
  BurnsideRing() = default;

  SubgroupClassTable table_;
  IntMatrix marks_;
  std::vector<std::int64_t> weyl_;
  std::vector<std::vector<std::size_t>> psi_terms_;
};

using RingPtr = std::shared_ptr<BurnsideRing const>;

/// X = sum_P c_P [S/P], an element of A(S) in orbit coordinates.
class BurnsideElement
{
public:
  BurnsideElement(RingPtr ring, std::vector<std::int64_t> coeffs);

  static BurnsideElement zero(RingPtr ring);
  /// The transitive set [S/P] for class i.
  static BurnsideElement basis(RingPtr ring, std::size_t i);

  RingPtr const &ring() const { return ring_; }
  std::vector<std::int64_t> const &coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

  /// True iff every coordinate is non-negative, i.e. X is a genuine S-set.
  bool is_set() const;
  bool is_zero() const;

  BurnsideElement &operator+=(BurnsideElement const &rhs);
  BurnsideElement &operator-=(BurnsideElement const &rhs);
  friend BurnsideElement operator+(BurnsideElement lhs, BurnsideElement const &rhs)
  { return lhs += rhs; }
  friend BurnsideElement operator-(BurnsideElement lhs, BurnsideElement const &rhs)
  { return lhs -= rhs; }
  friend BurnsideElement operator*(std::int64_t k, BurnsideElement x);

  bool operator==(BurnsideElement const &rhs) const;

  /// e.g. "[S/S] + 2*[S/2:1]"; `name` replaces S, "1" is used for the
  /// trivial class.
  std::string to_string(std::string const &name = "S",
                        std::string const &times = "*") const;

private:
  RingPtr ring_;
  std::vector<std::int64_t> coeffs_;
};

/// Fixed-point vector (Phi_Q) over the classes of S; an element of the ghost
/// ring.
class MarkVector
{
public:
  MarkVector(RingPtr ring, std::vector<std::int64_t> marks);

  RingPtr const &ring() const { return ring_; }
  std::vector<std::int64_t> const &marks() const { return marks_; }
  std::int64_t operator[](std::size_t i) const { return marks_[i]; }
  std::size_t size() const { return marks_.size(); }

  bool operator==(MarkVector const &rhs) const;

private:
  RingPtr ring_;
  std::vector<std::int64_t> marks_;
};

/// Residues modulo the Weyl group orders.
struct ObstructionVector
{
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> moduli;

  bool is_zero() const;
};

MarkVector mark(BurnsideElement const &x);

/// Inverse of the mark homomorphism by forward substitution. Throws
/// NotInImageError when a quotient is not integral.
BurnsideElement marks_to_orbits(MarkVector const &marks);

/// Product in A(S) through the double coset formula.
BurnsideElement multiply(BurnsideElement const &x, BurnsideElement const &y);

/// Psi_P(xi) = sum over sP in W_S P of xi_{<s>P}, mod |W_S P|.
ObstructionVector psi_group(MarkVector const &marks);

/// |Obs(S)| as the product of all Weyl group orders.
std::int64_t obstruction_order(BurnsideRing const &ring);

/// The S-set G/H restricted to S, where H and S are subgroups of the same G
/// and `ring` was built from S.as_group().
BurnsideElement restrict_ambient(Subgroup const &h, Subgroup const &s, RingPtr ring);

// -- short exact sequence verification -----------------------------------

struct CheckResult
{
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SesReport
{
  std::vector<CheckResult> checks;
  std::int64_t obstruction_order = 0;
  std::size_t swept = 0;
  std::size_t sampled = 0;

  bool passed() const;
};

struct SesOptions
{
  std::uint64_t seed = 20240101;
  std::size_t samples = 100;
  /// Above this many vectors the full residue box is replaced by a sweep of
  /// each coordinate separately.
  std::size_t max_sweep = std::size_t{1} << 22;
};

/// Checks that 0 -> A(S) -> ghost ring -> Obs(S) -> 0 is exact.
SesReport verify_ses_group(RingPtr const &ring, SesOptions const &options = {});

} // namespace fusionburnside
