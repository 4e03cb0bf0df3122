#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fusionburnside/burnside.hpp"
#include "fusionburnside/fusion.hpp"

namespace fusionburnside {

/// A ghost ring element for the fusion system: one mark per F-class.
struct FMarkVector
{
  FusionData fusion;
  std::vector<std::int64_t> marks;
};

/// Residues at the fully normalized representatives, modulo |W_S P|.
struct FObstructionVector
{
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> moduli;

  bool is_zero() const;
};

/// A pair of F-conjugate S-classes on which the marks of X disagree.
struct StabilityViolation
{
  std::size_t first = 0;
  std::size_t second = 0;
  std::int64_t first_mark = 0;
  std::int64_t second_mark = 0;
};

std::optional<StabilityViolation> find_stability_violation(BurnsideElement const &x,
                                                           FusionData const &f);

/// True iff the marks of X are constant on every F-class.
bool is_f_stable(BurnsideElement const &x, FusionData const &f);

/// One orbit correction: lambda copies of [S/P'] added at S-class `s_class`.
struct StabilizationStep
{
  std::size_t fclass = 0;
  std::size_t s_class = 0;
  std::int64_t lambda = 0;
  bool fully_normalized = false;
};

struct Stabilized
{
  BurnsideElement result;
  std::vector<StabilizationStep> steps;
};

/// Makes X F-stable by adding orbits at the F-classes in `h`, largest first.
///
/// `h` is a set of F-class indices closed under F-subconjugation; X must
/// already be stable outside `h` and have no orbits of type [S/P] for P in
/// `h`. Every correction is asserted non-negative and zero at fully
/// normalized members.
Stabilized stabilize(BurnsideElement const &x, FusionData const &f,
                     std::vector<std::size_t> const &h);

/// The same procedure for arbitrary ring elements: orbits inside `h` are
/// allowed and corrections may be negative. Divisibility is still asserted.
Stabilized stabilize_relaxed(BurnsideElement const &x, FusionData const &f,
                             std::vector<std::size_t> const &h);

/// F-classes F-subconjugate to a proper subgroup of the representative of f.
std::vector<std::size_t> proper_subconjugates(FusionData const &f, std::size_t fclass);

struct AlphaBasis
{
  FusionData fusion;
  /// alphas[f] is the irreducible stable set of F-class f.
  std::vector<BurnsideElement> alphas;
  /// Every correction made while stabilizing, over all F-classes.
  std::vector<StabilizationStep> steps;

  /// Entry (q, p) = Phi_q(alpha_p) over the F-classes.
  IntMatrix mark_matrix() const;
};

AlphaBasis alpha_basis(FusionData const &f);

/// Coefficients of X in the alpha basis, read off as c_P(X) at the fully
/// normalized representatives and confirmed by full reconstruction.
std::vector<std::int64_t> decompose(BurnsideElement const &x, AlphaBasis const &basis);
std::vector<std::int64_t> decompose(BurnsideElement const &x, FusionData const &f);

/// sum_f lambda_f alpha_f
BurnsideElement reconstruct(std::vector<std::int64_t> const &lambda,
                            AlphaBasis const &basis);

FMarkVector phi_fusion(BurnsideElement const &x, FusionData const &f);
FObstructionVector psi_fusion(FMarkVector const &marks);

/// |Obs(F)|: product of |W_S P| over the fully normalized representatives.
std::int64_t obstruction_order(FusionData const &f);

/// Checks that 0 -> A(F) -> ghost(F) -> Obs(F) -> 0 is exact.
SesReport verify_ses_fusion(FusionData const &f, SesOptions const &options = {});

} // namespace fusionburnside
