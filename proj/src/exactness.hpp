#pragma once

// Shared machinery for checking exactness of 0 -> A -> ghost -> Obs -> 0 at
// the middle term, used for both the group and the fusion system sequence.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fusionburnside/burnside.hpp"
#include "fusionburnside/checked.hpp"

namespace fusionburnside::detail {

using Vec = std::vector<std::int64_t>;

inline std::string format_vector(Vec const &v)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

struct ExactnessProblem
{
  /// Diagonal moduli |W_S P|, one per coordinate.
  Vec moduli;
  /// Residues of the congruence map; coordinate i may depend only on
  /// coordinates 0..i with coefficient 1 on coordinate i.
  std::function<Vec(Vec const &)> psi;
  /// Integral preimage under the mark map, if any.
  std::function<bool(Vec const &)> in_image;
};

inline bool all_zero(Vec const &v)
{
  for (auto x : v)
    if (x != 0)
      return false;
  return true;
}

/// Sweeps a full residue box and random kernel vectors. Appends one check for
/// the sweep and one for the samples.
inline void check_exactness(ExactnessProblem const &problem, SesOptions const &options,
                            SesReport &report)
{
  auto const n = problem.moduli.size();

  std::int64_t box = 1;
  bool box_fits = true;
  for (auto w : problem.moduli) {
    if (box > static_cast<std::int64_t>(options.max_sweep) / w) {
      box_fits = false;
      break;
    }
    box *= w;
  }

  CheckResult sweep{"kernel equals image (residue sweep)", true, ""};
  std::size_t swept = 0;
  auto test = [&](Vec const &xi) {
    ++swept;
    bool const in_kernel = all_zero(problem.psi(xi));
    bool const in_image = problem.in_image(xi);
    if (in_kernel != in_image && sweep.passed) {
      sweep.passed = false;
      sweep.detail = "witness " + format_vector(xi) +
                     (in_kernel ? " in ker Psi but not in im Phi"
                                : " in im Phi but Psi nonzero");
    }
  };

  if (box_fits) {
    Vec xi(n, 0);
    for (;;) {
      test(xi);
      std::size_t i = 0;
      while (i < n && ++xi[i] == problem.moduli[i])
        xi[i++] = 0;
      if (i == n)
        break;
    }
    sweep.detail = sweep.passed ? "full box of " + std::to_string(swept) + " vectors"
                                : sweep.detail;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::int64_t r = 0; r < problem.moduli[i]; ++r) {
        Vec xi(n, 0);
        xi[i] = r;
        test(xi);
      }
    if (sweep.passed)
      sweep.detail = "per-coordinate sweep of " + std::to_string(swept) + " vectors";
  }
  report.swept += swept;
  report.checks.push_back(sweep);

  // Random vectors pushed into ker Psi by fixing coordinates in order.
  CheckResult sampled{"sampled kernel vectors lie in the image", true, ""};
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (std::size_t k = 0; k < options.samples; ++k) {
    Vec xi(n);
    for (auto &x : xi)
      x = dist(rng);
    for (std::size_t i = 0; i < n; ++i)
      xi[i] = checked_sub(xi[i], problem.psi(xi)[i]);
    ++report.sampled;
    if (!all_zero(problem.psi(xi))) {
      sampled.passed = false;
      sampled.detail = "projection failed for " + format_vector(xi);
      break;
    }
    if (!problem.in_image(xi)) {
      sampled.passed = false;
      sampled.detail = "witness " + format_vector(xi) + " in ker Psi but not in im Phi";
      break;
    }
  }
  if (sampled.passed)
    sampled.detail = std::to_string(options.samples) + " samples";
  report.checks.push_back(sampled);
}

} // namespace fusionburnside::detail
