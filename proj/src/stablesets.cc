#include "fusionburnside/stablesets.hpp"

#include <algorithm>
#include <set>

#include "exactness.hpp"
#include "fusionburnside/checked.hpp"
#include "fusionburnside/error.hpp"

namespace fusionburnside {

bool FObstructionVector::is_zero() const
{
  return std::all_of(residues.begin(), residues.end(), [](auto r) { return r == 0; });
}

std::optional<StabilityViolation> find_stability_violation(BurnsideElement const &x,
                                                           FusionData const &f)
{
  if (x.ring() != f.ring())
    throw InputError("element is not over the fusion system's class table");
  auto marks = mark(x);
  for (std::size_t fc = 0; fc < f.size(); ++fc) {
    auto const &m = f.members(fc);
    for (auto s : m)
      if (marks[s] != marks[m.front()])
        return StabilityViolation{m.front(), s, marks[m.front()], marks[s]};
  }
  return std::nullopt;
}

bool is_f_stable(BurnsideElement const &x, FusionData const &f)
{ return !find_stability_violation(x, f).has_value(); }

namespace {

std::string describe(StabilityViolation const &v, FusionData const &f)
{
  auto const &t = f.table();
  return "Phi[" + t.label(v.first) + "]=" + std::to_string(v.first_mark) + " != Phi[" +
         t.label(v.second) + "]=" + std::to_string(v.second_mark);
}

Stabilized run_stabilize(BurnsideElement const &x, FusionData const &f,
                         std::vector<std::size_t> const &h, bool strict)
{
  if (x.ring() != f.ring())
    throw InputError("element is not over the fusion system's class table");

  std::set<std::size_t> const collection(h.begin(), h.end());
  for (auto fc : collection) {
    if (fc >= f.size())
      throw InputError("F-class index out of range");
    for (std::size_t q = 0; q < f.size(); ++q)
      if (f.subconjugate(q, fc) && !collection.count(q))
        throw PreconditionError("collection is not closed under F-subconjugation: " +
                                f.label(q) + " <~ " + f.label(fc));
  }

  auto const initial = mark(x);
  for (std::size_t fc = 0; fc < f.size(); ++fc) {
    if (collection.count(fc))
      continue;
    auto const &m = f.members(fc);
    for (auto s : m)
      if (initial[s] != initial[m.front()])
        throw PreconditionError("element is not F-stable outside the collection at " +
                                f.label(fc));
  }
  if (strict)
    for (auto fc : collection)
      for (auto s : f.members(fc))
        if (x[s] != 0)
          throw PreconditionError("element has orbits of type [S/" +
                                  f.table().label(s) + "] inside the collection");

  auto const &ring = *f.ring();
  std::vector<std::int64_t> coeffs = x.coeffs();
  std::vector<StabilizationStep> steps;

  // Ascending F-class index is decreasing subgroup order, a linear extension
  // of F-subconjugation.
  for (auto fc : collection) {
    auto const marks = mark(BurnsideElement(x.ring(), coeffs));
    auto const rep = f.representative(fc);
    std::vector<StabilizationStep> local;
    for (auto s : f.members(fc)) {
      auto const diff = checked_sub(marks[rep], marks[s]);
      auto const w = ring.weyl_order(s);
      if (diff % w != 0)
        throw InvariantError("congruence violation at [S/" + f.table().label(s) +
                             "]: " + std::to_string(diff) + " not divisible by " +
                             std::to_string(w));
      StabilizationStep step{fc, s, diff / w, f.fully_normalized(s)};
      if (strict && step.lambda < 0)
        throw InvariantError("fixed-point lemma violation: negative correction at [S/" +
                             f.table().label(s) + "]");
      if (strict && step.fully_normalized && step.lambda != 0)
        throw InvariantError("fixed-point lemma violation: nonzero correction at fully "
                             "normalized [S/" + f.table().label(s) + "]");
      local.push_back(step);
    }
    for (auto const &step : local)
      coeffs[step.s_class] = checked_add(coeffs[step.s_class], step.lambda);
    steps.insert(steps.end(), local.begin(), local.end());
  }

  BurnsideElement result(x.ring(), std::move(coeffs));
  if (auto v = find_stability_violation(result, f))
    throw InvariantError("stabilized element is not F-stable: " + describe(*v, f));
  return Stabilized{std::move(result), std::move(steps)};
}

} // namespace

Stabilized stabilize(BurnsideElement const &x, FusionData const &f,
                     std::vector<std::size_t> const &h)
{ return run_stabilize(x, f, h, true); }

Stabilized stabilize_relaxed(BurnsideElement const &x, FusionData const &f,
                             std::vector<std::size_t> const &h)
{ return run_stabilize(x, f, h, false); }

std::vector<std::size_t> proper_subconjugates(FusionData const &f, std::size_t fclass)
{
  std::vector<std::size_t> result;
  for (std::size_t q = 0; q < f.size(); ++q)
    if (q != fclass && f.subconjugate(q, fclass))
      result.push_back(q);
  return result;
}

IntMatrix AlphaBasis::mark_matrix() const
{
  IntMatrix m(alphas.size());
  for (std::size_t p = 0; p < alphas.size(); ++p) {
    auto marks = mark(alphas[p]);
    for (std::size_t q = 0; q < alphas.size(); ++q)
      m(q, p) = marks[fusion.representative(q)];
  }
  return m;
}

AlphaBasis alpha_basis(FusionData const &f)
{
  AlphaBasis basis{f, {}, {}};
  auto const &table = f.table();
  for (std::size_t fc = 0; fc < f.size(); ++fc) {
    auto const rep = f.representative(fc);
    auto const top = static_cast<std::int64_t>(table[rep].normalizer_order);

    std::vector<std::int64_t> coeffs(table.size(), 0);
    for (auto s : f.members(fc)) {
      auto const n = static_cast<std::int64_t>(table[s].normalizer_order);
      if (top % n != 0)
        throw InvariantError("normalizer orders not divisible within an F-class");
      coeffs[s] = top / n;
    }

    auto stabilized =
      stabilize(BurnsideElement(f.ring(), std::move(coeffs)), f, proper_subconjugates(f, fc));
    if (!stabilized.result.is_set())
      throw InvariantError("alpha has a negative orbit count");
    basis.alphas.push_back(std::move(stabilized.result));
    basis.steps.insert(basis.steps.end(), stabilized.steps.begin(), stabilized.steps.end());
  }
  return basis;
}

BurnsideElement reconstruct(std::vector<std::int64_t> const &lambda,
                            AlphaBasis const &basis)
{
  if (lambda.size() != basis.alphas.size())
    throw InputError("coefficient vector length differs from basis size");
  auto x = BurnsideElement::zero(basis.fusion.ring());
  for (std::size_t f = 0; f < lambda.size(); ++f)
    if (lambda[f] != 0)
      x += lambda[f] * basis.alphas[f];
  return x;
}

std::vector<std::int64_t> decompose(BurnsideElement const &x, AlphaBasis const &basis)
{
  auto const &f = basis.fusion;
  if (auto v = find_stability_violation(x, f))
    throw StabilityError("element is not F-stable: " + describe(*v, f));

  std::vector<std::int64_t> lambda;
  for (std::size_t fc = 0; fc < f.size(); ++fc)
    lambda.push_back(x[f.representative(fc)]);
  if (reconstruct(lambda, basis) != x)
    throw InvariantError("alpha decomposition does not reconstruct the element");
  return lambda;
}

std::vector<std::int64_t> decompose(BurnsideElement const &x, FusionData const &f)
{ return decompose(x, alpha_basis(f)); }

FMarkVector phi_fusion(BurnsideElement const &x, FusionData const &f)
{
  if (auto v = find_stability_violation(x, f))
    throw StabilityError("element is not F-stable: " + describe(*v, f));
  auto marks = mark(x);
  FMarkVector result{f, {}};
  for (std::size_t fc = 0; fc < f.size(); ++fc)
    result.marks.push_back(marks[f.representative(fc)]);
  return result;
}

FObstructionVector psi_fusion(FMarkVector const &xi)
{
  auto const &f = xi.fusion;
  if (xi.marks.size() != f.size())
    throw InputError("expected " + std::to_string(f.size()) + " F-marks");
  auto const &ring = *f.ring();
  FObstructionVector obs;
  for (std::size_t fc = 0; fc < f.size(); ++fc) {
    auto const rep = f.representative(fc);
    std::int64_t sum = 0;
    for (auto term : ring.psi_terms(rep))
      sum = checked_add(sum, xi.marks[f.fclass_of(term)]);
    obs.moduli.push_back(ring.weyl_order(rep));
    obs.residues.push_back(mod_floor(sum, obs.moduli.back()));
  }
  return obs;
}

std::int64_t obstruction_order(FusionData const &f)
{
  std::int64_t order = 1;
  for (std::size_t fc = 0; fc < f.size(); ++fc)
    order = checked_mul(order, f.ring()->weyl_order(f.representative(fc)));
  return order;
}

SesReport verify_ses_fusion(FusionData const &f, SesOptions const &options)
{
  SesReport report;
  report.obstruction_order = obstruction_order(f);
  auto const n = f.size();
  auto const basis = alpha_basis(f);
  auto const m = basis.mark_matrix();
  auto const &ring = *f.ring();

  CheckResult composite{"Psi o Phi = 0 on every alpha", true, ""};
  for (std::size_t p = 0; p < n; ++p) {
    auto obs = psi_fusion(phi_fusion(basis.alphas[p], f));
    if (!obs.is_zero()) {
      composite.passed = false;
      composite.detail = "nonzero at alpha_" + f.label(p) + ": " +
                         detail::format_vector(obs.residues);
      break;
    }
  }
  report.checks.push_back(composite);

  CheckResult surjective{"Psi unit lower triangular (surjective)", true, ""};
  for (std::size_t i = 0; i < n && surjective.passed; ++i) {
    std::vector<std::int64_t> row(n, 0);
    for (auto t : ring.psi_terms(f.representative(i)))
      ++row[f.fclass_of(t)];
    if (row[i] != 1) {
      surjective.passed = false;
      surjective.detail = "diagonal coefficient " + std::to_string(row[i]) + " at " +
                          f.label(i);
    }
    for (std::size_t j = i + 1; j < n && surjective.passed; ++j)
      if (row[j] != 0) {
        surjective.passed = false;
        surjective.detail = "entry above diagonal at (" + f.label(i) + ", " +
                            f.label(j) + ")";
      }
  }
  report.checks.push_back(surjective);

  CheckResult triangular{"alpha mark matrix lower triangular, diagonal |W_S P|", true, ""};
  std::int64_t diagonal_product = 1;
  for (std::size_t q = 0; q < n && triangular.passed; ++q) {
    for (std::size_t p = q + 1; p < n; ++p)
      if (m(q, p) != 0) {
        triangular.passed = false;
        triangular.detail = "nonzero above diagonal at (" + f.label(q) + ", " +
                            f.label(p) + ")";
        break;
      }
    if (m(q, q) != ring.weyl_order(f.representative(q))) {
      triangular.passed = false;
      triangular.detail = "diagonal mismatch at " + f.label(q);
    }
    diagonal_product = checked_mul(diagonal_product, m(q, q));
  }
  report.checks.push_back(triangular);

  CheckResult cokernel{"|coker Phi| = |Obs(F)|", true, ""};
  cokernel.detail = std::to_string(diagonal_product) + " vs " +
                    std::to_string(report.obstruction_order);
  cokernel.passed = triangular.passed && diagonal_product == report.obstruction_order;
  report.checks.push_back(cokernel);

  detail::ExactnessProblem problem;
  for (std::size_t fc = 0; fc < n; ++fc)
    problem.moduli.push_back(ring.weyl_order(f.representative(fc)));
  problem.psi = [&](detail::Vec const &xi) {
    return psi_fusion(FMarkVector{f, xi}).residues;
  };
  problem.in_image = [&](detail::Vec const &xi) {
    std::vector<std::int64_t> lambda(n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      std::int64_t rest = xi[q];
      for (std::size_t p = 0; p < q; ++p)
        rest = checked_sub(rest, checked_mul(m(q, p), lambda[p]));
      if (rest % m(q, q) != 0)
        return false;
      lambda[q] = rest / m(q, q);
    }
    if (phi_fusion(reconstruct(lambda, basis), f).marks != xi)
      throw InvariantError("alpha reconstruction does not reproduce the marks");
    return true;
  };
  detail::check_exactness(problem, options, report);
  return report;
}

} // namespace fusionburnside
