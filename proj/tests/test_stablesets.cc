#include <doctest.h>

#include <numeric>
#include <random>

#include "fusionburnside/error.hpp"
#include "fusionburnside/stablesets.hpp"
#include "oracles.hpp"

using namespace fusionburnside;

namespace {

FusionData system(char const *name, int p) { return fusion_from_group(oracle::catalog_group(name), p); }

std::vector<std::pair<char const *, int>> const &systems()
{
  static std::vector<std::pair<char const *, int>> const list{
      {"C2", 2}, {"C4", 2}, {"C2xC2", 2}, {"C8", 2}, {"D8", 2},  {"Q8", 2}, {"C2xC4", 2},
      {"D16", 2}, {"S3", 2}, {"S3", 3}, {"S4", 2}, {"S5", 2}, {"S5", 3}, {"A4", 2}};
  return list;
}

struct Fraction
{
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d)
  {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator-(Fraction const &o) const { return {num * o.den - o.num * den, den * o.den}; }
  Fraction operator*(Fraction const &o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(Fraction const &o) const { return {num * o.den, den * o.num}; }
};

/// Solves the square system A c = b over the rationals.
std::vector<Fraction> solve(std::vector<std::vector<Fraction>> a, std::vector<Fraction> b)
{
  std::size_t const n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].num == 0)
      ++pivot;
    REQUIRE(pivot < n);
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].num == 0)
        continue;
      auto factor = a[r][col] / a[col][col];
      for (std::size_t c = 0; c < n; ++c)
        a[r][c] = a[r][c] - factor * a[col][c];
      b[r] = b[r] - factor * b[col];
    }
  }
  std::vector<Fraction> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

/// alpha for each F-class as the unique solution of: marks constant on every
/// F-class, c = 1 at the representative, c = 0 at every other representative.
/// Marks come from counting fixed cosets.
std::vector<std::vector<std::int64_t>> alpha_oracle(FusionData const &f)
{
  auto const &table = f.table();
  auto const n = table.size();
  auto s = oracle::elements_of(f.ring()->group());
  std::vector<std::vector<std::int64_t>> marks(n, std::vector<std::int64_t>(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p)
      marks[q][p] = oracle::fixed_cosets(s, oracle::to_set(table[q].representative),
                                         oracle::to_set(table[p].representative));

  std::vector<std::vector<Fraction>> rows;
  std::vector<std::size_t> rep_row;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<Fraction> row(n, Fraction(0));
    row[f.representative(k)] = Fraction(1);
    rep_row.push_back(rows.size());
    rows.push_back(row);
    auto const &m = f.members(k);
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<Fraction> eq(n);
      for (std::size_t p = 0; p < n; ++p)
        eq[p] = Fraction(marks[m[0]][p] - marks[m[i]][p]);
      rows.push_back(eq);
    }
  }
  REQUIRE(rows.size() == n);

  std::vector<std::vector<std::int64_t>> result;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<Fraction> rhs(n, Fraction(0));
    rhs[rep_row[k]] = Fraction(1);
    auto c = solve(rows, rhs);
    std::vector<std::int64_t> coeffs;
    for (auto const &x : c) {
      REQUIRE(x.den == 1);
      coeffs.push_back(x.num);
    }
    result.push_back(coeffs);
  }
  return result;
}

std::size_t fused_class(FusionData const &f)
{
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.members(k).size() == 2)
      return k;
  FAIL("no fused class");
  return 0;
}

} // namespace

TEST_CASE("F-stability in F_D8(S5)")
{
  auto f = system("S5", 2);
  auto ring = f.ring();
  auto const n = ring->rank();
  auto fused = fused_class(f);
  auto z = f.representative(fused);

  CHECK(is_f_stable(BurnsideElement::basis(ring, n - 1), f));
  CHECK(is_f_stable(BurnsideElement::basis(ring, 0), f));

  auto x = BurnsideElement::basis(ring, z);
  CHECK_FALSE(is_f_stable(x, f));
  auto v = find_stability_violation(x, f);
  REQUIRE(v);
  CHECK(v->first_mark == 4);
  CHECK(v->second_mark == 0);

  for (auto const &[name, p] : systems()) {
    auto g = system(name, p);
    CHECK(is_f_stable(BurnsideElement::basis(g.ring(), 0), g));
  }
}

TEST_CASE("restrictions of ambient sets are F-stable")
{
  Limits wide;
  wide.max_enumeration_order = 120;
  for (auto const &[name, p] : std::vector<std::pair<char const *, int>>{
           {"S3", 2}, {"S3", 3}, {"A4", 2}, {"S4", 2}, {"S5", 2}, {"S5", 3}}) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto f = system(name, p);
    for (auto const &h : enumerate_subgroups(f.ambient(), wide)) {
      auto x = restrict_ambient(h, f.sylow(), f.ring());
      CHECK(is_f_stable(x, f));
      auto lambda = decompose(x, f);
      for (auto l : lambda)
        CHECK(l >= 0);
    }
  }
}

TEST_CASE("stabilize")
{
  auto f = system("S5", 2);
  auto ring = f.ring();
  auto const n = ring->rank();
  auto fused = fused_class(f);
  auto z = f.representative(fused);
  auto const &m = f.members(fused);
  auto rs = m[0] == z ? m[1] : m[0];
  auto trivial = f.fclass_of(n - 1);
  std::vector<std::size_t> h{fused, trivial};

  auto x = BurnsideElement::basis(ring, z);
  // [Z] lies in H and carries an orbit, outside the lemma's hypotheses
  CHECK_THROWS_AS(stabilize(x, f, h), PreconditionError);

  auto relaxed = stabilize_relaxed(x, f, h);
  CHECK(relaxed.result == x + 2 * BurnsideElement::basis(ring, rs));
  bool saw = false;
  for (auto const &step : relaxed.steps)
    if (step.s_class == rs) {
      CHECK(step.lambda == 2);
      CHECK_FALSE(step.fully_normalized);
      saw = true;
    }
  CHECK(saw);

  auto top = BurnsideElement::basis(ring, 0);
  std::vector<std::size_t> proper;
  for (std::size_t k = 1; k < f.size(); ++k)
    proper.push_back(k);
  CHECK(stabilize(top, f, proper).result == top);

  auto regular = BurnsideElement::basis(ring, n - 1);
  CHECK(stabilize(regular, f, {}).result == regular);
  auto stable = 3 * top;
  CHECK(stabilize(stable, f, {trivial}).result == stable);

  // H must be closed under F-subconjugation
  CHECK_THROWS_AS(stabilize(top, f, {fused}), PreconditionError);
  // X must be stable outside H
  CHECK_THROWS_AS(stabilize(x, f, {trivial}), PreconditionError);
  CHECK_THROWS_AS(stabilize(top, f, {f.size()}), InputError);
}

TEST_CASE("alpha basis matches the linear characterization")
{
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto f = system(name, p);
    auto basis = alpha_basis(f);
    auto expected = alpha_oracle(f);
    REQUIRE(basis.alphas.size() == f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      CHECK(basis.alphas[k].coeffs() == expected[k]);
  }
}

TEST_CASE("alpha basis properties")
{
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto f = system(name, p);
    auto const &table = f.table();
    auto basis = alpha_basis(f);
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto const &a = basis.alphas[k];
      CHECK(a.is_set());
      CHECK(is_f_stable(a, f));
      auto marks = mark(a);
      for (std::size_t q = 0; q < table.size(); ++q) {
        auto qf = f.fclass_of(q);
        if (!f.subconjugate(qf, k))
          CHECK(marks[q] == 0);
        if (f.fully_normalized(q)) {
          if (qf == k) {
            CHECK(a[q] == 1);
            CHECK(marks[q] == static_cast<std::int64_t>(table[q].weyl_order()));
          } else {
            CHECK(a[q] == 0);
          }
        }
      }
    }
    for (auto const &step : basis.steps) {
      CHECK(step.lambda >= 0);
      if (step.fully_normalized)
        CHECK(step.lambda == 0);
    }
    CHECK(alpha_basis(f).alphas.front() == BurnsideElement::basis(f.ring(), 0));
    CHECK(alpha_basis(f).alphas.back() ==
          BurnsideElement::basis(f.ring(), table.size() - 1));

    auto mm = basis.mark_matrix();
    std::int64_t diag = 1;
    for (std::size_t r = 0; r < f.size(); ++r) {
      diag *= mm(r, r);
      CHECK(mm(r, r) == static_cast<std::int64_t>(table[f.representative(r)].weyl_order()));
      for (std::size_t c = r + 1; c < f.size(); ++c)
        CHECK(mm(r, c) == 0);
    }
    CHECK(diag == obstruction_order(f));
  }
}

TEST_CASE("alpha_Z in F_D8(S5)")
{
  auto f = system("S5", 2);
  auto ring = f.ring();
  auto fused = fused_class(f);
  auto z = f.representative(fused);
  auto const &m = f.members(fused);
  auto rs = m[0] == z ? m[1] : m[0];
  auto basis = alpha_basis(f);
  auto const &alpha = basis.alphas[fused];
  CHECK(alpha == BurnsideElement::basis(ring, z) + 2 * BurnsideElement::basis(ring, rs));
  auto marks = mark(alpha);
  CHECK(marks[z] == 4);
  CHECK(marks[rs] == 4);

  auto phi = phi_fusion(alpha, f);
  std::vector<std::int64_t> expected(f.size(), 0);
  expected[fused] = 4;
  expected[f.fclass_of(ring->rank() - 1)] = 12;
  CHECK(phi.marks == expected);
}

TEST_CASE("alpha does not depend on the representative choice")
{
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    auto f = system(name, p);
    auto reference = alpha_basis(f);
    auto choices = f.representative_choices();
    if (std::string(name) == "A4")
      CHECK(choices.size() == 3);
    for (auto const &c : choices) {
      auto g = f.with_representatives(c);
      auto other = alpha_basis(g);
      for (std::size_t k = 0; k < f.size(); ++k)
        CHECK(other.alphas[k] == reference.alphas[k]);
      std::mt19937_64 rng(5);
      std::uniform_int_distribution<int> dist(0, 6);
      std::vector<std::int64_t> lambda(f.size());
      for (auto &l : lambda)
        l = dist(rng);
      auto x = reconstruct(lambda, reference);
      CHECK(decompose(x, other) == lambda);
    }
  }
}

TEST_CASE("unique decomposition")
{
  std::mt19937_64 rng(20240101);
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    auto f = system(name, p);
    auto basis = alpha_basis(f);
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::vector<std::int64_t> unit(f.size(), 0);
      unit[k] = 1;
      CHECK(decompose(basis.alphas[k], basis) == unit);
    }
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> lambda(f.size(), 0);
      auto a = pick(rng);
      auto b = pick(rng);
      lambda[a] += 3;
      lambda[b] += 7;
      auto x = 3 * basis.alphas[a] + 7 * basis.alphas[b];
      CHECK(decompose(x, basis) == lambda);
      CHECK(decompose(x, f) == lambda);
    }
    std::uniform_int_distribution<int> signed_dist(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> lambda(f.size());
      for (auto &l : lambda)
        l = signed_dist(rng);
      CHECK(decompose(reconstruct(lambda, basis), basis) == lambda);
    }
  }

  auto f = system("S5", 2);
  auto restricted = restrict_ambient(sylow_subgroup(f.ambient(), 3), f.sylow(), f.ring());
  auto lambda = decompose(restricted, f);
  std::vector<std::int64_t> expected(f.size(), 0);
  expected[f.fclass_of(f.ring()->rank() - 1)] = 5;
  CHECK(lambda == expected);

  auto z = BurnsideElement::basis(f.ring(), f.representative(fused_class(f)));
  CHECK_THROWS_AS(decompose(z, f), StabilityError);
  CHECK_THROWS_AS(phi_fusion(z, f), StabilityError);
  CHECK_THROWS_AS(reconstruct({1, 2}, alpha_basis(f)), InputError);
}

TEST_CASE("F_S(S) degenerates to the Burnside ring of S")
{
  for (auto const &name : oracle::p_group_names()) {
    CAPTURE(std::string(name));
    auto f = system(name.c_str(), 2);
    auto ring = f.ring();
    auto basis = alpha_basis(f);
    for (std::size_t k = 0; k < f.size(); ++k)
      CHECK(basis.alphas[k] == BurnsideElement::basis(ring, k));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(0, 9);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> c(ring->rank());
      for (auto &x : c)
        x = dist(rng);
      CHECK(decompose(BurnsideElement(ring, c), f) == c);
    }
    CHECK(obstruction_order(f) == obstruction_order(*ring));
  }
}

TEST_CASE("F-marks and the fusion obstruction map")
{
  std::mt19937_64 rng(17);
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    auto f = system(name, p);
    auto ring = f.ring();
    auto basis = alpha_basis(f);
    for (auto const &a : basis.alphas)
      CHECK(psi_fusion(phi_fusion(a, f)).is_zero());

    auto ones = phi_fusion(BurnsideElement::basis(ring, 0), f);
    CHECK(ones.marks == std::vector<std::int64_t>(f.size(), 1));
    auto regular = phi_fusion(BurnsideElement::basis(ring, ring->rank() - 1), f);
    CHECK(regular.marks.back() == static_cast<std::int64_t>(ring->group().order()));
  }

  // F_S(S) reduces to the group map
  for (auto const &name : oracle::p_group_names()) {
    auto f = system(name.c_str(), 2);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> xi(f.size());
      for (auto &x : xi)
        x = dist(rng);
      CHECK(psi_fusion(FMarkVector{f, xi}).residues ==
            psi_group(MarkVector(f.ring(), xi)).residues);
    }
  }

  // unit vector at [1]_F in F_D8(S5): only s = 1 gives a trivial <s>
  auto f = system("S5", 2);
  std::vector<std::int64_t> unit(f.size(), 0);
  unit.back() = 1;
  auto obs = psi_fusion(FMarkVector{f, unit});
  std::vector<std::int64_t> expected(f.size(), 0);
  expected.back() = 1;
  CHECK(obs.residues == expected);
  CHECK(obs.moduli.back() == 8);
  CHECK_THROWS_AS(psi_fusion(FMarkVector{f, {1}}), InputError);
}

TEST_CASE("fusion short exact sequence")
{
  for (auto const &[name, p] : systems()) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto f = system(name, p);
    auto report = verify_ses_fusion(f);
    for (auto const &c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(report.obstruction_order == obstruction_order(f));
  }
  CHECK(system("S3", 2).size() == 2);
}
