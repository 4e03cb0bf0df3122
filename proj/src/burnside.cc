#include "fusionburnside/burnside.hpp"

#include <algorithm>
#include <sstream>

#include "exactness.hpp"
#include "fusionburnside/checked.hpp"
#include "fusionburnside/error.hpp"

namespace fusionburnside {

IntMatrix mark_matrix(SubgroupClassTable const &table)
{
  Group const &s = table.group();
  IntMatrix m(table.size());
  for (std::size_t q = 0; q < table.size(); ++q) {
    for (std::size_t p = 0; p < table.size(); ++p) {
      auto const &qrep = table[q].representative;
      auto const &prep = table[p].representative;
      auto const count = static_cast<std::int64_t>(transporter(s, qrep, prep).size());
      auto const order = static_cast<std::int64_t>(prep.order());
      if (count % order != 0)
        throw InvariantError("transporter size not divisible by |P|");
      m(q, p) = count / order;
    }
  }
  return m;
}

RingPtr BurnsideRing::create(Group const &s, Limits const &limits)
{
  std::shared_ptr<BurnsideRing> ring(new BurnsideRing());
  ring->table_ = SubgroupClassTable::build(s, limits);
  ring->marks_ = mark_matrix(ring->table_);

  auto const &table = ring->table_;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const &c = table[i];
    ring->weyl_.push_back(static_cast<std::int64_t>(c.weyl_order()));
    if (ring->marks_(i, i) != ring->weyl_.back())
      throw InvariantError("diagonal mark differs from Weyl group order");

    Subgroup const &p = c.representative;
    Subgroup n = normalizer(s, p);
    std::vector<bool> covered(s.order(), false);
    std::vector<std::size_t> terms;
    for (Index x : n.elements()) {
      if (covered[static_cast<std::size_t>(x)])
        continue;
      for (Index y : p.elements())
        covered[static_cast<std::size_t>(s.mul(x, y))] = true;
      terms.push_back(table.class_of(p.join(x)));
    }
    ring->psi_terms_.push_back(std::move(terms));
  }
  return ring;
}

std::vector<std::int64_t> BurnsideRing::basis_product(std::size_t i, std::size_t j) const
{
  Group const &s = group();
  Subgroup const &p = table_[i].representative;
  Subgroup const &q = table_[j].representative;

  std::vector<std::int64_t> result(rank(), 0);
  std::vector<bool> covered(s.order(), false);
  for (Index x = 0; static_cast<std::size_t>(x) < s.order(); ++x) {
    if (covered[static_cast<std::size_t>(x)])
      continue;
    for (Index a : p.elements())
      for (Index b : q.elements())
        covered[static_cast<std::size_t>(s.mul(s.mul(a, x), b))] = true;

    Subgroup conj = q.conjugate(x);
    std::vector<Index> meet;
    std::set_intersection(p.elements().begin(), p.elements().end(),
                          conj.elements().begin(), conj.elements().end(),
                          std::back_inserter(meet));
    auto k = table_.find_class(meet);
    if (!k)
      throw InvariantError("intersection missing from class table");
    ++result[*k];
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_ring(RingPtr const &a, RingPtr const &b)
{
  if (a != b)
    throw InputError("elements belong to different Burnside rings");
}

} // namespace

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<std::int64_t> coeffs)
: ring_(std::move(ring))
, coeffs_(std::move(coeffs))
{
  if (!ring_)
    throw InputError("null Burnside ring");
  if (coeffs_.size() != ring_->rank())
    throw InputError("expected " + std::to_string(ring_->rank()) +
                     " orbit coefficients, got " + std::to_string(coeffs_.size()));
}

BurnsideElement BurnsideElement::zero(RingPtr ring)
{
  auto n = ring->rank();
  return BurnsideElement(std::move(ring), std::vector<std::int64_t>(n, 0));
}

BurnsideElement BurnsideElement::basis(RingPtr ring, std::size_t i)
{
  auto x = zero(std::move(ring));
  x.coeffs_.at(i) = 1;
  return x;
}

bool BurnsideElement::is_set() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

bool BurnsideElement::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

BurnsideElement &BurnsideElement::operator+=(BurnsideElement const &rhs)
{
  require_same_ring(ring_, rhs.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

BurnsideElement &BurnsideElement::operator-=(BurnsideElement const &rhs)
{
  require_same_ring(ring_, rhs.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked_sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

BurnsideElement operator*(std::int64_t k, BurnsideElement x)
{
  for (auto &c : x.coeffs_)
    c = checked_mul(k, c);
  return x;
}

bool BurnsideElement::operator==(BurnsideElement const &rhs) const
{ return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_; }

std::string BurnsideElement::to_string(std::string const &name,
                                       std::string const &times) const
{
  auto const &table = ring_->table();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    auto c = coeffs_[i];
    if (c == 0)
      continue;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << '-';
    auto magnitude = c < 0 ? -c : c;
    if (magnitude != 1)
      os << magnitude << times;
    std::string sub = i == 0 ? name
                    : i + 1 == coeffs_.size() ? std::string("1")
                    : table.label(i);
    os << '[' << name << '/' << sub << ']';
    first = false;
  }
  if (first)
    return "0";
  return os.str();
}

MarkVector::MarkVector(RingPtr ring, std::vector<std::int64_t> marks)
: ring_(std::move(ring))
, marks_(std::move(marks))
{
  if (!ring_)
    throw InputError("null Burnside ring");
  if (marks_.size() != ring_->rank())
    throw InputError("expected " + std::to_string(ring_->rank()) +
                     " marks, got " + std::to_string(marks_.size()));
}

bool MarkVector::operator==(MarkVector const &rhs) const
{ return ring_ == rhs.ring_ && marks_ == rhs.marks_; }

bool ObstructionVector::is_zero() const
{
  return std::all_of(residues.begin(), residues.end(), [](auto r) { return r == 0; });
}

// ---------------------------------------------------------------------------

MarkVector mark(BurnsideElement const &x)
{
  auto const &m = x.ring()->marks();
  std::vector<std::int64_t> marks(x.size(), 0);
  for (std::size_t q = 0; q < x.size(); ++q)
    for (std::size_t p = 0; p <= q; ++p)
      marks[q] = checked_add(marks[q], checked_mul(m(q, p), x[p]));
  return MarkVector(x.ring(), std::move(marks));
}

BurnsideElement marks_to_orbits(MarkVector const &marks)
{
  auto const &ring = marks.ring();
  auto const &m = ring->marks();
  std::vector<std::int64_t> c(marks.size(), 0);
  for (std::size_t q = 0; q < marks.size(); ++q) {
    std::int64_t rest = marks[q];
    for (std::size_t p = 0; p < q; ++p)
      rest = checked_sub(rest, checked_mul(m(q, p), c[p]));
    if (rest % m(q, q) != 0)
      throw NotInImageError("mark vector not in the image of the mark homomorphism "
                            "(non-integral orbit count at class " +
                            ring->table().label(q) + ")");
    c[q] = rest / m(q, q);
  }
  return BurnsideElement(ring, std::move(c));
}

BurnsideElement multiply(BurnsideElement const &x, BurnsideElement const &y)
{
  require_same_ring(x.ring(), y.ring());
  auto const &ring = *x.ring();
  std::vector<std::int64_t> result(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0)
        continue;
      auto const k = checked_mul(x[i], y[j]);
      auto const product = ring.basis_product(i, j);
      for (std::size_t t = 0; t < result.size(); ++t)
        result[t] = checked_add(result[t], checked_mul(k, product[t]));
    }
  }
  return BurnsideElement(x.ring(), std::move(result));
}

ObstructionVector psi_group(MarkVector const &marks)
{
  auto const &ring = *marks.ring();
  ObstructionVector obs;
  obs.moduli = ring.weyl_orders();
  for (std::size_t i = 0; i < marks.size(); ++i) {
    std::int64_t sum = 0;
    for (std::size_t term : ring.psi_terms(i))
      sum = checked_add(sum, marks[term]);
    obs.residues.push_back(mod_floor(sum, obs.moduli[i]));
  }
  return obs;
}

std::int64_t obstruction_order(BurnsideRing const &ring)
{
  std::int64_t order = 1;
  for (auto w : ring.weyl_orders())
    order = checked_mul(order, w);
  return order;
}

BurnsideElement restrict_ambient(Subgroup const &h, Subgroup const &s, RingPtr ring)
{
  Group const &g = h.parent();
  if (!s.parent().same_as(g))
    throw InputError("H and S must be subgroups of the same group");
  Group const &sg = ring->group();
  if (sg.order() != s.order() || sg.degree() != g.degree())
    throw InputError("Burnside ring was not built from S");
  for (std::size_t i = 0; i < s.order(); ++i)
    if (sg.element(static_cast<Index>(i)) != g.element(s.elements()[i]))
      throw InputError("Burnside ring was not built from S");

  // Left cosets gH, numbered in order of their least element.
  std::vector<std::int32_t> coset(g.order(), -1);
  std::vector<Index> rep;
  for (Index x = 0; static_cast<std::size_t>(x) < g.order(); ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0)
      continue;
    auto id = static_cast<std::int32_t>(rep.size());
    rep.push_back(x);
    for (Index y : h.elements())
      coset[static_cast<std::size_t>(g.mul(x, y))] = id;
  }

  auto const &table = ring->table();
  std::vector<std::int64_t> marks(table.size(), 0);
  for (std::size_t q = 0; q < table.size(); ++q) {
    auto const &qrep = table[q].representative;
    for (std::size_t c = 0; c < rep.size(); ++c) {
      bool fixed = true;
      for (Index local : qrep.elements()) {
        Index e = s.elements()[static_cast<std::size_t>(local)];
        if (coset[static_cast<std::size_t>(g.mul(e, rep[c]))] !=
            static_cast<std::int32_t>(c)) {
          fixed = false;
          break;
        }
      }
      if (fixed)
        ++marks[q];
    }
  }
  return marks_to_orbits(MarkVector(ring, std::move(marks)));
}

// ---------------------------------------------------------------------------

bool SesReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckResult const &c) { return c.passed; });
}

SesReport verify_ses_group(RingPtr const &ring, SesOptions const &options)
{
  SesReport report;
  report.obstruction_order = obstruction_order(*ring);
  auto const n = ring->rank();

  CheckResult composite{"Psi o Phi = 0 on every [S/P]", true, ""};
  for (std::size_t p = 0; p < n; ++p) {
    auto obs = psi_group(mark(BurnsideElement::basis(ring, p)));
    if (!obs.is_zero()) {
      composite.passed = false;
      composite.detail = "nonzero at [S/" + ring->table().label(p) + "]: " +
                         detail::format_vector(obs.residues);
      break;
    }
  }
  report.checks.push_back(composite);

  CheckResult surjective{"Psi unit lower triangular (surjective)", true, ""};
  for (std::size_t i = 0; i < n && surjective.passed; ++i) {
    std::vector<std::int64_t> row(n, 0);
    for (auto t : ring->psi_terms(i))
      ++row[t];
    if (row[i] != 1) {
      surjective.passed = false;
      surjective.detail = "diagonal coefficient " + std::to_string(row[i]) +
                          " at " + ring->table().label(i);
    }
    for (std::size_t j = i + 1; j < n && surjective.passed; ++j)
      if (row[j] != 0) {
        surjective.passed = false;
        surjective.detail = "entry above diagonal at (" + ring->table().label(i) +
                            ", " + ring->table().label(j) + ")";
      }
  }
  report.checks.push_back(surjective);

  detail::ExactnessProblem problem;
  problem.moduli = ring->weyl_orders();
  problem.psi = [&](detail::Vec const &xi) {
    return psi_group(MarkVector(ring, xi)).residues;
  };
  problem.in_image = [&](detail::Vec const &xi) {
    try {
      auto x = marks_to_orbits(MarkVector(ring, xi));
      if (mark(x).marks() != xi)
        throw InvariantError("mark roundtrip failed");
      return true;
    } catch (NotInImageError const &) {
      return false;
    }
  };
  detail::check_exactness(problem, options, report);
  return report;
}

} // namespace fusionburnside
