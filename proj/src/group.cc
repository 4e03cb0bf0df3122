#include "fusionburnside/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

namespace {

// Products are tabulated below this order; above it they go through
// permutation composition and a binary search.
constexpr std::size_t kTableThreshold = 1024;

} // namespace

struct Group::Data
{
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::vector<Index> inverse;
  std::vector<Index> table;
};

Group Group::generate(int degree, std::vector<Permutation> generators,
                      Limits const &limits)
{
  if (degree <= 0)
    throw InputError("group degree must be positive");
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (auto const &g : generators) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > limits.max_group_order)
          throw SizeError("group order exceeds cap of " +
                          std::to_string(limits.max_group_order));
        queue.push_back(std::move(y));
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements.assign(seen.begin(), seen.end());

  auto const n = data->elements.size();
  auto lookup = [&](Permutation const &p) {
    auto it = std::lower_bound(data->elements.begin(), data->elements.end(), p);
    return static_cast<Index>(it - data->elements.begin());
  };

  data->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    data->inverse[i] = lookup(data->elements[i].inverse());

  if (n <= kTableThreshold) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data->table[a * n + b] = lookup(data->elements[a] * data->elements[b]);
  }

  Group g;
  g.data_ = std::move(data);
  return g;
}

int Group::degree() const { return data_->degree; }

std::size_t Group::order() const { return data_->elements.size(); }

std::vector<Permutation> const &Group::generators() const
{ return data_->generators; }

std::span<Permutation const> Group::elements() const
{ return data_->elements; }

Permutation const &Group::element(Index i) const
{ return data_->elements[static_cast<std::size_t>(i)]; }

Index Group::mul(Index a, Index b) const
{
  auto const n = data_->elements.size();
  if (!data_->table.empty())
    return data_->table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  return index_of(element(a) * element(b));
}

Index Group::inv(Index a) const
{ return data_->inverse[static_cast<std::size_t>(a)]; }

Index Group::conj(Index g, Index x) const
{ return mul(mul(g, x), inv(g)); }

Index Group::power(Index x, std::int64_t k) const
{
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Index r = identity();
  Index base = x;
  while (k > 0) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int Group::element_order(Index x) const
{
  int k = 1;
  for (Index y = x; y != identity(); y = mul(y, x))
    ++k;
  return k;
}

std::optional<Index> Group::find(Permutation const &p) const
{
  auto const &els = data_->elements;
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p)
    return std::nullopt;
  return static_cast<Index>(it - els.begin());
}

Index Group::index_of(Permutation const &p) const
{
  auto i = find(p);
  if (!i)
    throw InputError("permutation " + p.to_cycle_string() + " is not in the group");
  return *i;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Index> closure(Group const &g, std::span<Index const> generators,
                           std::vector<bool> &member)
{
  member.assign(g.order(), false);
  std::vector<Index> elements{Group::identity()};
  member[0] = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Index x = elements[i];
    for (Index s : generators) {
      Index y = g.mul(x, s);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = true;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// Greedy generating set: scan elements in order, keep any not yet generated.
std::vector<Index> small_generating_set(Subgroup const &h)
{
  Group const &g = h.parent();
  std::vector<Index> gens;
  std::vector<bool> member;
  std::size_t covered = 1;
  std::vector<bool> in_span(g.order(), false);
  in_span[0] = true;
  for (Index x : h.elements()) {
    if (covered == h.order())
      break;
    if (in_span[static_cast<std::size_t>(x)])
      continue;
    gens.push_back(x);
    auto span = closure(g, gens, member);
    covered = span.size();
    in_span = std::move(member);
  }
  return gens;
}

void require_same_parent(Group const &g, Subgroup const &p)
{
  if (!p.parent().same_as(g))
    throw InputError("subgroup does not belong to the given group");
}

} // namespace

Subgroup::Subgroup(Group parent, std::vector<Index> elements)
: parent_(std::move(parent))
, elements_(std::move(elements))
, member_(parent_.order(), false)
{
  for (Index x : elements_)
    member_[static_cast<std::size_t>(x)] = true;
}

Subgroup Subgroup::generated(Group const &parent, std::span<Index const> generators)
{
  for (Index x : generators)
    if (x < 0 || static_cast<std::size_t>(x) >= parent.order())
      throw InputError("generator index out of range");
  std::vector<bool> member;
  auto elements = closure(parent, generators, member);
  return Subgroup(parent, std::move(elements));
}

Subgroup Subgroup::from_elements(Group const &parent, std::vector<Index> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Index x : elements)
    if (x < 0 || static_cast<std::size_t>(x) >= parent.order())
      throw InputError("element index out of range");
  if (elements.empty() || elements.front() != Group::identity())
    throw InputError("subgroup must contain the identity");

  Subgroup h(parent, std::move(elements));
  auto gens = small_generating_set(h);
  std::vector<bool> member;
  if (closure(parent, gens, member) != h.elements_)
    throw InputError("element list is not closed under multiplication");
  return h;
}

Subgroup Subgroup::whole(Group const &parent)
{
  std::vector<Index> all(parent.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(Group const &parent)
{ return Subgroup(parent, {Group::identity()}); }

bool Subgroup::is_subgroup_of(Subgroup const &other) const
{
  if (!parent_.same_as(other.parent_))
    return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Index x) { return other.contains(x); });
}

Subgroup Subgroup::conjugate(Index g) const
{
  std::vector<Index> els;
  els.reserve(elements_.size());
  for (Index x : elements_)
    els.push_back(parent_.conj(g, x));
  std::sort(els.begin(), els.end());
  return Subgroup(parent_, std::move(els));
}

Subgroup Subgroup::join(Index x) const
{
  if (contains(x))
    return *this;
  auto gens = small_generating_set(*this);
  gens.push_back(x);
  return generated(parent_, gens);
}

Group Subgroup::as_group() const
{
  std::vector<Permutation> gens;
  for (Index x : small_generating_set(*this))
    gens.push_back(parent_.element(x));
  Limits limits;
  limits.max_group_order = std::max(limits.max_group_order, order());
  return Group::generate(parent_.degree(), std::move(gens), limits);
}

bool Subgroup::operator==(Subgroup const &other) const
{ return parent_.same_as(other.parent_) && elements_ == other.elements_; }

// ---------------------------------------------------------------------------

namespace {

template <typename Pred>
Subgroup filter_group(Group const &g, Pred pred)
{
  std::vector<Index> els;
  for (Index x = 0; static_cast<std::size_t>(x) < g.order(); ++x)
    if (pred(x))
      els.push_back(x);
  return Subgroup::from_elements(g, std::move(els));
}

} // namespace

Subgroup normalizer(Group const &g, Subgroup const &p)
{
  require_same_parent(g, p);
  auto gens = small_generating_set(p);
  return filter_group(g, [&](Index x) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](Index s) { return p.contains(g.conj(x, s)); });
  });
}

Subgroup centralizer(Group const &g, Subgroup const &p)
{
  require_same_parent(g, p);
  auto gens = small_generating_set(p);
  return filter_group(g, [&](Index x) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](Index s) { return g.mul(x, s) == g.mul(s, x); });
  });
}

std::vector<Index> transporter(Group const &g, Subgroup const &q, Subgroup const &p)
{
  require_same_parent(g, q);
  require_same_parent(g, p);
  std::vector<Index> result;
  if (q.order() > p.order() || p.order() % q.order() != 0)
    return result;
  auto gens = small_generating_set(q);
  for (Index x = 0; static_cast<std::size_t>(x) < g.order(); ++x)
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Index s) { return p.contains(g.conj(x, s)); }))
      result.push_back(x);
  return result;
}

bool is_prime(std::int64_t n)
{
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::int64_t p_part(std::int64_t n, std::int64_t p)
{
  std::int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

Subgroup sylow_subgroup(Group const &g, int p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");

  auto const target = static_cast<std::size_t>(
    p_part(static_cast<std::int64_t>(g.order()), p));
  Subgroup current = Subgroup::trivial(g);

  // A p-subgroup P with p not dividing [N_G(P) : P] is Sylow, and otherwise
  // N_G(P)/P has an element of order p to extend by.
  while (current.order() < target) {
    Subgroup n = normalizer(g, current);
    std::optional<Index> step;
    for (Index x : n.elements()) {
      if (!current.contains(x) && current.contains(g.power(x, p))) {
        step = x;
        break;
      }
    }
    if (!step)
      throw InvariantError("no p-element in normalizer quotient");
    current = current.join(*step);
  }
  return current;
}

std::vector<Subgroup> enumerate_subgroups(Group const &s, Limits const &limits)
{
  if (s.order() > limits.max_enumeration_order)
    throw SizeError("subgroup enumeration requires order <= " +
                    std::to_string(limits.max_enumeration_order) + ", got " +
                    std::to_string(s.order()));

  struct Found
  {
    Subgroup subgroup;
    std::vector<Index> generators;
  };
  std::map<std::vector<Index>, Found> found;
  std::vector<std::vector<Index>> work;

  auto add = [&](std::vector<Index> gens) {
    Subgroup h = Subgroup::generated(s, gens);
    auto key = h.key();
    if (found.count(key))
      return;
    if (found.size() >= limits.max_subgroups)
      throw SizeError("subgroup count exceeds cap of " +
                      std::to_string(limits.max_subgroups));
    found.emplace(key, Found{std::move(h), std::move(gens)});
    work.push_back(std::move(key));
  };

  for (Index x = 0; static_cast<std::size_t>(x) < s.order(); ++x)
    add(x == Group::identity() ? std::vector<Index>{} : std::vector<Index>{x});

  while (!work.empty()) {
    auto key = std::move(work.back());
    work.pop_back();
    Found const &f = found.at(key);
    Subgroup h = f.subgroup;
    std::vector<Index> gens = f.generators;
    for (Index x = 0; static_cast<std::size_t>(x) < s.order(); ++x) {
      if (h.contains(x))
        continue;
      auto extended = gens;
      extended.push_back(x);
      add(std::move(extended));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto &[key, f] : found)
    result.push_back(std::move(f.subgroup));
  return result;
}

SmallIndexScan scan_small_index_subgroups(Group const &g, std::size_t max_index,
                                          Limits const &limits)
{
  SmallIndexScan scan;
  for (std::size_t k = 1; k <= max_index; ++k)
    if (g.order() % k == 0)
      scan.feasible.push_back(k);

  Limits wide = limits;
  wide.max_enumeration_order = std::max(limits.max_enumeration_order, g.order());
  std::set<std::size_t> realized;
  for (auto const &h : enumerate_subgroups(g, wide)) {
    auto k = g.order() / h.order();
    if (k <= max_index)
      realized.insert(k);
  }
  scan.realized.assign(realized.begin(), realized.end());
  return scan;
}

} // namespace fusionburnside
