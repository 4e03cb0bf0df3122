#include "fusionburnside/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

namespace {

class GroupConjugation final : public ConjugationOracle
{
public:
  GroupConjugation(Group ambient, Subgroup sylow)
  : ambient_(std::move(ambient))
  , sylow_(std::move(sylow))
  , local_(ambient_.order(), -1)
  {
    for (std::size_t i = 0; i < sylow_.order(); ++i)
      local_[static_cast<std::size_t>(sylow_.elements()[i])] = static_cast<Index>(i);
  }

  std::vector<Index> transporter(Subgroup const &q, Subgroup const &p) const override
  {
    return fusionburnside::transporter(ambient_, lift(q), lift(p));
  }

  Permutation const &element(Index g) const override { return ambient_.element(g); }

  std::optional<Index> conjugate(Index g, Index x) const override
  {
    Index y = ambient_.conj(g, sylow_.elements()[static_cast<std::size_t>(x)]);
    Index local = local_[static_cast<std::size_t>(y)];
    if (local < 0)
      return std::nullopt;
    return local;
  }

private:
  Subgroup lift(Subgroup const &h) const
  {
    std::vector<Index> els;
    for (Index x : h.elements())
      els.push_back(sylow_.elements()[static_cast<std::size_t>(x)]);
    return Subgroup::from_elements(ambient_, std::move(els));
  }

  Group ambient_;
  Subgroup sylow_;
  std::vector<Index> local_;
};

struct UnionFind
{
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

} // namespace

struct FusionData::Data
{
  Group ambient;
  Subgroup sylow;
  int prime = 0;
  RingPtr ring;
  std::shared_ptr<ConjugationOracle const> oracle;

  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> fclass_of;
  std::vector<std::size_t> reps;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> subconjugate;

  Data(Group g, Subgroup s) : ambient(std::move(g)), sylow(std::move(s)) {}
};

Group const &FusionData::ambient() const { return data_->ambient; }
Subgroup const &FusionData::sylow() const { return data_->sylow; }
int FusionData::prime() const { return data_->prime; }
RingPtr const &FusionData::ring() const { return data_->ring; }
SubgroupClassTable const &FusionData::table() const { return data_->ring->table(); }
std::size_t FusionData::size() const { return data_->members.size(); }

std::vector<std::size_t> const &FusionData::members(std::size_t f) const
{ return data_->members.at(f); }

std::size_t FusionData::fclass_of(std::size_t s_class) const
{ return data_->fclass_of.at(s_class); }

std::size_t FusionData::representative(std::size_t f) const
{ return data_->reps.at(f); }

std::string const &FusionData::label(std::size_t f) const
{ return data_->labels.at(f); }

bool FusionData::subconjugate(std::size_t qf, std::size_t pf) const
{ return data_->subconjugate.at(qf).at(pf); }

bool FusionData::fully_normalized(std::size_t s_class) const
{
  auto const &t = table();
  auto const f = fclass_of(s_class);
  return t[s_class].normalizer_order == t[representative(f)].normalizer_order;
}

ConjugationOracle const &FusionData::oracle() const { return *data_->oracle; }

FusionData FusionData::with_representatives(std::vector<std::size_t> const &reps) const
{
  if (reps.size() != size())
    throw PreconditionError("need one representative per F-class");
  for (std::size_t f = 0; f < size(); ++f) {
    auto const &m = members(f);
    if (std::find(m.begin(), m.end(), reps[f]) == m.end())
      throw PreconditionError("representative " + std::to_string(reps[f]) +
                              " is not in F-class " + label(f));
    if (!fully_normalized(reps[f]))
      throw PreconditionError("representative " + table().label(reps[f]) +
                              " is not fully normalized");
  }
  auto data = std::make_shared<Data>(*data_);
  data->reps = reps;
  FusionData r;
  r.data_ = std::move(data);
  return r;
}

std::vector<std::vector<std::size_t>> FusionData::representative_choices() const
{
  std::vector<std::vector<std::size_t>> options(size());
  for (std::size_t f = 0; f < size(); ++f)
    for (auto s : members(f))
      if (fully_normalized(s))
        options[f].push_back(s);

  std::vector<std::vector<std::size_t>> result{{}};
  for (auto const &opts : options) {
    std::vector<std::vector<std::size_t>> next;
    for (auto const &prefix : result)
      for (auto s : opts) {
        auto v = prefix;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    result = std::move(next);
  }
  return result;
}

FusionData fusion_from_group(Group const &g, int p, Limits const &limits)
{
  Subgroup s = sylow_subgroup(g, p);
  auto const index = static_cast<std::int64_t>(g.order() / s.order());
  if (g.order() % s.order() != 0 || index % p == 0)
    throw InvariantError("computed subgroup is not Sylow");

  auto data = std::make_shared<FusionData::Data>(g, s);
  data->prime = p;
  data->ring = BurnsideRing::create(s.as_group(), limits);
  data->oracle = std::make_shared<GroupConjugation>(g, s);

  auto const &table = data->ring->table();
  auto const &oracle = *data->oracle;
  auto const n = table.size();

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto const &rep = table[i].representative;
    for (Index x = 0; static_cast<std::size_t>(x) < g.order(); ++x) {
      std::vector<Index> image;
      image.reserve(rep.order());
      bool inside = true;
      for (Index e : rep.elements()) {
        auto y = oracle.conjugate(x, e);
        if (!y) {
          inside = false;
          break;
        }
        image.push_back(*y);
      }
      if (!inside)
        continue;
      std::sort(image.begin(), image.end());
      auto j = table.find_class(image);
      if (!j)
        throw InvariantError("conjugate subgroup missing from class table");
      uf.unite(i, *j);
    }
  }

  // F-classes ordered by their first member, so by decreasing order.
  std::map<std::size_t, std::size_t> root_to_f;
  data->fclass_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto root = uf.find(i);
    auto [it, inserted] = root_to_f.emplace(root, data->members.size());
    if (inserted)
      data->members.emplace_back();
    data->members[it->second].push_back(i);
    data->fclass_of[i] = it->second;
  }

  for (auto const &m : data->members) {
    std::size_t best = m.front();
    for (auto s_class : m)
      if (table[s_class].normalizer_order > table[best].normalizer_order)
        best = s_class;
    data->reps.push_back(best);
    data->labels.push_back(table.label(m.front()));
  }

  auto const &marks = data->ring->marks();
  auto const nf = data->members.size();
  data->subconjugate.assign(nf, std::vector<bool>(nf, false));
  for (std::size_t qf = 0; qf < nf; ++qf)
    for (std::size_t pf = 0; pf < nf; ++pf)
      for (auto q : data->members[qf])
        for (auto pc : data->members[pf])
          if (marks(q, pc) != 0)
            data->subconjugate[qf][pf] = true;

  FusionData f;
  f.data_ = std::move(data);
  return f;
}

std::size_t fully_normalized_rep(FusionData const &f, std::size_t fclass)
{
  if (fclass >= f.size())
    throw InputError("F-class index out of range");
  return f.representative(fclass);
}

ConjugationWitness normalizer_lift(FusionData const &f, Subgroup const &q,
                                   Subgroup const &p)
{
  Group const &s = f.ring()->group();
  auto const &table = f.table();
  auto const qc = table.class_of(q);
  auto const pc = table.class_of(p);
  if (f.fclass_of(qc) != f.fclass_of(pc))
    throw PreconditionError("subgroups are not F-conjugate");
  if (!f.fully_normalized(pc))
    throw PreconditionError("target subgroup is not fully normalized");

  Subgroup const nq = normalizer(s, q);
  Subgroup const np = normalizer(s, p);
  auto const &oracle = f.oracle();

  for (Index g : oracle.transporter(q, p)) {
    bool lifts = true;
    for (Index x : nq.elements()) {
      auto y = oracle.conjugate(g, x);
      if (!y || !np.contains(*y)) {
        lifts = false;
        break;
      }
    }
    if (lifts)
      return ConjugationWitness{oracle.element(g), g, q, p};
  }
  throw InvariantError("saturation witness missing: no conjugation maps N_S(Q) "
                       "into N_S(P)");
}

} // namespace fusionburnside
