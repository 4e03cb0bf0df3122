#include "fusionburnside/permutation.hpp"

#include <cctype>
#include <sstream>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

Permutation::Permutation(std::vector<int> images)
: images_(std::move(images))
{
  int const n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n)
      throw InputError("permutation image " + std::to_string(x + 1) +
                       " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x)])
      throw InputError("permutation image " + std::to_string(x + 1) +
                       " repeated");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree)
{
  if (degree < 0)
    throw InputError("negative degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    images[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree)
{
  if (degree <= 0)
    throw InputError("degree must be positive");

  std::vector<int> images = identity(degree).images_;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::vector<int> cycle;
  bool in_cycle = false;

  auto close_cycle = [&] {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    cycle.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (in_cycle)
        throw InputError("nested '(' in cycle notation");
      in_cycle = true;
      ++i;
    } else if (c == ')') {
      if (!in_cycle)
        throw InputError("unbalanced ')' in cycle notation");
      close_cycle();
      in_cycle = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle)
        throw InputError("point outside of a cycle");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree)
          break;
        ++i;
      }
      if (value < 1 || value > degree)
        throw InputError("point out of range 1.." + std::to_string(degree) +
                         " in '" + std::string(text) + "'");
      int point = static_cast<int>(value) - 1;
      if (used[static_cast<std::size_t>(point)])
        throw InputError("point " + std::to_string(value) +
                         " repeated in '" + std::string(text) + "'");
      used[static_cast<std::size_t>(point)] = true;
      cycle.push_back(point);
    } else {
      throw InputError(std::string("unexpected character '") + c +
                       "' in cycle notation");
    }
  }
  if (in_cycle)
    throw InputError("unterminated cycle in '" + std::string(text) + "'");

  return Permutation(std::move(images));
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw InputError("composing permutations of different degree");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  return r;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return r;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x))
      return false;
  return true;
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start))
      continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        os << ' ';
      os << x + 1;
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

} // namespace fusionburnside
