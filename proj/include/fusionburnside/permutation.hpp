#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fusionburnside {

/// A bijection of {0, ..., n-1}. Points are 1-based only in text form.
///
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation
{
public:
  Permutation() = default;

  /// Throws InputError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)".
  /// An empty string or "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::vector<int> const &images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based disjoint-cycle form; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<int> images_;
};

} // namespace fusionburnside
