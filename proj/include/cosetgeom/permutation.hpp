#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cosetgeom {

/// A permutation of {0..degree-1}. Text I/O uses 1-based disjoint cycles.
/// Products act on the right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  /// Parses "(1,2,3)(4,5)"; "()" or "" is the identity. The degree is the
  /// larger of `degree` and the largest point mentioned.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  /// Cycle notation with ", " separators and fixed points omitted; "()" for
  /// the identity.
  std::string to_cycles() const;

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_even() const;
  std::uint64_t order() const;
  /// Smallest moved point, or degree() for the identity.
  std::uint32_t first_moved() const noexcept;

  Permutation inverse() const;
  Permutation pow(long long k) const;
  /// Same permutation on a larger point set.
  Permutation extended(std::size_t degree) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// a^-1 b a
Permutation conjugate(const Permutation& b, const Permutation& a);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cosetgeom
