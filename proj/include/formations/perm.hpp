// Permutations on {1..n}, stored as 0-based image vectors.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "formations/errors.hpp"

namespace formations {

using Point = std::uint16_t;

class Permutation {
 public:
  // Identity on `degree` points. Degree must be at least 1.
  explicit Permutation(std::size_t degree);

  // `images[x]` is the image of point x (0-based). Must be a bijection.
  static Permutation from_images(std::vector<Point> images);

  // Convenience for tests and I/O: images given 1-based.
  static Permutation from_one_based(const std::vector<int>& images);

  std::size_t degree() const { return images_.size(); }
  Point apply(Point x) const { return images_[x]; }

  // Left-to-right composition: (a * b) applies a first, then b.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  // Multiplicative order, via lcm of cycle lengths.
  std::uint64_t order() const;

  const std::vector<Point>& images() const { return images_; }
  std::vector<int> one_based_images() const;

  // Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) = default;

 private:
  Permutation() = default;
  std::vector<Point> images_;
};

// g^-1 * a * g.
Permutation conjugate(const Permutation& a, const Permutation& g);
// a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

// Parses cycle notation over 1-based points, e.g. "(1 2 3)(4 5)".
// "()" denotes the identity. Accepts spaces or commas between points.
// Throws ParseError for malformed text, repeated points, or points outside
// 1..degree.
Permutation parse_permutation(std::string_view text, std::size_t degree);

}  // namespace formations
