#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tropgroups {

// A permutation of {0, ..., n-1}.  Printed and parsed 1-indexed in cycle
// notation, e.g. "(1,3,2)(5,10,7)".
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t n);
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);
  // Parses cycle notation with 1-indexed points; "()" is the identity.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // non-trivial cycles only
  std::string to_string() const;

  // Apply a first, then b.
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace tropgroups

template <>
struct std::hash<tropgroups::Perm> {
  std::size_t operator()(const tropgroups::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};
