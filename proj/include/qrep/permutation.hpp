#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

using Element = std::size_t;

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Element> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Element y : images_) {
      if (y >= images_.size() || seen[y]) throw domain_error("Permutation: images are not a bijection");
      seen[y] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{0});
    return Permutation(std::move(images), unchecked{});
  }

  std::size_t size() const { return images_.size(); }
  Element operator()(Element x) const { return images_.at(x); }
  const std::vector<Element>& images() const { return images_; }

  /// (*this o other)(x) = (*this)(other(x))
  Permutation compose(const Permutation& other) const {
    if (other.size() != size()) throw domain_error("Permutation: size mismatch in compose");
    std::vector<Element> out(size());
    for (std::size_t x = 0; x < size(); ++x) out[x] = images_[other.images_[x]];
    return Permutation(std::move(out), unchecked{});
  }

  Permutation inverse() const {
    std::vector<Element> out(size());
    for (std::size_t x = 0; x < size(); ++x) out[images_[x]] = x;
    return Permutation(std::move(out), unchecked{});
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < size(); ++x) count += images_[x] == x ? 1 : 0;
    return count;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked {};
  Permutation(std::vector<Element> images, unchecked) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

}  // namespace qrep
