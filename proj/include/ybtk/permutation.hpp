#pragma once

#include <cstdint>
#include <vector>

#include "ybtk/errors.hpp"

namespace ybtk {

/// A bijection of {0,...,n-1}. Degrees in this project stay below 2^16
/// (carriers have order <= 81, braidings act on at most 81^2 points),
/// so images are stored as uint16_t.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Builds without the bijectivity check; images must already be a bijection.
  static Permutation unchecked(std::vector<std::uint16_t> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Composition f.then_apply(g) is not provided; use compose(f, g) = f∘g,
  /// i.e. x ↦ f[g[x]] (g applied first).
  friend Permutation compose(const Permutation& f, const Permutation& g);

  /// Order as a group element (lcm of cycle lengths).
  unsigned long long order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

private:
  std::vector<std::uint16_t> img_;
};

/// lcm with overflow detection; throws Error on overflow.
unsigned long long lcm_checked(unsigned long long a, unsigned long long b);

}  // namespace ybtk
