#pragma once

#include <cstdint>
#include <vector>

#include "cartankit/flat_model.hpp"

namespace cartan {

/// Counter-based generator: the k-th draw of stream s under seed is a pure
/// function of (seed, s, k), so split streams are reproducible regardless of
/// which thread consumes them.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  [[nodiscard]] Sampler split(std::uint64_t stream) const;
  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// p/q with p in [-max_num, max_num], q in [1, max_den].
  Rat rational(std::int64_t max_num = 5, std::int64_t max_den = 4);
  Rat nonzero_rational(std::int64_t max_num = 5, std::int64_t max_den = 4);
  std::vector<Rat> rational_vector(std::size_t n, std::int64_t max_num = 5, std::int64_t max_den = 4);

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Random invertible grade-preserving element. Projective: diag(1, B) with B
/// random invertible. Conformal: diag(a, C, 1/a) with C a Cayley transform of
/// a random element of so(p,q).
GroupElement random_g0(const FlatModel& model, Sampler& rng);
/// Random group element (product of exponentials and a random G_0 part).
GroupElement random_element(const FlatModel& model, Sampler& rng);

}  // namespace cartan
