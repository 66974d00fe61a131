#include "cartankit/sampling.hpp"

#include <stdexcept>

namespace cartan {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

Sampler Sampler::split(std::uint64_t stream) const {
  Sampler child(seed_, 0);
  child.key_ = splitmix64(key_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
  return child;
}

std::uint64_t Sampler::next() { return splitmix64(key_ + 0xD1B54A32D192ED03ULL * ++counter_); }

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<std::int64_t>(v % span);
}

Rat Sampler::rational(std::int64_t max_num, std::int64_t max_den) {
  const long p = static_cast<long>(uniform_int(-max_num, max_num));
  const long q = static_cast<long>(uniform_int(1, max_den));
  return Rat(p, q);
}

Rat Sampler::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  for (;;) {
    Rat r = rational(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

std::vector<Rat> Sampler::rational_vector(std::size_t n, std::int64_t max_num, std::int64_t max_den) {
  std::vector<Rat> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
  return v;
}

GroupElement random_g0(const FlatModel& model, Sampler& rng) {
  const ModelTag& tag = model.tag();
  const std::size_t n = tag.matrix_size();
  if (tag.kind() == ModelKind::Projective) {
    for (;;) {
      Mat b = Mat::identity(n);
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) b(r, c) = rng.rational(3, 2);
      if (!determinant(b).is_zero()) return model.element(std::move(b));
    }
  }
  // Conformal: the g_0 basis is H followed by so(p,q); drop H and use Cayley.
  const GradedAlgebra& alg = model.algebra();
  const auto [b0, b1] = alg.grade_range(0);
  for (;;) {
    Mat k(n, n);
    for (std::size_t i = b0 + 1; i < b1; ++i) k += rng.rational(2, 3) * alg.basis(i);
    const Mat inner = k.block(1, 1, n - 2, n - 2);
    const Mat id = Mat::identity(n - 2);
    if (determinant(id - inner).is_zero()) continue;
    const Mat cayley = (id + inner) * mat_inverse(id - inner);
    Mat g(n, n);
    const Rat a = rng.nonzero_rational(3, 2);
    g(0, 0) = a;
    g(n - 1, n - 1) = a.inverse();
    g.set_block(1, 1, cayley);
    return model.element(std::move(g));
  }
}

GroupElement random_element(const FlatModel& model, Sampler& rng) {
  const std::size_t d = model.dimension();
  return model.exp_minus(rng.rational_vector(d, 3, 2)) * random_g0(model, rng) *
         model.exp_plus(rng.rational_vector(d, 3, 2));
}

}  // namespace cartan
