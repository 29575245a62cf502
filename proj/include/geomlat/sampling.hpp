#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded randomness shared by the sampled checks and generators.
 *
 * All sampling is a pure function of an explicit 64-bit seed; disjoint
 * sub-streams are derived with mix_seed so parallel consumers never share
 * state.
 */

#include "geomlat/affine.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace geomlat::sampling {

/// Derive a stream seed from a base seed and arbitrary tags (splitmix64 mix).
std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform-ish integer in [lo, hi].
  long long range(long long lo, long long hi);
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
FieldElement random_rational(Rng& rng, int bound);
FieldElement random_nonzero_rational(Rng& rng, int bound);
PointVec random_point(Rng& rng, std::size_t d, int bound);
/// Random spatial displacement (time component 0).
PointVec random_spatial(Rng& rng, std::size_t d, int bound);

/// Random skew-symmetric matrix with small rational entries.
Matrix random_skew(Rng& rng, std::size_t n, int bound);
/// Rational orthogonal matrix (I - S)(I + S)^-1 for random skew S; always
/// exists, determinant +1.
Matrix cayley_orthogonal(Rng& rng, std::size_t n, int bound);
/// Rational Minkowski-form-preserving matrix via the Cayley transform of a
/// J-skew matrix; resamples while I + S is singular, identity after
/// `max_attempts` failures.
Matrix cayley_j_orthogonal(Rng& rng, std::size_t d, int bound, int max_attempts = 32);

/// Random bijective affine map (linear entries resampled until det != 0).
AffineMap random_affine_bijection(Rng& rng, std::size_t d, int bound);

}  // namespace geomlat::sampling
