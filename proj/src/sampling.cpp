#include "geomlat/sampling.hpp"

namespace geomlat::sampling {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t t : tags) h = splitmix64(h ^ (t + 0x9e3779b97f4a7c15ULL));
  return h;
}

long long Rng::range(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

FieldElement random_rational(Rng& rng, int bound) {
  const long long num = rng.range(-bound, bound);
  const long long den = rng.range(1, bound);
  return FieldElement::rational(BigInt(num), BigInt(den));
}

FieldElement random_nonzero_rational(Rng& rng, int bound) {
  for (;;) {
    FieldElement v = random_rational(rng, bound);
    if (!v.is_zero()) return v;
  }
}

PointVec random_point(Rng& rng, std::size_t d, int bound) {
  std::vector<FieldElement> coords;
  coords.reserve(d);
  for (std::size_t i = 0; i < d; ++i) coords.push_back(random_rational(rng, bound));
  return PointVec(std::move(coords));
}

PointVec random_spatial(Rng& rng, std::size_t d, int bound) {
  PointVec p = random_point(rng, d, bound);
  p[0] = FieldElement{};
  return p;
}

Matrix random_skew(Rng& rng, std::size_t n, int bound) {
  Matrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement v = random_rational(rng, bound);
      s.at(i, j) = v;
      s.at(j, i) = -v;
    }
  }
  return s;
}

namespace {

std::optional<Matrix> cayley(const Matrix& skew_like) {
  const std::size_t n = skew_like.dim();
  Matrix plus = Matrix::identity(n);
  Matrix minus = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      plus.at(i, j) += skew_like.at(i, j);
      minus.at(i, j) -= skew_like.at(i, j);
    }
  }
  const auto inv = plus.inverse();
  if (!inv) return std::nullopt;
  return minus * *inv;
}

}  // namespace

Matrix cayley_orthogonal(Rng& rng, std::size_t n, int bound) {
  if (n == 0) return Matrix(0);
  // I + S is invertible for every skew-symmetric S over an ordered field.
  return *cayley(random_skew(rng, n, bound));
}

Matrix cayley_j_orthogonal(Rng& rng, std::size_t d, int bound, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // S = J·K is J-skew for skew K; its Cayley transform preserves the form.
    Matrix s = random_skew(rng, d, bound);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s.at(i, j) = -s.at(i, j);
    if (auto m = cayley(s)) return *m;
  }
  return Matrix::identity(d);
}

AffineMap random_affine_bijection(Rng& rng, std::size_t d, int bound) {
  for (;;) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = random_rational(rng, bound);
    if (m.determinant().is_zero()) continue;
    return AffineMap(std::move(m), random_point(rng, d, bound));
  }
}

}  // namespace geomlat::sampling
