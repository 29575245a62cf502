#include "geomlat/groups.hpp"

#include "geomlat/sampling.hpp"

#include <stdexcept>

namespace geomlat {

std::string_view group_name(GroupId g) {
  switch (g) {
    case GroupId::EuclSim: return "eucl_sim";
    case GroupId::PoiSim: return "poi_sim";
    case GroupId::GalSim: return "gal_sim";
    case GroupId::TrivGalSim: return "triv_gal_sim";
    case GroupId::TrivEuclSim: return "triv_eucl_sim";
  }
  throw std::logic_error("unknown group");
}

GroupId group_from_name(std::string_view name) {
  for (GroupId g : kAllGroups)
    if (group_name(g) == name) return g;
  throw ParseError("unknown group name: '" + std::string(name) + "'");
}

SimilarityVerdict classify(const AffineMap& map, GroupId g) {
  const Matrix& linear = map.linear_part();
  switch (g) {
    case GroupId::EuclSim: {
      if (auto a = form_scale_factor(linear, ProductForm::Euclid)) return {true, *a, {}};
      return {};
    }
    case GroupId::PoiSim: {
      if (auto a = form_scale_factor(linear, ProductForm::Minkowski)) return {true, *a, {}};
      return {};
    }
    case GroupId::GalSim: {
      if (auto f = galilean_scale_factors(linear)) return {true, f->first, f->second};
      return {};
    }
    case GroupId::TrivGalSim: {
      if (!preserves_time_axis(linear)) return {};
      if (auto f = galilean_scale_factors(linear)) return {true, f->first, f->second};
      return {};
    }
    case GroupId::TrivEuclSim: {
      if (!preserves_time_axis(linear)) return {};
      if (auto a = form_scale_factor(linear, ProductForm::Euclid)) return {true, *a, {}};
      return {};
    }
  }
  throw std::logic_error("unknown group");
}

bool is_galilean_transformation(const AffineMap& map) {
  const auto verdict = classify(map, GroupId::GalSim);
  return verdict.member && *verdict.square_factor == FieldElement(1) &&
         *verdict.temporal_factor == FieldElement(1);
}

std::string_view witness_name(WitnessName w) {
  switch (w) {
    case WitnessName::E: return "E";
    case WitnessName::P: return "P";
    case WitnessName::N: return "N";
    case WitnessName::G: return "G";
    case WitnessName::Swap: return "swap";
  }
  throw std::logic_error("unknown witness");
}

WitnessName witness_from_name(std::string_view name) {
  for (WitnessName w : kAllWitnesses)
    if (witness_name(w) == name) return w;
  throw ParseError("unknown witness name: '" + std::string(name) + "'");
}

AffineMap witness(WitnessName w, std::size_t d) {
  if (d < 2) throw DimensionMismatch("witnesses need dimension >= 2");
  Matrix m = Matrix::identity(d);
  const auto frac = [](long long num, long long den) {
    return FieldElement::rational(BigInt(num), BigInt(den));
  };
  switch (w) {
    case WitnessName::E:
      m.at(0, 0) = frac(3, 5);
      m.at(1, 0) = frac(4, 5);
      m.at(0, 1) = frac(4, 5);
      m.at(1, 1) = frac(-3, 5);
      break;
    case WitnessName::P:
      m.at(0, 0) = frac(5, 3);
      m.at(1, 0) = frac(4, 3);
      m.at(0, 1) = frac(4, 3);
      m.at(1, 1) = frac(5, 3);
      break;
    case WitnessName::N:
      m.at(0, 0) = FieldElement(2);
      break;
    case WitnessName::G:
      m.at(1, 0) = FieldElement(1);
      break;
    case WitnessName::Swap:
      m.at(0, 0) = FieldElement{};
      m.at(1, 1) = FieldElement{};
      m.at(0, 1) = FieldElement(1);
      m.at(1, 0) = FieldElement(1);
      break;
  }
  return AffineMap::linear(std::move(m));
}

namespace {

using sampling::Rng;

/// diag(head, block): block goes into rows/columns 1..d-1.
Matrix block_diagonal(const FieldElement& head, const Matrix& block) {
  const std::size_t d = block.dim() + 1;
  Matrix m(d);
  m.at(0, 0) = head;
  for (std::size_t i = 0; i < block.dim(); ++i)
    for (std::size_t j = 0; j < block.dim(); ++j) m.at(i + 1, j + 1) = block.at(i, j);
  return m;
}

/// Spatial orthogonal block, optionally reflected to reach determinant -1.
Matrix spatial_orthogonal(Rng& rng, std::size_t n, const GenParams& params) {
  Matrix q = sampling::cayley_orthogonal(rng, n, params.coeff_bound);
  if (params.allow_reflection && rng.coin() && n >= 1)
    for (std::size_t i = 0; i < n; ++i) q.at(i, n - 1) = -q.at(i, n - 1);
  return q;
}

FieldElement pick_scale(Rng& rng, const std::optional<FieldElement>& requested, int bound) {
  return requested ? *requested : sampling::random_nonzero_rational(rng, bound);
}

Matrix generate_linear(GroupId g, std::size_t d, Rng& rng, const GenParams& params) {
  const FieldElement c = pick_scale(rng, params.scale, params.coeff_bound);
  switch (g) {
    case GroupId::EuclSim: {
      Matrix q = sampling::cayley_orthogonal(rng, d, params.coeff_bound);
      if (params.allow_reflection && rng.coin())
        for (std::size_t i = 0; i < d; ++i) q.at(i, d - 1) = -q.at(i, d - 1);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q.at(i, j) *= c;
      return q;
    }
    case GroupId::PoiSim: {
      Matrix q = sampling::cayley_j_orthogonal(rng, d, params.coeff_bound);
      if (params.allow_reflection && rng.coin() && d >= 2)
        for (std::size_t i = 0; i < d; ++i) q.at(i, d - 1) = -q.at(i, d - 1);
      if (params.allow_time_space_swap && d == 2 && rng.coin()) {
        Matrix swap(2);
        swap.at(0, 1) = FieldElement(1);
        swap.at(1, 0) = FieldElement(1);
        q = swap * q;
      }
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q.at(i, j) *= c;
      return q;
    }
    case GroupId::GalSim: {
      const FieldElement b = pick_scale(rng, params.temporal, params.coeff_bound);
      Matrix q = spatial_orthogonal(rng, d - 1, params);
      Matrix m = block_diagonal(b, q);
      for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t j = 1; j < d; ++j) m.at(i, j) *= c;
        m.at(i, 0) = sampling::random_rational(rng, params.coeff_bound);  // boost column
      }
      return m;
    }
    case GroupId::TrivGalSim: {
      const FieldElement b = pick_scale(rng, params.temporal, params.coeff_bound);
      Matrix q = spatial_orthogonal(rng, d - 1, params);
      Matrix m = block_diagonal(b, q);
      for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j) m.at(i, j) *= c;
      return m;
    }
    case GroupId::TrivEuclSim: {
      // Time entry must be ±c so the whole matrix scales the Euclidean form.
      const FieldElement head = rng.coin() ? c : -c;
      Matrix q = spatial_orthogonal(rng, d - 1, params);
      Matrix m = block_diagonal(head, q);
      for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j) m.at(i, j) *= c;
      return m;
    }
  }
  throw std::logic_error("unknown group");
}

}  // namespace

AffineMap generate(GroupId g, std::size_t d, std::uint64_t seed, const GenParams& params) {
  if (d < 2) throw DimensionMismatch("groups need dimension >= 2");
  Rng rng(sampling::mix_seed(seed, {static_cast<std::uint64_t>(g), d}));
  Matrix linear = generate_linear(g, d, rng, params);
  PointVec t = params.with_translation ? sampling::random_point(rng, d, params.coeff_bound)
                                       : PointVec::origin(d);
  return AffineMap(std::move(linear), std::move(t));
}

std::optional<SimilarityDecomposition> decompose_similarity(const AffineMap& map, GroupId g) {
  if (g != GroupId::EuclSim && g != GroupId::GalSim)
    throw std::invalid_argument("decomposition defined for eucl_sim and gal_sim only");
  const SimilarityVerdict verdict = classify(map, g);
  if (!verdict.member) throw std::invalid_argument("map is not a member of the group");

  const std::size_t d = map.dim();
  const auto root = sqrt_exact(*verdict.square_factor);
  if (!root) return std::nullopt;

  if (g == GroupId::EuclSim) {
    const AffineMap scaling = AffineMap::uniform_scaling(d, *root);
    return SimilarityDecomposition{map.compose(scaling.inverse()), *root, {}};
  }
  const FieldElement b = *verdict.temporal_factor;
  const AffineMap spatial = AffineMap::spatial_scaling(d, *root);
  const AffineMap temporal = AffineMap::temporal_scaling(d, b);
  const AffineMap transformation = map.compose(spatial.inverse()).compose(temporal.inverse());
  return SimilarityDecomposition{transformation, *root, b};
}

}  // namespace geomlat
