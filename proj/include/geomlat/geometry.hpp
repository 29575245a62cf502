#pragma once

/**
 * @file geometry.hpp
 * @brief Points of F^d, the Euclidean and Minkowski products, squared
 *        distances, and the eight spacetime relations as exact predicates.
 *
 * Component 0 of a point is its time coordinate; components 1..d-1 are
 * spatial. All predicates are total on well-dimensioned inputs and never
 * approximate.
 */

#include "geomlat/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace geomlat {

class DimensionMismatch : public FieldError {
 public:
  DimensionMismatch() : FieldError("dimension mismatch") {}
  explicit DimensionMismatch(const std::string& what) : FieldError(what) {}
};

class ArityMismatch : public FieldError {
 public:
  ArityMismatch() : FieldError("wrong number of points for relation") {}
};

/// A d-tuple over the field; doubles as point and displacement vector.
class PointVec {
 public:
  explicit PointVec(std::vector<FieldElement> coords);
  PointVec(std::initializer_list<FieldElement> coords)
      : PointVec(std::vector<FieldElement>(coords)) {}

  static PointVec origin(std::size_t d);
  /// Unit vector along `axis` (0-based; axis 0 is the time axis).
  static PointVec unit(std::size_t d, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  FieldElement& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<FieldElement>& coords() const { return coords_; }

  PointVec& operator+=(const PointVec& rhs);
  PointVec& operator-=(const PointVec& rhs);
  friend PointVec operator+(PointVec lhs, const PointVec& rhs) { return lhs += rhs; }
  friend PointVec operator-(PointVec lhs, const PointVec& rhs) { return lhs -= rhs; }
  friend PointVec operator*(const FieldElement& c, PointVec p);
  PointVec operator-() const;

  friend bool operator==(const PointVec& p, const PointVec& q);
  friend bool operator!=(const PointVec& p, const PointVec& q) { return !(p == q); }

 private:
  std::vector<FieldElement> coords_;
};

enum class ProductForm { Euclid, Minkowski };

/// p1 q1 + p2 q2 + ... + pd qd
FieldElement dot(const PointVec& p, const PointVec& q);
/// p1 q1 - p2 q2 - ... - pd qd
FieldElement mink(const PointVec& p, const PointVec& q);
FieldElement product(ProductForm form, const PointVec& p, const PointVec& q);
/// (p - q) ⊗ (p - q) for the chosen form.
FieldElement sq_dist(ProductForm form, const PointVec& p, const PointVec& q);
/// The product recovered from squared distances by polarization:
/// (d²(p,o) + d²(q,o) - d²(p,q)) / 2. Agrees exactly with the direct product.
FieldElement product_from_sqdist(ProductForm form, const PointVec& p, const PointVec& q);

/// q = p + t(r - p) for some t in [0,1]. For p == r this degenerates to q == p.
bool betweenness(const PointVec& p, const PointVec& q, const PointVec& r);

/// Membership in the time axis T = {(t,0,...,0)}.
bool in_time_axis(const PointVec& p);
/// Membership in the simultaneity hyperplane S = {p : p_time = 0}.
bool in_sim_origin(const PointVec& p);

enum class RelationId {
  Bw,      // betweenness (ternary)
  S,       // absolute simultaneity (binary)
  Rest,    // being at rest (binary)
  Lambda,  // lightlike relatedness (binary)
  CongE,   // Euclidean congruence (4-ary, on point pairs)
  CongMu,  // Minkowski congruence (4-ary)
  CongS,   // congruence on simultaneity (4-ary)
  Delta,   // S(p,q) and Lambda(p,r) (ternary)
};

inline constexpr RelationId kAllRelations[] = {
    RelationId::Bw,    RelationId::S,      RelationId::Rest,  RelationId::Lambda,
    RelationId::CongE, RelationId::CongMu, RelationId::CongS, RelationId::Delta,
};

std::size_t arity(RelationId rel);
std::string_view relation_name(RelationId rel);
RelationId relation_from_name(std::string_view name);

/// Exact truth value of the relation on `args` (size must equal arity).
bool eval_relation(RelationId rel, std::span<const PointVec> args);

}  // namespace geomlat
