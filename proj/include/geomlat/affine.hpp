#pragma once

/**
 * @file affine.hpp
 * @brief Affine transformations of F^d: exact matrices, composition,
 *        inversion, decomposition, and relation-respect deciders.
 *
 * An AffineMap is a linear bijection followed by a translation. Bijectivity
 * (nonzero determinant) is enforced at construction, so "A respects R" is
 * well-posed for every map handled here.
 */

#include "geomlat/geometry.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace geomlat {

class SingularMatrix : public FieldError {
 public:
  SingularMatrix() : FieldError("linear part is singular") {}
};

/// Dense square matrix of field elements.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), cells_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const FieldElement& at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  FieldElement& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  /// Column `col` as a point (the image of unit vector `col`).
  PointVec column(std::size_t col) const;

  Matrix operator*(const Matrix& rhs) const;
  PointVec operator*(const PointVec& p) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Exact determinant by fraction-free (Bareiss) elimination.
  FieldElement determinant() const;
  /// Exact inverse, or nullopt when singular.
  std::optional<Matrix> inverse() const;

 private:
  std::size_t n_;
  std::vector<FieldElement> cells_;
};

/// A = translation ∘ linear, with the linear part invertible by contract.
class AffineMap {
 public:
  AffineMap(Matrix linear, PointVec translation);

  static AffineMap identity(std::size_t d);
  static AffineMap translation(PointVec t);
  static AffineMap linear(Matrix m);
  /// p ↦ c·p (uniform scaling, c != 0).
  static AffineMap uniform_scaling(std::size_t d, const FieldElement& c);
  /// p ↦ (p_time, c·p_spatial...), c != 0.
  static AffineMap spatial_scaling(std::size_t d, const FieldElement& c);
  /// p ↦ (b·p_time, p_spatial...), b != 0.
  static AffineMap temporal_scaling(std::size_t d, const FieldElement& b);

  std::size_t dim() const { return translation_.dim(); }
  const Matrix& linear_part() const { return linear_; }
  const PointVec& translation_part() const { return translation_; }

  PointVec apply(const PointVec& p) const;
  /// this ∘ inner (apply `inner` first).
  AffineMap compose(const AffineMap& inner) const;
  AffineMap inverse() const;
  FieldElement determinant() const { return linear_.determinant(); }

  /// A = τ ∘ L: the pure linear part and the pure translation by A(o).
  std::pair<AffineMap, AffineMap> decompose() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b);
  friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }

 private:
  Matrix linear_;
  PointVec translation_;
};

/// The scale a with L(e_i) ⊗ L(e_j) = a · (e_i ⊗ e_j) for all unit-vector
/// pairs, or nullopt when no such a exists. Nonzero whenever L is a bijection.
std::optional<FieldElement> form_scale_factor(const Matrix& linear, ProductForm form);

/// Galilean structural check on the linear part: columns 2..d stay inside S
/// and the spatial block B satisfies Bᵀ·B = a·I with a > 0. Returns
/// (spatial square-factor a, temporal factor b = first component of column 1).
std::optional<std::pair<FieldElement, FieldElement>> galilean_scale_factors(const Matrix& linear);

/// L[S] = S, i.e. columns 2..d have zero time component.
bool preserves_sim_origin(const Matrix& linear);
/// L[T] = T, i.e. column 1 lies on the time axis.
bool preserves_time_axis(const Matrix& linear);

/// Exact decision of "A respects rel", via the characterization of the
/// relation's automorphisms by unit-vector equations on the linear part.
bool respects_exact(const AffineMap& map, RelationId rel);

struct RespectSample {
  bool respects = true;
  /// First argument tuple violating the biconditional, when one was found.
  std::optional<std::vector<PointVec>> counterexample;
};

/// Randomized oracle for respects_exact: checks the respect biconditional on
/// `trials` argument tuples, biased so tuples satisfying `rel` actually occur.
/// A fixed battery of canonical tuples is always checked first, so small
/// counterexamples are reported deterministically.
RespectSample respects_sampled(const AffineMap& map, RelationId rel, int trials,
                               std::uint64_t seed);

}  // namespace geomlat
