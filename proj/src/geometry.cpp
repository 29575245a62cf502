#include "geomlat/geometry.hpp"

#include <algorithm>

namespace geomlat {

namespace {

void require_same_dim(const PointVec& p, const PointVec& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch();
}

}  // namespace

PointVec::PointVec(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DimensionMismatch("points need dimension >= 2");
}

PointVec PointVec::origin(std::size_t d) {
  return PointVec(std::vector<FieldElement>(d, FieldElement{}));
}

PointVec PointVec::unit(std::size_t d, std::size_t axis) {
  if (axis >= d) throw DimensionMismatch("unit axis out of range");
  PointVec p = origin(d);
  p[axis] = FieldElement(1);
  return p;
}

PointVec& PointVec::operator+=(const PointVec& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

PointVec& PointVec::operator-=(const PointVec& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

PointVec operator*(const FieldElement& c, PointVec p) {
  for (std::size_t i = 0; i < p.dim(); ++i) p[i] *= c;
  return p;
}

PointVec PointVec::operator-() const { return FieldElement(-1) * *this; }

bool operator==(const PointVec& p, const PointVec& q) {
  if (p.dim() != q.dim()) return false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p[i] != q[i]) return false;
  return true;
}

FieldElement dot(const PointVec& p, const PointVec& q) {
  require_same_dim(p, q);
  FieldElement acc;
  for (std::size_t i = 0; i < p.dim(); ++i) acc += p[i] * q[i];
  return acc;
}

FieldElement mink(const PointVec& p, const PointVec& q) {
  require_same_dim(p, q);
  FieldElement acc = p[0] * q[0];
  for (std::size_t i = 1; i < p.dim(); ++i) acc -= p[i] * q[i];
  return acc;
}

FieldElement product(ProductForm form, const PointVec& p, const PointVec& q) {
  return form == ProductForm::Euclid ? dot(p, q) : mink(p, q);
}

FieldElement sq_dist(ProductForm form, const PointVec& p, const PointVec& q) {
  const PointVec diff = p - q;
  return product(form, diff, diff);
}

FieldElement product_from_sqdist(ProductForm form, const PointVec& p, const PointVec& q) {
  const PointVec o = PointVec::origin(p.dim());
  return (sq_dist(form, p, o) + sq_dist(form, q, o) - sq_dist(form, p, q)) / FieldElement(2);
}

bool betweenness(const PointVec& p, const PointVec& q, const PointVec& r) {
  require_same_dim(p, q);
  require_same_dim(p, r);
  if (p == r) return q == p;
  // Solve for t at the first index where r differs from p, then verify the
  // whole equation q = p + t(r - p) componentwise.
  std::size_t pivot = 0;
  while (r[pivot] == p[pivot]) ++pivot;
  const FieldElement t = (q[pivot] - p[pivot]) / (r[pivot] - p[pivot]);
  if (t.sign() < 0 || t > FieldElement(1)) return false;
  return q == p + t * (r - p);
}

bool in_time_axis(const PointVec& p) {
  for (std::size_t i = 1; i < p.dim(); ++i)
    if (!p[i].is_zero()) return false;
  return true;
}

bool in_sim_origin(const PointVec& p) { return p[0].is_zero(); }

std::size_t arity(RelationId rel) {
  switch (rel) {
    case RelationId::Bw:
    case RelationId::Delta:
      return 3;
    case RelationId::S:
    case RelationId::Rest:
    case RelationId::Lambda:
      return 2;
    case RelationId::CongE:
    case RelationId::CongMu:
    case RelationId::CongS:
      return 4;
  }
  throw std::logic_error("unknown relation");
}

std::string_view relation_name(RelationId rel) {
  switch (rel) {
    case RelationId::Bw: return "Bw";
    case RelationId::S: return "S";
    case RelationId::Rest: return "Rest";
    case RelationId::Lambda: return "lambda";
    case RelationId::CongE: return "cong_e";
    case RelationId::CongMu: return "cong_mu";
    case RelationId::CongS: return "cong_s";
    case RelationId::Delta: return "delta";
  }
  throw std::logic_error("unknown relation");
}

RelationId relation_from_name(std::string_view name) {
  for (RelationId rel : kAllRelations)
    if (relation_name(rel) == name) return rel;
  throw ParseError("unknown relation name: '" + std::string(name) + "'");
}

bool eval_relation(RelationId rel, std::span<const PointVec> args) {
  if (args.size() != arity(rel)) throw ArityMismatch();
  for (std::size_t i = 1; i < args.size(); ++i) require_same_dim(args[0], args[i]);
  switch (rel) {
    case RelationId::Bw:
      return betweenness(args[0], args[1], args[2]);
    case RelationId::S:
      return args[0][0] == args[1][0];
    case RelationId::Rest: {
      for (std::size_t i = 1; i < args[0].dim(); ++i)
        if (args[0][i] != args[1][i]) return false;
      return true;
    }
    case RelationId::Lambda:
      return sq_dist(ProductForm::Minkowski, args[0], args[1]).is_zero();
    case RelationId::CongE:
      return sq_dist(ProductForm::Euclid, args[0], args[1]) ==
             sq_dist(ProductForm::Euclid, args[2], args[3]);
    case RelationId::CongMu:
      return sq_dist(ProductForm::Minkowski, args[0], args[1]) ==
             sq_dist(ProductForm::Minkowski, args[2], args[3]);
    case RelationId::CongS: {
      const PointVec pair1[] = {args[0], args[1]};
      const PointVec pair2[] = {args[2], args[3]};
      return eval_relation(RelationId::S, pair1) && eval_relation(RelationId::S, pair2) &&
             eval_relation(RelationId::CongE, args);
    }
    case RelationId::Delta: {
      const PointVec s_pair[] = {args[0], args[1]};
      const PointVec l_pair[] = {args[0], args[2]};
      return eval_relation(RelationId::S, s_pair) && eval_relation(RelationId::Lambda, l_pair);
    }
  }
  throw std::logic_error("unknown relation");
}

}  // namespace geomlat
