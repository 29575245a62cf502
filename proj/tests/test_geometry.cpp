#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geomlat/geometry.hpp"
#include "geomlat/sampling.hpp"

using namespace geomlat;
using sampling::Rng;

namespace {

FieldElement frac(long long num, long long den = 1) {
  return FieldElement::rational(BigInt(num), BigInt(den));
}

const PointVec o2 = PointVec::origin(2);
const PointVec e1 = PointVec::unit(2, 0);
const PointVec e2 = PointVec::unit(2, 1);

bool rel(RelationId id, std::initializer_list<PointVec> args) {
  return eval_relation(id, std::vector<PointVec>(args));
}

}  // namespace

TEST_CASE("euclidean scalar product") {
  CHECK(dot(e1, e2) == frac(0));
  CHECK(dot(PointVec{frac(3, 5), frac(4, 5)}, PointVec{frac(3, 5), frac(4, 5)}) == frac(1));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const PointVec p = sampling::random_point(rng, 3, 5);
    REQUIRE(dot(p, PointVec::origin(3)) == frac(0));
  }
}

TEST_CASE("minkowski product") {
  CHECK(mink(e1, e1) == frac(1));
  CHECK(mink(e2, e2) == frac(-1));
  CHECK(mink(PointVec{frac(5, 3), frac(4, 3)}, PointVec{frac(4, 3), frac(5, 3)}) == frac(0));
}

TEST_CASE("squared distances") {
  CHECK(sq_dist(ProductForm::Euclid, e1, e2) == frac(2));
  CHECK(sq_dist(ProductForm::Minkowski, o2, e1 + e2) == frac(0));
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const PointVec p = sampling::random_point(rng, 4, 5);
    REQUIRE(sq_dist(ProductForm::Euclid, p, p) == frac(0));
    REQUIRE(sq_dist(ProductForm::Minkowski, p, p) == frac(0));
  }
}

TEST_CASE("products are symmetric and bilinear") {
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 2 + i % 3;
    const PointVec p = sampling::random_point(rng, d, 5);
    const PointVec p2 = sampling::random_point(rng, d, 5);
    const PointVec q = sampling::random_point(rng, d, 5);
    const FieldElement alpha = sampling::random_rational(rng, 5);
    const FieldElement beta = sampling::random_rational(rng, 5);
    for (ProductForm form : {ProductForm::Euclid, ProductForm::Minkowski}) {
      REQUIRE(product(form, p, q) == product(form, q, p));
      REQUIRE(product(form, alpha * p + beta * p2, q) ==
              alpha * product(form, p, q) + beta * product(form, p2, q));
    }
  }
}

TEST_CASE("polarization recovers the product from squared distances") {
  CHECK(product_from_sqdist(ProductForm::Euclid, e1, e2) == frac(0));
  CHECK(product_from_sqdist(ProductForm::Minkowski, e2, e2) == frac(-1));
  Rng rng(23);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t d = 2 + i % 3;
    const PointVec p = sampling::random_point(rng, d, 6);
    const PointVec q = sampling::random_point(rng, d, 6);
    REQUIRE(product_from_sqdist(ProductForm::Euclid, p, q) == dot(p, q));
    REQUIRE(product_from_sqdist(ProductForm::Minkowski, p, q) == mink(p, q));
  }
}

TEST_CASE("betweenness") {
  CHECK(betweenness(o2, frac(1, 2) * e1, e1));
  CHECK(!betweenness(o2, frac(2) * e1, e1));
  CHECK(betweenness(e2, e2, e2));
  CHECK(betweenness(o2, o2, e1));
  CHECK(betweenness(o2, e1, e1));
  CHECK(!betweenness(o2, e2, e1));
  // endpoints equal but q different
  CHECK(!betweenness(e1, e2, e1));
}

TEST_CASE("lightlike relatedness is vanishing minkowski distance") {
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 2 + i % 3;
    PointVec p = sampling::random_point(rng, d, 5);
    PointVec q = sampling::random_point(rng, d, 5);
    if (i % 2 == 0) {
      // construct a lightlike pair: displacement (t, t, 0, ..., 0)
      const FieldElement t = sampling::random_rational(rng, 5);
      q = p + t * PointVec::unit(d, 0) + t * PointVec::unit(d, 1);
    }
    const std::vector<PointVec> args{p, q};
    REQUIRE(eval_relation(RelationId::Lambda, args) ==
            sq_dist(ProductForm::Minkowski, p, q).is_zero());
  }
}

TEST_CASE("relation examples") {
  CHECK(rel(RelationId::Lambda, {o2, e1 + e2}));
  CHECK(rel(RelationId::S, {o2, e2}));
  CHECK(!rel(RelationId::Rest, {o2, e2}));
  CHECK(rel(RelationId::Rest, {o2, frac(3) * e1}));
  CHECK(rel(RelationId::CongE, {o2, e1, o2, e2}));
  CHECK(!rel(RelationId::CongE, {o2, e1, o2, frac(2) * e1}));
  CHECK(rel(RelationId::CongMu, {o2, e1 + e2, o2, o2}));
  CHECK(rel(RelationId::CongS, {o2, e2, o2, -e2}));
  CHECK(!rel(RelationId::CongS, {o2, e1, o2, e1}));
  CHECK(rel(RelationId::Delta, {o2, e2, e1 + e2}));
  CHECK(!rel(RelationId::Delta, {o2, e1, e2}));
}

TEST_CASE("subspace membership") {
  const PointVec e3_1 = PointVec::unit(3, 0);
  CHECK(in_time_axis(frac(3) * e3_1));
  CHECK(in_sim_origin(PointVec::unit(3, 1) + PointVec::unit(3, 2)));
  CHECK(!in_time_axis(e1 + e2));
  CHECK(in_time_axis(PointVec::origin(4)));
  CHECK(in_sim_origin(PointVec::origin(4)));
}

TEST_CASE("relation and subspace bridges") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 2 + i % 3;
    const PointVec p = sampling::random_point(rng, d, 5);
    PointVec q = sampling::random_point(rng, d, 5);
    if (i % 3 == 0) q = p + sampling::random_spatial(rng, d, 5);
    if (i % 3 == 1) q = p + sampling::random_rational(rng, 5) * PointVec::unit(d, 0);
    const std::vector<PointVec> pq{p, q};
    REQUIRE(eval_relation(RelationId::S, pq) == in_sim_origin(p - q));
    REQUIRE(eval_relation(RelationId::Rest, pq) == in_time_axis(p - q));
  }
}

TEST_CASE("interdefinability identities used in the table proofs") {
  Rng rng(43);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 2 + i % 3;
    const PointVec p = sampling::random_point(rng, d, 4);
    PointVec q = sampling::random_point(rng, d, 4);
    if (i % 2 == 0) q = p + sampling::random_spatial(rng, d, 4);
    const std::vector<PointVec> pq{p, q};
    const std::vector<PointVec> pqpq{p, q, p, q};
    const std::vector<PointVec> pqpp{p, q, p, p};
    // S(p,q) <-> CongS((p,q),(p,q)); Lambda(p,q) <-> CongMu((p,q),(p,p))
    REQUIRE(eval_relation(RelationId::S, pq) == eval_relation(RelationId::CongS, pqpq));
    REQUIRE(eval_relation(RelationId::Lambda, pq) == eval_relation(RelationId::CongMu, pqpp));
  }
}

TEST_CASE("product facts about the time axis and simultaneity hyperplane") {
  Rng rng(47);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t d = 2 + i % 3;
    const PointVec in_t =
        sampling::random_rational(rng, 5) * PointVec::unit(d, 0);
    const PointVec in_s = sampling::random_spatial(rng, d, 5);
    const PointVec any = sampling::random_point(rng, d, 5);

    for (ProductForm form : {ProductForm::Euclid, ProductForm::Minkowski}) {
      // (i): nonzero time-axis vector orthogonal to q forces q into S
      if (!in_t[0].is_zero() && product(form, in_t, any).is_zero())
        REQUIRE(in_sim_origin(any));
      // (ii): orthogonality to all spatial basis vectors forces p into T
      bool orthogonal_to_basis = true;
      for (std::size_t axis = 1; axis < d; ++axis)
        if (!product(form, any, PointVec::unit(d, axis)).is_zero())
          orthogonal_to_basis = false;
      if (orthogonal_to_basis) REQUIRE(in_time_axis(any));
      // (iii): T and S are orthogonal for both products
      REQUIRE(product(form, in_t, in_s).is_zero());
    }
    // (iv) products agree on T x T; (v) they are opposite on S x S
    const PointVec in_t2 = sampling::random_rational(rng, 5) * PointVec::unit(d, 0);
    const PointVec in_s2 = sampling::random_spatial(rng, d, 5);
    REQUIRE(dot(in_t, in_t2) == mink(in_t, in_t2));
    REQUIRE(dot(in_s, in_s2) == -mink(in_s, in_s2));
    // (vi): doubly orthogonal pairs have a member in S
    PointVec p = any;
    PointVec q = sampling::random_point(rng, d, 5);
    if (i % 2 == 0) {
      // bias: make both products vanish by a spatial-orthogonal construction
      p = in_s;
      q = PointVec::origin(d);
      q[0] = sampling::random_rational(rng, 5);
      if (d >= 3 && !p[1].is_zero()) {
        q[1] = -p[2];
        q[2] = p[1];
      }
    }
    if (dot(p, q).is_zero() && mink(p, q).is_zero())
      REQUIRE((in_sim_origin(p) || in_sim_origin(q)));
  }
}

TEST_CASE("dimension and arity errors") {
  CHECK_THROWS_AS(dot(e1, PointVec::origin(3)), DimensionMismatch);
  CHECK_THROWS_AS(PointVec(std::vector<FieldElement>{frac(1)}), DimensionMismatch);
  const std::vector<PointVec> two{o2, e1};
  CHECK_THROWS_AS(eval_relation(RelationId::Bw, two), ArityMismatch);
  const std::vector<PointVec> mixed{o2, PointVec::origin(3)};
  CHECK_THROWS_AS(eval_relation(RelationId::S, mixed), DimensionMismatch);
}
