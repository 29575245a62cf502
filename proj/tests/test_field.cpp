#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geomlat/field.hpp"
#include "geomlat/sampling.hpp"

using namespace geomlat;
using sampling::Rng;

namespace {

FieldElement frac(long long num, long long den = 1) {
  return FieldElement::rational(BigInt(num), BigInt(den));
}

FieldElement random_element(Rng& rng, bool quadext) {
  const auto r = [&] { return sampling::random_rational(rng, 8); };
  if (!quadext) return r();
  return FieldElement::quadext(r().rat_part(), r().rat_part(), 2);
}

}  // namespace

TEST_CASE("small rational arithmetic") {
  CHECK(frac(3, 5) + frac(4, 5) == frac(7, 5));
  CHECK(frac(1, 3) * frac(3, 1) == frac(1));
  CHECK(frac(1, 2) - frac(1, 2) == frac(0));
  CHECK((frac(7, 5) / frac(7, 5)) == frac(1));
}

TEST_CASE("conjugate product in a quadratic extension") {
  const FieldElement x = FieldElement::quadext(1, 1, 2);   // 1 + sqrt(2)
  const FieldElement y = FieldElement::quadext(1, -1, 2);  // 1 - sqrt(2)
  CHECK(x * y == frac(-1));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(frac(1, 3) / frac(0), DivisionByZero);
  CHECK_THROWS_AS(FieldElement::surd(2) / FieldElement::quadext(0, 0, 2), DivisionByZero);
}

TEST_CASE("mixing different extensions is rejected") {
  const FieldElement a = FieldElement::surd(2);
  const FieldElement b = FieldElement::surd(3);
  CHECK_THROWS_AS(a + b, IncompatibleExtensions);
  CHECK_THROWS_AS(a * b, IncompatibleExtensions);
  CHECK_THROWS_AS(cmp(a, b), IncompatibleExtensions);
}

TEST_CASE("comparison") {
  CHECK(cmp(frac(1, 2), frac(2, 3)) == Ordering::Less);
  // sqrt(2) vs 3/2: both positive, so squares decide: 2 < 9/4.
  CHECK(frac(2) < frac(9, 4));
  CHECK(cmp(FieldElement::surd(2), frac(3, 2)) == Ordering::Less);
  const FieldElement x = FieldElement::quadext(-7, 5, 2);
  CHECK(cmp(x, x) == Ordering::Equal);
  // 5*sqrt(2) > 7 since 50 > 49
  CHECK(FieldElement::quadext(-7, 5, 2).sign() == 1);
  CHECK(FieldElement::quadext(7, -5, 2).sign() == -1);
  CHECK(FieldElement::quadext(0, 0, 2).sign() == 0);
}

TEST_CASE("quadext values with zero surd part equal the plain rational") {
  CHECK(FieldElement::quadext(3, 0, 2) == frac(3));
  CHECK(frac(3) == FieldElement::quadext(3, 0, 5));
}

TEST_CASE("sqrt_exact") {
  CHECK(*sqrt_exact(frac(9, 4)) == frac(3, 2));
  CHECK(!sqrt_exact(frac(2)).has_value());  // not representable over Q
  CHECK(*sqrt_exact(FieldElement::rational(BigRational(2), 2)) == FieldElement::surd(2));
  CHECK(*sqrt_exact(frac(0)) == frac(0));
  CHECK_THROWS_AS(sqrt_exact(frac(-1)), NegativeInput);

  // denesting: (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
  const FieldElement nested = FieldElement::quadext(3, 2, 2);
  const auto root = sqrt_exact(nested);
  REQUIRE(root.has_value());
  CHECK(*root * *root == nested);
  CHECK(root->sign() >= 0);
  CHECK(!sqrt_exact(FieldElement::quadext(1, 1, 2)).has_value());
}

TEST_CASE("sqrt_exact squares back whenever representable") {
  Rng rng(2024);
  int representable = 0;
  for (int i = 0; i < 2000; ++i) {
    FieldElement x = random_element(rng, i % 2 == 1);
    x *= x;  // guarantee a representable nonnegative square
    const auto root = sqrt_exact(x);
    REQUIRE(root.has_value());
    CHECK(*root * *root == x);
    ++representable;
  }
  CHECK(representable == 2000);
}

TEST_CASE("field axioms on random triples") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const bool ext = i % 3 == 0;
    const FieldElement x = random_element(rng, ext);
    const FieldElement y = random_element(rng, ext);
    const FieldElement z = random_element(rng, ext);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + (-x) == FieldElement{});
    if (!x.is_zero()) REQUIRE(x * (FieldElement(1) / x) == FieldElement(1));
  }
}

TEST_CASE("order compatibility with field operations") {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const bool ext = i % 2 == 0;
    const FieldElement x = random_element(rng, ext);
    const FieldElement y = random_element(rng, ext);
    const FieldElement z = random_element(rng, ext);
    if (x <= y) REQUIRE(x + z <= y + z);
    if (FieldElement{} <= x && FieldElement{} <= y) REQUIRE(FieldElement{} <= x * y);
  }
}

TEST_CASE("characteristic zero") {
  FieldElement acc;
  for (int n = 1; n <= 100; ++n) {
    acc += FieldElement(1);
    REQUIRE(!acc.is_zero());
  }
}

TEST_CASE("canonical form after operations") {
  const FieldElement x = frac(6, -4) + frac(0);  // -3/2
  CHECK(numerator(x.rat_part()) == -3);
  CHECK(denominator(x.rat_part()) == 2);
  const FieldElement y = frac(2, 6);
  CHECK(numerator(y.rat_part()) == 1);
  CHECK(denominator(y.rat_part()) == 3);
}

TEST_CASE("text encoding round trip") {
  CHECK(to_string(frac(7)) == "7");
  CHECK(to_string(frac(-3, 5)) == "-3/5");
  CHECK(to_string(FieldElement::surd(2)) == "1√2");
  CHECK(to_string(FieldElement::quadext(1, -2, 3)) == "1-2√3");
  CHECK(to_string(FieldElement::quadext(BigRational(1, 2), BigRational(3, 4), 5)) ==
        "1/2+3/4√5");

  CHECK(parse_field_element("7/5") == frac(7, 5));
  CHECK(parse_field_element("-2") == frac(-2));
  CHECK(parse_field_element("1-2√3") == FieldElement::quadext(1, -2, 3));
  CHECK(parse_field_element("√2") == FieldElement::surd(2));
  CHECK(parse_field_element("-√2") == -FieldElement::surd(2));
  CHECK(parse_field_element("2", 7).extension() == 7);

  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const FieldElement x = random_element(rng, i % 2 == 0);
    REQUIRE(parse_field_element(to_string(x), x.extension()) == x);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_field_element(""), ParseError);
  CHECK_THROWS_AS(parse_field_element("3/"), ParseError);
  CHECK_THROWS_AS(parse_field_element("a+b"), ParseError);
  CHECK_THROWS_AS(parse_field_element("1/0"), ParseError);
  CHECK_THROWS_AS(parse_field_element("1√4"), FieldError);  // 4 is not square-free
  CHECK_THROWS_AS(parse_field_element("1√3", 2), IncompatibleExtensions);
}
