#pragma once

/**
 * @file field.hpp
 * @brief Exact ordered-field arithmetic: arbitrary-precision rationals and
 *        real quadratic extensions Q(sqrt(k)).
 *
 * Every value is kept in canonical form after every operation (reduced
 * fractions, positive denominators), so there is no rounding anywhere.
 * A FieldElement lives either in plain Q (extension() == 0) or in a fixed
 * extension Q(sqrt(k)) for a square-free k >= 2. Mixing two different
 * extensions is an error; rationals promote into any extension.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geomlat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

/// Mixing values from Q(sqrt(j)) and Q(sqrt(k)) with j != k.
class IncompatibleExtensions : public FieldError {
 public:
  IncompatibleExtensions() : FieldError("incompatible quadratic extensions") {}
};

class NegativeInput : public FieldError {
 public:
  NegativeInput() : FieldError("square root of a negative element") {}
};

class ParseError : public FieldError {
 public:
  explicit ParseError(const std::string& what) : FieldError(what) {}
};

enum class Ordering { Less, Equal, Greater };

/// An exact element of Q or of Q(sqrt(k)), stored as a + b*sqrt(k).
///
/// extension() == 0 means plain rational mode (b is then always 0).
/// The extension tag is sticky: results of arithmetic stay in the wider
/// of the operands' worlds, even when the surd coefficient cancels to 0.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : a_(v) {}  // NOLINT: implicit by design, test ergonomics
  FieldElement(long long v) : a_(v) {}

  static FieldElement rational(BigRational v, std::uint64_t k = 0);
  static FieldElement rational(BigInt num, BigInt den, std::uint64_t k = 0);
  static FieldElement quadext(BigRational a, BigRational b, std::uint64_t k);
  /// sqrt(k) itself, as an element of Q(sqrt(k)).
  static FieldElement surd(std::uint64_t k);

  const BigRational& rat_part() const { return a_; }
  const BigRational& surd_part() const { return b_; }
  std::uint64_t extension() const { return k_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// True when the value itself lies in Q (surd coefficient 0).
  bool is_rational_value() const { return b_ == 0; }
  /// -1, 0, +1: decided exactly by sign analysis of a + b*sqrt(k).
  int sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return cmp(x, y) == Ordering::Equal;
  }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }
  friend bool operator<(const FieldElement& x, const FieldElement& y) {
    return cmp(x, y) == Ordering::Less;
  }
  friend bool operator>(const FieldElement& x, const FieldElement& y) { return y < x; }
  friend bool operator<=(const FieldElement& x, const FieldElement& y) { return !(y < x); }
  friend bool operator>=(const FieldElement& x, const FieldElement& y) { return !(x < y); }

  /// Total order; exact for surds via squared comparison with sign bookkeeping.
  friend Ordering cmp(const FieldElement& x, const FieldElement& y);

 private:
  // Value is a_ + b_*sqrt(k_); canonical: rationals reduced, b_ == 0 when k_ == 0.
  BigRational a_;
  BigRational b_;
  std::uint64_t k_ = 0;

  static std::uint64_t join_extensions(const FieldElement& x, const FieldElement& y);
};

/// Exact square root when representable in x's world: a perfect-square
/// rational, or (in Q(sqrt(k))) a rational multiple of sqrt(k) or a
/// denested c + e*sqrt(k). Returns nullopt otherwise. Throws NegativeInput.
std::optional<FieldElement> sqrt_exact(const FieldElement& x);

/// sqrt of a nonnegative rational if it is a perfect square.
std::optional<BigRational> sqrt_rational(const BigRational& x);

bool is_squarefree(std::uint64_t k);

/// Text form used verbatim in all JSON I/O: "num/den" (den omitted when 1),
/// "a+b√k" / "a-b√k" for extension values, "b√k" when a == 0.
std::string to_string(const FieldElement& x);

/// Inverse of to_string. `k` fixes the ambient world for plain rationals;
/// a literal containing √j must have j == k unless k == 0.
FieldElement parse_field_element(std::string_view text, std::uint64_t k = 0);

}  // namespace geomlat
