#include "geomlat/field.hpp"

#include <charconv>

namespace geomlat {

namespace {

int sign_of(const BigRational& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

Ordering ordering_from_sign(int s) {
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

void require_valid_extension(std::uint64_t k) {
  if (k == 0) return;
  if (k < 2 || !is_squarefree(k))
    throw FieldError("extension index must be a square-free integer >= 2");
}

}  // namespace

bool is_squarefree(std::uint64_t k) {
  if (k == 0) return false;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % (p * p) == 0) return false;
  }
  return true;
}

FieldElement FieldElement::rational(BigRational v, std::uint64_t k) {
  require_valid_extension(k);
  FieldElement e;
  e.a_ = std::move(v);
  e.k_ = k;
  return e;
}

FieldElement FieldElement::rational(BigInt num, BigInt den, std::uint64_t k) {
  if (den == 0) throw DivisionByZero();
  return rational(BigRational(std::move(num), std::move(den)), k);
}

FieldElement FieldElement::quadext(BigRational a, BigRational b, std::uint64_t k) {
  if (k == 0) {
    if (b != 0) throw FieldError("surd coefficient requires an extension");
    return rational(std::move(a));
  }
  require_valid_extension(k);
  FieldElement e;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  e.k_ = k;
  return e;
}

FieldElement FieldElement::surd(std::uint64_t k) { return quadext(0, 1, k); }

std::uint64_t FieldElement::join_extensions(const FieldElement& x, const FieldElement& y) {
  if (x.k_ == y.k_) return x.k_;
  if (x.k_ == 0) return y.k_;
  if (y.k_ == 0) return x.k_;
  throw IncompatibleExtensions();
}

int FieldElement::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(k) decides; compare a^2 vs k*b^2.
  const BigRational lhs = a_ * a_;
  const BigRational rhs = b_ * b_ * BigInt(k_);
  if (lhs == rhs) return 0;  // unreachable for square-free k >= 2 and b != 0
  return (lhs > rhs) == (sa > 0) ? sa : sb;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  k_ = join_extensions(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  k_ = join_extensions(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  k_ = join_extensions(*this, rhs);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + k b1 b2 + (a1 b2 + a2 b1) s
  const BigRational a = a_ * rhs.a_ + BigInt(k_) * b_ * rhs.b_;
  const BigRational b = a_ * rhs.b_ + rhs.a_ * b_;
  a_ = a;
  b_ = b;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  k_ = join_extensions(*this, rhs);
  if (rhs.b_ == 0) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  // Multiply by the conjugate; the norm a^2 - k b^2 is nonzero for any
  // nonzero element of Q(sqrt(k)) with k square-free.
  const BigRational norm = rhs.a_ * rhs.a_ - BigInt(k_) * rhs.b_ * rhs.b_;
  FieldElement conj;
  conj.a_ = rhs.a_ / norm;
  conj.b_ = -rhs.b_ / norm;
  conj.k_ = k_;
  return *this *= conj;
}

Ordering cmp(const FieldElement& x, const FieldElement& y) {
  FieldElement diff = x;
  diff -= y;
  return ordering_from_sign(diff.sign());
}

std::optional<BigRational> sqrt_rational(const BigRational& x) {
  if (x < 0) return std::nullopt;
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  const BigInt sn = sqrt(num);
  if (sn * sn != num) return std::nullopt;
  const BigInt sd = sqrt(den);
  if (sd * sd != den) return std::nullopt;
  return BigRational(sn, sd);
}

std::optional<FieldElement> sqrt_exact(const FieldElement& x) {
  if (x.sign() < 0) throw NegativeInput();
  const std::uint64_t k = x.extension();
  if (k == 0) {
    auto r = sqrt_rational(x.rat_part());
    if (!r) return std::nullopt;
    return FieldElement::rational(*r);
  }
  const BigRational& a = x.rat_part();
  const BigRational& b = x.surd_part();
  if (b == 0) {
    if (auto r = sqrt_rational(a)) return FieldElement::quadext(*r, 0, k);
    if (auto r = sqrt_rational(a / BigInt(k))) return FieldElement::quadext(0, *r, k);
    return std::nullopt;
  }
  // Denest sqrt(a + b sqrt(k)) = c + e sqrt(k): c^2 + k e^2 = a, 2ce = b,
  // so c^2 and k e^2 are the roots of t^2 - a t + k b^2 / 4.
  const BigRational disc = a * a - BigInt(k) * b * b;
  const auto s = sqrt_rational(disc);
  if (!s) return std::nullopt;
  for (const BigRational& c2 : {(a + *s) / 2, (a - *s) / 2}) {
    const auto c = sqrt_rational(c2);
    if (!c || *c == 0) continue;
    const BigRational e = b / (2 * *c);
    FieldElement root = FieldElement::quadext(*c, e, k);
    if (root * root == x) return root.sign() >= 0 ? root : -root;
  }
  return std::nullopt;
}

namespace {

constexpr std::string_view kSurdSign = "√";  // "√"

std::string rational_to_string(const BigRational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

BigRational parse_rational(std::string_view text) {
  const auto bad = [&] { return ParseError("bad rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty() || part == "-" || part == "+") throw bad();
    std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return BigRational(num, den);
}

}  // namespace

std::string to_string(const FieldElement& x) {
  if (x.surd_part() == 0) return rational_to_string(x.rat_part());
  std::string surd = rational_to_string(abs(x.surd_part()));
  surd += kSurdSign;
  surd += std::to_string(x.extension());
  if (x.rat_part() == 0) return (x.surd_part() < 0 ? "-" : "") + surd;
  return rational_to_string(x.rat_part()) + (x.surd_part() < 0 ? "-" : "+") + surd;
}

FieldElement parse_field_element(std::string_view text, std::uint64_t k) {
  const auto surd_pos = text.find(kSurdSign);
  if (surd_pos == std::string_view::npos)
    return FieldElement::rational(parse_rational(text), k);

  std::string_view index_part = text.substr(surd_pos + kSurdSign.size());
  std::uint64_t j = 0;
  const auto res = std::from_chars(index_part.data(), index_part.data() + index_part.size(), j);
  if (res.ec != std::errc() || res.ptr != index_part.data() + index_part.size())
    throw ParseError("bad extension index in '" + std::string(text) + "'");
  if (k != 0 && j != k) throw IncompatibleExtensions();

  std::string_view head = text.substr(0, surd_pos);
  // head is "b" or "a+b" / "a-b" with rational literals a, b.
  BigRational a = 0;
  std::string_view coef = head;
  for (std::size_t i = 1; i < head.size(); ++i) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
        head[i - 1] != '-') {
      a = parse_rational(head.substr(0, i));
      coef = head.substr(i);
      break;
    }
  }
  BigRational b;
  if (coef.empty() || coef == "+")
    b = 1;
  else if (coef == "-")
    b = -1;
  else
    b = parse_rational(coef);
  return FieldElement::quadext(std::move(a), std::move(b), j);
}

}  // namespace geomlat
