#include "madstar/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "madstar/errors.hpp"

namespace madstar {
namespace {

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide_int x) {
  return x >= std::numeric_limits<std::int64_t>::min() + 1 &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(wide_int num, wide_int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::operator-() const { return from_wide(-static_cast<wide_int>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<wide_int>(num_) * o.den_ + static_cast<wide_int>(o.num_) * den_,
                    static_cast<wide_int>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<wide_int>(num_) * o.num_, static_cast<wide_int>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  *this = from_wide(static_cast<wide_int>(num_) * o.den_, static_cast<wide_int>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw UsageError("not a rational: '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(read(text));
  std::int64_t den = read(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(read(text.substr(0, slash)), den);
}

}  // namespace madstar
