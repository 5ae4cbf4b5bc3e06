#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace madstar {

__extension__ using wide_int = __int128;

// Exact fraction over int64 with __int128 intermediates. Every operation
// checks for overflow and throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  // Accepts "p", "-p", "p/q"; throws UsageError otherwise.
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace madstar
