#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace riskmat {

// Exact rational number over int64. Always normalized: den > 0 and
// gcd(|num|, den) == 1, so the defaulted equality is value equality.
// Pass/fail decisions in the scoring engine must never go through
// floating point; every comparison here is done in integers.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // intentionally implicit
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  constexpr Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "27" for integers, "7/2" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Fixed-point decimal with `places` digits, round half away from zero.
  std::string decimal(int places) const;

  // Inverse of str(); accepts "n" and "n/d". Throws std::invalid_argument.
  static Rational parse(const std::string& text);

 private:
  using i128 = __int128;

  static constexpr Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static constexpr i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  constexpr void normalize() { *this = make(num_, den_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::string Rational::decimal(int places) const {
  i128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  i128 scaled = i128(num_) * scale;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  // round half away from zero
  i128 q = (scaled + den_ / 2) / den_;
  std::string digits = std::to_string(static_cast<long long>(q % scale));
  digits.insert(0, static_cast<std::size_t>(places) - std::min<std::size_t>(digits.size(), places), '0');
  std::string out = (neg ? "-" : "") + std::to_string(static_cast<long long>(q / scale));
  if (places > 0) out += "." + digits;
  return out;
}

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    const std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string den_text = text.substr(slash + 1);
    const std::int64_t d = std::stoll(den_text, &used);
    if (used != den_text.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + text);
  }
}

}  // namespace riskmat
