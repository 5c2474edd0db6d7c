#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mixdom {

// Exact rational arithmetic on 64-bit components. Weights and solution
// values in this toolkit stay tiny, so normalized int64 is plenty;
// comparisons cross-multiply through __int128 and cannot overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  // Accepts "p", "p/q", or a plain decimal such as "1.5" (converted exactly).
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const { return double(num_) / double(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(a.num_, b.den_);
    long long g2 = std::gcd(b.num_, a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
};

namespace detail {

inline long long parse_ll(const char* first, const char* last, const std::string& whole) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("not a rational: '" + whole + "'");
  return out;
}

}  // namespace detail

inline Rational Rational::parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("not a rational: empty string");
  std::string s = text.substr(b, e - b + 1);
  long long sign = 1;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1;
    pos++;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("not a rational: '" + text + "'");
  const char* d0 = body.data();
  if (auto slash = body.find('/'); slash != std::string::npos) {
    long long p = detail::parse_ll(d0, d0 + slash, text);
    long long q = detail::parse_ll(d0 + slash + 1, d0 + body.size(), text);
    if (q <= 0) throw std::invalid_argument("not a rational: '" + text + "'");
    return Rational(sign * p, q);
  }
  if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("not a rational: '" + text + "'");
    if (fp.size() > 17) throw std::invalid_argument("decimal too long: '" + text + "'");
    long long den = 1;
    for (size_t i = 0; i < fp.size(); i++) den *= 10;
    long long whole = ip.empty() ? 0 : detail::parse_ll(ip.data(), ip.data() + ip.size(), text);
    long long frac = fp.empty() ? 0 : detail::parse_ll(fp.data(), fp.data() + fp.size(), text);
    return Rational(sign * (whole * den + frac), den);
  }
  return Rational(sign * detail::parse_ll(d0, d0 + body.size(), text), 1);
}

}  // namespace mixdom
