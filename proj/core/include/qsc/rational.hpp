#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsc {

using Int = long long;

/// Exact rational on 64-bit numerator/denominator. All intermediates go
/// through 128-bit integers and overflow throws instead of wrapping; the
/// quantities in this library (alcove coordinates, weights over levels,
/// facet functionals) keep magnitudes tiny, so 64 bits is ample headroom.
class Rat {
public:
  Rat() = default;
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
    reduce();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  /// Largest integer <= value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  /// Value minus its floor, in [0,1).
  Rat frac() const { return *this - Rat(floor()); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  static Rat parse(const std::string& s);

private:
  using i128 = __int128;
  static Rat make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = checked(n);
    r.den_ = checked(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  static Int checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat overflow");
    return static_cast<Int>(v);
  }
  void reduce() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace qsc
