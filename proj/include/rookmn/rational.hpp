#ifndef ROOKMN_RATIONAL_HPP
#define ROOKMN_RATIONAL_HPP

#include <string>

#include "rookmn/ints.hpp"

namespace rookmn {

// Exact rational with 128-bit numerator/denominator, always reduced,
// denominator > 0. Decimals are a rendering, never the stored value.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int128 num, Int128 den) : num_(num), den_(den) { reduce(); }

  Int128 num() const { return num_; }
  Int128 den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    // Safe within this artifact's ranges: census numerators/denominators stay
    // far below the 2^127 cross-product bound.
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }

  // "num/den", or just "num" when the denominator is 1.
  std::string to_fraction_string() const {
    if (den_ == 1) return rookmn::to_string(num_);
    return rookmn::to_string(num_) + "/" + rookmn::to_string(den_);
  }

  // Fixed-point rendering rounded to `places` decimals, half away from zero.
  std::string to_decimal_string(int places = 4) const {
    Int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool neg = num_ < 0;
    const Int128 abs_num = neg ? -num_ : num_;
    const Int128 scaled = abs_num * scale;
    Int128 q = scaled / den_;
    const Int128 r = scaled % den_;
    if (2 * r >= den_) ++q;
    std::string digits = rookmn::to_string(q);
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, places + 1 - digits.size(), '0');
    if (places > 0) digits.insert(digits.size() - places, ".");
    return (neg ? "-" : "") + digits;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Int128 gcd(Int128 a, Int128 b) {
    while (b != 0) {
      const Int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void reduce() {
    if (den_ == 0) throw OverflowError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int128 g = gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int128 num_;
  Int128 den_;
};

}  // namespace rookmn

#endif  // ROOKMN_RATIONAL_HPP
