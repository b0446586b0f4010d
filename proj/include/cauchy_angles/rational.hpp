#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace cauchy_angles {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(implicit)
  BigRational(const BigInt& num, const BigInt& den);

  /// Exact value of a finite double.
  static BigRational from_double(double x);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }

  /// "p/q" in decimal, or "p" when the denominator is 1.
  std::string str() const;

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational l, const BigRational& r) { return l += r; }
  friend BigRational operator-(BigRational l, const BigRational& r) { return l -= r; }
  friend BigRational operator*(BigRational l, const BigRational& r) { return l *= r; }
  friend BigRational operator/(BigRational l, const BigRational& r) { return l /= r; }
  friend BigRational operator-(const BigRational& x) {
    BigRational r;
    r.value_ = -x.value_;
    return r;
  }

  friend bool operator==(const BigRational& l, const BigRational& r) {
    return l.value_ == r.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& l,
                                          const BigRational& r) {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

}  // namespace cauchy_angles
