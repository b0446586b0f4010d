#include "cauchy_angles/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy_angles {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("BigRational::from_double: non-finite value");
  }
  BigRational r;
  mpq_set_d(r.value_.get_mpq_t(), x);
  return r;
}

std::string BigRational::str() const { return value_.get_str(10); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.value_ == 0) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace cauchy_angles
