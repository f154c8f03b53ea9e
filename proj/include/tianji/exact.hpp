#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace tianji {

/// Unbounded signed integer. Outcome counts grow like n!, which leaves
/// 64-bit range at n = 21, so every count in this library is an Int.
using Int = boost::multiprecision::cpp_int;

/// n! computed exactly.
inline Int factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for signed upper
/// argument n and k >= 0. Yields 0 when 0 <= n < k. Each step of the
/// incremental product divides exactly: C(n,i)*(n-i) = C(n,i+1)*(i+1)
/// holds as a polynomial identity in n.
inline Int binomial(const Int& n, long long k) {
  if (k < 0) throw std::domain_error("binomial: negative lower argument");
  Int result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

inline Int binomial(long long n, long long k) { return binomial(Int(n), k); }

/// Reduced fraction of Ints with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("undefined ratio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  explicit Rational(Int whole) : num_(std::move(whole)), den_(1) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  // den > 0 always holds, so cross-multiplication keeps the order.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) {
  return r.num() < 0 ? -r : r;
}

/// Whole-number percent of r in [0, 1], exact halves rounded up.
/// round(100r) = floor((200*num + den) / (2*den)), all in integers.
inline int percent_half_up(const Rational& r) {
  if (r.num() < 0 || r.num() > r.den())
    throw std::domain_error("percent_half_up: value outside [0, 1]");
  Int p = (200 * r.num() + r.den()) / (2 * r.den());
  return static_cast<int>(p);
}

}  // namespace tianji
