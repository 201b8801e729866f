#pragma once
// Arbitrary-precision rationals and Gaussian rationals (a + b*i with a, b rational).
#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bkc {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  static Rational of(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  std::string str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
  }

  // Parses "-3", "+2", "5/7".
  static Rational parse(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

 private:
  struct raw_tag {};
  Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }
  BigInt num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// a + b*i with rational a, b.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational operator+(const GaussRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
  GaussRational operator-(const GaussRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
  GaussRational operator*(const GaussRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussRational conj() const { return {re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }

 private:
  Rational re_, im_;
};

}  // namespace bkc
