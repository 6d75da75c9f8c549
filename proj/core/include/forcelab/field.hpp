#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace forcelab {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t p);

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(long long x) const;
  std::uint32_t reduce(const Integer& x) const;
  /// Throws if the denominator vanishes mod p.
  std::uint32_t reduce(const Rational& x) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// a + b*sqrt(D) with rational a, b. D = -1 gives the Gaussian rationals,
/// D = -3 the field containing the primitive cube and sixth roots of unity.
template <int D>
class QuadraticRational {
 public:
  QuadraticRational() = default;
  QuadraticRational(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  QuadraticRational(long a) : a_(a) {}                 // NOLINT(implicit)
  QuadraticRational(int a) : a_(a) {}                  // NOLINT(implicit)
  QuadraticRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadraticRational root() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  QuadraticRational conj() const { return {a_, -b_}; }
  /// a^2 - D b^2, always rational.
  Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  QuadraticRational& operator+=(const QuadraticRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadraticRational& operator-=(const QuadraticRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadraticRational& operator*=(const QuadraticRational& o) {
    Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadraticRational& operator/=(const QuadraticRational& o) {
    const Rational n = o.norm();
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadraticRational operator+(QuadraticRational x, const QuadraticRational& y) { return x += y; }
  friend QuadraticRational operator-(QuadraticRational x, const QuadraticRational& y) { return x -= y; }
  friend QuadraticRational operator*(QuadraticRational x, const QuadraticRational& y) { return x *= y; }
  friend QuadraticRational operator/(QuadraticRational x, const QuadraticRational& y) { return x /= y; }
  friend QuadraticRational operator-(const QuadraticRational& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Real and imaginary parts as doubles (D < 0).
  double real_value() const { return a_.get_d(); }
  double imag_value() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

template <>
double QuadraticRational<-1>::imag_value() const;
template <>
double QuadraticRational<-3>::imag_value() const;

using GaussianRational = QuadraticRational<-1>;
using EisensteinRational = QuadraticRational<-3>;

/// "p/q" or "p" for rationals; "a+bi" style for Gaussian rationals.
std::string to_string(const Rational& x);
std::string to_string(const GaussianRational& x);
std::string to_string(const EisensteinRational& x);

Rational parse_rational(std::string_view text);
/// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" with rational a, b.
GaussianRational parse_gaussian(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}
inline std::ostream& operator<<(std::ostream& os, const EisensteinRational& x) {
  return os << to_string(x);
}

}  // namespace forcelab
