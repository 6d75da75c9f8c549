#include "forcelab/field.hpp"

#include <cctype>
#include <cmath>

#include "forcelab/error.hpp"

namespace forcelab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InvalidArgument("prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
}

std::uint32_t PrimeField::reduce(long long x) const {
  long long r = x % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::reduce(const Integer& x) const {
  Integer r = x % p_;
  if (sgn(r) < 0) r += p_;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t PrimeField::reduce(const Rational& x) const {
  const std::uint32_t den = reduce(Integer(x.get_den()));
  if (den == 0) throw InvalidArgument("denominator vanishes modulo " + std::to_string(p_));
  return mul(reduce(Integer(x.get_num())), inv(den));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  long long t = 0;
  long long new_t = 1;
  long long r = p_;
  long long new_r = a;
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

template <>
double QuadraticRational<-1>::imag_value() const {
  return b_.get_d();
}

template <>
double QuadraticRational<-3>::imag_value() const {
  return b_.get_d() * std::sqrt(3.0);
}

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

template <int D>
std::string quadratic_to_string(const QuadraticRational<D>& x, const char* unit) {
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  if (sgn(b) == 0) return a.get_str();
  std::string imag = (b == 1) ? "" : (b == -1) ? "-" : b.get_str();
  imag += unit;
  if (sgn(a) == 0) return imag;
  if (sgn(b) > 0) return a.get_str() + "+" + imag;
  return a.get_str() + imag;
}

}  // namespace

std::string to_string(const GaussianRational& x) { return quadratic_to_string(x, "i"); }
std::string to_string(const EisensteinRational& x) { return quadratic_to_string(x, "s"); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw ParseError("bad rational \"" + std::string(text) + "\"");
    }
  }
  Rational out;
  if (out.set_str(s, 10) != 0) throw ParseError("bad rational \"" + std::string(text) + "\"");
  if (sgn(out.get_den()) == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  out.canonicalize();
  return out;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw ParseError("empty Gaussian rational");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  Rational re(0);
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = parse_rational(body.substr(0, split));
    im_text = body.substr(split);
  }
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text);
  }
  return {re, im};
}

}  // namespace forcelab
