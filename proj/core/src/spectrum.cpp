#include "forcelab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

std::vector<double> jacobi_eigenvalues(RealMatrix a, double tol) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace

Spectrum spectrum(const RealMatrix& m, double tol) {
  if (!m.is_square()) throw InvalidArgument("spectrum: matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw InvalidArgument("spectrum: matrix is not symmetric");
    }
  }
  return {jacobi_eigenvalues(m, tol), tol};
}

Spectrum spectrum(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw InvalidArgument("spectrum: matrix is not square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (m(i, j) != std::conj(m(j, i))) throw InvalidArgument("spectrum: matrix is not Hermitian");
    }
  }
  RealMatrix big(2 * n, 2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      big(i, j) = re;
      big(i + n, j + n) = re;
      big(i, j + n) = -im;
      big(i + n, j) = im;
    }
  }
  const std::vector<double> doubled = jacobi_eigenvalues(std::move(big), tol);
  Spectrum out{{}, tol};
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.values.push_back(doubled[i]);
  return out;
}

RealMatrix to_real(const RationalMatrix& m) {
  return m.map([](const Rational& x) { return x.get_d(); });
}

ComplexMatrix to_complex(const ExactMatrix& m) {
  switch (m.domain().kind()) {
    case CoeffDomain::Kind::Rationals:
      return m.rational().map([](const Rational& x) { return std::complex<double>(x.get_d(), 0); });
    case CoeffDomain::Kind::GaussianRationals:
      return m.gaussian().map([](const GaussianRational& x) {
        return std::complex<double>(x.real_value(), x.imag_value());
      });
    case CoeffDomain::Kind::EisensteinRationals:
      return m.eisenstein().map([](const EisensteinRational& x) {
        return std::complex<double>(x.real_value(), x.imag_value());
      });
    case CoeffDomain::Kind::PrimeField:
      break;
  }
  throw InvalidArgument("spectrum: no complex embedding for " + m.domain().name());
}

Spectrum spectrum(const ExactMatrix& m, double tol) {
  if (m.domain().kind() == CoeffDomain::Kind::Rationals) return spectrum(to_real(m.rational()), tol);
  return spectrum(to_complex(m), tol);
}

bool same_multiset(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) >= tol) return false;
  }
  return true;
}

bool contained_multiset(std::span<const double> sub, std::span<const double> super, double tol) {
  std::vector<double> pool(super.begin(), super.end());
  std::sort(pool.begin(), pool.end());
  std::vector<bool> used(pool.size(), false);
  std::vector<double> want(sub.begin(), sub.end());
  std::sort(want.begin(), want.end());
  // Greedy matching on sorted lists: take the smallest unused candidate in range.
  for (double w : want) {
    bool matched = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!used[i] && std::abs(pool[i] - w) < tol) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace forcelab
