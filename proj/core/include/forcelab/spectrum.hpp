#pragma once

#include <complex>
#include <span>
#include <vector>

#include "forcelab/exact.hpp"
#include "forcelab/matrix.hpp"

namespace forcelab {

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

/// Eigenvalues sorted in descending order.
struct Spectrum {
  std::vector<double> values;
  double tol = 1e-10;
};

/// Cyclic Jacobi on a real symmetric matrix. Throws InvalidArgument when the
/// input is not symmetric.
Spectrum spectrum(const RealMatrix& m, double tol = 1e-10);
/// Hermitian input, handled through the real embedding [[Re, -Im], [Im, Re]]
/// whose spectrum is that of m with every value doubled.
Spectrum spectrum(const ComplexMatrix& m, double tol = 1e-10);
/// Any ExactMatrix over Q, Q(i) or Q(sqrt-3); prime-field input is rejected.
Spectrum spectrum(const ExactMatrix& m, double tol = 1e-10);

RealMatrix to_real(const RationalMatrix& m);
ComplexMatrix to_complex(const ExactMatrix& m);

/// Sorted pairwise comparison of two multisets of reals.
bool same_multiset(std::span<const double> a, std::span<const double> b, double tol = 1e-6);

/// True when every value of `sub` can be matched to a distinct value of `super`
/// within tol.
bool contained_multiset(std::span<const double> sub, std::span<const double> super,
                        double tol = 1e-6);

}  // namespace forcelab
