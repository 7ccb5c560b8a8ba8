#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace starsync {

using cplx = std::complex<double>;

/// Sparse operator on a Hilbert space (or its doubled space), column-major.
using SparseOp = Eigen::SparseMatrix<cplx>;

/// Dense Hermitian, unit-trace, PSD matrix on the network Hilbert space.
/// Validity is checked with validate_density(), not enforced by the type.
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kSiteDim = 3;  // spin-1: m = +1, 0, -1

/// 3^n as a signed 64-bit value.
inline std::int64_t hilbert_dim(int n_sites) {
  std::int64_t d = 1;
  for (int i = 0; i < n_sites; ++i) d *= kSiteDim;
  return d;
}

/// Number of sites of a 3^n-dimensional space; -1 if dim is not a power of 3.
inline int site_count(std::int64_t dim) {
  int n = 0;
  std::int64_t d = 1;
  while (d < dim) {
    d *= kSiteDim;
    ++n;
  }
  return d == dim ? n : -1;
}

}  // namespace starsync
