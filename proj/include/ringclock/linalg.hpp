#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ringclock/errors.hpp"

namespace ringclock::linalg {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cxd = std::complex<double>;

/// Right eigendecomposition A V = V diag(values) of a general complex matrix.
struct Spectrum {
    VectorXcd values;
    MatrixXcd vectors;
    double residual = 0.0;  // max |A V - V Lambda| / max |A|
};

/// Dense non-Hermitian eigendecomposition (LAPACK zgeev), with the
/// entrywise residual filled in.
Spectrum eig(const MatrixXcd& a);

/// Eigenvalues only; much cheaper for large superoperators.
VectorXcd eigvals(const MatrixXcd& a);

/// Matrix exponential exp(A) by scaling and squaring with Pade approximants.
MatrixXcd expm(const MatrixXcd& a);

}  // namespace ringclock::linalg
