#include "ringclock/linalg.hpp"

#include <lapacke.h>

#include <unsupported/Eigen/MatrixFunctions>

namespace ringclock::linalg {

namespace {

lapack_complex_double* lp(MatrixXcd& m) {
    return reinterpret_cast<lapack_complex_double*>(m.data());
}
lapack_complex_double* lp(VectorXcd& v) {
    return reinterpret_cast<lapack_complex_double*>(v.data());
}

}  // namespace

Spectrum eig(const MatrixXcd& a) {
    if (a.rows() != a.cols()) throw BadDimension("eig: matrix not square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Spectrum s;
    s.values.resize(n);
    s.vectors.resize(n, n);
    if (n == 0) return s;
    MatrixXcd work = a;  // zgeev overwrites its input
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, lp(work), n, lp(s.values), nullptr, 1,
                      lp(s.vectors), n);
    if (info != 0) throw SolveFailure("zgeev failed, info=" + std::to_string(info));
    const double scale = a.cwiseAbs().maxCoeff();
    const MatrixXcd r = a * s.vectors - s.vectors * s.values.asDiagonal();
    s.residual = scale > 0 ? r.cwiseAbs().maxCoeff() / scale : r.cwiseAbs().maxCoeff();
    return s;
}

VectorXcd eigvals(const MatrixXcd& a) {
    if (a.rows() != a.cols()) throw BadDimension("eigvals: matrix not square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    VectorXcd w(n);
    if (n == 0) return w;
    MatrixXcd work = a;
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, lp(work), n, lp(w), nullptr, 1, nullptr, 1);
    if (info != 0) throw SolveFailure("zgeev failed, info=" + std::to_string(info));
    return w;
}

MatrixXcd expm(const MatrixXcd& a) { return a.exp(); }

}  // namespace ringclock::linalg
