#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops used by the hot paths (Lyapunov recursion,
// tick-PDF evaluation, momentum projections, quadrature).  Each kernel has
// a scalar reference implementation and an AVX2+FMA variant; the active
// backend is selected once at runtime from CPU features.  Results of the
// two backends agree to rounding (see tests/test_kernels.cpp).

namespace ringclock::kernels {

using cxd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// Backend chosen for this process (CPU detection + RINGCLOCK_KERNELS env).
Backend active_backend();

/// Force a backend, e.g. to compare outputs in tests. Not thread-safe.
void force_backend(Backend b);

/// a[i] *= b[i]
void cmul_inplace(cxd* a, const cxd* b, std::size_t n);

/// sum_i a[i]
cxd csum(const cxd* a, std::size_t n);

/// sum_i conj(a[i]) * b[i]
cxd cdot_conj(const cxd* a, const cxd* b, std::size_t n);

/// row[i] /= (s + d[i])
void pair_denom_div(cxd* row, cxd s, const cxd* d, std::size_t n);

/// out[i] = |a[i]|^2
void abs2(const cxd* a, double* out, std::size_t n);

/// sum_i |a[i]|^2
double sum_abs2(const cxd* a, std::size_t n);

/// Trapezoid rule on a uniform grid with spacing dt.
double trapezoid_uniform(const double* y, std::size_t n, double dt);

namespace detail {
// Scalar reference implementations (always available; ground truth for the
// SIMD equivalence tests).
void cmul_inplace_scalar(cxd* a, const cxd* b, std::size_t n);
cxd csum_scalar(const cxd* a, std::size_t n);
cxd cdot_conj_scalar(const cxd* a, const cxd* b, std::size_t n);
void pair_denom_div_scalar(cxd* row, cxd s, const cxd* d, std::size_t n);
void abs2_scalar(const cxd* a, double* out, std::size_t n);
double sum_abs2_scalar(const cxd* a, std::size_t n);
double trapezoid_uniform_scalar(const double* y, std::size_t n, double dt);

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
void cmul_inplace_avx2(cxd* a, const cxd* b, std::size_t n);
cxd csum_avx2(const cxd* a, std::size_t n);
cxd cdot_conj_avx2(const cxd* a, const cxd* b, std::size_t n);
void pair_denom_div_avx2(cxd* row, cxd s, const cxd* d, std::size_t n);
void abs2_avx2(const cxd* a, double* out, std::size_t n);
double sum_abs2_avx2(const cxd* a, std::size_t n);
double trapezoid_uniform_avx2(const double* y, std::size_t n, double dt);
#endif
}  // namespace detail

}  // namespace ringclock::kernels
