#include "ringclock/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ringclock::kernels {

namespace detail {

void cmul_inplace_scalar(cxd* a, const cxd* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
}

cxd csum_scalar(const cxd* a, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real();
        im += a[i].imag();
    }
    return {re, im};
}

cxd cdot_conj_scalar(const cxd* a, const cxd* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void pair_denom_div_scalar(cxd* row, cxd s, const cxd* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = s.real() + d[i].real();
        const double di = s.imag() + d[i].imag();
        const double inv = 1.0 / (dr * dr + di * di);
        const double xr = row[i].real(), xi = row[i].imag();
        row[i] = {(xr * dr + xi * di) * inv, (xi * dr - xr * di) * inv};
    }
}

void abs2_scalar(const cxd* a, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(a[i]);
}

double sum_abs2_scalar(const cxd* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
    return acc;
}

double trapezoid_uniform_scalar(const double* y, std::size_t n, double dt) {
    if (n < 2) return 0.0;
    double acc = 0.5 * (y[0] + y[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) acc += y[i];
    return acc * dt;
}

}  // namespace detail

namespace {

Backend detect_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (const char* env = std::getenv("RINGCLOCK_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    }
    if (detail::avx2_available()) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

Backend g_backend = detect_backend();

}  // namespace

Backend active_backend() { return g_backend; }
void force_backend(Backend b) {
#if !defined(__x86_64__) && !defined(_M_X64)
    b = Backend::Scalar;
#endif
    g_backend = b;
}

#if defined(__x86_64__) || defined(_M_X64)
#define RC_DISPATCH(fn, ...)                                        \
    (g_backend == Backend::Avx2 ? detail::fn##_avx2(__VA_ARGS__)    \
                                : detail::fn##_scalar(__VA_ARGS__))
#else
#define RC_DISPATCH(fn, ...) detail::fn##_scalar(__VA_ARGS__)
#endif

void cmul_inplace(cxd* a, const cxd* b, std::size_t n) { RC_DISPATCH(cmul_inplace, a, b, n); }
cxd csum(const cxd* a, std::size_t n) { return RC_DISPATCH(csum, a, n); }
cxd cdot_conj(const cxd* a, const cxd* b, std::size_t n) { return RC_DISPATCH(cdot_conj, a, b, n); }
void pair_denom_div(cxd* row, cxd s, const cxd* d, std::size_t n) {
    RC_DISPATCH(pair_denom_div, row, s, d, n);
}
void abs2(const cxd* a, double* out, std::size_t n) { RC_DISPATCH(abs2, a, out, n); }
double sum_abs2(const cxd* a, std::size_t n) { return RC_DISPATCH(sum_abs2, a, n); }
double trapezoid_uniform(const double* y, std::size_t n, double dt) {
    return RC_DISPATCH(trapezoid_uniform, y, n, dt);
}

#undef RC_DISPATCH

}  // namespace ringclock::kernels
