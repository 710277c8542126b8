// AVX2+FMA variants of the kernels. Complex numbers are interleaved
// (re, im) pairs, two per 256-bit register.

#include "ringclock/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ringclock::kernels::detail {

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

// [ar, ai, ...] * [br, bi, ...] -> [ar*br - ai*bi, ar*bi + ai*br, ...]
inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);           // [br, br, ...]
    const __m256d bi = _mm256_permute_pd(b, 0xF);      // [bi, bi, ...]
    const __m256d asw = _mm256_permute_pd(a, 0x5);     // [ai, ar, ...]
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(asw, bi));
}

inline cxd reduce_c(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

inline double reduce_d(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cmul_inplace_avx2(cxd* a, const cxd* b, std::size_t n) {
    std::size_t i = 0;
    auto* pa = reinterpret_cast<double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, cmul2(va, vb));
    }
    for (; i < n; ++i) a[i] *= b[i];
}

cxd csum_avx2(const cxd* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const auto* pa = reinterpret_cast<const double*>(a);
    for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, _mm256_loadu_pd(pa + 2 * i));
    cxd tail = reduce_c(acc);
    for (; i < n; ++i) tail += a[i];
    return tail;
}

cxd cdot_conj_avx2(const cxd* a, const cxd* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const auto* pa = reinterpret_cast<const double*>(a);
    const auto* pb = reinterpret_cast<const double*>(b);
    const __m256d negodd = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        va = _mm256_xor_pd(va, negodd);  // conj(a)
        acc = _mm256_add_pd(acc, cmul2(va, vb));
    }
    cxd tail = reduce_c(acc);
    for (; i < n; ++i) tail += std::conj(a[i]) * b[i];
    return tail;
}

void pair_denom_div_avx2(cxd* row, cxd s, const cxd* d, std::size_t n) {
    std::size_t i = 0;
    auto* pr = reinterpret_cast<double*>(row);
    const auto* pd = reinterpret_cast<const double*>(d);
    const __m256d vs = _mm256_set_pd(s.imag(), s.real(), s.imag(), s.real());
    const __m256d negodd = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(pr + 2 * i);
        const __m256d vd = _mm256_add_pd(vs, _mm256_loadu_pd(pd + 2 * i));
        const __m256d sq = _mm256_mul_pd(vd, vd);
        const __m256d nrm = _mm256_hadd_pd(sq, sq);  // [|d0|^2, |d0|^2, |d1|^2, |d1|^2]
        const __m256d num = cmul2(vx, _mm256_xor_pd(vd, negodd));
        _mm256_storeu_pd(pr + 2 * i, _mm256_div_pd(num, nrm));
    }
    for (; i < n; ++i) {
        const cxd den = s + d[i];
        row[i] = row[i] * std::conj(den) / std::norm(den);
    }
}

void abs2_avx2(const cxd* a, double* out, std::size_t n) {
    std::size_t i = 0;
    const auto* pa = reinterpret_cast<const double*>(a);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d sq = _mm256_mul_pd(va, va);
        const __m256d h = _mm256_hadd_pd(sq, sq);  // [n0, n0, n1, n1]
        out[i] = _mm_cvtsd_f64(_mm256_castpd256_pd128(h));
        out[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(h, 1));
    }
    for (; i < n; ++i) out[i] = std::norm(a[i]);
}

double sum_abs2_avx2(const cxd* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const auto* pa = reinterpret_cast<const double*>(a);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double tail = reduce_d(acc);
    for (; i < n; ++i) tail += std::norm(a[i]);
    return tail;
}

double trapezoid_uniform_avx2(const double* y, std::size_t n, double dt) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(y + i));
    double s = reduce_d(acc);
    for (; i + 1 < n; ++i) s += y[i];
    return (s + 0.5 * (y[0] + y[n - 1])) * dt;
}

}  // namespace ringclock::kernels::detail

#endif  // x86_64
