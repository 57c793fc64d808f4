#include "qpslab/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace qps::kernels {

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
    }
    return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

double norm2_scalar(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

#if defined(__x86_64__) || defined(_M_X64)

bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

// Each __m256d holds two interleaved complex doubles: [re0 im0 re1 im1].

__attribute__((target("avx2,fma")))
static inline __m256d cmul256(__m256d a, __m256d b) {
    __m256d b_re = _mm256_movedup_pd(b);                  // [br0 br0 br1 br1]
    __m256d b_im = _mm256_permute_pd(b, 0b1111);          // [bi0 bi0 bi1 bi1]
    __m256d a_sw = _mm256_permute_pd(a, 0b0101);          // [ai0 ar0 ai1 ar1]
    __m256d t = _mm256_mul_pd(a_sw, b_im);                // [ai*bi ar*bi ...]
    return _mm256_fmaddsub_pd(a, b_re, t);                // [ar*br-ai*bi, ai*br+ar*bi]
}

__attribute__((target("avx2,fma")))
cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc = _mm256_add_pd(acc, cmul256(va, vb));
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    cplx s(buf[0] + buf[2], buf[1] + buf[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma")))
cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
    // conj(a)*b = cmul(conj(a), b); negate imag lanes of a.
    const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_xor_pd(_mm256_loadu_pd(pa + 2 * i), conj_mask);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc = _mm256_add_pd(acc, cmul256(va, vb));
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    cplx s(buf[0] + buf[2], buf[1] + buf[3]);
    for (; i < n; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

__attribute__((target("avx2,fma")))
void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const __m256d va = _mm256_setr_pd(alpha.real(), alpha.imag(),
                                      alpha.real(), alpha.imag());
    std::size_t i = 0;
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        vy = _mm256_add_pd(vy, cmul256(vx, va));
        _mm256_storeu_pd(py + 2 * i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

__attribute__((target("avx2,fma")))
double norm2_avx2(const cplx* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* pa = reinterpret_cast<const double*>(a);
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double s = buf[0] + buf[1] + buf[2] + buf[3];
    for (; i < n; ++i) s += std::norm(a[i]);
    return s;
}

#endif // x86_64

namespace {

struct Dispatch {
    cplx (*dotc)(const cplx*, const cplx*, std::size_t) = dotc_scalar;
    cplx (*dotu)(const cplx*, const cplx*, std::size_t) = dotu_scalar;
    void (*axpy)(cplx, const cplx*, cplx*, std::size_t) = axpy_scalar;
    double (*norm2)(const cplx*, std::size_t) = norm2_scalar;
    std::string name = "scalar";
};

Dispatch select_backend() {
    Dispatch d;
    const char* env = std::getenv("QPSLAB_SIMD");
    bool want_scalar = env && std::string(env) == "scalar";
#if defined(__x86_64__) || defined(_M_X64)
    if (!want_scalar && avx2_available()) {
        d.dotc = dotc_avx2;
        d.dotu = dotu_avx2;
        d.axpy = axpy_avx2;
        d.norm2 = norm2_avx2;
        d.name = "avx2";
    }
#else
    (void)want_scalar;
#endif
    return d;
}

const Dispatch& dispatch() {
    static const Dispatch d = select_backend();
    return d;
}

} // namespace

cplx dotc(const cplx* a, const cplx* b, std::size_t n) { return dispatch().dotc(a, b, n); }
cplx dotu(const cplx* a, const cplx* b, std::size_t n) { return dispatch().dotu(a, b, n); }
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { dispatch().axpy(alpha, x, y, n); }
double norm2(const cplx* a, std::size_t n) { return dispatch().norm2(a, n); }

const std::string& active_backend() { return dispatch().name; }

} // namespace qps::kernels
