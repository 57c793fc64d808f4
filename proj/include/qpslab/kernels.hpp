#pragma once
// Complex vector kernels: scalar reference implementations plus AVX2
// variants selected once at startup. All higher-level dense algebra
// (matmul, traces, Frobenius norms) routes through these entry points.

#include <complex>
#include <cstddef>
#include <string>

namespace qps::kernels {

using cplx = std::complex<double>;

// sum_i conj(a[i]) * b[i]
cplx dotc(const cplx* a, const cplx* b, std::size_t n);

// sum_i a[i] * b[i]
cplx dotu(const cplx* a, const cplx* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// sum_i |a[i]|^2
double norm2(const cplx* a, std::size_t n);

// Scalar reference paths, always available (equivalence tests compare
// the dispatched backend against these).
cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n);
cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n);
void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double norm2_scalar(const cplx* a, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n);
cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n);
void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double norm2_avx2(const cplx* a, std::size_t n);
bool avx2_available();
#endif

// Name of the backend picked at startup ("scalar" or "avx2").
// Override with QPSLAB_SIMD=scalar|avx2 in the environment.
const std::string& active_backend();

} // namespace qps::kernels
