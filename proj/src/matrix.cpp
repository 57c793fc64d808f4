#include "qpslab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpslab/eig.hpp"

namespace qps {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

Operator::Operator(int n, int d) : n_(n), d_(d), dim_(ipow(d, n)) {
    if (n < 1 || d < 2) throw std::invalid_argument("Operator: need n >= 1, d >= 2");
    a_.assign(static_cast<std::size_t>(dim_) * dim_, cplx(0.0, 0.0));
}

Operator Operator::identity(int n, int d) {
    Operator out(n, d);
    for (int i = 0; i < out.dim_; ++i) out.at(i, i) = 1.0;
    return out;
}

static void check_same_shape(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim() || a.d() != b.d())
        throw std::invalid_argument("Operator: shape mismatch");
}

Operator Operator::operator+(const Operator& o) const {
    check_same_shape(*this, o);
    Operator out = *this;
    kernels::axpy(1.0, o.a_.data(), out.a_.data(), a_.size());
    return out;
}

Operator Operator::operator-(const Operator& o) const {
    check_same_shape(*this, o);
    Operator out = *this;
    kernels::axpy(-1.0, o.a_.data(), out.a_.data(), a_.size());
    return out;
}

Operator Operator::operator*(const Operator& o) const {
    check_same_shape(*this, o);
    Operator out(n_, d_);
    // C[i,:] += A[i,k] * B[k,:]
    for (int i = 0; i < dim_; ++i) {
        cplx* ci = out.row(i);
        const cplx* ai = row(i);
        for (int k = 0; k < dim_; ++k) {
            if (ai[k] == cplx(0.0, 0.0)) continue;
            kernels::axpy(ai[k], o.row(k), ci, static_cast<std::size_t>(dim_));
        }
    }
    return out;
}

Operator Operator::scaled(cplx s) const {
    Operator out(n_, d_);
    kernels::axpy(s, a_.data(), out.a_.data(), a_.size());
    return out;
}

Operator Operator::adjoint() const {
    Operator out(n_, d_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            out.at(j, i) = std::conj(at(i, j));
    return out;
}

cplx Operator::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double Operator::frob_norm() const {
    return std::sqrt(kernels::norm2(a_.data(), a_.size()));
}

double Operator::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double Operator::herm_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    return m;
}

void Operator::add_scaled(const Operator& o, cplx s) {
    check_same_shape(*this, o);
    kernels::axpy(s, o.a_.data(), a_.data(), a_.size());
}

double frob_dist(const Operator& a, const Operator& b) {
    return (a - b).frob_norm();
}

cplx trace_product(const Operator& a, const Operator& b) {
    check_same_shape(a, b);
    // Tr[AB] = sum_i A[i,:] . B[:,i]; use B^T rows to keep unit stride.
    cplx t = 0.0;
    const int dim = a.dim();
    std::vector<cplx> col(dim);
    for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) col[k] = b.at(k, i);
        t += kernels::dotu(a.row(i), col.data(), static_cast<std::size_t>(dim));
    }
    return t;
}

DensityOperator::DensityOperator(Operator op, bool psd_check) : op_(std::move(op)) {
    if (op_.herm_defect() > kTolHerm)
        throw std::invalid_argument("DensityOperator: not Hermitian within tolerance");
    if (std::abs(op_.trace() - cplx(1.0, 0.0)) > kTolTrace)
        throw std::invalid_argument("DensityOperator: trace != 1 within tolerance");
    if (psd_check) {
        const auto spec = eig_hermitian(op_);
        if (spec.eigenvalues.back() < -kTolPsd)
            throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                        std::to_string(spec.eigenvalues.back()));
    }
}

double DensityOperator::purity() const {
    return trace_product(op_, op_).real();
}

Operator kron(const Operator& a, const Operator& b) {
    if (a.d() != b.d())
        throw std::invalid_argument("kron: local dimension mismatch");
    Operator out(a.n() + b.n(), a.d());
    const int da = a.dim(), db = b.dim();
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cplx aij = a.at(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < db; ++k)
                kernels::axpy(aij, b.row(k), out.row(i * db + k) + j * db,
                              static_cast<std::size_t>(db));
        }
    return out;
}

namespace {

// Multi-index helpers: factor 0 is most significant.
struct Digits {
    int n, d;
    std::vector<int> stride;  // stride[j] = d^{n-1-j}
    explicit Digits(int n_, int d_) : n(n_), d(d_), stride(n_) {
        int s = 1;
        for (int j = n - 1; j >= 0; --j) { stride[j] = s; s *= d; }
    }
    int digit(int idx, int j) const { return idx / stride[j] % d; }
};

void check_indices(const std::vector<int>& idx, int n) {
    if (idx.empty()) throw std::invalid_argument("empty factor index set");
    for (int i : idx)
        if (i < 0 || i >= n) throw std::out_of_range("factor index out of range");
}

} // namespace

Operator partial_trace_op(const Operator& op, const std::vector<int>& keep) {
    const int n = op.n(), d = op.d();
    check_indices(keep, n);
    std::vector<bool> kept(n, false);
    for (int i : keep) kept[i] = true;
    std::vector<int> keep_sorted, rest;
    for (int j = 0; j < n; ++j) (kept[j] ? keep_sorted : rest).push_back(j);

    const int nk = static_cast<int>(keep_sorted.size());
    if (nk == n) return op;
    Operator out(nk, d);
    Digits dg(n, d);
    int dim_keep = out.dim(), dim_rest = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) dim_rest *= d;

    // Full-space index from (kept digits, rest digits).
    auto full_index = [&](int ik, int ir) {
        int idx = 0;
        Digits dk(nk, d);
        for (int j = 0; j < nk; ++j) idx += dk.digit(ik, j) * dg.stride[keep_sorted[j]];
        Digits dr(static_cast<int>(rest.size()), d);
        for (std::size_t j = 0; j < rest.size(); ++j)
            idx += dr.digit(ir, static_cast<int>(j)) * dg.stride[rest[j]];
        return idx;
    };

    for (int a = 0; a < dim_keep; ++a)
        for (int b = 0; b < dim_keep; ++b) {
            cplx s = 0.0;
            for (int r = 0; r < dim_rest; ++r)
                s += op.at(full_index(a, r), full_index(b, r));
            out.at(a, b) = s;
        }
    return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    return DensityOperator(partial_trace_op(rho.op(), keep), false);
}

Operator partial_transpose(const Operator& op, const std::vector<int>& part) {
    const int n = op.n(), d = op.d();
    check_indices(part, n);
    std::vector<bool> flip(n, false);
    for (int i : part) flip[i] = true;
    Operator out(n, d);
    Digits dg(n, d);
    const int dim = op.dim();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            int rr = 0, cc = 0;
            for (int j = 0; j < n; ++j) {
                int rj = dg.digit(r, j), cj = dg.digit(c, j);
                if (flip[j]) std::swap(rj, cj);
                rr += rj * dg.stride[j];
                cc += cj * dg.stride[j];
            }
            out.at(rr, cc) = op.at(r, c);
        }
    return out;
}

Operator embed(const Operator& op, const std::vector<int>& where, int n_total, int d) {
    check_indices(where, n_total);
    if (op.n() != static_cast<int>(where.size()) || op.d() != d)
        throw std::invalid_argument("embed: operator shape does not match index set");
    for (std::size_t j = 1; j < where.size(); ++j)
        if (where[j] <= where[j - 1])
            throw std::invalid_argument("embed: indices must be strictly increasing");

    Operator out(n_total, d);
    Digits dg(n_total, d);
    std::vector<bool> inset(n_total, false);
    for (int i : where) inset[i] = true;
    std::vector<int> rest;
    for (int j = 0; j < n_total; ++j) if (!inset[j]) rest.push_back(j);

    const int ns = op.n();
    Digits ds(ns, d);
    int dim_rest = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) dim_rest *= d;
    Digits dr(std::max<int>(1, static_cast<int>(rest.size())), d);

    for (int a = 0; a < op.dim(); ++a)
        for (int b = 0; b < op.dim(); ++b) {
            const cplx v = op.at(a, b);
            if (v == cplx(0.0, 0.0)) continue;
            for (int r = 0; r < dim_rest; ++r) {
                int rr = 0, cc = 0;
                for (int j = 0; j < ns; ++j) {
                    rr += ds.digit(a, j) * dg.stride[where[j]];
                    cc += ds.digit(b, j) * dg.stride[where[j]];
                }
                for (std::size_t j = 0; j < rest.size(); ++j) {
                    const int rd = dr.digit(r, static_cast<int>(j)) * dg.stride[rest[j]];
                    rr += rd;
                    cc += rd;
                }
                out.at(rr, cc) = v;
            }
        }
    return out;
}

} // namespace qps
