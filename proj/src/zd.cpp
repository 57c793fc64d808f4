#include "qpslab/zd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qps {

bool is_prime(int d) {
    if (d < 2) return false;
    for (int f = 2; f * f <= d; ++f)
        if (d % f == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(int d) : d_(d) {
    if (!is_prime(d))
        throw std::invalid_argument("PrimeModulus: d must be prime, got " +
                                    std::to_string(d));
    inv_.assign(d_, 0);
    for (int a = 1; a < d_; ++a)
        for (int b = 1; b < d_; ++b)
            if (a * b % d_ == 1) { inv_[a] = b; break; }
}

int PrimeModulus::inv(int a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("PrimeModulus::inv of 0");
    return inv_[a];
}

int PrimeModulus::half() const {
    if (d_ == 2) throw std::domain_error("2^{-1} does not exist mod 2");
    return (d_ + 1) / 2;
}

static void check_entries(int d, const std::vector<int>& v) {
    for (int x : v)
        if (x < 0 || x >= d)
            throw std::invalid_argument("PhasePoint entry out of [0, d)");
}

PhasePoint::PhasePoint(int d_, std::vector<int> p_, std::vector<int> q_)
    : d(d_), p(std::move(p_)), q(std::move(q_)) {
    if (p.size() != q.size() || p.empty())
        throw std::invalid_argument("PhasePoint: p, q must be nonempty, equal length");
    check_entries(d, p);
    check_entries(d, q);
}

bool PhasePoint::is_zero() const {
    for (int x : p) if (x != 0) return false;
    for (int x : q) if (x != 0) return false;
    return true;
}

std::vector<int> PhasePoint::coords() const {
    std::vector<int> c = p;
    c.insert(c.end(), q.begin(), q.end());
    return c;
}

PhasePoint PhasePoint::from_coords(int d, const std::vector<int>& c) {
    const std::size_t n = c.size() / 2;
    return PhasePoint(d, {c.begin(), c.begin() + n}, {c.begin() + n, c.end()});
}

PhasePoint PhasePoint::scaled(int a) const {
    PhasePoint r = *this;
    a = ((a % d) + d) % d;
    for (int& x : r.p) x = x * a % d;
    for (int& x : r.q) x = x * a % d;
    return r;
}

PhasePoint PhasePoint::plus(const PhasePoint& o) const {
    if (d != o.d || n() != o.n())
        throw std::invalid_argument("PhasePoint::plus: (n, d) mismatch");
    PhasePoint r = *this;
    for (int i = 0; i < n(); ++i) {
        r.p[i] = (r.p[i] + o.p[i]) % d;
        r.q[i] = (r.q[i] + o.q[i]) % d;
    }
    return r;
}

bool PhasePoint::operator<(const PhasePoint& o) const {
    return coords() < o.coords();
}

std::string PhasePoint::str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << p[i];
    os << ';';
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << q[i];
    return os.str();
}

static std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    return v;
}

PhasePoint PhasePoint::parse(int d, const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("PhasePoint::parse: missing ';' in \"" + s + "\"");
    auto pv = parse_ints(s.substr(0, semi));
    auto qv = parse_ints(s.substr(semi + 1));
    for (auto* v : {&pv, &qv})
        for (int& x : *v) x = ((x % d) + d) % d;
    return PhasePoint(d, std::move(pv), std::move(qv));
}

std::size_t PhasePoint::index() const {
    std::size_t idx = 0;
    for (int x : p) idx = idx * d + x;
    for (int x : q) idx = idx * d + x;
    return idx;
}

PhasePoint PhasePoint::from_index(int d, int n, std::size_t idx) {
    std::vector<int> c(2 * n);
    for (int i = 2 * n - 1; i >= 0; --i) {
        c[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return from_coords(d, c);
}

int symplectic_form(const PhasePoint& x, const PhasePoint& y) {
    if (x.d != y.d || x.n() != y.n())
        throw std::invalid_argument("symplectic_form: (n, d) mismatch");
    long long s = 0;
    for (int i = 0; i < x.n(); ++i)
        s += static_cast<long long>(x.p[i]) * y.q[i] -
             static_cast<long long>(x.q[i]) * y.p[i];
    long long r = s % x.d;
    return static_cast<int>(r < 0 ? r + x.d : r);
}

// --- RREF over Z_d -------------------------------------------------------

namespace {

// Rows are flat coordinate vectors of length 2n. Returns RREF rows with
// zero rows removed, pivot columns increasing.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows,
                                   const PrimeModulus& m) {
    if (rows.empty()) return rows;
    const std::size_t w = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < w && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const int s = m.inv(rows[r][col]);
        for (auto& x : rows[r]) x = m.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const int f = rows[i][col];
            for (std::size_t j = 0; j < w; ++j)
                rows[i][j] = m.sub(rows[i][j], m.mul(f, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

} // namespace

PhaseSubgroup::PhaseSubgroup(int d, int n) : d_(d), n_(n) {
    PrimeModulus check(d);
    if (n < 1) throw std::invalid_argument("PhaseSubgroup: n >= 1 required");
}

PhaseSubgroup::PhaseSubgroup(int d, int n, std::vector<PhasePoint> basis_rref)
    : PhaseSubgroup(d, n) {
    basis_ = std::move(basis_rref);
    for (const auto& b : basis_)
        if (b.d != d || b.n() != n)
            throw std::invalid_argument("PhaseSubgroup: basis point (n, d) mismatch");
}

bool PhaseSubgroup::contains(const PhasePoint& x) const {
    if (x.d != d_ || x.n() != n_) return false;
    PrimeModulus m(d_);
    std::vector<int> v = x.coords();
    for (const auto& b : basis_) {
        auto bc = b.coords();
        // pivot of b is its first nonzero entry (unit by RREF)
        std::size_t piv = 0;
        while (piv < bc.size() && bc[piv] == 0) ++piv;
        if (piv == bc.size()) continue;
        const int f = v[piv];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = m.sub(v[j], m.mul(f, bc[j]));
    }
    for (int e : v) if (e != 0) return false;
    return true;
}

bool PhaseSubgroup::same_span(const PhaseSubgroup& o) const {
    if (d_ != o.d_ || n_ != o.n_ || rank() != o.rank()) return false;
    for (const auto& b : basis_) if (!o.contains(b)) return false;
    return true;
}

bool PhaseSubgroup::is_isotropic() const {
    for (const auto& a : basis_)
        for (const auto& b : basis_)
            if (symplectic_form(a, b) != 0) return false;
    return true;
}

std::vector<PhasePoint> PhaseSubgroup::enumerate() const {
    std::vector<PhasePoint> out;
    const int r = rank();
    std::size_t total = 1;
    for (int i = 0; i < r; ++i) total *= d_;
    out.reserve(total);
    std::vector<int> zero(2 * n_, 0);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<int> c = zero;
        std::size_t kk = k;
        for (int i = r - 1; i >= 0; --i) {
            const int a = static_cast<int>(kk % d_);
            kk /= d_;
            if (a == 0) continue;
            auto bc = basis_[i].coords();
            for (std::size_t j = 0; j < c.size(); ++j)
                c[j] = (c[j] + a * bc[j]) % d_;
        }
        out.push_back(PhasePoint::from_coords(d_, c));
    }
    return out;
}

PhaseSubgroup subgroup_from_points(const std::vector<PhasePoint>& points) {
    if (points.empty())
        throw std::invalid_argument("subgroup_from_points: empty input");
    const int d = points[0].d;
    const int n = points[0].n();
    PrimeModulus m(d);
    std::vector<std::vector<int>> rows;
    rows.reserve(points.size());
    for (const auto& pt : points) {
        if (pt.d != d || pt.n() != n)
            throw std::invalid_argument("subgroup_from_points: (n, d) mismatch");
        rows.push_back(pt.coords());
    }
    std::sort(rows.begin(), rows.end());  // deterministic elimination order
    auto red = rref(std::move(rows), m);
    std::vector<PhasePoint> basis;
    basis.reserve(red.size());
    for (auto& r : red) basis.push_back(PhasePoint::from_coords(d, r));
    return PhaseSubgroup(d, n, std::move(basis));
}

PhaseSubgroup symplectic_complement(const PhaseSubgroup& s) {
    const int d = s.d(), n = s.n();
    PrimeModulus m(d);
    const int w = 2 * n;
    // Row i of A is the linear form y -> [x_i, y]: coefficients
    // (-q_{x_i}, p_{x_i}) against y's flat coords (p_y, q_y).
    std::vector<std::vector<int>> a;
    for (const auto& x : s.basis()) {
        std::vector<int> row(w);
        for (int j = 0; j < n; ++j) {
            row[j] = m.neg(x.q[j]);
            row[n + j] = x.p[j];
        }
        a.push_back(std::move(row));
    }
    auto red = rref(std::move(a), m);

    // Nullspace basis from free columns.
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(w, false);
    for (const auto& row : red) {
        int piv = 0;
        while (piv < w && row[piv] == 0) ++piv;
        pivot_col.push_back(piv);
        is_pivot[piv] = true;
    }
    std::vector<std::vector<int>> null_rows;
    for (int fc = 0; fc < w; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(w, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < red.size(); ++i)
            v[pivot_col[i]] = m.neg(red[i][fc]);
        null_rows.push_back(std::move(v));
    }
    auto basis_rows = rref(std::move(null_rows), m);  // canonical form
    std::vector<PhasePoint> basis;
    for (auto& r : basis_rows) basis.push_back(PhasePoint::from_coords(d, r));
    return PhaseSubgroup(d, n, std::move(basis));
}

} // namespace qps
