#pragma once
// Exact arithmetic over Z_d (d prime) and the symplectic phase space
// V^n = Z_d^n x Z_d^n: phase points, subgroups, Gaussian elimination,
// symplectic complements.

#include <cstdint>
#include <string>
#include <vector>

namespace qps {

bool is_prime(int d);

// Prime modulus with cached inverses (Z_d is a field).
class PrimeModulus {
public:
    explicit PrimeModulus(int d);

    int d() const { return d_; }
    int reduce(long long x) const {
        long long r = x % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }
    int add(int a, int b) const { return (a + b) % d_; }
    int sub(int a, int b) const { return (a - b + d_) % d_; }
    int mul(int a, int b) const { return (a * b) % d_; }
    int neg(int a) const { return (d_ - a) % d_; }
    int inv(int a) const;          // a != 0
    int half() const;              // 2^{-1}, odd d only

    bool operator==(const PrimeModulus& o) const { return d_ == o.d_; }

private:
    int d_;
    std::vector<int> inv_;
};

// A point (p, q) in V^n. Entries normalized to [0, d).
struct PhasePoint {
    int d = 2;
    std::vector<int> p;
    std::vector<int> q;

    PhasePoint() = default;
    PhasePoint(int d_, std::vector<int> p_, std::vector<int> q_);

    int n() const { return static_cast<int>(p.size()); }
    bool is_zero() const;

    // Flat coordinates (p_1..p_n, q_1..q_n).
    std::vector<int> coords() const;
    static PhasePoint from_coords(int d, const std::vector<int>& c);

    PhasePoint scaled(int a) const;           // a * x mod d
    PhasePoint plus(const PhasePoint& o) const;

    bool operator==(const PhasePoint& o) const {
        return d == o.d && p == o.p && q == o.q;
    }
    bool operator<(const PhasePoint& o) const;  // lexicographic over coords

    // "p1,...,pn;q1,...,qn"
    std::string str() const;
    static PhasePoint parse(int d, const std::string& s);

    // Lexicographic index in [0, d^{2n}): digits of p then q, most
    // significant first.
    std::size_t index() const;
    static PhasePoint from_index(int d, int n, std::size_t idx);
};

// [x, y] = p_x . q_y - q_x . p_y  (mod d)
int symplectic_form(const PhasePoint& x, const PhasePoint& y);

// Subgroup of V^n in reduced row echelon basis over Z_d.
class PhaseSubgroup {
public:
    PhaseSubgroup(int d, int n);                           // trivial group
    PhaseSubgroup(int d, int n, std::vector<PhasePoint> basis_rref);

    int d() const { return d_; }
    int n() const { return n_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<PhasePoint>& basis() const { return basis_; }

    bool contains(const PhasePoint& x) const;
    bool same_span(const PhaseSubgroup& o) const;
    bool is_isotropic() const;

    // All d^rank elements, lexicographic in the coefficient vector.
    std::vector<PhasePoint> enumerate() const;

private:
    int d_, n_;
    std::vector<PhasePoint> basis_;  // RREF rows
};

// Basis (RREF) of the span of the given points.
PhaseSubgroup subgroup_from_points(const std::vector<PhasePoint>& points);

// S^perp = { y : [x, y] = 0 for all x in S }; rank 2n - rank(S).
PhaseSubgroup symplectic_complement(const PhaseSubgroup& s);

} // namespace qps
