// Bott orbifold algebra: tower matrices, ramification, invariant bases,
// the orbifold first Chern class, log-Fano / ampleness / Kahler-cone
// positivity tests, fiber inversion, intersection numbers and the Fano
// index against the orbifold class lattice.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bottjoin/exact.hpp"

namespace bottjoin {

// Lower-triangular unipotent integer matrix: diagonal 1, zero above.
// Only the strictly lower entries are stored; entry(i, j) is the row-i,
// column-j element for 1 <= j < i <= n.
class BottMatrix {
public:
    explicit BottMatrix(int n);
    // rows for stages 2..n: rows[k] has k+1 entries (stage k+2)
    BottMatrix(int n, std::vector<std::vector<Integer>> lower_rows);

    int height() const { return n_; }
    const Integer& entry(int row, int col) const;  // 1-based
    void set_entry(int row, int col, Integer value);
    const std::vector<std::vector<Integer>>& lower_rows() const { return rows_; }

    BottMatrix restricted() const;  // drop the last row and column
    bool operator==(const BottMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<std::vector<Integer>> rows_;  // rows_[i-2] = (A^1_i .. A^{i-1}_i)
};

// ramification pair (m^0, m^infty) of one stage
struct RamPair {
    Integer m0;
    Integer minf;

    Integer common() const { return gcd(m0, minf); }                      // m_i
    std::pair<Integer, Integer> primitive() const;                        // (v^0, v^infty)
    bool operator==(const RamPair& o) const { return m0 == o.m0 && minf == o.minf; }
};

struct BottOrbifold {
    BottMatrix matrix;
    std::vector<RamPair> ram;  // one pair per stage

    BottOrbifold(BottMatrix a, std::vector<RamPair> m);
    int height() const { return matrix.height(); }
    // trivial orbifold structure: every m = (1, 1)
    static BottOrbifold trivial(BottMatrix a);
};

// Choice of one class per invariant pair {x_i, y_i}: y_i for i in the
// set, x_i otherwise.  Index 1 is never in the set (x_1 = y_1).
class BasisSelector {
public:
    explicit BasisSelector(int n) : n_(n), use_y_(n + 1, false) {}
    BasisSelector(int n, const std::vector<int>& y_indices);

    int height() const { return n_; }
    bool uses_y(int i) const { return use_y_[i]; }
    std::vector<int> y_indices() const;

    static BasisSelector all_x(int n) { return BasisSelector(n); }
    // all 2^{n-1} invariant bases, all-x first, lexicographic in the y-set
    static std::vector<BasisSelector> enumerate(int n);

    bool operator==(const BasisSelector& o) const { return n_ == o.n_ && use_y_ == o.use_y_; }

private:
    int n_;
    std::vector<bool> use_y_;
};

// degree-2 class expressed in a tagged invariant basis
struct ClassVector {
    std::vector<Rational> coeffs;
    BasisSelector basis;

    ClassVector(std::vector<Rational> c, BasisSelector b);
    int height() const { return basis.height(); }
    bool is_integral() const;

    ClassVector operator+(const ClassVector& o) const;
    ClassVector operator-(const ClassVector& o) const;
    ClassVector operator*(const Rational& c) const;
    bool operator==(const ClassVector& o) const;

    // same class on a height-(n+1) tower (zero coefficient appended)
    ClassVector lifted() const;
};

// orbifold first Chern class in the all-x basis
ClassVector c1_orb(const BottOrbifold& orb);

// same formula with directly supplied reciprocal ramification pairs
// (q^0_j, q^infty_j); admits non-unit-fraction entries (cone angles)
ClassVector c1_orb_from_q(const BottMatrix& a,
                          const std::vector<std::pair<Rational, Rational>>& q);

// exact rewrite of c into the target invariant basis; round trips
ClassVector change_basis(const ClassVector& c, const BasisSelector& target, const BottMatrix& a);

struct BasisCoefficients {
    BasisSelector basis;
    std::vector<Rational> coeffs;
    bool all_positive;
};

struct LogFanoReport {
    bool log_fano;
    std::vector<BasisCoefficients> table;        // all 2^{n-1} bases
    std::optional<BasisSelector> offending;      // first basis with a nonpositive entry
};

// strict positivity of c1_orb in every invariant basis
LogFanoReport is_log_fano(const BottOrbifold& orb);

// strict positivity of the class in every invariant basis
bool is_ample(const ClassVector& d, const BottOrbifold& orb);
bool in_kahler_cone(const ClassVector& c, const BottMatrix& a);

// stage-n deletion; height must be at least 2
BottOrbifold restrict_orbifold(const BottOrbifold& orb);

// exchanges the stage-k zero and infinity sections (1 <= k <= n);
// involution, maps log-Fano orbifolds to log-Fano orbifolds
BottOrbifold fiber_inversion(const BottOrbifold& orb, int k);

// Top intersection number of x_{monomial[0]} ... x_{monomial[n-1]}
// modulo x_j^2 = -sum_{i<j} A^i_j x_i x_j, normalized so x_1...x_n = 1.
// The monomial must have degree n (1-based stage indices).
Integer intersection_number(const std::vector<int>& monomial, const BottMatrix& a);

struct FanoIndexResult {
    Integer index;
    bool lattice_member;  // false: c1 not in the class lattice, index forced to 1
};

// Largest I with c1_orb / I in the lattice spanned by y_j/m_j^0 and
// x_j/m_j^infty.  Requires a log-Fano orbifold.
FanoIndexResult fano_index(const BottOrbifold& orb);

}  // namespace bottjoin
