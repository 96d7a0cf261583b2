#include "bottjoin/bott.hpp"

#include <algorithm>
#include <map>

namespace bottjoin {

BottMatrix::BottMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("BottMatrix: height must be positive");
    rows_.resize(n >= 2 ? n - 1 : 0);
    for (int i = 2; i <= n; ++i) rows_[i - 2].assign(i - 1, Integer(0));
}

BottMatrix::BottMatrix(int n, std::vector<std::vector<Integer>> lower_rows)
    : n_(n), rows_(std::move(lower_rows)) {
    if (n < 1) throw std::invalid_argument("BottMatrix: height must be positive");
    if (static_cast<int>(rows_.size()) != std::max(0, n - 1))
        throw std::invalid_argument("BottMatrix: expected one row per stage 2..n");
    for (int i = 2; i <= n; ++i)
        if (static_cast<int>(rows_[i - 2].size()) != i - 1)
            throw std::invalid_argument("BottMatrix: row length must match stage index");
}

namespace {
const Integer kOne = 1;
const Integer kZero = 0;
}  // namespace

const Integer& BottMatrix::entry(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw std::invalid_argument("BottMatrix::entry: index out of range");
    if (row == col) return kOne;
    if (col > row) return kZero;
    return rows_[row - 2][col - 1];
}

void BottMatrix::set_entry(int row, int col, Integer value) {
    if (!(1 <= col && col < row && row <= n_))
        throw std::invalid_argument("BottMatrix::set_entry: strictly-lower index required");
    rows_[row - 2][col - 1] = std::move(value);
}

BottMatrix BottMatrix::restricted() const {
    if (n_ < 2) throw std::invalid_argument("BottMatrix::restricted: height 1 cannot shrink");
    std::vector<std::vector<Integer>> rows(rows_.begin(), rows_.end() - 1);
    return BottMatrix(n_ - 1, std::move(rows));
}

std::pair<Integer, Integer> RamPair::primitive() const {
    Integer m = common();
    return {m0 / m, minf / m};
}

BottOrbifold::BottOrbifold(BottMatrix a, std::vector<RamPair> m)
    : matrix(std::move(a)), ram(std::move(m)) {
    if (static_cast<int>(ram.size()) != matrix.height())
        throw std::invalid_argument("BottOrbifold: one ramification pair per stage required");
    for (const auto& r : ram)
        if (r.m0 < 1 || r.minf < 1)
            throw std::invalid_argument("BottOrbifold: ramification indices must be positive");
}

BottOrbifold BottOrbifold::trivial(BottMatrix a) {
    std::vector<RamPair> m(a.height(), RamPair{1, 1});
    return BottOrbifold(std::move(a), std::move(m));
}

BasisSelector::BasisSelector(int n, const std::vector<int>& y_indices)
    : n_(n), use_y_(n + 1, false) {
    for (int i : y_indices) {
        if (i < 2 || i > n)
            throw std::invalid_argument("BasisSelector: y-index out of range (1 is always x)");
        use_y_[i] = true;
    }
}

std::vector<int> BasisSelector::y_indices() const {
    std::vector<int> out;
    for (int i = 2; i <= n_; ++i)
        if (use_y_[i]) out.push_back(i);
    return out;
}

std::vector<BasisSelector> BasisSelector::enumerate(int n) {
    const int bits = std::max(0, n - 1);
    std::vector<BasisSelector> out;
    out.reserve(size_t(1) << bits);
    for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
        std::vector<int> ys;
        for (int b = 0; b < bits; ++b)
            if (mask & (1ul << b)) ys.push_back(b + 2);
        out.emplace_back(n, ys);
    }
    return out;
}

ClassVector::ClassVector(std::vector<Rational> c, BasisSelector b)
    : coeffs(std::move(c)), basis(std::move(b)) {
    if (static_cast<int>(coeffs.size()) != basis.height())
        throw std::invalid_argument("ClassVector: coefficient count must match basis height");
    for (auto& x : coeffs) x.canonicalize();
}

bool ClassVector::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

namespace {
void require_same_basis(const ClassVector& a, const ClassVector& b) {
    if (!(a.basis == b.basis))
        throw std::invalid_argument("ClassVector: arithmetic requires identical basis tags");
}
}  // namespace

ClassVector ClassVector::operator+(const ClassVector& o) const {
    require_same_basis(*this, o);
    std::vector<Rational> c(coeffs);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
    return ClassVector(std::move(c), basis);
}

ClassVector ClassVector::operator-(const ClassVector& o) const {
    require_same_basis(*this, o);
    std::vector<Rational> c(coeffs);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
    return ClassVector(std::move(c), basis);
}

ClassVector ClassVector::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs);
    for (auto& x : c) x *= s;
    return ClassVector(std::move(c), basis);
}

bool ClassVector::operator==(const ClassVector& o) const {
    return basis == o.basis && coeffs == o.coeffs;
}

ClassVector ClassVector::lifted() const {
    if (!basis.y_indices().empty())
        throw std::invalid_argument("ClassVector::lifted: all-x basis required");
    std::vector<Rational> c(coeffs);
    c.emplace_back(0);
    return ClassVector(std::move(c), BasisSelector::all_x(height() + 1));
}

ClassVector c1_orb_from_q(const BottMatrix& a,
                          const std::vector<std::pair<Rational, Rational>>& q) {
    const int n = a.height();
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("c1_orb_from_q: one q pair per stage required");
    std::vector<Rational> c(n, Rational(0));
    for (int j = 1; j <= n; ++j) {
        Rational v = q[j - 1].first + q[j - 1].second;
        for (int i = j + 1; i <= n; ++i) v += Rational(a.entry(i, j)) * q[i - 1].first;
        v.canonicalize();
        c[j - 1] = v;
    }
    return ClassVector(std::move(c), BasisSelector::all_x(n));
}

ClassVector c1_orb(const BottOrbifold& orb) {
    std::vector<std::pair<Rational, Rational>> q;
    q.reserve(orb.ram.size());
    for (const auto& m : orb.ram) q.emplace_back(Rational(1, m.m0), Rational(1, m.minf));
    for (auto& [a, b] : q) {
        a.canonicalize();
        b.canonicalize();
    }
    return c1_orb_from_q(orb.matrix, q);
}

namespace {

// coordinates of the class in the all-x basis
std::vector<Rational> to_all_x(const ClassVector& c, const BottMatrix& a) {
    const int n = c.height();
    std::vector<Rational> out(n, Rational(0));
    for (int i = 1; i <= n; ++i) {
        const Rational& ci = c.coeffs[i - 1];
        out[i - 1] += ci;
        if (c.basis.uses_y(i))
            for (int j = 1; j < i; ++j) out[j - 1] += ci * Rational(a.entry(i, j));
    }
    return out;
}

// solve for the coefficients in the target basis; the basis matrix is
// triangular so back substitution is exact
std::vector<Rational> from_all_x(std::vector<Rational> x, const BasisSelector& target,
                                 const BottMatrix& a) {
    const int n = target.height();
    std::vector<Rational> r(n, Rational(0));
    for (int i = n; i >= 1; --i) {
        r[i - 1] = x[i - 1];
        if (target.uses_y(i))
            for (int j = 1; j < i; ++j) x[j - 1] -= r[i - 1] * Rational(a.entry(i, j));
    }
    return r;
}

}  // namespace

ClassVector change_basis(const ClassVector& c, const BasisSelector& target, const BottMatrix& a) {
    if (c.height() != a.height() || target.height() != a.height())
        throw std::invalid_argument("change_basis: height mismatch");
    auto coords = from_all_x(to_all_x(c, a), target, a);
    for (auto& v : coords) v.canonicalize();
    return ClassVector(std::move(coords), target);
}

namespace {

// positivity table of a class across all invariant bases
std::pair<bool, std::vector<BasisCoefficients>> positivity_table(const ClassVector& c,
                                                                 const BottMatrix& a) {
    bool all = true;
    std::vector<BasisCoefficients> table;
    for (const auto& sel : BasisSelector::enumerate(a.height())) {
        ClassVector in_basis = change_basis(c, sel, a);
        bool pos = std::all_of(in_basis.coeffs.begin(), in_basis.coeffs.end(),
                               [](const Rational& v) { return v > 0; });
        all = all && pos;
        table.push_back({sel, in_basis.coeffs, pos});
    }
    return {all, std::move(table)};
}

}  // namespace

LogFanoReport is_log_fano(const BottOrbifold& orb) {
    auto [all, table] = positivity_table(c1_orb(orb), orb.matrix);
    LogFanoReport rep{all, std::move(table), std::nullopt};
    if (!all)
        for (const auto& row : rep.table)
            if (!row.all_positive) {
                rep.offending = row.basis;
                break;
            }
    return rep;
}

bool is_ample(const ClassVector& d, const BottOrbifold& orb) {
    return positivity_table(d, orb.matrix).first;
}

bool in_kahler_cone(const ClassVector& c, const BottMatrix& a) {
    return positivity_table(c, a).first;
}

BottOrbifold restrict_orbifold(const BottOrbifold& orb) {
    if (orb.height() < 2)
        throw std::invalid_argument("restrict_orbifold: height 1 cannot shrink");
    std::vector<RamPair> ram(orb.ram.begin(), orb.ram.end() - 1);
    return BottOrbifold(orb.matrix.restricted(), std::move(ram));
}

BottOrbifold fiber_inversion(const BottOrbifold& orb, int k) {
    const int n = orb.height();
    if (k < 1 || k > n) throw std::invalid_argument("fiber_inversion: stage out of range");
    BottMatrix a = orb.matrix;
    std::vector<RamPair> ram = orb.ram;
    std::swap(ram[k - 1].m0, ram[k - 1].minf);
    if (k >= 2) {
        // substituting x_k = y_k - sum_{j<k} A^j_k x_j renormalizes the
        // matrix: row k flips sign, later rows absorb the column-k entry
        std::vector<Integer> row_k(k - 1);
        for (int j = 1; j < k; ++j) row_k[j - 1] = orb.matrix.entry(k, j);
        for (int j = 1; j < k; ++j) a.set_entry(k, j, -row_k[j - 1]);
        for (int i = k + 1; i <= n; ++i) {
            const Integer& aik = orb.matrix.entry(i, k);
            for (int j = 1; j < k; ++j)
                a.set_entry(i, j, orb.matrix.entry(i, j) - aik * row_k[j - 1]);
        }
    }
    return BottOrbifold(std::move(a), std::move(ram));
}

Integer intersection_number(const std::vector<int>& monomial, const BottMatrix& a) {
    const int n = a.height();
    if (static_cast<int>(monomial.size()) != n)
        throw std::invalid_argument("intersection_number: monomial degree must equal height");
    for (int idx : monomial)
        if (idx < 1 || idx > n)
            throw std::invalid_argument("intersection_number: stage index out of range");

    // terms keyed by sorted index multiset
    std::map<std::vector<int>, Integer> terms;
    {
        std::vector<int> key = monomial;
        std::sort(key.begin(), key.end());
        terms[key] = 1;
    }
    std::map<std::vector<int>, Integer> reduced;
    while (!terms.empty()) {
        auto it = terms.begin();
        std::vector<int> key = it->first;
        Integer coef = it->second;
        terms.erase(it);
        if (coef == 0) continue;

        // find a repeated index (take the largest)
        int rep = 0;
        for (size_t i = key.size(); i-- > 1;)
            if (key[i] == key[i - 1]) {
                rep = key[i];
                break;
            }
        if (rep == 0) {
            reduced[key] += coef;
            continue;
        }
        // one factor of x_rep^2 turns into -sum_{i<rep} A^i_rep x_i while
        // the other x_rep survives in the remaining monomial
        std::vector<int> base = key;
        base.erase(std::find(base.begin(), base.end(), rep));
        for (int i = 1; i < rep; ++i) {
            const Integer& arel = a.entry(rep, i);
            if (arel == 0) continue;
            std::vector<int> next = base;
            next.push_back(i);
            std::sort(next.begin(), next.end());
            terms[next] += -arel * coef;
        }
    }

    // a squarefree degree-n monomial on n stages is x_1...x_n
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    auto hit = reduced.find(full);
    return hit == reduced.end() ? Integer(0) : hit->second;
}

FanoIndexResult fano_index(const BottOrbifold& orb) {
    if (!is_log_fano(orb).log_fano)
        throw std::invalid_argument("fano_index: orbifold must be log Fano");
    const int n = orb.height();

    Integer d = 1;
    for (const auto& m : orb.ram) d = lcm(lcm(d, m.m0), m.minf);

    // integer generators of D * Lambda, rows in Z^n
    std::vector<std::vector<Integer>> gens;
    for (int j = 1; j <= n; ++j) {
        std::vector<Integer> y(n, Integer(0));
        y[j - 1] = d / orb.ram[j - 1].m0;
        for (int i = 1; i < j; ++i) y[i - 1] = (d / orb.ram[j - 1].m0) * orb.matrix.entry(j, i);
        gens.push_back(std::move(y));
        std::vector<Integer> x(n, Integer(0));
        x[j - 1] = d / orb.ram[j - 1].minf;
        gens.push_back(std::move(x));
    }

    // row echelon over Z (Euclidean elimination column by column)
    std::vector<std::vector<Integer>> h;
    size_t row_start = 0;
    for (int col = 0; col < n; ++col) {
        while (true) {
            size_t pivot = gens.size();
            for (size_t r = row_start; r < gens.size(); ++r) {
                if (gens[r][col] == 0) continue;
                if (pivot == gens.size() || abs(gens[r][col]) < abs(gens[pivot][col])) pivot = r;
            }
            if (pivot == gens.size()) break;
            std::swap(gens[row_start], gens[pivot]);
            bool clean = true;
            for (size_t r = row_start + 1; r < gens.size(); ++r) {
                if (gens[r][col] == 0) continue;
                Integer q = gens[r][col] / gens[row_start][col];  // truncated is fine
                for (int c2 = 0; c2 < n; ++c2) gens[r][c2] -= q * gens[row_start][c2];
                if (gens[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (row_start < gens.size() && gens[row_start][col] != 0) {
            if (gens[row_start][col] < 0)
                for (auto& v : gens[row_start]) v = -v;
            h.push_back(gens[row_start]);
            ++row_start;
        } else {
            throw internal_error("fano_index: class lattice is not full rank");
        }
    }

    // solve h * z = d * c1 by back substitution; non-integral steps mean
    // the class is outside the lattice
    std::vector<Rational> c = c1_orb(orb).coeffs;
    std::vector<Integer> target(n);
    for (int i = 0; i < n; ++i) {
        Rational v = c[i] * Rational(d);
        v.canonicalize();
        if (v.get_den() != 1) return {Integer(1), false};
        target[i] = v.get_num();
    }
    // target = sum_i z_i h[i]; the echelon rows make this a forward solve
    std::vector<Integer> z(n, Integer(0));
    for (int j = 0; j < n; ++j) {
        Integer acc = target[j];
        for (int i = 0; i < j; ++i) acc -= h[i][j] * z[i];
        if (acc % h[j][j] != 0) return {Integer(1), false};
        z[j] = acc / h[j][j];
    }
    Integer g = 0;
    for (const auto& v : z) g = gcd(g, v);
    if (g == 0) throw internal_error("fano_index: vanishing first Chern class");
    return {g, true};
}

}  // namespace bottjoin
