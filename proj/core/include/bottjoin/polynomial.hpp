// Dense univariate polynomials over the rationals: arithmetic, exact
// division, gcd with content stripping, Sturm counting with infinite
// endpoints, rational root extraction and resultant/discriminant.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bottjoin/exact.hpp"

namespace bottjoin {

class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);  // lowest degree first

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // coefficient of b^i (0 beyond the degree)
    const Rational& coeff(size_t i) const;
    const Rational& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    Polynomial derivative() const;
    Rational evaluate(const Rational& x) const;

    // scales by the positive rational that makes the coefficients
    // coprime integers (sign preserved)
    Polynomial primitive() const;
    // numerators of primitive(); second member is the applied scale
    std::pair<std::vector<Integer>, Rational> integer_form() const;

    std::string to_string(const std::string& var = "b") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// throws internal_error if the remainder is nonzero
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// primitive gcd with positive leading coefficient; gcd(p, 0) = primitive p
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p with repeated roots collapsed: p / gcd(p, p')
Polynomial squarefree_part(const Polynomial& p);

Rational resultant(const Polynomial& p, const Polynomial& q);

// (-1)^{n(n-1)/2} res(p, p') / lc(p); degree >= 1 required
Rational discriminant(const Polynomial& p);

// Exact count of distinct real roots in (lo, hi]; nullopt endpoints mean
// -infinity / +infinity.  The zero polynomial is rejected.
int sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

struct RationalRoot {
    Rational root;
    int multiplicity;
};

// all rational roots with multiplicity (divisor enumeration after
// clearing denominators); requires factorable leading/trailing coefficients
std::vector<RationalRoot> rational_roots(const Polynomial& p);

// half-open interval (lo, hi]
struct Interval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
};

// Cauchy bound: all real roots lie in [-B, B]
Rational root_bound(const Polynomial& p);

// Isolating intervals of width <= max_width for the distinct real roots
// in (lo, hi], ordered ascending.
std::vector<Interval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                         const Rational& hi, const Rational& max_width);

}  // namespace bottjoin
