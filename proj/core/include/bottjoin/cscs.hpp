// Constant-scalar-curvature ray analysis in the 2-dimensional w-cone:
// the admissible-construction polynomial f(b), its cubic reduction g(b),
// exact ray counting, the threshold quartic h and its discriminant
// identity, and the contact Chern class bound for multi-ray cones.
#pragma once

#include <vector>

#include "bottjoin/join.hpp"
#include "bottjoin/polynomial.hpp"

namespace bottjoin {

struct CscParams {
    int d_n;        // complex dimension of the base
    Rational a_n;   // admissible-construction constant
    WeightPair l;
    WeightPair w;   // requires w^0 > w^infty

    CscParams(int d, Rational a, WeightPair l_, WeightPair w_);
};

// the five-term polynomial in b; vanishes to order 3 at b = w^inf / w^0
Polynomial build_f(const CscParams& p);

// Solves the coefficient-matching system between the general polynomial
// at d_N = 1 and its displayed factored form; throws internal_error if
// the over-determined system is inconsistent.
Rational derive_an_d1(const WeightPair& l, const WeightPair& w);

// g(b) with f = 2 (b w^0 - w^inf)^3 g(b)
Polynomial reduced_g(const WeightPair& l, const WeightPair& w);

struct RayCount {
    int count;                                // distinct positive real roots of g
    std::vector<RationalRoot> rational_rays;  // exact quasi-regular ray candidates
    std::vector<Interval> isolating;          // one interval per distinct root
    bool at_threshold;                        // g has a repeated root
};

// requires w^0 > w^inf
RayCount count_csc_rays(const WeightPair& l, const WeightPair& w);

// quartic in l^inf whose root past 2 l^0 w^0 is the 1-to-3 transition
Polynomial threshold_h(const Integer& l0, const WeightPair& w);

struct ThresholdInterval {
    Interval bracket;  // contains the unique root of h in (2 l^0 w^0, inf)
    Polynomial h;
};

ThresholdInterval threshold_interval(const Integer& l0, const WeightPair& w,
                                     const Rational& max_width);

enum class ThresholdSide { below, at, above };

ThresholdSide classify_linf(const Integer& l0, const WeightPair& w, const Integer& linf);

// checks disc(h) == -768 (l^0)^12 w^0 (w^0-w^inf)^4 w^inf (8w^0+w^inf)^3 (w^0+8w^inf)^3
// exactly; throws internal_error on mismatch
bool disc_h_identity(const Integer& l0, const WeightPair& w);

// with two or more rays, 2 l^inf - l^0(w^0+w^inf) > 2 l^0 w^0 + l^0(w^0-w^inf);
// single-ray instances pass vacuously
bool multi_ray_c1_check(const WeightPair& l, const WeightPair& w);

}  // namespace bottjoin
