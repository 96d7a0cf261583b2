#include "bottjoin/cscs.hpp"

namespace bottjoin {

CscParams::CscParams(int d, Rational a, WeightPair l_, WeightPair w_)
    : d_n(d), a_n(std::move(a)), l(std::move(l_)), w(std::move(w_)) {
    if (d_n < 1) throw std::invalid_argument("CscParams: base dimension must be positive");
    if (!(w.a0 > w.ainf)) throw std::invalid_argument("CscParams: w^0 > w^infty required");
    a_n.canonicalize();
}

Polynomial build_f(const CscParams& p) {
    const long d = p.d_n;
    const Rational an = p.a_n;
    const Rational l0(p.l.a0), linf(p.l.ainf), w0(p.w.a0), winf(p.w.ainf);

    auto wpow = [&](const Rational& base, long e) {
        return pow_rat(base, static_cast<unsigned long>(e));
    };

    Polynomial f;
    // (w0)^{2(d+1)} b^{2d+3} (A l^inf + l0 (d+1) w^inf - b (d+1) l0 w0)
    {
        Rational c = wpow(w0, 2 * (d + 1));
        f = f + Polynomial::monomial(c * (an * linf + l0 * (d + 1) * winf), 2 * d + 3);
        f = f + Polynomial::monomial(-c * Rational(d + 1) * l0 * w0, 2 * d + 4);
    }
    // -(w0)^{d+2} (winf)^d b^{d+3} (d+1)(A (d+1) l^inf - l0 ((d+1) w0 + (d+2) winf))
    {
        Rational c = wpow(w0, d + 2) * wpow(winf, d);
        Rational inner = an * Rational(d + 1) * linf - l0 * (Rational(d + 1) * w0 + Rational(d + 2) * winf);
        f = f + Polynomial::monomial(-c * Rational(d + 1) * inner, d + 3);
    }
    // +(w0)^{d+1} (winf)^{d+1} b^{d+2} (2 A d (d+2) l^inf - (d+1)(2d+3) l0 (w0+winf))
    {
        Rational c = wpow(w0, d + 1) * wpow(winf, d + 1);
        Rational inner = Rational(2) * an * Rational(d) * Rational(d + 2) * linf -
                         Rational(d + 1) * Rational(2 * d + 3) * l0 * (w0 + winf);
        f = f + Polynomial::monomial(c * inner, d + 2);
    }
    // -(w0)^d (winf)^{d+2} b^{d+1} (d+1)(A (d+1) l^inf - l0 ((d+2) w0 + (d+1) winf))
    {
        Rational c = wpow(w0, d) * wpow(winf, d + 2);
        Rational inner = an * Rational(d + 1) * linf - l0 * (Rational(d + 2) * w0 + Rational(d + 1) * winf);
        f = f + Polynomial::monomial(-c * Rational(d + 1) * inner, d + 1);
    }
    // +(winf)^{2(d+1)} (b (A l^inf + l0 (d+1) w0) - (d+1) l0 winf)
    {
        Rational c = wpow(winf, 2 * (d + 1));
        f = f + Polynomial::monomial(c * (an * linf + l0 * Rational(d + 1) * w0), 1);
        f = f + Polynomial::monomial(-c * Rational(d + 1) * l0 * winf, 0);
    }
    return f;
}

Polynomial reduced_g(const WeightPair& l, const WeightPair& w) {
    if (!(w.a0 > w.ainf)) throw std::invalid_argument("reduced_g: w^0 > w^infty required");
    const Rational l0(l.a0), linf(l.ainf), w0(w.a0), winf(w.ainf);
    return Polynomial({l0 * winf * winf,                      // constant
                       -(linf - 2 * l0 * w0) * winf,          // b
                       (linf - 2 * l0 * winf) * w0,           // b^2
                       -l0 * w0 * w0});                       // b^3
}

Rational derive_an_d1(const WeightPair& l, const WeightPair& w) {
    // f(b) at d = 1 with symbolic A equals f0 + A f1; match against the
    // factored display 2 (b w0 - winf)^3 g(b)
    CscParams p0(1, Rational(0), l, w);
    CscParams p1(1, Rational(1), l, w);
    Polynomial f0 = build_f(p0);
    Polynomial f1 = build_f(p1) - f0;  // the A-linear part

    Polynomial cube({-Rational(w.ainf), Rational(w.a0)});
    cube = cube * cube * cube;
    Polynomial target = cube * reduced_g(l, w) * Rational(2);

    Polynomial rhs = target - f0;
    Rational an;
    bool pinned = false;
    for (int i = 0; i <= std::max(rhs.degree(), f1.degree()); ++i) {
        const Rational& c1 = f1.coeff(i);
        if (c1 == 0) {
            if (rhs.coeff(i) != 0)
                throw internal_error("derive_an_d1: inconsistent coefficient matching");
            continue;
        }
        Rational cand = rhs.coeff(i) / c1;
        cand.canonicalize();
        if (!pinned) {
            an = cand;
            pinned = true;
        } else if (cand != an) {
            throw internal_error("derive_an_d1: inconsistent coefficient matching");
        }
    }
    if (!pinned) throw internal_error("derive_an_d1: matching system is degenerate");
    return an;
}

RayCount count_csc_rays(const WeightPair& l, const WeightPair& w) {
    Polynomial g = reduced_g(l, w);
    RayCount rc;
    rc.count = sturm_count(g, Rational(0), std::nullopt);
    rc.at_threshold = poly_gcd(g, g.derivative()).degree() > 0;
    for (const auto& r : rational_roots(g))
        if (r.root > 0) rc.rational_rays.push_back(r);
    Rational bound = root_bound(g);
    rc.isolating = isolate_real_roots(g, Rational(0), bound, Rational(1, 1024));
    return rc;
}

Polynomial threshold_h(const Integer& l0, const WeightPair& w) {
    const Rational a(l0), w0(w.a0), winf(w.ainf);
    return Polynomial({pow_rat(a, 4) * w0 * winf * (32 * w0 * w0 + 61 * w0 * winf + 32 * winf * winf),
                       -100 * pow_rat(a, 3) * w0 * winf * (w0 + winf),
                       2 * a * a * (2 * w0 * w0 + 41 * w0 * winf + 2 * winf * winf),
                       -8 * a * (w0 + winf),
                       Rational(1)});
}

ThresholdInterval threshold_interval(const Integer& l0, const WeightPair& w,
                                     const Rational& max_width) {
    if (!(w.a0 > w.ainf))
        throw std::invalid_argument("threshold_interval: w^0 > w^infty required");
    Polynomial h = threshold_h(l0, w);
    Rational lo = Rational(2 * l0 * w.a0);
    Rational hi = Rational(l0) * (16 * Rational(w.a0) - 5 * Rational(w.ainf)) / 2;
    if (sturm_count(h, lo, hi) != 1)
        throw internal_error("threshold_interval: expected a unique root past 2 l^0 w^0");
    auto intervals = isolate_real_roots(h, lo, hi, max_width);
    if (intervals.size() != 1)
        throw internal_error("threshold_interval: isolation failed");
    return ThresholdInterval{intervals.front(), std::move(h)};
}

ThresholdSide classify_linf(const Integer& l0, const WeightPair& w, const Integer& linf) {
    Polynomial h = threshold_h(l0, w);
    Rational at(linf);
    if (h.evaluate(at) == 0 && linf > 2 * l0 * w.a0) return ThresholdSide::at;
    Rational lo = Rational(2 * l0 * w.a0);
    if (at <= lo) return ThresholdSide::below;
    return sturm_count(h, lo, at) >= 1 ? ThresholdSide::above : ThresholdSide::below;
}

bool disc_h_identity(const Integer& l0, const WeightPair& w) {
    Polynomial h = threshold_h(l0, w);
    Rational disc = discriminant(h);
    const Rational a(l0), w0(w.a0), winf(w.ainf);
    Rational expected = Rational(-768) * pow_rat(a, 12) * w0 * pow_rat(w0 - winf, 4) * winf *
                        pow_rat(8 * w0 + winf, 3) * pow_rat(w0 + 8 * winf, 3);
    if (disc != expected) throw internal_error("disc_h_identity: closed form mismatch");
    return true;
}

bool multi_ray_c1_check(const WeightPair& l, const WeightPair& w) {
    if (count_csc_rays(l, w).count < 2) return true;  // vacuous
    Integer c1 = 2 * l.ainf - l.a0 * w.sum();
    Integer bound = 2 * l.a0 * w.a0 + l.a0 * (w.a0 - w.ainf);
    return c1 > bound;
}

}  // namespace bottjoin
