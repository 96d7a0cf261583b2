#include "bottjoin/join.hpp"

namespace bottjoin {

WeightPair::WeightPair(Integer a, Integer b) : a0(std::move(a)), ainf(std::move(b)) {
    if (a0 < 1 || ainf < 1) throw std::invalid_argument("WeightPair: components must be positive");
    if (gcd(a0, ainf) != 1)
        throw std::invalid_argument("WeightPair: components must be coprime");
}

JoinTower::JoinTower(std::vector<JoinStage> s) : stages(std::move(s)) {
    if (stages.empty()) throw std::invalid_argument("JoinTower: at least one stage required");
    if (stages[0].l.has_value())
        throw std::invalid_argument("JoinTower: stage 1 carries w only");
    if (stages[0].v.has_value())
        throw std::invalid_argument("JoinTower: stage 1 has no Reeb choice");
    for (size_t i = 1; i < stages.size(); ++i)
        if (!stages[i].l.has_value())
            throw std::invalid_argument("JoinTower: stages past the first need l");
    // v must be fixed at every stage before one that has it
    bool gap = false;
    for (size_t i = 1; i < stages.size(); ++i) {
        if (!stages[i].v.has_value()) {
            gap = true;
        } else if (gap) {
            throw std::invalid_argument("JoinTower: Reeb choice missing at an interior stage");
        }
    }
}

int JoinTower::quotient_height() const {
    int h = 1;
    for (size_t i = 1; i < stages.size(); ++i) {
        if (!stages[i].v.has_value()) break;
        h = static_cast<int>(i) + 1;
    }
    return h;
}

StageInvariants stage_invariants(const WeightPair& l, const WeightPair& w, const WeightPair& v) {
    Integer det = w.a0 * v.ainf - w.ainf * v.a0;
    if (det == 0) return {l.ainf, Integer(1), Integer(0), true};
    Integer s = gcd(l.ainf, abs(det));
    return {s, l.ainf / s, l.a0 * det / s, false};
}

SmoothnessCertificate is_smooth(const Integer& upsilon_prev, const WeightPair& l_prev,
                                const WeightPair& w_next) {
    SmoothnessCertificate cert;
    cert.lhs = l_prev.ainf * upsilon_prev;
    cert.rhs = l_prev.a0 * w_next.a0 * w_next.ainf;
    cert.common = gcd(cert.lhs, cert.rhs);
    cert.smooth = cert.common == 1;
    if (!cert.smooth) cert.witness_prime = smallest_prime_factor(cert.common);
    return cert;
}

KahlerStep kahler_class_step(const ClassVector& omega_prev, const StageInvariants& si,
                             const Integer& upsilon_prev, const WeightPair& l,
                             const WeightPair& w, const WeightPair& v) {
    if (!omega_prev.is_integral())
        throw std::invalid_argument("kahler_class_step: integral previous class required");
    ClassVector lifted = omega_prev.lifted();
    Rational pull = Rational(si.m * l.a0 * w.a0 * v.ainf);
    Integer fiber = si.m * si.s * upsilon_prev;
    ClassVector raw = lifted * pull;
    raw.coeffs.back() = Rational(fiber);

    Integer content = 0;
    for (const auto& c : raw.coeffs) content = gcd(content, c.get_num());
    if (content == 0) content = 1;
    KahlerStep step{raw, raw * Rational(Integer(1), content), content};
    for (auto& c : step.primitive.coeffs) c.canonicalize();
    return step;
}

std::vector<Integer> bott_row_from_kahler_class(const Integer& n_k,
                                                const ClassVector& omega_prev) {
    std::vector<Integer> row;
    row.reserve(omega_prev.coeffs.size());
    for (const auto& c : omega_prev.coeffs) {
        Rational e = Rational(n_k) * c;
        e.canonicalize();
        if (e.get_den() != 1)
            throw internal_error("bott_row_from_kahler_class: non-integral matrix entry");
        row.push_back(e.get_num());
    }
    return row;
}

QuotientResult quotient_bott_orbifold(const JoinTower& tower) {
    const int height = tower.quotient_height();
    const WeightPair& w1 = tower.stages[0].w;

    BottMatrix matrix(height);
    std::vector<RamPair> ram;
    std::vector<StageQuotient> stages;

    FactoredInteger upsilon = factorize(w1.product());
    ClassVector omega(std::vector<Rational>{Rational(1)}, BasisSelector::all_x(1));
    ram.push_back(RamPair{w1.a0, w1.ainf});
    stages.push_back(StageQuotient{1, Integer(0), Integer(1), Integer(0), false, upsilon, omega,
                                   omega, ram.back(), {}, std::nullopt});

    for (int k = 2; k <= height; ++k) {
        const JoinStage& st = tower.stages[k - 1];
        const WeightPair& l = *st.l;
        const WeightPair& w = st.w;
        const WeightPair& v = *st.v;

        StageInvariants si = stage_invariants(l, w, v);
        SmoothnessCertificate cert = is_smooth(upsilon.value(), l, w);

        std::vector<Integer> row = bott_row_from_kahler_class(si.n, omega);
        for (int j = 1; j < k; ++j) matrix.set_entry(k, j, row[j - 1]);

        RamPair rk{si.m * v.a0, si.m * v.ainf};
        ram.push_back(rk);

        KahlerStep step = kahler_class_step(omega, si, upsilon.value(), l, w, v);
        omega = step.raw;
        upsilon.mul(factorize(si.m * v.product()));

        stages.push_back(StageQuotient{k, si.s, si.m, si.n, si.product, upsilon, step.raw,
                                       step.primitive, rk, std::move(row), cert});
    }

    QuotientResult result{BottOrbifold(std::move(matrix), std::move(ram)), std::move(stages),
                          std::nullopt};
    if (height < tower.height()) {
        const JoinStage& next = tower.stages[height];
        result.next_stage_smoothness = is_smooth(upsilon.value(), *next.l, next.w);
    }
    return result;
}

FactoredInteger orbifold_order(const JoinTower& tower) {
    FactoredInteger upsilon = factorize(tower.stages[0].w.product());
    const int height = tower.quotient_height();
    for (int k = 2; k <= height; ++k) {
        const JoinStage& st = tower.stages[k - 1];
        StageInvariants si = stage_invariants(*st.l, st.w, *st.v);
        upsilon.mul(factorize(si.m * st.v->product()));
    }
    return upsilon;
}

WeightPair gorenstein_l(const Integer& fano_index, const WeightPair& w) {
    if (fano_index < 1) throw std::invalid_argument("gorenstein_l: index must be positive");
    Integer sum = w.sum();
    Integer g = gcd(sum, fano_index);
    return WeightPair(fano_index / g, sum / g);
}

YpqJoin ypq_to_join(const Integer& p, const Integer& q) {
    if (q < 1 || p <= q) throw std::invalid_argument("ypq_to_join: p > q >= 1 required");
    if (gcd(p, q) != 1) throw std::invalid_argument("ypq_to_join: p, q must be coprime");
    Integer l0 = gcd(p + q, p - q);
    WeightPair w((p + q) / l0, (p - q) / l0);
    WeightPair l(l0, p);
    Integer expected = w.sum() / gcd(Integer(2), w.sum());
    return YpqJoin{l, w, l.ainf == expected};
}

Stage2Chern stage2_c1(const WeightPair& l, const WeightPair& w) {
    Integer lw = l.a0 * w.sum();
    return Stage2Chern{2 * l.ainf - lw, lw % 2 == 0};
}

}  // namespace bottjoin
