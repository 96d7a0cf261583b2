// Stagewise calculus of iterated weighted-sphere joins: the (s, m, n)
// stage invariants, orbifold order, smoothness certificates, the Kahler
// class recursion, quotient Bott orbifold assembly, Gorenstein
// l-selection, Y^{p,q} conversion and the stage-2 contact Chern class.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottjoin/bott.hpp"
#include "bottjoin/exact.hpp"

namespace bottjoin {

// positive coprime pair
struct WeightPair {
    Integer a0;
    Integer ainf;

    WeightPair(Integer a, Integer b);
    bool operator==(const WeightPair& o) const { return a0 == o.a0 && ainf == o.ainf; }
    Integer sum() const { return a0 + ainf; }
    Integer product() const { return a0 * ainf; }
};

struct JoinStage {
    std::optional<WeightPair> l;  // absent at stage 1 (implicit (1,1))
    WeightPair w;
    std::optional<WeightPair> v;  // Reeb choice; may be absent at the last stage
};

struct JoinTower {
    std::vector<JoinStage> stages;

    explicit JoinTower(std::vector<JoinStage> s);
    int height() const { return static_cast<int>(stages.size()); }
    // stages 1..k have everything needed for the quotient at height k
    int quotient_height() const;
};

struct StageInvariants {
    Integer s;
    Integer m;
    Integer n;      // signed
    bool product;   // v parallel to w (vanishing determinant)
};

// s = gcd(l^inf, |w^0 v^inf - w^inf v^0|), m = l^inf / s,
// n = l^0 (w^0 v^inf - w^inf v^0) / s
StageInvariants stage_invariants(const WeightPair& l, const WeightPair& w, const WeightPair& v);

struct SmoothnessCertificate {
    bool smooth;
    Integer lhs;      // l^inf * Upsilon_{k-1}
    Integer rhs;      // l^0 * w^0 * w^inf
    Integer common;   // gcd(lhs, rhs)
    std::optional<Integer> witness_prime;  // a prime dividing both when not smooth
};

SmoothnessCertificate is_smooth(const Integer& upsilon_prev, const WeightPair& l_prev,
                                const WeightPair& w_next);

struct KahlerStep {
    ClassVector raw;        // recursion output, integral
    ClassVector primitive;  // raw / content
    Integer content;
};

// [omega_k] = m l^0 w^0 v^inf * lift(omega_prev) + m s Upsilon_prev * x_k
KahlerStep kahler_class_step(const ClassVector& omega_prev, const StageInvariants& si,
                             const Integer& upsilon_prev, const WeightPair& l,
                             const WeightPair& w, const WeightPair& v);

// matrix row of stage k: n_k times the previous integral Kahler class;
// throws internal_error if any entry fails to be an integer
std::vector<Integer> bott_row_from_kahler_class(const Integer& n_k, const ClassVector& omega_prev);

struct StageQuotient {
    int stage;  // 1-based
    Integer s, m, n;
    bool product;
    FactoredInteger upsilon;    // orbifold order through this stage
    ClassVector omega;          // integral Kahler class (raw recursion)
    ClassVector omega_primitive;
    RamPair ram;
    std::vector<Integer> matrix_row;                  // empty at stage 1
    std::optional<SmoothnessCertificate> smoothness;  // stages >= 2
};

struct QuotientResult {
    BottOrbifold orbifold;
    std::vector<StageQuotient> stages;
    // certificate for the stage just past the assembled height, when the
    // tower continues with a v-free final stage
    std::optional<SmoothnessCertificate> next_stage_smoothness;
};

// Assembles the quotient Bott orbifold of the tower through its last
// v-fixed stage.  Interior stages must carry v.
QuotientResult quotient_bott_orbifold(const JoinTower& tower);

// orbifold order through the quotient height
FactoredInteger orbifold_order(const JoinTower& tower);

// l = (I/g, (w^0 + w^inf)/g) with g = gcd(w^0 + w^inf, I)
WeightPair gorenstein_l(const Integer& fano_index, const WeightPair& w);

struct YpqJoin {
    WeightPair l;
    WeightPair w;
    bool gorenstein_consistent;  // l^inf == (w^0+w^inf)/gcd(2, w^0+w^inf)
};

// (p, q) -> stage-2 join data; requires p > q >= 1 coprime
YpqJoin ypq_to_join(const Integer& p, const Integer& q);

struct Stage2Chern {
    Integer coefficient;  // 2 l^inf - l^0 (w^0 + w^inf)
    bool trivial_bundle;  // l^0 (w^0+w^inf) even
};

Stage2Chern stage2_c1(const WeightPair& l, const WeightPair& w);

}  // namespace bottjoin
