#include "bottjoin/topology.hpp"

namespace bottjoin {

TopologyReport invariants(int k) {
    if (k < 2) throw std::invalid_argument("invariants: height must be at least 2");
    TopologyReport rep;
    rep.k = k;
    rep.pi1_trivial = true;
    rep.pi2_rank = k - 1;
    rep.pi3_rank = k;
    rep.pi4_two_torsion_rank = k;
    rep.h2_rank = k - 1;
    if (k >= 3) {
        rep.h3 = 0;
        rep.h4_free_rank = Integer(static_cast<long>(k) * (k - 3) / 2);
        const int top = 2 * ((k + 2) / 2) - 1;
        for (int d = 3; d <= top; d += 2) rep.even_betti_degrees.push_back(d);
    }
    return rep;
}

std::pair<Integer, Integer> dim7_torsion(const WeightPair& v, const Integer& m,
                                         const WeightPair& l2, const WeightPair& w2) {
    if (m < 1) throw std::invalid_argument("dim7_torsion: m must be positive");
    // l_2^inf enters to the first power only
    Integer first = v.a0 * v.ainf * m * m * l2.ainf;
    Integer second = w2.a0 * w2.ainf * l2.a0 * l2.a0;
    return {first, second};
}

}  // namespace bottjoin
