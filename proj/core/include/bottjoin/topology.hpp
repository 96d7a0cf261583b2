// Closed-form topological invariants of the iterated joins: homotopy
// and homology ranks, the vanishing and free-rank statements, and the
// 7-dimensional torsion orders.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bottjoin/join.hpp"

namespace bottjoin {

struct TopologyReport {
    int k;                       // join height, dimension 2k+1
    bool pi1_trivial;            // always true here
    int pi2_rank;                // k - 1
    int pi3_rank;                // k
    int pi4_two_torsion_rank;    // k
    int h2_rank;                 // k - 1
    std::optional<int> h3;       // 0 for k >= 3; not pinned at k = 2
    std::optional<Integer> h4_free_rank;  // k(k-3)/2 for k >= 3
    // odd degrees 3, 5, ... whose Betti numbers are asserted even
    std::vector<int> even_betti_degrees;
};

// k >= 2
TopologyReport invariants(int k);

// orders of the two cyclic summands of H^4 of the height-3 join:
// (v^0 v^inf m^2 l_2^inf, w_2^0 w_2^inf (l_2^0)^2)
std::pair<Integer, Integer> dim7_torsion(const WeightPair& v, const Integer& m,
                                         const WeightPair& l2, const WeightPair& w2);

}  // namespace bottjoin
