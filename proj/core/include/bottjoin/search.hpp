// Gorenstein extension search: one-parameter orbifold-order families,
// congruence certification of smoothness, the Y^{p,q} quadratic
// constraint enumeration, and the deterministic grid search.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bottjoin/exact.hpp"
#include "bottjoin/join.hpp"

namespace bottjoin {

// integer-coefficient polynomial factor in the family parameter,
// content-normalized (coefficient gcd extracted into the constant)
struct FamilyFactor {
    std::vector<Integer> coeffs;  // lowest degree first, at least one entry

    Integer value_at(const Integer& t) const;
    Integer mod_value_at(const Integer& t, const Integer& p) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// constant * product of polynomial factors
struct FamilyPolynomial {
    FactoredInteger constant;
    std::vector<FamilyFactor> factors;

    static FamilyPolynomial from_parts(const Integer& constant,
                                       std::vector<std::vector<Integer>> factor_coeffs);
    Integer value_at(const Integer& t) const;
    FamilyPolynomial times_constant(const Integer& c) const;
    // reparametrize t = c * t_hat, re-extracting factor contents
    FamilyPolynomial substituted(const Integer& c) const;
};

struct SeedStructure {
    int dimension;             // 2k+1 of the seed structure
    Integer fano_index;
    FamilyPolynomial upsilon;  // orbifold order as a family in t
    std::string note;
    bool primitive = true;     // transverse Kahler class primitive orbifold

    SeedStructure(int dim, Integer index, FamilyPolynomial ups, std::string n = {},
                  bool prim = true);
};

// residues of each family factor modulo each prime of M
struct CongruenceCertificate {
    Integer modulus_radical;  // rad(M)
    // prime -> union of factor roots mod that prime (ascending)
    std::vector<std::pair<Integer, std::vector<Integer>>> excluded;
    // a prime divides the family at every residue (constant or a factor
    // vanishing identically mod p): nothing is admissible
    bool identically_blocked = false;
    Integer admissible_count = 0;

    bool is_admissible(const Integer& t) const;
    // explicit residues, ascending; requires admissible_count <= cap
    std::vector<Integer> enumerate(const Integer& cap) const;
};

// M must be fully factored
CongruenceCertificate congruence_certify(const FamilyPolynomial& family,
                                         const FactoredInteger& m);

// roots of the reduced polynomial mod prime p; nullopt when the
// polynomial vanishes identically mod p
std::optional<std::vector<Integer>> roots_mod_prime(const std::vector<Integer>& coeffs,
                                                    const Integer& p);

struct Candidate {
    WeightPair w;
    WeightPair v;
    WeightPair l;              // Gorenstein selection from the seed index
    StageInvariants stage;
    FamilyPolynomial new_upsilon;  // m v^0 v^inf * seed upsilon, still in t
    FactoredInteger modulus;       // factorization of l^0 w^0 w^inf
    Integer constant_gcd;          // gcd(l^inf * upsilon constant, l^0 w^0 w^inf)
    CongruenceCertificate residues;
    bool smooth_family;            // constant part coprime and residues nonempty
    std::string reject_reason;     // empty when smooth_family
};

Candidate se_extend(const SeedStructure& seed, const WeightPair& w, const WeightPair& v);

struct YpqSolution {
    Integer p, q, n;  // 4p^2 - 3q^2 = n^2, gcd(p, q) = 1, q < p
};

std::vector<YpqSolution> ypq_csc_search(const Integer& max_p);

struct GridOptions {
    Integer w_max = 16;
    Integer v_max = 16;
    // explicit candidate lists; each replaces its range when present
    std::optional<std::vector<WeightPair>> w_list;
    std::optional<std::vector<WeightPair>> v_list;
    bool require_nontrivial = true;  // skip product candidates (n = 0)
    bool include_rejected = false;
    unsigned threads = 1;
};

// Deterministic candidate sweep: evaluation may run on several threads,
// output order is always lexicographic in (w, v).
std::vector<Candidate> grid_search(const SeedStructure& seed, const GridOptions& opt);

}  // namespace bottjoin
