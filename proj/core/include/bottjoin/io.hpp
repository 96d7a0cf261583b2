// JSON wire formats.  All integers and rationals travel as decimal
// strings so arbitrary-precision values survive the round trip; object
// keys serialize sorted, making every report byte-reproducible.
#pragma once

#include <string>

#include <json.hpp>

#include "bottjoin/bott.hpp"
#include "bottjoin/cscs.hpp"
#include "bottjoin/join.hpp"
#include "bottjoin/search.hpp"
#include "bottjoin/topology.hpp"

namespace bottjoin::io {

using json = nlohmann::json;

// schema violations raise this; the CLI maps it to exit code 2
struct schema_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string integer_str(const Integer& v);
std::string rational_str(const Rational& v);
Integer parse_integer(const json& j, const std::string& what);
Rational parse_rational(const json& j, const std::string& what);

json orbifold_to_json(const BottOrbifold& orb);
BottOrbifold orbifold_from_json(const json& j);

json class_vector_to_json(const ClassVector& c);
ClassVector class_vector_from_json(const json& j, int height);

JoinTower tower_from_json(const json& j);
json tower_to_json(const JoinTower& tower);

json bott_check_report(const BottOrbifold& orb,
                       const std::optional<ClassVector>& ample_class);
json join_analysis_report(const JoinTower& tower);
json smoothness_to_json(const SmoothnessCertificate& cert);

json csc_count_report(const WeightPair& l, const WeightPair& w);
json csc_threshold_report(const Integer& l0, const WeightPair& w, const Rational& max_width);

json topology_to_json(const TopologyReport& rep);

SeedStructure seed_from_json(const json& j);
json seed_to_json(const SeedStructure& seed);
json family_to_json(const FamilyPolynomial& fam);
FamilyPolynomial family_from_json(const json& j);

// one self-contained JSONL ledger line
json ledger_entry(const SeedStructure& seed, const Candidate& cand);

json ypq_search_report(const std::vector<YpqSolution>& sols);

}  // namespace bottjoin::io
