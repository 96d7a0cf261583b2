#include "bottjoin/io.hpp"

namespace bottjoin::io {

std::string integer_str(const Integer& v) { return v.get_str(); }

std::string rational_str(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_str();
}

Integer parse_integer(const json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Integer(j.get<long>());
        if (j.is_string()) return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw schema_error(what + ": expected an integer or a decimal string");
}

Rational parse_rational(const json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) {
            Rational r(j.get<std::string>());
            r.canonicalize();
            if (r.get_den() < 1) throw schema_error(what);
            return r;
        }
    } catch (const schema_error&) {
        throw;
    } catch (const std::exception&) {
    }
    throw schema_error(what + ": expected a rational as \"p/q\" or an integer");
}

namespace {

json weight_to_json(const WeightPair& w) {
    return json::array({integer_str(w.a0), integer_str(w.ainf)});
}

WeightPair weight_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw schema_error(what + ": expected [a, b]");
    try {
        return WeightPair(parse_integer(j[0], what), parse_integer(j[1], what));
    } catch (const std::invalid_argument& e) {
        throw schema_error(what + ": " + e.what());
    }
}

json factored_to_json(const FactoredInteger& f) {
    json primes = json::object();
    for (const auto& [p, e] : f.primes) primes[integer_str(p)] = e;
    json out;
    out["primes"] = primes;
    out["cofactor"] = integer_str(f.cofactor);
    out["fully_factored"] = f.fully_factored;
    out["value"] = integer_str(f.value());
    return out;
}

json rational_list(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(rational_str(c));
    return out;
}

}  // namespace

json orbifold_to_json(const BottOrbifold& orb) {
    const int n = orb.height();
    json a = json::array();
    for (int i = 2; i <= n; ++i) {
        json row = json::array();
        for (int j = 1; j < i; ++j) row.push_back(integer_str(orb.matrix.entry(i, j)));
        a.push_back(row);
    }
    json m = json::array();
    for (const auto& r : orb.ram)
        m.push_back(json::array({integer_str(r.m0), integer_str(r.minf)}));
    return json{{"n", n}, {"A", a}, {"m", m}};
}

BottOrbifold orbifold_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("A") || !j.contains("m"))
        throw schema_error("orbifold: expected {n, A, m}");
    int n = 0;
    if (j["n"].is_number_integer()) n = j["n"].get<int>();
    if (n < 1) throw schema_error("orbifold: n must be a positive integer");
    const json& a = j["A"];
    if (!a.is_array()) throw schema_error("orbifold: A must be an array of rows");

    std::vector<std::vector<Integer>> rows;
    if (static_cast<int>(a.size()) == n) {
        // full square matrix: validate unipotent lower-triangular shape
        for (int i = 1; i <= n; ++i) {
            const json& row = a[i - 1];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw schema_error("orbifold: full matrix rows must have n entries");
            for (int c = 1; c <= n; ++c) {
                Integer v = parse_integer(row[c - 1], "orbifold: A entry");
                if (c == i && v != 1) throw schema_error("orbifold: diagonal entries must be 1");
                if (c > i && v != 0)
                    throw schema_error("orbifold: entries above the diagonal must vanish");
            }
            if (i >= 2) {
                std::vector<Integer> lower;
                for (int c = 1; c < i; ++c)
                    lower.push_back(parse_integer(row[c - 1], "orbifold: A entry"));
                rows.push_back(std::move(lower));
            }
        }
    } else if (static_cast<int>(a.size()) == n - 1) {
        for (int i = 2; i <= n; ++i) {
            const json& row = a[i - 2];
            if (!row.is_array() || static_cast<int>(row.size()) != i - 1)
                throw schema_error("orbifold: row for stage " + std::to_string(i) +
                                   " must have " + std::to_string(i - 1) + " entries");
            std::vector<Integer> lower;
            for (const auto& e : row) lower.push_back(parse_integer(e, "orbifold: A entry"));
            rows.push_back(std::move(lower));
        }
    } else {
        throw schema_error("orbifold: A must have n (full) or n-1 (strictly lower) rows");
    }

    const json& m = j["m"];
    if (!m.is_array() || static_cast<int>(m.size()) != n)
        throw schema_error("orbifold: m must list one [m0, minf] pair per stage");
    std::vector<RamPair> ram;
    for (const auto& pair : m) {
        if (!pair.is_array() || pair.size() != 2)
            throw schema_error("orbifold: each m entry must be [m0, minf]");
        RamPair r{parse_integer(pair[0], "orbifold: m0"), parse_integer(pair[1], "orbifold: minf")};
        if (r.m0 < 1 || r.minf < 1) throw schema_error("orbifold: ramification must be positive");
        ram.push_back(std::move(r));
    }
    try {
        return BottOrbifold(BottMatrix(n, std::move(rows)), std::move(ram));
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string("orbifold: ") + e.what());
    }
}

json class_vector_to_json(const ClassVector& c) {
    return json{{"y_indices", c.basis.y_indices()}, {"coefficients", rational_list(c.coeffs)}};
}

ClassVector class_vector_from_json(const json& j, int height) {
    std::vector<int> ys;
    json coeffs_json;
    if (j.is_array()) {
        coeffs_json = j;  // bare coefficient list means the all-x basis
    } else if (j.is_object() && j.contains("coefficients")) {
        coeffs_json = j["coefficients"];
        if (j.contains("y_indices"))
            for (const auto& e : j["y_indices"]) ys.push_back(e.get<int>());
    } else {
        throw schema_error("class: expected a coefficient array or {y_indices, coefficients}");
    }
    if (!coeffs_json.is_array() || static_cast<int>(coeffs_json.size()) != height)
        throw schema_error("class: expected " + std::to_string(height) + " coefficients");
    std::vector<Rational> coeffs;
    for (const auto& e : coeffs_json) coeffs.push_back(parse_rational(e, "class coefficient"));
    try {
        return ClassVector(std::move(coeffs), BasisSelector(height, ys));
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string("class: ") + e.what());
    }
}

JoinTower tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array() ||
        j["stages"].empty())
        throw schema_error("tower: expected {stages: [...]}");
    std::vector<JoinStage> stages;
    int index = 1;
    for (const auto& st : j["stages"]) {
        if (!st.is_object() || !st.contains("w"))
            throw schema_error("tower: every stage needs w");
        std::string tag = "stage " + std::to_string(index);
        std::optional<WeightPair> l, v;
        if (st.contains("l")) l = weight_from_json(st["l"], tag + " l");
        if (st.contains("v")) v = weight_from_json(st["v"], tag + " v");
        stages.push_back(JoinStage{l, weight_from_json(st["w"], tag + " w"), v});
        ++index;
    }
    try {
        return JoinTower(std::move(stages));
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string("tower: ") + e.what());
    }
}

json tower_to_json(const JoinTower& tower) {
    json stages = json::array();
    for (const auto& st : tower.stages) {
        json s;
        s["w"] = weight_to_json(st.w);
        if (st.l) s["l"] = weight_to_json(*st.l);
        if (st.v) s["v"] = weight_to_json(*st.v);
        stages.push_back(s);
    }
    return json{{"stages", stages}};
}

json bott_check_report(const BottOrbifold& orb, const std::optional<ClassVector>& ample_class) {
    LogFanoReport rep = is_log_fano(orb);
    json bases = json::array();
    for (const auto& row : rep.table) {
        bases.push_back(json{{"y_indices", row.basis.y_indices()},
                             {"coefficients", rational_list(row.coeffs)},
                             {"all_positive", row.all_positive}});
    }
    json out;
    out["orbifold"] = orbifold_to_json(orb);
    out["c1_orb"] = class_vector_to_json(c1_orb(orb));
    out["bases"] = bases;
    out["log_fano"] = rep.log_fano;
    if (rep.offending) out["offending_basis"] = rep.offending->y_indices();
    if (rep.log_fano) {
        FanoIndexResult fi = fano_index(orb);
        out["fano_index"] = integer_str(fi.index);
        out["fano_index_lattice_member"] = fi.lattice_member;
    }
    if (ample_class) {
        out["ample_class"] = class_vector_to_json(*ample_class);
        out["ample"] = is_ample(*ample_class, orb);
    }
    return out;
}

json smoothness_to_json(const SmoothnessCertificate& cert) {
    json out;
    out["smooth"] = cert.smooth;
    out["lhs"] = integer_str(cert.lhs);
    out["rhs"] = integer_str(cert.rhs);
    out["gcd"] = integer_str(cert.common);
    if (cert.witness_prime) out["witness_prime"] = integer_str(*cert.witness_prime);
    return out;
}

json join_analysis_report(const JoinTower& tower) {
    QuotientResult qr = quotient_bott_orbifold(tower);
    json stages = json::array();
    for (const auto& st : qr.stages) {
        json s;
        s["stage"] = st.stage;
        if (st.stage >= 2) {
            s["s"] = integer_str(st.s);
            s["m"] = integer_str(st.m);
            s["n"] = integer_str(st.n);
            s["product"] = st.product;
            json row = json::array();
            for (const auto& e : st.matrix_row) row.push_back(integer_str(e));
            s["matrix_row"] = row;
            s["smoothness"] = smoothness_to_json(*st.smoothness);
        }
        s["upsilon"] = factored_to_json(st.upsilon);
        s["omega"] = class_vector_to_json(st.omega);
        s["omega_primitive"] = class_vector_to_json(st.omega_primitive);
        s["ram"] = json::array({integer_str(st.ram.m0), integer_str(st.ram.minf)});
        stages.push_back(s);
    }
    json out;
    out["tower"] = tower_to_json(tower);
    out["quotient_height"] = qr.orbifold.height();
    out["orbifold"] = orbifold_to_json(qr.orbifold);
    out["stages"] = stages;
    if (qr.next_stage_smoothness)
        out["next_stage_smoothness"] = smoothness_to_json(*qr.next_stage_smoothness);
    bool smooth = true;
    for (const auto& st : qr.stages)
        if (st.smoothness && !st.smoothness->smooth) smooth = false;
    if (qr.next_stage_smoothness && !qr.next_stage_smoothness->smooth) smooth = false;
    out["smooth"] = smooth;
    return out;
}

json csc_count_report(const WeightPair& l, const WeightPair& w) {
    RayCount rc = count_csc_rays(l, w);
    json roots = json::array();
    for (const auto& r : rc.rational_rays)
        roots.push_back(json{{"rational", rational_str(r.root)}, {"multiplicity", r.multiplicity}});
    json intervals = json::array();
    for (const auto& iv : rc.isolating)
        intervals.push_back(json::array({rational_str(iv.lo), rational_str(iv.hi)}));
    json out;
    out["l"] = weight_to_json(l);
    out["w"] = weight_to_json(w);
    out["count"] = rc.count;
    out["rational_rays"] = roots;
    out["isolating_intervals"] = intervals;
    out["at_threshold"] = rc.at_threshold;
    ThresholdSide side = classify_linf(l.a0, w, l.ainf);
    out["threshold_side"] = side == ThresholdSide::below   ? "below"
                            : side == ThresholdSide::above ? "above"
                                                           : "at";
    return out;
}

json csc_threshold_report(const Integer& l0, const WeightPair& w, const Rational& max_width) {
    ThresholdInterval ti = threshold_interval(l0, w, max_width);
    json out;
    out["l0"] = integer_str(l0);
    out["w"] = weight_to_json(w);
    out["interval"] = json::array({rational_str(ti.bracket.lo), rational_str(ti.bracket.hi)});
    json h = json::array();
    for (const auto& c : ti.h.coefficients()) h.push_back(rational_str(c));
    out["h_coefficients"] = h;
    out["lower_bound"] = integer_str(2 * l0 * w.a0);
    Rational ub = Rational(l0) * (16 * Rational(w.a0) - 5 * Rational(w.ainf)) / 2;
    out["upper_bound"] = rational_str(ub);
    return out;
}

json topology_to_json(const TopologyReport& rep) {
    json out;
    out["k"] = rep.k;
    out["dimension"] = 2 * rep.k + 1;
    out["pi1_trivial"] = rep.pi1_trivial;
    out["pi2_rank"] = rep.pi2_rank;
    out["pi3_rank"] = rep.pi3_rank;
    out["pi4_two_torsion_rank"] = rep.pi4_two_torsion_rank;
    out["h2_rank"] = rep.h2_rank;
    out["h3"] = rep.h3 ? json(*rep.h3) : json("unknown");
    out["h4_free_rank"] = rep.h4_free_rank ? json(integer_str(*rep.h4_free_rank)) : json("unknown");
    out["even_betti_degrees"] = rep.even_betti_degrees;
    return out;
}

json family_to_json(const FamilyPolynomial& fam) {
    json factors = json::array();
    for (const auto& f : fam.factors) {
        json c = json::array();
        for (const auto& e : f.coeffs) c.push_back(integer_str(e));
        factors.push_back(c);
    }
    json constant = json::object();
    for (const auto& [p, e] : fam.constant.primes) constant[integer_str(p)] = e;
    return json{{"constant_factorization", constant},
                {"cofactor", integer_str(fam.constant.cofactor)},
                {"constant", integer_str(fam.constant.value())},
                {"poly_factors", factors}};
}

FamilyPolynomial family_from_json(const json& j) {
    if (!j.is_object()) throw schema_error("family: expected an object");
    Integer constant = 1;
    if (j.contains("constant")) {
        constant = parse_integer(j["constant"], "family constant");
    } else if (j.contains("constant_factorization")) {
        for (const auto& [p, e] : j["constant_factorization"].items())
            constant *= pow_int(Integer(p), e.get<unsigned long>());
        if (j.contains("cofactor")) constant *= parse_integer(j["cofactor"], "family cofactor");
    } else {
        throw schema_error("family: constant or constant_factorization required");
    }
    std::vector<std::vector<Integer>> factors;
    if (j.contains("poly_factors")) {
        for (const auto& f : j["poly_factors"]) {
            if (!f.is_array() || f.empty())
                throw schema_error("family: each poly factor is a nonempty coefficient list");
            std::vector<Integer> coeffs;
            for (const auto& c : f) coeffs.push_back(parse_integer(c, "family coefficient"));
            factors.push_back(std::move(coeffs));
        }
    }
    try {
        return FamilyPolynomial::from_parts(constant, std::move(factors));
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string("family: ") + e.what());
    }
}

SeedStructure seed_from_json(const json& j) {
    if (!j.is_object() || !j.contains("fano_index") || !j.contains("upsilon"))
        throw schema_error("seed: expected {dimension, fano_index, upsilon}");
    int dim = j.contains("dimension") ? j["dimension"].get<int>() : 0;
    std::string note = j.contains("note") ? j["note"].get<std::string>() : "";
    try {
        return SeedStructure(dim, parse_integer(j["fano_index"], "seed fano_index"),
                             family_from_json(j["upsilon"]), note);
    } catch (const std::invalid_argument& e) {
        throw schema_error(std::string("seed: ") + e.what());
    }
}

json seed_to_json(const SeedStructure& seed) {
    json out;
    out["dimension"] = seed.dimension;
    out["fano_index"] = integer_str(seed.fano_index);
    out["upsilon"] = family_to_json(seed.upsilon);
    if (!seed.note.empty()) out["note"] = seed.note;
    return out;
}

json ledger_entry(const SeedStructure& seed, const Candidate& cand) {
    json out;
    out["seed"] = seed_to_json(seed);
    out["w"] = weight_to_json(cand.w);
    out["v"] = weight_to_json(cand.v);
    out["l"] = weight_to_json(cand.l);
    out["stage"] = json{{"s", integer_str(cand.stage.s)},
                        {"m", integer_str(cand.stage.m)},
                        {"n", integer_str(cand.stage.n)},
                        {"product", cand.stage.product}};
    out["upsilon"] = family_to_json(cand.new_upsilon);
    json residues;
    residues["modulus"] = integer_str(cand.residues.modulus_radical);
    json per_prime = json::object();
    for (const auto& [p, ex] : cand.residues.excluded) {
        json list = json::array();
        for (const auto& r : ex) list.push_back(integer_str(r));
        per_prime[integer_str(p)] = list;
    }
    residues["excluded_per_prime"] = per_prime;
    residues["admissible_count"] = integer_str(cand.residues.admissible_count);
    if (cand.residues.admissible_count > 0 && cand.residues.admissible_count <= 512) {
        json adm = json::array();
        for (const auto& r : cand.residues.enumerate(512)) adm.push_back(integer_str(r));
        residues["admissible"] = adm;
    }
    residues["zero_admissible"] = cand.residues.is_admissible(0);
    out["residues"] = residues;
    out["constant_gcd"] = integer_str(cand.constant_gcd);
    out["verdict"] = cand.smooth_family ? "smooth-family" : "rejected";
    out["reason"] = cand.reject_reason;
    return out;
}

json ypq_search_report(const std::vector<YpqSolution>& sols) {
    json out = json::array();
    for (const auto& s : sols)
        out.push_back(json{{"p", integer_str(s.p)}, {"q", integer_str(s.q)}, {"n", integer_str(s.n)}});
    return out;
}

}  // namespace bottjoin::io
