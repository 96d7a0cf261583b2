// bottjoin: exact invariants of iterated weighted-sphere Sasaki joins
// and their Bott orbifold quotients.
//
// Exit codes: 0 success, 1 negative verdict under --strict, 2 input
// error, 3 internal invariant violation.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bottjoin/io.hpp"

namespace {

using bottjoin::io::json;
using bottjoin::io::schema_error;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw schema_error("cannot write " + out_path);
        out << text;
    }
}

bottjoin::WeightPair pair_from(long a, long b, const std::string& what) {
    try {
        return bottjoin::WeightPair(a, b);
    } catch (const std::invalid_argument& e) {
        throw schema_error(what + ": " + e.what());
    }
}

std::string default_ledger_path() {
    const char* dir = std::getenv("BOTTJOIN_LEDGER_DIR");
    if (dir && *dir) return std::string(dir) + "/ledger.jsonl";
    return "ledger.jsonl";
}

struct Verdict {
    bool ok = true;  // false plus --strict exits 1
};

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of iterated S^3 Sasaki joins and Bott orbifolds"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "exit 1 when the computed verdict is negative");

    Verdict verdict;

    // ---- bott-check ----
    auto* bott = app.add_subcommand("bott-check", "log-Fano test of a Bott orbifold");
    std::string bott_in, bott_out, ample_json;
    bott->add_option("input", bott_in, "orbifold JSON file")->required();
    bott->add_option("--ample-class", ample_json,
                     "class to test for ampleness (JSON coefficient array)");
    bott->add_option("--out", bott_out, "write the JSON report here instead of stdout");
    bott->callback([&] {
        json in = load_json(bott_in);
        bottjoin::BottOrbifold orb = bottjoin::io::orbifold_from_json(in);
        std::optional<bottjoin::ClassVector> ample;
        if (!ample_json.empty()) {
            json cls = json::parse(ample_json, nullptr, false);
            if (cls.is_discarded()) throw schema_error("--ample-class: invalid JSON");
            ample = bottjoin::io::class_vector_from_json(cls, orb.height());
        }
        json report = bottjoin::io::bott_check_report(orb, ample);
        emit(report, bott_out);
        std::cout << "log Fano: " << (report["log_fano"].get<bool>() ? "true" : "false");
        if (report.contains("offending_basis"))
            std::cout << "  (fails in basis y" << report["offending_basis"].dump() << ")";
        std::cout << "\n";
        verdict.ok = report["log_fano"].get<bool>() &&
                     (!report.contains("ample") || report["ample"].get<bool>());
    });

    // ---- join-analyze ----
    auto* analyze = app.add_subcommand("join-analyze", "stagewise quotient analysis of a tower");
    std::string tower_in, analyze_out;
    analyze->add_option("input", tower_in, "tower JSON file")->required();
    analyze->add_option("--out", analyze_out, "write the JSON report here instead of stdout");
    analyze->callback([&] {
        bottjoin::JoinTower tower = bottjoin::io::tower_from_json(load_json(tower_in));
        json report = bottjoin::io::join_analysis_report(tower);
        emit(report, analyze_out);
        verdict.ok = report["smooth"].get<bool>();
    });

    // ---- join-smooth ----
    auto* smooth = app.add_subcommand("join-smooth", "smoothness certificate of a tower");
    std::string smooth_in;
    smooth->add_option("input", smooth_in, "tower JSON file")->required();
    smooth->callback([&] {
        bottjoin::JoinTower tower = bottjoin::io::tower_from_json(load_json(smooth_in));
        json report = bottjoin::io::join_analysis_report(tower);
        json out;
        out["smooth"] = report["smooth"];
        json certs = json::array();
        for (const auto& st : report["stages"])
            if (st.contains("smoothness")) certs.push_back(st["smoothness"]);
        if (report.contains("next_stage_smoothness"))
            certs.push_back(report["next_stage_smoothness"]);
        out["certificates"] = certs;
        emit(out, "");
        verdict.ok = report["smooth"].get<bool>();
    });

    // ---- cscs-count ----
    auto* count = app.add_subcommand("cscs-count", "count cscS rays in the w-cone");
    long c_l0 = 0, c_linf = 0, c_w0 = 0, c_winf = 0;
    count->add_option("--l0", c_l0)->required();
    count->add_option("--linf", c_linf)->required();
    count->add_option("--w0", c_w0)->required();
    count->add_option("--winf", c_winf)->required();
    count->callback([&] {
        auto l = pair_from(c_l0, c_linf, "l");
        auto w = pair_from(c_w0, c_winf, "w");
        if (!(w.a0 > w.ainf)) throw schema_error("w: w0 > winf required");
        json report = bottjoin::io::csc_count_report(l, w);
        emit(report, "");
        std::cout << "rays: " << report["count"].get<int>() << "\n";
    });

    // ---- cscs-threshold ----
    auto* thresh = app.add_subcommand("cscs-threshold", "bracket the 1-to-3 ray transition");
    long t_l0 = 0, t_w0 = 0, t_winf = 0;
    long t_den = 1024;
    thresh->add_option("--l0", t_l0)->required();
    thresh->add_option("--w0", t_w0)->required();
    thresh->add_option("--winf", t_winf)->required();
    thresh->add_option("--width-den", t_den, "bracket width is 1/WIDTH_DEN");
    thresh->callback([&] {
        auto w = pair_from(t_w0, t_winf, "w");
        if (!(w.a0 > w.ainf)) throw schema_error("w: w0 > winf required");
        if (t_l0 < 1) throw schema_error("--l0 must be positive");
        if (t_den < 1) throw schema_error("--width-den must be positive");
        bottjoin::Rational width(1, t_den);
        emit(bottjoin::io::csc_threshold_report(bottjoin::Integer(t_l0), w, width), "");
    });

    // ---- search-se ----
    auto* se = app.add_subcommand("search-se", "Gorenstein extension grid search");
    std::string seed_path, ledger_path, w_list_path, v_list_path;
    long w_max = 16, v_max = 16;
    unsigned threads = 1;
    bool include_rejected = false;
    se->add_option("--seed", seed_path, "seed JSON file")->required();
    se->add_option("--w-max", w_max, "bound on both components of w");
    se->add_option("--v-max", v_max, "bound on both components of v");
    se->add_option("--w-list", w_list_path, "JSON file with explicit w pairs (overrides --w-max)");
    se->add_option("--v-list", v_list_path, "JSON file with explicit v pairs (overrides --v-max)");
    se->add_option("--out", ledger_path, "JSONL ledger path (default $BOTTJOIN_LEDGER_DIR)");
    se->add_option("--threads", threads, "worker threads (output is thread-count invariant)");
    se->add_flag("--include-rejected", include_rejected, "also record rejected candidates");
    se->callback([&] {
        bottjoin::SeedStructure seed = bottjoin::io::seed_from_json(load_json(seed_path));
        bottjoin::GridOptions opt;
        if (w_max < 0 || v_max < 0) throw schema_error("ranges must be nonnegative");
        opt.w_max = w_max;
        opt.v_max = v_max;
        opt.threads = threads;
        opt.include_rejected = include_rejected;
        auto load_pairs = [&](const std::string& path, const char* what) {
            json list = load_json(path);
            if (!list.is_array())
                throw schema_error(std::string(what) + ": expected a JSON array of pairs");
            std::vector<bottjoin::WeightPair> pairs;
            for (const auto& e : list) {
                if (!e.is_array() || e.size() != 2)
                    throw schema_error(std::string(what) + ": expected pairs");
                pairs.push_back(bottjoin::WeightPair(bottjoin::io::parse_integer(e[0], what),
                                                     bottjoin::io::parse_integer(e[1], what)));
            }
            return pairs;
        };
        if (!w_list_path.empty()) opt.w_list = load_pairs(w_list_path, "w-list");
        if (!v_list_path.empty()) opt.v_list = load_pairs(v_list_path, "v-list");
        std::vector<bottjoin::Candidate> found = bottjoin::grid_search(seed, opt);
        std::string path = ledger_path.empty() ? default_ledger_path() : ledger_path;
        std::ofstream out(path);
        if (!out) throw schema_error("cannot write " + path);
        for (const auto& cand : found) out << bottjoin::io::ledger_entry(seed, cand).dump() << "\n";
        out.flush();
        if (!out) throw schema_error("write failure on " + path);
        std::cout << "candidates: " << found.size() << "  ledger: " << path << "\n";
        verdict.ok = !found.empty();
    });

    // ---- search-ypq ----
    auto* ypq = app.add_subcommand("search-ypq", "enumerate 4p^2 - 3q^2 = n^2");
    long max_p = 50;
    ypq->add_option("--max-p", max_p)->required();
    ypq->callback([&] {
        if (max_p < 1) throw schema_error("--max-p must be positive");
        emit(bottjoin::io::ypq_search_report(bottjoin::ypq_csc_search(bottjoin::Integer(max_p))),
             "");
    });

    // ---- topology ----
    auto* topo = app.add_subcommand("topology", "closed-form topological invariants");
    long topo_k = 0;
    std::string topo_tower;
    topo->add_option("--k", topo_k, "join height");
    topo->add_option("--tower", topo_tower, "tower JSON file (height and dim-7 torsion)");
    topo->callback([&] {
        if (topo_k == 0 && topo_tower.empty())
            throw schema_error("topology: pass --k or --tower");
        json out;
        if (topo_k != 0) {
            if (topo_k < 2) throw schema_error("topology: k must be at least 2");
            out = bottjoin::io::topology_to_json(bottjoin::invariants(static_cast<int>(topo_k)));
        } else {
            bottjoin::JoinTower tower = bottjoin::io::tower_from_json(load_json(topo_tower));
            int k = tower.height();
            if (k < 2) throw schema_error("topology: tower height must be at least 2");
            out = bottjoin::io::topology_to_json(bottjoin::invariants(k));
            if (k == 3 && tower.stages[1].v.has_value()) {
                bottjoin::StageInvariants si = bottjoin::stage_invariants(
                    *tower.stages[1].l, tower.stages[1].w, *tower.stages[1].v);
                auto orders = bottjoin::dim7_torsion(*tower.stages[1].v, si.m,
                                                     *tower.stages[2].l, tower.stages[2].w);
                out["h4_torsion_orders"] = json::array(
                    {bottjoin::io::integer_str(orders.first),
                     bottjoin::io::integer_str(orders.second)});
            }
        }
        emit(out, "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return (strict && !verdict.ok) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schema_error& e) {
        std::cerr << json{{"error", "input"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "input"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const bottjoin::internal_error& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    }
}
