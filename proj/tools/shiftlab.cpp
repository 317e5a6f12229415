// shiftlab command-line front end. Exit codes: 0 ok, 2 input error, 3 hypothesis not met,
// 4 theorem violation.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <shiftlab/shiftlab.hpp>

#ifndef SHIFTLAB_CATALOG_DIR
#define SHIFTLAB_CATALOG_DIR "catalog"
#endif

namespace fs = std::filesystem;
using namespace shiftlab;

namespace {

struct Common {
    bool json = false;
    bool timing = false;
};

void emit_human(const ojson& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            std::cout << indent << it.key() << ":\n";
            emit_human(*it, indent + "  ");
        } else {
            std::cout << indent << it.key() << ": " << it->dump() << "\n";
        }
    }
}

void emit(ojson j, const Common& c, std::chrono::steady_clock::time_point t0) {
    if (c.timing) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        j["wall_time_s"] = num(s);
    }
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        emit_human(j);
}

ShiftPresentation load_with_hash(const std::string& path, ojson& rep) {
    rep["inputs"][fs::path(path).filename().string()] = file_hash(path);
    return load_shift(path);
}

int cmd_entropy(const std::string& shift, const std::string& method, coord_t n, const std::string& omega_text,
                bool csv, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("entropy");
    const auto x = load_with_hash(shift, rep);
    rep["dim"] = x.dim();
    if (method == "perron") {
        const auto r = entropy_exact(x, n);
        rep["result"] = entropy_json(r);
        if (csv) {
            std::cout << "n,count,rate\n";
            for (const auto& e : r.trace) std::cout << e.n << "," << e.count << "," << fmt12(e.rate) << "\n";
            return 0;
        }
    } else if (method == "count") {
        const auto r = entropy_pattern_limit(x, FolnerBoxes::up_to(x.dim(), n));
        rep["result"] = entropy_json(r);
        if (csv) {
            std::cout << "n,count,rate\n";
            for (const auto& e : r.trace) std::cout << e.n << "," << e.count << "," << fmt12(e.rate) << "\n";
            return 0;
        }
    } else if (method == "quantities") {
        const Shape omega = parse_shape(omega_text);
        const auto rows = entropy_quantities(x, omega, FolnerBoxes::up_to(1, n));
        if (csv) {
            std::cout << "n,sep,spa,cov,rate,limsup\n";
            for (const auto& r : rows)
                std::cout << r.n << "," << r.sep << "," << r.spa << "," << r.cov << "," << fmt12(r.rate) << ","
                          << fmt12(r.limsup) << "\n";
            return 0;
        }
        ojson arr = ojson::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"sep", big(r.sep)}, {"spa", big(r.spa)}, {"cov", big(r.cov)},
                           {"rate", num(r.rate)}, {"limsup", num(r.limsup)}});
        rep["omega"] = omega.to_json();
        rep["result"] = {{"method", "quantities"}, {"trace", arr}};
    } else {
        throw InputError("unknown entropy method " + method + " (perron|count|quantities)");
    }
    emit(rep, c, t0);
    return 0;
}

int cmd_check_si(const std::string& shift, const std::string& delta_text, coord_t bound, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("check-si");
    const auto x = load_with_hash(shift, rep);
    const auto cert = strong_irreducibility(x, bound);
    rep["certificate"] = certificate_json(x.alphabet(), cert);
    if (cert.delta) {
        const Shape lambda = specification_subset(Shape::of({0}), *cert.delta);
        rep["specification_subset"] = lambda.to_json();
    }
    if (!delta_text.empty()) {
        const Shape delta = parse_shape(delta_text);
        const auto d = delta_irreducible(x, delta);
        ojson dj;
        dj["delta"] = delta.to_json();
        dj["irreducible"] = d.irreducible;
        if (d.counterexample) dj["counterexample"] = join_failure_json(x.alphabet(), *d.counterexample);
        rep["delta_check"] = dj;
    }
    emit(rep, c, t0);
    return 0;
}

int cmd_goe(const std::string& code_path, const std::string& check, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("goe");
    rep["inputs"][fs::path(code_path).filename().string()] = file_hash(code_path);
    const auto f = load_code(code_path);
    const auto& da = f.domain().alphabet();
    const auto& ca = f.codomain().alphabet();
    rep["check"] = check;
    int code = 0;
    if (check == "surjective") {
        const auto r = is_surjective(f);
        rep["surjective"] = r.surjective;
        if (r.missing_word) rep["missing_word"] = ca.format(*r.missing_word);
    } else if (check == "injective") {
        const auto r = is_injective(f);
        rep["injective"] = r.injective;
        if (r.witness) rep["witness"] = collision_json(da, *r.witness);
    } else if (check == "preinjective") {
        const auto r = is_preinjective(f);
        rep["pre_injective"] = r.pre_injective;
        if (r.witness) {
            rep["witness"] = collision_json(da, *r.witness);
            rep["difference"] = r.difference->to_json();
        }
    } else if (check == "myhill") {
        const auto v = myhill_check(f);
        rep["pre_injective"] = v.pre_injective;
        rep["surjective"] = v.surjective;
        rep["verdict"] = v.pass ? (v.vacuous ? "PASS (vacuous)" : "PASS") : "THEOREM VIOLATION";
        if (v.missing_word) rep["missing_word"] = ca.format(*v.missing_word);
        if (v.collision) rep["witness"] = collision_json(da, *v.collision);
        if (!v.pass) code = 4;
    } else if (check == "drop") {
        const auto w = preinjectivity_failure_on_drop(f);
        rep["h_domain"] = num(w.h_domain);
        rep["h_image"] = num(w.h_image);
        rep["witness"] = collision_json(da, w.pair);
        rep["difference"] = w.difference.to_json();
    } else {
        throw InputError("unknown check " + check + " (surjective|injective|preinjective|myhill|drop)");
    }
    emit(rep, c, t0);
    return code;
}

int cmd_chain_suite(std::size_t instances, std::uint64_t seed, std::size_t max_points, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("chain-suite");
    rep["seed"] = seed;
    const auto s = chain_sweep(instances, seed, max_points);
    const auto e = equivalence_sweep(instances, seed ^ 0x9e3779b97f4a7c15ULL);
    rep["instances"] = s.instances;
    rep["chain_violations"] = s.chain_violations;
    rep["right_invariance_violations"] = s.right_invariance_violations;
    rep["monotonicity_violations"] = s.monotonicity_violations;
    rep["submultiplicativity_violations"] = s.submultiplicativity_violations;
    rep["equivalence_instances"] = e.instances;
    rep["equivalence_mismatches"] = e.mismatches;
    rep["violations"] = s.total_violations() + e.mismatches;
    emit(rep, c, t0);
    return s.total_violations() + e.mismatches == 0 ? 0 : 4;
}

int cmd_counterexamples(const std::string& which, const std::string& catalog, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("counterexamples");
    require_input(which == "one-block" || which == "two-point" || which == "all",
                  "unknown counterexample " + which + " (one-block|two-point|all)");
    if (which == "one-block" || which == "all") {
        const fs::path code_path = fs::path(catalog) / "ten_to_eleven.code";
        rep["inputs"][code_path.filename().string()] = file_hash(code_path);
        const auto f = load_code(code_path);
        const auto inj = is_injective(f);
        const auto sur = is_surjective(f);
        const auto cert = strong_irreducibility(f.domain());
        ojson j;
        j["injective"] = inj.injective;
        j["surjective"] = sur.surjective;
        j["strongly_irreducible"] = cert.status == SiStatus::strongly_irreducible;
        if (sur.missing_word) j["missing_word"] = f.codomain().alphabet().format(*sur.missing_word);
        // A configuration with a single 1 has no preimage.
        const auto single = PointedConfiguration::constant(1, 0).with_patch(Pattern::word(0, {1}));
        j["single_one_in_image"] = in_language(f.image(), single.window(-1, 1));
        j["certificate"] = certificate_json(f.domain().alphabet(), cert);
        rep["one_block"] = j;
    }
    if (which == "two-point" || which == "all") {
        const auto r = two_point_counterexample();
        rep["two_point"] = {{"equivariant", r.equivariant}, {"injective", r.injective},
                            {"pre_injective", r.pre_injective}, {"surjective", r.surjective}};
    }
    emit(rep, c, t0);
    return 0;
}

int cmd_myhill_sweep(const std::string& catalog, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    ojson rep = report_header("myhill-sweep");
    const fs::path full = fs::path(catalog) / "full2.sft";
    rep["inputs"][full.filename().string()] = file_hash(full);
    auto x = std::make_shared<const ShiftPresentation>(load_shift(full));
    std::size_t surj = 0, pre = 0, inj = 0, violations = 0;
    ojson viol = ojson::array();
    for (int rule = 0; rule < 256; ++rule) {
        const auto f = BlockCode::elementary(rule, x);
        const auto v = myhill_check(f);
        surj += v.surjective;
        pre += v.pre_injective;
        inj += is_injective(f).injective;
        if (!v.pass) {
            ++violations;
            viol.push_back(rule);
        }
    }
    rep["rules"] = 256;
    rep["surjective"] = surj;
    rep["pre_injective"] = pre;
    rep["injective"] = inj;
    rep["surjective_equals_pre_injective"] = surj == pre;
    rep["violations"] = violations;
    rep["violating_rules"] = viol;
    emit(rep, c, t0);
    return violations == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shiftlab: entropy, irreducibility and Garden-of-Eden checks for shift spaces"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "print the JSON report");
    app.add_flag("--timing", common.timing, "include wall time in the report");

    std::string shift, method = "perron", omega = "[0]", delta, code, check = "myhill", which = "all";
    std::string catalog = SHIFTLAB_CATALOG_DIR;
    coord_t n = 32, bound = 16;
    bool csv = false;
    std::size_t instances = 200, max_points = 10;
    std::uint64_t seed = 7;

    auto* ent = app.add_subcommand("entropy", "topological entropy of a shift");
    ent->add_option("--shift", shift, "shift file")->required();
    ent->add_option("--method", method, "perron|count|quantities");
    ent->add_option("--n", n, "largest box size");
    ent->add_option("--omega", omega, "window of the cylinder entourage (quantities)");
    ent->add_flag("--csv", csv, "print the trace as CSV");

    auto* si = app.add_subcommand("check-si", "strong irreducibility certificate");
    si->add_option("--shift", shift, "shift file")->required();
    si->add_option("--delta", delta, "also test delta-irreducibility for this shape");
    si->add_option("--bound", bound, "gap search bound for sofic shifts");

    auto* goe = app.add_subcommand("goe", "Garden-of-Eden checks for a block code");
    goe->add_option("--code", code, "code file")->required();
    goe->add_option("--check", check, "surjective|injective|preinjective|myhill|drop");

    auto* chain = app.add_subcommand("chain-suite", "randomized finite-system sweeps");
    chain->add_option("--instances", instances, "number of random systems");
    chain->add_option("--seed", seed, "random seed");
    chain->add_option("--max-points", max_points, "largest ground set");

    auto* cex = app.add_subcommand("counterexamples", "catalog counterexamples");
    cex->add_option("--which", which, "one-block|two-point|all");
    cex->add_option("--catalog", catalog, "catalog directory");

    auto* sweep = app.add_subcommand("myhill-sweep", "all 256 elementary rules on the full 2-shift");
    sweep->add_option("--catalog", catalog, "catalog directory");

    for (auto* sub : {ent, si, goe, chain, cex, sweep}) {
        sub->add_flag("--json", common.json, "print the JSON report");
        sub->add_flag("--timing", common.timing, "include wall time in the report");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*ent) return cmd_entropy(shift, method, n, omega, csv, common);
        if (*si) return cmd_check_si(shift, delta, bound, common);
        if (*goe) return cmd_goe(code, check, common);
        if (*chain) return cmd_chain_suite(instances, seed, max_points, common);
        if (*cex) return cmd_counterexamples(which, catalog, common);
        if (*sweep) return cmd_myhill_sweep(catalog, common);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
