// iwa: exact anticyclotomic Iwasawa-algebra toolkit.
//
// Subcommands: admissible, simulate-points, lfun, specialize, report,
// selftest. All file formats are UTF-8 JSON tagged "iw/1"; every artifact
// records the seed that produced it. Exit codes: 0 success, 1 certificate
// failure, 2 input error, 3 precision/CAP abort.

#include <CLI11.hpp>

#include <iostream>

#include "iwa/acceptance.hpp"
#include "iwa/json_io.hpp"

namespace {

using namespace iwa;
using iwa::io::json;

int run_admissible(const std::string& curve_path, unsigned k, u64 bound, bool as_json,
                   bool strict) {
    io::CurveInput in = io::curve_input_from_json(io::load_file(curve_path, strict), strict);
    CurveContext ctx = CurveContext::build(in.curve, in.N, in.D_K, in.p, in.assertions,
                                           in.reduction);
    auto reports = enumerate_admissible_reports(ctx, k, bound);
    std::vector<u64> primes;
    for (const auto& r : reports)
        if (r.admissible()) primes.push_back(r.ell);
    if (as_json) {
        json out{{"schema", io::kSchemaTag}, {"p", ctx.p()},     {"k", k},
                 {"bound", bound},           {"primes", primes}, {"N_plus", ctx.N_plus()},
                 {"N_minus", ctx.N_minus()}};
        out["reports"] = json::array();
        for (const auto& r : reports) out["reports"].push_back(io::clause_report_to_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "N = " << ctx.N() << " = " << ctx.N_plus() << " * " << ctx.N_minus()
                  << ", p = " << ctx.p() << ", k = " << k << ", bound = " << bound << '\n';
        for (const auto& r : reports) {
            if (!r.admissible() && bound > 100) continue;  // keep text output short
            std::cout << "  ell = " << r.ell << ": A1=" << r.a1 << " A2=" << r.a2
                      << " A3=" << r.a3 << " A4=" << r.a4
                      << (r.admissible() ? "  admissible" : "") << '\n';
        }
        std::cout << "admissible primes <= " << bound << ":";
        for (u64 q : primes) std::cout << ' ' << q;
        std::cout << '\n';
    }
    return 0;
}

int run_simulate(u64 p, unsigned k, unsigned nmax, i64 ap, int split, unsigned uK, u64 cK,
                 u64 seed, const std::string& out_path, bool as_json) {
    SeqParams params;
    params.p = p;
    params.k = k;
    params.n_max = nmax;
    params.a_p = ap;
    params.split = split;
    params.u_K = uK;
    PointSequence seq = generate_sequence(params, seed, cK);
    TraceReport rep = verify_trace_relations(seq);
    json doc = io::sequence_to_json(seq);
    if (!out_path.empty()) io::save_file(out_path, doc);
    if (as_json && out_path.empty()) std::cout << doc.dump(2) << '\n';
    std::cerr << "sequence: p=" << p << " k=" << k << " n_max=" << nmax << " a_p=" << ap
              << " split=" << split << " seed=" << seed << " trace-relations "
              << (rep.ok ? "ok" : "VIOLATED") << '\n';
    return rep.ok ? 0 : 1;
}

int run_lfun(const std::string& seq_path, const std::string& mode, unsigned nmax,
             const std::string& out_path, bool strict) {
    PointSequence seq = io::sequence_from_json(io::load_file(seq_path, strict), strict);
    if (nmax == 0 || nmax > seq.n_max) nmax = seq.n_max;
    if (mode == "ordinary" && seq.a_p == 0)
        throw SchemaError("sequence has a_p = 0; ordinary mode refused");
    if (mode == "supersingular" && seq.a_p != 0)
        throw SchemaError("sequence has a_p != 0; supersingular mode refused");
    LFunctionTower t = build_tower(seq, nmax);
    io::save_file(out_path, io::tower_to_json(t));
    bool certified = t.certified();
    for (const auto& c : t.norm_compat) certified = certified && c.ok;
    std::cerr << "tower: mode=" << (t.mode == TowerMode::ordinary ? "ordinary" : "supersingular")
              << " n_max=" << nmax << " certificates " << (certified ? "ok" : "FAILED") << '\n';
    if (!certified && strict) return 1;
    return 0;
}

int run_specialize(const std::string& tower_path, unsigned conductor, const std::string& eps_s,
                   bool as_json, bool strict) {
    LFunctionTower t = io::tower_from_json(io::load_file(tower_path, strict), strict);
    Eps eps = eps_from_str(eps_s);
    SpecializeResult r = specialize(t, Character{conductor}, eps);
    if (as_json) {
        json out{{"schema", io::kSchemaTag},
                 {"conductor_exponent", conductor},
                 {"eps", eps_str(eps)},
                 {"rep_level", r.rep_level},
                 {"exceptional", r.exceptional},
                 {"seed", t.seed}};
        out["t"] = {{"finite", r.t.is_finite()}, {"value", r.t.value}};
        json coeffs = json::array();
        for (const auto& c : r.value.coeffs()) coeffs.push_back(c.get_str());
        out["value"] = {{"n_chi", r.value.n_chi()}, {"coeffs", coeffs}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "chi of conductor p^" << conductor << ", eps = " << eps_str(eps)
                  << ", represented at level " << r.rep_level << '\n';
        std::cout << "value coefficients:";
        for (const auto& c : r.value.coeffs()) std::cout << ' ' << c.get_str();
        std::cout << '\n';
        std::cout << "t_chi = " << r.t.str() << (r.exceptional ? "  (one-sided bound only)" : "")
                  << '\n';
    }
    if (strict && !r.t.is_finite()) return 3;
    return 0;
}

int run_report(const std::string& tower_path, unsigned conductor, const std::string& eps_s,
               const std::string& curve_path, bool as_json, bool strict) {
    LFunctionTower t = io::tower_from_json(io::load_file(tower_path, strict), strict);
    io::CurveInput in = io::curve_input_from_json(io::load_file(curve_path, strict), strict);
    CurveContext ctx = CurveContext::build(in.curve, in.N, in.D_K, in.p, in.assertions,
                                           in.reduction);
    if (static_cast<i64>(ctx.eps_p()) != t.split)
        throw SchemaError("curve context and tower disagree on the splitting of p");
    Eps eps = eps_from_str(eps_s);
    SpecializeResult r = specialize(t, Character{conductor}, eps);
    BoundReport br = bsd_bound(r.t, conductor, eps, t.split, t.p);
    if (as_json)
        std::cout << io::bound_report_to_json(br, ctx.assertions()).dump(2) << '\n';
    else
        std::cout << br.text() << '\n';
    if (strict && !r.t.is_finite()) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact anticyclotomic Iwasawa-algebra toolkit"};
    app.require_subcommand(1);
    bool as_json = false, strict = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--strict", strict, "reject unknown fields; fail on certificate errors");

    auto* adm = app.add_subcommand("admissible", "enumerate admissible primes");
    std::string curve_path;
    unsigned adm_k = 1;
    u64 adm_bound = 100;
    adm->add_option("--curve", curve_path, "curve JSON file")->required();
    adm->add_option("--k", adm_k, "admissibility exponent");
    adm->add_option("--bound", adm_bound, "enumeration bound");

    auto* sim = app.add_subcommand("simulate-points", "generate a compatible point sequence");
    u64 sim_p = 5, sim_cK = 1, sim_seed = 1;
    unsigned sim_k = 1, sim_nmax = 2, sim_uK = 1;
    i64 sim_ap = 0;
    bool sim_inert = false, sim_split = false;
    std::string sim_out;
    sim->add_option("--p", sim_p, "prime p >= 5")->required();
    sim->add_option("--k", sim_k, "precision exponent")->required();
    sim->add_option("--nmax", sim_nmax, "tower depth")->required();
    sim->add_option("--ap", sim_ap, "a_p of the form")->required();
    sim->add_flag("--inert", sim_inert, "p inert in K");
    sim->add_flag("--split", sim_split, "p split in K");
    sim->add_option("--uK", sim_uK, "half unit count of K");
    sim->add_option("--cK", sim_cK, "psi-image of the base point");
    sim->add_option("--seed", sim_seed, "generator seed")->required();
    sim->add_option("--out", sim_out, "output path");

    auto* lf = app.add_subcommand("lfun", "build theta elements and signed parts");
    std::string lf_seq, lf_mode = "auto", lf_out;
    unsigned lf_nmax = 0;
    lf->add_option("--sequence", lf_seq, "sequence JSON file")->required();
    lf->add_option("--mode", lf_mode, "auto|ordinary|supersingular")
        ->check(CLI::IsMember({"auto", "ordinary", "supersingular"}));
    lf->add_option("--nmax", lf_nmax, "tower depth (default: sequence depth)");
    lf->add_option("--out", lf_out, "output tower path")->required();

    auto* sp = app.add_subcommand("specialize", "evaluate a tower at a character");
    std::string sp_tower, sp_eps = "none";
    unsigned sp_cond = 0;
    sp->add_option("--tower", sp_tower, "tower JSON file")->required();
    sp->add_option("--conductor", sp_cond, "conductor exponent n_chi")->required();
    sp->add_option("--eps", sp_eps, "+, - or none");

    auto* rp = app.add_subcommand("report", "valuation bound report");
    std::string rp_tower, rp_eps = "none", rp_curve;
    unsigned rp_cond = 0;
    rp->add_option("--tower", rp_tower, "tower JSON file")->required();
    rp->add_option("--conductor", rp_cond, "conductor exponent n_chi")->required();
    rp->add_option("--eps", rp_eps, "+, - or none");
    rp->add_option("--curve", rp_curve, "curve JSON file")->required();

    auto* st = app.add_subcommand("selftest", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*adm) return run_admissible(curve_path, adm_k, adm_bound, as_json, strict);
        if (*sim) {
            if (sim_inert == sim_split)
                throw SchemaError("exactly one of --inert / --split is required");
            return run_simulate(sim_p, sim_k, sim_nmax, sim_ap, sim_inert ? -1 : +1, sim_uK,
                                sim_cK, sim_seed, sim_out, as_json);
        }
        if (*lf) return run_lfun(lf_seq, lf_mode, lf_nmax, lf_out, strict);
        if (*sp) return run_specialize(sp_tower, sp_cond, sp_eps, as_json, strict);
        if (*rp) return run_report(rp_tower, rp_cond, rp_eps, rp_curve, as_json, strict);
        if (*st) {
            auto suite = iwa::acceptance::run_suite(std::cout);
            return suite.all_pass ? 0 : 1;
        }
    } catch (const PrecisionTooLow& e) {
        std::cerr << "error (precision): " << e.what() << '\n';
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "error (input): " << e.what() << '\n';
        return 2;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error (hypothesis " << e.clause << "): " << e.what() << '\n';
        return 2;
    } catch (const CertificateFailure& e) {
        std::cerr << "error (certificate): " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
