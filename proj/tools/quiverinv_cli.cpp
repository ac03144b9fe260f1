// quiverinv: batch driver for the cyclic-quiver invariant-theory checks.
// Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quiverinv/driver.hpp"
#include "quiverinv/invariants.hpp"
#include "quiverinv/normal_form.hpp"
#include "quiverinv/rng.hpp"

namespace qi = quiverinv;

namespace {

struct CliState {
    qi::RunConfig cfg;
    std::string input_path;
    std::string json_out;
    bool no_timing = false;
    int exit_code = 0;
};

void emit(CliState& st, const qi::Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (!st.json_out.empty()) {
        std::ofstream out(st.json_out);
        if (!out) throw qi::InputError("cannot open output file: " + st.json_out);
        out << text;
    } else {
        std::cout << text;
    }
}

void emit_report(CliState& st, const qi::Report& report) {
    emit(st, report.to_json());
    if (!report.pass()) st.exit_code = 1;
}

void add_common_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--n", st.cfg.n, "dimension at each vertex");
    cmd->add_option("--m", st.cfg.m, "number of vertices of the cycle");
    cmd->add_option("--trials", st.cfg.trials, "number of randomized trials");
    cmd->add_option("--seed", st.cfg.seed, "PRNG seed (trials derive substreams from it)");
    cmd->add_option("--tol", st.cfg.tol, "base tolerance; thresholds scale with tol/1e-9");
    cmd->add_option("--max-degree", st.cfg.max_degree, "top degree for series and generation checks");
    cmd->add_option("--json-out", st.json_out, "write the JSON report here instead of stdout");
    cmd->add_flag("--no-timing", st.no_timing, "omit wall time for byte-reproducible reports");
}

qi::Json load_input(const CliState& st) {
    if (st.input_path.empty()) throw qi::InputError("--input is required");
    std::ifstream in(st.input_path);
    if (!in) throw qi::InputError("cannot open input file: " + st.input_path);
    try {
        return qi::Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qi::InputError(std::string("malformed JSON: ") + e.what());
    }
}

// Near-degenerate inputs (margins within 10x of the genericity threshold) get
// an explicit warning instead of silent acceptance.
void attach_genericity_warning(qi::Json& out, const qi::RepPoint& p) {
    const qi::GenericityReport rep = qi::is_generic(p);
    const double margin = std::min(rep.min_eigenvalue_abs, rep.min_eigenvalue_gap);
    if (rep.generic && margin < 10.0 * rep.threshold) {
        out["warning"] = "near-degenerate input: genericity margin " + std::to_string(margin) +
                         " is within 10x of threshold " + std::to_string(rep.threshold);
        std::cerr << "warning: " << out["warning"].get<std::string>() << "\n";
    }
}

void run_normal_form(CliState& st) {
    const qi::Json j = load_input(st);
    qi::Json out;
    if (!qi::json_is_double_point(j)) {
        const qi::RepPoint p = qi::rep_point_from_json(j);
        out = qi::to_json(qi::to_canonical_L(p));
        attach_genericity_warning(out, p);
    } else {
        const qi::DoubleRepPoint p = qi::double_rep_point_from_json(j);
        if (p.shape.n == 1) {
            out = qi::to_json(qi::z1_normal_form(p));
        } else {
            const qi::CanonicalDouble c = qi::canonicalize_double(p);
            qi::Json z = qi::Json::array(), zp = qi::Json::array();
            for (const qi::Complex& v : c.z) z.push_back(qi::Json::array({v.real(), v.imag()}));
            for (const qi::Complex& v : c.zp) zp.push_back(qi::Json::array({v.real(), v.imag()}));
            out = qi::Json{{"on_saturation", c.status == qi::SaturationStatus::OnSaturation},
                           {"z", std::move(z)},
                           {"zp", std::move(zp)},
                           {"offdiagonal_residual", c.offdiagonal_residual}};
            attach_genericity_warning(out, qi::RepPoint(p.shape, p.x));
        }
    }
    emit(st, out);
}

void run_sample(CliState& st, const std::string& kind, const std::string& eval_path) {
    const qi::QuiverShape shape(st.cfg.m, st.cfg.n);

    std::vector<qi::InvariantDescriptor> panel;
    if (!eval_path.empty()) {
        if (kind != "zpoint") throw qi::InputError("--eval requires --kind zpoint");
        std::ifstream in(eval_path);
        if (!in) throw qi::InputError("cannot open descriptor file: " + eval_path);
        qi::Json spec_json;
        try {
            spec_json = qi::Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw qi::InputError(std::string("malformed JSON: ") + e.what());
        }
        if (!spec_json.is_array()) throw qi::InputError("--eval file must hold a JSON array");
        for (const qi::Json& d : spec_json) panel.push_back(qi::invariant_descriptor_from_json(d));
    }

    qi::Json points = qi::Json::array();
    for (int t = 0; t < st.cfg.trials; ++t) {
        const std::uint64_t s = qi::derive_seed(st.cfg.seed, t);
        if (kind == "rep") {
            points.push_back(qi::to_json(qi::random_rep(shape, s)));
        } else if (kind == "gauge") {
            qi::Json gs = qi::Json::array();
            for (const qi::SquareMatrix& g : qi::random_gauge(shape, s).g)
                gs.push_back(qi::to_json(g));
            points.push_back(qi::Json{{"m", shape.m}, {"n", shape.n}, {"g", std::move(gs)}});
        } else if (kind == "zpoint") {
            const qi::DoubleRepPoint p = qi::random_Z_point(shape, s);
            qi::Json entry = qi::to_json(p);
            if (!panel.empty()) {
                qi::Json values = qi::Json::array();
                for (const qi::InvariantDescriptor& d : panel) {
                    const qi::Complex v = qi::eval_invariant(d, p);
                    values.push_back(qi::Json{{"descriptor", qi::to_json(d)},
                                              {"value", qi::Json::array({v.real(), v.imag()})}});
                }
                entry["invariants"] = std::move(values);
            }
            points.push_back(std::move(entry));
        } else {
            throw qi::InputError("unknown sample kind: " + kind);
        }
    }
    emit(st, points);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-quiver invariant theory toolkit"};
    app.require_subcommand(1);
    CliState st;
    std::string rep_name = "LL";
    std::string sample_kind = "rep";
    int R_override = 0;

    CLI::App* chevalley = app.add_subcommand(
        "verify-chevalley", "restriction isomorphism checks on the single quiver");
    add_common_flags(chevalley, st);
    chevalley->callback([&] {
        st.cfg.timing = !st.no_timing;
        emit_report(st, qi::run_verify_chevalley(st.cfg));
    });

    CLI::App* dbl =
        app.add_subcommand("verify-double", "restriction isomorphism checks on the double quiver");
    add_common_flags(dbl, st);
    dbl->callback([&] {
        st.cfg.timing = !st.no_timing;
        emit_report(st, qi::run_verify_double(st.cfg));
    });

    CLI::App* nf = app.add_subcommand("normal-form", "canonicalize a point read from JSON");
    nf->add_option("--input", st.input_path, "RepPoint or DoubleRepPoint JSON file")->required();
    nf->add_option("--json-out", st.json_out, "write the result here instead of stdout");
    nf->callback([&] { run_normal_form(st); });

    CLI::App* mol = app.add_subcommand("molien", "Molien series of the wreath group, exact");
    add_common_flags(mol, st);
    mol->callback([&] {
        st.cfg.timing = !st.no_timing;
        qi::Report report = qi::run_molien(st.cfg);
        const auto group = qi::wreath_enumerate(st.cfg.n, st.cfg.m);
        qi::Json j = report.to_json();
        j["series_L"] = qi::to_json(qi::molien(group, qi::WreathRep::L, st.cfg.max_degree));
        j["series_LL"] = qi::to_json(qi::molien(group, qi::WreathRep::LL, st.cfg.max_degree));
        emit(st, j);
        if (!report.pass()) st.exit_code = 1;
    });

    CLI::App* gen = app.add_subcommand("generation", "invariant-ring generation checks, exact");
    add_common_flags(gen, st);
    gen->add_option("--rep", rep_name, "representation: L or LL")
        ->check(CLI::IsMember({"L", "LL"}));
    gen->add_option("--R", R_override, "generator degree cutoff (default: the degree itself)");
    gen->callback([&] {
        st.cfg.timing = !st.no_timing;
        const qi::WreathRep rep = rep_name == "L" ? qi::WreathRep::L : qi::WreathRep::LL;
        const qi::Report report = qi::run_generation(st.cfg, rep, R_override);
        qi::Json j = report.to_json();
        qi::Json details = qi::Json::array();
        for (int d = 1; d <= st.cfg.max_degree; ++d)
            details.push_back(qi::to_json(qi::generation_check(
                st.cfg.n, st.cfg.m, d, R_override > 0 ? R_override : d, rep)));
        j["reports"] = std::move(details);
        emit(st, j);
        if (!report.pass()) st.exit_code = 1;
    });

    CLI::App* jac = app.add_subcommand("jacobian", "Jacobian factorization of the quotient map");
    add_common_flags(jac, st);
    jac->callback([&] {
        st.cfg.timing = !st.no_timing;
        emit_report(st, qi::run_jacobian(st.cfg));
    });

    CLI::App* sample = app.add_subcommand("sample", "emit seeded random points as JSON");
    add_common_flags(sample, st);
    std::string eval_path;
    sample->add_option("--kind", sample_kind, "rep | gauge | zpoint")
        ->check(CLI::IsMember({"rep", "gauge", "zpoint"}));
    sample->add_option("--eval", eval_path,
                       "JSON array of invariant descriptors to evaluate on each zpoint");
    sample->callback([&] { run_sample(st, sample_kind, eval_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const qi::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qi::Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
    return st.exit_code;
}
