// Command-line front end: spectrum and figure-data emission plus the
// perturbation-engine selftest. Exit codes: 0 success, 2 bad flags or
// unusable input, 3 solver non-convergence.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pendulum/config.hpp"
#include "pendulum/emit.hpp"
#include "pendulum/figures.hpp"
#include "pendulum/mathieu.hpp"
#include "pendulum/selftest.hpp"

namespace {

constexpr const char* kVersion = "pendulum 1.0.0";

struct CommonOpts {
    double hbar = 1.0;
    double mass = 0.5;
    double length = 1.0;
    double v0 = 80.0;
    double q = 160.0;
    double tol = 1e-10;
    std::string config_path;
    std::string format = "csv";
    std::string out_path;

    CLI::Option* opt_hbar = nullptr;
    CLI::Option* opt_mass = nullptr;
    CLI::Option* opt_length = nullptr;
    CLI::Option* opt_v0 = nullptr;
    CLI::Option* opt_q = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    o.opt_hbar = cmd->add_option("--hbar", o.hbar, "Planck constant / 2pi")
                     ->capture_default_str();
    o.opt_mass = cmd->add_option("--mass", o.mass, "particle mass")->capture_default_str();
    o.opt_length =
        cmd->add_option("--length", o.length, "pendulum radius")->capture_default_str();
    o.opt_v0 = cmd->add_option("--v0", o.v0, "potential depth V0")->capture_default_str();
    o.opt_q = cmd->add_option(
        "--q", o.q,
        "Mathieu parameter q (dimensionless frame: hbar=1, I=1/2, energies = a/4); "
        "mutually exclusive with the physical quartet");
    for (auto* phys : {o.opt_hbar, o.opt_mass, o.opt_length, o.opt_v0}) {
        o.opt_q->excludes(phys);
        phys->excludes(o.opt_q);
    }
    cmd->add_option("--config", o.config_path,
                    "flat key=value file with hbar, mass, length, v0 "
                    "(explicit flags take precedence)");
    cmd->add_option("--tol", o.tol, "solver tolerance (a-units)")->capture_default_str();
    cmd->add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "output path (default: stdout)");
}

// Flat key=value config: one pair per line, '#' comments. Unknown keys are
// rejected so typos do not silently fall back to defaults.
void apply_config_file(CommonOpts& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + o.config_path);
    std::map<std::string, CLI::Option*> keys{{"hbar", o.opt_hbar},
                                             {"mass", o.opt_mass},
                                             {"length", o.opt_length},
                                             {"v0", o.opt_v0}};
    std::map<std::string, double*> dests{
        {"hbar", &o.hbar}, {"mass", &o.mass}, {"length", &o.length}, {"v0", &o.v0}};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() && value.empty()) continue;
        if (!keys.count(key)) {
            throw CLI::ValidationError("--config", "unknown key '" + key + "'");
        }
        if (keys[key]->count() == 0) *dests[key] = std::stod(value);
    }
}

bool use_mathieu_frame(const CommonOpts& o) { return o.opt_q->count() > 0; }

pendulum::PendulumConfig resolve_physical(const CommonOpts& o) {
    return pendulum::PendulumConfig(o.hbar, o.mass, o.length, o.v0);
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw CLI::ValidationError("--out", "cannot open " + o.out_path);
    out << text;
}

nlohmann::json provenance(const std::string& command, int argc, char** argv) {
    std::string argv_echo;
    for (int i = 0; i < argc; ++i) {
        if (i) argv_echo += ' ';
        argv_echo += argv[i];
    }
    return {{"generator", kVersion}, {"command", command}, {"argv", argv_echo}};
}

int run_spectrum(const CommonOpts& o, int count, const std::string& frame, int argc,
                 char** argv) {
    pendulum::SpectrumTable table;
    nlohmann::json meta = provenance("spectrum", argc, argv);
    if (use_mathieu_frame(o)) {
        if (frame == "physical") {
            throw CLI::ValidationError("--frame", "physical frame requires the "
                                                  "hbar/mass/length/v0 quartet, not --q");
        }
        table = pendulum::spectrum_from_q(o.q, count, o.tol);
        meta["frame"] = "mathieu";
        meta["q"] = o.q;
    } else {
        if (frame == "mathieu") {
            throw CLI::ValidationError("--frame", "mathieu frame requires --q");
        }
        const auto cfg = resolve_physical(o);
        table = pendulum::spectrum(cfg, count, o.tol);
        meta["frame"] = "physical";
        meta["hbar"] = cfg.hbar;
        meta["mass"] = cfg.mass;
        meta["length"] = cfg.length;
        meta["v0"] = cfg.v0;
        meta["q"] = pendulum::q_of_config(cfg);
    }
    meta["count"] = count;
    meta["tol"] = o.tol;
    if (!table.all_converged) {
        std::cerr << "pendulum: characteristic values did not converge at tol=" << o.tol
                  << "\n";
        return 3;
    }
    write_output(o, o.format == "json" ? pendulum::to_json(table, meta).dump(2) + "\n"
                                       : pendulum::to_csv(table, meta));
    return 0;
}

int run_figure(const CommonOpts& o, const std::string& figure_id, int count,
               std::optional<int> order, std::optional<std::string> parity,
               double q_min, double q_max, int q_points, int argc, char** argv) {
    pendulum::FigureOptions opts;
    opts.cfg = use_mathieu_frame(o)
                   ? pendulum::PendulumConfig(1.0, 0.5, 1.0, o.q / 2.0)
                   : resolve_physical(o);
    opts.tol = o.tol;
    opts.count = count;
    opts.q_min = q_min;
    opts.q_max = q_max;
    opts.q_points = q_points;

    auto ds = pendulum::make_figure(figure_id, opts);

    if (order || parity) {
        // Keep unlabeled series (classical curves, reference lines) and any
        // labeled series that matches the requested order/parity.
        const std::string order_tag = order ? std::to_string(*order) : "";
        std::vector<pendulum::FigureDataset::Row> kept;
        for (auto& row : ds.rows) {
            bool ok = true;
            if (order) {
                const bool labeled = row.series.find("order") != std::string::npos ||
                                     row.series.rfind("osc", 0) == 0 ||
                                     row.series.rfind("rot", 0) == 0;
                ok = !labeled || row.series.back() == order_tag.back();
            }
            if (ok && parity) {
                const std::string other = *parity == "even" ? "odd" : "even";
                ok = row.series.find(other) == std::string::npos;
            }
            if (ok) kept.push_back(std::move(row));
        }
        ds.rows = std::move(kept);
        if (order) ds.metadata["order_filter"] = *order;
        if (parity) ds.metadata["parity_filter"] = *parity;
    }

    ds.metadata["provenance"] = provenance("figure", argc, argv);
    write_output(o, o.format == "json" ? pendulum::to_json(ds).dump(2) + "\n"
                                       : pendulum::to_csv(ds));
    return 0;
}

int run_selftest_cmd() {
    const auto results = pendulum::run_selftest();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.detail
                  << '\n';
        all = all && r.pass;
    }
    std::cout << (all ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum pendulum spectrum, classical periods, and revival times"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts spec_opts;
    int spec_count = 40;
    std::string spec_frame = "auto";
    auto* spec = app.add_subcommand(
        "spectrum", "Characteristic values and energies of the merged spectrum");
    add_common(spec, spec_opts);
    spec->add_option("--count", spec_count, "number of states")->capture_default_str();
    spec->add_option("--frame", spec_frame, "physical or mathieu (inferred from --q)")
        ->check(CLI::IsMember({"auto", "physical", "mathieu"}));

    CommonOpts fig_opts;
    std::string figure_id;
    int fig_count = 70;
    std::optional<int> fig_order;
    std::optional<std::string> fig_parity;
    double fig_qmin = 0.0, fig_qmax = 200.0;
    int fig_qpoints = 101;
    auto* fig = app.add_subcommand("figure", "Datasets behind the published figures");
    fig->add_option("figure_id", figure_id, "fig1 .. fig8")->required();
    add_common(fig, fig_opts);
    fig->add_option("--count", fig_count, "spectrum depth for discrete figures")
        ->capture_default_str();
    fig->add_option("--order", fig_order, "restrict labeled series to one order");
    fig->add_option("--parity", fig_parity, "restrict discrete series to one parity")
        ->check(CLI::IsMember({"even", "odd"}));
    fig->add_option("--q-min", fig_qmin, "fig1 grid start")->capture_default_str();
    fig->add_option("--q-max", fig_qmax, "fig1 grid end")->capture_default_str();
    fig->add_option("--q-points", fig_qpoints, "fig1 grid size")->capture_default_str();

    auto* self = app.add_subcommand("selftest", "Perturbation-engine verification");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (spec->parsed()) {
            apply_config_file(spec_opts);
            return run_spectrum(spec_opts, spec_count, spec_frame, argc, argv);
        }
        if (fig->parsed()) {
            apply_config_file(fig_opts);
            return run_figure(fig_opts, figure_id, fig_count, fig_order, fig_parity,
                              fig_qmin, fig_qmax, fig_qpoints, argc, argv);
        }
        if (self->parsed()) return run_selftest_cmd();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "pendulum: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pendulum: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pendulum: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
