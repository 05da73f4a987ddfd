// anharm: spectra and field response of 1D polynomial oscillators in an
// optimized harmonic-oscillator basis.
//
// Exit codes: 0 ok, 2 config error, 3 model error, 4 solver failure,
// 5 analysis failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anharm/basis.hpp"
#include "anharm/eigensolver.hpp"
#include "anharm/errors.hpp"
#include "anharm/hamiltonian.hpp"
#include "anharm/model.hpp"
#include "anharm/perturbation.hpp"
#include "anharm/scan.hpp"
#include "anharm/wavefunction.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitModel = 3;
constexpr int kExitSolver = 4;
constexpr int kExitAnalysis = 5;

struct RunConfig {
    std::string command;
    std::vector<double> lambdas;
    std::optional<double> alpha, beta;
    double p = 0.0;
    double mass = 1.0;
    double hbar = 1.0;
    int n_basis = 50;
    std::string pivot_rule = "half";
    int levels = 2;
    double p_min = 0.0, p_max = 1.0, p_step = 0.01;
    double q_min = -5.0, q_max = 5.0;
    int q_points = 1001;
    double fit_max = 0.6, fit_step = 0.01;
    double bracket_lo = 0.3, bracket_hi = 1.2;
    std::vector<int> n_list{10, 20, 30, 40};
    std::string output;
    std::string dump_matrix_path;
    int threads = 0;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

void load_json_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    auto get = [&](const char* key, auto& dst) {
        if (j.contains(key)) {
            try {
                dst = j.at(key).template get<std::decay_t<decltype(dst)>>();
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("config field '") + key + "': " + e.what());
            }
        }
    };
    get("command", cfg.command);
    get("lambdas", cfg.lambdas);
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (j.contains("beta")) cfg.beta = j.at("beta").get<double>();
    get("p", cfg.p);
    get("mass", cfg.mass);
    get("hbar", cfg.hbar);
    get("n", cfg.n_basis);
    get("pivot_rule", cfg.pivot_rule);
    get("levels", cfg.levels);
    get("p_min", cfg.p_min);
    get("p_max", cfg.p_max);
    get("p_step", cfg.p_step);
    get("q_min", cfg.q_min);
    get("q_max", cfg.q_max);
    get("q_points", cfg.q_points);
    get("fit_max", cfg.fit_max);
    get("fit_step", cfg.fit_step);
    get("bracket_lo", cfg.bracket_lo);
    get("bracket_hi", cfg.bracket_hi);
    get("n_list", cfg.n_list);
    get("output", cfg.output);
    get("threads", cfg.threads);
}

anharm::Model build_model(const RunConfig& cfg) {
    const bool has_dw = cfg.alpha.has_value() || cfg.beta.has_value();
    if (!cfg.lambdas.empty() && has_dw)
        throw ConfigError("give either --lambda coefficients or --alpha/--beta, not both");
    if (!cfg.lambdas.empty()) return anharm::make_model(cfg.lambdas, cfg.mass, cfg.hbar);
    if (cfg.alpha && cfg.beta)
        return anharm::from_double_well({*cfg.alpha, *cfg.beta, cfg.p}, cfg.mass, cfg.hbar);
    throw ConfigError("no model given: need --lambda list or --alpha and --beta");
}

anharm::DoubleWellParams require_double_well(const RunConfig& cfg) {
    if (!cfg.lambdas.empty())
        throw ConfigError("this command sweeps the field term and needs --alpha/--beta form");
    if (!(cfg.alpha && cfg.beta)) throw ConfigError("need --alpha and --beta");
    return {*cfg.alpha, *cfg.beta, cfg.p};
}

int resolve_pivot(const RunConfig& cfg) {
    if (cfg.pivot_rule == "half") return anharm::pivot_choice(cfg.n_basis);
    if (cfg.pivot_rule == "zero") return 0;
    try {
        size_t pos = 0;
        const int t = std::stoi(cfg.pivot_rule, &pos);
        if (pos == cfg.pivot_rule.size()) return t;
    } catch (...) {
    }
    throw ConfigError("pivot rule must be 'half', 'zero' or an integer");
}

int resolve_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("ANHARM_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 0;
}

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Writes to the output path, or stdout when none given.
void emit(const RunConfig& cfg, const std::string& text, const std::string& suffix = "") {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    const std::string path = cfg.output + suffix;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
    std::cerr << "wrote " << path << "\n";
}

int cmd_spectrum(const RunConfig& cfg) {
    const anharm::Model model = build_model(cfg);
    const anharm::BasisSpec basis = anharm::make_basis(model, cfg.n_basis, resolve_pivot(cfg));
    const auto h = anharm::assemble(model, basis);
    if (!cfg.dump_matrix_path.empty()) {
        std::ofstream out(cfg.dump_matrix_path);
        if (!out) throw ConfigError("cannot write " + cfg.dump_matrix_path);
        out << anharm::dump_matrix(h);
    }
    const anharm::SpectralResult res = anharm::eigh(h, basis);
    const auto [e0, e1, gap] = anharm::ground_state_pair(res);

    std::cout << "r0_squared = " << fmt12(basis.r0_squared()) << "\n"
              << "E_0 = " << fmt12(e0) << "\n"
              << "E_1 = " << fmt12(e1) << "\n"
              << "gap = " << fmt12(gap) << "\n";
    if (!cfg.output.empty()) {
        std::ostringstream csv;
        csv << "n,E\n";
        const int levels = std::min(cfg.levels, res.size());
        for (int n = 0; n < levels; ++n) csv << n << ',' << fmt12(res.eigenvalues[n]) << "\n";
        emit(cfg, csv.str());
    }
    return 0;
}

int cmd_scan(const RunConfig& cfg) {
    const anharm::DoubleWellParams well = require_double_well(cfg);
    const auto grid = anharm::make_grid(cfg.p_min, cfg.p_max, cfg.p_step);
    const anharm::FieldScan scan =
        anharm::scan_field(well, grid, cfg.n_basis, cfg.levels, resolve_threads(cfg));
    std::ostringstream csv;
    anharm::write_scan_csv(scan, csv);
    emit(cfg, csv.str());
    std::cerr << "r0_squared = " << fmt12(scan.basis.r0_squared()) << "\n";
    return 0;
}

int cmd_wavefunction(const RunConfig& cfg) {
    const anharm::Model model = build_model(cfg);
    const anharm::BasisSpec basis = anharm::make_basis(model, cfg.n_basis, resolve_pivot(cfg));
    const anharm::SpectralResult res = anharm::eigh(anharm::assemble(model, basis), basis);
    const anharm::PositionGrid grid{cfg.q_min, cfg.q_max, cfg.q_points};
    const std::vector<double> q = grid.points();

    const int levels = std::min(cfg.levels, res.size());
    std::vector<std::vector<double>> psi(levels);
    for (int n = 0; n < levels; ++n) psi[n] = anharm::eigenstate_on_grid(res, n, grid);

    std::ostringstream csv;
    csv << "q";
    for (int n = 0; n < levels; ++n) csv << ",psi_" << n;
    csv << "\n";
    for (size_t g = 0; g < q.size(); ++g) {
        csv << fmt12(q[g]);
        for (int n = 0; n < levels; ++n) csv << ',' << fmt12(psi[n][g]);
        csv << "\n";
    }
    emit(cfg, csv.str());
    return 0;
}

int cmd_response(const RunConfig& cfg) {
    const anharm::DoubleWellParams well = require_double_well(cfg);
    anharm::DoubleWellParams at_zero = well;
    at_zero.p = 0.0;
    const int threads = resolve_threads(cfg);

    const anharm::Model model = anharm::from_double_well(at_zero, cfg.mass, cfg.hbar);
    const anharm::BasisSpec basis = anharm::make_basis(model, cfg.n_basis, resolve_pivot(cfg));
    const anharm::SpectralResult res = anharm::eigh(anharm::assemble(model, basis), basis);

    const double c1 = anharm::second_order_c1(res);
    const double c1_single = anharm::single_term_c1(res);
    const double slope = anharm::degenerate_slope(res);

    // Independent curvature check on a tiny symmetric grid.
    const anharm::FieldScan tiny = anharm::scan_field(
        at_zero, anharm::make_grid(-1e-3, 1e-3, 5e-4), cfg.n_basis, 1, threads);
    const double c1_oracle = anharm::curvature_oracle(tiny, 0);

    const anharm::FieldScan window = anharm::scan_field(
        at_zero, anharm::make_grid(0.0, cfg.fit_max, cfg.fit_step), cfg.n_basis, 1, threads);
    const double a = anharm::fit_response_a(window, c1);
    const double omega = c1 / a;
    const double e0 = res.eigenvalues[0];

    std::ostringstream report;
    report << "E_0 = " << fmt12(e0) << "\n"
           << "E_1 = " << fmt12(res.eigenvalues[1]) << "\n"
           << "r0_squared = " << fmt12(basis.r0_squared()) << "\n"
           << "q01_abs = " << fmt12(-slope) << "\n"
           << "c1_full_sum = " << fmt12(c1) << "\n"
           << "c1_single_term = " << fmt12(c1_single) << "\n"
           << "c1_curvature_oracle = " << fmt12(c1_oracle) << "\n"
           << "degenerate_slope = " << fmt12(slope) << "\n"
           << "a_fit = " << fmt12(a) << "\n"
           << "omega = " << fmt12(omega) << "\n";
    std::cout << report.str();

    std::ostringstream csv;
    csv << "p,E0,tanh_model,quadratic_model,resid_tanh,resid_quadratic\n";
    for (int j = 0; j < window.points(); ++j) {
        const double p = window.p_values[j];
        const double data = window.energy(0, j);
        const double tanh_model = anharm::response_model(e0, a, omega, p);
        const double quad = e0 + c1 * p * p;
        csv << fmt12(p) << ',' << fmt12(data) << ',' << fmt12(tanh_model) << ','
            << fmt12(quad) << ',' << fmt12(data - tanh_model) << ',' << fmt12(data - quad)
            << "\n";
    }
    if (!cfg.output.empty()) emit(cfg, csv.str());
    return 0;
}

int cmd_repulsion(const RunConfig& cfg) {
    const anharm::DoubleWellParams well = require_double_well(cfg);
    const int level_lo = cfg.levels;  // --levels names the lower level here
    const anharm::CrossingAnalysis cross = anharm::find_avoided_crossing(
        well, cfg.n_basis, level_lo, cfg.bracket_lo, cfg.bracket_hi);

    std::ostringstream report;
    report << "p1 = " << fmt12(cross.p1) << "\n"
           << "gap_min = " << fmt12(cross.gap_min) << "\n"
           << "E_lo = " << fmt12(cross.e_lo) << "\n"
           << "E_hi = " << fmt12(cross.e_hi) << "\n"
           << "Q_lo_lo = " << fmt12(cross.q11) << "\n"
           << "Q_hi_hi = " << fmt12(cross.q22) << "\n"
           << "c2 = " << fmt12(cross.c2) << "\n";
    std::cout << report.str();

    if (!cfg.output.empty()) {
        const auto grid = anharm::make_grid(cross.p1 - 0.02, cross.p1 + 0.02, 0.001);
        const anharm::FieldScan scan = anharm::scan_field(
            well, grid, cfg.n_basis, cross.level_hi + 1, resolve_threads(cfg));
        std::ostringstream csv;
        csv << "p,E_lo,E_lo_model,E_hi,E_hi_model\n";
        for (int j = 0; j < scan.points(); ++j) {
            const double dp = grid[j] - cross.p1;
            csv << fmt12(grid[j]) << ',' << fmt12(scan.energy(cross.level_lo, j)) << ','
                << fmt12(cross.predict_lo(dp)) << ',' << fmt12(scan.energy(cross.level_hi, j))
                << ',' << fmt12(cross.predict_hi(dp)) << "\n";
        }
        emit(cfg, csv.str());
    }
    return 0;
}

int cmd_converge(const RunConfig& cfg) {
    const anharm::DoubleWellParams well = require_double_well(cfg);
    const auto window = anharm::make_grid(0.0, cfg.fit_max, cfg.fit_step);
    const anharm::ConvergenceTable table =
        anharm::convergence_study(well, cfg.n_list, window, resolve_threads(cfg));
    std::ostringstream csv;
    csv << "N,r0_squared,E0,E1,c1,a\n";
    for (const auto& row : table)
        csv << row.n_basis << ',' << fmt12(row.r0_squared) << ',' << fmt12(row.e0) << ','
            << fmt12(row.e1) << ',' << fmt12(row.c1) << ',' << fmt12(row.a) << "\n";
    emit(cfg, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // --config is honoured before flag parsing so flags can override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_json_config(argv[i + 1], cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
        }
    }

    CLI::App app{
        "Eigenvalues and field response of 1D polynomial oscillators in an "
        "optimized harmonic-oscillator basis"};
    app.require_subcommand(0, 1);
    app.add_option("--config", "JSON config file; flags override its values")
        ->expected(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", "JSON config file; flags override its values")->expected(1);
        sub->add_option("--lambda", cfg.lambdas, "potential coefficients from index 0");
        sub->add_option("--alpha", [&cfg](const CLI::results_t& r) {
            cfg.alpha = std::stod(r[0]);
            return true;
        }, "double-well quadratic coefficient (< 0)");
        sub->add_option("--beta", [&cfg](const CLI::results_t& r) {
            cfg.beta = std::stod(r[0]);
            return true;
        }, "double-well quartic coefficient (> 0)");
        sub->add_option("--p", cfg.p, "external field strength");
        sub->add_option("--mass", cfg.mass, "particle mass");
        sub->add_option("--hbar", cfg.hbar, "Planck constant");
        sub->add_option("--n", cfg.n_basis, "basis truncation N");
        sub->add_option("--pivot", cfg.pivot_rule, "pivot rule: half, zero, or integer t");
        sub->add_option("--levels", cfg.levels, "number of levels to report");
        sub->add_option("--threads", cfg.threads,
                        "scan worker threads (0 = hardware; env ANHARM_THREADS)");
        sub->add_option("--output", cfg.output, "output file (default: stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of one model");
    add_common(spectrum);
    spectrum->add_option("--dump-matrix", cfg.dump_matrix_path,
                         "write the assembled matrix, 17 significant digits");

    CLI::App* scan = app.add_subcommand("scan", "sweep the external field p");
    add_common(scan);
    scan->add_option("--pmin", cfg.p_min, "grid start");
    scan->add_option("--pmax", cfg.p_max, "grid end");
    scan->add_option("--pstep", cfg.p_step, "grid step");

    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "position-space eigenstates on a grid");
    add_common(wavefunction);
    wavefunction->add_option("--qmin", cfg.q_min, "grid start");
    wavefunction->add_option("--qmax", cfg.q_max, "grid end");
    wavefunction->add_option("--qpoints", cfg.q_points, "grid size");

    CLI::App* response =
        app.add_subcommand("response", "ground-state field-response coefficients at p = 0");
    add_common(response);
    response->add_option("--fit-max", cfg.fit_max, "tanh-fit window end");
    response->add_option("--fit-step", cfg.fit_step, "tanh-fit window step");

    CLI::App* repulsion =
        app.add_subcommand("repulsion", "locate an avoided crossing and its local models");
    add_common(repulsion);
    repulsion->add_option("--bracket", [&cfg](const CLI::results_t& r) {
        cfg.bracket_lo = std::stod(r[0]);
        cfg.bracket_hi = std::stod(r[1]);
        return true;
    }, "p bracket containing the gap minimum")->expected(2);

    CLI::App* converge = app.add_subcommand("converge", "convergence table over N");
    add_common(converge);
    converge->add_option("--n-list", cfg.n_list, "basis sizes");
    converge->add_option("--fit-max", cfg.fit_max, "tanh-fit window end");
    converge->add_option("--fit-step", cfg.fit_step, "tanh-fit window step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    std::string command = cfg.command;
    if (spectrum->parsed()) command = "spectrum";
    else if (scan->parsed()) command = "scan";
    else if (wavefunction->parsed()) command = "wavefunction";
    else if (repulsion->parsed()) command = "repulsion";
    else if (response->parsed()) command = "response";
    else if (converge->parsed()) command = "converge";

    try {
        if (command == "spectrum") return cmd_spectrum(cfg);
        if (command == "scan") return cmd_scan(cfg);
        if (command == "wavefunction") return cmd_wavefunction(cfg);
        if (command == "response") return cmd_response(cfg);
        if (command == "repulsion") return cmd_repulsion(cfg);
        if (command == "converge") return cmd_converge(cfg);
        std::cerr << "error: no command given (see --help)\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const anharm::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const anharm::AnalysisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModel;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}
