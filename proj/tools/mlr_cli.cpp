// mlr: Mittag-Leffler relaxation toolkit command line.
//
// Subcommands:
//   eval       evaluate E_alpha(-x) (or e_alpha(t) with --t)
//   table1     emit the historical three-column comparison table as CSV
//   figure     emit the data series behind figures 1-7 and 9 as CSV
//   capacitor  solve a capacitor discharge/recharge model, emit (t, U) CSV
//   verify     run the library's property suites
//
// Exit codes: 0 success, 1 runtime/verification failure, 2 flag errors.

#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "mlr/mlr.hpp"

namespace {

void emit(const mlr::CsvTable& table, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        table.write(std::cout);
    else
        table.write_file(out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mittag-Leffler relaxation toolkit"};
    app.require_subcommand(1);

    double tol = 1e-8;
    app.add_option("--tol", tol, "absolute tolerance")->capture_default_str();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate E_alpha(-x)");
    double eval_alpha = 0.5, eval_x = 0.0, eval_t = 0.0;
    auto* xopt = eval_cmd->add_option("--x", eval_x, "argument x of E_alpha(-x)");
    auto* topt = eval_cmd->add_option("--t", eval_t, "time t of e_alpha(t)");
    eval_cmd->add_option("--alpha", eval_alpha, "order alpha in (0,1]")->required();
    xopt->excludes(topt);

    // table1
    auto* table_cmd = app.add_subcommand("table1", "emit the comparison table");
    std::string table_out = "-";
    table_cmd->add_option("--out", table_out, "output path (- for stdout)");

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "emit figure data");
    int fig_id = 0;
    std::string fig_out = "-";
    fig_cmd->add_option("--id", fig_id, "figure id (1-7, 9)")->required();
    fig_cmd->add_option("--out", fig_out, "output path (- for stdout)");

    // capacitor
    auto* cap_cmd = app.add_subcommand("capacitor", "solve a capacitor model");
    double cap_C = 1.0, cap_R = std::numeric_limits<double>::infinity();
    double cap_beta = 1.0, cap_n = 0.9, cap_U0 = 1.0;
    double cap_t0 = std::numeric_limits<double>::infinity();
    double cap_horizon = 1.0;
    int cap_steps = 128;
    std::string cap_mode = "discharge", cap_method = "ml", cap_out = "-";
    cap_cmd->add_option("--C", cap_C, "geometric capacitance")->capture_default_str();
    cap_cmd->add_option("--R", cap_R, "terminal resistance (inf = isolated)");
    cap_cmd->add_option("--beta", cap_beta, "Schweidler amplitude")->capture_default_str();
    cap_cmd->add_option("--n", cap_n, "Schweidler exponent in [0,1]")->capture_default_str();
    cap_cmd->add_option("--U0", cap_U0, "charging voltage")->capture_default_str();
    cap_cmd->add_option("--t0", cap_t0, "charging/short-circuit time (inf = full charge)");
    cap_cmd->add_option("--mode", cap_mode, "discharge | recharge")
        ->check(CLI::IsMember({"discharge", "recharge"}));
    cap_cmd->add_option("--method", cap_method, "ml | closed-form | gross | volterra")
        ->check(CLI::IsMember({"ml", "closed-form", "gross", "volterra"}));
    cap_cmd->add_option("--horizon", cap_horizon, "solve on [0, horizon]")
        ->capture_default_str();
    cap_cmd->add_option("--steps", cap_steps, "grid steps")->capture_default_str();
    cap_cmd->add_option("--out", cap_out, "output path (- for stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite, "bounds | spectra | laplace | fracres | all")
        ->check(CLI::IsMember({"bounds", "spectra", "laplace", "fracres", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) {
            if (!*xopt && !*topt) {
                std::cerr << "eval: one of --x / --t is required\n";
                return 2;
            }
            const mlr::Order order(eval_alpha);
            const mlr::EvalResult r = *topt ? mlr::e_alpha(order, eval_t, tol)
                                            : mlr::ml_eval(order, eval_x, tol);
            std::printf("value = %.12g\nmethod = %s\nerr_estimate = %.3e\n",
                        r.value, mlr::method_name(r.method), r.err_estimate);
            return 0;
        }
        if (*table_cmd) {
            emit(mlr::make_table1(tol), table_out);
            return 0;
        }
        if (*fig_cmd) {
            if ((fig_id < 1 || fig_id > 7) && fig_id != 9) {
                std::cerr << "figure: id must be 1-7 or 9\n";
                return 2;
            }
            emit(mlr::make_figure(fig_id, tol), fig_out);
            return 0;
        }
        if (*cap_cmd) {
            const mlr::DischargeMode mode = cap_mode == "recharge"
                                                ? mlr::DischargeMode::recharge
                                                : mlr::DischargeMode::discharge;
            const mlr::CapacitorModel model(cap_C, cap_R, cap_beta, cap_n,
                                            cap_U0, cap_t0, mode);
            mlr::SolveMethod method = mlr::SolveMethod::ml_convolution;
            if (cap_method == "closed-form") method = mlr::SolveMethod::closed_form_j;
            else if (cap_method == "gross") method = mlr::SolveMethod::gross_approx;
            else if (cap_method == "volterra") method = mlr::SolveMethod::volterra_numeric;
            emit(mlr::make_capacitor_table(model, method, cap_horizon, cap_steps, tol),
                 cap_out);
            return 0;
        }
        if (*verify_cmd) {
            const bool ok = mlr::verify::report(mlr::verify::run_suite(suite), std::cout);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
