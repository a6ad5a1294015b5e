#include <CLI11.hpp>

#include <perfcast/figures.hpp>
#include <perfcast/optimize.hpp>
#include <perfcast/sweep.hpp>
#include <perfcast/verify.hpp>

#include <iostream>
#include <string>

namespace {

struct GameFlags {
    std::string rule = "quadratic";
    double k = 1.0;
    std::string phi = "drift";
    double alpha = 0.5;
    double q = 2.0;
    double c = 1.0;
    double p = 0.5;
    double p_hat = 0.5;
    int grid_points = 500;
};

perfcast::ScoringRule make_rule(const GameFlags& flags) {
    if (flags.rule == "spherical") return perfcast::ScoringRule::spherical();
    if (flags.rule == "log") return perfcast::ScoringRule::logarithmic();
    if (flags.rule == "constant") return perfcast::ScoringRule::constant(flags.k);
    return perfcast::ScoringRule::quadratic();
}

perfcast::PerformativityMap make_map(const GameFlags& flags) {
    if (flags.phi == "identity") return perfcast::PerformativityMap::identity();
    if (flags.phi == "reversion") return perfcast::PerformativityMap::reversion();
    return perfcast::PerformativityMap::drift(flags.alpha);
}

perfcast::GameSpec make_game(const GameFlags& flags) {
    return {make_rule(flags), make_map(flags), perfcast::AuditCost(flags.q, flags.c), flags.p};
}

perfcast::GridSpec make_grid(const GameFlags& flags) {
    perfcast::GridSpec grid;
    grid.points = flags.grid_points;
    return grid;
}

void add_game_flags(CLI::App* cmd, GameFlags& flags, bool require_p, bool require_p_hat) {
    cmd->add_option("--rule", flags.rule, "Scoring rule")
        ->check(CLI::IsMember({"quadratic", "spherical", "log", "constant"}))
        ->capture_default_str();
    cmd->add_option("--k", flags.k, "Constant-rule payout level")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--phi", flags.phi, "Performativity map")
        ->check(CLI::IsMember({"identity", "drift", "reversion"}))
        ->capture_default_str();
    cmd->add_option("--alpha", flags.alpha, "Drift weight")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--q", flags.q, "Audit divergence curvature")
        ->check(CLI::Range(0.0, 2.0))
        ->capture_default_str();
    cmd->add_option("--c", flags.c, "Audit failure cost")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    auto* p_option =
        cmd->add_option("--p", flags.p, "True probability")->check(CLI::Range(0.0, 1.0));
    if (require_p) p_option->required();
    if (require_p_hat) {
        cmd->add_option("--p-hat", flags.p_hat, "Forecast to evaluate")
            ->check(CLI::Range(0.0, 1.0))
            ->required();
    }
    cmd->add_option("--grid-points", flags.grid_points, "Forecast grid resolution")
        ->check(CLI::Range(2, 100000000))
        ->capture_default_str();
}

void print_report(const perfcast::OptimumReport& report) {
    using perfcast::format_double;
    std::cout << "p_hat_star " << format_double(report.p_hat_star) << '\n'
              << "reward_at_star " << format_double(report.reward_at_star) << '\n'
              << "residual_at_truth " << format_double(report.residual_at_truth) << '\n'
              << "ic " << perfcast::to_string(report.ic_verdict) << '\n'
              << "deviation " << format_double(report.deviation) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prediction-game toolkit: expert-optimal forecasts under "
                 "performative probabilities and audit costs"};
    app.require_subcommand(1);

    GameFlags flags;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Reward and its derivative at (p, p-hat)");
    add_game_flags(eval_cmd, flags, true, true);

    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Grid search for the expert-optimal forecast");
    add_game_flags(optimize_cmd, flags, true, false);

    CLI::App* check_ic_cmd = app.add_subcommand(
        "check-ic", "Test whether truthful forecasting beats every grid deviation");
    add_game_flags(check_ic_cmd, flags, true, false);

    CLI::App* closed_form_cmd = app.add_subcommand(
        "closed-form", "Closed-form optimal forecast (quadratic rule, drift map)");
    double cf_p = 0.0;
    double cf_alpha = 0.5;
    double cf_q = 2.0;
    double cf_c = 1.0;
    closed_form_cmd->add_option("--p", cf_p, "True probability")
        ->check(CLI::Range(0.0, 1.0))
        ->required();
    closed_form_cmd->add_option("--alpha", cf_alpha, "Drift weight")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    closed_form_cmd->add_option("--q", cf_q, "Audit divergence curvature")
        ->check(CLI::Range(0.0, 2.0))
        ->capture_default_str();
    closed_form_cmd->add_option("--c", cf_c, "Audit failure cost")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the library self-checks; exit 0 iff all pass");

    CLI::App* figures_cmd =
        app.add_subcommand("figures", "Write the standard sweep figure set (CSV + SVG)");
    std::string out_dir = "figures";
    std::string format = "both";
    figures_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    figures_cmd->add_option("--format", format, "Artifact formats to write")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using perfcast::format_double;
    try {
        if (app.got_subcommand(eval_cmd)) {
            const perfcast::GameSpec game = make_game(flags);
            std::cout << "reward " << format_double(perfcast::reward(game, flags.p_hat)) << '\n'
                      << "reward_derivative "
                      << format_double(perfcast::reward_derivative(game, flags.p_hat)) << '\n';
            return 0;
        }
        if (app.got_subcommand(optimize_cmd)) {
            const perfcast::OptimumReport report =
                perfcast::grid_argmax(make_game(flags), make_grid(flags));
            print_report(report);
            return 0;
        }
        if (app.got_subcommand(check_ic_cmd)) {
            const perfcast::GridSpec grid = make_grid(flags);
            const perfcast::OptimumReport report =
                perfcast::check_incentive_compatibility(make_game(flags), grid, grid.spacing());
            std::cout << "verdict " << perfcast::to_string(report.ic_verdict) << '\n'
                      << "worst_deviation " << format_double(report.deviation) << '\n'
                      << "best_p_hat " << format_double(report.p_hat_star) << '\n'
                      << "residual_at_truth " << format_double(report.residual_at_truth) << '\n';
            return report.ic_verdict == perfcast::IcVerdict::Compatible ? 0 : 1;
        }
        if (app.got_subcommand(closed_form_cmd)) {
            std::cout << format_double(
                             perfcast::closed_form_quadratic_drift(cf_p, cf_alpha, cf_q, cf_c))
                      << '\n';
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) {
            return perfcast::report(perfcast::run_verification(), std::cout) ? 0 : 1;
        }
        if (app.got_subcommand(figures_cmd)) {
            perfcast::FigureFormat figure_format = perfcast::FigureFormat::Both;
            if (format == "csv") figure_format = perfcast::FigureFormat::Csv;
            if (format == "svg") figure_format = perfcast::FigureFormat::Svg;
            const auto artifacts = perfcast::write_figure_set(out_dir, figure_format);
            std::cout << "wrote " << artifacts.size() << " figures to " << out_dir << '\n';
            for (const auto& artifact : artifacts) {
                std::cout << "  " << artifact.name << ": " << artifact.description << '\n';
            }
            return 0;
        }
    } catch (const perfcast::ConcavityViolation& e) {
        std::cerr << "ConcavityViolation: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
