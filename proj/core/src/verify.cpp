#include <perfcast/verify.hpp>

#include <perfcast/svg.hpp>
#include <perfcast/sweep.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

namespace perfcast {

namespace {

std::string describe(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", value);
    return buf;
}

std::vector<ScoringRule> proper_rules() {
    return {ScoringRule::quadratic(), ScoringRule::spherical(), ScoringRule::logarithmic()};
}

std::vector<ScoringRule> all_rules() {
    auto rules = proper_rules();
    rules.push_back(ScoringRule::constant(1.0));
    return rules;
}

template <typename F>
double central_difference(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct Tracker {
    double worst = 0.0;
    bool ok = true;

    void residual(double value) { worst = std::max(worst, value); }
    void require(bool condition) { ok = ok && condition; }
};

double deviation_of(const SweepRow& row) { return std::abs(row.p_hat_star - row.p); }

} // namespace

std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> results;
    auto check = [&results](std::string name, bool passed, std::string detail) {
        results.push_back({std::move(name), passed, std::move(detail)});
    };

    const GridSpec grid;
    const double spacing = grid.spacing();

    // --- scoring rules -----------------------------------------------------

    {
        Tracker t;
        for (const auto& rule : all_rules()) {
            t.residual(check_neyman_identity(rule, 1000));
        }
        check("scoring/neyman-identity", t.worst <= 1e-9,
              "max residual " + describe(t.worst));
    }
    {
        Tracker t;
        const double lo = kProbFloor, hi = 1.0 - kProbFloor;
        for (const auto& rule : proper_rules()) {
            for (int i = 0; i + 1 < 1001; ++i) {
                const double a = lo + i * (hi - lo) / 1000;
                const double b = lo + (i + 1) * (hi - lo) / 1000;
                t.require(rule.score(b) > rule.score(a));
            }
        }
        check("scoring/strict-monotonicity", t.ok, t.ok ? "" : "non-increasing pair found");
    }
    {
        Tracker t;
        for (const auto& rule : all_rules()) {
            for (int i = 1; i <= 99; ++i) {
                const double x = i / 100.0;
                const double fd =
                    central_difference([&rule](double v) { return rule.score(v); }, x, 1e-6);
                const double analytic = rule.score_derivative(x);
                const double err = std::abs(analytic - fd) / std::max(1.0, std::abs(analytic));
                t.residual(err);
            }
        }
        check("scoring/derivative-vs-fd", t.worst <= 1e-4, "max rel err " + describe(t.worst));
    }
    {
        // With no performativity and no audit, the expected score must peak
        // at the grid point nearest the truth for every proper rule.
        Tracker t;
        for (const auto& rule : proper_rules()) {
            for (int i = 1; i <= 9; ++i) {
                const double p = i / 10.0;
                const GameSpec game(rule, PerformativityMap::identity(), AuditCost(0.0, 0.0), p);
                const OptimumReport opt = grid_argmax(game, grid);
                t.require(std::abs(opt.p_hat_star - p) <= spacing / 2 + 1e-12);
            }
        }
        check("scoring/strict-properness-on-grid", t.ok,
              t.ok ? "" : "argmax strayed from the truth cell");
    }

    // --- performativity ----------------------------------------------------

    const std::vector<PerformativityMap> maps_for_grid = {
        PerformativityMap::identity(), PerformativityMap::drift(0.0),
        PerformativityMap::drift(0.3), PerformativityMap::drift(1.0),
        PerformativityMap::reversion()};
    {
        Tracker t;
        for (const auto& map : maps_for_grid) {
            for (int i = 0; i <= 100; ++i) {
                for (int j = 0; j <= 100; ++j) {
                    const double value = map.apply(i / 100.0, j / 100.0);
                    t.require(value >= 0.0 && value <= 1.0);
                }
            }
        }
        check("performativity/range-preservation", t.ok, t.ok ? "" : "value escaped [0,1]");
    }
    {
        Tracker t;
        for (const auto& map : maps_for_grid) {
            for (int i = 1; i <= 99; ++i) {
                for (int j = 0; j <= 100; ++j) {
                    const double p_hat = i / 100.0;
                    const double p = j / 100.0;
                    const double fd = central_difference(
                        [&](double v) { return map.apply(v, p); }, p_hat, 1e-6);
                    t.residual(std::abs(map.apply_derivative(p_hat, p) - fd));
                }
            }
        }
        check("performativity/derivative-vs-fd", t.worst <= 1e-6,
              "max abs err " + describe(t.worst));
    }
    {
        Tracker t;
        for (int a = 0; a <= 10; ++a) {
            const auto drift = PerformativityMap::drift(a / 10.0);
            for (int j = 0; j <= 100; ++j) {
                const double p = j / 100.0;
                t.require(drift.apply(p, p) == p);
            }
        }
        const auto reversion = PerformativityMap::reversion();
        for (int j = 0; j <= 100; ++j) {
            const double v = j / 100.0;
            t.require(reversion.apply(0.5, v) == v);
            t.require(reversion.apply(v, 0.5) == 0.5);
        }
        check("performativity/fixed-points-exact", t.ok, t.ok ? "" : "fixed point drifted");
    }

    // --- audit ---------------------------------------------------------------

    {
        Tracker t;
        const AuditCost audit(2.0, 1.0);
        for (int i = 0; i <= 100; ++i) {
            for (int j = 0; j <= 100; ++j) {
                const double p_hat = i / 100.0;
                const double p = j / 100.0;
                const double cost = audit.expected_cost(p_hat, p);
                t.require(cost >= 0.0);
                t.require(i == j ? cost == 0.0 : cost > 0.0);
            }
        }
        for (int i = 0; i < 100; ++i) {
            const double a = i / 100.0;
            const double b = a + 0.01;
            const double mid = audit.expected_cost((a + b) / 2, 0.25);
            const double avg =
                (audit.expected_cost(a, 0.25) + audit.expected_cost(b, 0.25)) / 2;
            t.require(mid < avg);
        }
        double fd_worst = 0.0;
        for (int i = 1; i <= 99; ++i) {
            const double p_hat = i / 100.0;
            const double fd = central_difference(
                [&](double v) { return audit.expected_cost(v, 0.3); }, p_hat, 1e-6);
            fd_worst = std::max(fd_worst,
                                std::abs(audit.expected_cost_derivative(p_hat, 0.3) - fd));
        }
        check("audit/shape-and-derivative", t.ok && fd_worst <= 1e-8,
              "max fd err " + describe(fd_worst));
    }

    // --- reward --------------------------------------------------------------

    {
        Tracker t;
        std::mt19937 gen(12345);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> interior(0.01, 0.99);
        const auto rules = all_rules();
        for (int n = 0; n < 1000; ++n) {
            const ScoringRule& rule = rules[n % rules.size()];
            const PerformativityMap map = (n % 2 == 0)
                                              ? PerformativityMap::drift(unit(gen))
                                              : PerformativityMap::reversion();
            const AuditCost audit(2.0 * unit(gen), 10.0 * unit(gen));
            const GameSpec game(rule, map, audit, interior(gen));
            const double p_hat = interior(gen);
            const double analytic = reward_derivative(game, p_hat);
            const double fd = central_difference(
                [&](double v) { return reward(game, v); }, p_hat, 1e-6);
            t.residual(std::abs(analytic - fd) / std::max(1.0, std::abs(analytic)));
        }
        check("reward/derivative-vs-fd", t.worst <= 1e-4, "max rel err " + describe(t.worst));
    }
    {
        Tracker t;
        for (const auto& rule : proper_rules()) {
            for (int i = 1; i <= 99; ++i) {
                for (int j = 1; j <= 99; ++j) {
                    const GameSpec game(rule, PerformativityMap::drift(0.5), AuditCost(2.0, 1.0),
                                        i / 100.0);
                    const double p_hat = j / 100.0;
                    t.residual(std::abs(drift_derivative_lemma(game, p_hat) -
                                        reward_derivative(game, p_hat)));
                }
            }
        }
        check("reward/lemma-equals-chain-rule", t.worst <= 1e-10,
              "max gap " + describe(t.worst));
    }
    {
        Tracker t;
        for (const double alpha : {0.1, 0.5, 0.9}) {
            for (const auto& rule : proper_rules()) {
                for (int i = 1; i <= 99; ++i) {
                    const double p = i / 100.0;
                    const GameSpec game(rule, PerformativityMap::drift(alpha),
                                        AuditCost(2.0, 1.0), p);
                    const double expected = alpha * (rule.score(p) - rule.score(1.0 - p));
                    t.residual(std::abs(stationarity_residual_at_truth(game) - expected));
                }
            }
        }
        check("reward/drift-residual-formula", t.worst <= 1e-9, "max gap " + describe(t.worst));
    }
    {
        Tracker t;
        for (const auto& rule : proper_rules()) {
            for (int i = 1; i <= 99; ++i) {
                if (i == 50) continue;
                const double p = i / 100.0;
                const GameSpec drift_game(rule, PerformativityMap::drift(0.5),
                                          AuditCost(2.0, 1.0), p);
                const GameSpec reversion_game(rule, PerformativityMap::reversion(),
                                              AuditCost(2.0, 1.0), p);
                const double drift_res = stationarity_residual_at_truth(drift_game);
                const double reversion_res = stationarity_residual_at_truth(reversion_game);
                t.require(p > 0.5 ? drift_res > 0.0 : drift_res < 0.0);
                t.require(p > 0.5 ? reversion_res < 0.0 : reversion_res > 0.0);
            }
        }
        check("reward/residual-sign-pattern", t.ok, t.ok ? "" : "sign trichotomy violated");
    }

    // --- optimize --------------------------------------------------------------

    {
        Tracker t;
        for (int i = 0; i <= 20; ++i) {
            const double p = i * 0.05;
            for (const double alpha : {0.1, 0.5, 0.9}) {
                for (const double c : {1.0, 10.0}) {
                    const double oracle = closed_form_quadratic_drift(p, alpha, 2.0, c);
                    const GameSpec game(ScoringRule::quadratic(), PerformativityMap::drift(alpha),
                                        AuditCost(2.0, c), p);
                    const OptimumReport opt = grid_argmax(game, grid);
                    t.residual(std::abs(opt.p_hat_star - oracle));
                }
            }
        }
        check("optimize/grid-matches-closed-form", t.worst <= spacing + 1e-12,
              "max gap " + describe(t.worst));
    }
    {
        Tracker t;
        int cases = 0;
        for (const auto& rule : proper_rules()) {
            for (const bool use_drift : {true, false}) {
                const PerformativityMap map =
                    use_drift ? PerformativityMap::drift(0.5) : PerformativityMap::reversion();
                for (int i = 1; i <= 9; ++i) {
                    if (i == 5) continue;
                    const GameSpec game(rule, map, AuditCost(2.0, 1.0), i / 10.0);
                    t.require(std::abs(stationarity_residual_at_truth(game)) > 1e-6);
                    const OptimumReport report =
                        check_incentive_compatibility(game, grid, spacing);
                    t.require(report.ic_verdict == IcVerdict::Incompatible);
                    ++cases;
                }
            }
        }
        check("optimize/proper-rules-not-ic",
              t.ok && cases == 48, "48 rule/map/p cases");
    }
    {
        Tracker t;
        SweepConfig config;
        config.rules = {ScoringRule::constant(1.0)};
        for (const bool use_drift : {true, false}) {
            config.map =
                use_drift ? PerformativityMap::drift(0.5) : PerformativityMap::reversion();
            const SweepResult sweep = run_sweep(config);
            for (const SweepRow& row : sweep.rows) {
                t.require(deviation_of(row) <= spacing);
                t.require(row.ic == IcVerdict::Compatible);
            }
        }
        check("optimize/constant-rule-ic", t.ok, t.ok ? "" : "constant rule flagged incompatible");
    }
    {
        Tracker t;
        SweepConfig config;
        config.rules = proper_rules();
        config.map = PerformativityMap::drift(0.5);
        const SweepResult drift_sweep = run_sweep(config);
        for (const SweepRow& row : drift_sweep.rows) {
            if (row.p > 0.5) t.require(row.p_hat_star >= row.p - spacing);
            if (row.p < 0.5) t.require(row.p_hat_star <= row.p + spacing);
        }
        config.map = PerformativityMap::reversion();
        const SweepResult reversion_sweep = run_sweep(config);
        for (const SweepRow& row : reversion_sweep.rows) {
            if (row.p > 0.5) t.require(row.p_hat_star <= row.p + spacing);
            if (row.p < 0.5) t.require(row.p_hat_star >= row.p - spacing);
        }
        check("optimize/deviation-direction", t.ok, t.ok ? "" : "over/under-prediction reversed");
    }

    // --- sweeps and reports ------------------------------------------------------

    {
        Tracker t;
        for (const bool use_drift : {true, false}) {
            SweepConfig config;
            config.rules = all_rules();
            config.map =
                use_drift ? PerformativityMap::drift(0.5) : PerformativityMap::reversion();
            std::vector<SweepResult> by_cost;
            for (const double c : {0.01, 1.0, 10.0}) {
                config.audit = AuditCost(2.0, c);
                by_cost.push_back(run_sweep(config));
            }
            for (std::size_t row = 0; row < by_cost[0].rows.size(); ++row) {
                const double dev_low = deviation_of(by_cost[0].rows[row]);
                const double dev_mid = deviation_of(by_cost[1].rows[row]);
                const double dev_high = deviation_of(by_cost[2].rows[row]);
                t.require(dev_mid <= dev_low + spacing);
                t.require(dev_high <= dev_mid + spacing);
            }
        }
        check("sweep/cost-monotonicity", t.ok, t.ok ? "" : "deviation grew with cost");
    }
    {
        Tracker t;
        for (const auto& rule : proper_rules()) {
            double previous_mean = -1.0;
            for (const double alpha : {0.1, 0.5, 0.9}) {
                SweepConfig config;
                config.rules = {rule};
                config.map = PerformativityMap::drift(alpha);
                const SweepResult sweep = run_sweep(config);
                double total = 0.0;
                for (const SweepRow& row : sweep.rows) total += deviation_of(row);
                const double mean = total / sweep.rows.size();
                t.require(mean >= previous_mean - 1e-12);
                previous_mean = mean;
            }
        }
        check("sweep/alpha-monotonicity", t.ok, t.ok ? "" : "mean deviation fell with alpha");
    }
    {
        Tracker t;
        for (const bool use_drift : {true, false}) {
            SweepConfig config;
            config.rules = all_rules();
            config.map =
                use_drift ? PerformativityMap::drift(0.5) : PerformativityMap::reversion();
            const SweepResult sweep = run_sweep(config);
            for (const SweepRow& row : sweep.rows) {
                if (row.p == 0.5) t.require(deviation_of(row) <= spacing);
            }
        }
        check("sweep/diagonal-crossing-at-half", t.ok, t.ok ? "" : "curve missed the diagonal");
    }
    {
        SweepConfig config;
        config.rules = proper_rules();
        config.map = PerformativityMap::drift(0.5);
        config.label = "drift, c=1";
        std::ostringstream csv_a, csv_b, svg_a, svg_b;
        const SweepResult first = run_sweep(config);
        const SweepResult second = run_sweep(config);
        write_csv(first, csv_a);
        write_csv(second, csv_b);
        render_svg({first}, svg_a, ChartOptions{"determinism probe", true});
        render_svg({second}, svg_b, ChartOptions{"determinism probe", true});
        const bool ok = csv_a.str() == csv_b.str() && svg_a.str() == svg_b.str();
        check("report/deterministic-bytes", ok, ok ? "" : "reruns differed");
    }

    return results;
}

bool report(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all_passed = true;
    for (const CheckResult& result : results) {
        out << (result.passed ? "PASS" : "FAIL") << "  " << result.name;
        if (!result.detail.empty()) {
            out << "  (" << result.detail << ")";
        }
        out << '\n';
        all_passed = all_passed && result.passed;
    }
    out << (all_passed ? "all checks passed" : "CHECKS FAILED") << '\n';
    return all_passed;
}

} // namespace perfcast
