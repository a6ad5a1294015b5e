#include <perfcast/optimize.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace perfcast {

namespace {

// Slack used when comparing rewards in the incentive-compatibility check.
constexpr double kIcRewardSlack = 1e-12;

double residual_or_nan(const GameSpec& game) {
    if (!in_rule_domain(game.rule, game.p)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return stationarity_residual_at_truth(game);
}

} // namespace

void GridSpec::validate() const {
    if (points < 2) {
        throw std::domain_error("grid needs at least 2 points");
    }
    if (!(lo < hi)) {
        throw std::domain_error("grid lower bound must be below the upper bound");
    }
    if (!(lo >= 0.0 && hi <= 1.0)) {
        throw std::domain_error("grid must lie within [0, 1]");
    }
}

std::string_view to_string(IcVerdict verdict) {
    return verdict == IcVerdict::Compatible ? "compatible" : "incompatible";
}

OptimumReport grid_argmax(const GameSpec& game, const GridSpec& grid) {
    grid.validate();
    double best = -std::numeric_limits<double>::infinity();
    int best_index = 0;
    for (int i = 0; i < grid.points; ++i) {
        const double value = reward(game, grid.point(i));
        if (value > best) {  // strict: ties keep the smaller forecast
            best = value;
            best_index = i;
        }
    }
    OptimumReport report;
    report.p_hat_star = grid.point(best_index);
    report.reward_at_star = best;
    report.residual_at_truth = residual_or_nan(game);
    report.deviation = std::abs(report.p_hat_star - game.p);
    report.ic_verdict =
        report.deviation <= grid.spacing() ? IcVerdict::Compatible : IcVerdict::Incompatible;
    return report;
}

double closed_form_quadratic_drift(double p, double alpha, double q, double c) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("p must lie in [0, 1]");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::domain_error("alpha must lie in [0, 1]");
    }
    if (!(q >= 0.0 && q <= 2.0)) {
        throw std::domain_error("q must lie in [0, 2]");
    }
    if (!(c >= 0.0)) {
        throw std::domain_error("c must be nonnegative");
    }
    if (!(q > 0.0) || !(c > (4.0 * alpha - 2.0) / q)) {
        throw ConcavityViolation(
            "closed form requires q > 0 and c > (4*alpha - 2)/q; "
            "the reward is not certified strictly concave");
    }
    const double shift = (2.0 * alpha * p - alpha) / (q * c + 2.0 - 4.0 * alpha);
    return std::clamp(p + shift, 0.0, 1.0);
}

OptimumReport check_incentive_compatibility(const GameSpec& game, const GridSpec& grid,
                                            double tolerance) {
    grid.validate();
    if (!(tolerance > 0.0)) {
        throw std::domain_error("tolerance must be positive");
    }
    const double truth_reward = reward(game, game.p);
    double best = -std::numeric_limits<double>::infinity();
    int best_index = -1;
    for (int i = 0; i < grid.points; ++i) {
        const double t = grid.point(i);
        if (std::abs(t - game.p) <= tolerance) continue;
        const double value = reward(game, t);
        if (value > best) {
            best = value;
            best_index = i;
        }
    }

    OptimumReport report;
    report.residual_at_truth = residual_or_nan(game);
    const bool compatible = best_index < 0 || truth_reward >= best - kIcRewardSlack;
    if (compatible) {
        report.ic_verdict = IcVerdict::Compatible;
        report.p_hat_star = game.p;
        report.reward_at_star = truth_reward;
        report.deviation = 0.0;
    } else {
        report.ic_verdict = IcVerdict::Incompatible;
        report.p_hat_star = grid.point(best_index);
        report.reward_at_star = best;
        report.deviation = std::abs(report.p_hat_star - game.p);
    }
    return report;
}

double refine_argmax(const GameSpec& game, double lo, double hi) {
    if (!(hi - lo >= 1e-12)) {
        throw std::invalid_argument("refine_argmax bracket must be at least 1e-12 wide");
    }
    const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_gr * (b - a);
    double d = a + inv_gr * (b - a);
    double fc = reward(game, c);
    double fd = reward(game, d);
    for (int iter = 0; iter < 200 && b - a > 1e-6; ++iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_gr * (b - a);
            fc = reward(game, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_gr * (b - a);
            fd = reward(game, d);
        }
    }
    // Value comparisons cannot localize the maximizer below ~sqrt(eps);
    // bisect on the reward slope, whose signal is linear in the distance.
    for (int iter = 0; iter < 80 && b - a > 1e-12; ++iter) {
        const double mid = 0.5 * (a + b);
        if (reward_derivative(game, mid) > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

} // namespace perfcast
