#include <perfcast/reward.hpp>

#include <stdexcept>
#include <utility>

namespace perfcast {

GameSpec::GameSpec(ScoringRule rule_, PerformativityMap map_, AuditCost audit_, double p_)
    : rule(std::move(rule_)), map(std::move(map_)), audit(std::move(audit_)), p(p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("true probability p must lie in [0, 1]");
    }
}

double reward(const GameSpec& game, double p_hat) {
    const double phi = game.map.apply(p_hat, game.p);
    const double win = game.rule.score(p_hat);
    const double lose = game.rule.score(1.0 - p_hat);
    return phi * win + (1.0 - phi) * lose - game.audit.expected_cost(p_hat, game.p);
}

double reward_derivative(const GameSpec& game, double p_hat) {
    const double phi = game.map.apply(p_hat, game.p);
    const double phi_slope = game.map.apply_derivative(p_hat, game.p);
    const double win = game.rule.score(p_hat);
    const double lose = game.rule.score(1.0 - p_hat);
    const double win_slope = game.rule.score_derivative(p_hat);
    const double lose_slope = game.rule.score_derivative(1.0 - p_hat);
    return phi_slope * (win - lose) + phi * win_slope - (1.0 - phi) * lose_slope -
           game.audit.expected_cost_derivative(p_hat, game.p);
}

double drift_derivative_lemma(const GameSpec& game, double p_hat) {
    if (game.map.kind() != MapKind::Drift) {
        throw std::invalid_argument("drift_derivative_lemma requires a drift map");
    }
    if (!game.rule.is_proper()) {
        throw std::invalid_argument("drift_derivative_lemma requires a strictly proper rule");
    }
    const double alpha = game.map.alpha();
    const double phi = game.map.apply(p_hat, game.p);
    const double score_gap = game.rule.score(p_hat) - game.rule.score(1.0 - p_hat);
    return alpha * score_gap +
           game.rule.score_derivative(p_hat) * ((phi - p_hat) / (1.0 - p_hat)) -
           game.audit.expected_cost_derivative(p_hat, game.p);
}

double stationarity_residual_at_truth(const GameSpec& game) {
    return reward_derivative(game, game.p);
}

} // namespace perfcast
