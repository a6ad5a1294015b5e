#pragma once

#include <perfcast/audit.hpp>
#include <perfcast/performativity.hpp>
#include <perfcast/scoring_rule.hpp>

namespace perfcast {

/// One instance of the audited prediction game: scoring rule, probability
/// map, audit penalty, and the pre-forecast true probability p.
struct GameSpec {
    GameSpec(ScoringRule rule, PerformativityMap map, AuditCost audit, double p);

    ScoringRule rule;
    PerformativityMap map;
    AuditCost audit;
    double p;
};

/// Expected reward of forecasting p_hat:
///   phi(p_hat) f(p_hat) + (1 - phi(p_hat)) f(1 - p_hat) - cost(p_hat, p).
/// All quantities are exact expectations; nothing is sampled.
double reward(const GameSpec& game, double p_hat);

/// d reward / d p_hat via the chain rule over the components.
double reward_derivative(const GameSpec& game, double p_hat);

/// Drift-specialized form of the reward derivative:
///   alpha (f(p_hat) - f(1-p_hat))
///   + f'(p_hat) (phi(p_hat) - p_hat) / (1 - p_hat)
///   - q (p_hat - p) c.
/// Valid only for drift maps with a strictly proper rule (the
/// simplification rests on t f'(t) = (1-t) f'(1-t)); computed on a path
/// independent of reward_derivative so the two can cross-check each other.
double drift_derivative_lemma(const GameSpec& game, double p_hat);

/// reward_derivative at the truthful forecast p_hat = p. A nonzero value
/// certifies that truth-telling is not even a stationary point of the
/// expected reward.
double stationarity_residual_at_truth(const GameSpec& game);

} // namespace perfcast
