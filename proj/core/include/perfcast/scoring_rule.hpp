#pragma once

#include <string_view>

namespace perfcast {

/// Evaluation floor for rules that diverge at the endpoints; also the
/// default forecast-grid boundary.
inline constexpr double kProbFloor = 1e-5;

enum class RuleFamily { Quadratic, Spherical, Logarithmic, Constant };

/// Binary scoring rule f: the expert earns f(t) when the event occurs
/// after forecasting t, and f(1 - t) otherwise.
///
/// Quadratic    f(t) = -(1 - t)^2
/// Spherical    f(t) = t / sqrt(t^2 + (1 - t)^2)
/// Logarithmic  f(t) = ln t, evaluated on [kProbFloor, 1 - kProbFloor]
/// Constant     f(t) = k for a fixed k > 0 (not strictly proper)
class ScoringRule {
public:
    static ScoringRule quadratic();
    static ScoringRule spherical();
    static ScoringRule logarithmic();
    static ScoringRule constant(double level);

    RuleFamily family() const { return family_; }

    /// Payout level k; meaningful only for the constant family.
    double constant_level() const { return constant_level_; }

    /// True for the three strictly proper families.
    bool is_proper() const { return family_ != RuleFamily::Constant; }

    /// f(t). Throws std::domain_error outside the rule's domain.
    double score(double t) const;

    /// f'(t) in closed form, same domain as score().
    double score_derivative(double t) const;

    /// Stable lowercase identifier used in CSV output and chart legends.
    std::string_view name() const;

private:
    ScoringRule(RuleFamily family, double constant_level);

    RuleFamily family_;
    double constant_level_;
};

/// Interval the rule can be evaluated on: (0,1) open, narrowed to
/// [kProbFloor, 1 - kProbFloor] for the logarithmic rule.
bool in_rule_domain(const ScoringRule& rule, double t);

/// Max of |t f'(t) - (1-t) f'(1-t)| over `samples` deterministic midpoints
/// of (kProbFloor, 1 - kProbFloor). Zero (to rounding) for every family.
double check_neyman_identity(const ScoringRule& rule, int samples);

} // namespace perfcast
