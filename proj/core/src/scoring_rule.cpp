#include <perfcast/scoring_rule.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace perfcast {

namespace {

[[noreturn]] void throw_domain(double t) {
    throw std::domain_error("scoring rule argument " + std::to_string(t) +
                            " outside the rule's domain");
}

} // namespace

ScoringRule::ScoringRule(RuleFamily family, double constant_level)
    : family_(family), constant_level_(constant_level) {}

ScoringRule ScoringRule::quadratic() { return {RuleFamily::Quadratic, 0.0}; }
ScoringRule ScoringRule::spherical() { return {RuleFamily::Spherical, 0.0}; }
ScoringRule ScoringRule::logarithmic() { return {RuleFamily::Logarithmic, 0.0}; }

ScoringRule ScoringRule::constant(double level) {
    if (!(level > 0.0)) {
        throw std::domain_error("constant rule level must be positive");
    }
    return {RuleFamily::Constant, level};
}

bool in_rule_domain(const ScoringRule& rule, double t) {
    if (rule.family() == RuleFamily::Logarithmic) {
        return t >= kProbFloor && t <= 1.0 - kProbFloor;
    }
    return t > 0.0 && t < 1.0;
}

double ScoringRule::score(double t) const {
    if (!in_rule_domain(*this, t)) throw_domain(t);
    switch (family_) {
        case RuleFamily::Quadratic:
            return -(1.0 - t) * (1.0 - t);
        case RuleFamily::Spherical:
            return t / std::sqrt(t * t + (1.0 - t) * (1.0 - t));
        case RuleFamily::Logarithmic:
            return std::log(t);
        case RuleFamily::Constant:
            return constant_level_;
    }
    throw std::logic_error("unreachable rule family");
}

double ScoringRule::score_derivative(double t) const {
    if (!in_rule_domain(*this, t)) throw_domain(t);
    switch (family_) {
        case RuleFamily::Quadratic:
            return 2.0 * (1.0 - t);
        case RuleFamily::Spherical: {
            const double s = t * t + (1.0 - t) * (1.0 - t);
            return (1.0 - t) / (s * std::sqrt(s));
        }
        case RuleFamily::Logarithmic:
            return 1.0 / t;
        case RuleFamily::Constant:
            return 0.0;
    }
    throw std::logic_error("unreachable rule family");
}

std::string_view ScoringRule::name() const {
    switch (family_) {
        case RuleFamily::Quadratic: return "quadratic";
        case RuleFamily::Spherical: return "spherical";
        case RuleFamily::Logarithmic: return "log";
        case RuleFamily::Constant: return "constant";
    }
    return "unknown";
}

double check_neyman_identity(const ScoringRule& rule, int samples) {
    if (samples < 1) {
        throw std::invalid_argument("check_neyman_identity needs samples >= 1");
    }
    const double lo = kProbFloor;
    const double hi = 1.0 - kProbFloor;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (i + 0.5) * (hi - lo) / samples;
        const double lhs = t * rule.score_derivative(t);
        const double rhs = (1.0 - t) * rule.score_derivative(1.0 - t);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace perfcast
