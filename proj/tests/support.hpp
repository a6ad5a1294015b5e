#pragma once

#include <perfcast/scoring_rule.hpp>

#include <vector>

namespace testutil {

template <typename F>
double central_difference(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline std::vector<perfcast::ScoringRule> proper_rules() {
    return {perfcast::ScoringRule::quadratic(), perfcast::ScoringRule::spherical(),
            perfcast::ScoringRule::logarithmic()};
}

} // namespace testutil
