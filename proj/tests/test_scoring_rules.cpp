#include <doctest.h>

#include <perfcast/scoring_rule.hpp>

#include <cmath>
#include <stdexcept>

#include "support.hpp"

using namespace perfcast;

TEST_CASE("quadratic score and derivative match the closed forms") {
    const auto rule = ScoringRule::quadratic();
    CHECK(rule.score(0.5) == -0.25);
    CHECK(rule.score(0.75) == -0.0625);
    CHECK(rule.score_derivative(0.75) == 0.5);
}

TEST_CASE("constant rule pays its level with zero slope") {
    const auto rule = ScoringRule::constant(1.0);
    for (const double t : {0.1, 0.3, 0.5, 0.9}) {
        CHECK(rule.score(t) == 1.0);
        CHECK(rule.score_derivative(t) == 0.0);
    }
    CHECK(ScoringRule::constant(2.5).score(0.2) == 2.5);
}

TEST_CASE("logarithmic rule evaluates at its domain edge") {
    const auto rule = ScoringRule::logarithmic();
    CHECK(rule.score(1.0 - 1e-5) ==
          doctest::Approx(-1.0000050000287824e-05).epsilon(1e-10));
    CHECK(rule.score_derivative(0.25) == 4.0);
    CHECK(rule.score(kProbFloor) == std::log(kProbFloor));
}

TEST_CASE("spherical rule at sample points") {
    // frozen from t / sqrt(t^2 + (1-t)^2)
    const auto rule = ScoringRule::spherical();
    CHECK(rule.score(0.5) == doctest::Approx(0.7071067811865475).epsilon(1e-15));
    CHECK(rule.score(0.75) == doctest::Approx(0.9486832980505138).epsilon(1e-15));
    CHECK(rule.score_derivative(0.75) == doctest::Approx(0.5059644256269407).epsilon(1e-15));
}

TEST_CASE("arguments outside the domain raise domain errors") {
    CHECK_THROWS_AS(ScoringRule::quadratic().score(0.0), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::quadratic().score(1.0), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::spherical().score_derivative(-0.1), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::logarithmic().score(5e-6), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::logarithmic().score_derivative(1.0 - 5e-6), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::constant(0.0), std::domain_error);
    CHECK_THROWS_AS(ScoringRule::constant(-2.0), std::domain_error);
}

TEST_CASE("neyman identity residual stays below 1e-9 for every family") {
    CHECK(check_neyman_identity(ScoringRule::quadratic(), 1000) <= 1e-9);
    CHECK(check_neyman_identity(ScoringRule::spherical(), 1000) <= 1e-9);
    CHECK(check_neyman_identity(ScoringRule::logarithmic(), 1000) <= 1e-9);
    CHECK(check_neyman_identity(ScoringRule::constant(1.0), 10) == 0.0);
    CHECK_THROWS_AS(check_neyman_identity(ScoringRule::quadratic(), 0), std::invalid_argument);
}

TEST_CASE("proper rules are strictly increasing on the interior") {
    const double lo = kProbFloor;
    const double hi = 1.0 - kProbFloor;
    for (const auto& rule : testutil::proper_rules()) {
        for (int i = 0; i < 1000; ++i) {
            const double a = lo + i * (hi - lo) / 1000;
            const double b = lo + (i + 1) * (hi - lo) / 1000;
            CHECK(rule.score(b) > rule.score(a));
        }
    }
}

TEST_CASE("score derivatives agree with central finite differences") {
    auto rules = testutil::proper_rules();
    rules.push_back(ScoringRule::constant(1.0));
    for (const auto& rule : rules) {
        for (int i = 1; i <= 99; ++i) {
            const double t = i / 100.0;
            const double fd = testutil::central_difference(
                [&rule](double v) { return rule.score(v); }, t, 1e-6);
            const double analytic = rule.score_derivative(t);
            CHECK(std::abs(analytic - fd) <= 1e-4 * std::max(1.0, std::abs(analytic)));
        }
    }
}

TEST_CASE("rule names are stable identifiers") {
    CHECK(ScoringRule::quadratic().name() == "quadratic");
    CHECK(ScoringRule::spherical().name() == "spherical");
    CHECK(ScoringRule::logarithmic().name() == "log");
    CHECK(ScoringRule::constant(1.0).name() == "constant");
    CHECK(ScoringRule::constant(1.0).is_proper() == false);
    CHECK(ScoringRule::quadratic().is_proper());
}
