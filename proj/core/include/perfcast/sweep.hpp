#pragma once

#include <perfcast/optimize.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace perfcast {

/// A family of optimization problems: for each rule and each true
/// probability in the p-grid, find the expert-optimal forecast.
struct SweepConfig {
    std::vector<ScoringRule> rules;
    PerformativityMap map = PerformativityMap::identity();
    AuditCost audit{2.0, 1.0};
    /// Number of true-probability samples p_i = (i+1)/(p_grid+1);
    /// the default 99 gives p = 0.01 ... 0.99 in steps of 0.01.
    int p_grid = 99;
    GridSpec grid;
    std::string label;

    double p_value(int i) const { return (i + 1) / static_cast<double>(p_grid + 1); }
    void validate() const;
};

struct SweepRow {
    ScoringRule rule;
    double p;
    double p_hat_star;
    double reward_at_star;
    double residual_at_truth;
    IcVerdict ic;
};

/// Rows grouped by rule (config order), p ascending within each rule.
struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/// Deterministic: identical configs produce identical results.
SweepResult run_sweep(const SweepConfig& config);

/// Writes `rule,phi,alpha,q,c,p,p_hat_star,reward_at_star,residual_at_truth,ic`
/// then one line per row, floats with 17 significant digits, LF endings.
/// Returns the number of data rows written.
int write_csv(const SweepResult& result, std::ostream& out);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

} // namespace perfcast
