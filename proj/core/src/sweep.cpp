#include <perfcast/sweep.hpp>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace perfcast {

void SweepConfig::validate() const {
    if (p_grid < 2) {
        throw std::domain_error("sweep needs at least 2 true-probability samples");
    }
    if (rules.empty()) {
        throw std::domain_error("sweep needs at least one scoring rule");
    }
    grid.validate();
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    SweepResult result{config, {}};
    result.rows.reserve(config.rules.size() * static_cast<std::size_t>(config.p_grid));
    for (const ScoringRule& rule : config.rules) {
        for (int i = 0; i < config.p_grid; ++i) {
            const double p = config.p_value(i);
            const GameSpec game(rule, config.map, config.audit, p);
            const OptimumReport opt = grid_argmax(game, config.grid);
            result.rows.push_back({rule, p, opt.p_hat_star, opt.reward_at_star,
                                   opt.residual_at_truth, opt.ic_verdict});
        }
    }
    return result;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

int write_csv(const SweepResult& result, std::ostream& out) {
    out << "rule,phi,alpha,q,c,p,p_hat_star,reward_at_star,residual_at_truth,ic\n";
    const SweepConfig& cfg = result.config;
    for (const SweepRow& row : result.rows) {
        out << row.rule.name() << ',' << cfg.map.name() << ','
            << format_double(cfg.map.alpha()) << ',' << format_double(cfg.audit.q()) << ','
            << format_double(cfg.audit.c()) << ',' << format_double(row.p) << ','
            << format_double(row.p_hat_star) << ',' << format_double(row.reward_at_star) << ','
            << format_double(row.residual_at_truth) << ',' << to_string(row.ic) << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed to write CSV stream");
    }
    return static_cast<int>(result.rows.size());
}

} // namespace perfcast
