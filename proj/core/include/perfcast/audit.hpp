#pragma once

namespace perfcast {

/// Expected audit penalty for misreporting: the quadratic divergence
/// (q/2)(p_hat - p)^2 scaled by the failure cost c. q in [0,2], c >= 0;
/// q = 0 or c = 0 disables auditing.
class AuditCost {
public:
    AuditCost(double q, double c);

    double q() const { return q_; }
    double c() const { return c_; }

    /// (q/2)(p_hat - p)^2, zero iff p_hat = p when q > 0.
    double divergence(double p_hat, double p) const;

    /// divergence * c.
    double expected_cost(double p_hat, double p) const;

    /// Partial derivative of expected_cost in p_hat: q (p_hat - p) c.
    double expected_cost_derivative(double p_hat, double p) const;

private:
    double q_;
    double c_;
};

} // namespace perfcast
