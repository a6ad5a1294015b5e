#include <perfcast/audit.hpp>

#include <stdexcept>
#include <string>

namespace perfcast {

namespace {

void ensure_unit(double value, const char* what) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error(std::string(what) + " = " + std::to_string(value) +
                                " must lie in [0, 1]");
    }
}

} // namespace

AuditCost::AuditCost(double q, double c) : q_(q), c_(c) {
    if (!(q >= 0.0 && q <= 2.0)) {
        throw std::domain_error("audit curvature q must lie in [0, 2]");
    }
    if (!(c >= 0.0)) {
        throw std::domain_error("audit cost c must be nonnegative");
    }
}

double AuditCost::divergence(double p_hat, double p) const {
    ensure_unit(p_hat, "p_hat");
    ensure_unit(p, "p");
    const double d = p_hat - p;
    return 0.5 * q_ * d * d;
}

double AuditCost::expected_cost(double p_hat, double p) const {
    return divergence(p_hat, p) * c_;
}

double AuditCost::expected_cost_derivative(double p_hat, double p) const {
    ensure_unit(p_hat, "p_hat");
    ensure_unit(p, "p");
    return q_ * (p_hat - p) * c_;
}

} // namespace perfcast
