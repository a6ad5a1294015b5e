#include <perfcast/performativity.hpp>

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

PerformativityMap::PerformativityMap(MapKind kind, double alpha)
    : kind_(kind), alpha_(alpha) {}

PerformativityMap PerformativityMap::identity() { return {MapKind::Identity, 0.0}; }

PerformativityMap PerformativityMap::drift(double alpha) {
    ensure_unit(alpha, "drift weight alpha");
    return {MapKind::Drift, alpha};
}

PerformativityMap PerformativityMap::reversion() { return {MapKind::Reversion, 0.0}; }

double PerformativityMap::apply(double p_hat, double p) const {
    ensure_unit(p_hat, "p_hat");
    ensure_unit(p, "p");
    switch (kind_) {
        case MapKind::Identity:
            return p;
        case MapKind::Drift:
            // alpha*p_hat + (1-alpha)*p, written so apply(p, p) == p exactly
            return p + alpha_ * (p_hat - p);
        case MapKind::Reversion: {
            const double psi = 4.0 * (p_hat - 0.5) * (p_hat - 0.5);
            // psi*0.5 + (1-psi)*p; this form fixes p exactly at p_hat = 0.5
            // and 0.5 exactly at p = 0.5
            return p + psi * (0.5 - p);
        }
    }
    throw std::logic_error("unreachable map kind");
}

double PerformativityMap::apply_derivative(double p_hat, double p) const {
    ensure_unit(p_hat, "p_hat");
    ensure_unit(p, "p");
    switch (kind_) {
        case MapKind::Identity:
            return 0.0;
        case MapKind::Drift:
            return alpha_;
        case MapKind::Reversion:
            return 4.0 * (p_hat - 0.5) + p * (4.0 - 8.0 * p_hat);
    }
    throw std::logic_error("unreachable map kind");
}

std::string_view PerformativityMap::name() const {
    switch (kind_) {
        case MapKind::Identity: return "identity";
        case MapKind::Drift: return "drift";
        case MapKind::Reversion: return "reversion";
    }
    return "unknown";
}

} // namespace perfcast
