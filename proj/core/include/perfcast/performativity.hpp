#pragma once

#include <string_view>

namespace perfcast {

enum class MapKind { Identity, Drift, Reversion };

/// Forecast-dependent evolution of the true event probability.
///
/// Identity   the forecast has no effect
/// Drift      the probability moves toward the forecast with weight alpha
/// Reversion  extreme forecasts pull the probability toward 0.5
class PerformativityMap {
public:
    static PerformativityMap identity();
    static PerformativityMap drift(double alpha);
    static PerformativityMap reversion();

    MapKind kind() const { return kind_; }

    /// Drift weight; 0 for the other kinds.
    double alpha() const { return alpha_; }

    /// Post-forecast probability given forecast p_hat and pre-forecast
    /// probability p. Both arguments must lie in [0, 1].
    double apply(double p_hat, double p) const;

    /// Partial derivative of apply() in p_hat.
    double apply_derivative(double p_hat, double p) const;

    std::string_view name() const;

private:
    PerformativityMap(MapKind kind, double alpha);

    MapKind kind_;
    double alpha_;
};

} // namespace perfcast
