#pragma once

#include <perfcast/reward.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace perfcast {

/// Uniform forecast grid, endpoints included: point i = lo + i * spacing.
struct GridSpec {
    int points = 500;
    double lo = kProbFloor;
    double hi = 1.0 - kProbFloor;

    double spacing() const { return (hi - lo) / (points - 1); }

    double point(int i) const {
        const double t = lo + i * spacing();
        return t > hi ? hi : t;  // guard the last point against rounding past hi
    }

    void validate() const;
};

enum class IcVerdict { Compatible, Incompatible };

std::string_view to_string(IcVerdict verdict);

struct OptimumReport {
    double p_hat_star = 0.0;
    double reward_at_star = 0.0;
    /// Reward derivative at the truthful forecast; NaN when p sits outside
    /// the rule's evaluable domain (e.g. p = 0 with the quadratic rule).
    double residual_at_truth = 0.0;
    IcVerdict ic_verdict = IcVerdict::Compatible;
    /// |p_hat_star - p| for grid_argmax; the best violating deviation for
    /// check_incentive_compatibility (0 when compatible).
    double deviation = 0.0;
};

/// The closed-form optimizer was asked for outside its certified range
/// (reward not strictly concave). Use grid_argmax for an answer anyway.
class ConcavityViolation : public std::domain_error {
public:
    explicit ConcavityViolation(const std::string& what) : std::domain_error(what) {}
};

/// Evaluates the reward at every grid point and returns the maximizer.
/// Ties break toward the smallest forecast. The verdict is Compatible iff
/// the maximizer lies within one grid spacing of the truth.
OptimumReport grid_argmax(const GameSpec& game, const GridSpec& grid);

/// Optimal forecast for the quadratic rule under drift, clamped to [0,1]:
///   clamp(p + (2 alpha p - alpha) / (q c + 2 - 4 alpha)).
/// Requires q > 0 and c > (4 alpha - 2)/q, the strict-concavity condition;
/// throws ConcavityViolation otherwise.
double closed_form_quadratic_drift(double p, double alpha, double q, double c);

/// Compatible iff no grid point farther than `tolerance` from the truth
/// beats the truthful reward by more than 1e-12. When incompatible, the
/// report carries the best violating forecast and its deviation.
OptimumReport check_incentive_compatibility(const GameSpec& game, const GridSpec& grid,
                                            double tolerance);

/// Golden-section refinement of a local reward maximizer inside [lo, hi];
/// assumes unimodality within the bracket (one grid cell in practice) and
/// resolves the maximizer to 1e-9.
double refine_argmax(const GameSpec& game, double lo, double hi);

} // namespace perfcast
