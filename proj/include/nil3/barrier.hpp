#pragma once

#include <array>
#include <string>
#include <vector>

#include "nil3/core.hpp"
#include "nil3/io.hpp"
#include "nil3/meridian.hpp"

namespace nil3 {

/// Threshold of the admissible growth parameter: c must exceed
/// c0 = 4*tau^2 + 2*tau + 1.
double barrier_c0(double tau);

/// Parameters of the barrier surface with meridian r_c(t) = exp(exp(c*t)/c),
/// t >= 0. Validated on construction: tau >= 0, c > c0(tau), t_max > 0.
struct BarrierParams {
    double c;
    double tau;
    double t_max;

    explicit BarrierParams(double c_, double tau_, double t_max_ = 3.0);
};

/// Largest t with c*t + exp(c*t)/c <= budget; beyond it exp(arg) in the second
/// derivative overflows the budget. Monotone in budget; solved by bisection.
double barrier_t_limit(double c, double exp_budget = 700.0);

/// The doubly exponential meridian with derivatives
///   r' = exp(c*t)*r,  r'' = exp(c*t)*(c + exp(c*t))*r.
/// Calls beyond barrier_t_limit(c, 700) throw std::range_error instead of
/// overflowing.
Meridian barrier_meridian(const BarrierParams& params);

/// The boundary circle of the surface: radius exp(1/c) in the plane {y = 0}.
struct BoundaryCircle {
    double radius;
    double y;
};
BoundaryCircle boundary_circle(const BarrierParams& params);

/// Points within plane distance eps of {y = 0} all have t <= T. Plane distance
/// equals |y| = t here, so T = eps; requires eps > 0.
double clearance_threshold(const BarrierParams& params, double eps);

/// t*(c, R) = ln(c*ln(R))/c: above this height the meridian radius exceeds R,
/// so inside the cylinder of radius R the surface lies below t*. Requires
/// R > exp(1/c) (the boundary circle radius). Decreasing in c at fixed R >= e:
/// the family flattens onto {y = 0} uniformly on compacts.
double convergence_profile(const BarrierParams& params, double R);

/// One inequality of the nonpositivity chain for the mean curvature numerator.
struct ChainStep {
    std::string name;
    double min_slack;  // min over the grid of (rhs - lhs)/max(1, |lhs|)
    bool holds;        // min_slack >= -1e-10
};

/// Grid certification that H <= 0 on the truncated barrier.
struct CertResult {
    double c = 0.0;
    double tau = 0.0;
    int nt = 0;
    int nphi = 0;
    double t_lo = 0.0;
    double t_hi = 0.0;           // certified window end (after overflow clamp)
    double requested_t_max = 0.0;
    bool clamped = false;        // t_hi < requested_t_max due to the exp budget
    double max_H = 0.0;          // max over the grid; pass requires < 0
    double argmax_t = 0.0;
    double argmax_phi = 0.0;
    double max_H_at_t0 = 0.0;    // max over phi on the boundary circle
    double chain_bound = 0.0;    // c0 - c, the final upper bound for the numerator
    double max_identity_residual = 0.0;  // substitution step, relative
    std::array<ChainStep, 3> steps;
    bool pass = false;

    Report to_report() const;
};

/// Evaluates H and the estimate chain on an nt x nphi grid over
/// [0, min(t_max, overflow-safe limit)] x [0, 2*pi): t geometrically spaced
/// (denser near 0, both ends included), phi uniform. If `samples` is non-null
/// it receives columns t, phi, H for every grid point.
CertResult certify(const BarrierParams& params, int nt = 256, int nphi = 256,
                   FieldTable* samples = nullptr);

}  // namespace nil3
