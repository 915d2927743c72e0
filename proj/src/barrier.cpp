#include "nil3/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nil3/rev_surface.hpp"

namespace nil3 {

namespace {

// The chain below stays within exp arguments of about 4x this budget, well
// under the double overflow threshold of ~709.
constexpr double kCertifyBudget = 120.0;
constexpr double kRelTol = 1e-10;

double rel_slack(double lhs, double rhs) {
    return (rhs - lhs) / std::max(1.0, std::abs(lhs));
}

// Geometric t ladder over [0, span]: 0, then offsets from span*1e-6 up to
// span, log-spaced. Dense near the boundary circle where the estimates are
// tightest.
std::vector<double> t_ladder(double span, int nt) {
    std::vector<double> ts;
    ts.reserve(nt);
    ts.push_back(0.0);
    if (nt == 1) return ts;
    const double lo = span * 1e-6;
    for (int k = 1; k < nt; ++k) {
        const double f = static_cast<double>(k - 1) / (nt - 1 == 1 ? 1 : nt - 2);
        ts.push_back(lo * std::pow(span / lo, f));
    }
    ts.back() = span;
    return ts;
}

}  // namespace

double barrier_c0(double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("barrier_c0: tau must be >= 0");
    return 4.0 * tau * tau + 2.0 * tau + 1.0;
}

BarrierParams::BarrierParams(double c_, double tau_, double t_max_)
    : c(c_), tau(tau_), t_max(t_max_) {
    const double c0 = barrier_c0(tau);  // validates tau
    if (!(c > c0))
        throw std::invalid_argument("BarrierParams: c must exceed c0 = 4*tau^2 + 2*tau + 1");
    if (!(t_max > 0.0)) throw std::invalid_argument("BarrierParams: t_max must be > 0");
}

double barrier_t_limit(double c, double exp_budget) {
    if (!(c > 0.0)) throw std::invalid_argument("barrier_t_limit: c must be > 0");
    if (!(exp_budget > 1.0 / c) || exp_budget > 700.0)
        throw std::invalid_argument("barrier_t_limit: budget out of range");
    const auto arg = [c](double t) { return c * t + std::exp(c * t) / c; };
    double lo = 0.0, hi = exp_budget / c;
    if (arg(lo) >= exp_budget) return 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (arg(mid) <= exp_budget ? lo : hi) = mid;
    }
    return lo;
}

Meridian barrier_meridian(const BarrierParams& params) {
    const double c = params.c;
    const double t_guard = barrier_t_limit(c, 700.0);
    auto guard = [c, t_guard](double t) {
        if (t > t_guard)
            throw std::range_error("barrier_meridian: exp budget exceeded (t beyond the safe "
                                   "window)");
        return std::exp(c * t);
    };
    Meridian m;
    m.t0 = 0.0;
    m.r = [c, guard](double t) { return std::exp(guard(t) / c); };
    m.dr = [c, guard](double t) {
        const double e = guard(t);
        return e * std::exp(e / c);
    };
    m.ddr = [c, guard](double t) {
        const double e = guard(t);
        return e * (c + e) * std::exp(e / c);
    };
    return m;
}

BoundaryCircle boundary_circle(const BarrierParams& params) {
    return {std::exp(1.0 / params.c), 0.0};
}

double clearance_threshold(const BarrierParams&, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("clearance_threshold: eps must be > 0");
    return eps;  // plane distance of a surface point equals its height t
}

double convergence_profile(const BarrierParams& params, double R) {
    if (!(R > std::exp(1.0 / params.c)))
        throw std::domain_error("convergence_profile: R must exceed the boundary circle radius");
    return std::log(params.c * std::log(R)) / params.c;
}

Report CertResult::to_report() const {
    Report rep;
    report_add(rep, "surface", std::string("barrier"));
    report_add(rep, "c", c);
    report_add(rep, "tau", tau);
    report_add(rep, "grid_t", static_cast<double>(nt));
    report_add(rep, "grid_phi", static_cast<double>(nphi));
    report_add(rep, "t_lo", t_lo);
    report_add(rep, "t_hi", t_hi);
    report_add(rep, "requested_t_max", requested_t_max);
    report_add(rep, "clamped_by_exp_budget", std::string(clamped ? "yes" : "no"));
    report_add(rep, "max_H", max_H);
    report_add(rep, "argmax_t", argmax_t);
    report_add(rep, "argmax_phi", argmax_phi);
    report_add(rep, "max_H_at_boundary_circle", max_H_at_t0);
    report_add(rep, "numerator_upper_bound", chain_bound);
    for (const auto& s : steps) {
        report_add(rep, "chain_min_slack[" + s.name + "]", s.min_slack);
        report_add(rep, "chain_holds[" + s.name + "]", std::string(s.holds ? "yes" : "no"));
    }
    report_add(rep, "substitution_identity_max_residual", max_identity_residual);
    report_add(rep, "verdict", std::string(pass ? "pass" : "fail"));
    return rep;
}

CertResult certify(const BarrierParams& params, int nt, int nphi, FieldTable* samples) {
    if (nt < 2 || nphi < 2) throw std::invalid_argument("certify: grid too small");
    const double c = params.c;
    const double tau = params.tau;

    CertResult res;
    res.c = c;
    res.tau = tau;
    res.nt = nt;
    res.nphi = nphi;
    res.t_lo = 0.0;
    res.requested_t_max = params.t_max;
    const double safe = barrier_t_limit(c, kCertifyBudget);
    res.t_hi = std::min(params.t_max, safe);
    res.clamped = res.t_hi < params.t_max;
    res.chain_bound = barrier_c0(tau) - c;

    const Meridian m = barrier_meridian(params);
    const std::vector<double> ts = t_ladder(res.t_hi, nt);

    if (samples) {
        samples->columns = {"t", "phi", "H"};
        samples->rows.clear();
        samples->rows.reserve(static_cast<std::size_t>(nt) * nphi);
    }

    res.max_H = -std::numeric_limits<double>::infinity();
    res.max_H_at_t0 = -std::numeric_limits<double>::infinity();
    double drop_slack = std::numeric_limits<double>::infinity();
    double exp_slack = std::numeric_limits<double>::infinity();
    double radius_slack = std::numeric_limits<double>::infinity();
    double ident = 0.0;

    for (double t : ts) {
        const double r = m.r(t);
        const double dr = m.dr(t);
        const double ddr = m.ddr(t);
        const double ect = std::exp(c * t);
        // A1 drops the angular factors, A2 substitutes the derivatives,
        // A3 uses exp(c*t) >= 1, the bound uses r^2 > 1.
        const double a1 = 1.0 + dr * dr - r * ddr + 4.0 * tau * tau * r * r + 2.0 * tau * r * dr;
        const double a2 = 1.0 + r * r * (ect * (2.0 * tau - c) + 4.0 * tau * tau);
        const double a3 = 1.0 + r * r * (2.0 * tau - c + 4.0 * tau * tau);
        ident = std::max(ident, std::abs(a2 - a1) / std::max(1.0, std::abs(a1)));
        exp_slack = std::min(exp_slack, rel_slack(a2, a3));
        radius_slack = std::min(radius_slack, rel_slack(a3, res.chain_bound));

        for (int j = 0; j < nphi; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / nphi;
            const double s = std::sin(phi);
            const double co = std::cos(phi);
            const double num = 1.0 + dr * dr - r * ddr + 4.0 * tau * tau * r * r * s * s * s * s
                + 2.0 * tau * r * dr * s * co;
            drop_slack = std::min(drop_slack, rel_slack(num, a1));
            const double u = 2.0 * tau * r * s * co + dr;
            const double w2 = 1.0 + u * u;
            const double H = num / (2.0 * r * w2 * std::sqrt(w2));
            if (samples) samples->add_row({t, phi, H});
            if (H > res.max_H) {
                res.max_H = H;
                res.argmax_t = t;
                res.argmax_phi = phi;
            }
            if (t == 0.0) res.max_H_at_t0 = std::max(res.max_H_at_t0, H);
        }
    }

    res.steps[0] = {"drop_angular_factors", drop_slack, drop_slack >= -kRelTol};
    res.steps[1] = {"exp_ct_at_least_one", exp_slack, exp_slack >= -kRelTol};
    res.steps[2] = {"radius_exceeds_one", radius_slack, radius_slack >= -kRelTol};
    res.max_identity_residual = ident;
    res.pass = res.max_H < 0.0 && res.chain_bound < 0.0 && ident <= kRelTol &&
               res.steps[0].holds && res.steps[1].holds && res.steps[2].holds;
    return res;
}

}  // namespace nil3
