#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace nil3 {

/// Radius profile r(t) of a surface of revolution about the y-axis, together
/// with its first two derivatives and the left end t0 of its domain.
/// r must stay strictly positive on the domain.
struct Meridian {
    std::function<double(double)> r;
    std::function<double(double)> dr;
    std::function<double(double)> ddr;
    double t0 = 0.0;
};

inline Meridian cosh_meridian() {
    return {[](double t) { return std::cosh(t); },
            [](double t) { return std::sinh(t); },
            [](double t) { return std::cosh(t); },
            0.0};
}

inline Meridian exp_meridian() {
    return {[](double t) { return std::exp(t); },
            [](double t) { return std::exp(t); },
            [](double t) { return std::exp(t); },
            0.0};
}

inline Meridian quadratic_meridian() {
    return {[](double t) { return 1.0 + t * t; },
            [](double t) { return 2.0 * t; },
            [](double) { return 2.0; },
            0.0};
}

inline Meridian constant_meridian(double radius) {
    if (!(radius > 0.0))
        throw std::invalid_argument("constant_meridian: radius must be > 0");
    return {[radius](double) { return radius; },
            [](double) { return 0.0; },
            [](double) { return 0.0; },
            0.0};
}

/// r(t) = neck*cosh(t/neck): the Euclidean catenoid profile, minimal at tau = 0.
inline Meridian catenoid_meridian(double neck) {
    if (!(neck > 0.0))
        throw std::invalid_argument("catenoid_meridian: neck radius must be > 0");
    return {[neck](double t) { return neck * std::cosh(t / neck); },
            [neck](double t) { return std::sinh(t / neck); },
            [neck](double t) { return std::cosh(t / neck) / neck; },
            0.0};
}

}  // namespace nil3
