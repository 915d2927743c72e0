#pragma once

#include "nil3/core.hpp"
#include "nil3/meridian.hpp"

namespace nil3 {

/// Parameter point of a surface of revolution. phi is reduced mod 2*pi into
/// [0, 2*pi) on construction; t must lie in the meridian's domain.
struct SurfacePoint {
    double t;
    double phi;

    SurfacePoint(double t_, double phi_);
};

/// Position of the (t, phi) parameter point:
///   f(t, phi) = (-r(t)*sin(phi), t, r(t)*cos(phi)).
/// The surface is invariant under rotation about the y-axis, which is an
/// isometry of the ambient metric for every tau.
Point immerse(const Meridian& m, const SurfacePoint& sp);

/// Coordinate tangents f_t, f_phi converted to frame coefficients.
struct TangentBasis {
    FrameVec v1;  // d/dt direction
    FrameVec v2;  // d/phi direction
};
TangentBasis tangents(const Meridian& m, const SurfacePoint& sp, const AmbientParams& amb);

/// Unit normal in frame coefficients, oriented so that N = -v1 x v2 (frame
/// cross product) after normalization. w is the normalizing weight
///   W = sqrt(1 + (2*tau*r*sin(phi)*cos(phi) + r')^2),
/// with |v1 x v2| = r*W.
struct UnitNormal {
    FrameVec n;
    double w;
};
UnitNormal unit_normal(const Meridian& m, const SurfacePoint& sp, const AmbientParams& amb);

/// First and second fundamental forms in the (t, phi) basis, plus the weight W.
/// B_ij = <nabla_{v_i} v_j, N> with the normal above.
struct FundamentalForms {
    double G11, G12, G22;
    double B11, B12, B22;
    double W;
};
FundamentalForms fundamental_forms(const Meridian& m, const SurfacePoint& sp,
                                   const AmbientParams& amb);

/// Mean curvature from the closed-form numerator:
///   H = (1 + r'^2 - r*r'' + 4*tau^2*r^2*sin(phi)^4 + 2*tau*r*r'*sin(phi)*cos(phi))
///       / (2*r*W^3).
/// Independent of tau on the meridian plane phi in {0, pi}.
double mean_curvature(const Meridian& m, const SurfacePoint& sp, const AmbientParams& amb);

/// H assembled from the forms: (G22*B11 - 2*G12*B12 + G11*B22) / (2*det G).
/// Agrees with mean_curvature up to rounding; kept separate so the two routes
/// can cross-check each other.
double mean_curvature_assembled(const FundamentalForms& f);

}  // namespace nil3
