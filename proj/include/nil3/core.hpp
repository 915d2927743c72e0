#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace nil3 {

/// Parameters of the ambient metric family on R^3:
///   ds^2 = dx^2 + dy^2 + (2*tau*x*dy - dz)^2.
/// tau >= 0 is the bundle curvature; tau = 0 degenerates to flat R^3.
struct AmbientParams {
    double tau;

    explicit AmbientParams(double tau_) : tau(tau_) {
        if (!(tau >= 0.0))
            throw std::invalid_argument("AmbientParams: tau must be >= 0");
    }
};

/// Point in global coordinates (x, y, z).
struct Point {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Tangent vector expressed in the orthonormal frame (E1, E2, E3).
/// The metric restricted to frame coefficients is the Euclidean dot product.
struct FrameVec {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    double dot(const FrameVec& o) const { return a1 * o.a1 + a2 * o.a2 + a3 * o.a3; }
    double norm() const { return std::sqrt(dot(*this)); }

    FrameVec operator+(const FrameVec& o) const { return {a1 + o.a1, a2 + o.a2, a3 + o.a3}; }
    FrameVec operator-(const FrameVec& o) const { return {a1 - o.a1, a2 - o.a2, a3 - o.a3}; }
    FrameVec operator*(double s) const { return {a1 * s, a2 * s, a3 * s}; }
    FrameVec operator-() const { return {-a1, -a2, -a3}; }
};

inline FrameVec operator*(double s, const FrameVec& v) { return v * s; }

/// Tangent vector expressed in coordinate components (d/dx, d/dy, d/dz).
struct CoordVec {
    double cx = 0.0;
    double cy = 0.0;
    double cz = 0.0;

    CoordVec operator+(const CoordVec& o) const { return {cx + o.cx, cy + o.cy, cz + o.cz}; }
    CoordVec operator-(const CoordVec& o) const { return {cx - o.cx, cy - o.cy, cz - o.cz}; }
    CoordVec operator*(double s) const { return {cx * s, cy * s, cz * s}; }
};

inline CoordVec operator*(double s, const CoordVec& v) { return v * s; }

/// Metric tensor in coordinates at p, as a symmetric positive definite 3x3 matrix.
Eigen::Matrix3d metric_at(const Point& p, const AmbientParams& amb);

/// The orthonormal frame fields (E1, E2, E3) at p, in coordinate components:
///   E1 = d/dx,  E2 = d/dy + 2*tau*x * d/dz,  E3 = d/dz.
std::array<CoordVec, 3> frame_at(const Point& p, const AmbientParams& amb);

/// Levi-Civita connection on frame fields: nabla_{E_i} E_j as frame coefficients.
/// Indices are 1-based; constant in p.
FrameVec connection_frame(int i, int j, const AmbientParams& amb);

/// Covariant derivative nabla_base field, for a tangent field given by frame
/// coefficients. `field_deriv` must hold the directional derivatives of those
/// coefficients along `base` (the caller differentiates; this routine only adds
/// the connection correction):
///   nabla_base field = field_deriv + sum_{i,j} base_i * field_j * nabla_{E_i} E_j.
FrameVec covariant_derivative(const FrameVec& base, const FrameVec& field,
                              const FrameVec& field_deriv, const AmbientParams& amb);

/// Curvature of the fibration over the Euclidean plane; equals tau exactly.
double bundle_curvature(const AmbientParams& amb);

/// Change of basis: coordinate components -> frame coefficients at p.
FrameVec to_frame(const CoordVec& v, const Point& p, const AmbientParams& amb);

/// Change of basis: frame coefficients -> coordinate components at p.
CoordVec to_coord(const FrameVec& v, const Point& p, const AmbientParams& amb);

/// Central difference of a scalar function, O(h^2). Default step suits
/// unit-scale arguments.
template <class F>
double central_diff(F&& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace nil3
