#include "nil3/core.hpp"

namespace nil3 {

Eigen::Matrix3d metric_at(const Point& p, const AmbientParams& amb) {
    const double w = 2.0 * amb.tau * p.x;
    Eigen::Matrix3d g;
    // From expanding dx^2 + dy^2 + (w*dy - dz)^2.
    g << 1.0, 0.0, 0.0,
         0.0, 1.0 + w * w, -w,
         0.0, -w, 1.0;
    return g;
}

std::array<CoordVec, 3> frame_at(const Point& p, const AmbientParams& amb) {
    return {CoordVec{1.0, 0.0, 0.0},
            CoordVec{0.0, 1.0, 2.0 * amb.tau * p.x},
            CoordVec{0.0, 0.0, 1.0}};
}

FrameVec connection_frame(int i, int j, const AmbientParams& amb) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("connection_frame: indices must be in 1..3");
    const double tau = amb.tau;
    // nabla_{E1}E2 = tau*E3, nabla_{E2}E1 = -tau*E3,
    // nabla_{E1}E3 = nabla_{E3}E1 = -tau*E2,
    // nabla_{E2}E3 = nabla_{E3}E2 = tau*E1, diagonal terms vanish.
    if (i == 1 && j == 2) return {0.0, 0.0, tau};
    if (i == 2 && j == 1) return {0.0, 0.0, -tau};
    if ((i == 1 && j == 3) || (i == 3 && j == 1)) return {0.0, -tau, 0.0};
    if ((i == 2 && j == 3) || (i == 3 && j == 2)) return {tau, 0.0, 0.0};
    return {0.0, 0.0, 0.0};
}

FrameVec covariant_derivative(const FrameVec& base, const FrameVec& field,
                              const FrameVec& field_deriv, const AmbientParams& amb) {
    FrameVec out = field_deriv;
    const double b[3] = {base.a1, base.a2, base.a3};
    const double f[3] = {field.a1, field.a2, field.a3};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const double w = b[i - 1] * f[j - 1];
            if (w == 0.0) continue;
            out = out + w * connection_frame(i, j, amb);
        }
    }
    return out;
}

double bundle_curvature(const AmbientParams& amb) { return amb.tau; }

FrameVec to_frame(const CoordVec& v, const Point& p, const AmbientParams& amb) {
    // Inverting E1 = d/dx, E2 = d/dy + 2*tau*x*d/dz, E3 = d/dz.
    return {v.cx, v.cy, v.cz - 2.0 * amb.tau * p.x * v.cy};
}

CoordVec to_coord(const FrameVec& v, const Point& p, const AmbientParams& amb) {
    return {v.a1, v.a2, v.a3 + 2.0 * amb.tau * p.x * v.a2};
}

}  // namespace nil3
