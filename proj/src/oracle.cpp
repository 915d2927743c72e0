#include "nil3/oracle.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "nil3/barrier.hpp"
#include "nil3/rev_surface.hpp"

namespace nil3 {

namespace {

void require_inside(const ParametricSurface& srf, double u, double v, double margin) {
    if (u - margin < srf.u_min || u + margin > srf.u_max || v - margin < srf.v_min ||
        v + margin > srf.v_max)
        throw std::domain_error("oracle: difference stencil leaves the parameter rectangle of '" +
                                srf.name + "'");
}

CoordVec map_diff(const ParametricSurface& srf, double u0, double v0, double u1, double v1,
                  double two_h) {
    const Point a = srf.map(u1, v1);
    const Point b = srf.map(u0, v0);
    return {(a.x - b.x) / two_h, (a.y - b.y) / two_h, (a.z - b.z) / two_h};
}

CoordVec tangent_u(const ParametricSurface& srf, double u, double v, double h) {
    if (srf.du) return srf.du(u, v);
    return map_diff(srf, u - h, v, u + h, v, 2.0 * h);
}

CoordVec tangent_v(const ParametricSurface& srf, double u, double v, double h) {
    if (srf.dv) return srf.dv(u, v);
    return map_diff(srf, u, v - h, u, v + h, 2.0 * h);
}

// Frame coefficients of the chart tangents at (u, v).
struct FramePair {
    FrameVec tu, tv;
};

FramePair frame_tangents(const ParametricSurface& srf, double u, double v, double h,
                         const AmbientParams& amb) {
    const Point p = srf.map(u, v);
    return {to_frame(tangent_u(srf, u, v, h), p, amb), to_frame(tangent_v(srf, u, v, h), p, amb)};
}

}  // namespace

std::pair<CoordVec, CoordVec> numeric_tangents(const ParametricSurface& srf, double u, double v,
                                               const NumericDiffPolicy& pol) {
    if (!srf.map) throw std::invalid_argument("oracle: surface map not set");
    const double margin = (srf.du && srf.dv) ? 0.0 : pol.h;
    require_inside(srf, u, v, margin);
    return {tangent_u(srf, u, v, pol.h), tangent_v(srf, u, v, pol.h)};
}

SurfaceForms numeric_second_form(const ParametricSurface& srf, double u, double v,
                                 const AmbientParams& amb, const NumericDiffPolicy& pol) {
    if (!srf.map) throw std::invalid_argument("oracle: surface map not set");
    const double h = pol.h;
    // The outer stencil shifts by h; the inner tangents add another h when
    // they are finite differences themselves.
    const double margin = (srf.du && srf.dv) ? h : 2.0 * h;
    require_inside(srf, u, v, margin);

    const FramePair c = frame_tangents(srf, u, v, h, amb);

    SurfaceForms out{};
    out.G11 = c.tu.dot(c.tu);
    out.G12 = c.tu.dot(c.tv);
    out.G22 = c.tv.dot(c.tv);

    Eigen::Matrix<double, 2, 3> M;
    M << c.tu.a1, c.tu.a2, c.tu.a3, c.tv.a1, c.tv.a2, c.tv.a3;
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(M, Eigen::ComputeFullV);
    const double s0 = svd.singularValues()(0);
    const double s1 = svd.singularValues()(1);
    // cond(G) = (s0/s1)^2 for the Gram matrix of the rows.
    if (!(s1 > 0.0) || (s0 / s1) * (s0 / s1) > 1e8)
        throw DegenerateParametrization("oracle: tangent Gram matrix is numerically singular at '" +
                                        srf.name + "'");
    const Eigen::Vector3d nv = svd.matrixV().col(2);
    FrameVec n{nv(0), nv(1), nv(2)};
    const double triple = c.tu.a1 * (c.tv.a2 * n.a3 - c.tv.a3 * n.a2) -
                          c.tu.a2 * (c.tv.a1 * n.a3 - c.tv.a3 * n.a1) +
                          c.tu.a3 * (c.tv.a1 * n.a2 - c.tv.a2 * n.a1);
    if (triple * static_cast<double>(srf.orientation) < 0.0) n = -n;
    out.normal = n;

    // Coefficient derivatives of the tangent fields along u and v, then the
    // connection correction. Frame coefficients are position dependent, so the
    // shifted tangents are converted at their own base points.
    const FramePair up = frame_tangents(srf, u + h, v, h, amb);
    const FramePair um = frame_tangents(srf, u - h, v, h, amb);
    const FramePair vp = frame_tangents(srf, u, v + h, h, amb);
    const FramePair vm = frame_tangents(srf, u, v - h, h, amb);
    const double inv2h = 1.0 / (2.0 * h);
    const FrameVec dtu_du = (up.tu - um.tu) * inv2h;
    const FrameVec dtv_du = (up.tv - um.tv) * inv2h;
    const FrameVec dtv_dv = (vp.tv - vm.tv) * inv2h;

    const FrameVec nab_uu = covariant_derivative(c.tu, c.tu, dtu_du, amb);
    const FrameVec nab_uv = covariant_derivative(c.tu, c.tv, dtv_du, amb);
    const FrameVec nab_vv = covariant_derivative(c.tv, c.tv, dtv_dv, amb);
    out.B11 = nab_uu.dot(n);
    out.B12 = nab_uv.dot(n);
    out.B22 = nab_vv.dot(n);
    return out;
}

double numeric_mean_curvature(const ParametricSurface& srf, double u, double v,
                              const AmbientParams& amb, const NumericDiffPolicy& pol) {
    const SurfaceForms f = numeric_second_form(srf, u, v, amb, pol);
    const double det = f.G11 * f.G22 - f.G12 * f.G12;
    return (f.G22 * f.B11 - 2.0 * f.G12 * f.B12 + f.G11 * f.B22) / (2.0 * det);
}

ParametricSurface revolution_parametric(const Meridian& m, double t_min, double t_max,
                                        std::string name) {
    if (!m.r || !m.dr) throw std::invalid_argument("revolution_parametric: meridian not set");
    if (!(t_max > t_min)) throw std::invalid_argument("revolution_parametric: empty t range");
    ParametricSurface srf;
    srf.map = [m](double t, double phi) { return immerse(m, SurfacePoint(t, phi)); };
    srf.du = [m](double t, double phi) {
        const double dr = m.dr(t);
        return CoordVec{-dr * std::sin(phi), 1.0, dr * std::cos(phi)};
    };
    srf.dv = [m](double t, double phi) {
        const double r = m.r(t);
        return CoordVec{-r * std::cos(phi), 0.0, -r * std::sin(phi)};
    };
    srf.u_min = t_min;
    srf.u_max = t_max;
    srf.orientation = -1;  // matches the closed-form normal N = -v1 x v2
    srf.name = std::move(name);
    return srf;
}

ParametricSurface catalog(const std::string& name, const CatalogParams& params,
                          const AmbientParams& amb) {
    if (name == "vertical_plane") {
        ParametricSurface srf;
        const double d = params.plane_offset;
        srf.map = [d](double u, double v) { return Point{u, d, v}; };
        srf.du = [](double, double) { return CoordVec{1.0, 0.0, 0.0}; };
        srf.dv = [](double, double) { return CoordVec{0.0, 0.0, 1.0}; };
        srf.name = "vertical_plane";
        return srf;
    }
    if (name == "euclidean_catenoid") {
        Meridian m = catenoid_meridian(params.neck);
        m.t0 = -params.t_max;
        return revolution_parametric(m, -params.t_max, params.t_max, "euclidean_catenoid");
    }
    if (name == "revolution") {
        if (!params.meridian.r)
            throw std::invalid_argument("catalog: 'revolution' needs a meridian");
        return revolution_parametric(params.meridian, params.meridian.t0, params.t_max,
                                     "revolution");
    }
    if (name == "barrier") {
        const BarrierParams bp(params.c, amb.tau, params.t_max);
        const double t_hi = std::min(params.t_max, barrier_t_limit(params.c, 120.0));
        return revolution_parametric(barrier_meridian(bp), 0.0, t_hi, "barrier");
    }
    throw std::invalid_argument("catalog: unknown surface '" + name + "'");
}

}  // namespace nil3
