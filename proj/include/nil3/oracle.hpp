#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "nil3/core.hpp"
#include "nil3/meridian.hpp"

namespace nil3 {

/// Step for the central-difference stencils, O(h^2) accurate. The default
/// suits unit-scale parameters and second derivatives.
struct NumericDiffPolicy {
    double h = 1e-4;
};

/// A chart patch (u, v) -> R^3 fed to the finite-difference machinery.
/// `du`/`dv` are optional analytic partials (coordinate components); when
/// absent they are replaced by central differences of `map`, which widens the
/// stencil to +/- 2h. `orientation` fixes the sign of the reported normal:
/// +1 selects the n with det[t_u, t_v, n] > 0 in frame coefficients, -1 the
/// opposite.
struct ParametricSurface {
    std::function<Point(double, double)> map;
    std::function<CoordVec(double, double)> du;
    std::function<CoordVec(double, double)> dv;
    double u_min = -std::numeric_limits<double>::infinity();
    double u_max = std::numeric_limits<double>::infinity();
    double v_min = -std::numeric_limits<double>::infinity();
    double v_max = std::numeric_limits<double>::infinity();
    int orientation = 1;
    std::string name;
};

/// Thrown when the Gram matrix of the chart tangents is numerically singular
/// (condition number above 1e8): the parametrization carries no usable
/// two-dimensional tangent plane there.
struct DegenerateParametrization : std::runtime_error {
    explicit DegenerateParametrization(const std::string& what) : std::runtime_error(what) {}
};

/// Chart tangents (d map/du, d map/dv) in coordinate components, analytic if
/// provided, else by central differences. Throws std::domain_error if the
/// stencil leaves the parameter rectangle.
std::pair<CoordVec, CoordVec> numeric_tangents(const ParametricSurface& srf, double u, double v,
                                               const NumericDiffPolicy& pol = {});

/// First and second fundamental forms of the chart at (u, v), computed purely
/// by finite differences plus the ambient connection: no surface-specific
/// closed forms enter. The normal comes from the null space of the 2x3 frame
/// tangent matrix (SVD), sign-fixed by `orientation`.
struct SurfaceForms {
    double G11, G12, G22;
    double B11, B12, B22;
    FrameVec normal;
};
SurfaceForms numeric_second_form(const ParametricSurface& srf, double u, double v,
                                 const AmbientParams& amb, const NumericDiffPolicy& pol = {});

/// Mean curvature assembled from numeric_second_form:
///   H = (G22*B11 - 2*G12*B12 + G11*B22) / (2*(G11*G22 - G12^2)).
double numeric_mean_curvature(const ParametricSurface& srf, double u, double v,
                              const AmbientParams& amb, const NumericDiffPolicy& pol = {});

/// Revolution chart for a meridian, with analytic first partials and the
/// left-handed normal convention (orientation -1) used by the closed forms.
ParametricSurface revolution_parametric(const Meridian& m, double t_min, double t_max,
                                        std::string name = "revolution");

/// Named surfaces for tests and the CLI.
struct CatalogParams {
    double plane_offset = 0.0;  // vertical_plane {y = plane_offset}
    double neck = 1.0;          // euclidean_catenoid neck radius
    double c = 4.0;             // barrier growth parameter
    double t_max = 2.0;         // parameter extent of revolution-type charts
    Meridian meridian{};        // required for name == "revolution"
};

/// name in {"vertical_plane", "euclidean_catenoid", "revolution", "barrier"};
/// anything else throws std::invalid_argument. Barrier validity (c > c0(tau))
/// is enforced by the barrier module.
ParametricSurface catalog(const std::string& name, const CatalogParams& params,
                          const AmbientParams& amb);

}  // namespace nil3
