#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nil3/barrier.hpp"
#include "nil3/io.hpp"
#include "nil3/mesh.hpp"
#include "nil3/oracle.hpp"

namespace nil3 {

enum class HalfSpaceSide { NonNegativeY, NonPositiveY };
enum class MetricMode { Chart, PlaneGap };
enum class FamilyKind { EuclideanCatenoids, HeisenbergBarriers };
enum class ContactClass { None, Interior, Boundary };

/// The stationary surface S of a half-space comparison run. `core_boundary`
/// lists the vertices of its genuine boundary (the ring or patch edges the
/// ideal surface actually has); truncation rims are still boundary-marked in
/// the mesh but stand for the surface continuing outward, and are accounted
/// for by the exhaustion bookkeeping rather than by contact classification.
/// `chart` (when present) lets the minimality gate sample mean curvature over
/// [u0,u1] x [v0,v1].
struct TestSurface {
    TriMesh mesh;
    HalfSpaceSide side = HalfSpaceSide::NonNegativeY;
    std::vector<int> core_boundary;
    std::optional<ParametricSurface> chart;
    double u0 = 0.0, u1 = 0.0, v0 = 0.0, v1 = 0.0;
    double applied_shift = 0.0;
    std::string name;
};

/// Axis-aligned patch of the vertical plane {y = offset}, spanning
/// [-half_width, half_width]^2 in (x, z) with an n x n vertex grid. All four
/// edges are genuine boundary.
TestSurface plane_patch_surface(double offset, double half_width, int n, HalfSpaceSide side);

/// Barrier reflected through {y = sigma} by the ambient isometry
/// (x, y, z) -> (x, 2*sigma - y, -z): a surface curving toward the plane with
/// its ring at height 2*sigma. Radially truncated at max_radius. The ring
/// (the image of the boundary circle) is its genuine boundary.
TestSurface reflected_barrier_surface(const BarrierParams& params, double sigma,
                                      double max_radius, int nt, int nphi);

/// Translates the surface toward {y = 0} by eps (an ambient isometry; the
/// metric does not depend on y). May push the surface across the plane; the
/// side flag keeps its pre-shift meaning.
void shift_toward_plane(TestSurface& s, double eps);

/// Closest pair between two meshes under the symmetric vertex-to-triangle
/// distance in chart coordinates (BVH accelerated, deterministic).
struct NearestResult {
    double dist = 0.0;
    Point on_a{};
    Point on_b{};
};
NearestResult nearest_points(const TriMesh& a, const TriMesh& b);

/// Chart: nearest_points distance. PlaneGap: requires at least one mesh to be
/// contained in a plane {y = const} (within 1e-12) and returns the smallest
/// |y|-gap, the Riemannian distance to that plane.
double clearance(const TriMesh& a, const TriMesh& b, MetricMode mode = MetricMode::Chart);

struct FamilySpec {
    FamilyKind kind = FamilyKind::HeisenbergBarriers;
    double param_lo = 0.0;  // c or neck radius; sweep runs far end -> near end
    double param_hi = 0.0;
    int steps = 8;
    bool geometric = true;
    double max_radius = 4.0;  // radial truncation of family meshes
    int nt = 48;
    int nphi = 96;
};

struct SweepConfig {
    AmbientParams amb{0.0};
    FamilySpec family{};
    double delta = 1e-3;      // contact threshold on clearance
    double eps_shift = 0.0;   // shift applied to S before the run
    double t_max = 1e9;       // additional cap on the family parameter extent
    bool check_minimality = true;
    double minimality_tol = 1e-4;
    int minimality_samples = 200;
};

/// Raised when the minimality gate measures sup |H| above tolerance on S.
struct NonMinimalSurface : std::runtime_error {
    double sup_h;
    NonMinimalSurface(const std::string& what, double sup) : std::runtime_error(what), sup_h(sup) {}
};

struct SweepStep {
    double parameter = 0.0;
    double clearance = 0.0;
    double plane_gap = 0.0;       // only meaningful when plane_gap_valid
    bool plane_gap_valid = false;
    bool modes_differ = false;    // chart vs plane gap disagree by > 10%
    double t_cap = 0.0;           // family truncation height at this parameter
    bool trunc_margin_ok = false; // omitted end plane distance > 2*clearance
};

struct BracketStep {
    double clear_param = 0.0;
    double contact_param = 0.0;
    double clear_clearance = 0.0;
    double contact_clearance = 0.0;
};

struct ExhaustionResult {
    double parameter = 0.0;
    double T = 0.0;              // points with t > T stay at plane distance > eps
    bool pass = false;
    double neighbor_lo = 0.0;
    double neighbor_hi = 0.0;
    bool neighbors_pass = false;  // the same window works at adjacent parameters
};

struct SweepReport {
    std::vector<SweepStep> curve;
    ContactClass classification = ContactClass::None;
    double contact_parameter = 0.0;   // valid unless classification == None
    Point contact_point{};
    double contact_clearance = 0.0;
    double dist_to_surface_boundary = 0.0;  // contact point to S's genuine boundary
    double dist_to_family_boundary = 0.0;   // contact point to the family boundary circle
    double dist_to_truncation_rims = 0.0;   // nearest truncation rim vertex (info)
    std::vector<BracketStep> brackets;
    ExhaustionResult exhaustion{};
    bool minimality_checked = false;
    double minimality_sup_h = 0.0;
    std::string note;     // proxy-metric and truncation caveats
    Report config_echo;   // scenario parameters, echoed into to_report()

    Report to_report() const;
    FieldTable clearance_table() const;
};

/// Half-space sweep: walk the family schedule from the far end toward the
/// near end, tracking clearance to S; on first contact (clearance < delta)
/// bisect the parameter bracket to relative width 1e-3, then classify the
/// contact point by its distance to the genuine boundaries of both surfaces.
SweepReport run_sweep(const TestSurface& s, const SweepConfig& cfg);

/// Window check for the compact-exhaustion argument: T with every family
/// point beyond t = T at plane distance > eps (plane distance equals |y|),
/// verified on the truncated mesh for `parameter` and for its two schedule
/// neighbors.
ExhaustionResult exhaustion_check(const SweepConfig& cfg, double parameter, double eps);

}  // namespace nil3
