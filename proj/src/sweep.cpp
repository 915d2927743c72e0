#include "nil3/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "nil3/rev_surface.hpp"

namespace nil3 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dist3(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Closest point on triangle abc to p, by barycentric region tests.
Point closest_on_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    const double abx = b.x - a.x, aby = b.y - a.y, abz = b.z - a.z;
    const double acx = c.x - a.x, acy = c.y - a.y, acz = c.z - a.z;
    const double apx = p.x - a.x, apy = p.y - a.y, apz = p.z - a.z;

    const double d1 = abx * apx + aby * apy + abz * apz;
    const double d2 = acx * apx + acy * apy + acz * apz;
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const double bpx = p.x - b.x, bpy = p.y - b.y, bpz = p.z - b.z;
    const double d3 = abx * bpx + aby * bpy + abz * bpz;
    const double d4 = acx * bpx + acy * bpy + acz * bpz;
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return {a.x + v * abx, a.y + v * aby, a.z + v * abz};
    }

    const double cpx = p.x - c.x, cpy = p.y - c.y, cpz = p.z - c.z;
    const double d5 = abx * cpx + aby * cpy + abz * cpz;
    const double d6 = acx * cpx + acy * cpy + acz * cpz;
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return {a.x + w * acx, a.y + w * acy, a.z + w * acz};
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return {b.x + w * (c.x - b.x), b.y + w * (c.y - b.y), b.z + w * (c.z - b.z)};
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    return {a.x + abx * v + acx * w, a.y + aby * v + acy * w, a.z + abz * v + acz * w};
}

// Median-split AABB tree over triangles; queries prune against a shared best
// distance, which makes whole-mesh minimum searches close to linear time.
class TriBvh {
public:
    explicit TriBvh(const TriMesh& mesh) {
        const std::size_t n = mesh.tris.size();
        tris_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            tris_[i] = {mesh.vertices[mesh.tris[i][0]], mesh.vertices[mesh.tris[i][1]],
                        mesh.vertices[mesh.tris[i][2]]};
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
        nodes_.reserve(2 * n);
        root_ = build(0, static_cast<int>(n));
    }

    // Updates best/on_self/query_witness when a closer point is found.
    void query(const Point& p, double& best, Point& on_self) const {
        if (root_ < 0) return;
        struct Entry {
            int node;
            double d;
        };
        Entry stack[64];
        int top = 0;
        stack[top++] = {root_, box_dist(nodes_[root_], p)};
        while (top > 0) {
            const Entry e = stack[--top];
            if (e.d >= best) continue;
            const Node& nd = nodes_[e.node];
            if (nd.count > 0) {
                for (int i = nd.first; i < nd.first + nd.count; ++i) {
                    const Tri& t = tris_[order_[i]];
                    const Point q = closest_on_triangle(p, t.a, t.b, t.c);
                    const double d = dist3(p, q);
                    if (d < best) {
                        best = d;
                        on_self = q;
                    }
                }
                continue;
            }
            const double dl = box_dist(nodes_[nd.left], p);
            const double dr = box_dist(nodes_[nd.right], p);
            // push the farther child first so the nearer one is popped next
            if (dl < dr) {
                if (dr < best) stack[top++] = {nd.right, dr};
                if (dl < best) stack[top++] = {nd.left, dl};
            } else {
                if (dl < best) stack[top++] = {nd.left, dl};
                if (dr < best) stack[top++] = {nd.right, dr};
            }
        }
    }

private:
    struct Tri {
        Point a, b, c;
    };
    struct Node {
        double mn[3], mx[3];
        int left = -1, right = -1;
        int first = 0, count = 0;
    };

    static double box_dist(const Node& n, const Point& p) {
        const double c[3] = {p.x, p.y, p.z};
        double s = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double d = std::max({n.mn[k] - c[k], c[k] - n.mx[k], 0.0});
            s += d * d;
        }
        return std::sqrt(s);
    }

    void grow(Node& n, const Tri& t) {
        const Point* ps[3] = {&t.a, &t.b, &t.c};
        for (const Point* p : ps) {
            const double c[3] = {p->x, p->y, p->z};
            for (int k = 0; k < 3; ++k) {
                n.mn[k] = std::min(n.mn[k], c[k]);
                n.mx[k] = std::max(n.mx[k], c[k]);
            }
        }
    }

    double centroid(int tri, int axis) const {
        const Tri& t = tris_[tri];
        const double a[3] = {t.a.x, t.a.y, t.a.z};
        const double b[3] = {t.b.x, t.b.y, t.b.z};
        const double c[3] = {t.c.x, t.c.y, t.c.z};
        return (a[axis] + b[axis] + c[axis]) / 3.0;
    }

    int build(int first, int count) {
        if (count == 0) return -1;
        Node n;
        for (int k = 0; k < 3; ++k) {
            n.mn[k] = kInf;
            n.mx[k] = -kInf;
        }
        for (int i = first; i < first + count; ++i) grow(n, tris_[order_[i]]);
        if (count <= 8) {
            n.first = first;
            n.count = count;
            nodes_.push_back(n);
            return static_cast<int>(nodes_.size()) - 1;
        }
        int axis = 0;
        double span = n.mx[0] - n.mn[0];
        for (int k = 1; k < 3; ++k)
            if (n.mx[k] - n.mn[k] > span) {
                span = n.mx[k] - n.mn[k];
                axis = k;
            }
        const int mid = first + count / 2;
        std::nth_element(order_.begin() + first, order_.begin() + mid,
                         order_.begin() + first + count, [this, axis](int lhs, int rhs) {
                             return centroid(lhs, axis) < centroid(rhs, axis);
                         });
        const int node_id = static_cast<int>(nodes_.size());
        nodes_.push_back(n);
        const int l = build(first, mid - first);
        const int r = build(mid, first + count - mid);
        nodes_[node_id].left = l;
        nodes_[node_id].right = r;
        return node_id;
    }

    std::vector<Tri> tris_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

bool constant_y(const TriMesh& m, double& y_out) {
    if (m.vertices.empty()) return false;
    const double y0 = m.vertices[0].y;
    for (const auto& v : m.vertices)
        if (std::abs(v.y - y0) > 1e-12) return false;
    y_out = y0;
    return true;
}

void check_side(const TriMesh& mesh, HalfSpaceSide side, const std::string& who) {
    for (const auto& v : mesh.vertices) {
        const bool ok = side == HalfSpaceSide::NonNegativeY ? v.y >= -1e-12 : v.y <= 1e-12;
        if (!ok)
            throw std::invalid_argument(who + ": vertices leave the declared half-space side");
    }
}

std::vector<int> ring_ids(int row, int nphi) {
    std::vector<int> ids(nphi);
    for (int j = 0; j < nphi; ++j) ids[j] = row * nphi + j;
    return ids;
}

struct FamilyMesh {
    TriMesh mesh;
    double t_cap = 0.0;
    std::vector<int> ring0;  // the genuine boundary circle (t = 0)
};

double family_t_cap(const SweepConfig& cfg, double param) {
    if (cfg.family.kind == FamilyKind::HeisenbergBarriers) {
        const BarrierParams bp(param, cfg.amb.tau);
        return std::min(cfg.t_max, convergence_profile(bp, cfg.family.max_radius));
    }
    if (!(cfg.family.max_radius > param))
        throw std::invalid_argument("run_sweep: family max_radius must exceed the neck radius");
    return std::min(cfg.t_max, param * std::acosh(cfg.family.max_radius / param));
}

FamilyMesh build_family(const SweepConfig& cfg, double param) {
    FamilyMesh fm;
    fm.t_cap = family_t_cap(cfg, param);
    const Meridian m = cfg.family.kind == FamilyKind::HeisenbergBarriers
                           ? barrier_meridian(BarrierParams(param, cfg.amb.tau))
                           : catenoid_meridian(param);
    fm.mesh = mesh_revolution(m, 0.0, fm.t_cap, cfg.family.nt, cfg.family.nphi);
    fm.ring0 = ring_ids(0, cfg.family.nphi);
    return fm;
}

std::vector<double> schedule(const FamilySpec& f) {
    std::vector<double> ps(f.steps);
    for (int k = 0; k < f.steps; ++k) {
        const double frac = static_cast<double>(k) / (f.steps - 1);
        ps[k] = f.geometric ? f.param_lo * std::pow(f.param_hi / f.param_lo, frac)
                            : f.param_lo + frac * (f.param_hi - f.param_lo);
    }
    // far end first: large c for barriers, small neck for catenoids
    if (f.kind == FamilyKind::HeisenbergBarriers) std::reverse(ps.begin(), ps.end());
    return ps;
}

double min_dist_to_vertices(const Point& p, const TriMesh& mesh, const std::vector<int>& ids) {
    double best = kInf;
    for (int id : ids) best = std::min(best, dist3(p, mesh.vertices[id]));
    return best;
}

double sup_abs_mean_curvature(const TestSurface& s, const AmbientParams& amb, int samples) {
    const ParametricSurface& chart = *s.chart;
    const NumericDiffPolicy pol{};
    const double mu = std::max(3.0 * pol.h, 1e-3 * (s.u1 - s.u0));
    const double mv = std::max(3.0 * pol.h, 1e-3 * (s.v1 - s.v0));
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> du(s.u0 + mu, s.u1 - mu);
    std::uniform_real_distribution<double> dv(s.v0 + mv, s.v1 - mv);
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double u = du(rng);
        const double v = dv(rng);
        sup = std::max(sup, std::abs(numeric_mean_curvature(chart, u, v, amb, pol)));
    }
    return sup;
}

}  // namespace

TestSurface plane_patch_surface(double offset, double half_width, int n, HalfSpaceSide side) {
    if (!(half_width > 0.0)) throw std::invalid_argument("plane_patch_surface: half_width <= 0");
    if (n < 2) throw std::invalid_argument("plane_patch_surface: need n >= 2");
    TestSurface s;
    s.mesh = mesh_parametric([offset](double u, double v) { return Point{u, offset, v}; },
                             -half_width, half_width, n, -half_width, half_width, n);
    s.side = side;
    check_side(s.mesh, side, "plane_patch_surface");
    for (std::size_t i = 0; i < s.mesh.vertices.size(); ++i)
        if (s.mesh.boundary[i]) s.core_boundary.push_back(static_cast<int>(i));
    ParametricSurface chart;
    chart.map = [offset](double u, double v) { return Point{u, offset, v}; };
    chart.du = [](double, double) { return CoordVec{1.0, 0.0, 0.0}; };
    chart.dv = [](double, double) { return CoordVec{0.0, 0.0, 1.0}; };
    chart.u_min = -half_width;
    chart.u_max = half_width;
    chart.v_min = -half_width;
    chart.v_max = half_width;
    chart.name = "plane_patch";
    s.chart = chart;
    s.u0 = -half_width;
    s.u1 = half_width;
    s.v0 = -half_width;
    s.v1 = half_width;
    s.name = "plane_patch";
    return s;
}

TestSurface reflected_barrier_surface(const BarrierParams& params, double sigma,
                                      double max_radius, int nt, int nphi) {
    if (!(sigma > 0.0)) throw std::invalid_argument("reflected_barrier_surface: sigma must be > 0");
    const double t1 = std::min(params.t_max, convergence_profile(params, max_radius));
    const Meridian m = barrier_meridian(params);
    // (x, y, z) -> (x, 2*sigma - y, -z) is an ambient isometry for every tau.
    auto iso_map = [m, sigma](double t, double phi) {
        const Point p = immerse(m, SurfacePoint(t, phi));
        return Point{p.x, 2.0 * sigma - p.y, -p.z};
    };
    TestSurface s;
    s.mesh = mesh_parametric(iso_map, 0.0, t1, nt, 0.0, 2.0 * std::numbers::pi, nphi,
                             /*weld_v=*/true);
    s.side = HalfSpaceSide::NonNegativeY;
    check_side(s.mesh, s.side, "reflected_barrier_surface");
    s.core_boundary = ring_ids(0, nphi);  // image of the boundary circle
    ParametricSurface chart;
    chart.map = iso_map;
    chart.du = [m](double t, double phi) {
        const double dr = m.dr(t);
        return CoordVec{-dr * std::sin(phi), -1.0, -dr * std::cos(phi)};
    };
    chart.dv = [m](double t, double phi) {
        const double r = m.r(t);
        return CoordVec{-r * std::cos(phi), 0.0, r * std::sin(phi)};
    };
    chart.u_min = 0.0;
    chart.u_max = t1;
    chart.orientation = -1;
    chart.name = "reflected_barrier";
    s.chart = chart;
    s.u0 = 0.0;
    s.u1 = t1;
    s.v0 = 0.0;
    s.v1 = 2.0 * std::numbers::pi;
    s.name = "reflected_barrier";
    return s;
}

void shift_toward_plane(TestSurface& s, double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("shift_toward_plane: eps must be >= 0");
    const double dy = s.side == HalfSpaceSide::NonNegativeY ? -eps : eps;
    for (auto& v : s.mesh.vertices) v.y += dy;
    s.applied_shift += eps;
}

NearestResult nearest_points(const TriMesh& a, const TriMesh& b) {
    if (a.vertices.empty() || b.vertices.empty())
        throw std::invalid_argument("nearest_points: empty mesh");
    NearestResult res;
    res.dist = kInf;
    {
        const TriBvh bvh_b(b);
        for (const auto& v : a.vertices) {
            double before = res.dist;
            Point q{};
            bvh_b.query(v, res.dist, q);
            if (res.dist < before) {
                res.on_a = v;
                res.on_b = q;
            }
        }
    }
    {
        const TriBvh bvh_a(a);
        for (const auto& v : b.vertices) {
            double before = res.dist;
            Point q{};
            bvh_a.query(v, res.dist, q);
            if (res.dist < before) {
                res.on_a = q;
                res.on_b = v;
            }
        }
    }
    return res;
}

double clearance(const TriMesh& a, const TriMesh& b, MetricMode mode) {
    if (mode == MetricMode::Chart) return nearest_points(a, b).dist;
    double ya = 0.0, yb = 0.0;
    const bool ca = constant_y(a, ya);
    const bool cb = constant_y(b, yb);
    if (ca && cb) return std::abs(ya - yb);
    if (ca || cb) {
        const double plane_y = ca ? ya : yb;
        const TriMesh& other = ca ? b : a;
        double best = kInf;
        for (const auto& v : other.vertices) best = std::min(best, std::abs(v.y - plane_y));
        return best;
    }
    throw std::invalid_argument("clearance: plane-gap mode needs a constant-y mesh");
}

ExhaustionResult exhaustion_check(const SweepConfig& cfg, double parameter, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("exhaustion_check: eps must be > 0");
    ExhaustionResult res;
    res.parameter = parameter;
    res.T = eps;  // plane distance equals |y| = t on the family surfaces
    auto beyond_window_clear = [&](double param) {
        const FamilyMesh fm = build_family(cfg, param);
        for (const auto& v : fm.mesh.vertices)
            if (v.y > res.T + 1e-12 && std::abs(v.y) <= eps) return false;
        return true;
    };
    res.pass = beyond_window_clear(parameter);
    const FamilySpec& f = cfg.family;
    const double g = f.geometric && f.steps > 1
                         ? std::pow(f.param_hi / f.param_lo, 0.5 / (f.steps - 1))
                         : 1.0;
    const double lin = f.steps > 1 ? 0.5 * (f.param_hi - f.param_lo) / (f.steps - 1) : 0.0;
    res.neighbor_lo = std::max(f.param_lo, f.geometric ? parameter / g : parameter - lin);
    res.neighbor_hi = std::min(f.param_hi, f.geometric ? parameter * g : parameter + lin);
    res.neighbors_pass = beyond_window_clear(res.neighbor_lo) && beyond_window_clear(res.neighbor_hi);
    return res;
}

SweepReport run_sweep(const TestSurface& s, const SweepConfig& cfg) {
    const FamilySpec& f = cfg.family;
    if (!(cfg.delta > 0.0)) throw std::invalid_argument("run_sweep: delta must be > 0");
    if (f.steps < 2) throw std::invalid_argument("run_sweep: schedule needs at least 2 steps");
    if (!(f.param_hi > f.param_lo) || !(f.param_lo > 0.0))
        throw std::invalid_argument("run_sweep: bad parameter range");
    if (f.kind == FamilyKind::HeisenbergBarriers) {
        if (!(f.param_lo > barrier_c0(cfg.amb.tau)))
            throw std::invalid_argument("run_sweep: family parameters must stay above c0(tau)");
        if (!(f.max_radius > std::exp(1.0 / f.param_lo)))
            throw std::invalid_argument(
                "run_sweep: family max_radius must exceed every boundary circle radius");
    }
    if (s.mesh.vertices.empty()) throw std::invalid_argument("run_sweep: empty test surface");

    SweepReport rep;
    rep.note = "distances are chart-coordinate proxies for Riemannian distances (exact for the "
               "plane gap |y|); truncation rims stand for the surfaces continuing outward";

    report_add(rep.config_echo, "surface", s.name);
    report_add(rep.config_echo, "side",
               std::string(s.side == HalfSpaceSide::NonNegativeY ? "y>=0" : "y<=0"));
    report_add(rep.config_echo, "applied_shift", s.applied_shift);
    report_add(rep.config_echo, "tau", cfg.amb.tau);
    report_add(rep.config_echo, "family",
               std::string(f.kind == FamilyKind::HeisenbergBarriers ? "heisenberg_barriers"
                                                                    : "euclidean_catenoids"));
    report_add(rep.config_echo, "param_lo", f.param_lo);
    report_add(rep.config_echo, "param_hi", f.param_hi);
    report_add(rep.config_echo, "schedule_steps", static_cast<double>(f.steps));
    report_add(rep.config_echo, "spacing", std::string(f.geometric ? "geometric" : "linear"));
    report_add(rep.config_echo, "family_max_radius", f.max_radius);
    double s_max_radius = 0.0;
    for (const auto& v : s.mesh.vertices)
        s_max_radius = std::max(s_max_radius, std::sqrt(v.x * v.x + v.z * v.z));
    report_add(rep.config_echo, "family_radial_margin", f.max_radius - s_max_radius);
    report_add(rep.config_echo, "delta", cfg.delta);
    report_add(rep.config_echo, "eps_shift", cfg.eps_shift);

    if (cfg.check_minimality) {
        if (!s.chart)
            throw std::invalid_argument("run_sweep: minimality check needs a surface chart");
        rep.minimality_checked = true;
        rep.minimality_sup_h = sup_abs_mean_curvature(s, cfg.amb, cfg.minimality_samples);
        if (rep.minimality_sup_h > cfg.minimality_tol)
            throw NonMinimalSurface("run_sweep: test surface fails the minimality gate, sup|H| = " +
                                        format_double(rep.minimality_sup_h),
                                    rep.minimality_sup_h);
    }

    double y_s = 0.0;
    const bool s_is_plane = constant_y(s.mesh, y_s);

    const std::vector<double> ps = schedule(f);
    int hit_index = -1;
    FamilyMesh fm_hit;
    NearestResult nr_hit;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        FamilyMesh fm = build_family(cfg, ps[k]);
        const NearestResult nr = nearest_points(s.mesh, fm.mesh);
        SweepStep step;
        step.parameter = ps[k];
        step.clearance = nr.dist;
        step.t_cap = fm.t_cap;
        step.trunc_margin_ok = fm.t_cap > 2.0 * nr.dist;
        if (s_is_plane) {
            step.plane_gap = clearance(s.mesh, fm.mesh, MetricMode::PlaneGap);
            step.plane_gap_valid = true;
            step.modes_differ =
                std::abs(step.plane_gap - step.clearance) >
                0.1 * std::max(std::abs(step.plane_gap), std::abs(step.clearance));
        }
        rep.curve.push_back(step);
        if (nr.dist < cfg.delta) {
            hit_index = static_cast<int>(k);
            fm_hit = std::move(fm);
            nr_hit = nr;
            break;
        }
    }

    if (hit_index < 0) {
        rep.classification = ContactClass::None;
        rep.exhaustion = exhaustion_check(cfg, ps.back(), cfg.eps_shift > 0.0 ? cfg.eps_shift
                                                                              : cfg.delta);
        return rep;
    }

    double contact_param = ps[hit_index];
    if (hit_index == 0) {
        rep.note += "; contact already present at the far end of the schedule";
    } else {
        double clear_param = ps[hit_index - 1];
        double clear_d = rep.curve[hit_index - 1].clearance;
        double hit_d = nr_hit.dist;
        while (std::abs(clear_param - contact_param) >
               1e-3 * std::max(std::abs(clear_param), std::abs(contact_param))) {
            const double mid = 0.5 * (clear_param + contact_param);
            const FamilyMesh fm = build_family(cfg, mid);
            const NearestResult nr = nearest_points(s.mesh, fm.mesh);
            if (nr.dist < cfg.delta) {
                contact_param = mid;
                hit_d = nr.dist;
            } else {
                clear_param = mid;
                clear_d = nr.dist;
            }
            rep.brackets.push_back({clear_param, contact_param, clear_d, hit_d});
        }
        fm_hit = build_family(cfg, contact_param);
        nr_hit = nearest_points(s.mesh, fm_hit.mesh);
    }

    rep.contact_parameter = contact_param;
    rep.contact_clearance = nr_hit.dist;
    rep.contact_point = {0.5 * (nr_hit.on_a.x + nr_hit.on_b.x),
                         0.5 * (nr_hit.on_a.y + nr_hit.on_b.y),
                         0.5 * (nr_hit.on_a.z + nr_hit.on_b.z)};

    rep.dist_to_surface_boundary =
        min_dist_to_vertices(rep.contact_point, s.mesh, s.core_boundary);
    rep.dist_to_family_boundary =
        min_dist_to_vertices(rep.contact_point, fm_hit.mesh, fm_hit.ring0);

    std::vector<int> rims;
    for (std::size_t i = 0; i < s.mesh.vertices.size(); ++i)
        if (s.mesh.boundary[i] &&
            std::find(s.core_boundary.begin(), s.core_boundary.end(), static_cast<int>(i)) ==
                s.core_boundary.end())
            rims.push_back(static_cast<int>(i));
    double rim_dist = rims.empty() ? kInf : min_dist_to_vertices(rep.contact_point, s.mesh, rims);
    std::vector<int> fam_rims;
    for (std::size_t i = 0; i < fm_hit.mesh.vertices.size(); ++i)
        if (fm_hit.mesh.boundary[i] &&
            std::find(fm_hit.ring0.begin(), fm_hit.ring0.end(), static_cast<int>(i)) ==
                fm_hit.ring0.end())
            fam_rims.push_back(static_cast<int>(i));
    if (!fam_rims.empty())
        rim_dist = std::min(rim_dist,
                            min_dist_to_vertices(rep.contact_point, fm_hit.mesh, fam_rims));
    rep.dist_to_truncation_rims = rim_dist;

    rep.classification =
        std::min(rep.dist_to_surface_boundary, rep.dist_to_family_boundary) > cfg.delta
            ? ContactClass::Interior
            : ContactClass::Boundary;

    rep.exhaustion = exhaustion_check(cfg, contact_param,
                                      cfg.eps_shift > 0.0 ? cfg.eps_shift : cfg.delta);
    return rep;
}

Report SweepReport::to_report() const {
    Report rep = config_echo;
    report_add(rep, "schedule_evaluated", static_cast<double>(curve.size()));
    if (minimality_checked) report_add(rep, "minimality_sup_H", minimality_sup_h);
    const char* cls = classification == ContactClass::None
                          ? "none"
                          : classification == ContactClass::Interior ? "interior" : "boundary";
    report_add(rep, "classification", std::string(cls));
    if (classification != ContactClass::None) {
        report_add(rep, "contact_parameter", contact_parameter);
        report_add(rep, "contact_clearance", contact_clearance);
        report_add(rep, "contact_x", contact_point.x);
        report_add(rep, "contact_y", contact_point.y);
        report_add(rep, "contact_z", contact_point.z);
        report_add(rep, "dist_to_surface_boundary", dist_to_surface_boundary);
        report_add(rep, "dist_to_family_boundary", dist_to_family_boundary);
        report_add(rep, "dist_to_truncation_rims", dist_to_truncation_rims);
        report_add(rep, "bisection_steps", static_cast<double>(brackets.size()));
        if (!brackets.empty()) {
            report_add(rep, "bracket_clear_param", brackets.back().clear_param);
            report_add(rep, "bracket_contact_param", brackets.back().contact_param);
        }
    }
    report_add(rep, "exhaustion_T", exhaustion.T);
    report_add(rep, "exhaustion_pass", std::string(exhaustion.pass ? "yes" : "no"));
    report_add(rep, "exhaustion_neighbors_pass",
               std::string(exhaustion.neighbors_pass ? "yes" : "no"));
    report_add(rep, "note", note);
    return rep;
}

FieldTable SweepReport::clearance_table() const {
    FieldTable t;
    t.columns = {"parameter", "clearance", "plane_gap", "t_cap", "trunc_margin_ok"};
    for (const auto& s : curve)
        t.add_row({s.parameter, s.clearance,
                   s.plane_gap_valid ? s.plane_gap : std::numeric_limits<double>::quiet_NaN(),
                   s.t_cap, s.trunc_margin_ok ? 1.0 : 0.0});
    return t;
}

}  // namespace nil3
