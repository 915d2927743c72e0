// Command line front end: frame checks, curvature comparison, barrier
// certification, mesh emission and half-space sweeps.
//
// Exit codes: 0 success, 1 an operation reported failure (certification
// failed, surface rejected, verification out of tolerance), 2 bad usage,
// arguments or input data.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nil3/barrier.hpp"
#include "nil3/core.hpp"
#include "nil3/io.hpp"
#include "nil3/mesh.hpp"
#include "nil3/oracle.hpp"
#include "nil3/rev_surface.hpp"
#include "nil3/sweep.hpp"

namespace {

using namespace nil3;

void write_text(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
    emit(os);
}

std::pair<int, int> parse_grid(const std::string& spec) {
    int a = 0, b = 0;
    if (std::sscanf(spec.c_str(), "%dx%d", &a, &b) != 2 || a < 2 || b < 2)
        throw std::invalid_argument("bad --grid '" + spec + "', expected NxM with N,M >= 2");
    return {a, b};
}

// Meridian plus its chart; closed-form H available for all revolution types.
struct NamedSurface {
    ParametricSurface chart;
    bool has_closed = false;
    Meridian meridian{};
};

NamedSurface make_surface(const std::string& name, double tau, double c, double rho,
                          double t_max) {
    const AmbientParams amb(tau);
    NamedSurface out;
    CatalogParams cp;
    cp.t_max = t_max;
    if (name == "vertical_plane") {
        out.chart = catalog("vertical_plane", cp, amb);
        return out;  // minimal for every tau; closed H handled as 0
    }
    if (name == "euclidean_catenoid") {
        cp.neck = rho;
        out.chart = catalog("euclidean_catenoid", cp, amb);
        out.meridian = catenoid_meridian(rho);
        out.meridian.t0 = -t_max;
        out.has_closed = true;
        return out;
    }
    if (name == "barrier") {
        cp.c = c;
        out.chart = catalog("barrier", cp, amb);
        out.meridian = barrier_meridian(BarrierParams(c, tau, t_max));
        out.has_closed = true;
        return out;
    }
    Meridian m;
    if (name == "cosh")
        m = cosh_meridian();
    else if (name == "exp")
        m = exp_meridian();
    else if (name == "quadratic")
        m = quadratic_meridian();
    else if (name == "cylinder")
        m = constant_meridian(rho);
    else
        throw std::invalid_argument("unknown surface '" + name + "'");
    cp.meridian = m;
    out.chart = catalog("revolution", cp, amb);
    out.chart.name = name;
    out.meridian = m;
    out.has_closed = true;
    return out;
}

int cmd_verify_frame(double tau, int samples, const std::string& out_path) {
    const AmbientParams amb(tau);
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    double ortho = 0.0, compat = 0.0, torsion = 0.0, inv = 0.0;
    const double h = 1e-5;
    for (int s = 0; s < samples; ++s) {
        const Point p{dist(rng), dist(rng), dist(rng)};
        const Eigen::Matrix3d g = metric_at(p, amb);
        const auto fr = frame_at(p, amb);
        Eigen::Matrix3d F;
        for (int j = 0; j < 3; ++j) {
            F(0, j) = fr[j].cx;
            F(1, j) = fr[j].cy;
            F(2, j) = fr[j].cz;
        }
        ortho = std::max(ortho, (F.transpose() * g * F - Eigen::Matrix3d::Identity())
                                    .cwiseAbs()
                                    .maxCoeff());
        // metric compatibility on the frame: <nabla_Ei Ej, Ek> antisymmetric in (j, k)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    const FrameVec cj = connection_frame(i, j, amb);
                    const FrameVec ck = connection_frame(i, k, amb);
                    const double ej[3] = {j == 1 ? 1.0 : 0.0, j == 2 ? 1.0 : 0.0,
                                          j == 3 ? 1.0 : 0.0};
                    const double vj = (k == 1 ? cj.a1 : k == 2 ? cj.a2 : cj.a3);
                    const double vk = (j == 1 ? ck.a1 : j == 2 ? ck.a2 : ck.a3);
                    (void)ej;
                    compat = std::max(compat, std::abs(vj + vk));
                }
        // torsion freedom: nabla_Ei Ej - nabla_Ej Ei must equal [Ei, Ej],
        // with the bracket taken by finite differences of the frame flows.
        auto frame_coord = [&](int idx, const Point& q) { return frame_at(q, amb)[idx]; };
        auto flow = [&](const Point& q, const CoordVec& v, double step) {
            return Point{q.x + step * v.cx, q.y + step * v.cy, q.z + step * v.cz};
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const CoordVec ei = frame_coord(i, p);
                const CoordVec ej = frame_coord(j, p);
                // d/ds Ej(p + s*Ei) - d/ds Ei(p + s*Ej)
                const CoordVec dj_plus = frame_coord(j, flow(p, ei, h));
                const CoordVec dj_minus = frame_coord(j, flow(p, ei, -h));
                const CoordVec di_plus = frame_coord(i, flow(p, ej, h));
                const CoordVec di_minus = frame_coord(i, flow(p, ej, -h));
                const CoordVec bracket = (dj_plus - dj_minus) * (1.0 / (2.0 * h)) -
                                         (di_plus - di_minus) * (1.0 / (2.0 * h));
                const FrameVec br = to_frame(bracket, p, amb);
                const FrameVec lhs =
                    connection_frame(i + 1, j + 1, amb) - connection_frame(j + 1, i + 1, amb);
                const FrameVec res = lhs - br;
                torsion = std::max({torsion, std::abs(res.a1), std::abs(res.a2),
                                    std::abs(res.a3)});
            }
        // y and z translations are isometries: the metric only depends on x
        const Point q{p.x, p.y + 0.37, p.z - 1.4};
        inv = std::max(inv, (metric_at(q, amb) - g).cwiseAbs().maxCoeff());
    }
    const bool pass = ortho < 1e-10 && compat < 1e-10 && torsion < 1e-8 && inv == 0.0;
    Report rep;
    report_add(rep, "tau", tau);
    report_add(rep, "samples", static_cast<double>(samples));
    report_add(rep, "orthonormality_residual", ortho);
    report_add(rep, "compatibility_residual", compat);
    report_add(rep, "torsion_residual", torsion);
    report_add(rep, "translation_invariance_residual", inv);
    report_add(rep, "bundle_curvature", bundle_curvature(amb));
    report_add(rep, "verdict", std::string(pass ? "pass" : "fail"));
    write_text(out_path, [&](std::ostream& os) { emit_report(rep, os); });
    return pass ? 0 : 1;
}

int cmd_curvature(const std::string& surface, double tau, double c, double rho, double t,
                  double phi, const std::string& grid, double t_max, const std::string& out_path) {
    const AmbientParams amb(tau);
    const NamedSurface ns = make_surface(surface, tau, c, rho, t_max);
    const NumericDiffPolicy pol{};
    auto closed_h = [&](double tt, double pp) {
        if (!ns.has_closed) return 0.0;  // vertical planes are minimal
        return mean_curvature(ns.meridian, SurfacePoint(tt, pp), amb);
    };
    Report rep;
    report_add(rep, "surface", surface);
    report_add(rep, "tau", tau);
    bool pass = true;
    if (grid.empty()) {
        const double hc = closed_h(t, phi);
        const double ho = numeric_mean_curvature(ns.chart, t, phi, amb, pol);
        const double rel = std::abs(hc - ho) / std::max(1.0, std::abs(hc));
        pass = rel <= 1e-6;
        report_add(rep, "t", t);
        report_add(rep, "phi", phi);
        report_add(rep, "H_closed", hc);
        report_add(rep, "H_numeric", ho);
        report_add(rep, "rel_diff", rel);
    } else {
        const auto [nt, nphi] = parse_grid(grid);
        const double margin = 2.5 * pol.h;
        const double u_lo = std::max(ns.chart.u_min, ns.meridian.t0) + margin;
        const double u_hi = std::min(ns.chart.u_max, t_max) - margin;
        if (!(u_hi > u_lo)) throw std::invalid_argument("curvature: empty t window");
        double worst = 0.0, worst_t = u_lo, worst_phi = 0.0;
        for (int i = 0; i < nt; ++i) {
            const double tt = u_lo + (u_hi - u_lo) * static_cast<double>(i) / (nt - 1);
            for (int j = 0; j < nphi; ++j) {
                const double pp = 2.0 * std::numbers::pi * static_cast<double>(j) / nphi;
                const double hc = closed_h(tt, pp);
                const double ho = numeric_mean_curvature(ns.chart, tt, pp, amb, pol);
                const double rel = std::abs(hc - ho) / std::max(1.0, std::abs(hc));
                if (rel > worst) {
                    worst = rel;
                    worst_t = tt;
                    worst_phi = pp;
                }
            }
        }
        pass = worst <= 1e-6;
        report_add(rep, "grid_t", static_cast<double>(nt));
        report_add(rep, "grid_phi", static_cast<double>(nphi));
        report_add(rep, "max_rel_diff", worst);
        report_add(rep, "argmax_t", worst_t);
        report_add(rep, "argmax_phi", worst_phi);
    }
    report_add(rep, "verdict", std::string(pass ? "pass" : "fail"));
    write_text(out_path, [&](std::ostream& os) { emit_report(rep, os); });
    return pass ? 0 : 1;
}

int cmd_certify(double c, double tau, double t_max, const std::string& grid,
                const std::string& out_path, const std::string& csv_path) {
    const auto [nt, nphi] = grid.empty() ? std::pair<int, int>{256, 256} : parse_grid(grid);
    const BarrierParams params(c, tau, t_max);
    FieldTable samples;
    const CertResult res = certify(params, nt, nphi, csv_path.empty() ? nullptr : &samples);
    write_text(out_path, [&](std::ostream& os) { emit_report(res.to_report(), os); });
    if (!csv_path.empty())
        write_text(csv_path, [&](std::ostream& os) { emit_csv(samples, os); });
    return res.pass ? 0 : 1;
}

int cmd_mesh(const std::string& surface, double tau, double c, double rho, double t_max,
             const std::string& grid, const std::string& format, const std::string& out_path) {
    const NamedSurface ns = make_surface(surface, tau, c, rho, t_max);
    const auto [nt, nphi] = grid.empty() ? std::pair<int, int>{48, 96} : parse_grid(grid);
    TriMesh mesh;
    if (surface == "vertical_plane") {
        mesh = mesh_parametric([&](double u, double v) { return ns.chart.map(u, v); }, -t_max,
                               t_max, nt, -t_max, t_max, nphi);
    } else {
        mesh = mesh_revolution(ns.meridian, ns.meridian.t0, t_max, nt, nphi);
    }
    if (format == "obj") {
        write_text(out_path, [&](std::ostream& os) { emit_obj(mesh, os); });
    } else if (format == "csv") {
        FieldTable t;
        t.columns = {"x", "y", "z", "boundary"};
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
            t.add_row({mesh.vertices[i].x, mesh.vertices[i].y, mesh.vertices[i].z,
                       static_cast<double>(mesh.boundary[i])});
        write_text(out_path, [&](std::ostream& os) { emit_csv(t, os); });
    } else {
        throw std::invalid_argument("mesh: --format must be obj or csv");
    }
    return 0;
}

struct SweepCli {
    double tau = 0.0;
    std::string family = "barriers";
    double lo = 0.0, hi = 0.0;
    int steps = 8;
    std::string spacing = "geometric";
    double family_radius = 4.0;
    std::string family_grid = "48x96";
    std::string surface = "plane_patch";
    double offset = 1.0;
    double half_width = 0.5;
    int patch_n = 17;
    double c = 5.0;
    double sigma = 0.4;
    double surface_radius = 8.0;
    std::string surface_grid = "48x96";
    double eps = 0.0;
    double delta = 1e-3;
    double t_max = 1e9;
    bool no_minimality = false;
    double minimality_tol = 1e-4;
    std::string out_path;
    std::string csv_path;
};

int cmd_sweep(const SweepCli& o) {
    SweepConfig cfg;
    cfg.amb = AmbientParams(o.tau);
    if (o.family == "barriers")
        cfg.family.kind = FamilyKind::HeisenbergBarriers;
    else if (o.family == "catenoids")
        cfg.family.kind = FamilyKind::EuclideanCatenoids;
    else
        throw std::invalid_argument("sweep: --family must be barriers or catenoids");
    cfg.family.param_lo = o.lo;
    cfg.family.param_hi = o.hi;
    cfg.family.steps = o.steps;
    if (o.spacing == "geometric")
        cfg.family.geometric = true;
    else if (o.spacing == "linear")
        cfg.family.geometric = false;
    else
        throw std::invalid_argument("sweep: --spacing must be geometric or linear");
    cfg.family.max_radius = o.family_radius;
    std::tie(cfg.family.nt, cfg.family.nphi) = parse_grid(o.family_grid);
    cfg.delta = o.delta;
    cfg.eps_shift = o.eps;
    cfg.t_max = o.t_max;
    cfg.check_minimality = !o.no_minimality;
    cfg.minimality_tol = o.minimality_tol;

    const auto [snt, snphi] = parse_grid(o.surface_grid);
    TestSurface s;
    if (o.surface == "plane_patch") {
        s = plane_patch_surface(o.offset, o.half_width, o.patch_n,
                                o.offset >= 0.0 ? HalfSpaceSide::NonNegativeY
                                                : HalfSpaceSide::NonPositiveY);
    } else if (o.surface == "reflected_barrier") {
        s = reflected_barrier_surface(BarrierParams(o.c, o.tau), o.sigma, o.surface_radius, snt,
                                      snphi);
    } else {
        throw std::invalid_argument("sweep: --surface must be plane_patch or reflected_barrier");
    }
    if (o.eps > 0.0) shift_toward_plane(s, o.eps);

    const SweepReport rep = run_sweep(s, cfg);
    write_text(o.out_path, [&](std::ostream& os) { emit_report(rep.to_report(), os); });
    if (!o.csv_path.empty())
        write_text(o.csv_path, [&](std::ostream& os) { emit_csv(rep.clearance_table(), os); });
    return 0;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        return s.substr(1, s.size() - 2);
    return s;
}

// The argument parser only reads config files attached to the root command,
// never to a subcommand, so --config is handled here instead: the flat
// key=value file is expanded into option tokens before parsing. Keys already
// present on the command line are skipped, so explicit flags win.
std::vector<std::string> expand_config(const CLI::App& app,
                                       const std::vector<std::string>& raw) {
    std::string path;
    std::vector<std::string> args;
    args.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string& a = raw[i];
        if (a == "--config" || a.rfind("--config=", 0) == 0) {
            if (!path.empty()) throw std::invalid_argument("at most one --config is allowed");
            if (a == "--config") {
                if (i + 1 == raw.size())
                    throw std::invalid_argument("--config needs a file path");
                path = raw[++i];
            } else {
                path = a.substr(9);
            }
        } else {
            args.push_back(a);
        }
    }
    if (path.empty()) return args;
    for (const std::string& a : args)
        if (a == "--help" || a == "-h") return args;  // help ignores the file
    const CLI::App* sub = args.empty() ? nullptr : app.get_subcommand_no_throw(args.front());
    if (sub == nullptr) throw std::invalid_argument("--config needs a subcommand to apply to");

    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config file '" + path + "'");
    auto given = [&args](const std::string& flag) {
        for (const std::string& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s[0] == '[')
            throw std::invalid_argument(where + ": sections are not supported, use flat key=value");
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw std::invalid_argument(where + ": expected key=value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = strip_quotes(trim(s.substr(eq + 1)));
        if (key.empty()) throw std::invalid_argument(where + ": empty key");
        if (key == "config") throw std::invalid_argument(where + ": config files cannot nest");
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw std::invalid_argument(where + ": duplicate key '" + key + "'");
        seen.push_back(key);
        const std::string flag = "--" + key;
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        if (opt == nullptr)
            throw std::invalid_argument(where + ": " + args.front() + " has no option " + flag);
        if (given(flag)) continue;
        if (opt->get_expected_min() == 0) {  // flag option, value must be boolean
            if (value == "true" || value == "1" || value == "yes" || value == "on")
                args.push_back(flag);
            else if (!(value == "false" || value == "0" || value == "no" || value == "off"))
                throw std::invalid_argument(where + ": '" + key + "' takes true or false");
        } else {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surfaces of revolution in the Heisenberg metric family: verification, "
                 "certification and half-space sweeps"};
    if (argc > 0) app.name(argv[0]);
    app.require_subcommand(1);

    // Registered on every subcommand so it shows in --help; the value is
    // consumed by expand_config before parsing, never by the parser itself.
    std::string cfg_path;
    const std::string cfg_help = "flat key=value config file; explicit flags win";

    auto* vf = app.add_subcommand("verify-frame", "self-check of frame, metric and connection");
    double vf_tau = 0.0;
    int vf_samples = 64;
    std::string vf_out;
    vf->add_option("--tau", vf_tau, "bundle curvature")->required();
    vf->add_option("--samples", vf_samples, "sample points");
    vf->add_option("--out", vf_out, "report file (default stdout)");
    vf->add_option("--config", cfg_path, cfg_help);

    auto* cv = app.add_subcommand("curvature",
                                  "closed-form vs finite-difference mean curvature");
    std::string cv_surface, cv_grid, cv_out;
    double cv_tau = 0.0, cv_c = 4.0, cv_rho = 1.0, cv_t = 0.5, cv_phi = 0.0, cv_tmax = 2.0;
    cv->add_option("--surface", cv_surface,
                   "vertical_plane|euclidean_catenoid|barrier|cosh|exp|quadratic|cylinder")
        ->required();
    cv->add_option("--tau", cv_tau, "bundle curvature")->required();
    cv->add_option("--c", cv_c, "barrier growth parameter");
    cv->add_option("--rho", cv_rho, "neck/cylinder radius");
    cv->add_option("--t", cv_t, "meridian parameter (point mode)");
    cv->add_option("--phi", cv_phi, "angle (point mode)");
    cv->add_option("--grid", cv_grid, "NxM comparison grid (grid mode)");
    cv->add_option("--t-max", cv_tmax, "parameter extent");
    cv->add_option("--out", cv_out, "report file (default stdout)");
    cv->add_option("--config", cfg_path, cfg_help);

    auto* ct = app.add_subcommand("certify", "grid certification that barrier H <= 0");
    double ct_c = 4.0, ct_tau = 0.0, ct_tmax = 3.0;
    std::string ct_grid, ct_out, ct_csv;
    ct->add_option("--c", ct_c, "growth parameter, must exceed c0(tau)")->required();
    ct->add_option("--tau", ct_tau, "bundle curvature")->required();
    ct->add_option("--t-max", ct_tmax, "certification window end");
    ct->add_option("--grid", ct_grid, "NxM grid (default 256x256)");
    ct->add_option("--out", ct_out, "report file (default stdout)");
    ct->add_option("--samples-csv", ct_csv, "write per-sample H values as CSV");
    ct->add_option("--config", cfg_path, cfg_help);

    auto* ms = app.add_subcommand("mesh", "emit a triangulated surface");
    std::string ms_surface, ms_grid, ms_out, ms_format = "obj";
    double ms_tau = 0.0, ms_c = 4.0, ms_rho = 1.0, ms_tmax = 1.0;
    ms->add_option("--surface", ms_surface,
                   "vertical_plane|euclidean_catenoid|barrier|cosh|exp|quadratic|cylinder")
        ->required();
    ms->add_option("--tau", ms_tau, "bundle curvature");
    ms->add_option("--c", ms_c, "barrier growth parameter");
    ms->add_option("--rho", ms_rho, "neck/cylinder radius");
    ms->add_option("--t-max", ms_tmax, "parameter extent");
    ms->add_option("--grid", ms_grid, "NxM resolution (default 48x96)");
    ms->add_option("--format", ms_format, "obj|csv");
    ms->add_option("--out", ms_out, "output file (default stdout)");
    ms->add_option("--config", cfg_path, cfg_help);

    auto* sw = app.add_subcommand("sweep", "half-space sweep of a barrier/catenoid family");
    SweepCli so;
    sw->add_option("--tau", so.tau, "bundle curvature");
    sw->add_option("--family", so.family, "barriers|catenoids");
    sw->add_option("--lo", so.lo, "family parameter, near end")->required();
    sw->add_option("--hi", so.hi, "family parameter, far end")->required();
    sw->add_option("--steps", so.steps, "schedule length");
    sw->add_option("--spacing", so.spacing, "geometric|linear");
    sw->add_option("--family-radius", so.family_radius, "radial truncation of family meshes");
    sw->add_option("--family-grid", so.family_grid, "family mesh NxM");
    sw->add_option("--surface", so.surface, "plane_patch|reflected_barrier");
    sw->add_option("--offset", so.offset, "plane patch height");
    sw->add_option("--half-width", so.half_width, "plane patch half width");
    sw->add_option("--patch-n", so.patch_n, "plane patch grid");
    sw->add_option("--c", so.c, "reflected barrier growth parameter");
    sw->add_option("--sigma", so.sigma, "reflection height");
    sw->add_option("--surface-radius", so.surface_radius, "radial truncation of the surface");
    sw->add_option("--surface-grid", so.surface_grid, "surface mesh NxM");
    sw->add_option("--eps", so.eps, "shift toward the plane before the run");
    sw->add_option("--delta", so.delta, "contact threshold");
    sw->add_option("--t-max", so.t_max, "cap on family parameter extent");
    sw->add_flag("--no-minimality-check", so.no_minimality, "skip the minimality gate");
    sw->add_option("--minimality-tol", so.minimality_tol, "sup|H| tolerance of the gate");
    sw->add_option("--out", so.out_path, "report file (default stdout)");
    sw->add_option("--csv", so.csv_path, "clearance curve CSV");
    sw->add_option("--config", cfg_path, cfg_help);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(app, args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::reverse(args.begin(), args.end());  // the vector overload parses back to front
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vf->parsed()) return cmd_verify_frame(vf_tau, vf_samples, vf_out);
        if (cv->parsed())
            return cmd_curvature(cv_surface, cv_tau, cv_c, cv_rho, cv_t, cv_phi, cv_grid,
                                 cv_tmax, cv_out);
        if (ct->parsed()) return cmd_certify(ct_c, ct_tau, ct_tmax, ct_grid, ct_out, ct_csv);
        if (ms->parsed())
            return cmd_mesh(ms_surface, ms_tau, ms_c, ms_rho, ms_tmax, ms_grid, ms_format,
                            ms_out);
        if (sw->parsed()) return cmd_sweep(so);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
