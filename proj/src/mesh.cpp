#include "nil3/mesh.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "nil3/io.hpp"
#include "nil3/rev_surface.hpp"

namespace nil3 {

namespace {

double triangle_area_sq(const Point& a, const Point& b, const Point& c) {
    const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    return cx * cx + cy * cy + cz * cz;
}

}  // namespace

void compute_boundary_markers(TriMesh& mesh) {
    mesh.boundary.assign(mesh.vertices.size(), 0);
    std::unordered_map<std::uint64_t, int> edge_count;
    edge_count.reserve(mesh.tris.size() * 3);
    auto key = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    for (const auto& t : mesh.tris)
        for (int e = 0; e < 3; ++e) ++edge_count[key(t[e], t[(e + 1) % 3])];
    for (const auto& [k, count] : edge_count) {
        if (count > 2) throw std::runtime_error("compute_boundary_markers: non-manifold edge");
        if (count == 1) {
            mesh.boundary[static_cast<int>(k >> 32)] = 1;
            mesh.boundary[static_cast<int>(k & 0xffffffffu)] = 1;
        }
    }
}

TriMesh mesh_parametric(const std::function<Point(double, double)>& map, double u0, double u1,
                        int nu, double v0, double v1, int nv, bool weld_v) {
    if (!map) throw std::invalid_argument("mesh_parametric: map not set");
    if (nu < 2) throw std::invalid_argument("mesh_parametric: need at least 2 rows");
    if (nv < (weld_v ? 3 : 2))
        throw std::invalid_argument("mesh_parametric: too few columns");
    if (!(u1 > u0)) throw std::invalid_argument("mesh_parametric: empty u range");

    TriMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u = u0 + (u1 - u0) * static_cast<double>(i) / (nu - 1);
        for (int j = 0; j < nv; ++j) {
            const double v =
                weld_v ? v0 + (v1 - v0) * static_cast<double>(j) / nv
                       : v0 + (v1 - v0) * static_cast<double>(j) / (nv - 1);
            mesh.vertices.push_back(map(u, v));
        }
    }
    const int cols = nv;
    const int jmax = weld_v ? cols : cols - 1;
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j < jmax; ++j) {
            const int j2 = (j + 1) % cols;
            const int a = i * cols + j;
            const int b = (i + 1) * cols + j;
            const int c = (i + 1) * cols + j2;
            const int d = i * cols + j2;
            mesh.tris.push_back({a, b, c});
            mesh.tris.push_back({a, c, d});
        }
    }
    for (const auto& t : mesh.tris)
        if (!(triangle_area_sq(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]) >
              0.0))
            throw std::runtime_error("mesh_parametric: degenerate triangle");
    compute_boundary_markers(mesh);
    return mesh;
}

TriMesh mesh_revolution(const Meridian& m, double t0, double t1, int nt, int nphi) {
    return mesh_parametric(
        [&m](double t, double phi) { return immerse(m, SurfacePoint(t, phi)); }, t0, t1, nt, 0.0,
        2.0 * std::numbers::pi, nphi, /*weld_v=*/true);
}

void emit_obj(const TriMesh& mesh, std::ostream& os) {
    for (const auto& v : mesh.vertices)
        os << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z)
           << '\n';
    for (const auto& t : mesh.tris)
        os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

}  // namespace nil3
