#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "nil3/barrier.hpp"
#include "nil3/io.hpp"
#include "nil3/mesh.hpp"

using namespace nil3;

namespace {

// Minimal OBJ reader used to round-trip emit_obj output.
struct ParsedObj {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> faces;
};

ParsedObj parse_obj(const std::string& text) {
    ParsedObj out;
    std::istringstream is(text);
    std::string tag;
    while (is >> tag) {
        if (tag == "v") {
            Point p;
            is >> p.x >> p.y >> p.z;
            out.vertices.push_back(p);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            is >> f[0] >> f[1] >> f[2];
            out.faces.push_back(f);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("format_double emits shortest exact decimal strings") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-1.25) == "-1.25");
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = d(rng) * std::pow(10.0, static_cast<int>(rng() % 19) - 9);
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);  // parses back bit-exactly
    }
}

TEST_CASE("csv emission writes header plus rows and rejects ragged data") {
    FieldTable t;
    t.columns = {"t", "phi", "H"};
    t.add_row({0.0, 0.5, -1.25});
    t.add_row({1.0, 2.0, -0.5});
    std::ostringstream os;
    emit_csv(t, os);
    CHECK(os.str() == "t,phi,H\n0,0.5,-1.25\n1,2,-0.5\n");

    t.rows.push_back({1.0, 2.0});
    std::ostringstream bad;
    CHECK_THROWS_AS(emit_csv(t, bad), std::invalid_argument);
}

TEST_CASE("report emission is ordered key: value lines") {
    Report rep;
    report_add(rep, "surface", std::string("barrier"));
    report_add(rep, "c", 4.0);
    report_add(rep, "max_H", -0.125);
    std::ostringstream os;
    emit_report(rep, os);
    CHECK(os.str() == "surface: barrier\nc: 4\nmax_H: -0.125\n");
}

TEST_CASE("structured grid mesh: counts, topology, boundary ring") {
    const auto map = [](double u, double v) { return Point{u, 0.0, v}; };
    const int nu = 5, nv = 4;
    const TriMesh mesh = mesh_parametric(map, 0.0, 1.0, nu, 0.0, 1.0, nv);
    CHECK(mesh.vertices.size() == static_cast<std::size_t>(nu * nv));
    CHECK(mesh.tris.size() == static_cast<std::size_t>(2 * (nu - 1) * (nv - 1)));
    int marked = 0;
    for (auto b : mesh.boundary) marked += b;
    CHECK(marked == 2 * nu + 2 * nv - 4);  // grid perimeter
    // interior vertex (row 2, col 1) is unmarked
    CHECK(mesh.boundary[2 * nv + 1] == 0);
    CHECK(mesh.boundary[0] == 1);
    // row-major vertex layout
    CHECK(mesh.vertices[1 * nv + 2].x == doctest::Approx(0.25));
    CHECK(mesh.vertices[1 * nv + 2].z == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("welded seam removes the duplicated column and its boundary") {
    const auto tube = [](double u, double v) {
        return Point{std::cos(v), u, std::sin(v)};
    };
    const int nu = 4, nv = 8;
    const TriMesh mesh =
        mesh_parametric(tube, 0.0, 1.0, nu, 0.0, 2.0 * std::numbers::pi, nv, true);
    CHECK(mesh.vertices.size() == static_cast<std::size_t>(nu * nv));
    CHECK(mesh.tris.size() == static_cast<std::size_t>(2 * (nu - 1) * nv));
    int marked = 0;
    for (auto b : mesh.boundary) marked += b;
    CHECK(marked == 2 * nv);  // only the two end rings remain boundary
    for (int j = 0; j < nv; ++j) {
        CHECK(mesh.boundary[j] == 1);
        CHECK(mesh.boundary[(nu - 1) * nv + j] == 1);
        CHECK(mesh.boundary[1 * nv + j] == 0);
    }
    // no vertex sits at the seam angle twice: all azimuths distinct per ring
    for (int j = 1; j < nv; ++j) {
        const double a0 = std::atan2(mesh.vertices[0].z, mesh.vertices[0].x);
        const double aj = std::atan2(mesh.vertices[j].z, mesh.vertices[j].x);
        CHECK(std::abs(aj - a0) > 1e-6);
    }
}

TEST_CASE("revolution mesh places rings on the meridian") {
    const BarrierParams bp(4.0, 0.5);
    const Meridian m = barrier_meridian(bp);
    const int nt = 4, nphi = 8;
    const TriMesh mesh = mesh_revolution(m, 0.0, 0.6, nt, nphi);
    CHECK(mesh.vertices.size() == 32u);
    CHECK(mesh.tris.size() == static_cast<std::size_t>(2 * (nt - 1) * nphi));
    for (int i = 0; i < nt; ++i) {
        const double t = 0.6 * i / (nt - 1);
        const double r = m.r(t);
        for (int j = 0; j < nphi; ++j) {
            const Point& p = mesh.vertices[i * nphi + j];
            CHECK(p.y == doctest::Approx(t).epsilon(1e-15));
            CHECK(std::hypot(p.x, p.z) == doctest::Approx(r).epsilon(1e-13));
        }
    }
}

TEST_CASE("mesh construction validates its inputs") {
    const auto map = [](double u, double v) { return Point{u, 0.0, v}; };
    CHECK_THROWS_AS(mesh_parametric(map, 0.0, 1.0, 1, 0.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(mesh_parametric(map, 0.0, 1.0, 4, 0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mesh_parametric(map, 0.0, 1.0, 4, 0.0, 1.0, 2, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(mesh_parametric(map, 1.0, 1.0, 4, 0.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(mesh_parametric({}, 0.0, 1.0, 4, 0.0, 1.0, 4), std::invalid_argument);
    // collapsed map -> zero-area triangles
    const auto collapsed = [](double, double) { return Point{1.0, 2.0, 3.0}; };
    CHECK_THROWS_AS(mesh_parametric(collapsed, 0.0, 1.0, 3, 0.0, 1.0, 3), std::runtime_error);
}

TEST_CASE("non-manifold edges are detected") {
    TriMesh mesh;
    mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    // three triangles share the edge (0, 1)
    mesh.tris = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
    CHECK_THROWS_AS(compute_boundary_markers(mesh), std::runtime_error);
}

TEST_CASE("obj emission round-trips through a reader") {
    const Meridian m = catenoid_meridian(0.8);
    const TriMesh mesh = mesh_revolution(m, 0.0, 1.0, 5, 12);
    std::ostringstream os;
    emit_obj(mesh, os);
    const ParsedObj parsed = parse_obj(os.str());
    REQUIRE(parsed.vertices.size() == mesh.vertices.size());
    REQUIRE(parsed.faces.size() == mesh.tris.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        CHECK(parsed.vertices[i].x == mesh.vertices[i].x);
        CHECK(parsed.vertices[i].y == mesh.vertices[i].y);
        CHECK(parsed.vertices[i].z == mesh.vertices[i].z);
    }
    for (std::size_t i = 0; i < mesh.tris.size(); ++i)
        for (int k = 0; k < 3; ++k) CHECK(parsed.faces[i][k] == mesh.tris[i][k] + 1);

    // emission is deterministic
    std::ostringstream os2;
    emit_obj(mesh, os2);
    CHECK(os.str() == os2.str());
}
