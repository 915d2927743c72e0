#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "nil3/core.hpp"
#include "nil3/meridian.hpp"

namespace nil3 {

/// Triangle mesh in chart coordinates. `boundary[v]` is 1 when v lies on an
/// edge with exactly one incident triangle; markers are recomputed from
/// adjacency whenever the topology is built, so they always agree with it.
struct TriMesh {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> tris;
    std::vector<std::uint8_t> boundary;
};

/// Rebuilds boundary markers from triangle-edge adjacency. Throws
/// std::runtime_error if an edge has more than two incident triangles.
void compute_boundary_markers(TriMesh& mesh);

/// Structured grid over [u0,u1] x [v0,v1]: nu >= 2 rows, nv columns
/// (nv >= 3 when weld_v). weld_v identifies v1 with v0 (periodic seam, no
/// duplicated column). Vertices are row-major, id = i*nv + j. Triangles must
/// all have positive chart area.
TriMesh mesh_parametric(const std::function<Point(double, double)>& map, double u0, double u1,
                        int nu, double v0, double v1, int nv, bool weld_v = false);

/// Revolution mesh: nt rings of nphi vertices, phi welded over [0, 2*pi).
/// Ring i sits at t = t0 + i*(t1 - t0)/(nt - 1); both marked boundary rings
/// (i = 0 and i = nt-1) come out of the adjacency pass.
TriMesh mesh_revolution(const Meridian& m, double t0, double t1, int nt, int nphi);

/// Wavefront OBJ: "v x y z" per vertex, "f a b c" per triangle (1-based),
/// deterministic formatting.
void emit_obj(const TriMesh& mesh, std::ostream& os);

}  // namespace nil3
