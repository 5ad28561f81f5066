#pragma once

#include "hodge/cochain.hpp"
#include "hodge/weights.hpp"

namespace hodge::fixtures {

WeightedComplex triangle_boundary();
WeightedComplex tetrahedron_boundary();
/// Vertices 0..5 are +x, -x, +y, -y, +z, -z.
WeightedComplex octahedron_boundary();
VertexMap octahedron_antipode();
WeightedComplex two_triangles();
/// All simplices of dimension <= dim on vertices 0..vertices-1.
WeightedComplex simplex_skeleton(int vertices, int dim);
/// Boundary of the (d+1)-simplex: a combinatorial d-sphere.
WeightedComplex sphere(int d);

}  // namespace hodge::fixtures
