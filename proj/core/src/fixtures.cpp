#include "hodge/fixtures.hpp"

#include "hodge/error.hpp"

namespace hodge::fixtures {

namespace {

std::vector<Simplex> subsets(int vertices, int size) {
  std::vector<Simplex> out;
  Simplex cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < vertices; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

WeightedComplex triangle_boundary() { return with_unit_weights(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})); }

WeightedComplex tetrahedron_boundary() { return sphere(2); }

WeightedComplex octahedron_boundary() {
  std::vector<Simplex> facets;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) facets.push_back({a, b, c});
    }
  }
  return with_unit_weights(SimplicialComplex::from_facets(facets));
}

VertexMap octahedron_antipode() { return {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}}; }

WeightedComplex two_triangles() {
  return with_unit_weights(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
}

WeightedComplex simplex_skeleton(int vertices, int dim) {
  if (vertices < 1 || dim < 0 || dim >= vertices) throw Error(ErrorCode::InvalidArgument, "bad skeleton request");
  std::vector<std::vector<Simplex>> lists;
  for (int j = 0; j <= dim; ++j) lists.push_back(subsets(vertices, j + 1));
  return with_unit_weights(SimplicialComplex::build(std::move(lists)));
}

WeightedComplex sphere(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be >= 1");
  return simplex_skeleton(d + 2, d);
}

}  // namespace hodge::fixtures
