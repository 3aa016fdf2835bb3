#pragma once

#include <vector>

#include "curvem/mesh.hpp"

namespace curvem_test {

// One straight polygonal element from its ccw vertex list.
inline curvem::Mesh poly_mesh(const std::vector<Eigen::Vector2d>& vertices, double kappa = 1.0) {
  curvem::Mesh m;
  m.vertices = vertices;
  const int n = static_cast<int>(vertices.size());
  curvem::Element el;
  el.kappa = kappa;
  for (int i = 0; i < n; ++i) {
    curvem::Edge e;
    e.v0 = i;
    e.v1 = (i + 1) % n;
    m.edges.push_back(e);
    el.edges.push_back({i, false});
  }
  m.elements.push_back(el);
  m.finalize();
  return m;
}

}  // namespace curvem_test
