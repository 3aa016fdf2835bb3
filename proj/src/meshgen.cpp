#include "curvem/meshgen.hpp"

#include <cmath>
#include <map>

#include "curvem/errors.hpp"

namespace curvem {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Mesh gen_polar_disk_mesh(int rings, int sectors, bool interface_at_half) {
  if (rings < 1) throw DomainError("gen_polar_disk_mesh: rings must be >= 1");
  if (sectors < 3) throw DomainError("gen_polar_disk_mesh: sectors must be >= 3");
  if (interface_at_half && rings % 2 != 0)
    throw DomainError("gen_polar_disk_mesh: the r=1/2 interface needs an even ring count");

  const int R = rings, S = sectors;
  Mesh mesh;
  mesh.curves.push_back(Curve::circle_arc({0.0, 0.0}, 1.0, 0.0, 2.0 * kPi));
  if (interface_at_half) mesh.curves.push_back(Curve::circle_arc({0.0, 0.0}, 0.5, 0.0, 2.0 * kPi));

  auto theta = [S](int j) { return 2.0 * kPi * j / S; };

  mesh.vertices.push_back({0.0, 0.0});
  auto vid = [S](int ring, int j) { return ring == 0 ? 0 : 1 + (ring - 1) * S + (j % S + S) % S; };
  for (int i = 1; i <= R; ++i) {
    const double r = static_cast<double>(i) / R;
    for (int j = 0; j < S; ++j)
      mesh.vertices.push_back({r * std::cos(theta(j)), r * std::sin(theta(j))});
  }

  // Edges are created on first reference; arcs keep the unwrapped j so the
  // last sector binds to [theta(S-1), 2*pi] inside the curve domain.
  std::map<std::array<int, 3>, int> made;
  auto radial_edge = [&](int ring, int j) {  // ring i vertex j -> ring i+1 vertex j
    const std::array<int, 3> key{0, ring, (j % S + S) % S};
    auto it = made.find(key);
    if (it != made.end()) return it->second;
    Edge e;
    e.v0 = vid(ring, j);
    e.v1 = vid(ring + 1, j);
    const int id = static_cast<int>(mesh.edges.size());
    mesh.edges.push_back(e);
    made.emplace(key, id);
    return id;
  };
  auto arc_edge = [&](int ring, int j) {  // ring circle, vertex j -> j+1, j in [0, S)
    const std::array<int, 3> key{1, ring, j};
    auto it = made.find(key);
    if (it != made.end()) return it->second;
    Edge e;
    e.v0 = vid(ring, j);
    e.v1 = vid(ring, j + 1);
    if (ring == R) {
      e.curve = 0;
      e.t0 = theta(j);
      e.t1 = theta(j + 1);
    } else if (interface_at_half && ring == R / 2) {
      e.curve = 1;
      e.t0 = theta(j);
      e.t1 = theta(j + 1);
    }
    const int id = static_cast<int>(mesh.edges.size());
    mesh.edges.push_back(e);
    made.emplace(key, id);
    return id;
  };

  auto band_kappa = [&](int band) {  // band i spans [i/R, (i+1)/R]
    if (!interface_at_half) return 1.0;
    return (band + 1 <= R / 2) ? 1.0 : 5.0;
  };

  const bool paired_fan = (R >= 2 && S % 2 == 0);
  if (paired_fan) {
    for (int j = 0; j < S; j += 2) {
      Element el;
      el.edges.push_back({radial_edge(0, j), false});
      el.edges.push_back({arc_edge(1, j), false});
      el.edges.push_back({arc_edge(1, j + 1), false});
      el.edges.push_back({radial_edge(0, j + 2), true});
      el.kappa = band_kappa(0);
      mesh.elements.push_back(el);
    }
  } else {
    for (int j = 0; j < S; ++j) {
      Element el;
      el.edges.push_back({radial_edge(0, j), false});
      el.edges.push_back({arc_edge(1, j), false});
      el.edges.push_back({radial_edge(0, j + 1), true});
      el.kappa = band_kappa(0);
      mesh.elements.push_back(el);
    }
  }
  for (int i = 1; i < R; ++i)
    for (int j = 0; j < S; ++j) {
      Element el;
      el.edges.push_back({radial_edge(i, j), false});
      el.edges.push_back({arc_edge(i + 1, j), false});
      el.edges.push_back({radial_edge(i, j + 1), true});
      el.edges.push_back({arc_edge(i, j), true});
      el.kappa = band_kappa(i);
      mesh.elements.push_back(el);
    }

  mesh.finalize();
  return mesh;
}

// Tensor grid over the given x-partition, uniform rows, straight edges.
static Mesh tensor_square_mesh(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size()) - 1;
  Mesh mesh;
  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      mesh.vertices.push_back({xs[static_cast<size_t>(i)], static_cast<double>(j) / n});

  // Horizontal edges first (left -> right), then vertical (bottom -> top).
  auto hid = [n](int i, int j) { return j * n + i; };
  auto wid = [n](int i, int j) { return n * (n + 1) + j * (n + 1) + i; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < n; ++i) {
      Edge e;
      e.v0 = vid(i, j);
      e.v1 = vid(i + 1, j);
      mesh.edges.push_back(e);
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= n; ++i) {
      Edge e;
      e.v0 = vid(i, j);
      e.v1 = vid(i, j + 1);
      mesh.edges.push_back(e);
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Element el;
      el.edges.push_back({hid(i, j), false});
      el.edges.push_back({wid(i + 1, j), false});
      el.edges.push_back({hid(i, j + 1), true});
      el.edges.push_back({wid(i, j), true});
      mesh.elements.push_back(el);
    }

  mesh.finalize();
  return mesh;
}

Mesh gen_unit_square_mesh(int n) {
  if (n < 1) throw DomainError("gen_unit_square_mesh: n must be >= 1");
  std::vector<double> xs(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) xs[static_cast<size_t>(i)] = static_cast<double>(i) / n;
  return tensor_square_mesh(xs);
}

Mesh gen_alternating_square_mesh(int n, double ratio) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("gen_alternating_square_mesh: n must be even and >= 2");
  if (!(ratio > 0.0)) throw DomainError("gen_alternating_square_mesh: ratio must be positive");
  const double wide = 2.0 * ratio / (1.0 + ratio) / n;
  const double narrow = 2.0 / (1.0 + ratio) / n;
  std::vector<double> xs(static_cast<size_t>(n) + 1, 0.0);
  for (int i = 1; i <= n; ++i)
    xs[static_cast<size_t>(i)] = xs[static_cast<size_t>(i) - 1] + ((i % 2) ? wide : narrow);
  xs[static_cast<size_t>(n)] = 1.0;  // pairs tile exactly; pin the roundoff
  return tensor_square_mesh(xs);
}

Curve sine_bottom_curve() { return Curve::sine_graph(1.0 / 20.0, kPi, 0.0, 0.0, 1.0); }
Curve sine_top_curve() { return Curve::sine_graph(1.0 / 20.0, 3.0 * kPi, 1.0, 0.0, 1.0); }

Eigen::Vector2d map_square_point(const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  const double g1 = (1.0 / 20.0) * std::sin(kPi * x);
  const double g2 = 1.0 + (1.0 / 20.0) * std::sin(3.0 * kPi * x);
  if (y <= 0.5) return {x, y + g1 * (1.0 - 2.0 * y)};
  return {x, 1.0 - y + g2 * (2.0 * y - 1.0)};
}

Mesh map_unit_square_mesh(const Mesh& square) {
  if (!square.finalized)
    throw MeshError("map_unit_square_mesh: finalize() the square mesh first");

  Mesh mesh = square;
  const double tol = 1e-9;

  const int g1_id = static_cast<int>(mesh.curves.size());
  mesh.curves.push_back(sine_bottom_curve());
  const int g2_id = g1_id + 1;
  mesh.curves.push_back(sine_top_curve());

  // Classify against the square before moving any vertex.
  for (size_t i = 0; i < mesh.edges.size(); ++i) {
    if (!mesh.boundary(static_cast<int>(i))) continue;
    Edge& e = mesh.edges[i];
    const Eigen::Vector2d& a = mesh.vertices[static_cast<size_t>(e.v0)];
    const Eigen::Vector2d& b = mesh.vertices[static_cast<size_t>(e.v1)];
    const bool bottom = std::abs(a.y()) < tol && std::abs(b.y()) < tol;
    const bool top = std::abs(a.y() - 1.0) < tol && std::abs(b.y() - 1.0) < tol;
    if (!bottom && !top) continue;
    if (a.x() > b.x()) {
      std::swap(e.v0, e.v1);
      for (Element& el : mesh.elements)
        for (ElementEdge& s : el.edges)
          if (s.edge == static_cast<int>(i)) s.reversed = !s.reversed;
    }
    e.curve = bottom ? g1_id : g2_id;
    e.t0 = mesh.vertices[static_cast<size_t>(e.v0)].x();
    e.t1 = mesh.vertices[static_cast<size_t>(e.v1)].x();
  }

  for (Eigen::Vector2d& v : mesh.vertices) v = map_square_point(v);

  mesh.finalized = false;
  mesh.finalize();
  return mesh;
}

Mesh gen_mapped_square_mesh(int n) { return map_unit_square_mesh(gen_unit_square_mesh(n)); }

}  // namespace curvem
