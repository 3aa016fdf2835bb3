#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "curvem/errors.hpp"
#include "curvem/mesh_io.hpp"
#include "curvem/meshgen.hpp"

using namespace curvem;

namespace {

void check_equal(const Mesh& a, const Mesh& b) {
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (size_t i = 0; i < a.vertices.size(); ++i)
    CHECK((a.vertices[i] - b.vertices[i]).norm() == 0.0);

  REQUIRE(a.curves.size() == b.curves.size());
  for (size_t i = 0; i < a.curves.size(); ++i) {
    CHECK(a.curves[i].kind == b.curves[i].kind);
    CHECK(a.curves[i].t_lo == b.curves[i].t_lo);
    CHECK(a.curves[i].t_hi == b.curves[i].t_hi);
    CHECK((a.curves[i].center - b.curves[i].center).norm() == 0.0);
    CHECK(a.curves[i].radius == b.curves[i].radius);
    CHECK(a.curves[i].amplitude == b.curves[i].amplitude);
    CHECK(a.curves[i].omega == b.curves[i].omega);
    CHECK(a.curves[i].offset == b.curves[i].offset);
    CHECK(a.curves[i].of == b.curves[i].of);
  }

  REQUIRE(a.edges.size() == b.edges.size());
  for (size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].v0 == b.edges[i].v0);
    CHECK(a.edges[i].v1 == b.edges[i].v1);
    CHECK(a.edges[i].curve == b.edges[i].curve);
    CHECK(a.edges[i].t0 == b.edges[i].t0);
    CHECK(a.edges[i].t1 == b.edges[i].t1);
  }

  REQUIRE(a.elements.size() == b.elements.size());
  for (size_t k = 0; k < a.elements.size(); ++k) {
    CHECK(a.elements[k].kappa == b.elements[k].kappa);
    REQUIRE(a.elements[k].edges.size() == b.elements[k].edges.size());
    for (size_t s = 0; s < a.elements[k].edges.size(); ++s) {
      CHECK(a.elements[k].edges[s].edge == b.elements[k].edges[s].edge);
      CHECK(a.elements[k].edges[s].reversed == b.elements[k].edges[s].reversed);
    }
  }
}

}  // namespace

TEST_CASE("round trip: interface polar mesh survives exactly") {
  const Mesh m = gen_polar_disk_mesh(4, 12, true);
  const Mesh back = mesh_from_json(mesh_to_json(m));
  check_equal(m, back);
  CHECK(back.finalized);
  // Twice through the writer is byte-stable.
  CHECK(mesh_to_json(m) == mesh_to_json(back));
}

TEST_CASE("round trip: mapped sine mesh") {
  const Mesh m = gen_mapped_square_mesh(3);
  check_equal(m, mesh_from_json(mesh_to_json(m)));
}

TEST_CASE("file round trip") {
  const Mesh m = gen_polar_disk_mesh(2, 8, false);
  const std::string path = "io_roundtrip_tmp.json";
  mesh_write(m, path);
  const Mesh back = mesh_read(path);
  check_equal(m, back);
  std::remove(path.c_str());
}

TEST_CASE("schema violations carry JSON pointers") {
  // Unknown curve id referenced by an edge.
  const std::string bad_ref = R"({
    "vertices": [[0,0],[1,0],[1,1]],
    "curves": [],
    "edges": [{"v":[0,1],"curve":7,"t":[0,1]},{"v":[1,2],"curve":null,"t":null},{"v":[2,0],"curve":null,"t":null}],
    "elements": [{"edges":[1,2,3],"kappa":1.0}]
  })";
  try {
    mesh_from_json(bad_ref);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/edges/0/curve");
  }

  const std::string zero_id = R"({
    "vertices": [[0,0],[1,0],[1,1]],
    "curves": [],
    "edges": [{"v":[0,1],"curve":null,"t":null}],
    "elements": [{"edges":[0],"kappa":1.0}]
  })";
  try {
    mesh_from_json(zero_id);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/elements/0/edges/0");
  }

  CHECK_THROWS_AS(mesh_from_json("{\"vertices\": []}"), ParseError);
  CHECK_THROWS_AS(mesh_from_json("not json at all"), ParseError);

  // Straight edge with a parameter interval is malformed.
  const std::string stray_t = R"({
    "vertices": [[0,0],[1,0],[1,1]],
    "curves": [],
    "edges": [{"v":[0,1],"curve":null,"t":[0,1]}],
    "elements": [{"edges":[1],"kappa":1.0}]
  })";
  CHECK_THROWS_AS(mesh_from_json(stray_t), ParseError);
}

TEST_CASE("reader maps arbitrary curve ids to table order") {
  const std::string text = R"({
    "vertices": [[1,0],[0,1],[0,0]],
    "curves": [{"id": 42, "kind": "circle-arc", "center":[0,0], "radius":1.0, "t":[0, 1.5707963267948966]}],
    "edges": [{"v":[0,1],"curve":42,"t":[0,1.5707963267948966]},
              {"v":[1,2],"curve":null,"t":null},
              {"v":[2,0],"curve":null,"t":null}],
    "elements": [{"edges":[1,2,3],"kappa":2.5}]
  })";
  const Mesh m = mesh_from_json(text);
  CHECK(m.edges[0].curve == 0);
  CHECK(m.elements[0].kappa == doctest::Approx(2.5));
  CHECK(m.elements[0].area == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
}

TEST_CASE("structural defects in parsed meshes raise MeshError, not ParseError") {
  const std::string open_cycle = R"({
    "vertices": [[0,0],[1,0],[1,1]],
    "curves": [],
    "edges": [{"v":[0,1],"curve":null,"t":null},{"v":[1,2],"curve":null,"t":null}],
    "elements": [{"edges":[1,2],"kappa":1.0}]
  })";
  CHECK_THROWS_AS(mesh_from_json(open_cycle), MeshError);
}
