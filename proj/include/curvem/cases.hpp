#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvem/assembly.hpp"
#include "curvem/mesh.hpp"
#include "curvem/postproc.hpp"

namespace curvem {

// A named benchmark problem: exact solution with gradient, problem data, and
// a mesh family indexed by refinement level (level 0 is the coarsest).
struct TestCase {
  std::string name;
  std::string mesh_family;
  ScalarField u;
  VectorField grad_u;
  ScalarField f;
  ScalarField g;
  std::function<Mesh(int level)> make_mesh;
};

// Registered benchmarks: disk-u1, sine-u2, interface-u3, straight-approx-u2.
// Unknown names raise DomainError.
const TestCase& find_case(const std::string& name);
std::vector<std::string> case_names();

}  // namespace curvem
