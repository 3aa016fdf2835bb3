#include "curvem/curvem.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "curvem/assembly.hpp"
#include "curvem/cases.hpp"
#include "curvem/errors.hpp"
#include "curvem/mesh.hpp"
#include "curvem/mesh_io.hpp"
#include "curvem/meshgen.hpp"
#include "curvem/postproc.hpp"

struct curvem_mesh {
  std::shared_ptr<const curvem::Mesh> impl;
};

struct curvem_solution {
  std::shared_ptr<const curvem::Mesh> mesh;
  int k = 1;
  curvem::QuadConfig quad;
  Eigen::VectorXd dofs;
};

struct curvem_report {
  curvem::ConvergenceReport impl;
};

namespace {

thread_local std::string t_last_error;

curvem_status fail(curvem_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

// Runs a body, translating exceptions into status codes.
template <class Body>
curvem_status guarded(Body&& body) {
  try {
    return body();
  } catch (const curvem::DomainError& e) {
    return fail(CURVEM_ERR_DOMAIN, e.what());
  } catch (const curvem::ParseError& e) {
    return fail(CURVEM_ERR_PARSE, e.what());
  } catch (const curvem::MeshError& e) {
    return fail(CURVEM_ERR_MESH, e.what());
  } catch (const curvem::SolverError& e) {
    return fail(CURVEM_ERR_SOLVER, e.what());
  } catch (const curvem::ConditioningError& e) {
    return fail(CURVEM_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(CURVEM_ERR_INTERNAL, e.what());
  }
}

curvem_status require(bool ok, const char* what) {
  return ok ? CURVEM_OK : fail(CURVEM_ERR_ARGUMENT, what);
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

curvem::QuadConfig to_quad(const curvem_quad_config* quad) {
  curvem::QuadConfig q;
  if (!quad) return q;
  if (quad->edge_points_straight < 0 || quad->edge_points_curved < 0 ||
      quad->bulk_exactness < 0)
    throw curvem::DomainError("quadrature overrides must be nonnegative");
  q.edge_pts_straight = quad->edge_points_straight;
  q.edge_pts_curved = quad->edge_points_curved;
  q.bulk_exactness = quad->bulk_exactness;
  return q;
}

std::string to_solver(const char* solver) {
  return solver && *solver ? solver : "direct";
}

curvem_status emit_mesh(curvem::Mesh&& mesh, curvem_mesh** out) {
  *out = new curvem_mesh{std::make_shared<const curvem::Mesh>(std::move(mesh))};
  return CURVEM_OK;
}

curvem_status run_levels(const curvem::TestCase& tc, int k,
                         const std::vector<curvem::Mesh>& meshes,
                         const std::string& family, const std::string& solver,
                         const curvem::QuadConfig& quad, curvem_report** out) {
  curvem::ConvergenceReport rep;
  rep.k = k;
  rep.mesh_family = family;
  for (const curvem::Mesh& mesh : meshes) {
    Eigen::VectorXd dofs = curvem::solve_poisson(mesh, k, tc.f, tc.g, solver, quad);
    rep.levels.push_back(curvem::compute_errors(mesh, k, dofs, tc.u, tc.grad_u, quad));
  }
  rep.rates = curvem::fit_rates(rep);
  *out = new curvem_report{std::move(rep)};
  return CURVEM_OK;
}

curvem_status errors_common(const curvem_solution* sol, const curvem::ScalarField& u,
                            const curvem::VectorField& grad_u, double* h, double* e_h1,
                            double* e_l2, int* absolute) {
  const curvem::ErrorPair err =
      curvem::compute_errors(*sol->mesh, sol->k, sol->dofs, u, grad_u, sol->quad);
  if (h) *h = err.h;
  if (e_h1) *e_h1 = err.e_h1;
  if (e_l2) *e_l2 = err.e_l2;
  if (absolute) *absolute = err.absolute ? 1 : 0;
  return CURVEM_OK;
}

}  // namespace

extern "C" {

const char* curvem_version(void) { return "0.1.0"; }

const char* curvem_last_error(void) { return t_last_error.c_str(); }

void curvem_string_free(char* text) { std::free(text); }

curvem_status curvem_mesh_gen_disk(int rings, int sectors, int with_interface,
                                   curvem_mesh** out) {
  if (curvem_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    return emit_mesh(curvem::gen_polar_disk_mesh(rings, sectors, with_interface != 0), out);
  });
}

curvem_status curvem_mesh_gen_square(int n, curvem_mesh** out) {
  if (curvem_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] { return emit_mesh(curvem::gen_unit_square_mesh(n), out); });
}

curvem_status curvem_mesh_gen_sine(int n, curvem_mesh** out) {
  if (curvem_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] { return emit_mesh(curvem::gen_mapped_square_mesh(n), out); });
}

curvem_status curvem_mesh_read(const char* path, curvem_mesh** out) {
  if (curvem_status s = require(path && out, "path or out is NULL")) return s;
  return guarded([&] { return emit_mesh(curvem::mesh_read(path), out); });
}

curvem_status curvem_mesh_json(const curvem_mesh* mesh, char** out_text) {
  if (curvem_status s = require(mesh && out_text, "mesh or out_text is NULL")) return s;
  return guarded([&] {
    *out_text = copy_string(curvem::mesh_to_json(*mesh->impl));
    return require(*out_text != nullptr, "out of memory");
  });
}

curvem_status curvem_mesh_strip(const curvem_mesh* mesh, curvem_mesh** out) {
  if (curvem_status s = require(mesh && out, "mesh or out is NULL")) return s;
  return guarded([&] { return emit_mesh(curvem::strip_curves(*mesh->impl), out); });
}

curvem_status curvem_mesh_counts(const curvem_mesh* mesh, int* vertices, int* edges,
                                 int* elements) {
  if (curvem_status s = require(mesh != nullptr, "mesh is NULL")) return s;
  if (vertices) *vertices = static_cast<int>(mesh->impl->vertices.size());
  if (edges) *edges = static_cast<int>(mesh->impl->edges.size());
  if (elements) *elements = static_cast<int>(mesh->impl->elements.size());
  return CURVEM_OK;
}

curvem_status curvem_mesh_size(const curvem_mesh* mesh, double* h) {
  if (curvem_status s = require(mesh && h, "mesh or h is NULL")) return s;
  return guarded([&] {
    *h = mesh->impl->mesh_size();
    return CURVEM_OK;
  });
}

curvem_status curvem_mesh_validate(const curvem_mesh* mesh, double rho, int* pass) {
  if (curvem_status s = require(mesh && pass, "mesh or pass is NULL")) return s;
  return guarded([&] {
    *pass = curvem::mesh_validate(*mesh->impl, rho).pass ? 1 : 0;
    return CURVEM_OK;
  });
}

void curvem_mesh_free(curvem_mesh* mesh) { delete mesh; }

const char* curvem_case_names(void) {
  static const std::string names = [] {
    std::string joined;
    for (const std::string& name : curvem::case_names()) {
      if (!joined.empty()) joined += ',';
      joined += name;
    }
    return joined;
  }();
  return names.c_str();
}

curvem_status curvem_case_mesh(const char* case_name, int level, curvem_mesh** out) {
  if (curvem_status s = require(case_name && out, "case_name or out is NULL")) return s;
  return guarded([&] {
    if (level < 0) throw curvem::DomainError("refinement level must be >= 0");
    return emit_mesh(curvem::find_case(case_name).make_mesh(level), out);
  });
}

curvem_status curvem_solve_case(const curvem_mesh* mesh, int k, const char* case_name,
                                const char* solver, const curvem_quad_config* quad,
                                curvem_solution** out) {
  if (curvem_status s = require(mesh && case_name && out, "mesh, case_name or out is NULL"))
    return s;
  return guarded([&] {
    const curvem::TestCase& tc = curvem::find_case(case_name);
    const curvem::QuadConfig q = to_quad(quad);
    Eigen::VectorXd dofs =
        curvem::solve_poisson(*mesh->impl, k, tc.f, tc.g, to_solver(solver), q);
    *out = new curvem_solution{mesh->impl, k, q, std::move(dofs)};
    return CURVEM_OK;
  });
}

curvem_status curvem_solve(const curvem_mesh* mesh, int k, curvem_field f, void* f_ctx,
                           curvem_field g, void* g_ctx, const char* solver,
                           const curvem_quad_config* quad, curvem_solution** out) {
  if (curvem_status s = require(mesh && f && g && out, "mesh, f, g or out is NULL")) return s;
  return guarded([&] {
    const curvem::QuadConfig q = to_quad(quad);
    const curvem::ScalarField load = [f, f_ctx](const Eigen::Vector2d& p) {
      return f(p.x(), p.y(), f_ctx);
    };
    const curvem::ScalarField data = [g, g_ctx](const Eigen::Vector2d& p) {
      return g(p.x(), p.y(), g_ctx);
    };
    Eigen::VectorXd dofs =
        curvem::solve_poisson(*mesh->impl, k, load, data, to_solver(solver), q);
    *out = new curvem_solution{mesh->impl, k, q, std::move(dofs)};
    return CURVEM_OK;
  });
}

curvem_status curvem_solution_ndofs(const curvem_solution* sol, int* n) {
  if (curvem_status s = require(sol && n, "sol or n is NULL")) return s;
  *n = static_cast<int>(sol->dofs.size());
  return CURVEM_OK;
}

curvem_status curvem_solution_values(const curvem_solution* sol, double* values, int n) {
  if (curvem_status s = require(sol && values, "sol or values is NULL")) return s;
  if (curvem_status s = require(n == sol->dofs.size(), "n does not match the DoF count"))
    return s;
  for (int i = 0; i < n; ++i) values[i] = sol->dofs(i);
  return CURVEM_OK;
}

curvem_status curvem_solution_csv(const curvem_solution* sol, char** out_text) {
  if (curvem_status s = require(sol && out_text, "sol or out_text is NULL")) return s;
  return guarded([&] {
    std::ostringstream os;
    curvem::solution_to_csv(os, sol->dofs);
    *out_text = copy_string(os.str());
    return require(*out_text != nullptr, "out of memory");
  });
}

curvem_status curvem_solution_errors(const curvem_solution* sol, const char* case_name,
                                     double* h, double* e_h1, double* e_l2, int* absolute) {
  if (curvem_status s = require(sol && case_name, "sol or case_name is NULL")) return s;
  return guarded([&] {
    const curvem::TestCase& tc = curvem::find_case(case_name);
    return errors_common(sol, tc.u, tc.grad_u, h, e_h1, e_l2, absolute);
  });
}

curvem_status curvem_solution_errors_cb(const curvem_solution* sol, curvem_field u,
                                        void* u_ctx, curvem_field du_dx, void* dx_ctx,
                                        curvem_field du_dy, void* dy_ctx, double* h,
                                        double* e_h1, double* e_l2, int* absolute) {
  if (curvem_status s = require(sol && u && du_dx && du_dy, "sol or a field is NULL"))
    return s;
  return guarded([&] {
    const curvem::ScalarField exact = [u, u_ctx](const Eigen::Vector2d& p) {
      return u(p.x(), p.y(), u_ctx);
    };
    const curvem::VectorField grad = [du_dx, dx_ctx, du_dy, dy_ctx](const Eigen::Vector2d& p) {
      return Eigen::Vector2d(du_dx(p.x(), p.y(), dx_ctx), du_dy(p.x(), p.y(), dy_ctx));
    };
    return errors_common(sol, exact, grad, h, e_h1, e_l2, absolute);
  });
}

void curvem_solution_free(curvem_solution* sol) { delete sol; }

curvem_status curvem_run_convergence(const char* case_name, int k, int levels,
                                     const char* solver, const curvem_quad_config* quad,
                                     curvem_report** out) {
  if (curvem_status s = require(case_name && out, "case_name or out is NULL")) return s;
  return guarded([&] {
    if (levels < 2) throw curvem::DomainError("a rate fit needs at least 2 levels");
    const curvem::TestCase& tc = curvem::find_case(case_name);
    std::vector<curvem::Mesh> meshes;
    for (int level = 0; level < levels; ++level) meshes.push_back(tc.make_mesh(level));
    return run_levels(tc, k, meshes, tc.mesh_family, to_solver(solver), to_quad(quad), out);
  });
}

curvem_status curvem_run_convergence_files(const char* case_name, int k,
                                           const char* const* paths, int n_paths,
                                           const char* solver,
                                           const curvem_quad_config* quad,
                                           curvem_report** out) {
  if (curvem_status s = require(case_name && paths && out, "case_name, paths or out is NULL"))
    return s;
  return guarded([&] {
    if (n_paths < 2) throw curvem::DomainError("a rate fit needs at least 2 meshes");
    const curvem::TestCase& tc = curvem::find_case(case_name);
    std::vector<curvem::Mesh> meshes;
    for (int i = 0; i < n_paths; ++i) {
      if (!paths[i]) throw curvem::DomainError("mesh path is NULL");
      meshes.push_back(curvem::mesh_read(paths[i]));
    }
    return run_levels(tc, k, meshes, "files", to_solver(solver), to_quad(quad), out);
  });
}

curvem_status curvem_report_levels(const curvem_report* rep, int* levels) {
  if (curvem_status s = require(rep && levels, "rep or levels is NULL")) return s;
  *levels = static_cast<int>(rep->impl.levels.size());
  return CURVEM_OK;
}

curvem_status curvem_report_row(const curvem_report* rep, int level, double* h, int* ndofs,
                                double* e_h1, double* e_l2) {
  if (curvem_status s = require(rep != nullptr, "rep is NULL")) return s;
  if (curvem_status s = require(
          level >= 0 && level < static_cast<int>(rep->impl.levels.size()),
          "level out of range"))
    return s;
  const curvem::ErrorPair& row = rep->impl.levels[static_cast<size_t>(level)];
  if (h) *h = row.h;
  if (ndofs) *ndofs = row.n_dofs;
  if (e_h1) *e_h1 = row.e_h1;
  if (e_l2) *e_l2 = row.e_l2;
  return CURVEM_OK;
}

curvem_status curvem_report_slopes(const curvem_report* rep, double* slope_h1,
                                   double* slope_l2) {
  if (curvem_status s = require(rep != nullptr, "rep is NULL")) return s;
  if (slope_h1) *slope_h1 = rep->impl.rates.slope_h1;
  if (slope_l2) *slope_l2 = rep->impl.rates.slope_l2;
  return CURVEM_OK;
}

curvem_status curvem_report_csv(const curvem_report* rep, char** out_text) {
  if (curvem_status s = require(rep && out_text, "rep or out_text is NULL")) return s;
  return guarded([&] {
    std::ostringstream os;
    curvem::write_report_csv(os, rep->impl);
    *out_text = copy_string(os.str());
    return require(*out_text != nullptr, "out of memory");
  });
}

void curvem_report_free(curvem_report* rep) { delete rep; }

}  // extern "C"
