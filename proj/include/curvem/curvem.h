#ifndef CURVEM_CURVEM_H
#define CURVEM_CURVEM_H

/* C interface to the curvem solver library.
 *
 * Polygonal meshes whose edges may follow parametrized curves, a
 * nonconforming virtual element discretization of
 * -div(kappa grad u) = f with Dirichlet data g, and convergence-rate
 * reports over refinement sequences.
 *
 * Every function returns CURVEM_OK (0) or a nonzero status; on failure
 * curvem_last_error() returns a message describing the most recent error
 * on the calling thread. Out-parameters are written only on success.
 * Handles are opaque; release them with the matching _free function
 * (safe on NULL). Strings returned through char** out-parameters are
 * owned by the caller and released with curvem_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum curvem_status {
  CURVEM_OK = 0,
  CURVEM_ERR_ARGUMENT = 1, /* NULL handle or out-parameter, bad enum value */
  CURVEM_ERR_DOMAIN = 2,   /* invalid numeric input (order, counts, names) */
  CURVEM_ERR_MESH = 3,     /* structural or geometric mesh defect */
  CURVEM_ERR_PARSE = 4,    /* unreadable or schema-violating mesh file */
  CURVEM_ERR_SOLVER = 5,   /* linear solve failed to converge */
  CURVEM_ERR_INTERNAL = 6  /* conditioning guard or unexpected failure */
} curvem_status;

typedef struct curvem_mesh curvem_mesh;
typedef struct curvem_solution curvem_solution;
typedef struct curvem_report curvem_report;

/* Scalar field callback: value at (x, y); ctx is passed through verbatim. */
typedef double (*curvem_field)(double x, double y, void* ctx);

/* Quadrature overrides. Zero fields keep the order-dependent defaults
 * (straight edges k+4 Gauss points, curved edges k+8, bulk rules exact to
 * degree 2k+2). Pass NULL wherever a curvem_quad_config* is accepted to
 * keep all defaults. */
typedef struct curvem_quad_config {
  int edge_points_straight;
  int edge_points_curved;
  int bulk_exactness;
} curvem_quad_config;

const char* curvem_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* curvem_last_error(void);

void curvem_string_free(char* text);

/* ---- meshes ------------------------------------------------------------ */

/* Polar mesh of the unit disk; with_interface != 0 additionally binds the
 * arcs on r = 1/2 (rings must be even) and splits kappa 1 inside / 5
 * outside. */
curvem_status curvem_mesh_gen_disk(int rings, int sectors, int with_interface,
                                   curvem_mesh** out);

/* n x n straight grid of the unit square. */
curvem_status curvem_mesh_gen_square(int n, curvem_mesh** out);

/* n x n grid mapped onto the sine-bounded domain, boundary rows curved. */
curvem_status curvem_mesh_gen_sine(int n, curvem_mesh** out);

curvem_status curvem_mesh_read(const char* path, curvem_mesh** out);

/* Serializes to the mesh JSON schema (see curvem_mesh_read). */
curvem_status curvem_mesh_json(const curvem_mesh* mesh, char** out_text);

/* Copy with every curved edge unbound to its chord. */
curvem_status curvem_mesh_strip(const curvem_mesh* mesh, curvem_mesh** out);

curvem_status curvem_mesh_counts(const curvem_mesh* mesh, int* vertices,
                                 int* edges, int* elements);

/* Max element diameter. */
curvem_status curvem_mesh_size(const curvem_mesh* mesh, double* h);

/* Shape-regularity check: every element's min edge chord and kernel radius
 * must exceed rho times its diameter. *pass is 1 or 0. */
curvem_status curvem_mesh_validate(const curvem_mesh* mesh, double rho,
                                   int* pass);

void curvem_mesh_free(curvem_mesh* mesh);

/* ---- problems ---------------------------------------------------------- */

/* Comma-separated names of the built-in problems (load f, Dirichlet data g,
 * exact solution for error reporting, and a mesh family per level). */
const char* curvem_case_names(void);

/* Mesh for refinement level >= 0 of a built-in problem's family. */
curvem_status curvem_case_mesh(const char* case_name, int level,
                               curvem_mesh** out);

/* Solve with the named problem's data on the given mesh. solver is "direct"
 * or "cg" (NULL means direct). */
curvem_status curvem_solve_case(const curvem_mesh* mesh, int k,
                                const char* case_name, const char* solver,
                                const curvem_quad_config* quad,
                                curvem_solution** out);

/* Solve with caller-supplied load f and Dirichlet data g. */
curvem_status curvem_solve(const curvem_mesh* mesh, int k, curvem_field f,
                           void* f_ctx, curvem_field g, void* g_ctx,
                           const char* solver, const curvem_quad_config* quad,
                           curvem_solution** out);

/* ---- solutions --------------------------------------------------------- */

curvem_status curvem_solution_ndofs(const curvem_solution* sol, int* n);

/* Copies all DoF values into values[0 .. n-1]; n must match ndofs. */
curvem_status curvem_solution_values(const curvem_solution* sol,
                                     double* values, int n);

/* CSV with one `dof_id,value` row per DoF, 17 significant digits. */
curvem_status curvem_solution_csv(const curvem_solution* sol, char** out_text);

/* Projected H1/L2 errors against the named problem's exact solution.
 * Errors are relative unless the exact norms vanish; *absolute reports
 * which convention was used (1 = absolute). Any out-parameter may be NULL. */
curvem_status curvem_solution_errors(const curvem_solution* sol,
                                     const char* case_name, double* h,
                                     double* e_h1, double* e_l2,
                                     int* absolute);

/* Same against a caller-supplied exact solution u with gradient
 * (du_dx, du_dy). */
curvem_status curvem_solution_errors_cb(const curvem_solution* sol,
                                        curvem_field u, void* u_ctx,
                                        curvem_field du_dx, void* dx_ctx,
                                        curvem_field du_dy, void* dy_ctx,
                                        double* h, double* e_h1, double* e_l2,
                                        int* absolute);

void curvem_solution_free(curvem_solution* sol);

/* ---- convergence reports ----------------------------------------------- */

/* Runs a built-in problem over refinement levels 0 .. levels-1 of its mesh
 * family and fits least-squares rates. levels >= 2. */
curvem_status curvem_run_convergence(const char* case_name, int k, int levels,
                                     const char* solver,
                                     const curvem_quad_config* quad,
                                     curvem_report** out);

/* Same with the mesh sequence read from files instead of the family.
 * Meshes are used as given; n_paths >= 2. */
curvem_status curvem_run_convergence_files(const char* case_name, int k,
                                           const char* const* paths,
                                           int n_paths, const char* solver,
                                           const curvem_quad_config* quad,
                                           curvem_report** out);

curvem_status curvem_report_levels(const curvem_report* rep, int* levels);

curvem_status curvem_report_row(const curvem_report* rep, int level, double* h,
                                int* ndofs, double* e_h1, double* e_l2);

/* Global least-squares slopes of log E against log h. */
curvem_status curvem_report_slopes(const curvem_report* rep, double* slope_h1,
                                   double* slope_l2);

/* CSV rows `k,mesh_family,level,h,ndofs,EH1,EL2,slope_H1,slope_L2`. */
curvem_status curvem_report_csv(const curvem_report* rep, char** out_text);

void curvem_report_free(curvem_report* rep);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CURVEM_CURVEM_H */
