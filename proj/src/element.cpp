#include "curvem/element.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "curvem/errors.hpp"

namespace curvem {

namespace {

double reciprocal_condition(const Eigen::MatrixXd& A) {
  if (A.rows() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& s = svd.singularValues();
  return s(0) > 0.0 ? s(s.size() - 1) / s(0) : 0.0;
}

// Every local solve runs behind the same guard so degenerate geometry
// surfaces as a diagnostic naming the element, not as garbage numbers.
void guard_rcond(const Eigen::MatrixXd& A, const char* what, int element) {
  const double rc = reciprocal_condition(A);
  if (rc < 1e-13) {
    std::ostringstream msg;
    msg << what << " nearly singular, rcond " << rc;
    throw ConditioningError(element, msg.str());
  }
}

void check_order(int k) {
  // 6 keeps every moment degree used below (2k plus the divergence-theorem
  // bump) inside the monomial index tables.
  if (k < 1 || k > 6) throw DomainError("order k must be in [1, 6]");
}

}  // namespace

EdgeProjection edge_projection(const Mesh& mesh, int edge_id, int k,
                               const QuadConfig& quad, int element_hint) {
  check_order(k);
  const EdgeGeometry geom(mesh, edge_id);
  const ScaledMonomialBasis1D b1(geom.t0(), geom.t1(), k - 1);
  const EdgeRule rule = edge_rule(geom, quad.edge_pts(k, geom.curved()));

  EdgeProjection ep;
  ep.mass = Eigen::MatrixXd::Zero(k, k);
  for (int q = 0; q < rule.nodes.size(); ++q) {
    const CurveSample s = geom.at(rule.nodes(q));
    const Eigen::VectorXd m = b1.eval(rule.nodes(q));
    ep.mass.noalias() += (rule.weights(q) * s.speed) * (m * m.transpose());
  }
  guard_rcond(ep.mass, "edge mass matrix", element_hint);
  ep.proj = mesh.edge_length[edge_id] * ep.mass.inverse();
  return ep;
}

const Element& LocalOperators::element() const { return mesh_->elements[element_]; }

LocalOperators::LocalOperators(const Mesh& mesh, int element_id, int k, QuadConfig quad)
    : mesh_(&mesh),
      element_(element_id),
      k_(k),
      quad_(quad),
      layout_{k, 0},
      basis_(Eigen::Vector2d::Zero(), 1.0, std::max(k, 1)) {
  check_order(k);
  if (!mesh.finalized) throw MeshError("mesh not finalized");
  if (element_id < 0 || element_id >= static_cast<int>(mesh.elements.size()))
    throw DomainError("element id out of range");

  const Element& el = mesh.elements[element_id];
  layout_ = DofLayout{k, static_cast<int>(el.edges.size())};
  basis_ = ScaledMonomialBasis2D(el.centroid, el.diameter, k);

  const int np = basis_.size();
  const int N = layout_.size();
  const int nb = layout_.n_bulk_dofs();
  const int ne = layout_.n_edges;

  moments_ = monomial_moments_divergence(mesh, el, 2 * k, quad_.edge_pts(k, false),
                                         quad_.edge_pts(k, true));

  D_ = Eigen::MatrixXd::Zero(N, np);
  B_ = Eigen::MatrixXd::Zero(np, N);
  Eigen::VectorXd bnd_monomials = Eigen::VectorXd::Zero(np);
  double perimeter = 0.0;
  edge_proj_.reserve(ne);

  for (int step = 0; step < ne; ++step) {
    const ElementEdge& ee = el.edges[step];
    const EdgeGeometry geom(mesh, ee.edge);
    const double sigma = ee.reversed ? -1.0 : 1.0;
    const double len = mesh.edge_length[ee.edge];
    perimeter += len;

    const ScaledMonomialBasis1D b1(geom.t0(), geom.t1(), k - 1);
    const EdgeRule rule = edge_rule(geom, quad_.edge_pts(k, geom.curved()));

    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(k, k);
    Eigen::MatrixXd edge_reads = Eigen::MatrixXd::Zero(k, np);
    Eigen::MatrixXd flux = Eigen::MatrixXd::Zero(np, k);
    for (int q = 0; q < rule.nodes.size(); ++q) {
      const double t = rule.nodes(q);
      const double w = rule.weights(q);
      const CurveSample s = geom.at(t);
      const Eigen::VectorXd m1 = b1.eval(t);
      const Eigen::VectorXd m2 = basis_.eval(s.position);
      const Eigen::Matrix<double, Eigen::Dynamic, 2> g2 = basis_.eval_grad(s.position);
      // Outward normal times speed; the edge speed cancels in the flux term.
      const Eigen::Vector2d normal_speed(sigma * s.tangent.y(), -sigma * s.tangent.x());
      mass.noalias() += (w * s.speed) * (m1 * m1.transpose());
      edge_reads.noalias() += (w * s.speed / len) * (m1 * m2.transpose());
      flux.noalias() += w * ((g2 * normal_speed) * m1.transpose());
      bnd_monomials.noalias() += (w * s.speed) * m2;
    }

    EdgeProjection ep;
    ep.mass = std::move(mass);
    guard_rcond(ep.mass, "edge mass matrix", element_);
    ep.proj = len * ep.mass.inverse();

    D_.block(layout_.edge_dof(step, 0), 0, k, np) = edge_reads;
    // int_e PI0e(n . grad m_i) v ds = sum_j (M^-1 r_i)_j |e| D_e^j(v).
    B_.middleCols(layout_.edge_dof(step, 0), k).noalias() += flux * ep.proj;
    edge_proj_.push_back(std::move(ep));
  }

  for (int j = 0; j < nb; ++j) {
    const std::array<int, 2> ej = mono::exponents(j);
    for (int a = 0; a < np; ++a)
      D_(layout_.bulk_dof(j), a) =
          moments_.mu(mono::product_index(ej, mono::exponents(a))) / el.area;
  }

  G_ = Eigen::MatrixXd::Zero(np, np);
  const double inv_h2 = 1.0 / (el.diameter * el.diameter);
  for (int i = 0; i < np; ++i) {
    const std::array<int, 2> a = mono::exponents(i);
    for (int j = 0; j < np; ++j) {
      const std::array<int, 2> b = mono::exponents(j);
      double v = 0.0;
      if (a[0] > 0 && b[0] > 0) v += a[0] * b[0] * moments_.mu(mono::index(a[0] + b[0] - 2, a[1] + b[1]));
      if (a[1] > 0 && b[1] > 0) v += a[1] * b[1] * moments_.mu(mono::index(a[0] + b[0], a[1] + b[1] - 2));
      G_(i, j) = v * inv_h2;
    }
  }

  // -int_K (lap m_i) v through the bulk moments of v.
  const Eigen::MatrixXd L = basis_.laplacian_table();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nb; ++j) B_(i, layout_.bulk_dof(j)) -= el.area * L(i, j);

  // The projector system is singular on constants; both sides get the
  // average functional in the constant slot instead.
  Gt_ = G_;
  B_.row(0).setZero();
  if (k == 1) {
    Gt_.row(0) = bnd_monomials.transpose() / perimeter;
    for (int step = 0; step < ne; ++step)
      B_(0, layout_.edge_dof(step, 0)) = mesh.edge_length[el.edges[step].edge] / perimeter;
  } else {
    for (int j = 0; j < np; ++j) Gt_(0, j) = moments_.mu(j) / el.area;
    B_(0, layout_.bulk_dof(0)) = 1.0;
  }

  // Analytically B * dofs(1) = e_0 by the divergence theorem; numerically
  // the flux and laplacian routes disagree at roundoff level, and the
  // projector solve amplifies that by the conditioning of the monomial
  // Gram. Removing the defect row by row keeps constants exactly in the
  // kernel of the local form.
  const Eigen::VectorXd d1 = D_.col(0);
  for (int i = 1; i < np; ++i) B_.row(i) -= B_.row(i).dot(d1) * B_.row(0);

  guard_rcond(Gt_, "projector system", element_);
  Pi_ = Gt_.partialPivLu().solve(B_);

  // The per-column solves leak conditioning-amplified roundoff into Pi, so
  // Pi * dofs(1) = e_0 is additionally pinned by a rank-one correction along
  // the average row (another exact-arithmetic no-op).
  Eigen::VectorXd kdef = Pi_ * d1;
  kdef(0) -= 1.0;
  Pi_.noalias() -= kdef * (B_.row(0) / B_.row(0).dot(d1));

  Pi0_ = Eigen::MatrixXd::Zero(nb, N);
  if (nb > 0) {
    Eigen::MatrixXd H(nb, nb);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        H(i, j) = moments_.mu(mono::product_index(mono::exponents(i), mono::exponents(j)));
    guard_rcond(H, "bulk mass matrix", element_);
    Pi0_.middleCols(layout_.bulk_dof(0), nb) = el.area * H.inverse();
  }

  // Enhanced L2 projection onto the full degree k space: moments up to k-2
  // come exactly from the bulk DoFs, higher ones from the Ritz projection.
  // Pairing the load with it keeps the consistency error orthogonal to
  // P_{k-2}, which the L2 rate at k = 2 and the H1 rate at k >= 3 both need.
  if (k >= 2) {
    Eigen::MatrixXd Hf(np, np);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j)
        Hf(i, j) = moments_.mu(mono::product_index(mono::exponents(i), mono::exponents(j)));
    Eigen::MatrixXd rhs = Hf * Pi_;
    for (int j = 0; j < nb; ++j) {
      rhs.row(j).setZero();
      rhs(j, layout_.bulk_dof(j)) = el.area;
    }
    guard_rcond(Hf, "moment gram", element_);
    pi0_full_ = Hf.partialPivLu().solve(rhs);
  }

  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(N, N) - D_ * Pi_;
  const Eigen::MatrixXd T = Pi_.transpose() * G_ * Pi_ + R.transpose() * R;
  A_ = el.kappa * 0.5 * (T + T.transpose());
}

Eigen::MatrixXd LocalOperators::stabilization() const {
  return Eigen::MatrixXd::Identity(layout_.size(), layout_.size());
}

Eigen::VectorXd LocalOperators::load(
    const std::function<double(const Eigen::Vector2d&)>& f) const {
  const Element& el = element();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(layout_.size());
  const BulkRule rule = bulk_rule(*mesh_, el, quad_.bulk_degree(k_));
  if (k_ == 1) {
    const double per_edge = bulk_integral(rule, f) / layout_.n_edges;
    for (int step = 0; step < layout_.n_edges; ++step)
      b(layout_.edge_dof(step, 0)) = per_edge;
  } else {
    // f is tested against the enhanced L2 projection of v_h; the plain
    // degree k-2 bulk projection loses one L2 order at k = 2 and the Ritz
    // projection loses P_{k-2} orthogonality.
    Eigen::VectorXd F = Eigen::VectorXd::Zero(basis_.size());
    for (int q = 0; q < rule.weights.size(); ++q)
      F.noalias() += (rule.weights(q) * f(rule.points[q])) * basis_.eval(rule.points[q]);
    b = pi0_full_.transpose() * F;
  }
  return b;
}

Eigen::VectorXd element_dofs_of(const Mesh& mesh, int element_id, int k,
                                const std::function<double(const Eigen::Vector2d&)>& v,
                                const QuadConfig& quad) {
  check_order(k);
  const Element& el = mesh.elements[element_id];
  const DofLayout layout{k, static_cast<int>(el.edges.size())};
  Eigen::VectorXd d = Eigen::VectorXd::Zero(layout.size());

  for (int step = 0; step < layout.n_edges; ++step) {
    const EdgeGeometry geom(mesh, el.edges[step].edge);
    const double len = mesh.edge_length[el.edges[step].edge];
    const ScaledMonomialBasis1D b1(geom.t0(), geom.t1(), k - 1);
    const EdgeRule rule = edge_rule(geom, quad.edge_pts(k, geom.curved()));
    for (int q = 0; q < rule.nodes.size(); ++q) {
      const CurveSample s = geom.at(rule.nodes(q));
      d.segment(layout.edge_dof(step, 0), k) +=
          (rule.weights(q) * s.speed * v(s.position) / len) * b1.eval(rule.nodes(q));
    }
  }

  if (k >= 2) {
    const ScaledMonomialBasis2D low(el.centroid, el.diameter, k - 2);
    const BulkRule rule = bulk_rule(mesh, el, quad.bulk_degree(k));
    for (int q = 0; q < rule.weights.size(); ++q)
      d.segment(layout.bulk_dof(0), layout.n_bulk_dofs()) +=
          (rule.weights(q) * v(rule.points[q]) / el.area) * low.eval(rule.points[q]);
  }
  return d;
}

}  // namespace curvem
