#include "curvem/curve.hpp"

#include <cmath>

#include "curvem/errors.hpp"

namespace curvem {

CurveSample Curve::eval(double t) const {
  const double span = std::abs(t_hi - t_lo);
  const double slack = 1e-12 * std::max(1.0, span);
  if (t < std::min(t_lo, t_hi) - slack || t > std::max(t_lo, t_hi) + slack)
    throw DomainError("curve parameter " + std::to_string(t) + " outside domain [" +
                      std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]");

  CurveSample s;
  switch (kind) {
    case CurveKind::CircleArc: {
      const double c = std::cos(t), sn = std::sin(t);
      s.position = center + radius * Eigen::Vector2d(c, sn);
      s.tangent = radius * Eigen::Vector2d(-sn, c);
      break;
    }
    case CurveKind::SineGraph: {
      s.position = {t, offset + orientation * amplitude * std::sin(omega * t)};
      s.tangent = {1.0, orientation * amplitude * omega * std::cos(omega * t)};
      break;
    }
    case CurveKind::Segment: {
      s.position = p0 + t * (p1 - p0);
      s.tangent = p1 - p0;
      break;
    }
    case CurveKind::ChordOf: {
      const double w = (t - t_lo) / (t_hi - t_lo);
      s.position = p0 + w * (p1 - p0);
      s.tangent = (p1 - p0) / (t_hi - t_lo);
      break;
    }
  }
  s.speed = s.tangent.norm();
  return s;
}

Curve Curve::circle_arc(const Eigen::Vector2d& center, double radius, double angle0,
                        double angle1) {
  Curve c;
  c.kind = CurveKind::CircleArc;
  c.center = center;
  c.radius = radius;
  c.t_lo = angle0;
  c.t_hi = angle1;
  return c;
}

Curve Curve::sine_graph(double amplitude, double omega, double offset, double t0, double t1,
                        double orientation) {
  Curve c;
  c.kind = CurveKind::SineGraph;
  c.amplitude = amplitude;
  c.omega = omega;
  c.offset = offset;
  c.orientation = orientation;
  c.t_lo = t0;
  c.t_hi = t1;
  return c;
}

Curve Curve::segment(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1) {
  Curve c;
  c.kind = CurveKind::Segment;
  c.p0 = p0;
  c.p1 = p1;
  c.t_lo = 0.0;
  c.t_hi = 1.0;
  return c;
}

Curve Curve::chord_of(int of, double t0, double t1) {
  Curve c;
  c.kind = CurveKind::ChordOf;
  c.of = of;
  c.t_lo = t0;
  c.t_hi = t1;
  return c;
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::CircleArc: return "circle-arc";
    case CurveKind::SineGraph: return "sine-graph";
    case CurveKind::Segment: return "segment";
    case CurveKind::ChordOf: return "chord";
  }
  return "?";
}

CurveKind curve_kind_from_string(const std::string& name) {
  if (name == "circle-arc") return CurveKind::CircleArc;
  if (name == "sine-graph") return CurveKind::SineGraph;
  if (name == "segment") return CurveKind::Segment;
  if (name == "chord") return CurveKind::ChordOf;
  throw DomainError("unknown curve kind '" + name + "'");
}

}  // namespace curvem
