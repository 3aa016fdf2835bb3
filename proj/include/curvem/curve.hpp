#pragma once

#include <Eigen/Dense>
#include <string>

namespace curvem {

enum class CurveKind {
  CircleArc,   // center + radius, parametrized by angle on [angle0, angle1]
  SineGraph,   // t -> (t, offset + orientation * amplitude * sin(omega t))
  Segment,     // affine segment p0 -> p1 on [0, 1]
  ChordOf,     // straight chord of another curve between two of its parameters
};

struct CurveSample {
  Eigen::Vector2d position;
  Eigen::Vector2d tangent;  // d(gamma)/dt, not normalized
  double speed;             // |tangent|
};

// A named smooth curve with an evaluatable regular parametrization. Plain
// value type so meshes round-trip through files; ChordOf caches its resolved
// endpoints when the owning mesh is finalized.
struct Curve {
  CurveKind kind = CurveKind::Segment;

  // CircleArc
  Eigen::Vector2d center{0, 0};
  double radius = 1.0;

  // SineGraph
  double amplitude = 0.0;
  double omega = 0.0;
  double offset = 0.0;
  double orientation = 1.0;

  // Segment endpoints; also the resolved chord endpoints for ChordOf.
  Eigen::Vector2d p0{0, 0};
  Eigen::Vector2d p1{0, 0};

  // ChordOf: index of the underlying curve in the mesh curve table.
  int of = -1;

  // Evaluation domain [t_lo, t_hi].
  double t_lo = 0.0;
  double t_hi = 1.0;

  CurveSample eval(double t) const;  // throws DomainError outside the domain

  static Curve circle_arc(const Eigen::Vector2d& center, double radius, double angle0,
                          double angle1);
  static Curve sine_graph(double amplitude, double omega, double offset, double t0, double t1,
                          double orientation = 1.0);
  static Curve segment(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1);
  // Chord endpoints must be resolved against the underlying curve before use.
  static Curve chord_of(int of, double t0, double t1);
};

std::string to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& name);

}  // namespace curvem
