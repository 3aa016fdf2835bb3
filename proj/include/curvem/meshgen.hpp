#pragma once

#include "curvem/mesh.hpp"

namespace curvem {

// Polar mesh of the unit disk: a central fan around the origin plus annular
// quads on uniform radii i/rings; only the outermost arcs (and, with the
// interface flag, the arcs on r = 1/2) are curve-bound, everything else is
// chords. For rings >= 2 and even sectors the central fan pairs two sectors
// per element, which keeps the kernel/edge ratios of the center bounded away
// from zero under refinement. With the interface flag (rings must be even)
// the coefficient is kappa = 1 inside r <= 1/2 and kappa = 5 outside.
Mesh gen_polar_disk_mesh(int rings, int sectors, bool interface_at_half);

// n x n structured grid of the unit square, all edges straight.
Mesh gen_unit_square_mesh(int n);

// Same grid with column widths alternating ratio : 1, rows uniform. The
// boundary x-partition is then rough at every scale, which a straightened
// curved boundary needs to exhibit its generic geometric-error cap; on a
// uniform partition the chord defects form a smooth envelope and the cap
// is invisible. n must be even so the pattern tiles [0, 1] exactly.
Mesh gen_alternating_square_mesh(int n, double ratio = 2.0);

// The sine-bottom/sine-top domain curves y = g1(x), y = g2(x).
Curve sine_bottom_curve();
Curve sine_top_curve();

// Node-mapping rule from the unit square onto the sine domain:
// y <= 1/2 -> y + g1(x)(1 - 2y), y >= 1/2 -> 1 - y + g2(x)(2y - 1).
Eigen::Vector2d map_square_point(const Eigen::Vector2d& p);

// Maps a straight unit-square mesh onto the sine domain: every vertex moves
// by the rule above, bottom/top boundary edges become arcs of g1/g2 with
// parameter x, all other edges stay straight. The input must be finalized
// (boundary markers drive edge classification).
Mesh map_unit_square_mesh(const Mesh& square);

// map_unit_square_mesh(gen_unit_square_mesh(n)).
Mesh gen_mapped_square_mesh(int n);

}  // namespace curvem
