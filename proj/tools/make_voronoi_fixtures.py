#!/usr/bin/env python3
"""Regenerates the committed Voronoi mesh fixtures under tests/fixtures/.

Two fixtures come out of one construction, a Lloyd-relaxed Voronoi
tessellation of the unit square built from mirrored seed clouds so that
boundary ridges land exactly on the square sides:

  voronoi_square.json  small straight tessellation for the polynomial
                       reproduction tests
  voronoi_sine.json    the same construction mapped onto the sine-bounded
                       domain x in [0,1], g1(x) <= y <= g2(x) with
                       g1 = sin(pi x)/20, g2 = 1 + sin(3 pi x)/20; bottom
                       and top boundary edges carry the graph curves

The mapping moves vertices only, so interior edges stay straight chords.
Boundary y-values are evaluated with math.sin, which the solver's curve
evaluation reproduces bit for bit after the JSON round-trip.

Output is deterministic for fixed numpy/scipy versions (fixed RNG seeds,
17 significant digits).
"""

import argparse
import math
import os

import numpy as np
from scipy.spatial import Voronoi

G1_AMPLITUDE, G1_OMEGA, G1_OFFSET = 0.05, math.pi, 0.0
G2_AMPLITUDE, G2_OMEGA, G2_OFFSET = 0.05, 3.0 * math.pi, 1.0

SIDES = ("left", "right", "bottom", "top")


def mirrored(points):
    x, y = points[:, 0], points[:, 1]
    blocks = [points,
              np.column_stack((-x, y)), np.column_stack((2.0 - x, y)),
              np.column_stack((x, -y)), np.column_stack((x, 2.0 - y))]
    return np.vstack(blocks)


def ordered_region(vor, seed_index, seed_point):
    region = vor.regions[vor.point_region[seed_index]]
    if -1 in region:
        raise RuntimeError("unbounded Voronoi region for an interior seed")
    verts = vor.vertices[region]
    angles = np.arctan2(verts[:, 1] - seed_point[1], verts[:, 0] - seed_point[0])
    order = np.argsort(angles)
    return [region[i] for i in order]


def polygon_centroid(verts):
    x, y = verts[:, 0], verts[:, 1]
    xs, ys = np.roll(x, -1), np.roll(y, -1)
    cross = x * ys - xs * y
    area = 0.5 * cross.sum()
    cx = ((x + xs) * cross).sum() / (6.0 * area)
    cy = ((y + ys) * cross).sum() / (6.0 * area)
    return np.array([cx, cy])


def lloyd(points, max_iterations):
    # Centroidal relaxation until the seeds stop moving relative to the
    # target cell size; uniform cells keep max diameter proportional to
    # 1/sqrt(n) across refinement levels.
    tol = 2e-3 / math.sqrt(len(points))
    for _ in range(max_iterations):
        vor = Voronoi(mirrored(points))
        moved = np.array([polygon_centroid(vor.vertices[ordered_region(vor, i, points[i])])
                          for i in range(len(points))])
        shift = float(np.max(np.linalg.norm(moved - points, axis=1)))
        points = moved
        if shift < tol:
            break
    return points


def build_square_tessellation(n_seeds, rng_seed, iterations):
    """Voronoi cells of the unit square as shared-vertex polygon cycles.

    Returns (vertices, cells, boundary_side) where boundary_side maps a
    frozenset of two vertex ids to the square side its ridge lies on.
    """
    rng = np.random.default_rng(rng_seed)
    margin = 0.25 / math.sqrt(n_seeds)
    points = rng.uniform(margin, 1.0 - margin, size=(n_seeds, 2))
    points = lloyd(points, iterations)
    vor = Voronoi(mirrored(points))
    n = len(points)

    # Ridges against a mirror block pin their Voronoi vertices to that side.
    side_of_ridge = {}
    for (pa, pb), rv in zip(vor.ridge_points, vor.ridge_vertices):
        a, b = (pa, pb) if pa < pb else (pb, pa)
        if a >= n or b < n:
            continue
        side = SIDES[b // n - 1]
        side_of_ridge[frozenset(rv)] = side

    def snapped(vertex_id):
        x, y = vor.vertices[vertex_id]
        if abs(x) < 1e-9:
            x = 0.0
        if abs(x - 1.0) < 1e-9:
            x = 1.0
        if abs(y) < 1e-9:
            y = 0.0
        if abs(y - 1.0) < 1e-9:
            y = 1.0
        return (x, y)

    vertex_ids = {}
    new_id_of = {}
    vertices = []
    cells = []
    for i in range(n):
        region = ordered_region(vor, i, points[i])
        cycle = []
        for rv in region:
            key = snapped(rv)
            if key not in vertex_ids:
                vertex_ids[key] = len(vertices)
                vertices.append(key)
            new_id_of[rv] = vertex_ids[key]
            if not cycle or cycle[-1] != vertex_ids[key]:
                cycle.append(vertex_ids[key])
        if cycle[0] == cycle[-1]:
            cycle.pop()
        if len(cycle) < 3:
            raise RuntimeError("degenerate cell after welding")
        cells.append(cycle)

    boundary_side = {}
    for rv_pair, side in side_of_ridge.items():
        mapped = frozenset(new_id_of[rv] for rv in rv_pair if rv in new_id_of)
        if len(mapped) == 2:
            boundary_side[mapped] = side
    return vertices, cells, boundary_side


def quality(vertices, cells):
    verts = np.array(vertices)
    shortest = math.inf
    for cycle in cells:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            shortest = min(shortest, float(np.linalg.norm(verts[a] - verts[b])))
    return shortest


def tessellate(n_seeds, rng_seed, iterations, min_edge):
    for attempt in range(32):
        vertices, cells, boundary_side = build_square_tessellation(
            n_seeds, rng_seed + 1000 * attempt, iterations)
        if quality(vertices, cells) >= min_edge:
            return vertices, cells, boundary_side
    raise RuntimeError("no attempt met the edge-length floor")


def g1(x):
    return G1_OFFSET + G1_AMPLITUDE * math.sin(G1_OMEGA * x)


def g2(x):
    return G2_OFFSET + G2_AMPLITUDE * math.sin(G2_OMEGA * x)


def fmt(v):
    return "%.17g" % float(v)


def emit_mesh(vertices, cells, boundary_side, curved):
    """Serializes cells into the mesh JSON schema.

    curved=False writes every edge straight (unit square fixture);
    curved=True maps vertices onto the sine domain and binds bottom/top
    boundary edges to the graph curves with the x coordinate as parameter.
    """
    if curved:
        mapped = []
        for x, y in vertices:
            lo, hi = g1(x), g2(x)
            if y == 0.0:
                mapped.append((x, lo))
            elif y == 1.0:
                mapped.append((x, hi))
            else:
                mapped.append((x, lo + y * (hi - lo)))
        out_vertices = mapped
    else:
        out_vertices = vertices

    edge_ids = {}
    edges = []
    elements = []
    for cycle in cells:
        sides = []
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            key = frozenset((a, b))
            if key not in edge_ids:
                edge_ids[key] = len(edges)
                side = boundary_side.get(key) if curved else None
                if side in ("bottom", "top"):
                    lo, hi = (a, b) if vertices[a][0] < vertices[b][0] else (b, a)
                    curve = 0 if side == "bottom" else 1
                    edges.append({"v": [lo, hi], "curve": curve,
                                  "t": [vertices[lo][0], vertices[hi][0]]})
                else:
                    edges.append({"v": [a, b], "curve": None, "t": None})
            eid = edge_ids[key]
            reversed_use = edges[eid]["v"][0] != a
            sides.append(-(eid + 1) if reversed_use else eid + 1)
        elements.append(sides)

    lines = ['{', '"vertices": [']
    lines.append(",\n".join("[%s, %s]" % (fmt(x), fmt(y)) for x, y in out_vertices))
    lines.append('],')
    if curved:
        lines.append('"curves": [')
        lines.append(",\n".join([
            '{"id": 0, "kind": "sine-graph", "amplitude": %s, "omega": %s, '
            '"offset": %s, "orientation": 1, "t": [0, 1]}'
            % (fmt(G1_AMPLITUDE), fmt(G1_OMEGA), fmt(G1_OFFSET)),
            '{"id": 1, "kind": "sine-graph", "amplitude": %s, "omega": %s, '
            '"offset": %s, "orientation": 1, "t": [0, 1]}'
            % (fmt(G2_AMPLITUDE), fmt(G2_OMEGA), fmt(G2_OFFSET))]))
        lines.append('],')
    else:
        lines.append('"curves": [],')
    lines.append('"edges": [')
    edge_rows = []
    for e in edges:
        if e["curve"] is None:
            edge_rows.append('{"v": [%d, %d], "curve": null, "t": null}' % tuple(e["v"]))
        else:
            edge_rows.append('{"v": [%d, %d], "curve": %d, "t": [%s, %s]}'
                             % (e["v"][0], e["v"][1], e["curve"],
                                fmt(e["t"][0]), fmt(e["t"][1])))
    lines.append(",\n".join(edge_rows))
    lines.append('],')
    lines.append('"elements": [')
    lines.append(",\n".join('{"edges": [%s], "kappa": 1}'
                            % ", ".join(str(s) for s in sides) for sides in elements))
    lines.append(']')
    lines.append('}')
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=os.path.join(os.path.dirname(__file__),
                                                      os.pardir, "tests", "fixtures"))
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)

    def write(name, text):
        path = os.path.join(args.out, name)
        with open(path, "w") as handle:
            handle.write(text)
        print("wrote", path)

    vertices, cells, boundary = tessellate(n_seeds=12, rng_seed=3, iterations=80,
                                           min_edge=5e-3)
    write("voronoi_square.json", emit_mesh(vertices, cells, boundary, curved=False))

    vertices, cells, boundary = tessellate(n_seeds=64, rng_seed=8, iterations=60,
                                           min_edge=1e-3)
    write("voronoi_sine.json", emit_mesh(vertices, cells, boundary, curved=True))


if __name__ == "__main__":
    main()
