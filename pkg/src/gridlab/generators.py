"""Instance generators: wheel maps, grids, grid maps, random planar
triangulations and random canonical maps.

All generators are deterministic functions of their parameters and seed
(PRNG: Python's random.Random, i.e. Mersenne Twister).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embedding import (EmbeddedGraph, FaceLabeling, canonicalize_components,
                        is_canonical, map_graph)
from .errors import GridlabError
from .graph import SimpleGraph

FAMILIES = ("wheel_map", "grid", "partially_triangulated_grid",
            "random_map", "random_planar_triangulation")


@dataclass
class GeneratorSpec:
    """Family tag plus parameters; the seed fully determines the output."""

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        for key, value in self.params.items():
            if key != "seed" and int(value) < 1:
                raise ValueError(f"parameter {key}={value} must be positive")

    def build(self):
        p = self.params
        if self.family == "wheel_map":
            return wheel_map(p["r"])
        if self.family == "grid":
            return grid(p["rows"], p["cols"])
        if self.family == "partially_triangulated_grid":
            return partially_triangulated_grid(p["rows"], p["cols"],
                                               p["seed"])
        if self.family == "random_map":
            return random_canonical_map(p["nations"], p["seed"])
        return random_planar_triangulation(p["n"], p["seed"])


def grid(rows, cols):
    """rows x cols grid graph, vertex (i,j) -> i*cols + j."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return SimpleGraph(rows * cols, edges)


def partially_triangulated_grid(rows, cols, seed):
    """Grid plus at most one seeded random diagonal per bounded face."""
    g = grid(rows, cols)
    rng = random.Random((rows, cols, seed).__repr__())
    edges = set(g.edges)
    for i in range(rows - 1):
        for j in range(cols - 1):
            a = i * cols + j          # (i, j)
            b = a + 1                 # (i, j+1)
            c = a + cols              # (i+1, j)
            d = c + 1                 # (i+1, j+1)
            pick = rng.choice(("none", "main", "anti"))
            if pick == "main":
                edges.add((a, d))
            elif pick == "anti":
                edges.add((b, c))
    return SimpleGraph(rows * cols, edges)


# ---------------------------------------------------------------------------
# embedded maps

def _build_from_rotations(neighbor_lists):
    """EmbeddedGraph from per-vertex rotations given as neighbor-id lists
    (no loops; parallel edges allowed if distinguished by position).

    neighbor_lists[v] lists, in rotation order, (neighbor, edge_key)
    pairs; the two endpoints of an edge must use the same key.
    """
    dart_at = {}
    darts = []
    for v, rot in enumerate(neighbor_lists):
        for slot, (w, key) in enumerate(rot):
            dart_at[(v, slot)] = len(darts)
            darts.append((v, w, key))
    twin = [None] * len(darts)
    by_key = {}
    for d, (v, w, key) in enumerate(darts):
        k = (min(v, w), max(v, w), key)
        if k in by_key:
            other = by_key.pop(k)
            twin[d] = other
            twin[other] = d
        else:
            by_key[k] = d
    if by_key:
        raise ValueError(f"unmatched darts: {sorted(by_key)}")
    nxt = [None] * len(darts)
    for v, rot in enumerate(neighbor_lists):
        for slot in range(len(rot)):
            nxt[dart_at[(v, slot)]] = dart_at[(v, (slot + 1) % len(rot))]
    vertex_of = [v for v, _, _ in darts]
    return EmbeddedGraph(twin, nxt, vertex_of)


def wheel_map(r):
    """Embedded wheel with r^2 spokes; bounded faces are nations (in
    spoke order), the outer face is the lake."""
    if r < 1:
        raise ValueError("r must be >= 1")
    s = r * r
    if s == 1:
        # degenerate wheel: one spoke plus a rim loop around the hub
        twin = [1, 0, 3, 2]
        # dart 0: hub->rim (spoke), dart 1: rim->hub,
        # darts 2,3: the rim loop at vertex 1
        nxt = [0, 2, 3, 1]
        vertex_of = [0, 1, 1, 1]
        e = EmbeddedGraph(twin, nxt, vertex_of)
        spoke_face = e.face_of[0]
        lake = ({0, 1} - {spoke_face}).pop()
        return e, FaceLabeling((spoke_face,), {lake})
    hub_rot = [(i, ("spoke", i)) for i in range(1, s + 1)]
    rots = [hub_rot]
    for i in range(1, s + 1):
        nxt_rim = i % s + 1
        prev_rim = (i - 2) % s + 1
        rots.append([(0, ("spoke", i)),
                     (prev_rim, ("rim", min(i, prev_rim), max(i, prev_rim))),
                     (nxt_rim, ("rim", min(i, nxt_rim), max(i, nxt_rim)))])
    e = _build_from_rotations(rots)
    # bounded faces are the triangles; identify the outer face by size
    inner = [f for f, walk in enumerate(e.faces) if len(walk) == 3]
    outer = [f for f, walk in enumerate(e.faces) if len(walk) != 3]
    if s == 2:
        # two digon-free faces of equal length; fall back to Euler count
        assert len(e.faces) == 3
        sizes = sorted(range(3), key=lambda f: len(e.faces[f]))
        inner, outer = sizes[:2], sizes[2:]
    if len(outer) != 1 or len(inner) != s:
        raise GridlabError("unexpected wheel face structure")
    # order nations by the smallest incident rim vertex on the hub side
    def nation_key(f):
        return min(e.vertex_of[d] for d in e.faces[f]
                   if e.vertex_of[d] != 0)
    return e, FaceLabeling(sorted(inner, key=nation_key), set(outer))


def grid_map(rows, cols):
    """Map whose nations are the rows x cols unit cells of a planar grid;
    the unbounded face is the lake.  Nation (i,j) has index i*cols + j."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    w = cols + 1
    rots = []
    for i in range(rows + 1):
        for j in range(cols + 1):
            v = i * w + j
            rot = []
            # counterclockwise with y pointing down: E, N, W, S
            if j + 1 <= cols:
                rot.append((v + 1, ("h", v)))
            if i - 1 >= 0:
                rot.append((v - w, ("v", v - w)))
            if j - 1 >= 0:
                rot.append((v - 1, ("h", v - 1)))
            if i + 1 <= rows:
                rot.append((v + w, ("v", v)))
            rots.append(rot)
    e = _build_from_rotations(rots)
    assert e.genus() == 0
    cell_face = {}
    outer = None
    for f, walk in enumerate(e.faces):
        verts = {e.vertex_of[d] for d in walk}
        if len(walk) == 4 and len(verts) == 4:
            top_left = min(verts)
            i, j = divmod(top_left, w)
            if (verts == {top_left, top_left + 1, top_left + w,
                          top_left + w + 1} and i < rows and j < cols
                    and (i, j) not in cell_face):
                cell_face[(i, j)] = f
                continue
        if outer is not None:
            raise GridlabError("ambiguous outer face in grid map")
        outer = f
    if rows == 1 and cols == 1 and outer is None:
        # C4 on the sphere: both faces are unit squares; pick one as lake
        (i, j), f = sorted(cell_face.items())[0]
        outer = cell_face.pop(sorted(cell_face)[-1])
    if len(cell_face) != rows * cols or outer is None:
        raise GridlabError("unexpected grid-map face structure")
    nations = [cell_face[(i, j)] for i in range(rows) for j in range(cols)]
    return e, FaceLabeling(nations, {outer})


def random_graph(n, seed, edge_prob=0.4):
    """Seeded Erdos-Renyi style graph with at least one edge."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rng = random.Random(f"gnp:{n}:{seed}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    if not edges:
        u = rng.randrange(n - 1)
        edges = [(u, u + 1)]
    return SimpleGraph(n, edges)


def _triangle():
    rots = [[(1, "a"), (2, "c")],
            [(2, "b"), (0, "a")],
            [(0, "c"), (1, "b")]]
    return _build_from_rotations(rots)


def _insert_into_face(e, face_idx, new_vertex):
    """Insert a vertex inside a triangular face, joined to its corners."""
    walk = e.faces[face_idx]
    assert len(walk) == 3
    base = len(e.twin)
    twin = list(e.twin)
    nxt = list(e.nxt)
    vertex_of = list(e.vertex_of)
    prev = [0] * len(e.nxt)
    for d, m in enumerate(e.nxt):
        prev[m] = d
    new_at_corner = {}
    for idx, d in enumerate(walk):
        a = base + 2 * idx       # dart at the corner vertex
        b = base + 2 * idx + 1   # dart at the new vertex
        twin.extend([b, a])
        vertex_of.extend([e.vertex_of[d], new_vertex])
        # place a just before d in the corner's rotation
        p = prev[d]
        if p == d:  # degree-1 corner: rotation is a self-cycle
            nxt.extend([d, 0])
            nxt[d] = a
        else:
            nxt[p] = a
            nxt.extend([d, 0])
        new_at_corner[idx] = (a, b)
    for orientation in (True, False):
        order = [new_at_corner[i][1] for i in
                 (range(2, -1, -1) if orientation else range(3))]
        for i, b in enumerate(order):
            nxt[b] = order[(i + 1) % 3]
        candidate = EmbeddedGraph(twin, nxt, vertex_of)
        if (candidate.genus() == 0
                and all(len(wk) == 3 for wk in candidate.faces)):
            return candidate
    raise GridlabError("vertex insertion broke the triangulation")


def random_planar_triangulation(n, seed):
    """Stacked planar triangulation on n >= 3 vertices: repeated seeded
    insertion of a degree-3 vertex into a random face.  Simple,
    3-connected for n >= 4, genus 0."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(f"tri:{n}:{seed}")
    e = _triangle()
    for v in range(3, n):
        f = rng.randrange(len(e.faces))
        e = _insert_into_face(e, f, v)
    return e


def random_canonical_map(nations, seed):
    """Random canonical map with the requested number of nations and a
    connected map graph.  Built triangulation-first, then a random face
    subset is marked as lakes and the result canonicalized."""
    if nations < 1:
        raise ValueError("need at least one nation")
    rng = random.Random(f"map:{nations}:{seed}")
    for _ in range(500):
        n_tri = max(4, (nations + 5) // 2 + rng.randint(0, 3))
        num_faces = 2 * n_tri - 4
        if num_faces < nations:
            continue
        tri = random_planar_triangulation(n_tri, rng.randrange(2 ** 30))
        nation_faces = sorted(rng.sample(range(num_faces), nations))
        lakes = set(range(num_faces)) - set(nation_faces)
        fl = FaceLabeling(nation_faces, lakes)
        try:
            parts = canonicalize_components(tri, fl)
        except GridlabError:
            continue
        if len(parts) != 1:
            continue
        e2, fl2, _ = parts[0]
        if not is_canonical(e2, fl2):
            continue
        if not map_graph(e2, fl2).is_connected():
            continue
        return e2, fl2
    raise GridlabError(
        f"no connected canonical map with {nations} nations found for "
        f"seed {seed}")
