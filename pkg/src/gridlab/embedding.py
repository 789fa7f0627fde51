"""Embedded multigraphs as rotation systems (combinatorial maps).

Darts are half-edges 0..2m-1.  `twin` pairs darts into edges, `nxt`
gives the counterclockwise successor around the base vertex, and
`vertex_of` assigns each dart its base vertex.  Faces are the orbits of
d -> nxt[twin[d]].  Multiple edges and loops are allowed; SimpleGraph
outputs always collapse duplicates and drop loops.
"""

from __future__ import annotations

from .errors import FormatError, GridlabError
from .graph import Bipartition, SimpleGraph


class EmbeddedGraph:
    """Immutable rotation-system embedding of a connected-or-not
    multigraph; faces and genus are derived, not stored."""

    __slots__ = ("num_vertices", "twin", "nxt", "vertex_of",
                 "_faces", "_face_of")

    def __init__(self, twin, nxt, vertex_of):
        twin = tuple(twin)
        nxt = tuple(nxt)
        vertex_of = tuple(vertex_of)
        d = len(twin)
        if d % 2 or len(nxt) != d or len(vertex_of) != d:
            raise ValueError("dart arrays must have equal even length")
        for i in range(d):
            if twin[i] == i or twin[twin[i]] != i:
                raise ValueError(f"twin is not a fixed-point-free "
                                 f"involution at dart {i}")
        if sorted(nxt) != list(range(d)):
            raise ValueError("next is not a permutation of the darts")
        # rotation orbits must be exactly the per-vertex dart classes
        seen_vertex = {}
        visited = [False] * d
        for start in range(d):
            if visited[start]:
                continue
            v = vertex_of[start]
            if v in seen_vertex:
                raise ValueError(
                    f"vertex {v} has more than one rotation orbit")
            seen_vertex[v] = start
            cur = start
            while not visited[cur]:
                visited[cur] = True
                if vertex_of[cur] != v:
                    raise ValueError(
                        f"rotation orbit of dart {start} mixes vertices")
                cur = nxt[cur]
        n = (max(vertex_of) + 1) if vertex_of else 0
        if set(seen_vertex) != set(range(n)):
            raise ValueError("vertex ids must be contiguous from 0")
        self.twin = twin
        self.nxt = nxt
        self.vertex_of = vertex_of
        self.num_vertices = n
        self._faces = None
        self._face_of = None

    def num_darts(self):
        return len(self.twin)

    def num_edges(self):
        return len(self.twin) // 2

    def vertex_darts(self, v):
        """Darts based at v in rotation order, starting at the smallest."""
        start = min((d for d in range(len(self.twin))
                     if self.vertex_of[d] == v), default=None)
        if start is None:
            return []
        out = [start]
        cur = self.nxt[start]
        while cur != start:
            out.append(cur)
            cur = self.nxt[cur]
        return out

    def degree(self, v):
        return sum(1 for d in range(len(self.twin))
                   if self.vertex_of[d] == v)

    def max_degree(self):
        return max((self.degree(v) for v in range(self.num_vertices)),
                   default=0)

    @property
    def faces(self):
        """Face walks as dart tuples; orbit of d -> nxt[twin[d]], each
        rotated to start at its smallest dart, sorted by that dart."""
        if self._faces is None:
            d = len(self.twin)
            visited = [False] * d
            walks = []
            for start in range(d):
                if visited[start]:
                    continue
                walk = []
                cur = start
                while not visited[cur]:
                    visited[cur] = True
                    walk.append(cur)
                    cur = self.nxt[self.twin[cur]]
                walks.append(tuple(walk))
            walks.sort(key=lambda w: min(w))
            self._faces = [self._rotate_to_min(w) for w in walks]
            face_of = [None] * d
            for i, w in enumerate(self._faces):
                for dart in w:
                    face_of[dart] = i
            self._face_of = face_of
        return self._faces

    @staticmethod
    def _rotate_to_min(walk):
        i = walk.index(min(walk))
        return walk[i:] + walk[:i]

    @property
    def face_of(self):
        self.faces
        return self._face_of

    def components(self):
        """Vertex sets of connected components."""
        return self.simple_multigraph_components()

    def simple_multigraph_components(self):
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(0, len(self.twin)):
            a, b = find(self.vertex_of[d]), find(self.vertex_of[self.twin[d]])
            if a != b:
                parent[a] = b
        comps = {}
        for v in range(self.num_vertices):
            comps.setdefault(find(v), []).append(v)
        return [sorted(c) for c in
                sorted(comps.values(), key=lambda c: min(c))]

    def genus(self):
        """Euler genus 2 - V + E - F of the stored embedding, summed over
        connected components (each component on its own surface)."""
        comps = self.components()
        face_comp = {}
        for i, walk in enumerate(self.faces):
            face_comp[i] = self.vertex_of[walk[0]]
        comp_of_vertex = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of_vertex[v] = ci
        total = 0
        for ci, comp in enumerate(comps):
            vs = len(comp)
            es = sum(1 for d in range(0, len(self.twin), 1)
                     if self.vertex_of[d] in set(comp)) // 2
            fs = sum(1 for i, walk in enumerate(self.faces)
                     if comp_of_vertex[self.vertex_of[walk[0]]] == ci)
            total += 2 - vs + es - fs
        return total

    def simple_graph(self):
        """Underlying SimpleGraph: loops dropped, multi-edges collapsed."""
        edges = set()
        for d in range(len(self.twin)):
            u, v = self.vertex_of[d], self.vertex_of[self.twin[d]]
            if u != v:
                edges.add((min(u, v), max(u, v)))
        return SimpleGraph(self.num_vertices, edges)

    def incident_nations(self, fl):
        """vertex -> set of nation indices whose face touches it."""
        nation_index = {f: i for i, f in enumerate(fl.nations)}
        out = [set() for _ in range(self.num_vertices)]
        for d in range(len(self.twin)):
            i = nation_index.get(self.face_of[d])
            if i is not None:
                out[self.vertex_of[d]].add(i)
        return out

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self.twin == other.twin and self.nxt == other.nxt
                and self.vertex_of == other.vertex_of)

    def __repr__(self):
        return (f"EmbeddedGraph(V={self.num_vertices}, "
                f"E={self.num_edges()}, F={len(self.faces)})")


class FaceLabeling:
    """Partition of an embedding's faces into nations and lakes.

    `nations` is an ordered tuple: nation i of every derived graph
    (dual, map, radial) is nations[i].  Order is preserved by
    canonicalize, which is what map-graph identity tests rely on.
    """

    __slots__ = ("nations", "lakes")

    def __init__(self, nations, lakes):
        nations = tuple(nations)
        if len(set(nations)) != len(nations):
            raise ValueError("duplicate nation face id")
        if not nations:
            raise ValueError("at least one nation is required")
        lakes = frozenset(lakes)
        if lakes & set(nations):
            raise ValueError("a face cannot be both nation and lake")
        self.nations = nations
        self.lakes = lakes

    def check(self, e):
        all_faces = set(range(len(e.faces)))
        if set(self.nations) | self.lakes != all_faces:
            raise ValueError("nations and lakes do not cover all faces")

    def __eq__(self, other):
        if not isinstance(other, FaceLabeling):
            return NotImplemented
        return self.nations == other.nations and self.lakes == other.lakes

    def __repr__(self):
        return (f"FaceLabeling(nations={list(self.nations)}, "
                f"lakes={sorted(self.lakes)})")


def all_nations(e):
    """FaceLabeling marking every face a nation (the no-lakes setting)."""
    return FaceLabeling(range(len(e.faces)), ())


def dual_graph(e, fl):
    """Modified dual on nations: edge iff two nations share a primal edge."""
    fl.check(e)
    nation_index = {f: i for i, f in enumerate(fl.nations)}
    edges = set()
    for d in range(len(e.twin)):
        a = nation_index.get(e.face_of[d])
        b = nation_index.get(e.face_of[e.twin[d]])
        if a is not None and b is not None and a != b:
            edges.add((min(a, b), max(a, b)))
    return SimpleGraph(len(fl.nations), edges)


def map_graph(e, fl):
    """Map graph on nations: edge iff two nations share a primal vertex."""
    fl.check(e)
    edges = set()
    for touching in e.incident_nations(fl):
        touching = sorted(touching)
        for i, a in enumerate(touching):
            for b in touching[i + 1:]:
                edges.add((a, b))
    return SimpleGraph(len(fl.nations), edges)


def radial_graph(e, fl):
    """Vertex-nation incidence graph.

    Vertices 0..n-1 are the embedded graph's vertices; n+i is nation i.
    Returns (graph, bipartition) with the graph vertices on the left.
    """
    fl.check(e)
    n = e.num_vertices
    edges = set()
    for v, touching in enumerate(e.incident_nations(fl)):
        for i in touching:
            edges.add((v, n + i))
    g = SimpleGraph(n + len(fl.nations), edges)
    bip = Bipartition(range(n), range(n, n + len(fl.nations)))
    return g, bip


def union_radial_dual(e, fl):
    """Radial edges plus dual edges under the shared nation ids."""
    r, _ = radial_graph(e, fl)
    d = dual_graph(e, fl)
    n = e.num_vertices
    edges = set(r.edges)
    for a, b in d.edges:
        edges.add((n + a, n + b))
    return SimpleGraph(r.n, edges)


def genus(e):
    """Euler genus of the stored embedding (not minimized)."""
    return e.genus()


# ---------------------------------------------------------------------------
# canonicalization

NATION = "N"
LAKE = "L"


class _MutableMap:
    """Scratch rotation system for canonicalization surgery.

    Keeps original dart ids; new darts get fresh ids.  `label[d]` is
    ("N", i) for darts on nation i's boundary, ("L",) for lake darts.
    """

    def __init__(self, e, fl):
        self.rot = {v: e.vertex_darts(v) for v in range(e.num_vertices)}
        self.twin = dict(enumerate(e.twin))
        self.vertex_of = dict(enumerate(e.vertex_of))
        nation_index = {f: i for i, f in enumerate(fl.nations)}
        self.label = {}
        for f, walk in enumerate(e.faces):
            tag = ((NATION, nation_index[f]) if f in nation_index
                   else (LAKE,))
            for d in walk:
                self.label[d] = tag
        self.next_dart = len(e.twin)
        self.next_vertex = e.num_vertices

    def darts(self):
        return self.twin.keys()

    def delete_edge(self, d):
        t = self.twin[d]
        for x in (d, t):
            self.rot[self.vertex_of[x]].remove(x)
            del self.twin[x], self.vertex_of[x], self.label[x]

    def delete_dartless_vertices(self):
        for v in [v for v, r in self.rot.items() if not r]:
            del self.rot[v]

    def lake_corner_darts(self, v):
        return [d for d in self.rot[v] if self.label[d] == (LAKE,)]

    def split_lake_corner(self, v, e_dart):
        """Move the lake wedge at corner dart `e_dart` to a fresh vertex
        joined to v by a star edge drawn inside the neighboring nation."""
        rot_v = self.rot[v]
        i = rot_v.index(e_dart)
        p_dart = rot_v[(i - 1) % len(rot_v)]
        assert p_dart != e_dart, "degree-1 lake corner survived step 2"
        v1 = self.next_vertex
        self.next_vertex += 1
        s = self.next_dart
        s1 = self.next_dart + 1
        self.next_dart += 2
        self.twin[s] = s1
        self.twin[s1] = s
        self.vertex_of[s] = v
        self.vertex_of[s1] = v1
        # v keeps its rotation with the wedge [p, e] replaced by s
        j = rot_v.index(p_dart)
        new_rot = [d for d in rot_v if d not in (p_dart, e_dart)]
        new_rot.insert(j if j < i else j - 1, s)
        self.rot[v] = new_rot
        self.rot[v1] = [s1, p_dart, e_dart]
        self.vertex_of[p_dart] = v1
        self.vertex_of[e_dart] = v1
        # both sides of the star edge are nation faces after step 2;
        # labels settle by orbit propagation
        self.label[s] = None
        self.label[s1] = None
        self.propagate_labels()

    def face_orbits(self):
        nxt = {}
        for r in self.rot.values():
            for i, d in enumerate(r):
                nxt[d] = r[(i + 1) % len(r)]
        visited = set()
        orbits = []
        for start in sorted(self.twin):
            if start in visited:
                continue
            walk = []
            cur = start
            while cur not in visited:
                visited.add(cur)
                walk.append(cur)
                cur = nxt[self.twin[cur]]
            orbits.append(walk)
        return orbits

    def propagate_labels(self):
        for walk in self.face_orbits():
            tags = {self.label[d] for d in walk} - {None}
            if len(tags) != 1:
                raise GridlabError(
                    f"face walk carries labels {tags}; surgery invariant "
                    f"broken")
            tag = tags.pop()
            for d in walk:
                self.label[d] = tag

    def to_embedded(self, num_nations):
        """Compact to an EmbeddedGraph plus its FaceLabeling (nation
        order preserved by index)."""
        dart_ids = sorted(self.twin)
        dmap = {d: i for i, d in enumerate(dart_ids)}
        vertex_ids = sorted(self.rot)
        vmap = {v: i for i, v in enumerate(vertex_ids)}
        twin = [dmap[self.twin[d]] for d in dart_ids]
        vertex_of = [vmap[self.vertex_of[d]] for d in dart_ids]
        nxt = [0] * len(dart_ids)
        for r in self.rot.values():
            for i, d in enumerate(r):
                nxt[dmap[d]] = dmap[r[(i + 1) % len(r)]]
        e2 = EmbeddedGraph(twin, nxt, vertex_of)
        nation_face = {}
        lakes = set()
        for f, walk in enumerate(e2.faces):
            tags = {self.label[dart_ids[d]] for d in walk}
            if len(tags) != 1:
                raise GridlabError("inconsistent face labels after surgery")
            tag = tags.pop()
            if tag == (LAKE,):
                lakes.add(f)
            else:
                i = tag[1]
                if i in nation_face:
                    raise GridlabError(f"nation {i} split by surgery")
                nation_face[i] = f
        if set(nation_face) != set(range(num_nations)):
            raise GridlabError("nation set changed by surgery")
        fl2 = FaceLabeling([nation_face[i] for i in range(num_nations)],
                           lakes)
        return e2, fl2


def canonicalize_components(e, fl):
    """Canonical form, one (EmbeddedGraph, FaceLabeling, nation_indices)
    triple per surviving connected component.

    nation_indices maps the component's nations back to positions in the
    input fl.nations.
    """
    fl.check(e)
    m = _MutableMap(e, fl)

    # step 2 (and implicitly step 1): drop lake-lake edges until none
    # remain, then drop the vertices that lost all their darts
    changed = True
    while changed:
        changed = False
        for d in sorted(m.twin):
            if d not in m.twin or d > m.twin[d]:
                continue
            if m.label[d] == (LAKE,) and m.label[m.twin[d]] == (LAKE,):
                m.delete_edge(d)
                changed = True
    m.delete_dartless_vertices()

    # step 3: vertices touching lakes more than once get split
    for v in sorted(m.rot):
        corners = m.lake_corner_darts(v)
        if len(corners) >= 2:
            for e_dart in corners:
                m.split_lake_corner(v, e_dart)
            assert not m.lake_corner_darts(v)

    whole, fl_whole = m.to_embedded(len(fl.nations))
    comps = whole.components()
    if len(comps) == 1:
        return [(whole, fl_whole, tuple(range(len(fl.nations))))]

    out = []
    for comp in comps:
        comp_set = set(comp)
        dart_ids = [d for d in range(whole.num_darts())
                    if whole.vertex_of[d] in comp_set]
        dmap = {d: i for i, d in enumerate(dart_ids)}
        vmap = {v: i for i, v in enumerate(comp)}
        sub = EmbeddedGraph(
            [dmap[whole.twin[d]] for d in dart_ids],
            [dmap[whole.nxt[d]] for d in dart_ids],
            [vmap[whole.vertex_of[d]] for d in dart_ids])
        nation_ids = []
        nations = []
        face_lookup = {}
        for f, walk in enumerate(sub.faces):
            face_lookup[whole.face_of[dart_ids[walk[0]]]] = f
        for i, f in enumerate(fl_whole.nations):
            if f in face_lookup:
                nation_ids.append(i)
                nations.append(face_lookup[f])
        if not nations:
            continue  # all-lake component: nothing of the map survives
        lakes = set(range(len(sub.faces))) - set(nations)
        out.append((sub, FaceLabeling(nations, lakes), tuple(nation_ids)))
    return out


def canonicalize(e, fl):
    """Canonical form of a map whose result stays connected.

    Raises GridlabError when the surgery separates the embedded graph;
    use canonicalize_components for the per-component form.
    """
    parts = canonicalize_components(e, fl)
    if len(parts) != 1:
        raise GridlabError(
            f"canonical form has {len(parts)} components; use "
            f"canonicalize_components")
    e2, fl2, _ = parts[0]
    return e2, fl2


def is_canonical(e, fl):
    """All three canonical-map properties."""
    fl.check(e)
    lake_faces = fl.lakes
    # no lake-only vertices / no lake-lake edges
    for d in range(len(e.twin)):
        if (e.face_of[d] in lake_faces
                and e.face_of[e.twin[d]] in lake_faces):
            return False
    for v in range(e.num_vertices):
        lake_corners = sum(1 for d in e.vertex_darts(v)
                           if e.face_of[d] in lake_faces)
        if lake_corners > 1:
            return False
        if lake_corners == len(e.vertex_darts(v)) > 0 and lake_corners:
            # degree-1 vertex with a single lake corner only happens on
            # lake-only vertices, which step 1 forbids
            if all(e.face_of[d] in lake_faces for d in e.vertex_darts(v)):
                return False
    return True


# ---------------------------------------------------------------------------
# embedded radial graph (all faces nations)

def radial_embedding(e):
    """Embedding of the all-faces radial graph on the same surface.

    Vertex ids: 0..n-1 original vertices, n+f for face f.  One radial
    edge per corner (per dart of e).
    """
    n = e.num_vertices
    faces = e.faces
    # darts of R: 2*d is based at vertex_of(d), 2*d+1 at the face vertex
    twin = []
    vertex_of = []
    for d in range(len(e.twin)):
        twin.extend([2 * d + 1, 2 * d])
        vertex_of.extend([e.vertex_of[d], n + e.face_of[d]])
    nxt = [0] * (2 * len(e.twin))
    for v in range(n):
        r = e.vertex_darts(v)
        for i, d in enumerate(r):
            nxt[2 * d] = 2 * r[(i + 1) % len(r)]
    for f, walk in enumerate(faces):
        # around the face vertex the corners appear in reverse walk order
        k = len(walk)
        for i, d in enumerate(walk):
            nxt[2 * d + 1] = 2 * walk[(i - 1) % k] + 1
    return EmbeddedGraph(twin, nxt, vertex_of)


# ---------------------------------------------------------------------------
# .emb text format

def emb_dumps(e, fl=None):
    lines = [f"emb {e.num_darts()}",
             "twin " + " ".join(map(str, e.twin)),
             "next " + " ".join(map(str, e.nxt)),
             "vertex_of " + " ".join(map(str, e.vertex_of))]
    if fl is not None:
        lines.append("nations " + " ".join(map(str, fl.nations)))
    return "\n".join(lines) + "\n"


def emb_loads(text):
    """Parse .emb text: (EmbeddedGraph, FaceLabeling or None)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("emb "):
        raise FormatError("missing 'emb <n_darts>' header", 1)
    try:
        n_darts = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise FormatError("bad 'emb' header", 1)
    fields = {}
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        key = parts[0]
        if key not in ("twin", "next", "vertex_of", "nations"):
            raise FormatError(f"unknown field {key!r}", lineno)
        if key in fields:
            raise FormatError(f"duplicate field {key!r}", lineno)
        try:
            fields[key] = [int(x) for x in parts[1:]]
        except ValueError:
            raise FormatError(f"non-integer value in {key!r}", lineno)
    for key in ("twin", "next", "vertex_of"):
        if key not in fields:
            raise FormatError(f"missing field {key!r}")
        if len(fields[key]) != n_darts:
            raise FormatError(
                f"field {key!r} has {len(fields[key])} entries, "
                f"expected {n_darts}")
    try:
        e = EmbeddedGraph(fields["twin"], fields["next"],
                          fields["vertex_of"])
    except ValueError as exc:
        raise FormatError(str(exc))
    fl = None
    if "nations" in fields:
        nations = fields["nations"]
        lakes = set(range(len(e.faces))) - set(nations)
        try:
            fl = FaceLabeling(nations, lakes)
            fl.check(e)
        except ValueError as exc:
            raise FormatError(str(exc))
    return e, fl


def emb_dump(e, fl, path):
    with open(path, "w") as f:
        f.write(emb_dumps(e, fl))


def emb_load(path):
    with open(path) as f:
        return emb_loads(f.read())
