import pytest

from gridlab.embedding import (EmbeddedGraph, FaceLabeling, all_nations,
                               canonicalize, canonicalize_components,
                               dual_graph, genus, is_canonical, map_graph,
                               radial_embedding, radial_graph,
                               union_radial_dual)
from gridlab.errors import GridlabError
from gridlab.generators import (_build_from_rotations, _triangle, grid_map,
                                random_canonical_map,
                                random_planar_triangulation, wheel_map)


def bowtie():
    """Two triangles sharing one vertex (vertex 0)."""
    rots = [[(1, "a"), (2, "b"), (3, "c"), (4, "d")],
            [(2, "e"), (0, "a")],
            [(0, "b"), (1, "e")],
            [(4, "f"), (0, "c")],
            [(0, "d"), (3, "f")]]
    return _build_from_rotations(rots)


def test_rejects_bad_dart_structure():
    with pytest.raises(ValueError):
        EmbeddedGraph([0, 1], [0, 1], [0, 1])  # twin has fixed points
    with pytest.raises(ValueError):
        EmbeddedGraph([1, 0], [0, 0], [0, 1])  # next not a permutation
    with pytest.raises(ValueError):
        # vertex 0 owns two rotation orbits
        EmbeddedGraph([1, 0, 3, 2], [0, 1, 2, 3], [0, 0, 1, 1])


def test_triangle_faces_and_genus():
    t = _triangle()
    assert t.num_vertices == 3 and t.num_edges() == 3
    assert len(t.faces) == 2
    assert all(len(w) == 3 for w in t.faces)
    assert genus(t) == 0


def test_genus_counts_components_separately():
    b = bowtie()
    assert len(b.faces) == 3
    assert b.genus() == 0


def test_grid_map_derived_graphs():
    e, fl = grid_map(2, 3)
    assert e.genus() == 0
    d = dual_graph(e, fl)
    # nations form a 2x3 grid in the dual
    assert d.edges == frozenset({(0, 1), (1, 2), (3, 4), (4, 5),
                                 (0, 3), (1, 4), (2, 5)})
    m = map_graph(e, fl)
    assert d.edges <= m.edges
    assert m.has_edge(0, 4) and not m.has_edge(0, 5)
    r, bip = radial_graph(e, fl)
    bip.check(r)
    u = union_radial_dual(e, fl)
    n = e.num_vertices
    assert u.edges == r.edges | {(n + a, n + b) for a, b in d.edges}


def test_dual_is_subgraph_of_map_graph():
    for seed in range(12):
        for nations in (2, 3, 5, 8):
            e, fl = random_canonical_map(nations, seed)
            assert dual_graph(e, fl).edges <= map_graph(e, fl).edges


def test_face_labeling_validation():
    t = _triangle()
    with pytest.raises(ValueError):
        FaceLabeling([], {0, 1})
    with pytest.raises(ValueError):
        FaceLabeling([0, 0], {1})
    with pytest.raises(ValueError):
        FaceLabeling([0], {0, 1})
    with pytest.raises(ValueError):
        FaceLabeling([0], set()).check(t)  # face 1 unassigned


def test_canonicalize_is_idempotent():
    for seed in range(10):
        for nations in (1, 3, 6):
            e, fl = random_canonical_map(nations, seed)
            assert is_canonical(e, fl)
            e2, fl2 = canonicalize(e, fl)
            assert e2 == e and fl2 == fl


def test_canonicalize_moves_extra_lake_corners():
    # the shared vertex of the bowtie touches the lake twice; surgery
    # peels both wedges onto fresh vertices and stays connected
    b = bowtie()
    tri_faces = [f for f, w in enumerate(b.faces) if len(w) == 3]
    lake = ({0, 1, 2} - set(tri_faces)).pop()
    fl = FaceLabeling(tri_faces, {lake})
    assert not is_canonical(b, fl)
    e2, fl2 = canonicalize(b, fl)
    assert is_canonical(e2, fl2)
    assert e2.genus() == 0
    assert len(fl2.nations) == 2
    assert e2.num_vertices > b.num_vertices


def test_canonicalize_separates_lake_bridge():
    # two triangles joined by an edge with lake on both sides: the
    # bridge goes away and each triangle survives as its own component
    rots = [[(1, "a"), (2, "b")],
            [(2, "c"), (0, "a")],
            [(0, "b"), (1, "c"), (3, "x")],
            [(2, "x"), (4, "d"), (5, "e")],
            [(5, "f"), (3, "d")],
            [(3, "e"), (4, "f")]]
    g = _build_from_rotations(rots)
    tri_faces = [f for f, w in enumerate(g.faces) if len(w) == 3]
    assert len(tri_faces) == 2
    lakes = set(range(len(g.faces))) - set(tri_faces)
    fl = FaceLabeling(tri_faces, lakes)
    with pytest.raises(GridlabError):
        canonicalize(g, fl)
    parts = canonicalize_components(g, fl)
    assert len(parts) == 2
    covered = []
    for e2, fl2, nation_ids in parts:
        assert is_canonical(e2, fl2)
        assert e2.num_vertices == 3
        covered.extend(nation_ids)
    assert sorted(covered) == [0, 1]


def test_canonicalize_drops_lake_lake_edges():
    # all faces of a triangulation marked lake except two: the surgery
    # must trim everything not bordering a nation
    tri = random_planar_triangulation(8, 2)
    fl = FaceLabeling([0, 1], set(range(2, len(tri.faces))))
    for e2, fl2, _ in canonicalize_components(tri, fl):
        assert is_canonical(e2, fl2)


def test_wheel_is_canonical():
    for r in (1, 2, 3):
        e, fl = wheel_map(r)
        assert is_canonical(e, fl)


def test_radial_embedding_structure():
    for n, seed in ((3, 0), (6, 1), (10, 4)):
        t = random_planar_triangulation(n, seed)
        r = radial_embedding(t)
        assert r.genus() == 0
        assert r.num_vertices == t.num_vertices + len(t.faces)
        assert r.num_edges() == t.num_darts()
        # faces of the radial graph are the diamonds, one per edge
        assert all(len(w) == 4 for w in r.faces)
        assert len(r.faces) == t.num_edges()
        # radial graph of the embedding matches the abstract construction
        g, _ = radial_graph(t, all_nations(t))
        assert r.simple_graph() == g


def test_incident_nations():
    e, fl = grid_map(2, 2)
    inc = e.incident_nations(fl)
    # the center vertex of a 2x2 nation grid touches all four nations
    center = [v for v in range(e.num_vertices) if len(inc[v]) == 4]
    assert len(center) == 1
