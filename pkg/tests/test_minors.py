import pytest

from gridlab.embedding import radial_embedding, union_radial_dual
from gridlab.errors import ConstructionError, SizeLimitError
from gridlab.generators import (_build_from_rotations, _triangle, grid,
                                random_graph, random_planar_triangulation,
                                wheel_map)
from gridlab.graph import SimpleGraph, max_clique_exact
from gridlab.minors import (ContractionSequence, MinorModel, _assign_grid_coords,
                            clean_subgrid, clique_to_grid, double_radial_minor,
                            largest_grid_minor, minor_containment_exact,
                            model_dumps, model_loads,
                            model_to_contraction_sequence,
                            nation_grid_transfer_instance,
                            primal_dual_width_report,
                            radial_grid_to_dual_grid, sequence_dumps,
                            sequence_loads, verify_model)


def cube_embedding():
    """The 3-cube with its planar rotation system (outer square 0..3,
    inner square 4..7, spokes i to i+4)."""
    rots = []
    for i in range(4):
        nb = [((i + 1) % 4, f"o{i}"),
              ((i - 1) % 4, f"o{(i - 1) % 4}"),
              (i + 4, f"s{i}")]
        rots.append(nb)
    for i in range(4):
        nb = [(i, f"s{i}"),
              (4 + (i - 1) % 4, f"i{(i - 1) % 4}"),
              (4 + (i + 1) % 4, f"i{i}")]
        rots.append(nb)
    e = _build_from_rotations(rots)
    assert e.genus() == 0
    return e


def identity_model(g):
    return MinorModel(g, g, {v: {v} for v in range(g.n)},
                      {e: e for e in g.edges})


def test_verify_model_accepts_identity():
    g = random_graph(8, 1)
    assert verify_model(identity_model(g)) is None


def test_verify_model_catches_violations():
    g = SimpleGraph.path(4)
    h = SimpleGraph.path(2)
    ok = MinorModel(h, g, {0: {0, 1}, 1: {2, 3}}, {(0, 1): (1, 2)})
    assert verify_model(ok) is None
    v = verify_model(MinorModel(h, g, {0: {0, 1}}, {(0, 1): (1, 2)}))
    assert v.kind == "coverage"
    v = verify_model(MinorModel(h, g, {0: {0, 1}, 1: {1, 2}},
                                {(0, 1): (1, 2)}))
    assert v.kind == "disjoint"
    v = verify_model(MinorModel(h, g, {0: {0, 2}, 1: {3}},
                                {(0, 1): (2, 3)}))
    assert v.kind == "connected"
    v = verify_model(MinorModel(h, g, {0: {0, 1}, 1: {2, 3}},
                                {(0, 1): (0, 3)}))
    assert v.kind == "witness"


def test_minor_containment_small_cases():
    # C4 is a minor of the 2x3 grid, K4 is not (planar host is K4-free
    # only when it has no K4 minor; the 2x3 grid has treewidth 2)
    host = grid(2, 3)
    m = minor_containment_exact(SimpleGraph.cycle(4), host)
    assert m is not None and verify_model(m) is None
    assert minor_containment_exact(SimpleGraph.complete(4), host) is None
    # every graph contains itself
    g = random_graph(7, 5)
    m = minor_containment_exact(g, g)
    assert m is not None and verify_model(m) is None


def test_minor_containment_size_refusals():
    with pytest.raises(SizeLimitError):
        minor_containment_exact(SimpleGraph(11), SimpleGraph(16))
    with pytest.raises(SizeLimitError):
        minor_containment_exact(SimpleGraph(3), SimpleGraph(17))


def test_largest_grid_minor_known():
    r, m = largest_grid_minor(SimpleGraph.complete(4))
    assert r == 2 and verify_model(m) is None
    r, _ = largest_grid_minor(SimpleGraph.path(10))
    assert r == 1
    for side in (1, 2, 3):
        r, m = largest_grid_minor(SimpleGraph.complete(side * side))
        assert r == side
        assert verify_model(m) is None
    # exhaustive search on a non-complete host
    r, m = largest_grid_minor(grid(3, 3))
    assert r == 3 and verify_model(m) is None
    # a long cycle contracts to C4, the 2x2 grid, but no further
    r, _ = largest_grid_minor(SimpleGraph.cycle(8))
    assert r == 2


def test_clique_to_grid():
    k9 = SimpleGraph.complete(9)
    clique = max_clique_exact(k9)
    m = clique_to_grid(type("W", (), {"vertices": clique})(), 3, k9)
    assert verify_model(m) is None
    assert m.pattern == grid(3, 3)
    with pytest.raises(ConstructionError):
        clique_to_grid(type("W", (), {"vertices": {0, 1, 2}})(), 2, k9)
    with pytest.raises(ConstructionError):
        clique_to_grid(type("W", (), {"vertices": {0, 1, 2, 3}})(), 2,
                       SimpleGraph.path(4))


def test_contraction_sequence_replay():
    g = SimpleGraph.cycle(4)
    seq = ContractionSequence(g, [("contract", 0, 1), ("delete_edge", 0, 2)])
    verts, edges, labels = seq.replay()
    assert verts == {0, 2, 3}
    assert edges == {(0, 3), (2, 3)}
    assert labels[0] == {0, 1}
    verts, edges, _ = seq.replay(skip_edge_deletions=True)
    assert (0, 2) in edges
    final, old = seq.result()
    assert old == [0, 2, 3]
    assert final.edges == frozenset({(0, 2), (1, 2)})


def test_contraction_sequence_rejects_bad_ops():
    g = SimpleGraph.path(3)
    with pytest.raises(ValueError):
        ContractionSequence(g, [("frobnicate", 0, 1)])
    with pytest.raises(ConstructionError):
        ContractionSequence(g, [("contract", 0, 2)]).replay()
    with pytest.raises(ConstructionError):
        ContractionSequence(g, [("delete_vertex", 1),
                                ("delete_edge", 0, 1)]).replay()


def test_clean_subgrid_no_extras_keeps_everything():
    (top, left, side), seq = clean_subgrid(5, 7, [])
    assert (top, left, side) == (0, 0, 5)
    verts, edges, _ = seq.replay()
    assert len(verts) == 25


def test_clean_subgrid_center_endpoint():
    # one chord into the middle of a 9x9 grid still leaves a window of
    # side at least 3
    extra = [(4 * 9 + 4, 0)]
    (top, left, side), seq = clean_subgrid(9, 9, extra)
    assert side >= 3
    final, _ = seq.result()
    assert final == grid(side, side)


def test_clean_subgrid_two_extras():
    extra = [(5 * 12 + 5, 6 * 12 + 6), (2 * 12 + 9, 9 * 12 + 2)]
    (top, left, side), seq = clean_subgrid(12, 12, extra)
    assert side >= 12 // 5
    final, _ = seq.result()
    assert final == grid(side, side)
    # no extra-edge endpoint strictly inside the window
    for u, v in extra:
        for x in (u, v):
            i, j = divmod(x, 12)
            assert not (top < i < top + side - 1
                        and left < j < left + side - 1)


def test_model_to_contraction_sequence_consistent():
    for seed in range(6):
        g = random_graph(9, seed, 0.45)
        for h in (SimpleGraph.cycle(4), SimpleGraph.path(3),
                  SimpleGraph.complete(3)):
            m = minor_containment_exact(h, g)
            if m is None:
                continue
            seq = model_to_contraction_sequence(m)
            final, old = seq.result()
            assert final == h or final.num_edges() == h.num_edges()
            # labels reproduce the branch sets
            _, _, labels = seq.replay()
            assert (sorted(labels.values(), key=min)
                    == sorted(m.branch_sets.values(), key=min))


def test_transfer_deletion_only_instances():
    for size, want_side in ((12, 1), (18, 2)):
        e, fl, seq = nation_grid_transfer_instance(size)
        m = radial_grid_to_dual_grid(seq, e, fl)
        assert verify_model(m) is None
        assert len(m.branch_sets) == want_side * want_side
        n = e.num_vertices
        nations = len(fl.nations)
        for s in m.branch_sets.values():
            assert all(0 <= x < nations for x in s)


def test_transfer_contraction_heavy_instance():
    # 2x2 block coarsening of the window grid forces the transfer to
    # walk through real contraction labels
    size = 36
    e, fl, seq = nation_grid_transfer_instance(size)
    verts, edges, _ = seq.replay()
    k, coords = _assign_grid_coords(verts, edges)
    at = {c: v for v, c in coords.items()}
    ops = list(seq.ops)
    if k % 2:  # drop the last row and column so the side is even
        for y in range(k):
            ops.append(("delete_vertex", at[(k - 1, y)]))
        for x in range(k - 1):
            ops.append(("delete_vertex", at[(x, k - 1)]))
    q = k - (k % 2)
    for bx in range(q // 2):
        for by in range(q // 2):
            root = at[(2 * bx, 2 * by)]
            ops.append(("contract", root, at[(2 * bx + 1, 2 * by)]))
            ops.append(("contract", root, at[(2 * bx, 2 * by + 1)]))
            ops.append(("contract", root, at[(2 * bx + 1, 2 * by + 1)]))
    seq2 = ContractionSequence(seq.host, ops)
    v2, e2, _ = seq2.replay()
    k2, _ = _assign_grid_coords(v2, e2)
    assert k2 == q // 2
    m = radial_grid_to_dual_grid(seq2, e, fl)
    assert verify_model(m) is None
    assert len(m.branch_sets) == (k2 // 6 - 1) ** 2


def test_transfer_rejects_small_grids():
    for r in (1, 2):
        e, fl = wheel_map(r)
        host = union_radial_dual(e, fl)
        side, model = largest_grid_minor(host)
        assert side < 12
        seq = model_to_contraction_sequence(model)
        with pytest.raises(ConstructionError):
            radial_grid_to_dual_grid(seq, e, fl)


def test_transfer_rejects_wrong_host():
    e, fl, seq = nation_grid_transfer_instance(12)
    e2, fl2, _ = nation_grid_transfer_instance(14)
    with pytest.raises(ConstructionError):
        radial_grid_to_dual_grid(seq, e2, fl2)


def test_double_radial_minor_triangle_and_cube():
    for e in (_triangle(), cube_embedding()):
        m = double_radial_minor(e)
        assert verify_model(m) is None
        assert m.pattern == e.simple_graph()
        r2 = radial_embedding(radial_embedding(e))
        assert m.host == r2.simple_graph()


def test_double_radial_minor_random_triangulations():
    for n in (4, 6, 9):
        for seed in range(3):
            t = random_planar_triangulation(n, seed)
            m = double_radial_minor(t)
            assert verify_model(m) is None


def test_double_radial_minor_rejects_low_connectivity():
    # a path embedding is not 2-connected
    rots = [[(1, "a")], [(0, "a"), (2, "b")], [(1, "b")]]
    path_emb = _build_from_rotations(rots)
    with pytest.raises(ConstructionError):
        double_radial_minor(path_emb)


def test_primal_dual_width_report():
    rep = primal_dual_width_report(_triangle())
    assert rep == {"tw_primal": 2, "tw_dual": 1, "genus": 0}
    for n, seed in ((6, 0), (9, 2)):
        t = random_planar_triangulation(n, seed)
        rep = primal_dual_width_report(t)
        assert abs(rep["tw_primal"] - rep["tw_dual"]) <= 1
        assert rep["genus"] == 0


def test_model_json_round_trip():
    g = random_graph(9, 4, 0.45)
    m = minor_containment_exact(SimpleGraph.cycle(4), g)
    assert m is not None
    text = model_dumps(m)
    m2 = model_loads(text)
    assert model_dumps(m2) == text
    assert verify_model(m2) is None


def test_sequence_json_round_trip():
    g = SimpleGraph.cycle(5)
    seq = ContractionSequence(g, [("contract", 0, 1), ("delete_edge", 0, 2),
                                  ("delete_vertex", 3)])
    text = sequence_dumps(seq)
    seq2 = sequence_loads(text)
    assert sequence_dumps(seq2) == text
    assert seq2.replay() == seq.replay()
