"""Tree decompositions: validation, exact and heuristic treewidth, the
two bag-lifting constructions, and a vertex-cover DP."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import FormatError, SizeLimitError
from .graph import SimpleGraph, k_neighborhood, power_graph

TREEWIDTH_EXACT_LIMIT = 20  # documented desk-scale limit


@dataclass(frozen=True)
class Violation:
    """First failed tree-decomposition condition plus a witness."""

    condition: str  # "tree", "T1", "T2" or "T3"
    witness: object
    message: str

    def __str__(self):
        return f"{self.condition}: {self.message}"


class TreeDecomposition:
    """Tree of bags over the vertices of a carrier graph."""

    __slots__ = ("bags", "tree_edges")

    def __init__(self, bags, tree_edges):
        self.bags = [frozenset(b) for b in bags]
        self.tree_edges = sorted(
            (min(a, b), max(a, b)) for a, b in tree_edges)
        for a, b in self.tree_edges:
            if not (0 <= a < len(self.bags) and 0 <= b < len(self.bags)):
                raise ValueError(f"tree edge {(a, b)} out of range")
            if a == b:
                raise ValueError("tree self-loop")

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def num_nodes(self):
        return len(self.bags)

    def node_neighbors(self):
        nb = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def validate(self, g):
        """None if this is a valid decomposition of g, else a Violation."""
        b = len(self.bags)
        # tree shape: connected and acyclic
        if len(set(self.tree_edges)) != len(self.tree_edges):
            return Violation("tree", None, "duplicate tree edge")
        if len(self.tree_edges) != max(b - 1, 0):
            return Violation("tree", None,
                             f"{len(self.tree_edges)} edges on {b} nodes")
        if b:
            nb = self.node_neighbors()
            seen = {0}
            stack = [0]
            while stack:
                x = stack.pop()
                for y in nb[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != b:
                return Violation("tree", None, "tree is disconnected")
        # T1
        covered = set().union(*self.bags) if self.bags else set()
        for v in range(g.n):
            if v not in covered:
                return Violation("T1", v, f"vertex {v} in no bag")
        for v in covered:
            if not 0 <= v < g.n:
                return Violation("T1", v, f"bag vertex {v} not in graph")
        # T2
        for u, v in sorted(g.edges):
            if not any(u in bag and v in bag for bag in self.bags):
                return Violation("T2", (u, v), f"edge {(u, v)} in no bag")
        # T3
        nb = self.node_neighbors()
        for v in range(g.n):
            nodes = {i for i, bag in enumerate(self.bags) if v in bag}
            start = min(nodes)
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in nb[x]:
                    if y in nodes and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != nodes:
                return Violation(
                    "T3", v, f"bags of vertex {v} are not connected in T")
        return None

    def __eq__(self, other):
        if not isinstance(other, TreeDecomposition):
            return NotImplemented
        return self.bags == other.bags and self.tree_edges == other.tree_edges

    def __repr__(self):
        return (f"TreeDecomposition(nodes={len(self.bags)}, "
                f"width={self.width})")


def decomposition_from_order(g, order):
    """Tree decomposition from an elimination ordering (fill-in bags)."""
    assert sorted(order) == list(range(g.n))
    adj = [set(a) for a in g.adj]
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for v in order:
        nb = set(adj[v])
        bags.append(frozenset(nb | {v}))
        for u in nb:
            adj[u].discard(v)
            adj[u] |= nb - {u}
        adj[v] = set()
    edges = []
    for i, v in enumerate(order):
        later = bags[i] - {v}
        if later:
            edges.append((i, min(pos[w] for w in later)))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    if not bags:
        bags = [frozenset()]
    return TreeDecomposition(bags, edges)


def treewidth_exact(g):
    """Minimum width and an optimal decomposition (n <= 20)."""
    if g.n > TREEWIDTH_EXACT_LIMIT:
        raise SizeLimitError(
            f"treewidth_exact limited to {TREEWIDTH_EXACT_LIMIT} vertices, "
            f"got {g.n}")
    if g.n == 0:
        return -1, TreeDecomposition([frozenset()], [])
    width, order = _kernels.treewidth_order(g.n, g.adjacency_masks())
    td = decomposition_from_order(g, list(order))
    assert td.width == width, (td.width, width)
    assert td.validate(g) is None
    return width, td


def treewidth_upper(g):
    """Valid decomposition via greedy min-fill; width >= tw(g)."""
    if g.n == 0:
        return -1, TreeDecomposition([frozenset()], [])
    width, order = _kernels.min_fill_order(g.n, g.adjacency_masks())
    td = decomposition_from_order(g, list(order))
    assert td.width == width
    assert td.validate(g) is None
    return width, td


def _require_valid(td, g, what):
    violation = td.validate(g)
    if violation is not None:
        raise ValueError(f"invalid input decomposition of {what}: {violation}")


def lift_radial_to_map(td_r, e, fl):
    """Turn a decomposition of the radial graph into one of the map graph
    by replacing each embedded-graph vertex with its incident nations."""
    from .embedding import map_graph, radial_graph

    r_graph, _ = radial_graph(e, fl)
    _require_valid(td_r, r_graph, "radial graph")
    m_graph = map_graph(e, fl)
    n_vertices = e.num_vertices
    incident = e.incident_nations(fl)  # vertex -> nation indices
    bags = []
    for bag in td_r.bags:
        new_bag = set()
        for x in bag:
            if x >= n_vertices:
                new_bag.add(x - n_vertices)
            else:
                new_bag |= incident[x]
        bags.append(new_bag)
    td_m = TreeDecomposition(bags, td_r.tree_edges)
    assert td_m.validate(m_graph) is None
    return td_m


def lift_power(td, g, k):
    """Turn a decomposition of g into one of g^k by replacing each vertex
    occurrence with its whole radius-k neighborhood."""
    _require_valid(td, g, "base graph")
    gk = power_graph(g, k)
    bags = []
    for bag in td.bags:
        new_bag = set()
        for v in bag:
            new_bag |= k_neighborhood(g, v, k)
        bags.append(new_bag)
    td_k = TreeDecomposition(bags, td.tree_edges)
    assert td_k.validate(gk) is None
    return td_k


def vertex_cover_dp(g, td):
    """Exact minimum vertex cover by DP over the decomposition bags.

    Returns (size, cover_set).  Time 2^O(width) per node.
    """
    _require_valid(td, g, "carrier graph")
    if g.n == 0:
        return 0, set()
    b = len(td.bags)
    nb = td.node_neighbors()
    root = 0
    order = [root]
    parent = {root: None}
    for x in order:
        for y in nb[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)

    bag_lists = [sorted(bag) for bag in td.bags]
    dp = [None] * b       # node -> {mask: best size}
    choice = [None] * b   # node -> {mask: {child: child_mask}}

    for x in reversed(order):
        verts = bag_lists[x]
        idx = {v: i for i, v in enumerate(verts)}
        local_edges = [(idx[u], idx[v]) for u, v in g.edges
                       if u in idx and v in idx]
        children = [y for y in nb[x] if y != parent[x]]
        table = {}
        picks = {}
        for mask in range(1 << len(verts)):
            if any(not (mask >> iu & 1) and not (mask >> iv & 1)
                   for iu, iv in local_edges):
                continue
            chosen = {verts[i] for i in range(len(verts)) if mask >> i & 1}
            total = len(chosen)
            pick = {}
            feasible = True
            for c in children:
                cverts = bag_lists[c]
                common = [v for v in cverts if v in idx]
                best_c, best_mask = None, None
                for cmask, csize in dp[c].items():
                    sel = {cverts[i] for i in range(len(cverts))
                           if cmask >> i & 1}
                    if any((v in sel) != (v in chosen) for v in common):
                        continue
                    adjusted = csize - len(sel & chosen)
                    if best_c is None or adjusted < best_c:
                        best_c, best_mask = adjusted, cmask
                if best_c is None:
                    feasible = False
                    break
                total += best_c
                pick[c] = best_mask
            if feasible:
                table[mask] = total
                picks[mask] = pick
        dp[x] = table
        choice[x] = picks

    best_mask = min(dp[root], key=lambda m: dp[root][m])
    size = dp[root][best_mask]
    cover = set()
    stack = [(root, best_mask)]
    while stack:
        x, mask = stack.pop()
        verts = bag_lists[x]
        cover |= {verts[i] for i in range(len(verts)) if mask >> i & 1}
        for c, cmask in choice[x][mask].items():
            stack.append((c, cmask))
    assert len(cover) == size
    assert all(u in cover or v in cover for u, v in g.edges)
    return size, cover


# ---------------------------------------------------------------------------
# PACE .td format

def td_dumps(td, n):
    """Serialize to PACE .td text; n is the carrier vertex count."""
    lines = [f"s td {len(td.bags)} {max((len(b) for b in td.bags), default=0)}"
             f" {n}"]
    for i, bag in enumerate(td.bags):
        body = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i + 1} {body}".rstrip())
    for a, b in td.tree_edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def td_loads(text):
    """Parse PACE .td text.  Returns (TreeDecomposition, n)."""
    header = None
    bags = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise FormatError("duplicate solution line", lineno)
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError(f"bad solution line {line!r}", lineno)
            header = (int(parts[2]), int(parts[3]), int(parts[4]))
        elif parts[0] == "b":
            if header is None:
                raise FormatError("bag before solution line", lineno)
            bag_id = int(parts[1]) - 1
            if bag_id in bags:
                raise FormatError(f"duplicate bag {bag_id + 1}", lineno)
            bags[bag_id] = frozenset(int(v) - 1 for v in parts[2:])
        else:
            if len(parts) != 2:
                raise FormatError(f"bad tree edge {line!r}", lineno)
            edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
    if header is None:
        raise FormatError("missing solution line")
    num_bags, max_bag, n = header
    if set(bags) != set(range(num_bags)):
        raise FormatError("bag ids do not match header count")
    bag_list = [bags[i] for i in range(num_bags)]
    if max((len(b) for b in bag_list), default=0) != max_bag:
        raise FormatError("header max bag size mismatch")
    return TreeDecomposition(bag_list, edges), n


def td_dump(td, n, path):
    with open(path, "w") as f:
        f.write(td_dumps(td, n))


def td_load(path):
    with open(path) as f:
        return td_loads(f.read())
