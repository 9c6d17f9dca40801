"""Surface-code lattices: mixed-boundary planar codes and hole codes.

Both families are built as explicit graphs.  Every qubit is simultaneously
one edge of the primal graph (nodes = vertex generators) and one edge of the
dual graph (nodes = plaquette generators); the two edges cross.  Edges with a
free endpoint (a lattice boundary, or the hole) are recorded per node so the
decoder can terminate strings there.

Mixed-boundary layout: a (2d-1) x (2d-1) checkerboard with qubits on cells
where row+col is even, vertex generators at (even row, odd col) and plaquette
generators at (odd row, even col).  Primal strings may terminate on the
left/right boundary, dual strings on the top/bottom boundary.

Hole layout: the full L x L plaquette grid (vertices at integer points,
qubits on grid edges) with an h x h block of plaquette generators removed.
Vertex generators on the hole rim stay active, so primal strings never
terminate; dual strings may terminate at the hole or the outer boundary.
For h >= 2 the vertices and edges strictly inside the hole are removed as
well, which keeps exactly one logical qubit.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Optional

from .pauli import PauliOperator


class CodeKind(enum.Enum):
    MIXED_BOUNDARY = "mixed"
    HOLE = "hole"


class Side(enum.Enum):
    PRIMAL = "primal"
    DUAL = "dual"


# An edge endpoint of -1 marks a free (boundary/hole) termination.
TERMINAL = -1


@dataclass(frozen=True)
class Code:
    """Immutable surface-code geometry; safe to share across workers."""

    kind: CodeKind
    n_qubits: int
    vertex_generators: tuple          # tuple[frozenset[int]], X-type
    plaquette_generators: tuple       # tuple[frozenset[int]], Z-type
    vertex_masks: tuple               # bit masks parallel to vertex_generators
    plaquette_masks: tuple
    primal_adj: tuple                 # node -> tuple[(neighbor, qubit)]
    dual_adj: tuple
    primal_dangling: tuple            # node -> tuple[qubit] with a free end
    dual_dangling: tuple
    qubit_primal_edge: tuple          # qubit -> (u, v); TERMINAL marks free end
    qubit_dual_edge: tuple
    logical_x: frozenset
    logical_z: frozenset
    d: int
    d_b: Optional[int] = None         # hole codes only
    d_h: Optional[int] = None
    vertex_coords: tuple = field(default=(), compare=False)
    plaquette_coords: tuple = field(default=(), compare=False)
    qubit_coords: tuple = field(default=(), compare=False)

    @property
    def logical_x_op(self) -> PauliOperator:
        return PauliOperator.from_supports(self.n_qubits, x_qubits=self.logical_x)

    @property
    def logical_z_op(self) -> PauliOperator:
        return PauliOperator.from_supports(self.n_qubits, z_qubits=self.logical_z)

    def adjacency(self, side: Side) -> tuple:
        return self.primal_adj if side is Side.PRIMAL else self.dual_adj

    def dangling(self, side: Side) -> tuple:
        return self.primal_dangling if side is Side.PRIMAL else self.dual_dangling

    def has_terminal(self, side: Side) -> bool:
        return any(self.dangling(side))

    def to_json(self) -> str:
        """Debug summary; not a stability-guaranteed format."""
        return json.dumps({
            "kind": self.kind.value,
            "n_qubits": self.n_qubits,
            "vertex_generators": [sorted(g) for g in self.vertex_generators],
            "plaquette_generators": [sorted(g) for g in self.plaquette_generators],
            "logical_x": sorted(self.logical_x),
            "logical_z": sorted(self.logical_z),
            "d": self.d,
            "d_b": self.d_b,
            "d_h": self.d_h,
        })


def _finish(kind, n_qubits, vgens, pgens, qubit_primal_edge, qubit_dual_edge,
            logical_x, logical_z, d, d_b=None, d_h=None,
            vertex_coords=(), plaquette_coords=(), qubit_coords=()):
    """Derive adjacency and masks from the generator/edge description."""
    primal_adj = [[] for _ in vgens]
    primal_dangling = [[] for _ in vgens]
    for q, (u, v) in enumerate(qubit_primal_edge):
        if u != TERMINAL and v != TERMINAL:
            primal_adj[u].append((v, q))
            primal_adj[v].append((u, q))
        else:
            node = u if u != TERMINAL else v
            primal_dangling[node].append(q)
    dual_adj = [[] for _ in pgens]
    dual_dangling = [[] for _ in pgens]
    for q, (u, v) in enumerate(qubit_dual_edge):
        if u != TERMINAL and v != TERMINAL:
            dual_adj[u].append((v, q))
            dual_adj[v].append((u, q))
        else:
            node = u if u != TERMINAL else v
            dual_dangling[node].append(q)

    def masks(gens):
        out = []
        for g in gens:
            m = 0
            for q in g:
                m |= 1 << q
            out.append(m)
        return tuple(out)

    return Code(
        kind=kind,
        n_qubits=n_qubits,
        vertex_generators=tuple(frozenset(g) for g in vgens),
        plaquette_generators=tuple(frozenset(g) for g in pgens),
        vertex_masks=masks(vgens),
        plaquette_masks=masks(pgens),
        primal_adj=tuple(tuple(sorted(a)) for a in primal_adj),
        dual_adj=tuple(tuple(sorted(a)) for a in dual_adj),
        primal_dangling=tuple(tuple(sorted(x)) for x in primal_dangling),
        dual_dangling=tuple(tuple(sorted(x)) for x in dual_dangling),
        qubit_primal_edge=tuple(qubit_primal_edge),
        qubit_dual_edge=tuple(qubit_dual_edge),
        logical_x=frozenset(logical_x),
        logical_z=frozenset(logical_z),
        d=d, d_b=d_b, d_h=d_h,
        vertex_coords=tuple(vertex_coords),
        plaquette_coords=tuple(plaquette_coords),
        qubit_coords=tuple(qubit_coords),
    )


def build_mixed_boundary(d: int) -> Code:
    """Planar code of distance d with n = d^2 + (d-1)^2 qubits."""
    if d < 2:
        raise ValueError(f"distance must be >= 2, got {d}")
    size = 2 * d - 1

    qid = {}
    qubit_coords = []
    for r in range(size):
        for c in range(size):
            if (r + c) % 2 == 0:
                qid[(r, c)] = len(qubit_coords)
                qubit_coords.append((r, c))
    n_qubits = len(qubit_coords)

    vid = {}
    vertex_coords = []
    for r in range(0, size, 2):
        for c in range(1, size, 2):
            vid[(r, c)] = len(vertex_coords)
            vertex_coords.append((r, c))
    pid = {}
    plaquette_coords = []
    for r in range(1, size, 2):
        for c in range(0, size, 2):
            pid[(r, c)] = len(plaquette_coords)
            plaquette_coords.append((r, c))

    def neighbors(r, c):
        for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= rr < size and 0 <= cc < size:
                yield rr, cc

    vgens = [[qid[rc] for rc in neighbors(r, c)] for (r, c) in vertex_coords]
    pgens = [[qid[rc] for rc in neighbors(r, c)] for (r, c) in plaquette_coords]

    qubit_primal_edge = []
    qubit_dual_edge = []
    for (r, c) in qubit_coords:
        if r % 2 == 0:  # even-even qubit: horizontal primal, vertical dual edge
            pe = (vid.get((r, c - 1), TERMINAL), vid.get((r, c + 1), TERMINAL))
            de = (pid.get((r - 1, c), TERMINAL), pid.get((r + 1, c), TERMINAL))
        else:           # odd-odd qubit: vertical primal, horizontal dual edge
            pe = (vid.get((r - 1, c), TERMINAL), vid.get((r + 1, c), TERMINAL))
            de = (pid.get((r, c - 1), TERMINAL), pid.get((r, c + 1), TERMINAL))
        qubit_primal_edge.append(pe)
        qubit_dual_edge.append(de)

    logical_z = [qid[(0, c)] for c in range(0, size, 2)]       # left-right string
    logical_x = [qid[(r, 0)] for r in range(0, size, 2)]       # top-bottom string

    return _finish(CodeKind.MIXED_BOUNDARY, n_qubits, vgens, pgens,
                   qubit_primal_edge, qubit_dual_edge, logical_x, logical_z,
                   d=d, vertex_coords=vertex_coords,
                   plaquette_coords=plaquette_coords, qubit_coords=qubit_coords)


def build_hole(L: int, hole_origin: tuple, h: int) -> Code:
    """Surface code on an L x L plaquette grid with an h x h hole.

    hole_origin = (a, b) is the top-left plaquette of the removed block, so
    plaquettes (i, j) with a <= i < a+h and b <= j < b+h are removed.
    """
    if L < 1 or h < 1:
        raise ValueError("L and h must be positive")
    a, b = hole_origin
    if a < 1 or b < 1 or a + h > L - 1 or b + h > L - 1:
        raise ValueError("hole must lie strictly inside the plaquette grid")

    def in_hole_plaq(i, j):
        return a <= i < a + h and b <= j < b + h

    def interior_vertex(i, j):
        return a < i < a + h and b < j < b + h

    # Edges of the full grid minus the hole interior.  Horizontal edge
    # ("h", i, j) joins vertices (i, j)-(i, j+1); vertical ("v", i, j) joins
    # (i, j)-(i+1, j).
    qid = {}
    qubit_coords = []

    def h_edge_removed(i, j):
        return a < i < a + h and b <= j < b + h

    def v_edge_removed(i, j):
        return b < j < b + h and a <= i < a + h

    for i in range(L + 1):
        for j in range(L):
            if not h_edge_removed(i, j):
                qid[("h", i, j)] = len(qubit_coords)
                qubit_coords.append(("h", i, j))
    for i in range(L):
        for j in range(L + 1):
            if not v_edge_removed(i, j):
                qid[("v", i, j)] = len(qubit_coords)
                qubit_coords.append(("v", i, j))
    n_qubits = len(qubit_coords)

    vid = {}
    vertex_coords = []
    for i in range(L + 1):
        for j in range(L + 1):
            if not interior_vertex(i, j):
                vid[(i, j)] = len(vertex_coords)
                vertex_coords.append((i, j))

    pid = {}
    plaquette_coords = []
    for i in range(L):
        for j in range(L):
            if not in_hole_plaq(i, j):
                pid[(i, j)] = len(plaquette_coords)
                plaquette_coords.append((i, j))

    vgens = [[] for _ in vertex_coords]
    qubit_primal_edge = []
    qubit_dual_edge = []
    for coord in qubit_coords:
        kind_, i, j = coord
        q = qid[coord]
        if kind_ == "h":
            u, v = vid[(i, j)], vid[(i, j + 1)]
            # flanking plaquettes: (i-1, j) above, (i, j) below
            da = pid.get((i - 1, j), TERMINAL) if i > 0 else TERMINAL
            db = pid.get((i, j), TERMINAL) if i < L else TERMINAL
        else:
            u, v = vid[(i, j)], vid[(i + 1, j)]
            da = pid.get((i, j - 1), TERMINAL) if j > 0 else TERMINAL
            db = pid.get((i, j), TERMINAL) if j < L else TERMINAL
        qubit_primal_edge.append((u, v))
        qubit_dual_edge.append((da, db))
        vgens[u].append(q)
        vgens[v].append(q)

    pgens = []
    for (i, j) in plaquette_coords:
        pgens.append([qid[("h", i, j)], qid[("h", i + 1, j)],
                      qid[("v", i, j)], qid[("v", i, j + 1)]])

    # Z loop around the hole rim (4h qubits).
    logical_z = []
    for j in range(b, b + h):
        logical_z.append(qid[("h", a, j)])
        logical_z.append(qid[("h", a + h, j)])
    for i in range(a, a + h):
        logical_z.append(qid[("v", i, b)])
        logical_z.append(qid[("v", i, b + h)])

    # X string from the hole to the nearest outer boundary, straight line.
    margins = [(a, "up"), (L - a - h, "down"), (b, "left"), (L - b - h, "right")]
    margin, direction = min(margins)
    if direction == "up":
        logical_x = [qid[("h", i, b)] for i in range(0, a + 1)]
    elif direction == "down":
        logical_x = [qid[("h", i, b)] for i in range(a + h, L + 1)]
    elif direction == "left":
        logical_x = [qid[("v", a, j)] for j in range(0, b + 1)]
    else:
        logical_x = [qid[("v", a, j)] for j in range(b + h, L + 1)]

    code = _finish(CodeKind.HOLE, n_qubits, vgens, pgens,
                   qubit_primal_edge, qubit_dual_edge, logical_x, logical_z,
                   d=0, d_b=margin + 1, d_h=4 * h,
                   vertex_coords=vertex_coords,
                   plaquette_coords=plaquette_coords, qubit_coords=qubit_coords)
    d, d_b, d_h = code_metrics(code)
    return _finish(CodeKind.HOLE, n_qubits, vgens, pgens,
                   qubit_primal_edge, qubit_dual_edge, logical_x, logical_z,
                   d=d, d_b=d_b, d_h=d_h,
                   vertex_coords=vertex_coords,
                   plaquette_coords=plaquette_coords, qubit_coords=qubit_coords)


def build_hole_with_distance(d: int) -> Code:
    """Hole-code geometry targeting distance d.

    Uses h = ceil(d/4) so the rim loop has 4h >= d qubits, on a grid of
    L = 2d - 1 + h plaquettes with the hole at (d-1, d-1): the near-side
    margin of d-1 plaquettes makes the shortest hole-to-outer dual path
    exactly d qubits, and the far side is one plaquette deeper.
    """
    if d < 2:
        raise ValueError(f"distance must be >= 2, got {d}")
    h = -(-d // 4)
    L = 2 * d - 1 + h
    code = build_hole(L, (d - 1, d - 1), h)
    if code.d != d:
        raise AssertionError(f"geometry produced distance {code.d}, wanted {d}")
    return code


def _bfs_unit(adj, dangling, sources, targets_dangling=False):
    """Shortest unit-weight path lengths in qubit count; helper for metrics."""
    from collections import deque
    dist = {s: 0 for s in sources}
    dq = deque(sources)
    while dq:
        u = dq.popleft()
        for v, _q in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                dq.append(v)
    return dist


def code_metrics(code: Code):
    """(d, d_b, d_h): distances from shortest-path searches on the graphs.

    For hole codes d_b is the qubit count of the shortest dual path between
    hole and outer terminal, d_h the shortest primal cycle enclosing the
    hole, and d = min(d_b, d_h).  For mixed-boundary codes d is the smaller
    of the side-to-side primal and dual path lengths; d_b/d_h are undefined.
    """
    if code.kind is CodeKind.MIXED_BOUNDARY:
        d = min(_terminal_to_terminal(code, Side.PRIMAL),
                _terminal_to_terminal(code, Side.DUAL))
        return d, None, None

    d_b = _hole_to_outer(code)
    d_h = _shortest_enclosing_cycle(code)
    return min(d_b, d_h), d_b, d_h


def _qubit_is_outer_dual(code: Code, q: int) -> bool:
    # A dangling dual edge is "outer" if the qubit lies on the grid boundary.
    kind_, i, j = code.qubit_coords[q]
    Lp1 = max(c[0] for c in code.vertex_coords) + 1  # == L + 1 vertices per side
    L = Lp1 - 1
    if kind_ == "h":
        return i == 0 or i == L
    return j == 0 or j == L


def _hole_to_outer(code: Code) -> int:
    """Fewest qubits on a dual path from the hole terminal to the outer one."""
    import heapq
    starts = []   # (node, entry cost 1) via a hole-side dangling qubit
    for node, qs in enumerate(code.dual_dangling):
        for q in qs:
            if not _qubit_is_outer_dual(code, q):
                starts.append(node)
    dist = {}
    heap = [(1, n) for n in sorted(set(starts))]
    heapq.heapify(heap)
    best = None
    while heap:
        du, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = du
        for q in code.dual_dangling[u]:
            if _qubit_is_outer_dual(code, q):
                exit_cost = du + 1
                best = exit_cost if best is None else min(best, exit_cost)
        for v, _q in code.dual_adj[u]:
            if v not in dist:
                heapq.heappush(heap, (du + 1, v))
    if best is None:
        raise ValueError("no dual path from hole to outer boundary")
    return best


def _shortest_enclosing_cycle(code: Code) -> int:
    """Shortest primal cycle crossing the hole-to-outer cut an odd number of
    times, via a two-layer breadth-first search."""
    from collections import deque
    cut = code.logical_x  # dual string hole->outer; primal edges crossing it
    n = len(code.primal_adj)
    best = None
    for s in range(n):
        dist = {(s, 0): 0}
        dq = deque([(s, 0)])
        while dq:
            u, layer = dq.popleft()
            du = dist[(u, layer)]
            for v, q in code.primal_adj[u]:
                nl = layer ^ (1 if q in cut else 0)
                if (v, nl) not in dist:
                    dist[(v, nl)] = du + 1
                    dq.append((v, nl))
        if (s, 1) in dist:
            cyc = dist[(s, 1)]
            best = cyc if best is None else min(best, cyc)
    if best is None:
        raise ValueError("no enclosing primal cycle found")
    return best


def _terminal_to_terminal(code: Code, side: Side) -> int:
    """Fewest qubits on a path joining the two opposite boundaries."""
    from collections import deque
    adj = code.adjacency(side)
    dangling = code.dangling(side)
    coords = code.vertex_coords if side is Side.PRIMAL else code.plaquette_coords
    # The two opposite terminals: for primal, left (c small) vs right; for
    # dual, top (r small) vs bottom.  Classify each dangling qubit by the
    # coordinate of its node.
    axis = 1 if side is Side.PRIMAL else 0
    lo = min(c[axis] for c in coords)
    hi = max(c[axis] for c in coords)
    dist = {}
    dq = deque()
    for node, qs in enumerate(dangling):
        if qs and coords[node][axis] == lo:
            dist[node] = 1
            dq.append(node)
    best = None
    while dq:
        u = dq.popleft()
        if coords[u][axis] == hi and code.dangling(side)[u]:
            cand = dist[u] + 1
            best = cand if best is None else min(best, cand)
        for v, _q in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                dq.append(v)
    if best is None:
        raise ValueError("no side-to-side path found")
    return best
