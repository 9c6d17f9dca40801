"""MWPM decoding with iterative cross-lattice reweighting.

The plain decoder matches primal and dual syndrome nodes independently on
unit-weight lattices.  The reweighted variants exploit that an X and a Z on
the same qubit cost one Y: edges of one lattice that cross the other side's
correction strings are reweighted to 0, and matching is repeated until a
correction pattern recurs.

Weight ledger: with B_i the primal (Z) pattern and R_i the dual (X) pattern
of round i, the recorded totals are

    T_0 = W_0(B_0) + W_1(R_0)
    T_i = W_i(B_i) + W_0(R_i)      for i >= 1

where W_i evaluates a pattern on the i-th reweighted lattice of its own
side.  The totals are non-increasing, and each round satisfies the exchange
identities checked by `ledger_check`.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Optional

from .lattice import Code, Side
from .matching import MatchGraph, Matching, solve_mwpm
from .pauli import PauliOperator, Syndrome


class Variant(enum.Enum):
    PLAIN = "plain"
    ONE_REWEIGHT = "one"
    FULL = "full"


@dataclass(frozen=True)
class WeightedLattice:
    """Per-qubit 0/1 edge weights on one side of a code."""

    code: Code
    side: Side
    zero_qubits: frozenset = frozenset()

    def weight_of(self, qubit: int) -> int:
        return 0 if qubit in self.zero_qubits else 1

    def pattern_weight(self, support: frozenset) -> int:
        return len(support) - len(support & self.zero_qubits)


@dataclass(frozen=True)
class CorrectionPattern:
    side: Side
    support: frozenset

    def as_pauli(self, n_qubits: int) -> PauliOperator:
        if self.side is Side.PRIMAL:
            return PauliOperator.from_supports(n_qubits, z_qubits=self.support)
        return PauliOperator.from_supports(n_qubits, x_qubits=self.support)


@dataclass(frozen=True)
class SyndromeGraph:
    """Complete graph over syndrome nodes, plus one virtual boundary node per
    real node when the side has a terminal."""

    graph: MatchGraph
    real_nodes: tuple            # graph id -> lattice node id, for ids < len
    paths: dict                  # (graph u, graph v) u<v -> frozenset of qubits

    @property
    def n_real(self) -> int:
        return len(self.real_nodes)


@dataclass
class WeightLedger:
    totals: list = field(default_factory=list)
    # per round: (w_b, w_r) as paired in the corresponding total
    components: list = field(default_factory=list)

    def record(self, w_b: int, w_r: int):
        self.totals.append(w_b + w_r)
        self.components.append((w_b, w_r))


@dataclass
class DecodeOutcome:
    correction: PauliOperator
    ledger: WeightLedger
    extra_iterations: int
    variant: Variant
    converged: bool
    b_patterns: list  # CorrectionPattern history, index = round
    r_patterns: list
    final_b: CorrectionPattern = None
    final_r: CorrectionPattern = None


def unit_lattice(code: Code, side: Side) -> WeightedLattice:
    return WeightedLattice(code, side)


def reweight(code: Code, side: Side, other: CorrectionPattern) -> WeightedLattice:
    """Zero the edges of `side` that cross the opposite side's correction.

    Each qubit is one primal and one dual edge crossing at that qubit, so the
    zeroed edge set is exactly the correction support.
    """
    if other.side is side:
        raise ValueError("correction must come from the opposite side")
    return WeightedLattice(code, side, frozenset(other.support))


def shortest_paths(lat: WeightedLattice, source: int):
    """Dijkstra from one lattice node: distances, deterministic parents, and
    the best terminal exit.

    Returns (dist, parent, terminal) where parent[v] = (u, qubit) with u
    finalized before v, and terminal = (distance, node, qubit) for the
    cheapest dangling exit or None if the side has no terminal.
    """
    adj = lat.code.adjacency(lat.side)
    dangling = lat.code.dangling(lat.side)
    dist = {}
    parent = {source: None}
    heap = [(0, source)]
    order = {}
    while heap:
        du, u = heapq.heappop(heap)
        if u in order:
            continue
        order[u] = len(order)
        dist[u] = du
        if u != source:
            # deterministic parent: smallest (u', qubit) among finalized
            # neighbors that realize the shortest distance
            best = None
            for v, q in adj[u]:
                if v in order and v != u and dist[v] + lat.weight_of(q) == du:
                    cand = (v, q)
                    if best is None or cand < best:
                        best = cand
            parent[u] = best
        for v, q in adj[u]:
            if v not in order:
                heapq.heappush(heap, (du + lat.weight_of(q), v))

    terminal = None
    for u, du in dist.items():
        for q in dangling[u]:
            cand = (du + lat.weight_of(q), u, q)
            if terminal is None or cand < terminal:
                terminal = cand
    return dist, parent, terminal


def _walk(parent, node):
    qubits = []
    while parent[node] is not None:
        prev, q = parent[node]
        qubits.append(q)
        node = prev
    return qubits


def build_syndrome_graph(lat: WeightedLattice, nodes) -> SyndromeGraph:
    """Complete matching graph over the given syndrome nodes.

    Real-real edge weights are shortest-path lengths on the weighted lattice.
    If the side has a terminal, every real node gets a virtual partner at its
    nearest-terminal distance and virtual nodes form a zero-weight clique;
    otherwise the node count must be even.
    """
    real = tuple(sorted(nodes))
    k = len(real)
    has_term = lat.code.has_terminal(lat.side)
    if not has_term and k % 2 != 0:
        raise ValueError("odd syndrome node count on a terminal-free side")

    edges = []
    paths = {}
    for i, src in enumerate(real):
        dist, parent, terminal = shortest_paths(lat, src)
        for j in range(i + 1, k):
            tgt = real[j]
            edges.append((i, j, dist[tgt]))
            paths[(i, j)] = frozenset(_walk(parent, tgt))
        if has_term:
            if terminal is None:
                raise ValueError("terminal unreachable from syndrome node")
            tdist, tnode, tq = terminal
            edges.append((i, k + i, tdist))
            paths[(i, k + i)] = frozenset(_walk(parent, tnode)) | {tq}
    if has_term:
        for i in range(k):
            for j in range(i + 1, k):
                edges.append((k + i, k + j, 0))
        n = 2 * k
    else:
        n = k
    return SyndromeGraph(MatchGraph.from_edges(n, edges), real, paths)


def correction_from_matching(sg: SyndromeGraph, m: Matching, side: Side) -> CorrectionPattern:
    """Symmetric difference of the recorded paths of all matched pairs."""
    matched = set()
    for u, v in m.pairs:
        matched.add(u)
        matched.add(v)
    if matched != set(range(sg.graph.n_nodes)):
        raise ValueError("matching does not cover the syndrome graph")
    support = set()
    for u, v in m.pairs:
        support ^= sg.paths.get((u, v), frozenset())
    return CorrectionPattern(side, frozenset(support))


def _match_side(lat: WeightedLattice, nodes) -> CorrectionPattern:
    if not nodes:
        return CorrectionPattern(lat.side, frozenset())
    sg = build_syndrome_graph(lat, nodes)
    return correction_from_matching(sg, solve_mwpm(sg.graph), lat.side)


def _combine(code: Code, b: CorrectionPattern, r: CorrectionPattern) -> PauliOperator:
    return PauliOperator.from_supports(code.n_qubits, x_qubits=r.support,
                                       z_qubits=b.support)


def decode(code: Code, syn: Syndrome, variant: Variant = Variant.FULL,
           max_iters: int = 50) -> DecodeOutcome:
    """Decode one syndrome with the requested variant."""
    return decode_all(code, syn, (variant,), max_iters)[variant]


def decode_all(code: Code, syn: Syndrome, variants, max_iters: int = 50) -> dict:
    """Decode once, sharing the common prefix across the requested variants."""
    variants = tuple(variants)
    p0 = unit_lattice(code, Side.PRIMAL)
    d0 = unit_lattice(code, Side.DUAL)

    b0 = _match_side(p0, syn.primal_nodes)
    r0 = _match_side(d0, syn.dual_nodes)
    d1 = reweight(code, Side.DUAL, b0)
    t0 = (p0.pattern_weight(b0.support), d1.pattern_weight(r0.support))

    out = {}
    if Variant.PLAIN in variants:
        ledger = WeightLedger()
        ledger.record(*t0)
        out[Variant.PLAIN] = DecodeOutcome(
            correction=_combine(code, b0, r0), ledger=ledger, extra_iterations=0,
            variant=Variant.PLAIN, converged=True, b_patterns=[b0], r_patterns=[r0],
            final_b=b0, final_r=r0)
    if Variant.ONE_REWEIGHT in variants or Variant.FULL in variants:
        r1 = _match_side(d1, syn.dual_nodes)
    if Variant.ONE_REWEIGHT in variants:
        ledger = WeightLedger()
        ledger.record(*t0)
        ledger.record(p0.pattern_weight(b0.support), d1.pattern_weight(r1.support))
        out[Variant.ONE_REWEIGHT] = DecodeOutcome(
            correction=_combine(code, b0, r1), ledger=ledger, extra_iterations=0,
            variant=Variant.ONE_REWEIGHT, converged=True,
            b_patterns=[b0], r_patterns=[r1], final_b=b0, final_r=r1)
    if Variant.FULL in variants:
        out[Variant.FULL] = _decode_full(code, syn, p0, d0, b0, r0, d1, t0, r1,
                                         max_iters)
    return out


def _decode_full(code, syn, p0, d0, b0, r0, d1, t0, r1, max_iters) -> DecodeOutcome:
    # Round k >= 1 computes B_k on P_k = reweight(P_0, R_k); repetition checks
    # start at B_1, so the base flow B_0 -> R_1 -> B_1 is never counted as an
    # extra iteration.  Extra iterations count the B_k (k >= 1) that are used
    # to reweight the dual lattice; a stop at B_k or at R_k costs k - 1.
    ledger = WeightLedger()
    ledger.record(*t0)
    bs = [b0]
    rs = [r0]
    b_seen = {b0.support}
    r_seen = set()
    converged = False
    r_k = r1
    k = 1
    while True:
        rs.append(r_k)
        r_seen.add(r_k.support)
        p_k = reweight(code, Side.PRIMAL, r_k)
        b_k = _match_side(p_k, syn.primal_nodes)
        bs.append(b_k)
        ledger.record(p_k.pattern_weight(b_k.support), d0.pattern_weight(r_k.support))
        if b_k.support in b_seen:
            final_b, final_r = b_k, r_k
            converged = True
            extra = k - 1
            break
        b_seen.add(b_k.support)
        if k >= max_iters:
            # exhausted without a repeat: keep the current pair
            final_b, final_r = b_k, r_k
            extra = k - 1
            break
        d_k = reweight(code, Side.DUAL, b_k)
        r_next = _match_side(d_k, syn.dual_nodes)
        if r_next.support in r_seen:
            rs.append(r_next)
            final_b, final_r = b_k, r_next
            converged = True
            extra = k  # this stop is at R_{k+1}; B_1..B_k reweighted the dual
            break
        r_k = r_next
        k += 1

    return DecodeOutcome(
        correction=_combine(code, final_b, final_r), ledger=ledger,
        extra_iterations=extra, variant=Variant.FULL,
        converged=converged, b_patterns=bs, r_patterns=rs,
        final_b=final_b, final_r=final_r)


def ledger_check(code: Code, outcome: DecodeOutcome) -> bool:
    """Verify the exchange identities and monotonicity of a full decode.

    With D_i = D_0 reweighted by B_{i-1} and P_i = P_0 reweighted by R_i,
    every round i >= 1 must satisfy exactly

        W_0(B_{i-1}) + W_i(R_i) = W_i(B_{i-1}) + W_0(R_i)
        W_i(B_i) + W_0(R_i) = W_0(B_i) + W_{i+1}(R_i)

    and the recorded totals must be non-increasing.
    """
    bs, rs = outcome.b_patterns, outcome.r_patterns
    n_rounds = min(len(bs), len(rs))
    for i in range(1, n_rounds):
        b_prev, b_i, r_i = bs[i - 1], bs[i], rs[i]
        d_i = reweight(code, Side.DUAL, b_prev)
        p_i = reweight(code, Side.PRIMAL, r_i)
        d_next = reweight(code, Side.DUAL, b_i)
        lhs1 = len(b_prev.support) + d_i.pattern_weight(r_i.support)
        rhs1 = p_i.pattern_weight(b_prev.support) + len(r_i.support)
        if lhs1 != rhs1:
            return False
        lhs2 = p_i.pattern_weight(b_i.support) + len(r_i.support)
        rhs2 = len(b_i.support) + d_next.pattern_weight(r_i.support)
        if lhs2 != rhs2:
            return False
    totals = outcome.ledger.totals
    return all(totals[i] <= totals[i - 1] for i in range(1, len(totals)))
