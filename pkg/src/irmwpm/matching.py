"""Exact minimum-weight perfect matching with a deterministic tie-break.

The solver delegates to the blossom algorithm (networkx's O(V^3)
implementation) after an exact integer transformation that makes the
optimum unique: weights are scaled by 2^E and each edge of rank r (in
ascending (u, v) order) gets a bonus of 2^(E-1-r).  Among all true-weight
optima this selects exactly the lexicographically smallest pair set, so any
exact solver returns the same matching as the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import networkx as nx


@dataclass(frozen=True)
class MatchGraph:
    """Nodes 0..n_nodes-1 with a weighted undirected edge list."""

    n_nodes: int
    edges: tuple  # tuple[(u, v, weight)]

    def __post_init__(self):
        seen = set()
        for u, v, w in self.edges:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if w < 0:
                raise ValueError(f"negative weight on edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)

    @classmethod
    def from_edges(cls, n_nodes, edges) -> "MatchGraph":
        return cls(n_nodes, tuple((u, v, w) for u, v, w in edges))

    def dump(self) -> str:
        """One edge per line: u v w."""
        return "\n".join(
            f"{min(u, v)} {max(u, v)} {w}"
            for u, v, w in sorted((min(u, v), max(u, v), w) for u, v, w in self.edges)
        )


@dataclass(frozen=True)
class Matching:
    pairs: tuple          # sorted tuple of (u, v) with u < v
    total_weight: object  # sum of matched edge weights

    def pair_set(self) -> frozenset:
        return frozenset(self.pairs)


def _canonical_int_weights(edges):
    """Rescale weights to integers exactly (handles float/Fraction input)."""
    fracs = [Fraction(w) for _, _, w in edges]
    if all(f.denominator == 1 for f in fracs):
        return [int(f) for f in fracs], 1
    denom = lcm(*[f.denominator for f in fracs]) if fracs else 1
    return [int(f * denom) for f in fracs], denom


def _sorted_edges(g: MatchGraph):
    return sorted(
        ((min(u, v), max(u, v), w) for u, v, w in g.edges), key=lambda e: (e[0], e[1])
    )


def solve_mwpm(g: MatchGraph) -> Matching:
    """Minimum-weight perfect matching; ties broken to the lexicographically
    smallest sorted pair set."""
    if g.n_nodes % 2 != 0:
        raise ValueError(f"odd node count {g.n_nodes}")
    if g.n_nodes == 0:
        return Matching((), 0)

    edges = _sorted_edges(g)
    ints, _denom = _canonical_int_weights(edges)
    E = len(edges)

    # Unique-optimum transformation; see module docstring.
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n_nodes))
    perturbed = []
    for rank, ((u, v, _w), wi) in enumerate(zip(edges, ints)):
        perturbed.append((u, v, (wi << E) - (1 << (E - 1 - rank))))
    top = max(p for _, _, p in perturbed) + 1
    for u, v, p in perturbed:
        graph.add_edge(u, v, weight=top - p)

    mate = nx.max_weight_matching(graph, maxcardinality=True)
    if 2 * len(mate) != g.n_nodes:
        raise ValueError("no perfect matching exists")

    pairs = tuple(sorted((min(u, v), max(u, v)) for u, v in mate))
    by_pair = {(u, v): w for u, v, w in edges}
    total = sum(by_pair[p] for p in pairs)
    return Matching(pairs, total)


def brute_force_mwpm(g: MatchGraph, max_nodes: int = 12) -> Matching:
    """Test oracle: enumerate all perfect matchings (double factorial many)."""
    if g.n_nodes % 2 != 0:
        raise ValueError(f"odd node count {g.n_nodes}")
    if g.n_nodes > max_nodes:
        raise ValueError(f"{g.n_nodes} nodes is too large for enumeration")
    if g.n_nodes == 0:
        return Matching((), 0)

    adj = {}
    for u, v, w in g.edges:
        adj[(min(u, v), max(u, v))] = w

    best = None  # (weight, pairs)

    def recurse(unmatched, acc_w, acc_pairs):
        nonlocal best
        if not unmatched:
            cand = (acc_w, tuple(acc_pairs))
            if best is None or cand < best:
                best = cand
            return
        u = unmatched[0]
        rest = unmatched[1:]
        for i, v in enumerate(rest):
            w = adj.get((u, v))
            if w is None:
                continue
            acc_pairs.append((u, v))
            recurse(rest[:i] + rest[i + 1:], acc_w + w, acc_pairs)
            acc_pairs.pop()

    recurse(tuple(range(g.n_nodes)), 0, [])
    if best is None:
        raise ValueError("no perfect matching exists")
    return Matching(best[1], best[0])
