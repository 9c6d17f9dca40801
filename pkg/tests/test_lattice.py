"""Code construction: qubit/generator counts, distances, boundary structure."""

import itertools

import pytest

from irmwpm import (CodeKind, Side, build_hole, build_hole_with_distance,
                    build_mixed_boundary, code_metrics)
from irmwpm.lattice import TERMINAL


def gf2_rank(masks):
    rank = 0
    rows = list(masks)
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            continue
        rank += 1
        hi = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> hi) & 1 else r for r in rows]
    return rank


class TestMixedBoundary:
    @pytest.mark.parametrize("d", [2, 3, 4, 5, 8])
    def test_counts(self, d):
        code = build_mixed_boundary(d)
        assert code.n_qubits == d * d + (d - 1) * (d - 1)
        assert len(code.vertex_generators) == d * (d - 1)
        assert len(code.plaquette_generators) == d * (d - 1)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_distance(self, d):
        code = build_mixed_boundary(d)
        assert code.d == d
        assert code_metrics(code)[0] == d

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_generators_independent_one_logical(self, d):
        code = build_mixed_boundary(d)
        rank = gf2_rank(code.vertex_masks) + gf2_rank(code.plaquette_masks)
        assert code.n_qubits - rank == 1  # one encoded qubit

    def test_logicals_anticommute(self):
        code = build_mixed_boundary(4)
        from irmwpm import commutes
        assert not commutes(code.logical_x_op, code.logical_z_op)
        assert len(code.logical_z) == 4 and len(code.logical_x) == 4

    def test_boundary_sides(self):
        code = build_mixed_boundary(3)
        # primal strings end left/right, dual strings top/bottom
        assert code.has_terminal(Side.PRIMAL)
        assert code.has_terminal(Side.DUAL)
        for node, qs in enumerate(code.primal_dangling):
            if qs:
                assert code.vertex_coords[node][1] in (1, 2 * 3 - 3)

    def test_rejects_small_distance(self):
        with pytest.raises(ValueError):
            build_mixed_boundary(1)

    def test_every_qubit_is_one_edge_per_graph(self):
        code = build_mixed_boundary(4)
        for q in range(code.n_qubits):
            pu, pv = code.qubit_primal_edge[q]
            du, dv = code.qubit_dual_edge[q]
            assert pu != TERMINAL or pv != TERMINAL
            assert du != TERMINAL or dv != TERMINAL


class TestHole:
    def test_counts_full_grid(self):
        L, h = 4, 1
        code = build_hole(L, (1, 1), h)
        assert code.n_qubits == 2 * L * (L + 1)
        assert len(code.vertex_generators) == (L + 1) ** 2
        assert len(code.plaquette_generators) == L * L - h * h

    def test_vertex_dependency_one_logical(self):
        code = build_hole(3, (1, 1), 1)
        rank = gf2_rank(code.vertex_masks) + gf2_rank(code.plaquette_masks)
        # (L+1)^2 vertex generators carry one GF(2) dependency
        assert gf2_rank(code.vertex_masks) == len(code.vertex_generators) - 1
        assert code.n_qubits - rank == 1

    def test_small_hole_metrics(self):
        code = build_hole(3, (1, 1), 1)
        assert (code.d, code.d_b, code.d_h) == (2, 2, 4)

    def test_h2_hole_metrics(self):
        code = build_hole(9, (3, 3), 2)
        assert code.d_h == 8
        rank = gf2_rank(code.vertex_masks) + gf2_rank(code.plaquette_masks)
        assert code.n_qubits - rank == 1

    def test_primal_has_no_terminal(self):
        code = build_hole(4, (1, 1), 1)
        assert not code.has_terminal(Side.PRIMAL)
        assert code.has_terminal(Side.DUAL)

    def test_hole_touching_boundary_rejected(self):
        with pytest.raises(ValueError):
            build_hole(3, (0, 1), 1)
        with pytest.raises(ValueError):
            build_hole(4, (2, 2), 2)

    def test_logical_z_encircles_hole(self):
        code = build_hole(5, (2, 2), 1)
        assert len(code.logical_z) == 4  # rim of a 1x1 hole
        from irmwpm import commutes
        assert not commutes(code.logical_x_op, code.logical_z_op)


class TestHoleWithDistance:
    @pytest.mark.parametrize("d", [2, 3, 4, 5, 8])
    def test_distance_achieved(self, d):
        code = build_hole_with_distance(d)
        assert code.d == d
        assert code.kind is CodeKind.HOLE

    def test_near_margin_sets_dual_distance(self):
        code = build_hole_with_distance(4)
        assert code.d_b == 4 and code.d_h == 4

    def test_other_distances_are_boundary_limited(self):
        code = build_hole_with_distance(3)
        assert code.d_b == 3 and code.d_h >= 4


class TestGeneratorShape:
    @pytest.mark.parametrize("code", [build_mixed_boundary(4),
                                      build_hole(4, (1, 1), 1)],
                             ids=["mixed4", "hole4"])
    def test_generator_sizes(self, code):
        for g in itertools.chain(code.vertex_generators,
                                 code.plaquette_generators):
            assert 2 <= len(g) <= 4

    def test_to_json_contains_metrics(self):
        import json
        blob = json.loads(build_mixed_boundary(3).to_json())
        assert blob["d"] == 3 and blob["n_qubits"] == 13
