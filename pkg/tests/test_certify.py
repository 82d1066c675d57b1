"""Conversion certificates, identity checks, representations, and pinching."""

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from spectral_chroma.certify import (
    Coloring,
    OrthoRepresentation,
    PinchingInstance,
    build_conversion,
    certificate_from_json,
    check_ortho_representation,
    check_proper,
    coloring_projectors,
    coloring_representation,
    conversion_residual,
    conversion_unitaries,
    pinch,
    pinch_via_unitaries,
    pinching_corollary_check,
    verify_loan_identity,
    verify_majorization_step,
)
from spectral_chroma.errors import DomainError
from spectral_chroma.graphs import (
    GraphMatrixKind,
    build_matrix,
    complete,
    complete_bipartite,
    cycle,
    petersen,
    random_gnp,
)
from spectral_chroma.linalg import ky_fan, eigenvalues_sym, random_hermitian
from spectral_chroma.oracle import chromatic_number, greedy_coloring

seeds = st.integers(0, 2**32 - 1)


def adjacency(g):
    return build_matrix(g, GraphMatrixKind.ADJACENCY)


class TestColoring:
    def test_color_out_of_palette(self):
        with pytest.raises(DomainError):
            Coloring((0, 2), 2)

    def test_with_palette(self):
        col = Coloring((0, 1), 2).with_palette(4)
        assert col.c == 4 and col.colors == (0, 1)

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            Coloring((), 1)

    def test_check_proper_names_edge(self):
        with pytest.raises(DomainError, match=r"\(0, 1\)"):
            check_proper(adjacency(complete(3)), Coloring((0, 0, 1), 2))


class TestConversion:
    def test_k2_hand_computation(self):
        a = adjacency(complete(2))
        cert = build_conversion(a, Coloring((0, 1), 2))
        assert np.allclose(cert.unitaries[0], [1.0, -1.0], atol=1e-12)
        assert np.allclose(cert.unitaries[1], [1.0, 1.0], atol=1e-12)
        u1 = np.diag(cert.unitaries[0])
        assert np.abs(u1.conj().T @ a @ u1 + a).max() <= 1e-12

    def test_last_unitary_is_identity(self):
        col = Coloring((0, 1, 2, 0), 3)
        diags = conversion_unitaries(col)
        assert np.allclose(diags[-1], 1.0, atol=1e-12)

    def test_residual_tiny_for_proper(self):
        g = petersen()
        cert = build_conversion(adjacency(g), greedy_coloring(g))
        assert cert.residual < 1e-10

    def test_improper_coloring_rejected(self):
        with pytest.raises(DomainError, match="improper"):
            build_conversion(adjacency(complete(3)), Coloring((0, 0, 1), 2))

    def test_improper_residual_large(self):
        # shared color on an edge leaves a coefficient-c entry pair
        r = conversion_residual(adjacency(complete(3)), Coloring((0, 0, 1), 2))
        assert r >= 2.0

    def test_single_color_rejected(self):
        a = np.zeros((3, 3))
        with pytest.raises(DomainError, match="at least 2"):
            build_conversion(a, Coloring((0, 0, 0), 1))

    def test_json_round_trip(self):
        g = cycle(5)
        cert = build_conversion(adjacency(g), chromatic_number(g).witness)
        back = certificate_from_json(cert.to_json())
        assert back.coloring == cert.coloring
        assert back.residual == cert.residual

    def test_json_phases_are_exact_rationals(self):
        import json

        cert = build_conversion(adjacency(complete(3)), Coloring((0, 1, 2), 3))
        payload = json.loads(cert.to_json())
        assert payload["unitaries"][0]["phase_turns"] == ["0", "1/3", "2/3"]

    @seed(11)
    @given(st.integers(2, 9), seeds)
    @settings(max_examples=60, deadline=None)
    def test_any_greedy_coloring_certifies(self, n, s):
        g = random_gnp(n, 0.5, s)
        col = greedy_coloring(g)
        if col.c < 2:
            col = col.with_palette(2)
        cert = build_conversion(adjacency(g), col)
        assert cert.residual <= cert.tolerance


class TestMajorizationStep:
    def test_bipartite_sign_flip(self):
        g = complete_bipartite(3, 4)
        col = chromatic_number(g).witness
        rep = verify_majorization_step(adjacency(g), np.zeros((7, 7)), col)
        assert rep.ok

    def test_petersen_with_degree_matrix(self):
        g = petersen()
        col = chromatic_number(g).witness
        assert col.c == 3
        b = np.diag(g.degrees().astype(float))
        rep = verify_majorization_step(adjacency(g), b, col)
        assert rep.identity_ok and rep.spectral_ok

    def test_non_diagonal_b_rejected(self):
        g = cycle(4)
        b = np.ones((4, 4))
        with pytest.raises(DomainError, match="diagonal"):
            verify_majorization_step(adjacency(g), b, chromatic_number(g).witness)

    def test_improper_rejected(self):
        g = complete(3)
        with pytest.raises(DomainError, match="improper"):
            verify_majorization_step(adjacency(g), np.zeros((3, 3)), Coloring((0, 0, 1), 2))

    @seed(12)
    @given(st.integers(2, 8), seeds, st.sampled_from(["zero", "deg", "negdeg"]))
    @settings(max_examples=80, deadline=None)
    def test_random_graphs_all_b_choices(self, n, s, which):
        g = random_gnp(n, 0.5, s)
        if g.edge_count == 0:
            return
        col = greedy_coloring(g)
        if col.c < 2:
            col = col.with_palette(2)
        d = np.diag(g.degrees().astype(float))
        b = {"zero": np.zeros((n, n)), "deg": d, "negdeg": -d}[which]
        rep = verify_majorization_step(adjacency(g), b, col)
        assert rep.ok


class TestLoanIdentity:
    def test_k2_hand_values(self):
        g = complete(2)
        rep = verify_loan_identity(g, Coloring((0, 1), 2))
        assert rep.ok
        assert abs(rep.rayleigh_value - 1.0) <= 1e-12

    def test_c5_three_coloring(self):
        g = cycle(5)
        rep = verify_loan_identity(g, chromatic_number(g).witness)
        assert rep.ok

    def test_edgeless_rejected(self):
        from spectral_chroma.graphs import Graph

        with pytest.raises(DomainError, match="edge"):
            verify_loan_identity(Graph(3), Coloring((0, 1, 0), 2))

    @seed(13)
    @given(st.integers(2, 8), seeds)
    @settings(max_examples=80, deadline=None)
    def test_random_graphs(self, n, s):
        g = random_gnp(n, 0.6, s)
        if g.edge_count == 0:
            return
        col = greedy_coloring(g)
        rep = verify_loan_identity(g, col)
        assert rep.ok


class TestOrthoRepresentation:
    def test_non_unit_modulus_rejected(self):
        with pytest.raises(DomainError, match="modulus"):
            OrthoRepresentation(np.array([[1.0, 0.5], [1.0, 1.0]]))

    def test_k2_plus_minus(self):
        rep = OrthoRepresentation(np.array([[1, 1], [1, -1]], dtype=complex))
        out = check_ortho_representation(adjacency(complete(2)), rep)
        assert out.valid and out.max_edge_inner <= 1e-12

    def test_coloring_induced_on_k3(self):
        col = Coloring((0, 1, 2), 3)
        rep = coloring_representation(col)
        out = check_ortho_representation(adjacency(complete(3)), rep)
        assert out.valid

    def test_k3_has_no_2d_representation_on_phase_grid(self):
        # up to a global phase per vector, 2-d unit-modulus vectors are
        # (1, e^(i phi)); orthogonality forces phase gaps of pi, which three
        # vertices cannot pairwise realize
        a = adjacency(complete(3))
        grid = np.exp(2j * np.pi * np.arange(8) / 8)
        hits = 0
        for p0 in grid:
            for p1 in grid:
                for p2 in grid:
                    rep = OrthoRepresentation(
                        np.array([[1, p0], [1, p1], [1, p2]], dtype=complex)
                    )
                    if check_ortho_representation(a, rep).valid:
                        hits += 1
        assert hits == 0

    @seed(14)
    @given(st.integers(2, 8), seeds)
    @settings(max_examples=60, deadline=None)
    def test_greedy_coloring_representation_always_valid(self, n, s):
        g = random_gnp(n, 0.5, s)
        col = greedy_coloring(g)
        if col.c < 2:
            col = col.with_palette(2)
        out = check_ortho_representation(adjacency(g), coloring_representation(col))
        assert out.valid


def split_projectors(n, sizes, s):
    """Random orthonormal basis split into column blocks."""

    rng = np.random.default_rng(s)
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    projs = []
    start = 0
    for size in sizes:
        block = q[:, start:start + size]
        projs.append(block @ block.conj().T)
        start += size
    return tuple(projs)


class TestPinching:
    def test_single_projector_is_identity_map(self):
        x = random_hermitian(4, 0)
        inst = PinchingInstance((np.eye(4),), x)
        assert np.allclose(pinch(inst), x, atol=1e-12)
        assert np.allclose(pinch_via_unitaries(inst), x, atol=1e-12)

    def test_coloring_projectors_recover_diagonal(self):
        g = petersen()
        col = chromatic_number(g).witness
        b = np.diag(g.degrees().astype(float))
        x = b - adjacency(g)
        inst = PinchingInstance(coloring_projectors(col), x)
        assert np.abs(pinch(inst) - b).max() <= 1e-12

    def test_invalid_family_rejected(self):
        p = np.diag([1.0, 0.0])
        with pytest.raises(DomainError, match="identity"):
            PinchingInstance((p,), np.zeros((2, 2)))

    def test_non_idempotent_rejected(self):
        p = np.diag([0.5, 0.5])
        with pytest.raises(DomainError, match="idempotent"):
            PinchingInstance((p, np.eye(2) - p), np.zeros((2, 2)))

    def test_trace_preserved(self):
        x = random_hermitian(6, 3)
        inst = PinchingInstance(split_projectors(6, (2, 2, 2), 5), x)
        assert abs(np.trace(pinch(inst)).real - np.trace(x)) <= 1e-10

    @seed(15)
    @given(seeds)
    @settings(max_examples=100, deadline=None)
    def test_unitary_mixture_agrees(self, s):
        x = random_hermitian(6, s)
        inst = PinchingInstance(split_projectors(6, (2, 2, 2), s + 1), x)
        direct = pinch(inst)
        mixture = pinch_via_unitaries(inst)
        scale = max(1.0, np.linalg.norm(x))
        assert np.abs(direct - mixture).max() <= 1e-10 * scale


class TestPinchingCorollary:
    def test_block_diagonal_equality(self):
        # X commuting with the projectors gives C(X) = X, so both sides match
        x = np.diag([3.0, 1.0, -2.0, 0.5])
        projs = (np.diag([1.0, 1.0, 0, 0]), np.diag([0, 0, 1.0, 1.0]))
        inst = PinchingInstance(projs, x)
        spec = eigenvalues_sym(x)
        for m in range(1, 5):
            assert pinching_corollary_check(inst, m)
            mixed = (2.0 / 1.0) * pinch(inst) - x / 1.0
            assert abs(ky_fan(eigenvalues_sym(mixed.real), m) - ky_fan(spec, m)) <= 1e-9

    def test_single_projector_rejected(self):
        inst = PinchingInstance((np.eye(3),), np.zeros((3, 3)))
        with pytest.raises(DomainError, match="at least 2"):
            pinching_corollary_check(inst, 1)

    def test_matches_majorization_step_at_m1(self):
        g = petersen()
        col = chromatic_number(g).witness
        a = adjacency(g)
        b = np.diag(g.degrees().astype(float))
        inst = PinchingInstance(coloring_projectors(col), b - a)
        assert pinching_corollary_check(inst, 1)
        rep = verify_majorization_step(a, b, col)
        assert rep.spectral_ok

    @seed(16)
    @given(seeds, st.sampled_from([2, 3]))
    @settings(max_examples=100, deadline=None)
    def test_random_instances(self, s, c):
        x = random_hermitian(6, s)
        sizes = (3, 3) if c == 2 else (2, 2, 2)
        inst = PinchingInstance(split_projectors(6, sizes, s + 2), x)
        for m in range(1, 7):
            assert pinching_corollary_check(inst, m)
