"""Systematic remapping tests: generic route, inclusion route, zero patterns."""

import itertools
import random

import pytest

from pmcode.core import (
    PmVandermondeCode,
    build_params,
    build_vandermonde_encoding,
    encoding_from_phi_lambda,
    pack_message,
    random_message,
)
from pmcode.errors import DesignMismatch, LengthMismatch
from pmcode.field import field_of_order
from pmcode.linalg import Matrix
from pmcode.systematic import (
    RemappedCode,
    inclusion_matrix,
    inclusion_remap_matrix,
    packed_coords,
    remap_generic,
    remap_via_inclusion,
    top_block_permutation,
    triangular_inclusion,
)

from golden_vectors import G_SYS, PSI_SPARSE

F11 = field_of_order(11)


@pytest.fixture(scope="module")
def code846():
    return PmVandermondeCode(build_vandermonde_encoding(build_params(8, 4, 6, F11)))


@pytest.fixture(scope="module")
def sparse846():
    params = build_params(8, 4, 6, F11)
    phi = Matrix(F11, [row[:3] for row in PSI_SPARSE])
    return PmVandermondeCode(encoding_from_phi_lambda(params, phi, [1, 8, 5, 9, 4, 7, 2, 6]))


def coords_set(params, t):
    _, i, j = packed_coords(params, t)
    return {i, j}


# ---------------------------------------------------------------------------
# generic route
# ---------------------------------------------------------------------------

def test_remap_generic_matches_reference(code846):
    sys_code = remap_generic(code846)
    assert sys_code.g_sys.data == G_SYS
    assert sys_code.column_permutation == list(range(12))


def test_systematic_code_stores_message_verbatim(code846):
    sys_code = remap_generic(code846)
    rng = random.Random(19)
    for _ in range(20):
        m = random_message(code846.params, rng)
        assert sys_code.encode_message(m)[:12] == m


def test_remap_of_already_systematic_is_identity(code846):
    sys_code = remap_generic(code846)
    again = remap_generic(sys_code)
    assert again.remap == Matrix.identity(F11, 12)
    assert again.g_sys == sys_code.g_sys


def test_remapped_code_stays_mds(code846):
    sys_code = remap_generic(code846)
    rng = random.Random(23)
    m = random_message(code846.params, rng)
    stored = sys_code.stored_rows(m)
    for ids in itertools.combinations(range(8), 4):
        assert sys_code.decode(ids, [stored[i] for i in ids]) == m


def test_remapped_code_repairs_exactly(code846):
    sys_code = remap_generic(code846)
    rng = random.Random(29)
    m = random_message(code846.params, rng)
    stored = sys_code.stored_rows(m)
    for f in range(8):
        others = [i for i in range(8) if i != f]
        for helpers in itertools.combinations(others, 6):
            assert list(sys_code.run_repair(stored, f, helpers).rebuilt) == stored[f]


# ---------------------------------------------------------------------------
# triangle placement
# ---------------------------------------------------------------------------

def test_triangular_inclusion_reference_layout():
    params = build_params(8, 4, 6, field_of_order(13))
    placed = triangular_inclusion(params, list(range(12)))
    assert placed.data == [[0, 1, 2], [7, 3, 4], [8, 10, 5], [6, 9, 11]]


def test_triangular_inclusion_is_a_bijection():
    params = build_params(8, 4, 6, F11)
    pi = inclusion_matrix(params)
    assert top_block_permutation(pi, 12) is not None
    with pytest.raises(LengthMismatch):
        triangular_inclusion(params, [0] * 11)


def test_packed_coords_roundtrip():
    from pmcode.core import sym_index

    params = build_params(8, 4, 6, F11)
    seen = set()
    for t in range(12):
        which, i, j = packed_coords(params, t)
        assert i <= j
        base = 0 if which == "a" else 6
        assert base + sym_index(3, i, j) == t
        seen.add((which, i, j))
    assert len(seen) == 12


# ---------------------------------------------------------------------------
# inclusion route
# ---------------------------------------------------------------------------

def test_inclusion_route_places_triangles(sparse846):
    sys_code = remap_via_inclusion(sparse846)
    params = sparse846.params
    rng = random.Random(31)
    for _ in range(10):
        m = random_message(params, rng)
        stored = sys_code.encode_message(m)
        placed = triangular_inclusion(params, m)
        assert stored[:12] == [x for row in placed.data for x in row]


def test_inclusion_route_requires_identity_block(code846):
    with pytest.raises(DesignMismatch):
        remap_via_inclusion(code846)


def test_inclusion_agrees_with_generic_up_to_permutation(sparse846):
    gen = remap_generic(sparse846)
    incl = remap_via_inclusion(sparse846)
    perm = incl.column_permutation
    assert sorted(perm) == list(range(12))
    pi = Matrix.zeros(F11, 12, 12)
    for t, s in enumerate(perm):
        pi.data[t][s] = 1
    assert incl.g_sys @ pi.transpose() == gen.g_sys
    assert pi == inclusion_matrix(sparse846.params)


def test_inclusion_closed_form_equals_general_form(sparse846):
    assert remap_via_inclusion(sparse846).remap == inclusion_remap_matrix(sparse846)


def test_inclusion_route_decodes_and_repairs(sparse846):
    sys_code = remap_via_inclusion(sparse846)
    rng = random.Random(37)
    m = random_message(sparse846.params, rng)
    stored = sys_code.stored_rows(m)
    for ids in [(0, 1, 2, 3), (4, 5, 6, 7), (0, 2, 4, 6)]:
        assert sys_code.decode(ids, [stored[i] for i in ids]) == m
    assert list(sys_code.run_repair(stored, 2, [0, 1, 3, 4, 5, 6]).rebuilt) == stored[2]


# ---------------------------------------------------------------------------
# zero patterns of the inclusion remap
# ---------------------------------------------------------------------------

def test_remap_is_column_block_diagonal(sparse846):
    """A remapped symbol for cell (i, j) may draw only on message symbols
    whose own cell touches both i and j."""
    params = sparse846.params
    remap = remap_via_inclusion(sparse846).remap
    for t in range(12):
        for s in range(12):
            if remap.data[t][s]:
                assert coords_set(params, t) <= coords_set(params, s), (t, s)


def partial_design_code():
    """[8,4,6] over F_11 where row 0 of Phi is e_0 but rows 1..alpha-1 are not."""
    base = build_vandermonde_encoding(build_params(8, 4, 6, F11))
    a = Matrix(F11, [[1, 10, 10], [0, 1, 0], [0, 0, 1]])
    phi = base.phi @ a
    assert phi.row(0) == [1, 0, 0]
    assert phi.row(1) != [0, 1, 0]
    enc = encoding_from_phi_lambda(base.params, phi, list(base.lam))
    return PmVandermondeCode(enc)


def test_first_column_zero_pattern_on_partial_design():
    """With only row 0 of Phi equal to e_0, remapped symbols touching node
    column 0 draw only on message symbols touching column 0."""
    code = partial_design_code()
    params = code.params
    remap = inclusion_remap_matrix(code)
    for t in range(12):
        if 0 not in coords_set(params, t):
            continue
        for s in range(12):
            if remap.data[t][s]:
                assert 0 in coords_set(params, s), (t, s)


def test_first_stored_symbol_is_d_sparse_on_partial_design():
    code = partial_design_code()
    params = code.params
    remap = inclusion_remap_matrix(code)
    g_sys = code.generator @ remap
    assert top_block_permutation(g_sys, 12) is not None
    for i in range(params.n):
        row = g_sys.data[i * params.alpha]
        assert sum(1 for x in row if x) <= params.d, i
    # the generic route only permutes columns, so the same bound holds there
    gen = remap_generic(code)
    for i in range(params.n):
        row = gen.g_sys.data[i * params.alpha]
        assert sum(1 for x in row if x) <= params.d, i
