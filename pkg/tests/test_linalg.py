"""Linear algebra tests against independently written schoolbook oracles."""

import random

import pytest

from pmcode.errors import (
    DimensionMismatch,
    DuplicateEvaluationPoint,
    FieldMismatch,
    IndexOutOfRange,
    Singular,
)
from pmcode.field import field_of_order
from pmcode.linalg import Matrix, matrix_from_text, vandermonde

from golden_vectors import PSI

F11 = field_of_order(11)
F13 = field_of_order(13)
GF256 = field_of_order(256)


def random_matrix(field, rows, cols, rng):
    return Matrix(field, [[rng.randrange(field.order) for _ in range(cols)] for _ in range(rows)])


def schoolbook_matmul(field, a, b):
    """Oracle: definition of the matrix product, one field op at a time."""
    out = Matrix.zeros(field, a.rows, b.cols)
    for i in range(a.rows):
        for j in range(b.cols):
            acc = 0
            for t in range(a.cols):
                acc = field.add(acc, field.mul(a.data[i][t], b.data[t][j]))
            out.data[i][j] = acc
    return out


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("field", [F11, GF256], ids=["F11", "GF256"])
def test_matmul_matches_schoolbook(field):
    rng = random.Random(42)
    for _ in range(20):
        r, m, c = rng.randrange(1, 7), rng.randrange(1, 7), rng.randrange(1, 7)
        a = random_matrix(field, r, m, rng)
        b = random_matrix(field, m, c, rng)
        assert (a @ b) == schoolbook_matmul(field, a, b)


@pytest.mark.parametrize("field", [F11, GF256], ids=["F11", "GF256"])
def test_mul_vector_matches_matmul(field):
    rng = random.Random(3)
    a = random_matrix(field, 5, 8, rng)
    v = [rng.randrange(field.order) for _ in range(8)]
    expected = a @ Matrix.column(field, v)
    assert a.mul_vector(v) == expected.column_vector(0)


def test_matmul_shape_and_field_checks():
    a = Matrix.zeros(F11, 2, 3)
    with pytest.raises(DimensionMismatch):
        a @ Matrix.zeros(F11, 2, 2)
    with pytest.raises(FieldMismatch):
        a @ Matrix.zeros(F13, 3, 2)


def test_transpose_of_product():
    rng = random.Random(9)
    a = random_matrix(F11, 4, 6, rng)
    b = random_matrix(F11, 6, 3, rng)
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


# ---------------------------------------------------------------------------
# inverse and rank
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("field", [F11, F13, GF256], ids=["F11", "F13", "GF256"])
def test_inverse_roundtrip(field):
    rng = random.Random(17)
    eye = Matrix.identity(field, 8)
    found = 0
    while found < 10:
        a = random_matrix(field, 8, 8, rng)
        if a.rank() < 8:
            continue
        found += 1
        inv = a.inverse()
        assert a @ inv == eye
        assert inv @ a == eye


def test_inverse_of_singular_raises():
    a = Matrix(F11, [[1, 2], [2, 4]])
    with pytest.raises(Singular):
        a.inverse()
    with pytest.raises(DimensionMismatch):
        Matrix.zeros(F11, 2, 3).inverse()


def test_rank_examples():
    assert Matrix.identity(F11, 5).rank() == 5
    assert Matrix.zeros(F11, 4, 4).rank() == 0
    assert Matrix(F11, [[1, 2], [2, 4]]).rank() == 1
    assert Matrix(F11, [[1, 2, 3], [4, 5, 6]]).rank() == 2
    # rank of a product never exceeds the ranks of the factors
    rng = random.Random(5)
    a = random_matrix(F11, 6, 2, rng)
    b = random_matrix(F11, 2, 6, rng)
    assert (a @ b).rank() <= 2


def test_rank_does_not_mutate():
    a = Matrix(F11, [[1, 2], [3, 4]])
    before = [list(r) for r in a.data]
    a.rank()
    assert a.data == before


# ---------------------------------------------------------------------------
# vandermonde
# ---------------------------------------------------------------------------

def test_vandermonde_powers_start_at_one():
    v = vandermonde(F11, [2], 4)
    assert v.data == [[2, 4, 8, 5]]


def test_vandermonde_known_reference():
    assert vandermonde(F11, list(range(1, 9)), 6).data == PSI


def test_vandermonde_full_rank_all_sizes_up_to_18():
    f = field_of_order(19)
    for n in range(1, 19):
        for m in range(1, n + 1):
            v = vandermonde(f, list(range(1, n + 1)), m)
            assert v.rank() == m, (n, m)


def test_vandermonde_duplicate_points_rejected():
    with pytest.raises(DuplicateEvaluationPoint):
        vandermonde(F11, [1, 2, 1], 3)


# ---------------------------------------------------------------------------
# structure helpers
# ---------------------------------------------------------------------------

def test_submatrix_and_take_rows():
    a = Matrix(F11, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert a.submatrix([0, 2], [1, 2]).data == [[2, 3], [8, 9]]
    assert a.take_rows([2, 0]).data == [[7, 8, 9], [1, 2, 3]]
    with pytest.raises(IndexOutOfRange):
        a.submatrix([3], [0])
    with pytest.raises(IndexOutOfRange):
        a.submatrix([0], [-1])


def test_stacking():
    a = Matrix(F11, [[1, 2]])
    b = Matrix(F11, [[3, 4], [5, 6]])
    assert Matrix.vstack([a, b]).data == [[1, 2], [3, 4], [5, 6]]
    assert Matrix.hstack([b, b]).data == [[3, 4, 3, 4], [5, 6, 5, 6]]
    with pytest.raises(FieldMismatch):
        Matrix.vstack([a, Matrix(F13, [[1, 2]])])
    with pytest.raises(DimensionMismatch):
        Matrix.vstack([a, Matrix(F11, [[1, 2, 3]])])


def test_diagonal_and_from_columns():
    d = Matrix.diagonal(F11, [1, 8, 5])
    assert d.data == [[1, 0, 0], [0, 8, 0], [0, 0, 5]]
    c = Matrix.from_columns(F11, [[1, 2], [3, 4]])
    assert c.data == [[1, 3], [2, 4]]


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        Matrix(F11, [[1, 2], [3]])


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def test_text_roundtrip_prime_and_gf256():
    rng = random.Random(23)
    for field in (F11, GF256):
        a = random_matrix(field, 4, 7, rng)
        b = matrix_from_text(a.to_text())
        assert b == a
        assert b.field.order == field.order


def test_text_header_format():
    a = Matrix(F11, [[1, 2, 3], [4, 5, 6]])
    text = a.to_text()
    assert text.splitlines()[0] == "2 3 11"
    assert text.splitlines()[1] == "1 2 3"


def test_text_rejects_bad_input():
    with pytest.raises(ValueError):
        matrix_from_text("")
    with pytest.raises(ValueError):
        matrix_from_text("2 2 11\n1 2\n3\n")
    with pytest.raises(ValueError):
        matrix_from_text("1 2 11\n1 11\n")  # entry out of range
    with pytest.raises(ValueError):
        matrix_from_text("2 2 11\n1 2\n")  # row count mismatch
    with pytest.raises(FieldMismatch):
        matrix_from_text("1 1 11\n1\n", field=F13)
