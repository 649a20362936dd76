import random
from fractions import Fraction

import pytest

from hadamard_spaces.linalg import (QMatrix, clear_denominators, identity_matrix,
                                    integer_kernel_basis, rat, rat_str,
                                    smith_normal_form)


def test_rref_identity():
    m = identity_matrix(3)
    reduced, rank, _ = m.rref()
    assert reduced == m
    assert rank == 3


def test_rref_proportional_rows():
    m = QMatrix([[1, 2, 3], [2, 4, 6]])
    assert m.rank() == 1


def test_rref_vandermonde_rank():
    # Vandermonde determinant (2-1)(3-1)(3-2) = 2 is nonzero.
    m = QMatrix([[1, 1, 1], [1, 2, 3], [1, 4, 9]])
    assert m.rank() == 3
    assert m.det() == 2


def test_rref_row_space_preserved():
    m = QMatrix([[1, 2, 3], [4, 5, 6]])
    reduced, rank, _ = m.rref()
    stacked = m.stack(QMatrix(reduced.rows[:rank]))
    assert stacked.rank() == rank


def test_nullspace_identity_empty():
    assert identity_matrix(4).nullspace() == []


def test_nullspace_single_row():
    basis = QMatrix([[1, -1]]).nullspace()
    assert basis == [(Fraction(1), Fraction(1))]


def test_nullspace_two_rows():
    basis = QMatrix([[1, 0, -1], [0, 1, -1]]).nullspace()
    assert basis == [(Fraction(1), Fraction(1), Fraction(1))]


def test_rank_equals_transpose_rank_randomized():
    rng = random.Random(1)
    for _ in range(25):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        m = QMatrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nc)]
                     for _ in range(nr)])
        assert m.rank() == m.transpose().rank()


def test_nullspace_vectors_annihilated_and_counted():
    rng = random.Random(2)
    for _ in range(25):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 6)
        m = QMatrix([[rng.randint(-5, 5) for _ in range(nc)] for _ in range(nr)])
        basis = m.nullspace()
        assert len(basis) == nc - m.rank()
        for vec in basis:
            assert all(x == 0 for x in m.mat_vec(vec))


def test_integer_kernel_matches_nullspace():
    rng = random.Random(3)
    for _ in range(20):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 7)
        rows = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        assert integer_kernel_basis(rows) == QMatrix(rows).nullspace()


def test_smith_identity():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]


def test_smith_diag():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]


def test_smith_standard_basis_subset():
    assert smith_normal_form([[1, 0, 0, 0], [0, 0, 1, 0]]) == [1, 1]


def test_smith_divisibility_and_sign():
    rng = random.Random(4)
    for _ in range(30):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        diag = smith_normal_form(rows)
        assert len(diag) == min(nr, nc)
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a != 0 and b % a == 0
            # zeros trail
        nz = [d for d in diag if d]
        assert diag[:len(nz)] == nz
        assert len(nz) == QMatrix(rows).rank()


def test_smith_unimodular_all_ones():
    rng = random.Random(5)
    for _ in range(10):
        # Random product of elementary integer matrices is unimodular.
        n = rng.randint(2, 4)
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(12):
            i, j = rng.sample(range(n), 2)
            f = rng.randint(-3, 3)
            for c in range(n):
                m[i][c] += f * m[j][c]
        assert smith_normal_form(m) == [1] * n


def test_det_bareiss_vs_definition():
    rng = random.Random(6)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = QMatrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
                     for _ in range(n)])
        # cofactor expansion reference
        def cof(rows):
            if len(rows) == 1:
                return rows[0][0]
            total = Fraction(0)
            for j in range(len(rows)):
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * rows[0][j] * cof(minor)
            return total
        assert m.det() == cof([list(r) for r in m.rows])


def test_rat_str_and_clear_denominators():
    assert rat_str(rat("5")) == "5"
    assert rat_str(rat("-3/7")) == "-3/7"
    assert clear_denominators([rat("1/2"), rat("-1/3")]) == (3, -2)
    assert clear_denominators([rat("-1/2"), rat("-1/3")]) == (3, 2)
    assert clear_denominators([0, 0]) == (0, 0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        QMatrix([[0.5]])
