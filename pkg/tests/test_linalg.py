import itertools
from fractions import Fraction

import pytest

from delpezzo.linalg import (
    NO_SOLUTION,
    NON_UNIQUE,
    UNIQUE,
    determinant,
    is_negative_definite,
    leading_principal_minors,
    rank,
    signature,
    solve_linear,
)


def test_solve_one_by_one():
    out = solve_linear([[-2]], [0])
    assert out.status == UNIQUE
    assert out.solution == (Fraction(0),)


def test_solve_hirzebruch_jung_system():
    # hand Gaussian elimination: alpha = (3/7, 2/7, 1/7)
    m = [[-3, 1, 0], [1, -2, 1], [0, 1, -2]]
    out = solve_linear(m, [-1, 0, 0])
    assert out.status == UNIQUE
    assert out.solution == (Fraction(3, 7), Fraction(2, 7), Fraction(1, 7))


def test_solve_inconsistent():
    assert solve_linear([[0]], [1]).status == NO_SOLUTION


def test_solve_underdetermined():
    out = solve_linear([[1, 1], [2, 2]], [3, 6])
    assert out.status == NON_UNIQUE


def test_solve_shape_errors():
    with pytest.raises(ValueError):
        solve_linear([[1, 2]], [1])
    with pytest.raises(ValueError):
        solve_linear([[1]], [1, 2])


def test_resubstitution_is_exact():
    m = [[-3, 1, 0], [1, -2, 1], [0, 1, -2]]
    b = [-1, 0, 0]
    x = solve_linear(m, b).solution
    for row, rhs in zip(m, b):
        assert sum(c * v for c, v in zip(row, x)) == rhs


def test_minors_of_chain():
    m = [[-3, 1, 0], [1, -2, 1], [0, 1, -2]]
    assert leading_principal_minors(m) == [-3, 5, -7]


def test_negative_definite_examples():
    assert is_negative_definite([[-2]])
    assert is_negative_definite([[-3, 1, 0], [1, -2, 1], [0, 1, -2]])
    assert not is_negative_definite([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        is_negative_definite([[0, 1], [2, 0]])


def _definite_on_box(m, n):
    for v in itertools.product(range(-2, 3), repeat=n):
        if all(x == 0 for x in v):
            continue
        value = sum(v[i] * m[i][j] * v[j] for i in range(n) for j in range(n))
        if value >= 0:
            return False
    return True


def test_negative_definite_matches_box_oracle():
    corpus = [
        [[-2]],
        [[-1]],
        [[0]],
        [[1]],
        [[-2, 1], [1, -2]],
        [[-2, 1], [1, 0]],
        [[0, 1], [1, 0]],
        [[-3, 1, 0], [1, -2, 1], [0, 1, -2]],
        [[-2, 1, 1], [1, -2, 1], [1, 1, -2]],
        [[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]],
        [[-2, 1, 1, 1], [1, -2, 0, 0], [1, 0, -2, 0], [1, 0, 0, -2]],
        [[-5, 3, 0, 0], [3, -2, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    ]
    for m in corpus:
        assert is_negative_definite(m) == _definite_on_box(m, len(m))


def test_determinant_with_swaps():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 2, 1], [1, 0, 0], [0, 0, 3]]) == -6
    assert determinant([[1, 2], [2, 4]]) == 0


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0


def test_signature_hyperbolic_plus_exceptional():
    # F_n lattice block plus two blowups: signature (1, rho-1)
    m = [
        [-2, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, -1, 0],
        [0, 0, 0, -1],
    ]
    assert signature(m) == (1, 3, 0)
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0, 2)
