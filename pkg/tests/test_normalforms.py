import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import normalforms
from errors import MathDomainError
from normalforms import (
    exgcd,
    hermite_normal_form,
    integer_matrix,
    pivots,
    solve_integer_system,
)


def is_hermite(H):
    found = pivots(H)
    rows = sorted(found.values())
    if rows != list(range(len(rows))):
        return False
    previous = -1
    for col, row in sorted(found.items()):
        if row <= previous or H[row, col] <= 0:
            return False
        previous = row
        for above in range(row):
            if not 0 <= H[above, col] < H[row, col]:
                return False
        if any(H[below, col] != 0 for below in range(row + 1, H.shape[0])):
            return False
    return all(not any(H[r]) for r in range(len(rows), H.shape[0]))


def test_exgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (35, -14)]:
        g, x, y = exgcd(a, b)
        assert g >= 0
        assert x * a + y * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_hermite_form_example():
    G = integer_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    H, U = hermite_normal_form(G)
    assert (U.dot(G) == H).all()
    assert is_hermite(H)
    assert round(abs(np.linalg.det(U.astype(float)))) == 1


def test_solve_example():
    G = integer_matrix([[0, 1]])
    coefficients, obstruction = solve_integer_system(G, [0, 3])
    assert coefficients == [3]
    assert obstruction is None


def test_obstruction_without_pivot():
    G = integer_matrix([[0, 1], [0, 1]])
    coefficients, obstruction = solve_integer_system(G, [2, 0])
    assert coefficients is None
    assert (obstruction.coordinate, obstruction.residue, obstruction.modulus) == (0, 2, 0)


def test_obstruction_modulo_pivot():
    G = integer_matrix([[2, 0], [0, 3]])
    coefficients, obstruction = solve_integer_system(G, [4, 4])
    assert coefficients is None
    assert (obstruction.coordinate, obstruction.residue, obstruction.modulus) == (1, 1, 3)


def test_no_generators():
    G = integer_matrix([], cols=3)
    assert solve_integer_system(G, [0, 0, 0]) == ([], None)
    coefficients, obstruction = solve_integer_system(G, [0, 5, 0])
    assert coefficients is None
    assert obstruction.coordinate == 1


def test_back_substitution_is_checked(monkeypatch):
    G = integer_matrix([[2]])
    assert solve_integer_system(G, [4]) == ([2], None)
    # una forma de Hermite falsa: H = [[1]] con U = I no cumple U·G = H
    wrong = (integer_matrix([[1]]), integer_matrix([[1]]))
    monkeypatch.setattr(normalforms, 'hermite_normal_form', lambda matrix: wrong)
    with pytest.raises(MathDomainError):
        solve_integer_system(G, [4])


matrices = st.integers(1, 4).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols), min_size=1, max_size=4)
)


@given(matrices)
def test_hermite_form_properties(rows):
    G = integer_matrix(rows)
    H, U = hermite_normal_form(G)
    assert (U.dot(G) == H).all()
    assert is_hermite(H)
    assert round(abs(np.linalg.det(U.astype(float)))) == 1


@given(matrices, st.data())
def test_combinations_are_recovered(rows, data):
    G = integer_matrix(rows)
    c = data.draw(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    target = [int(v) for v in np.array(c, dtype=object).dot(G)]
    coefficients, obstruction = solve_integer_system(G, target)
    assert obstruction is None
    assert [int(v) for v in np.array(coefficients, dtype=object).dot(G)] == target
