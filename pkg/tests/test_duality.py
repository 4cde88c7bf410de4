import numpy as np
import pytest
from hypothesis import given

from duality import (
    B_mor,
    B_obj,
    S_mor,
    S_obj,
    counit_natural,
    enumerate_lhoms,
    psi_dual,
    unit_M,
    verify_functoriality,
    verify_hom_bijection,
    verify_naturality,
    verify_round_trip,
    verify_stone_restriction,
    verify_triangles,
    verify_triangles_grp,
)
from errors import MathDomainError
from mspace import compose, identity, is_isomorphism, new_morphism, new_space
from sgroup import LHom, SpeckerGroup, identity_lhom, lhom_is_isomorphism, validate_lhom
from strategies import composable_pairs, morphisms, multispaces


def test_S_obj_examples(two_point):
    assert S_obj(two_point).unit.values == (1, 2)
    assert len(S_obj(new_space([], [])).base) == 0
    assert S_obj(new_space(['p'], [1])).unit.values == (1,)


def test_S_mor_examples(halving):
    X = new_space(['a', 'b'], [3, 3])
    assert S_mor(identity(X)) == identity_lhom(S_obj(X))
    assert S_mor(halving).matrix.tolist() == [[2]]
    swap = new_morphism(X, X, {'a': 'b', 'b': 'a'})
    assert S_mor(swap).matrix.tolist() == [[0, 1], [1, 0]]
    assert S_mor(halving).dom == S_obj(halving.cod)


def test_B_obj_examples(two_point):
    X = B_obj(S_obj(two_point))
    assert X.labels == ('m_a', 'm_b')
    assert X.mults == (1, 2)
    assert len(B_obj(SpeckerGroup(new_space([], [])))) == 0
    assert B_obj(SpeckerGroup(new_space(['p'], [3]))).mults == (3,)


def test_B_mor_rejects_a_non_unital_matrix():
    V = SpeckerGroup(new_space(['v'], [2]))
    W = SpeckerGroup(new_space(['w'], [3]))
    with pytest.raises(MathDomainError):
        B_mor(LHom(V, W, np.array([[1]], dtype=object)))


def test_B_mor_examples(halving):
    V = SpeckerGroup(new_space(['v'], [2]))
    W = SpeckerGroup(new_space(['w'], [4]))
    m = B_mor(validate_lhom([[2]], V, W))
    assert m.mapping == {'m_w': 'm_v'}
    assert m.zeta == (2,)
    assert B_mor(identity_lhom(V)) == identity(B_obj(V))
    relabeled = compose(unit_M(halving.dom).forward, B_mor(S_mor(halving)))
    assert relabeled == compose(halving, unit_M(halving.cod).forward)


@pytest.mark.parametrize('labels, mults', [
    ([], []),
    (['x'], [5]),
    (['a', 'b'], [1, 2]),
    (['a', 'b', 'c'], [2, 2, 3]),
])
def test_unit_and_counit_are_isomorphisms(labels, mults):
    X = new_space(labels, mults)
    witness = unit_M(X)
    assert witness.is_valid()
    assert is_isomorphism(witness.forward)
    assert witness.forward.cod.mults == X.mults
    counit = counit_natural(S_obj(X))
    assert counit.is_valid()
    assert lhom_is_isomorphism(counit.forward)
    assert np.array_equal(counit.forward.matrix, np.eye(len(X), dtype=int).astype(object))
    assert verify_triangles(X)
    assert verify_triangles_grp(S_obj(X))
    assert verify_round_trip(X) == []


def test_hom_bijection_examples():
    X = new_space(['x'], [2])
    Y = new_space(['y1', 'y2'], [1, 2])
    result = verify_hom_bijection(X, Y)
    assert (result['homs_bms'], result['homs_uslg']) == (2, 2)
    assert result['bijection']
    empty = new_space([], [])
    assert verify_hom_bijection(empty, empty)['homs_uslg'] == 1
    reverse = verify_hom_bijection(Y, X)
    assert (reverse['homs_bms'], reverse['homs_uslg']) == (0, 0)
    assert reverse['bijection']


def test_psi_dual_recovers_the_morphism(halving):
    assert psi_dual(S_mor(halving)) == halving


@given(multispaces(max_points=2), multispaces(max_points=2))
def test_S_is_full_and_faithful(X, Y):
    result = verify_hom_bijection(X, Y)
    assert result['bijection'], result['failures']
    assert len(enumerate_lhoms(S_obj(Y), S_obj(X))) == result['homs_bms']


@given(morphisms(max_points=2))
def test_naturality(gamma):
    assert verify_naturality(gamma) == []


@given(composable_pairs())
def test_functoriality(pair):
    assert verify_functoriality(*pair) == []


@given(multispaces(max_points=4, max_mult=6))
def test_round_trip(X):
    assert verify_round_trip(X) == []


def test_stone_restriction():
    X = new_space(['a', 'b'], [1, 1])
    Y = new_space(['c', 'd', 'e'], [1, 1, 1])
    result = verify_stone_restriction(X, Y)
    assert result['homs_bms'] == 9
    assert result['bijection']
    assert result['failures'] == []
    with pytest.raises(MathDomainError):
        verify_stone_restriction(new_space(['a'], [2]), Y)
