import pytest
from hypothesis import given

from duality import S_mor, S_obj, enumerate_lhoms
from errors import SchemaError
from mspace import new_space
from mv import (
    FiberComponent,
    cardinality,
    elements,
    enumerate_mv_homs,
    fiber_cardinality,
    fiber_decomposition,
    gamma_mor,
    gamma_obj,
    gamma_report,
    mv_hom_table,
    mv_neg,
    mv_plus,
    mv_zero,
    verify_boolean,
    verify_mv_axioms,
    verify_mv_hom,
    verify_product_preservation,
)
from sgroup import SpeckerGroup
from strategies import morphisms, multispaces


def algebra(labels, mults):
    return gamma_obj(SpeckerGroup(new_space(labels, mults)))


def test_cardinality_examples():
    assert cardinality(algebra(['p'], [1])) == 2
    assert cardinality(algebra(['p'], [5])) == 6
    assert cardinality(algebra(['a', 'b'], [1, 2])) == 6
    assert elements(algebra(['a', 'b'], [1, 2])).tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]


def test_operations():
    A = algebra(['p'], [2])
    one = A.group.element([1])
    assert mv_plus(one, one).values == (2,)
    assert mv_plus(A.unit, A.unit) == A.unit
    assert mv_neg(mv_zero(A)) == A.unit
    with pytest.raises(SchemaError):
        mv_plus(A.group.element([3]), one)


@pytest.mark.parametrize('mults', [[1], [3], [1, 2]])
def test_axioms_pass(mults):
    report = verify_mv_axioms(algebra([f"p{i}" for i in range(len(mults))], mults))
    assert report['passed']
    assert set(report['axioms'].values()) == {'pass'}


def test_boolean_exactly_for_singular_units():
    assert verify_boolean(algebra(['a', 'b'], [1, 1]))
    assert not verify_boolean(algebra(['a', 'b'], [1, 2]))


def test_fiber_decomposition_examples():
    A = algebra(['a', 'b'], [1, 2])
    fibers = fiber_decomposition(A)
    assert fibers == [FiberComponent(('a',), 1), FiberComponent(('b',), 2)]
    assert fiber_cardinality(fibers) == 6
    constant = fiber_decomposition(algebra(['a', 'b', 'c'], [3, 3, 3]))
    assert constant == [FiberComponent(('a', 'b', 'c'), 3)]
    assert fiber_cardinality(constant) == 4 ** 3
    empty = algebra([], [])
    assert fiber_decomposition(empty) == []
    assert cardinality(empty) == 1


def test_gamma_report():
    report = gamma_report(SpeckerGroup(new_space(['a', 'b'], [1, 2])))
    assert report['cardinality'] == 6
    assert report['fibers'] == [{'points': ['a'], 'n': 1}, {'points': ['b'], 'n': 2}]
    assert report['axioms'] == 'pass'
    assert gamma_report(SpeckerGroup(new_space(['a', 'b', 'c', 'd'], [4, 4, 4, 4])))['axioms'] == 'skipped'


@pytest.mark.parametrize('dom, cod, count', [
    ((['p'], [2]), (['a', 'b'], [1, 1]), 0),
    ((['a'], [1]), (['a', 'b'], [1, 2]), 1),
    ((['a', 'b'], [1, 2]), (['p'], [2]), 2),
    ((['a', 'b'], [1, 2]), (['a', 'b'], [1, 2]), 2),
])
def test_mv_homs_match_lhoms(dom, cod, count):
    S, T = SpeckerGroup(new_space(*dom)), SpeckerGroup(new_space(*cod))
    assert len(enumerate_lhoms(S, T)) == count
    tables = {mv_hom_table(gamma_mor(h)) for h in enumerate_lhoms(S, T)}
    assert len(tables) == count
    assert set(enumerate_mv_homs(gamma_obj(S), gamma_obj(T))) == tables


@given(multispaces(max_points=3, max_mult=3))
def test_gamma_laws(X):
    A = gamma_obj(S_obj(X))
    assert verify_mv_axioms(A)['passed']
    assert fiber_cardinality(fiber_decomposition(A)) == cardinality(A) == len(elements(A))


@given(morphisms(max_points=2, max_mult=3))
def test_gamma_of_a_dual_morphism_is_an_mv_hom(gamma):
    assert verify_mv_hom(gamma_mor(S_mor(gamma))) == []


@given(multispaces(max_points=2, max_mult=3), multispaces(max_points=2, max_mult=3))
def test_gamma_preserves_products(X, Y):
    assert verify_product_preservation(S_obj(X), S_obj(Y)) == []
