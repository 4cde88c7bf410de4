import itertools

import pytest
from hypothesis import given

from errors import MultiplicityOverflowError, SchemaError
from mspace import MAX_INT
from omega import (
    INFINITY,
    ECSeq,
    OmegaPoint,
    brute_force_membership,
    comparison_multiplicity,
    discontinuity_witness_power,
    ec_abs,
    ec_add,
    ec_hyperarch_witness,
    ec_is_singular,
    ec_join,
    ec_meet,
    ec_neg,
    ec_scalar_mul,
    ec_sub,
    ec_value,
    membership_sweep,
    pushout_obstruction,
    subgroup_membership,
    verify_H_not_specker,
)
from strategies import ecseqs


def test_canonical_form():
    assert ECSeq((1, 2, 2), 2) == ECSeq((1,), 2)
    assert ECSeq((0, 0), 0).prefix == ()
    assert ECSeq((2, 1), 2).prefix == (2, 1)


def test_values():
    a = ECSeq((5,), 2)
    assert ec_value(a, INFINITY) == 2
    assert ec_value(a, OmegaPoint(0)) == 5
    assert ec_value(a, 7) == 2
    assert str(INFINITY) == '∞'


def test_pointwise_operations():
    one = ECSeq.constant(1)
    assert ec_add(one, one) == ECSeq.constant(2)
    assert ec_meet(ECSeq.indicator([0]), ECSeq.indicator([1])) == ECSeq.constant(0)
    assert ec_join(ECSeq.indicator([0]), ECSeq.indicator([1])) == ECSeq.indicator([0, 1])
    assert ec_sub(ECSeq((3, 1), 0), ECSeq((1,), 1)) == ECSeq((2, 0), -1)
    assert ec_neg(ECSeq((1,), 0)) == ECSeq((-1,), 0)
    assert ec_abs(ECSeq((-4,), -1)) == ECSeq((4,), 1)
    assert ec_scalar_mul(3, ECSeq.indicator([1], cofinite=True)) == ECSeq((3, 0), 3)
    with pytest.raises(MultiplicityOverflowError):
        ec_add(ECSeq.constant(MAX_INT), one)


def test_singular_examples():
    assert ec_is_singular(ECSeq.constant(1))
    assert ec_is_singular(ECSeq((1, 0, 1), 0))
    assert not ec_is_singular(ECSeq.constant(2))


def test_membership_examples():
    generators = [ECSeq.indicator(points) for k in range(6) for points in itertools.combinations(range(5), k)]
    result = subgroup_membership(ECSeq.constant(2), generators)
    assert not result['member']
    assert result['certificate']['coordinate'] == 'tail'
    assert result['certificate']['modulus'] == 0
    assert result['certificate']['residue'] == 2

    zero = subgroup_membership(ECSeq.constant(0), [ECSeq((1, 2), 3), ECSeq((0,), 1)])
    assert zero['member']
    assert zero['coefficients'] == [0, 0]

    assert subgroup_membership(ECSeq((3,), 0), [ECSeq.indicator([0])])['coefficients'] == [3]


def test_membership_parity_certificate():
    result = subgroup_membership(ECSeq.constant(1), [ECSeq.constant(2)])
    assert not result['member']
    assert (result['certificate']['coordinate'], result['certificate']['modulus']) == ('tail', 2)


def test_brute_force_oracle():
    assert brute_force_membership(ECSeq.constant(4), [ECSeq.constant(2)]) == [2]
    assert brute_force_membership(ECSeq.constant(1), [ECSeq.constant(2)]) is None
    assert brute_force_membership(ECSeq.constant(0), []) == []


def test_membership_sweep_agrees_with_oracle():
    result = membership_sweep(seed=0, instances=60)
    assert result['failures'] == []
    assert result['positives'] > 0


def test_H_is_not_specker():
    report = verify_H_not_specker(seed=0)
    assert report['closed'] == 'pass'
    assert report['singulars_finite_support'] == 'pass'
    assert report['unit_generated'] is False
    assert report['singulars_in_H'] == 2 ** 6
    assert report['certificate']['coordinate'] == 'tail'
    assert report['pullback_reading']['is_specker'] is False


def test_discontinuity_witness():
    report = discontinuity_witness_power()
    assert [row['v'] for row in report['table']] == [2] * 11
    assert report['all_v_equal_2']
    assert report['limit']['v'] == 1
    assert report['all_b']['v'] == 2
    assert report['continuous'] is False
    assert 'forgetful' in report['forgetful_note']


@pytest.mark.parametrize('bound', [0, 16])
def test_pushout_obstruction(bound):
    report = pushout_obstruction(bound)
    assert report['forced'] == {'∞': 1, **{str(n): 2 for n in range(bound + 1)}}
    assert report['uniquely_determined']
    assert report['representable'] is False
    assert report['min_prefix_length'][-1] == bound + 1


def test_comparison_multiplicity():
    v3 = comparison_multiplicity(3)
    assert v3.values(6) == [1, 1, 1, 2, 1, 1]
    assert ec_value(v3, INFINITY) == 1


def test_hyperarch_rejects_negative_input():
    with pytest.raises(SchemaError):
        ec_hyperarch_witness(ECSeq.constant(-1), ECSeq.constant(1))


@given(ecseqs())
def test_operations_return_canonical_forms(a):
    for result in (ec_add(a, a), ec_neg(a), ec_abs(a), ec_meet(a, ECSeq.constant(0))):
        assert ECSeq(result.prefix, result.tail) == result
        assert not result.prefix or result.prefix[-1] != result.tail
        assert ec_value(result, INFINITY) == result.tail


@given(ecseqs(low=0, high=1), ecseqs(low=0, high=1))
def test_singulars_form_a_lattice(a, b):
    assert ec_is_singular(ec_meet(a, b))
    assert ec_is_singular(ec_join(a, b))


@given(ecseqs(low=0, high=3), ecseqs(low=0, high=3))
def test_hyperarchimedean_witness(f, g):
    n = ec_hyperarch_witness(f, g)
    assert n <= g.max_value()
    assert ec_meet(ec_scalar_mul(n, f), g) == ec_meet(ec_scalar_mul(n + 1, f), g)


def test_seeded_sweeps_are_reproducible():
    assert membership_sweep(seed=7, instances=20) == membership_sweep(seed=7, instances=20)
    assert verify_H_not_specker(seed=3, samples=40) == verify_H_not_specker(seed=3, samples=40)
