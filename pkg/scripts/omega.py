#!/usr/bin/env python3
"""
Modelo simbólico de C_{αZ≥0}: sucesiones enteras eventualmente constantes
Pertenencia a subgrupos vía forma normal de Hermite y verificación mecánica
de las obstrucciones (potencia numerable, pushout, subgrupo no Specker)
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from errors import MultiplicityOverflowError, SchemaError
from mspace import MAX_INT, lcm_checked
from normalforms import integer_matrix, solve_integer_system

DEFAULT_OMEGA_BOUND = 16
DEFAULT_SEED = 0
SINGULAR_PREFIX_BOUND = 6
POWER_SWEEP = 10


@dataclass(frozen=True)
class OmegaPoint:
    """Un natural o el punto de acumulación ∞ (index None)"""
    index: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.index is None

    def __str__(self):
        return '∞' if self.index is None else str(self.index)


INFINITY = OmegaPoint(None)


def _check_int(value: int) -> int:
    if value > MAX_INT or value < -MAX_INT - 1:
        raise MultiplicityOverflowError(f"integer overflow: {value} exceeds 64-bit range")
    return value


@dataclass(frozen=True)
class ECSeq:
    """Sucesión con valores prefix[n] para n < len(prefix) y tail en el resto y en ∞"""
    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self):
        prefix = [_check_int(int(v)) for v in self.prefix]
        tail = _check_int(int(self.tail))
        while prefix and prefix[-1] == tail:
            prefix.pop()
        object.__setattr__(self, 'prefix', tuple(prefix))
        object.__setattr__(self, 'tail', tail)

    @classmethod
    def constant(cls, value: int) -> ECSeq:
        return cls((), value)

    @classmethod
    def indicator(cls, points, cofinite: bool = False) -> ECSeq:
        """Indicadora de un conjunto finito (o de su complemento si cofinite)"""
        points = set(points)
        length = max(points, default=-1) + 1
        inside, outside = (0, 1) if cofinite else (1, 0)
        return cls(tuple(inside if n in points else outside for n in range(length)), outside)

    def value(self, point: OmegaPoint | int) -> int:
        if isinstance(point, int):
            point = OmegaPoint(point)
        if point.is_infinity or point.index >= len(self.prefix):
            return self.tail
        return self.prefix[point.index]

    def values(self, length: int) -> list[int]:
        return [self.value(n) for n in range(length)]

    def max_value(self) -> int:
        return max(self.prefix + (self.tail,))

    def to_dict(self) -> dict:
        return {'prefix': list(self.prefix), 'tail': self.tail}


def ec_value(a: ECSeq, p: OmegaPoint | int) -> int:
    return a.value(p)


def _pointwise(op, *seqs: ECSeq) -> ECSeq:
    length = max(len(s.prefix) for s in seqs)
    prefix = [op(*(s.value(n) for s in seqs)) for n in range(length)]
    return ECSeq(tuple(prefix), op(*(s.tail for s in seqs)))


def ec_add(a: ECSeq, b: ECSeq) -> ECSeq:
    return _pointwise(lambda x, y: x + y, a, b)


def ec_sub(a: ECSeq, b: ECSeq) -> ECSeq:
    return _pointwise(lambda x, y: x - y, a, b)


def ec_neg(a: ECSeq) -> ECSeq:
    return _pointwise(lambda x: -x, a)


def ec_meet(a: ECSeq, b: ECSeq) -> ECSeq:
    return _pointwise(min, a, b)


def ec_join(a: ECSeq, b: ECSeq) -> ECSeq:
    return _pointwise(max, a, b)


def ec_abs(a: ECSeq) -> ECSeq:
    return _pointwise(abs, a)


def ec_scalar_mul(n: int, a: ECSeq) -> ECSeq:
    return _pointwise(lambda x: n * x, a)


def ec_leq(a: ECSeq, b: ECSeq) -> bool:
    return ec_meet(a, b) == a


def ec_is_singular(a: ECSeq) -> bool:
    return all(v in (0, 1) for v in a.prefix + (a.tail,))


def ec_hyperarch_witness(f: ECSeq, g: ECSeq) -> int:
    """Menor n con n·f ∧ g = (n+1)·f ∧ g, para f, g >= 0"""
    zero = ECSeq.constant(0)
    if not (ec_leq(zero, f) and ec_leq(zero, g)):
        raise SchemaError('hyperarchimedean witness needs nonnegative sequences')
    n = 0
    while ec_meet(ec_scalar_mul(n, f), g) != ec_meet(ec_scalar_mul(n + 1, f), g):
        n += 1
    return n


# Pertenencia a subgrupos finitamente generados

def _coordinates(seq: ECSeq, length: int) -> list[int]:
    """[valor en ∞, valor en 0, ..., valor en length-1]"""
    return [seq.tail] + seq.values(length)


def _coordinate_name(index: int) -> str:
    return 'tail' if index == 0 else str(index - 1)


def subgroup_membership(target: ECSeq, generators: list[ECSeq]) -> dict:
    """¿Es target combinación entera de los generadores?

    Cada función queda determinada por sus valores en 0..N-1 y en ∞,
    con N la mayor longitud de prefijo; el sistema se resuelve con la
    forma normal de Hermite.
    """
    length = max((len(s.prefix) for s in [target, *generators]), default=0)
    G = integer_matrix([_coordinates(g, length) for g in generators], cols=length + 1)
    coefficients, obstruction = solve_integer_system(G, _coordinates(target, length))
    if obstruction is None:
        return {'member': True, 'coefficients': coefficients}
    coordinate = _coordinate_name(obstruction.coordinate)
    if obstruction.modulus == 0:
        reason = (f"at coordinate {coordinate} every combination is 0 after elimination, "
                  f"target leaves {obstruction.residue}")
    else:
        reason = (f"at coordinate {coordinate} combinations lie in {obstruction.modulus}Z, "
                  f"target leaves residue {obstruction.residue}")
    return {
        'member': False,
        'certificate': {
            'coordinate': coordinate,
            'modulus': obstruction.modulus,
            'residue': obstruction.residue,
            'reason': reason,
        },
    }


def brute_force_membership(target: ECSeq, generators: list[ECSeq], bound: int = 5) -> list[int] | None:
    """Oráculo: busca coeficientes en [-bound, bound]"""
    length = max((len(s.prefix) for s in [target, *generators]), default=0)
    t = np.array(_coordinates(target, length), dtype=np.int64)
    if not generators:
        return [] if not t.any() else None
    G = np.array([_coordinates(g, length) for g in generators], dtype=np.int64)
    grid = np.array(list(itertools.product(range(-bound, bound + 1), repeat=len(generators))), dtype=np.int64)
    hits = np.flatnonzero(np.all(grid @ G == t, axis=1))
    if len(hits) == 0:
        return None
    return grid[hits[0]].tolist()


def _random_seq(rng: np.random.Generator, max_prefix: int = 4, low: int = -3, high: int = 3) -> ECSeq:
    length = int(rng.integers(0, max_prefix + 1))
    return ECSeq(tuple(int(v) for v in rng.integers(low, high + 1, size=length)), int(rng.integers(low, high + 1)))


def membership_sweep(seed: int = DEFAULT_SEED, instances: int = 200, bound: int = 5) -> dict:
    """HNF contra el oráculo de fuerza bruta en instancias aleatorias sembradas"""
    rng = np.random.default_rng(seed)
    failures = []
    positives = 0
    for case in range(instances):
        generators = [_random_seq(rng) for _ in range(int(rng.integers(0, 5)))]
        if generators and rng.random() < 0.5:
            target = ECSeq.constant(0)
            for g in generators:
                target = ec_add(target, ec_scalar_mul(int(rng.integers(-2, 3)), g))
        else:
            target = _random_seq(rng)
        result = subgroup_membership(target, generators)
        oracle = brute_force_membership(target, generators, bound)
        if result['member']:
            positives += 1
            combination = ECSeq.constant(0)
            for c, g in zip(result['coefficients'], generators):
                combination = ec_add(combination, ec_scalar_mul(c, g))
            if combination != target:
                failures.append({'case': case, 'problem': 'coefficients do not reproduce the target'})
        if oracle is not None and not result['member']:
            failures.append({'case': case, 'problem': 'oracle found a combination, HNF said no'})
    return {'instances': instances, 'positives': positives, 'seed': seed, 'failures': failures}


# Obstrucciones

def _h_contains(g: ECSeq) -> bool:
    """H = {g : g(∞) par}"""
    return g.tail % 2 == 0


def _singular_in_h(s: ECSeq) -> bool:
    """Definición de singular relativa a H: a ∧ (s - a) = 0 para todo 0 <= a <= s en H"""
    if not (_h_contains(s) and ec_leq(ECSeq.constant(0), s)):
        return False
    # si s tiene soporte finito, los a entre 0 y s son indicadoras de subconjuntos
    if s.tail != 0:
        return False
    support = [n for n, v in enumerate(s.prefix) if v != 0]
    for values in itertools.product(*(range(s.value(n) + 1) for n in support)):
        a = ECSeq(tuple(dict(zip(support, values)).get(n, 0) for n in range(len(s.prefix))), 0)
        if ec_meet(a, ec_sub(s, a)) != ECSeq.constant(0):
            return False
    return True


def verify_H_not_specker(seed: int = DEFAULT_SEED, samples: int = 200) -> dict:
    """El ℓ-subgrupo unital H = {g : g(∞) par} con unidad 2 no es de Specker"""
    rng = np.random.default_rng(seed)
    unit = ECSeq.constant(2)

    # (a) clausura bajo las operaciones de grupo y de retículo
    closed = _h_contains(unit)
    for _ in range(samples):
        a, b = _random_seq(rng), _random_seq(rng)
        a = ECSeq(a.prefix, a.tail - a.tail % 2)
        b = ECSeq(b.prefix, b.tail - b.tail % 2)
        results = [ec_add(a, b), ec_sub(a, b), ec_neg(a), ec_meet(a, b), ec_join(a, b), ec_abs(a)]
        if not all(_h_contains(r) for r in results):
            closed = False
            break

    # (b) los singulares de H son indicadoras de conjuntos finitos
    candidates = set()
    for length in range(SINGULAR_PREFIX_BOUND + 1):
        for bits in itertools.product((0, 1), repeat=length):
            for tail in (0, 1):
                candidates.add(ECSeq(bits, tail))
    singulars = sorted(
        (s for s in candidates if ec_is_singular(s) and _h_contains(s) and _singular_in_h(s)),
        key=lambda s: (len(s.prefix), s.prefix),
    )
    cofinite_excluded = all(not _h_contains(s) for s in candidates if s.tail == 1)
    finite_support = cofinite_excluded and all(s.tail == 0 for s in singulars)

    # (c) la constante 2 no está en el subgrupo generado por los singulares
    membership = subgroup_membership(unit, singulars)

    return {
        'closed': 'pass' if closed else 'fail',
        'singulars_finite_support': 'pass' if finite_support else 'fail',
        'singulars_checked': len(candidates),
        'singulars_in_H': len(singulars),
        'unit_generated': membership['member'],
        'certificate': membership.get('certificate'),
        'pullback_reading': {
            'diagram': '(C_{αZ≥0},2) --eval at ∞--> (Z,2) <--times 2-- (Z,1)',
            'set_candidate': '{f : f(∞) in 2Z} ≅ {(f, a) : f(∞) = 2a}',
            'is_specker': membership['member'],
        },
        'equalizer_reading': '(f, a) ↦ f(∞) and (f, a) ↦ 2a from (C_{αZ≥0},2) × (Z,1) to (Z,2) have no equalizer',
    }


def discontinuity_witness_power(sweep: int = POWER_SWEEP) -> dict:
    """Potencia numerable de ({a, b}, u) con u(a) = 1, u(b) = 2

    y_k vale a en las coordenadas < k y b en el resto; la multiplicidad LCM
    es 2 en cada y_k pero 1 en el límite coordenada a coordenada (todo a).
    """
    multiplicity = {'a': 1, 'b': 2}
    rows = []
    for k in range(sweep + 1):
        y = ECSeq(tuple([multiplicity['a']] * k), multiplicity['b'])
        v = lcm_checked(set(y.prefix) | {y.tail})
        rows.append({'k': k, 'point': y.to_dict(), 'v': v})
    limit_point = ECSeq.constant(multiplicity['a'])
    all_b = ECSeq.constant(multiplicity['b'])
    limit_v = lcm_checked({limit_point.tail})
    # continuidad: v(y_k) es eventualmente constante y debe coincidir con v del límite
    return {
        'table': rows,
        'all_v_equal_2': all(row['v'] == 2 for row in rows),
        'limit': {'point': limit_point.to_dict(), 'v': limit_v},
        'all_b': {'point': all_b.to_dict(), 'v': lcm_checked({all_b.tail})},
        'continuous': rows[-1]['v'] == limit_v,
        'forgetful_note': ('the Bms product of countably many singletons with pairwise distinct '
                           'multiplicities is empty, so the forgetful functor to Set does not '
                           'preserve limits'),
    }


def comparison_multiplicity(n: int) -> ECSeq:
    """v_n: constante 1 salvo en n, donde vale 2"""
    return ECSeq(tuple([1] * n) + (2,), 1)


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def pushout_obstruction(bound: int = DEFAULT_OMEGA_BOUND) -> dict:
    """Reconstrucción del argumento de multiplicidad forzada para el pushout de
    ({*},1) <-id- ({*},2) -(* ↦ ∞)-> (αZ≥0, 2)"""
    space_mult = ECSeq.constant(2)
    point_mult = 1
    comparisons = [comparison_multiplicity(n) for n in range(bound + 1)]

    def candidates(p: OmegaPoint) -> list[int]:
        # v(p) divide a la multiplicidad de toda pata que llega a p
        upper = space_mult.value(p)
        if p.is_infinity:
            upper = math.gcd(upper, point_mult)
        # y es múltiplo de v_n(p) para cada comparación c_n: (αZ≥0, v) -> (αZ≥0, v_n)
        lower = lcm_checked(c.value(p) for c in comparisons)
        return [d for d in _divisors(upper) if d % lower == 0]

    forced = {str(INFINITY): candidates(INFINITY)}
    for n in range(bound + 1):
        forced[str(n)] = candidates(OmegaPoint(n))
    table = pd.DataFrame(
        [{'point': point, 'candidates': values, 'v': values[0] if len(values) == 1 else None}
         for point, values in forced.items()]
    )
    determined = bool(table['candidates'].map(len).eq(1).all())
    values = dict(zip(table['point'], table['v']))
    # una ECSeq con cola 1 y valor 2 en 0..K necesita prefijo de longitud > K
    prefix_lengths = []
    for k in range(bound + 1):
        candidate = ECSeq(tuple([2] * (k + 1)), 1)
        prefix_lengths.append(len(candidate.prefix))
    growing = all(b > a for a, b in zip(prefix_lengths, prefix_lengths[1:]))
    return {
        'bound': bound,
        'forced': {point: int(v) for point, v in values.items() if v is not None},
        'uniquely_determined': determined,
        'comparison_example': {'n': 3, 'v_n': comparison_multiplicity(3).to_dict()},
        'min_prefix_length': prefix_lengths,
        'representable': not (values['∞'] == 1 and growing),
        'coequalizer_reading': ('(*,2) ⇉ (αZ≥0,2) ⊔ (*,1), one map to ∞ and one to *: '
                                'no coequalizer, by the same forced multiplicities'),
    }
