#!/usr/bin/env python3
"""
Funtor Γ hacia MV-álgebras de Specker
Intervalo unitario [0, u] con x ⊕ y = (x + y) ∧ u y ¬x = u - x,
verificación exhaustiva de axiomas y descomposición en fibras C(X_i, Ł_n(i))
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from errors import GroupMismatchError, SchemaError
from limits import uslg_product
from sgroup import GroupElement, LHom, SpeckerGroup, apply_lhom

SWEEP_MAX_POINTS = 3
SWEEP_MAX_MULT = 4
# por encima de este tamaño `gamma_report` no barre los axiomas
AXIOM_SWEEP_LIMIT = 512


@dataclass(frozen=True)
class SpeckerMV:
    group: SpeckerGroup

    @property
    def unit(self) -> GroupElement:
        return self.group.unit

    def contains(self, x: GroupElement) -> bool:
        return x.group == self.group and all(0 <= v <= u for v, u in zip(x.values, self.group.base.mults))


@dataclass(frozen=True)
class FiberComponent:
    points: tuple[str, ...]
    n: int

    def to_dict(self) -> dict:
        return {'points': list(self.points), 'n': self.n}


@dataclass(frozen=True)
class MVHom:
    """Restricción de un ℓ-homomorfismo unital a los intervalos unitarios"""
    dom: SpeckerMV
    cod: SpeckerMV
    lhom: LHom

    def __call__(self, x: GroupElement) -> GroupElement:
        _check_member(self.dom, x)
        return apply_lhom(self.lhom, x)


def gamma_obj(S: SpeckerGroup) -> SpeckerMV:
    return SpeckerMV(S)


def gamma_mor(h: LHom) -> MVHom:
    return MVHom(gamma_obj(h.dom), gamma_obj(h.cod), h)


def _check_member(A: SpeckerMV, x: GroupElement):
    if x.group != A.group:
        raise GroupMismatchError('element belongs to a different algebra')
    if not A.contains(x):
        raise SchemaError(f"element {list(x.values)} is outside the unit interval")


def _algebra_of(x: GroupElement) -> SpeckerMV:
    A = SpeckerMV(x.group)
    _check_member(A, x)
    return A


def mv_plus(x: GroupElement, y: GroupElement) -> GroupElement:
    A = _algebra_of(x)
    _check_member(A, y)
    return GroupElement(A.group, tuple(
        min(a + b, u) for a, b, u in zip(x.values, y.values, A.group.base.mults)
    ))


def mv_neg(x: GroupElement) -> GroupElement:
    A = _algebra_of(x)
    return GroupElement(A.group, tuple(u - a for a, u in zip(x.values, A.group.base.mults)))


def mv_zero(A: SpeckerMV) -> GroupElement:
    return A.group.zero()


def cardinality(A: SpeckerMV) -> int:
    return math.prod(u + 1 for u in A.group.base.mults)


def elements(A: SpeckerMV) -> np.ndarray:
    """Todos los f con 0 <= f <= u, en orden lexicográfico, como filas"""
    mults = A.group.base.mults
    rows = list(itertools.product(*(range(u + 1) for u in mults)))
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(mults))


def _plus(a: np.ndarray, b: np.ndarray, u: np.ndarray) -> np.ndarray:
    return np.minimum(a + b, u)


def verify_mv_axioms(A: SpeckerMV, max_violations: int = 10) -> dict:
    """Barrido exhaustivo de las ecuaciones de MV-álgebra sobre todas las tuplas"""
    E = elements(A)
    u = np.array(A.group.base.mults, dtype=np.int64)
    zero = np.zeros_like(u)
    n = len(E)
    violations = []
    failed = set()

    def record(name, instance):
        failed.add(name)
        if len(violations) < max_violations:
            violations.append({'axiom': name, 'instance': instance})

    X, Y = E[:, None, :], E[None, :, :]
    YZ = _plus(X, Y, u)
    for i in range(n):
        x = E[i]
        lhs = _plus(x, YZ, u)
        rhs = _plus(_plus(x, E, u)[:, None, :], Y, u)
        bad = np.argwhere(~np.all(lhs == rhs, axis=-1))
        if len(bad):
            j, k = bad[0]
            record('associativity', [x.tolist(), E[j].tolist(), E[k].tolist()])

    bad = np.argwhere(~np.all(_plus(E, zero, u) == E, axis=-1))
    if len(bad):
        record('zero_unit', [E[bad[0][0]].tolist()])
    bad = np.argwhere(~np.all(_plus(E, u - zero, u) == u, axis=-1))
    if len(bad):
        record('absorption', [E[bad[0][0]].tolist()])
    bad = np.argwhere(~np.all(u - (u - E) == E, axis=-1))
    if len(bad):
        record('involution', [E[bad[0][0]].tolist()])

    # x ⊕ ¬(x ⊕ ¬y) = y ⊕ ¬(y ⊕ ¬x)
    lhs = _plus(X, u - _plus(X, u - Y, u), u)
    rhs = _plus(Y, u - _plus(Y, u - X, u), u)
    bad = np.argwhere(~np.all(lhs == rhs, axis=-1))
    if len(bad):
        i, j = bad[0]
        record('lukasiewicz', [E[i].tolist(), E[j].tolist()])
    bad = np.argwhere(~np.all(_plus(X, Y, u) == _plus(Y, X, u), axis=-1))
    if len(bad):
        i, j = bad[0]
        record('commutativity', [E[i].tolist(), E[j].tolist()])

    names = ['associativity', 'zero_unit', 'absorption', 'involution', 'lukasiewicz', 'commutativity']
    return {
        'elements': n,
        'axioms': {name: 'fail' if name in failed else 'pass' for name in names},
        'passed': not failed,
        'violations': violations,
    }


def verify_boolean(A: SpeckerMV) -> bool:
    """Con unidad singular, x ⊕ x = x para todo x"""
    E = elements(A)
    u = np.array(A.group.base.mults, dtype=np.int64)
    return bool(np.all(_plus(E, E, u) == E))


def fiber_decomposition(A: SpeckerMV) -> list[FiberComponent]:
    """Fibras de la unidad, en orden de primera aparición en la base"""
    fibers: dict[int, list[str]] = {}
    for label, u in A.group.base.items():
        fibers.setdefault(u, []).append(label)
    return [FiberComponent(tuple(points), n) for n, points in fibers.items()]


def fiber_cardinality(components: list[FiberComponent]) -> int:
    return math.prod((c.n + 1) ** len(c.points) for c in components)


def verify_mv_hom(h: MVHom) -> list[str]:
    """h preserva ⊕, ¬ y 0 en todos los elementos"""
    failures = []
    E = elements(h.dom)
    u_dom = np.array(h.dom.group.base.mults, dtype=np.int64)
    u_cod = np.array(h.cod.group.base.mults, dtype=np.int64)
    if E.shape[1] == 0:
        M = np.zeros((len(u_cod), 0), dtype=np.int64)
    else:
        M = np.array(h.lhom.matrix.tolist(), dtype=np.int64).reshape(len(u_cod), len(u_dom))

    def image(values):
        return values @ M.T

    img = image(E)
    if np.any(img < 0) or np.any(img > u_cod):
        failures.append('image leaves the unit interval')
    if np.any(image(np.zeros_like(u_dom)) != 0):
        failures.append('zero not preserved')
    if not np.all(image(u_dom - E) == u_cod - img):
        failures.append('negation not preserved')
    sums = _plus(E[:, None, :], E[None, :, :], u_dom)
    if not np.all(image(sums) == _plus(img[:, None, :], img[None, :, :], u_cod)):
        failures.append('⊕ not preserved')
    return failures


def verify_product_preservation(S: SpeckerGroup, T: SpeckerGroup) -> list[str]:
    """Γ(S × T) coincide elemento a elemento con Γ(S) × Γ(T)"""
    failures = []
    cone = uslg_product(S, T)
    P = gamma_obj(cone.apex)
    pairs = set()
    for row in elements(P).tolist():
        f = cone.apex.element(row)
        left, right = (apply_lhom(h, f) for h in cone.maps)
        pairs.add((left.values, right.values))
    expected = {
        (tuple(a), tuple(b))
        for a in elements(gamma_obj(S)).tolist()
        for b in elements(gamma_obj(T)).tolist()
    }
    if pairs != expected or len(pairs) != cardinality(P):
        failures.append('Γ(S × T) is not the cartesian product of Γ(S) and Γ(T)')
    for h in cone.maps:
        failures.extend(verify_mv_hom(gamma_mor(h)))
    return failures


def _operation_tables(A: SpeckerMV):
    E = elements(A)
    u = np.array(A.group.base.mults, dtype=np.int64)
    index = {tuple(row): i for i, row in enumerate(E.tolist())}
    sums = _plus(E[:, None, :], E[None, :, :], u)
    plus = np.array([[index[tuple(v)] for v in row] for row in sums.tolist()], dtype=np.int64).reshape(len(E), len(E))
    neg = np.array([index[tuple(v)] for v in (u - E).tolist()], dtype=np.int64)
    return E, plus, neg, index


def mv_hom_table(h: MVHom) -> tuple[int, ...]:
    """h como tabla de índices de elementos, comparable con enumerate_mv_homs"""
    index_b = {tuple(row): i for i, row in enumerate(elements(h.cod).tolist())}
    return tuple(index_b[h(h.dom.group.element(row)).values] for row in elements(h.dom).tolist())


def enumerate_mv_homs(A: SpeckerMV, B: SpeckerMV) -> list[tuple[int, ...]]:
    """Todas las funciones A -> B que preservan ⊕, ¬ y 0 (índices de elementos)"""
    EA, plus_a, neg_a, index_a = _operation_tables(A)
    EB, plus_b, neg_b, index_b = _operation_tables(B)
    zero_a = index_a[(0,) * EA.shape[1]]
    top_a = index_a[tuple(A.group.base.mults)]
    zero_b = index_b[(0,) * EB.shape[1]]
    top_b = index_b[tuple(B.group.base.mults)]
    free = [i for i in range(len(EA)) if i not in (zero_a, top_a)]
    found = []
    for choice in itertools.product(range(len(EB)), repeat=len(free)):
        f = np.empty(len(EA), dtype=np.int64)
        f[zero_a], f[top_a] = zero_b, top_b
        f[free] = choice
        if np.all(f[neg_a] == neg_b[f]) and np.all(f[plus_a] == plus_b[f[:, None], f[None, :]]):
            found.append(tuple(int(v) for v in f))
    return found


def gamma_report(S: SpeckerGroup) -> dict:
    A = gamma_obj(S)
    fibers = fiber_decomposition(A)
    report = {
        'cardinality': cardinality(A),
        'fibers': [c.to_dict() for c in fibers],
    }
    if report['cardinality'] <= AXIOM_SWEEP_LIMIT:
        report['axioms'] = 'pass' if verify_mv_axioms(A)['passed'] else 'fail'
    else:
        report['axioms'] = 'skipped'
    return report
