#!/usr/bin/env python3
"""
ℓ-grupos de Specker unitales en forma canónica (C_X, u)
Elementos como vectores enteros indexados por los puntos de X,
ideales por conjuntos de ceros, y ℓ-homomorfismos unitales como matrices
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from errors import (
    GroupMismatchError,
    LHomShapeError,
    MathDomainError,
    MultiplicityOverflowError,
    NotSingularError,
    SchemaError,
)
from mspace import MAX_INT, BmsMorphism, MultiSpace


def _checked(values: Iterable[int]) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    for v in values:
        if v > MAX_INT or v < -MAX_INT - 1:
            raise MultiplicityOverflowError(f"integer overflow: {v} exceeds 64-bit range")
    return values


@dataclass(frozen=True)
class SpeckerGroup:
    base: MultiSpace

    @property
    def labels(self) -> tuple[str, ...]:
        return self.base.labels

    @property
    def unit(self) -> GroupElement:
        return GroupElement(self, self.base.mults)

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.base))

    def constant(self, value: int) -> GroupElement:
        return GroupElement(self, _checked([value] * len(self.base)))

    def indicator(self, points: Iterable[str]) -> GroupElement:
        points = set(points)
        for label in points:
            self.base.index(label)
        return GroupElement(self, tuple(int(label in points) for label in self.labels))

    def element(self, values: Sequence[int]) -> GroupElement:
        if len(values) != len(self.base):
            raise SchemaError(f"element has {len(values)} values, group has {len(self.base)} points")
        return GroupElement(self, _checked(values))

    def to_dict(self) -> dict:
        return {'space': self.base.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> SpeckerGroup:
        try:
            return cls(MultiSpace.from_dict(data['space']))
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed group: {e}") from None


@dataclass(frozen=True)
class GroupElement:
    group: SpeckerGroup
    values: tuple[int, ...]

    def __getitem__(self, label: str) -> int:
        return self.values[self.group.base.index(label)]

    def to_dict(self) -> dict:
        return {'group': self.group.to_dict(), 'values': list(self.values)}

    @classmethod
    def from_dict(cls, data: Mapping) -> GroupElement:
        try:
            group = SpeckerGroup.from_dict(data['group'])
            values = data['values']
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed element: {e}") from None
        return group.element(values)


def _same_group(a: GroupElement, b: GroupElement) -> SpeckerGroup:
    if a.group != b.group:
        raise GroupMismatchError("elements belong to different groups")
    return a.group


# Operaciones de grupo y de retículo, punto a punto

def add(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(_same_group(a, b), _checked(x + y for x, y in zip(a.values, b.values)))


def sub(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(_same_group(a, b), _checked(x - y for x, y in zip(a.values, b.values)))


def neg(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, _checked(-x for x in a.values))


def meet(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(_same_group(a, b), tuple(min(x, y) for x, y in zip(a.values, b.values)))


def join(a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(_same_group(a, b), tuple(max(x, y) for x, y in zip(a.values, b.values)))


def absolute(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, _checked(abs(x) for x in a.values))


def scalar_mul(n: int, a: GroupElement) -> GroupElement:
    return GroupElement(a.group, _checked(n * x for x in a.values))


def elem_leq(a: GroupElement, b: GroupElement) -> bool:
    _same_group(a, b)
    return all(x <= y for x, y in zip(a.values, b.values))


# Elementos singulares

def is_singular(f: GroupElement) -> bool:
    return all(x in (0, 1) for x in f.values)


def is_singular_by_definition(s: GroupElement) -> bool:
    """s >= 0 y a ∧ (s - a) = 0 para todo 0 <= a <= s"""
    zero = s.group.zero()
    if not elem_leq(zero, s):
        return False
    for values in itertools.product(*(range(x + 1) for x in s.values)):
        a = GroupElement(s.group, values)
        if meet(a, sub(s, a)) != zero:
            return False
    return True


def greatest_singular(S: SpeckerGroup) -> GroupElement:
    return S.constant(1)


def singular_elements(S: SpeckerGroup) -> list[GroupElement]:
    return [GroupElement(S, values) for values in itertools.product((0, 1), repeat=len(S.base))]


def supp(s: GroupElement) -> frozenset[str]:
    if not is_singular(s):
        raise NotSingularError(f"element {list(s.values)} is not singular")
    return frozenset(label for label, x in zip(s.group.labels, s.values) if x == 1)


# Ideales maximales y la función g♮

@dataclass(frozen=True)
class MaximalIdeal:
    group: SpeckerGroup
    point: str

    def contains(self, g: GroupElement) -> bool:
        _same_group(g, self.group.zero())
        return g[self.point] == 0


def maximal_ideals(S: SpeckerGroup) -> list[MaximalIdeal]:
    """maxspec(S) en el orden canónico de la base"""
    return [MaximalIdeal(S, label) for label in S.labels]


def rho(m: MaximalIdeal, g: GroupElement) -> int:
    if m.group != g.group:
        raise GroupMismatchError("ideal and element belong to different groups")
    return g[m.point]


def rho_by_equation(m: MaximalIdeal, g: GroupElement) -> int:
    """El único j con g - j·s_S en m, buscado en [-M, M]"""
    if m.group != g.group:
        raise GroupMismatchError("ideal and element belong to different groups")
    s = greatest_singular(g.group)
    bound = max((abs(x) for x in g.values), default=0) * max(g.group.base.mults, default=1)
    solutions = [j for j in range(-bound, bound + 1) if m.contains(sub(g, scalar_mul(j, s)))]
    if len(solutions) != 1:
        raise MathDomainError(f"expected a unique solution of g - j·s in m, found {solutions}")
    return solutions[0]


def natural(g: GroupElement) -> dict[MaximalIdeal, int]:
    return {m: rho(m, g) for m in maximal_ideals(g.group)}


# Ideales como conjuntos de ceros

@dataclass(frozen=True)
class ClosedSetIdeal:
    """{g : g se anula en zeroset}; zeroset vacío es el ideal impropio"""
    group: SpeckerGroup
    zeroset: frozenset[str]

    def contains(self, g: GroupElement) -> bool:
        _same_group(g, self.group.zero())
        return all(g[label] == 0 for label in self.zeroset)


def ideal_from_zeroset(S: SpeckerGroup, zeroset: Iterable[str]) -> ClosedSetIdeal:
    zeroset = frozenset(zeroset)
    for label in zeroset:
        S.base.index(label)
    return ClosedSetIdeal(S, zeroset)


def zeroset_from_ideal(S: SpeckerGroup, generators: Sequence[GroupElement]) -> ClosedSetIdeal:
    """Conjunto de ceros común de los generadores"""
    for g in generators:
        if g.group != S:
            raise GroupMismatchError("generator belongs to a different group")
    zeroset = frozenset(
        label for i, label in enumerate(S.labels)
        if all(g.values[i] == 0 for g in generators)
    )
    return ClosedSetIdeal(S, zeroset)


def generated_ideal_contains(S: SpeckerGroup, generators: Sequence[GroupElement], g: GroupElement) -> bool:
    """g está en el ideal generado sii |g| <= n·(|g_1| + ... + |g_k|) para algún n"""
    bound = S.zero()
    for h in generators:
        bound = add(bound, absolute(h))
    n = max((abs(x) for x in g.values), default=0)
    return elem_leq(absolute(g), scalar_mul(n, bound))


def ideal_le(i: ClosedSetIdeal, j: ClosedSetIdeal) -> bool:
    """Inclusión de ideales: invierte la inclusión de conjuntos de ceros"""
    return i.group == j.group and j.zeroset <= i.zeroset


def is_maximal(ideal: ClosedSetIdeal) -> bool:
    return len(ideal.zeroset) == 1


def is_maximal_by_criterion(ideal: ClosedSetIdeal) -> bool:
    """u no está en j, y para todo a fuera de j existe n con (u - n|a|) ∨ 0 en j

    Basta recorrer los a con valores en {-1, 0, 1}: la condición solo depende
    de dónde se anula a dentro del conjunto de ceros.
    """
    S = ideal.group
    u = S.unit
    if ideal.contains(u):
        return False
    top = max(S.base.mults, default=0)
    zero = S.zero()
    for values in itertools.product((-1, 0, 1), repeat=len(S.base)):
        a = GroupElement(S, values)
        if ideal.contains(a):
            continue
        if not any(ideal.contains(join(sub(u, scalar_mul(n, absolute(a))), zero)) for n in range(top + 1)):
            return False
    return True


def hyperarch_witness(f: GroupElement, g: GroupElement) -> int:
    """Menor n con n·f ∧ g = (n+1)·f ∧ g"""
    zero = _same_group(f, g).zero()
    if not (elem_leq(zero, f) and elem_leq(zero, g)):
        raise SchemaError("hyperarchimedean witness needs nonnegative elements")
    n = 0
    while meet(scalar_mul(n, f), g) != meet(scalar_mul(n + 1, f), g):
        n += 1
    return n


# ℓ-homomorfismos unitales en forma matricial

class LHom:
    """ψ: C_V -> C_W como matriz no negativa; filas W, columnas V"""

    def __init__(self, dom: SpeckerGroup, cod: SpeckerGroup, matrix: np.ndarray):
        self.dom = dom
        self.cod = cod
        self.matrix = matrix
        self.matrix.flags.writeable = False

    def __eq__(self, other):
        if not isinstance(other, LHom):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(map(tuple, self.matrix.tolist()))))

    def __repr__(self):
        return f"LHom({self.matrix.tolist()})"

    def to_dict(self) -> dict:
        return {'dom': self.dom.to_dict(), 'cod': self.cod.to_dict(), 'matrix': self.matrix.tolist()}

    @classmethod
    def from_dict(cls, data: Mapping) -> LHom:
        try:
            dom = SpeckerGroup.from_dict(data['dom'])
            cod = SpeckerGroup.from_dict(data['cod'])
            matrix = data['matrix']
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed lhom: {e}") from None
        return validate_lhom(matrix, dom, cod)


def _as_matrix(matrix, rows: int, cols: int) -> np.ndarray:
    try:
        rows_list = [list(row) for row in matrix]
    except TypeError:
        raise SchemaError("matrix must be a list of rows") from None
    if len(rows_list) != rows or any(len(row) != cols for row in rows_list):
        raise SchemaError(f"matrix shape must be {rows}x{cols}")
    for row in rows_list:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, (int, np.integer)):
                raise SchemaError(f"matrix entries must be integers, got {entry!r}")
    result = np.zeros((rows, cols), dtype=object)
    for i, row in enumerate(rows_list):
        for j, entry in enumerate(row):
            result[i, j] = int(entry)
    return result


def validate_lhom(matrix, dom: SpeckerGroup, cod: SpeckerGroup) -> LHom:
    m = _as_matrix(matrix, len(cod.base), len(dom.base))
    u_v = dom.base.mults
    for i, (w, u_w) in enumerate(cod.base.items()):
        row = m[i]
        if any(entry < 0 for entry in row):
            raise LHomShapeError(f"negative entry in row {w!r}")
        positive = [j for j, entry in enumerate(row) if entry > 0]
        if len(positive) != 1:
            raise LHomShapeError(f"row {w!r} has {len(positive)} positive entries, expected exactly one")
        j = positive[0]
        if row[j] * u_v[j] != u_w:
            raise LHomShapeError(
                f"divisibility mismatch in row {w!r}: {row[j]}·{u_v[j]} != {u_w}"
            )
    if len(dom.base) and list(m.dot(np.array(u_v, dtype=object))) != list(cod.base.mults):
        raise LHomShapeError("unit not preserved")
    return LHom(dom, cod, m)


def apply_lhom(h: LHom, f: GroupElement) -> GroupElement:
    if f.group != h.dom:
        raise GroupMismatchError("element is not in the domain of the homomorphism")
    if not len(h.dom.base):
        return h.cod.zero()
    return GroupElement(h.cod, _checked(h.matrix.dot(np.array(f.values, dtype=object))))


def decode_lhom(h: LHom) -> BmsMorphism:
    """(γ, ζ) de la forma de filas: γ: W -> V, ζ(w) = entrada positiva de la fila w"""
    images = tuple(
        h.dom.labels[next(j for j, entry in enumerate(row) if entry > 0)]
        for row in h.matrix
    )
    return BmsMorphism(h.cod.base, h.dom.base, images)


def identity_lhom(S: SpeckerGroup) -> LHom:
    n = len(S.base)
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return LHom(S, S, m)


def compose_lhom(first: LHom, second: LHom) -> LHom:
    """Primero `first`, luego `second`"""
    if first.cod != second.dom:
        raise GroupMismatchError("cannot compose: codomain of first differs from domain of second")
    rows, cols = len(second.cod.base), len(first.dom.base)
    if rows and cols and len(first.cod.base):
        m = second.matrix.dot(first.matrix)
    else:
        m = np.zeros((rows, cols), dtype=object)
    return LHom(first.dom, second.cod, m)


def lhom_is_isomorphism(h: LHom) -> bool:
    """Matriz de permutación (todas las entradas positivas iguales a 1)"""
    n = len(h.dom.base)
    if len(h.cod.base) != n:
        return False
    cols = [next(j for j, entry in enumerate(row) if entry > 0) for row in h.matrix]
    return len(set(cols)) == n and all(h.matrix[i, j] == 1 for i, j in enumerate(cols))


def inverse_lhom(h: LHom) -> LHom:
    if not lhom_is_isomorphism(h):
        raise LHomShapeError("homomorphism is not invertible")
    return LHom(h.cod, h.dom, np.array(h.matrix.T, dtype=object))


def preimage_ideal(psi: LHom, m: MaximalIdeal) -> MaximalIdeal:
    """ψ⁻¹(m) = {g : ψ(g) ∈ m}; la preimagen de un maximal es maximal"""
    if m.group != psi.cod:
        raise GroupMismatchError("ideal is not in the codomain of the homomorphism")
    row = psi.matrix[psi.cod.base.index(m.point)]
    zeroset = [v for v, entry in zip(psi.dom.labels, row) if entry != 0]
    ideal = ideal_from_zeroset(psi.dom, zeroset)
    if not is_maximal(ideal):
        raise LHomShapeError(f"preimage of {m.point!r} is not maximal")
    return MaximalIdeal(psi.dom, zeroset[0])
