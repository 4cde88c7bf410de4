#!/usr/bin/env python3
"""
Multiespacios booleanos finitos y sus morfismos
Objetos: conjuntos finitos de puntos etiquetados con multiplicidad positiva
Morfismos: funciones que decrecen la multiplicidad en el orden de divisibilidad
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from errors import DivisibilityError, MultiplicityOverflowError, SchemaError

MAX_INT = 2**63 - 1

Multiplicity = int


def check_multiplicity(value) -> Multiplicity:
    """Validar una multiplicidad (entero positivo acotado)"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"multiplicity must be an integer, got {value!r}")
    if value < 1:
        raise SchemaError(f"multiplicity must be positive, got {value}")
    if value > MAX_INT:
        raise MultiplicityOverflowError(f"multiplicity {value} exceeds 64-bit range")
    return value


def lcm_checked(values: Iterable[int]) -> Multiplicity:
    """LCM con chequeo de desborde; el LCM vacío es 1"""
    result = 1
    for value in values:
        result = math.lcm(result, value)
        if result > MAX_INT:
            raise MultiplicityOverflowError(f"LCM overflow: {result} exceeds 64-bit range")
    return result


@dataclass(frozen=True)
class MultiSpace:
    labels: tuple[str, ...]
    mults: tuple[Multiplicity, ...]

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._positions

    def index(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise SchemaError(f"unknown label {label!r}") from None

    def mult(self, label: str) -> Multiplicity:
        return self.mults[self.index(label)]

    def items(self):
        return zip(self.labels, self.mults)

    def to_dict(self) -> dict:
        return {'points': [{'label': label, 'mult': mult} for label, mult in self.items()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> MultiSpace:
        try:
            points = data['points']
            labels = [point['label'] for point in points]
            mults = [point['mult'] for point in points]
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed multispace: {e}") from None
        return new_space(labels, mults)


def new_space(labels: Sequence[str], mults: Sequence[int]) -> MultiSpace:
    """Construir un multiespacio; el orden dado es el canónico"""
    labels = tuple(labels)
    mults = tuple(mults)
    if len(labels) != len(mults):
        raise SchemaError(f"length mismatch: {len(labels)} labels, {len(mults)} multiplicities")
    for label in labels:
        if not isinstance(label, str):
            raise SchemaError(f"labels must be strings, got {label!r}")
    seen = set()
    for label in labels:
        if label in seen:
            raise SchemaError(f"duplicate label {label!r}")
        seen.add(label)
    for mult in mults:
        check_multiplicity(mult)
    return MultiSpace(labels, mults)


@dataclass(frozen=True)
class BmsMorphism:
    """Morfismo de multiespacios; images[i] es gamma(dom.labels[i])"""
    dom: MultiSpace
    cod: MultiSpace
    images: tuple[str, ...]

    def gamma(self, label: str) -> str:
        return self.images[self.dom.index(label)]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(zip(self.dom.labels, self.images))

    @cached_property
    def zeta(self) -> tuple[Multiplicity, ...]:
        return tuple(
            u // self.cod.mult(image)
            for u, image in zip(self.dom.mults, self.images)
        )

    def zeta_at(self, label: str) -> Multiplicity:
        return self.zeta[self.dom.index(label)]

    def to_dict(self) -> dict:
        return {'dom': self.dom.to_dict(), 'cod': self.cod.to_dict(), 'map': self.mapping}

    @classmethod
    def from_dict(cls, data: Mapping) -> BmsMorphism:
        try:
            dom = MultiSpace.from_dict(data['dom'])
            cod = MultiSpace.from_dict(data['cod'])
            mapping = data['map']
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed morphism: {e}") from None
        if not isinstance(mapping, Mapping):
            raise SchemaError("morphism map must be an object")
        return new_morphism(dom, cod, mapping)


def new_morphism(dom: MultiSpace, cod: MultiSpace, gamma: Mapping[str, str]) -> BmsMorphism:
    """Validar gamma (total, con valores en cod) y la condición de divisibilidad"""
    for label in gamma:
        if not isinstance(label, str):
            raise SchemaError(f"map keys must be strings, got {label!r}")
        if label not in dom:
            raise SchemaError(f"unknown domain label {label!r}")
    images = []
    for label, u_dom in dom.items():
        if label not in gamma:
            raise SchemaError(f"map is not total: {label!r} has no image")
        image = gamma[label]
        if not isinstance(image, str):
            raise SchemaError(f"image of {label!r} must be a label, got {image!r}")
        if image not in cod:
            raise SchemaError(f"unknown codomain label {image!r}")
        u_cod = cod.mult(image)
        if u_dom % u_cod != 0:
            raise DivisibilityError(label, u_dom, u_cod)
        images.append(image)
    return BmsMorphism(dom, cod, tuple(images))


def identity(space: MultiSpace) -> BmsMorphism:
    return BmsMorphism(space, space, space.labels)


def compose(first: BmsMorphism, second: BmsMorphism) -> BmsMorphism:
    """Primero `first`, luego `second`; zeta se multiplica punto a punto"""
    if first.cod != second.dom:
        raise SchemaError("cannot compose: codomain of first differs from domain of second")
    images = tuple(second.gamma(image) for image in first.images)
    return BmsMorphism(first.dom, second.cod, images)


def is_isomorphism(m: BmsMorphism) -> bool:
    if len(m.dom) != len(m.cod) or len(set(m.images)) != len(m.images):
        return False
    return all(z == 1 for z in m.zeta)


def find_inverse(m: BmsMorphism) -> BmsMorphism | None:
    """Buscar un inverso bilateral entre los morfismos cod -> dom"""
    id_dom, id_cod = identity(m.dom), identity(m.cod)
    for candidate in enumerate_homs(m.cod, m.dom):
        if compose(m, candidate) == id_dom and compose(candidate, m) == id_cod:
            return candidate
    return None


@lru_cache(maxsize=8192)
def hom_images(dom: MultiSpace, cod: MultiSpace) -> tuple[tuple[str, ...], ...]:
    """Tuplas de imágenes de todos los morfismos dom -> cod, en orden lexicográfico"""
    choices = [
        [label for label, u_cod in cod.items() if u_dom % u_cod == 0]
        for u_dom in dom.mults
    ]
    return tuple(itertools.product(*choices))


def enumerate_homs(dom: MultiSpace, cod: MultiSpace) -> list[BmsMorphism]:
    """Todos los morfismos dom -> cod en orden lexicográfico de imágenes"""
    return [BmsMorphism(dom, cod, images) for images in hom_images(dom, cod)]


def universe_spaces(max_points: int, max_mult: int) -> list[MultiSpace]:
    """Universo de prueba: todos los espacios p1..pk con k <= max_points"""
    spaces = []
    for k in range(max_points + 1):
        labels = tuple(f"p{i + 1}" for i in range(k))
        for mults in itertools.product(range(1, max_mult + 1), repeat=k):
            spaces.append(MultiSpace(labels, mults))
    return spaces


def random_spaces(count: int, points: int, max_mult: int, seed: int = 0) -> list[MultiSpace]:
    rng = np.random.default_rng(seed)
    labels = tuple(f"p{i + 1}" for i in range(points))
    return [
        MultiSpace(labels, tuple(int(u) for u in rng.integers(1, max_mult + 1, size=points)))
        for _ in range(count)
    ]
