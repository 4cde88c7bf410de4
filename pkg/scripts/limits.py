#!/usr/bin/env python3
"""
Límites finitos y coproductos en Bms, verificación exhaustiva de la
propiedad universal, y las construcciones duales en uSℓg
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from duality import S_mor, S_obj, enumerate_lhoms
from errors import NoColimitError, SchemaError
from mspace import (
    BmsMorphism,
    MultiSpace,
    compose,
    enumerate_homs,
    hom_images,
    lcm_checked,
    new_morphism,
    new_space,
)
from sgroup import (
    LHom,
    SpeckerGroup,
    apply_lhom,
    compose_lhom,
    identity_lhom,
    inverse_lhom,
    validate_lhom,
)

LEFT_PREFIX = 'L:'
RIGHT_PREFIX = 'R:'
TUPLE_ESCAPES = str.maketrans({'\\': '\\\\', ',': '\\,', '(': '\\(', ')': '\\)'})


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    morphism: BmsMorphism


@dataclass(frozen=True)
class Diagram:
    objects: tuple[MultiSpace, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        for arrow in self.arrows:
            if not (0 <= arrow.source < len(self.objects) and 0 <= arrow.target < len(self.objects)):
                raise SchemaError(f"arrow index out of range: {arrow.source} -> {arrow.target}")
            if arrow.morphism.dom != self.objects[arrow.source] or arrow.morphism.cod != self.objects[arrow.target]:
                raise SchemaError(f"arrow {arrow.source} -> {arrow.target} does not match the diagram objects")

    def to_dict(self) -> dict:
        return {
            'objects': [obj.to_dict() for obj in self.objects],
            'arrows': [
                {'source': a.source, 'target': a.target, 'map': a.morphism.mapping}
                for a in self.arrows
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Diagram:
        try:
            objects = tuple(MultiSpace.from_dict(obj) for obj in data['objects'])
            arrows = []
            for entry in data.get('arrows', []):
                source, target = entry['source'], entry['target']
                if not (0 <= source < len(objects) and 0 <= target < len(objects)):
                    raise SchemaError(f"arrow index out of range: {source} -> {target}")
                arrows.append(Arrow(source, target, new_morphism(objects[source], objects[target], entry['map'])))
        except (KeyError, TypeError) as e:
            raise SchemaError(f"malformed diagram: {e}") from None
        return cls(objects, tuple(arrows))


@dataclass(frozen=True)
class Cone:
    """Vértice con patas hacia cada objeto (cono) o desde cada objeto (cocono)"""
    apex: MultiSpace
    legs: tuple[BmsMorphism, ...]

    def to_dict(self) -> dict:
        return {
            'apex': self.apex.to_dict(),
            'legs': [{'index': i, 'map': leg.mapping} for i, leg in enumerate(self.legs)],
        }


def _tuple_label(labels: Sequence[str]) -> str:
    """(x,y,...) con `\\`, `,` y paréntesis escapados dentro de cada componente"""
    return '(' + ','.join(label.translate(TUPLE_ESCAPES) for label in labels) + ')'


def _apex_space(labels: Sequence[str], mults: Sequence[int]) -> MultiSpace:
    if len(set(labels)) != len(labels):
        raise SchemaError('apex labels collide; tuple labels must be pairwise distinct')
    return MultiSpace(tuple(labels), tuple(mults))


def cone_commutes(legs: Sequence[BmsMorphism], diagram: Diagram) -> bool:
    return all(compose(legs[a.source], a.morphism) == legs[a.target] for a in diagram.arrows)


def cocone_commutes(legs: Sequence[BmsMorphism], diagram: Diagram) -> bool:
    return all(compose(a.morphism, legs[a.target]) == legs[a.source] for a in diagram.arrows)


def limit(diagram: Diagram) -> Cone:
    """Tuplas compatibles, proyecciones, multiplicidad LCM"""
    objects = diagram.objects
    points = []
    for combo in itertools.product(*(range(len(obj)) for obj in objects)):
        labels = [obj.labels[i] for obj, i in zip(objects, combo)]
        if all(a.morphism.gamma(labels[a.source]) == labels[a.target] for a in diagram.arrows):
            points.append(labels)
    apex = _apex_space(
        [_tuple_label(labels) for labels in points],
        [lcm_checked(obj.mult(label) for obj, label in zip(objects, labels)) for labels in points],
    )
    legs = tuple(
        BmsMorphism(apex, obj, tuple(labels[i] for labels in points))
        for i, obj in enumerate(objects)
    )
    return Cone(apex, legs)


def terminal() -> Cone:
    return limit(Diagram(()))


def product(X: MultiSpace, Y: MultiSpace) -> Cone:
    return limit(Diagram((X, Y)))


def equalizer(f: BmsMorphism, g: BmsMorphism) -> Cone:
    """Subespacio {x : f(x) = g(x)} con la multiplicidad heredada"""
    if f.dom != g.dom or f.cod != g.cod:
        raise SchemaError('equalizer needs parallel morphisms')
    X = f.dom
    kept = [(label, u) for label, u in X.items() if f.gamma(label) == g.gamma(label)]
    apex = MultiSpace(tuple(label for label, _ in kept), tuple(u for _, u in kept))
    inclusion = BmsMorphism(apex, X, apex.labels)
    return Cone(apex, (inclusion, compose(inclusion, f)))


def equalizer_diagram(f: BmsMorphism, g: BmsMorphism) -> Diagram:
    return Diagram((f.dom, f.cod), (Arrow(0, 1, f), Arrow(0, 1, g)))


def pullback(f: BmsMorphism, g: BmsMorphism) -> Cone:
    """Límite del diagrama X -f-> Z <-g- Y; patas a X, Y y Z"""
    if f.cod != g.cod:
        raise SchemaError('pullback needs morphisms with a common codomain')
    return limit(pullback_diagram(f, g))


def pullback_diagram(f: BmsMorphism, g: BmsMorphism) -> Diagram:
    return Diagram((f.dom, g.dom, f.cod), (Arrow(0, 2, f), Arrow(1, 2, g)))


def coproduct(X: MultiSpace, Y: MultiSpace) -> Cone:
    """Unión disjunta con prefijos L:/R:; las inyecciones preservan multiplicidad"""
    apex = MultiSpace(
        tuple(LEFT_PREFIX + label for label in X.labels) + tuple(RIGHT_PREFIX + label for label in Y.labels),
        X.mults + Y.mults,
    )
    left = BmsMorphism(X, apex, tuple(LEFT_PREFIX + label for label in X.labels))
    right = BmsMorphism(Y, apex, tuple(RIGHT_PREFIX + label for label in Y.labels))
    return Cone(apex, (left, right))


def initial() -> MultiSpace:
    return MultiSpace((), ())


def coequalizer(f: BmsMorphism, g: BmsMorphism):
    raise NoColimitError(
        'Bms lacks some coequalizers; see `omega demo --which pushout` for the obstruction'
    )


def pushout(f: BmsMorphism, g: BmsMorphism):
    raise NoColimitError(
        'Bms lacks some pushouts; see `omega demo --which pushout` for the obstruction'
    )


def _images_after(images: Sequence[str], through: MultiSpace, then: Sequence[str]) -> tuple[str, ...]:
    """Imágenes de la composición: primero `images` (con valores en `through`), luego `then`"""
    return tuple(then[through.index(label)] for label in images)


def _enumerate_cones(test: MultiSpace, diagram: Diagram):
    families = [hom_images(test, obj) for obj in diagram.objects]
    for legs in itertools.product(*families):
        if all(_images_after(legs[a.source], a.morphism.dom, a.morphism.images) == legs[a.target]
               for a in diagram.arrows):
            yield legs


def _enumerate_cocones(test: MultiSpace, diagram: Diagram):
    families = [hom_images(obj, test) for obj in diagram.objects]
    for legs in itertools.product(*families):
        if all(_images_after(a.morphism.images, a.morphism.cod, legs[a.target]) == legs[a.source]
               for a in diagram.arrows):
            yield legs


def verify_universal(candidate: Cone, diagram: Diagram, test_apexes: Sequence[MultiSpace]) -> dict:
    """Existencia y unicidad del morfismo mediador para todo cono de prueba"""
    violations = []
    if len(candidate.legs) != len(diagram.objects) or not cone_commutes(candidate.legs, diagram):
        violations.append({'kind': 'candidate', 'detail': 'candidate legs do not form a cone'})
        return {'cones_checked': 0, 'violations': violations}
    checked = 0
    for test in test_apexes:
        factorizations = Counter(
            tuple(_images_after(images, candidate.apex, leg.images) for leg in candidate.legs)
            for images in hom_images(test, candidate.apex)
        )
        for legs in _enumerate_cones(test, diagram):
            checked += 1
            count = factorizations[legs]
            if count != 1:
                violations.append({
                    'kind': 'existence' if count == 0 else 'uniqueness',
                    'test_apex': test.to_dict(),
                    'cone': [dict(zip(test.labels, leg)) for leg in legs],
                    'mediating': count,
                })
    return {'cones_checked': checked, 'violations': violations}


def verify_couniversal(candidate: Cone, diagram: Diagram, test_targets: Sequence[MultiSpace]) -> dict:
    """Versión dual para coconos: un único morfismo desde el vértice"""
    violations = []
    if len(candidate.legs) != len(diagram.objects) or not cocone_commutes(candidate.legs, diagram):
        violations.append({'kind': 'candidate', 'detail': 'candidate legs do not form a cocone'})
        return {'cocones_checked': 0, 'violations': violations}
    checked = 0
    for test in test_targets:
        factorizations = Counter(
            tuple(_images_after(leg.images, candidate.apex, images) for leg in candidate.legs)
            for images in hom_images(candidate.apex, test)
        )
        for legs in _enumerate_cocones(test, diagram):
            checked += 1
            count = factorizations[legs]
            if count != 1:
                violations.append({
                    'kind': 'existence' if count == 0 else 'uniqueness',
                    'test_target': test.to_dict(),
                    'cocone': [dict(zip(obj.labels, leg)) for obj, leg in zip(diagram.objects, legs)],
                    'mediating': count,
                })
    return {'cocones_checked': checked, 'violations': violations}


def agrees_with_limit(cone: Cone, diagram: Diagram) -> bool:
    """El cono y el límite general son isomorfos compatiblemente con las patas"""
    reference = limit(diagram)
    if len(cone.apex) != len(reference.apex):
        return False
    for m in enumerate_homs(cone.apex, reference.apex):
        if all(compose(m, leg) == own for leg, own in zip(reference.legs, cone.legs)):
            return all(z == 1 for z in m.zeta) and len(set(m.images)) == len(m.images)
    return False


# Lado algebraico: productos y coproductos de grupos de Specker

@dataclass(frozen=True)
class GroupCone:
    apex: SpeckerGroup
    maps: tuple[LHom, ...]


def uslg_product(S: SpeckerGroup, T: SpeckerGroup) -> GroupCone:
    """(S × T, (u, u')) con las proyecciones por restricción a cada factor"""
    labels = (tuple(LEFT_PREFIX + label for label in S.base.labels)
              + tuple(RIGHT_PREFIX + label for label in T.base.labels))
    apex = SpeckerGroup(new_space(labels, S.unit.values + T.unit.values))
    maps = []
    for offset, factor in ((0, S), (len(S.base), T)):
        rows = [[1 if col == offset + i else 0 for col in range(len(labels))] for i in range(len(factor.base))]
        maps.append(validate_lhom(rows, apex, factor))
    return GroupCone(apex, tuple(maps))


def uslg_coproduct(S: SpeckerGroup, T: SpeckerGroup) -> GroupCone:
    """Dual del producto LCM; inyecciones S(proyecciones)"""
    cone = product(S.base, T.base)
    return GroupCone(S_obj(cone.apex), tuple(S_mor(leg) for leg in cone.legs))


def _matching_permutations(S: SpeckerGroup, T: SpeckerGroup):
    """Biyecciones T -> S que preservan la multiplicidad, por retroceso"""
    u_s, u_t = S.base.mults, T.base.mults
    chosen: list[int] = []
    used: set[int] = set()

    def extend(row: int):
        if row == len(u_t):
            yield tuple(chosen)
            return
        for col, u in enumerate(u_s):
            if col not in used and u == u_t[row]:
                chosen.append(col)
                used.add(col)
                yield from extend(row + 1)
                used.discard(col)
                chosen.pop()

    yield from extend(0)


def find_group_isomorphism(S: SpeckerGroup, T: SpeckerGroup) -> LHom | None:
    """Buscar un ℓ-isomorfismo unital explícito S -> T

    Solo las matrices de permutación con ζ ≡ 1 pueden ser invertibles.
    """
    if sorted(S.base.mults) != sorted(T.base.mults):
        return None
    for cols in _matching_permutations(S, T):
        rows = [[1 if c == col else 0 for c in range(len(S.base))] for col in cols]
        h = validate_lhom(rows, S, T)
        back = inverse_lhom(h)
        if (compose_lhom(h, back) == identity_lhom(S)
                and compose_lhom(back, h) == identity_lhom(T)):
            return h
    return None


def _group_violation(test: SpeckerGroup, maps: Sequence[LHom], count: int) -> dict:
    return {
        'kind': 'existence' if count == 0 else 'uniqueness',
        'test_group': test.to_dict(),
        'maps': [h.matrix.tolist() for h in maps],
        'mediating': count,
    }


def verify_group_product(cone: GroupCone, factors: Sequence[SpeckerGroup],
                         test_groups: Sequence[SpeckerGroup]) -> dict:
    """Todo par R -> S, R -> T factoriza de forma única por el producto"""
    violations = []
    if [h.cod for h in cone.maps] != list(factors) or any(h.dom != cone.apex for h in cone.maps):
        return {'cones_checked': 0, 'violations': [{'kind': 'candidate', 'detail': 'projections do not match'}]}
    checked = 0
    for R in test_groups:
        factorizations = Counter(
            tuple(compose_lhom(m, p) for p in cone.maps) for m in enumerate_lhoms(R, cone.apex)
        )
        for maps in itertools.product(*(enumerate_lhoms(R, F) for F in factors)):
            checked += 1
            count = factorizations[maps]
            if count != 1:
                violations.append(_group_violation(R, maps, count))
    return {'cones_checked': checked, 'violations': violations}


def verify_group_coproduct(cocone: GroupCone, summands: Sequence[SpeckerGroup],
                           test_groups: Sequence[SpeckerGroup]) -> dict:
    """Todo par S -> R, T -> R factoriza de forma única por el coproducto"""
    violations = []
    if [h.dom for h in cocone.maps] != list(summands) or any(h.cod != cocone.apex for h in cocone.maps):
        return {'cocones_checked': 0, 'violations': [{'kind': 'candidate', 'detail': 'injections do not match'}]}
    checked = 0
    for R in test_groups:
        factorizations = Counter(
            tuple(compose_lhom(i, m) for i in cocone.maps) for m in enumerate_lhoms(cocone.apex, R)
        )
        for maps in itertools.product(*(enumerate_lhoms(F, R) for F in summands)):
            checked += 1
            count = factorizations[maps]
            if count != 1:
                violations.append(_group_violation(R, maps, count))
    return {'cocones_checked': checked, 'violations': violations}


def verify_duality_exchange(X: MultiSpace, Y: MultiSpace,
                            test_groups: Sequence[SpeckerGroup] = ()) -> list:
    """S(X ⊔ Y) ≅ S(X) × S(Y) y S(X × Y) ≅ S(X) ⊔ S(Y), con testigos explícitos

    Con test_groups se verifica además la propiedad universal de ambos
    lados contra todos los ℓ-homs unitales desde/hacia esos grupos.
    """
    failures = []
    SX, SY = S_obj(X), S_obj(Y)
    prod = uslg_product(SX, SY)
    if find_group_isomorphism(S_obj(coproduct(X, Y).apex), prod.apex) is None:
        failures.append(f"S(coproduct) is not isomorphic to the product for {X.labels}, {Y.labels}")
    # las proyecciones del producto son las restricciones a cada sumando
    for label in prod.apex.labels:
        f = prod.apex.indicator([label])
        left, right = (apply_lhom(h, f) for h in prod.maps)
        if left.values + right.values != f.values:
            failures.append(f"projections are not restrictions at {label}")
            break
    coprod = uslg_coproduct(SX, SY)
    if find_group_isomorphism(S_obj(product(X, Y).apex), coprod.apex) is None:
        failures.append(f"S(product) is not isomorphic to the coproduct for {X.labels}, {Y.labels}")
    for h, source in zip(coprod.maps, (SX, SY)):
        if h.dom != source or apply_lhom(h, source.unit) != coprod.apex.unit:
            failures.append('coproduct injection is not unital')
    if test_groups:
        failures.extend(verify_group_product(prod, (SX, SY), test_groups)['violations'])
        failures.extend(verify_group_coproduct(coprod, (SX, SY), test_groups)['violations'])
    return failures


def verify_lcm_law(cone: Cone) -> list[str]:
    """v(x) = LCM de las multiplicidades de sus componentes"""
    failures = []
    for label, v in cone.apex.items():
        components = [leg.cod.mult(leg.gamma(label)) for leg in cone.legs]
        if v != lcm_checked(components) or any(v % c for c in components):
            failures.append(f"LCM law fails at {label}: {v} vs {components}")
    return failures
