#!/usr/bin/env python3
"""
Funtores contravariantes S (Bms -> uSℓg) y B (uSℓg -> Bms)
Isomorfismos naturales M_X (unidad) y ♮ (counidad), ψ_dual,
identidades triangulares y verificación exhaustiva de plenitud y fidelidad
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from errors import DivisibilityError, MathDomainError
from mspace import (
    BmsMorphism,
    MultiSpace,
    compose,
    enumerate_homs,
    identity,
    is_isomorphism,
)
from sgroup import (
    LHom,
    SpeckerGroup,
    apply_lhom,
    compose_lhom,
    identity_lhom,
    inverse_lhom,
    lhom_is_isomorphism,
    maximal_ideals,
    preimage_ideal,
    singular_elements,
    supp,
    validate_lhom,
)

MAXSPEC_PREFIX = 'm_'


@dataclass(frozen=True)
class NaturalIsoWitness:
    direction: Literal['unit', 'counit']
    obj: MultiSpace | SpeckerGroup
    forward: BmsMorphism | LHom = field(compare=False)
    backward: BmsMorphism | LHom = field(compare=False)

    def is_valid(self) -> bool:
        if self.direction == 'unit':
            return (compose(self.forward, self.backward) == identity(self.forward.dom)
                    and compose(self.backward, self.forward) == identity(self.forward.cod))
        return (compose_lhom(self.forward, self.backward) == identity_lhom(self.forward.dom)
                and compose_lhom(self.backward, self.forward) == identity_lhom(self.forward.cod))


def S_obj(X: MultiSpace) -> SpeckerGroup:
    return SpeckerGroup(X)


def S_mor(gamma: BmsMorphism) -> LHom:
    """S(γ): C_Y -> C_X, f ↦ ζ_γ · (f ∘ γ)"""
    dom, cod = S_obj(gamma.cod), S_obj(gamma.dom)
    m = np.zeros((len(gamma.dom), len(gamma.cod)), dtype=object)
    for i, (image, z) in enumerate(zip(gamma.images, gamma.zeta)):
        m[i, gamma.cod.index(image)] = z
    return LHom(dom, cod, m)


def B_obj(S: SpeckerGroup) -> MultiSpace:
    """(maxspec(S), u♮) con puntos m_<etiqueta> en el orden de la base"""
    u = S.unit
    return MultiSpace(
        tuple(MAXSPEC_PREFIX + m.point for m in maximal_ideals(S)),
        tuple(u[m.point] for m in maximal_ideals(S)),
    )


def B_mor(psi: LHom) -> BmsMorphism:
    """B(ψ): maxspec(W) -> maxspec(V), m ↦ ψ⁻¹(m)"""
    images = tuple(
        MAXSPEC_PREFIX + preimage_ideal(psi, m).point for m in maximal_ideals(psi.cod)
    )
    dom, cod = B_obj(psi.cod), B_obj(psi.dom)
    for (label, u_dom), image in zip(dom.items(), images):
        if u_dom % cod.mult(image) != 0:
            raise DivisibilityError(label, u_dom, cod.mult(image))
    return BmsMorphism(dom, cod, images)


def unit_M(X: MultiSpace) -> NaturalIsoWitness:
    """M_X: x ↦ m_x, con inversa Ż_X"""
    target = B_obj(S_obj(X))
    forward = BmsMorphism(X, target, target.labels)
    backward = BmsMorphism(target, X, X.labels)
    return NaturalIsoWitness('unit', X, forward, backward)


def counit_natural(S: SpeckerGroup) -> NaturalIsoWitness:
    """g ↦ g♮ de S sobre C_maxspec(S), con su inversa"""
    target = S_obj(B_obj(S))
    n = len(S.base)
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    forward = LHom(S, target, m)
    return NaturalIsoWitness('counit', S, forward, inverse_lhom(forward))


def psi_dual(psi: LHom) -> BmsMorphism:
    """Ż ∘ ψ⁻¹ ∘ M: el morfismo W -> V del cual ψ es imagen"""
    return compose(compose(unit_M(psi.cod.base).forward, B_mor(psi)), unit_M(psi.dom.base).backward)


def verify_triangles(X: MultiSpace) -> bool:
    """ε_{S(X)} seguido de S(M_X) es la identidad de S(X)"""
    S = S_obj(X)
    composite = compose_lhom(counit_natural(S).forward, S_mor(unit_M(X).forward))
    return composite == identity_lhom(S)


def verify_triangles_grp(S: SpeckerGroup) -> bool:
    """M_{B(S)} seguido de B(ε_S) es la identidad de B(S)"""
    X = B_obj(S)
    composite = compose(unit_M(X).forward, B_mor(counit_natural(S).forward))
    return composite == identity(X)


def enumerate_lhoms(dom: SpeckerGroup, cod: SpeckerGroup) -> list[LHom]:
    """Todas las matrices válidas C_V -> C_W, por fuerza bruta sobre las formas de fila"""
    u_v = dom.base.mults
    row_choices = []
    for u_w in cod.base.mults:
        rows = []
        for j, u in enumerate(u_v):
            for k in range(1, u_w + 1):
                if k * u == u_w:
                    rows.append(tuple(k if c == j else 0 for c in range(len(u_v))))
        row_choices.append(rows)
    return [validate_lhom(rows, dom, cod) for rows in itertools.product(*row_choices)]


def verify_hom_bijection(X: MultiSpace, Y: MultiSpace) -> dict:
    """Plenitud y fidelidad: Hom_Bms(X, Y) ≅ Hom_uSℓg(S(Y), S(X))"""
    homs = enumerate_homs(X, Y)
    lhoms = enumerate_lhoms(S_obj(Y), S_obj(X))
    images = [S_mor(gamma) for gamma in homs]
    image_set = set(images)
    injective = len(image_set) == len(images)
    surjective = image_set == set(lhoms)
    failures = []
    if not injective:
        failures.append('S_mor is not injective')
    if not surjective:
        failures.append('S_mor is not surjective onto the valid matrices')
    for psi in lhoms:
        if S_mor(psi_dual(psi)) != psi:
            failures.append(f"S_mor(psi_dual(psi)) != psi for {psi.matrix.tolist()}")
    return {
        'homs_bms': len(homs),
        'homs_uslg': len(lhoms),
        'injective': injective,
        'surjective': surjective,
        'bijection': injective and surjective and len(homs) == len(lhoms),
        'failures': failures,
    }


def verify_naturality(gamma: BmsMorphism) -> list[str]:
    """Cuadrados de naturalidad de M y de ♮ para γ y para S(γ)"""
    failures = []
    X, Y = gamma.dom, gamma.cod
    left = compose(unit_M(X).forward, B_mor(S_mor(gamma)))
    right = compose(gamma, unit_M(Y).forward)
    if left != right:
        failures.append(f"unit square fails for {gamma.mapping}")
    psi = S_mor(gamma)
    top = compose_lhom(psi, counit_natural(psi.cod).forward)
    bottom = compose_lhom(counit_natural(psi.dom).forward, S_mor(B_mor(psi)))
    if top != bottom:
        failures.append(f"counit square fails for {gamma.mapping}")
    return failures


def verify_functoriality(first: BmsMorphism, second: BmsMorphism) -> list[str]:
    """S y B invierten la composición"""
    failures = []
    composite = compose(first, second)
    if S_mor(composite) != compose_lhom(S_mor(second), S_mor(first)):
        failures.append(f"S fails on {first.mapping} ; {second.mapping}")
    psi1, psi2 = S_mor(second), S_mor(first)
    if B_mor(compose_lhom(psi1, psi2)) != compose(B_mor(psi2), B_mor(psi1)):
        failures.append(f"B fails on {first.mapping} ; {second.mapping}")
    if S_mor(identity(first.dom)) != identity_lhom(S_obj(first.dom)):
        failures.append('S does not preserve identities')
    return failures


def verify_round_trip(X: MultiSpace) -> list[str]:
    """B(S(X)) ≅ X vía M_X, identidades triangulares, counidad isomorfismo"""
    failures = []
    witness = unit_M(X)
    if not (witness.is_valid() and is_isomorphism(witness.forward)):
        failures.append(f"M_X is not an isomorphism for {X.to_dict()}")
    counit = counit_natural(S_obj(X))
    if not (counit.is_valid() and lhom_is_isomorphism(counit.forward)):
        failures.append(f"counit is not an isomorphism for {X.to_dict()}")
    if not verify_triangles(X):
        failures.append(f"first triangle identity fails for {X.to_dict()}")
    if not verify_triangles_grp(S_obj(X)):
        failures.append(f"second triangle identity fails for {X.to_dict()}")
    return failures


def _boolean_homs_by_atoms(X: MultiSpace, Y: MultiSpace) -> set[tuple[frozenset, ...]]:
    """Homomorfismos P(Y) -> P(X): imágenes disjuntas de los átomos que cubren X"""
    subsets = [
        frozenset(label for label, bit in zip(X.labels, bits) if bit)
        for bits in itertools.product((0, 1), repeat=len(X))
    ]
    found = set()
    everything = frozenset(X.labels)
    for images in itertools.product(subsets, repeat=len(Y)):
        union = frozenset().union(*images)
        if union != everything:
            continue
        if sum(len(block) for block in images) != len(everything):
            continue
        found.add(images)
    return found


def verify_stone_restriction(X: MultiSpace, Y: MultiSpace) -> dict:
    """Con multiplicidad constante 1: Hom_Bms(X, Y) ≅ Hom_BA(P(Y), P(X))"""
    if any(u != 1 for u in X.mults + Y.mults):
        raise MathDomainError('Stone restriction needs constant multiplicity 1')
    failures = []
    for S in (S_obj(X), S_obj(Y)):
        if not all(x in (0, 1) for x in S.unit.values):
            failures.append('unit is not singular')
    atoms = _boolean_homs_by_atoms(X, Y)
    induced = set()
    for gamma in enumerate_homs(X, Y):
        psi = S_mor(gamma)
        blocks = []
        for y in Y.labels:
            image = apply_lhom(psi, S_obj(Y).indicator([y]))
            blocks.append(supp(image))
        induced.add(tuple(blocks))
        # S(γ) envía singulares en singulares
        for s in singular_elements(S_obj(Y)):
            image = apply_lhom(psi, s)
            if not all(x in (0, 1) for x in image.values):
                failures.append(f"S_mor({gamma.mapping}) breaks singularity")
                break
    if induced != atoms:
        failures.append('boolean homomorphisms do not match Bms morphisms')
    return {
        'homs_bms': len(enumerate_homs(X, Y)),
        'homs_boolean': len(atoms),
        'bijection': induced == atoms and len(induced) == len(enumerate_homs(X, Y)),
        'failures': failures,
    }
