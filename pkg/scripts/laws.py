#!/usr/bin/env python3
"""
Barrido exhaustivo de leyes - dualidad Bms / uSℓg a escala de escritorio
Dualidad, límites, Γ, ideales y αZ≥0, más leyes de categoría y naturalidad
"""

from __future__ import annotations

import itertools
import json
import math
import sys
from datetime import datetime
from pathlib import Path

import numpy as np
import pandas as pd
from tqdm import tqdm

from duality import (
    S_obj,
    enumerate_lhoms,
    verify_functoriality,
    verify_hom_bijection,
    verify_naturality,
    verify_round_trip,
    verify_stone_restriction,
)
from errors import EXIT_OK, EXIT_VERIFICATION
from limits import (
    Diagram,
    agrees_with_limit,
    coproduct,
    equalizer,
    equalizer_diagram,
    product,
    pullback,
    pullback_diagram,
    terminal,
    verify_couniversal,
    verify_duality_exchange,
    verify_lcm_law,
    verify_universal,
)
from mspace import (
    MultiSpace,
    compose,
    enumerate_homs,
    find_inverse,
    identity,
    is_isomorphism,
    random_spaces,
    universe_spaces,
)
from mv import (
    SWEEP_MAX_MULT,
    SWEEP_MAX_POINTS,
    cardinality,
    elements,
    enumerate_mv_homs,
    fiber_cardinality,
    fiber_decomposition,
    gamma_mor,
    gamma_obj,
    mv_hom_table,
    verify_boolean,
    verify_mv_axioms,
    verify_product_preservation,
)
from omega import (
    DEFAULT_OMEGA_BOUND,
    DEFAULT_SEED,
    ECSeq,
    discontinuity_witness_power,
    ec_hyperarch_witness,
    membership_sweep,
    pushout_obstruction,
    verify_H_not_specker,
)
from sgroup import (
    GroupElement,
    generated_ideal_contains,
    greatest_singular,
    hyperarch_witness,
    ideal_from_zeroset,
    ideal_le,
    is_maximal,
    is_maximal_by_criterion,
    is_singular,
    is_singular_by_definition,
    join,
    maximal_ideals,
    meet,
    rho_by_equation,
    scalar_mul,
    singular_elements,
    supp,
    zeroset_from_ideal,
)

ROUND_TRIP_MAX_MULT = 6
RANDOM_SPACE_POINTS = 4
UNIVERSAL_TEST_POINTS = 2
MV_HOM_SPOT_CHECK = 6
MAX_REPORTED_FAILURES = 10


def clean_for_json(obj):
    """Convertir tipos numpy y tuplas para json.dump"""
    if isinstance(obj, dict):
        return {str(k): clean_for_json(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [clean_for_json(item) for item in obj]
    elif isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    elif isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.floating):
        return float(obj)
    elif obj is not None and not isinstance(obj, str) and pd.isna(obj):
        return None
    else:
        return obj


class LawsSweep:
    def __init__(self, max_points=SWEEP_MAX_POINTS, max_mult=SWEEP_MAX_MULT, seed=DEFAULT_SEED,
                 random_spaces=500, omega_bound=DEFAULT_OMEGA_BOUND, quiet=False):
        self.max_points = max_points
        self.max_mult = max_mult
        self.seed = seed
        self.random_spaces = random_spaces
        self.omega_bound = omega_bound
        self.quiet = quiet
        self.universe = universe_spaces(max_points, max_mult)
        # universo reducido para las leyes con enumeraciones anidadas
        self.small_universe = universe_spaces(min(max_points, 2), min(max_mult, 3))
        self.records = []
        self.report = {
            'start_time': datetime.now().isoformat(),
            'parameters': {
                'max_points': max_points,
                'max_mult': max_mult,
                'seed': seed,
                'random_spaces': random_spaces,
                'omega_bound': omega_bound,
            },
            'checks': [],
            'failures': {},
        }

    def _say(self, message=''):
        if not self.quiet:
            print(message, file=sys.stderr)

    def _banner(self, title):
        self._say(f"\n🔍 {title}")
        self._say("=" * 60)

    def _progress(self, items, desc):
        return tqdm(items, desc=desc, disable=self.quiet, leave=False, file=sys.stderr)

    def _record(self, name, module, cases, failures, started):
        seconds = (datetime.now() - started).total_seconds()
        self.records.append({
            'check': name,
            'module': module,
            'cases': cases,
            'failures': len(failures),
            'seconds': seconds,
        })
        if failures:
            self.report['failures'][name] = failures[:MAX_REPORTED_FAILURES]
            self._say(f"❌ {name}: {len(failures)} fallas en {cases:,} casos")
        else:
            self._say(f"✅ {name}: {cases:,} casos ({seconds:.1f}s)")

    def _pairs(self, spaces):
        return list(itertools.product(spaces, repeat=2))

    # Dualidad y estructura

    def check_round_trip(self):
        """B(S(X)) ≅ X vía M_X e identidades triangulares"""
        self._banner("ROUND TRIP DE LA DUALIDAD")
        started = datetime.now()
        spaces = universe_spaces(self.max_points, ROUND_TRIP_MAX_MULT)
        spaces += random_spaces(self.random_spaces, RANDOM_SPACE_POINTS, ROUND_TRIP_MAX_MULT, self.seed)
        failures = []
        for X in self._progress(spaces, 'round trip'):
            failures.extend(verify_round_trip(X))
        self._record('round_trip', 'duality', len(spaces), failures, started)

    def check_hom_bijection(self):
        """Plenitud y fidelidad de S sobre todos los pares del universo"""
        self._banner("BIYECCIÓN DE HOMS")
        started = datetime.now()
        failures = []
        pairs = self._pairs(self.universe)
        for X, Y in self._progress(pairs, 'hom bijection'):
            result = verify_hom_bijection(X, Y)
            if not result['bijection'] or result['failures']:
                failures.append({'X': X.to_dict(), 'Y': Y.to_dict(), 'result': result})
        self._record('hom_bijection', 'duality', len(pairs), failures, started)

    def check_lcm_limits(self):
        """Ley LCM del producto y propiedad universal contra vértices de <= 2 puntos"""
        self._banner("LÍMITES Y LEY LCM")
        started = datetime.now()
        apexes = universe_spaces(UNIVERSAL_TEST_POINTS, self.max_mult)
        failures = []
        result = verify_universal(terminal(), Diagram(()), apexes)
        failures.extend(result['violations'])
        pairs = self._pairs(self.universe)
        cones = result['cones_checked']
        for X, Y in self._progress(pairs, 'products'):
            cone = product(X, Y)
            failures.extend(verify_lcm_law(cone))
            result = verify_universal(cone, Diagram((X, Y)), apexes)
            cones += result['cones_checked']
            failures.extend(result['violations'])
        self._record('lcm_limits', 'limits', cones, failures, started)

    def check_duality_exchange(self):
        """S(X ⊔ Y) ≅ S(X) × S(Y) y S(X × Y) ≅ S(X) ⊔ S(Y)"""
        self._banner("INTERCAMBIO DE LÍMITES Y COLÍMITES")
        started = datetime.now()
        failures = []
        pairs = self._pairs(self.universe)
        for X, Y in self._progress(pairs, 'exchange'):
            failures.extend(verify_duality_exchange(X, Y))
        # propiedad universal en uSℓg contra grupos de <= 2 puntos
        tests = [S_obj(T) for T in universe_spaces(UNIVERSAL_TEST_POINTS, min(self.max_mult, 2))]
        small_pairs = self._pairs(self.small_universe)
        for X, Y in self._progress(small_pairs, 'exchange (universal)'):
            failures.extend(verify_duality_exchange(X, Y, tests))
        self._record('duality_exchange', 'limits', len(pairs) + len(small_pairs), failures, started)

    def check_gamma_laws(self):
        """Cardinalidad, axiomas MV, fibras y álgebras booleanas"""
        self._banner("LEYES DEL FUNTOR Γ")
        started = datetime.now()
        failures = []
        for X in self._progress(self.universe, 'gamma'):
            A = gamma_obj(S_obj(X))
            expected = math.prod(u + 1 for u in X.mults)
            if cardinality(A) != expected or len(elements(A)) != expected:
                failures.append(f"cardinality of Γ over {X.to_dict()}")
            axioms = verify_mv_axioms(A)
            if not axioms['passed']:
                failures.append({'space': X.to_dict(), 'violations': axioms['violations']})
            if fiber_cardinality(fiber_decomposition(A)) != expected:
                failures.append(f"fiber cardinalities over {X.to_dict()}")
            if verify_boolean(A) != all(u == 1 for u in X.mults):
                failures.append(f"x ⊕ x = x does not match a singular unit over {X.to_dict()}")
        for X, Y in self._pairs(self.small_universe):
            failures.extend(verify_product_preservation(S_obj(X), S_obj(Y)))
        self._record('gamma_laws', 'mv', len(self.universe), failures, started)

    def check_mv_homs(self):
        """Los MV-homomorfismos entre álgebras pequeñas son los ℓ-homs unitales"""
        self._banner("HOMS DE MV-ÁLGEBRAS")
        started = datetime.now()
        failures = []
        spaces = [X for X in self.universe if math.prod(u + 1 for u in X.mults) <= MV_HOM_SPOT_CHECK]
        pairs = self._pairs(spaces)
        for X, Y in self._progress(pairs, 'mv homs'):
            S, T = S_obj(X), S_obj(Y)
            mv_homs = set(enumerate_mv_homs(gamma_obj(S), gamma_obj(T)))
            restricted = {mv_hom_table(gamma_mor(h)) for h in enumerate_lhoms(S, T)}
            if mv_homs != restricted:
                failures.append({'dom': X.to_dict(), 'cod': Y.to_dict(),
                                 'mv_only': len(mv_homs - restricted), 'lhom_only': len(restricted - mv_homs)})
        self._record('mv_homs', 'mv', len(pairs), failures, started)

    def check_singular_elements(self):
        """Singulares: conteo, supp como isomorfismo de retículos, definición y ρ(s_S) = 1"""
        self._banner("ELEMENTOS SINGULARES")
        started = datetime.now()
        failures = []
        for X in self._progress(self.universe, 'singulars'):
            S = S_obj(X)
            singulars = singular_elements(S)
            if len(singulars) != 2 ** len(X):
                failures.append(f"singular count over {X.to_dict()}")
            if len({supp(s) for s in singulars}) != 2 ** len(X):
                failures.append(f"supp is not a bijection over {X.to_dict()}")
            for a, b in itertools.product(singulars, repeat=2):
                if supp(meet(a, b)) != supp(a) & supp(b) or supp(join(a, b)) != supp(a) | supp(b):
                    failures.append(f"supp does not preserve ∧/∨ over {X.to_dict()}")
                    break
            for values in itertools.product((-1, 0, 1, 2), repeat=len(X)):
                f = GroupElement(S, values)
                if is_singular(f) != is_singular_by_definition(f):
                    failures.append(f"singularity tests disagree at {list(values)}")
            s = greatest_singular(S)
            for m in maximal_ideals(S):
                if rho_by_equation(m, s) != 1 or rho_by_equation(m, S.unit) != S.unit[m.point]:
                    failures.append(f"ρ fails at {m.point} over {X.to_dict()}")
        self._record('singular_elements', 'sgroup', len(self.universe), failures, started)

    def check_ideal_correspondence(self):
        """Conjuntos de ceros e ideales: biyección que invierte la inclusión"""
        self._banner("CORRESPONDENCIA DE IDEALES")
        started = datetime.now()
        failures = []
        cases = 0
        for X in self._progress(self.universe, 'ideals'):
            S = S_obj(X)
            subsets = [
                frozenset(label for label, bit in zip(X.labels, bits) if bit)
                for bits in itertools.product((0, 1), repeat=len(X))
            ]
            box = [GroupElement(S, values) for values in itertools.product((-1, 0, 1), repeat=len(X))]
            for Z in subsets:
                cases += 1
                ideal = ideal_from_zeroset(S, Z)
                generators = [S.indicator([x]) for x in X.labels if x not in Z]
                if zeroset_from_ideal(S, generators).zeroset != Z:
                    failures.append(f"zeroset round trip fails for {sorted(Z)}")
                if any(generated_ideal_contains(S, generators, g) != ideal.contains(g) for g in box):
                    failures.append(f"generated ideal differs from I({sorted(Z)})")
                if is_maximal(ideal) != is_maximal_by_criterion(ideal):
                    failures.append(f"maximality tests disagree for {sorted(Z)}")
                for W in subsets:
                    if (Z <= W) != ideal_le(ideal_from_zeroset(S, W), ideal):
                        failures.append(f"inclusion not reversed for {sorted(Z)}, {sorted(W)}")
        self._record('ideal_correspondence', 'sgroup', cases, failures, started)

    def check_omega(self):
        """Obstrucciones sobre αZ≥0"""
        self._banner("OBSTRUCCIONES EN αZ≥0")
        started = datetime.now()
        failures = []
        h = verify_H_not_specker(self.seed)
        if h['closed'] != 'pass' or h['singulars_finite_support'] != 'pass' or h['unit_generated']:
            failures.append({'not_specker': h})
        elif h['certificate']['coordinate'] != 'tail':
            failures.append({'not_specker_certificate': h['certificate']})
        power = discontinuity_witness_power()
        if not power['all_v_equal_2'] or power['limit']['v'] != 1:
            failures.append({'power': power})
        pushout = pushout_obstruction(self.omega_bound)
        expected = {'∞': 1, **{str(n): 2 for n in range(self.omega_bound + 1)}}
        if pushout['forced'] != expected or pushout['representable']:
            failures.append({'pushout': pushout})
        self._record('omega_obstructions', 'omega', 3, failures, started)

    def check_membership(self):
        """Forma de Hermite contra el oráculo de fuerza bruta"""
        self._banner("PERTENENCIA A SUBGRUPOS")
        started = datetime.now()
        result = membership_sweep(self.seed)
        self._record('subgroup_membership', 'omega', result['instances'], result['failures'], started)

    def check_hyperarchimedean(self):
        """n·f ∧ g = (n+1)·f ∧ g con n <= max(g)"""
        self._banner("TESTIGO HIPERARQUIMEDIANO")
        started = datetime.now()
        failures = []
        cases = 0
        for k in range(1, self.max_points + 1):
            S = S_obj(MultiSpace(tuple(f"p{i + 1}" for i in range(k)), (1,) * k))
            box = [GroupElement(S, values) for values in itertools.product(range(4), repeat=k)]
            for f, g in self._progress(list(itertools.product(box, repeat=2)), f"hyperarch {k}"):
                cases += 1
                n = hyperarch_witness(f, g)
                if n > max(g.values) or meet(scalar_mul(n, f), g) != meet(scalar_mul(n + 1, f), g):
                    failures.append({'f': list(f.values), 'g': list(g.values), 'n': n})
        rng = np.random.default_rng(self.seed)
        for _ in range(200):
            cases += 1
            f = ECSeq(tuple(int(v) for v in rng.integers(0, 4, rng.integers(0, 5))), int(rng.integers(0, 4)))
            g = ECSeq(tuple(int(v) for v in rng.integers(0, 4, rng.integers(0, 5))), int(rng.integers(0, 4)))
            n = ec_hyperarch_witness(f, g)
            if n > g.max_value():
                failures.append({'f': f.to_dict(), 'g': g.to_dict(), 'n': n})
        self._record('hyperarchimedean', 'sgroup', cases, failures, started)

    # Leyes adicionales

    def check_category_laws(self):
        """Identidades, asociatividad, ζ multiplicativo e isomorfismos en Bms"""
        self._banner("LEYES DE CATEGORÍA EN Bms")
        started = datetime.now()
        failures = []
        cases = 0
        triples = list(itertools.product(self.small_universe, repeat=3))
        for X, Y, Z in self._progress(triples, 'category'):
            for f in enumerate_homs(X, Y):
                for g in enumerate_homs(Y, Z):
                    cases += 1
                    fg = compose(f, g)
                    if any(z != zf * g.zeta_at(image) for z, zf, image in zip(fg.zeta, f.zeta, f.images)):
                        failures.append(f"ζ is not multiplicative for {f.mapping} ; {g.mapping}")
                    for h in enumerate_homs(Z, X):
                        if compose(fg, h) != compose(f, compose(g, h)):
                            failures.append(f"associativity fails for {f.mapping} ; {g.mapping} ; {h.mapping}")
        for X, Y in self._pairs(self.small_universe):
            for f in enumerate_homs(X, Y):
                cases += 1
                if compose(identity(X), f) != f or compose(f, identity(Y)) != f:
                    failures.append(f"identity law fails for {f.mapping}")
                if is_isomorphism(f) != (find_inverse(f) is not None):
                    failures.append(f"isomorphism tests disagree for {f.mapping}")
        self._record('category_laws', 'mspace', cases, failures, started)

    def check_functoriality(self):
        """S y B invierten composiciones; M y ♮ son naturales"""
        self._banner("FUNTORIALIDAD Y NATURALIDAD")
        started = datetime.now()
        failures = []
        cases = 0
        spaces = universe_spaces(min(self.max_points, 2), min(self.max_mult, 2))
        for X, Y, Z in self._progress(list(itertools.product(spaces, repeat=3)), 'functoriality'):
            for f in enumerate_homs(X, Y):
                for g in enumerate_homs(Y, Z):
                    cases += 1
                    failures.extend(verify_functoriality(f, g))
        for X, Y in self._pairs(self.small_universe):
            for gamma in enumerate_homs(X, Y):
                cases += 1
                failures.extend(verify_naturality(gamma))
        self._record('functoriality', 'duality', cases, failures, started)

    def check_stone_restriction(self):
        """Con multiplicidad 1 se recupera la dualidad de Stone finita"""
        self._banner("RESTRICCIÓN A STONE")
        started = datetime.now()
        failures = []
        spaces = [X for X in self.universe if all(u == 1 for u in X.mults)]
        pairs = self._pairs(spaces)
        for X, Y in self._progress(pairs, 'stone'):
            result = verify_stone_restriction(X, Y)
            if not result['bijection'] or result['failures']:
                failures.append({'X': X.to_dict(), 'Y': Y.to_dict(), 'result': result})
        self._record('stone_restriction', 'duality', len(pairs), failures, started)

    def check_other_limits(self):
        """Ecualizadores, pullbacks y coproductos contra su propiedad universal"""
        self._banner("ECUALIZADORES, PULLBACKS Y COPRODUCTOS")
        started = datetime.now()
        failures = []
        cases = 0
        tests = self.small_universe
        for X, Y in self._progress(self._pairs(self.small_universe), 'equalizers'):
            homs = enumerate_homs(X, Y)
            for f, g in itertools.product(homs, repeat=2):
                cases += 1
                cone, diagram = equalizer(f, g), equalizer_diagram(f, g)
                failures.extend(verify_universal(cone, diagram, tests)['violations'])
                if not agrees_with_limit(cone, diagram):
                    failures.append(f"equalizer differs from the limit for {f.mapping}, {g.mapping}")
            cocone = coproduct(X, Y)
            cases += 1
            failures.extend(verify_couniversal(cocone, Diagram((X, Y)), tests)['violations'])
        spaces = universe_spaces(min(self.max_points, 2), min(self.max_mult, 2))
        for X, Y, Z in self._progress(list(itertools.product(spaces, repeat=3)), 'pullbacks'):
            for f, g in itertools.product(enumerate_homs(X, Z), enumerate_homs(Y, Z)):
                cases += 1
                cone = pullback(f, g)
                failures.extend(verify_lcm_law(cone))
                failures.extend(verify_universal(cone, pullback_diagram(f, g), spaces)['violations'])
        self._record('other_limits', 'limits', cases, failures, started)

    def summarize(self):
        """Resumen por módulo con pandas"""
        self._banner("RESUMEN")
        df = pd.DataFrame(self.records, columns=['check', 'module', 'cases', 'failures', 'seconds'])
        by_module = df.groupby('module', sort=False).agg(
            checks=('check', 'count'),
            cases=('cases', 'sum'),
            failures=('failures', 'sum'),
            seconds=('seconds', 'sum'),
        )
        for module, row in by_module.iterrows():
            status = "✅" if row['failures'] == 0 else "❌"
            self._say(f"  {status} {module}: {int(row['checks'])} checks, "
                      f"{int(row['cases']):,} casos, {int(row['failures'])} fallas")
        self.report['checks'] = df.to_dict(orient='records')
        self.report['by_module'] = by_module.reset_index().to_dict(orient='records')
        self.report['total_failures'] = int(df['failures'].sum()) if len(df) else 0
        self.report['end_time'] = datetime.now().isoformat()
        self.report['total_time_seconds'] = float((
            datetime.fromisoformat(self.report['end_time']) -
            datetime.fromisoformat(self.report['start_time'])
        ).total_seconds())
        self.report = clean_for_json(self.report)
        return self.report

    def save_report(self, path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.report, f, indent=2, ensure_ascii=False)
        self._say(f"📋 Reporte guardado en: {path}")

    def run_full_sweep(self):
        """Ejecutar todos los chequeos"""
        self._say("🎯 BARRIDO DE LEYES - MULTIESPACIOS BOOLEANOS Y GRUPOS DE SPECKER")
        self._say("=" * 80)
        self._say(f"🌐 Universo: {len(self.universe)} espacios "
                  f"(<= {self.max_points} puntos, multiplicidad <= {self.max_mult})")

        self.check_round_trip()
        self.check_hom_bijection()
        self.check_lcm_limits()
        self.check_duality_exchange()
        self.check_gamma_laws()
        self.check_mv_homs()
        self.check_singular_elements()
        self.check_ideal_correspondence()
        self.check_omega()
        self.check_membership()
        self.check_hyperarchimedean()
        self.check_category_laws()
        self.check_functoriality()
        self.check_stone_restriction()
        self.check_other_limits()

        report = self.summarize()
        if report['total_failures'] == 0:
            self._say("\n✅ BARRIDO COMPLETADO SIN FALLAS")
        else:
            self._say(f"\n❌ BARRIDO COMPLETADO CON {report['total_failures']} FALLAS")
        return report


if __name__ == "__main__":
    sweep = LawsSweep()
    report = sweep.run_full_sweep()
    print(json.dumps({'total_failures': report['total_failures']}))
    sys.exit(EXIT_OK if report["total_failures"] == 0 else EXIT_VERIFICATION)
