#!/usr/bin/env python3
"""
Interfaz de línea de comandos
Construcciones, dualidad, (co)límites, Γ, barridos de verificación y las
demostraciones sobre αZ≥0; entrada y salida JSON, exportación DOT
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Mapping

from duality import B_mor, B_obj, S_mor, S_obj
from errors import (
    EXIT_IO,
    EXIT_MATH,
    EXIT_OK,
    EXIT_SCHEMA,
    EXIT_VERIFICATION,
    InputOutputError,
    MultispaceError,
    SchemaError,
    VerificationFailure,
)
from laws import LawsSweep, clean_for_json
from limits import Diagram, coproduct, equalizer, limit, product, pullback
from mspace import BmsMorphism, MultiSpace, enumerate_homs
from mv import SWEEP_MAX_MULT, SWEEP_MAX_POINTS, gamma_report
from omega import (
    DEFAULT_OMEGA_BOUND,
    DEFAULT_SEED,
    POWER_SWEEP,
    discontinuity_witness_power,
    pushout_obstruction,
    verify_H_not_specker,
)
from sgroup import LHom, SpeckerGroup

EXIT_CODES_HELP = f"""exit codes:
  {EXIT_OK}  ok
  {EXIT_IO}  I/O error (missing or unreadable file)
  {EXIT_SCHEMA}  schema violation (malformed JSON, duplicate labels, bad shapes)
  {EXIT_MATH}  math-domain error (divisibility, overflow, no colimit)
  {EXIT_VERIFICATION}  verification failure (laws sweep found failures)
"""


class JsonArgumentParser(argparse.ArgumentParser):
    """Los errores de uso se reportan como errores de esquema en una línea JSON"""

    def error(self, message):
        raise SchemaError(message)


def load_json(path: str):
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise InputOutputError(f"cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON in {path}: {e.msg} at line {e.lineno}") from None


def load_mapping(path: str) -> Mapping:
    data = load_json(path)
    if not isinstance(data, Mapping):
        raise SchemaError(f"{path} must contain a JSON object")
    return data


def morphism_payload(m: BmsMorphism) -> dict:
    payload = m.to_dict()
    payload['zeta'] = dict(zip(m.dom.labels, m.zeta))
    return payload


def export_dot(m: BmsMorphism) -> str:
    """Dos clusters (dominio y codominio) y una arista por punto, etiquetada con ζ"""
    def quote(text):
        return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'

    lines = ['digraph morphism {', '  rankdir=LR;']
    for name, space in (('dom', m.dom), ('cod', m.cod)):
        lines.append(f'  subgraph cluster_{name} {{')
        lines.append(f'    label={quote(name)};')
        for label, mult in space.items():
            lines.append(f'    {quote(name + ":" + label)} [label={quote(f"{label}:{mult}")}];')
        lines.append('  }')
    for label, image, z in zip(m.dom.labels, m.images, m.zeta):
        lines.append(f'  {quote("dom:" + label)} -> {quote("cod:" + image)} [label={quote(z)}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def build_parser() -> JsonArgumentParser:
    parser = JsonArgumentParser(
        prog='multispace',
        description='Boolean multispaces and unital Specker ℓ-groups: duality, limits, Γ and verification',
        epilog=EXIT_CODES_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--quiet', dest='global_quiet', action='store_true', help='no progress output on stderr')
    verbs = parser.add_subparsers(dest='verb', metavar='VERB')
    verbs.required = True

    space = verbs.add_parser('space', help='validate a multispace')
    space.add_argument('action', choices=['check'])
    space.add_argument('file')

    morph = verbs.add_parser('morph', help='validate a morphism and report ζ')
    morph.add_argument('action', choices=['check'])
    morph.add_argument('file')

    hom = verbs.add_parser('hom', help='enumerate all morphisms X -> Y')
    hom.add_argument('dom')
    hom.add_argument('cod')

    dual = verbs.add_parser('dual', help='apply S (to spaces, morphisms) or B (to groups, ℓ-homs)')
    dual.add_argument('kind', choices=['obj', 'mor'])
    dual.add_argument('file')

    for name, text in (('product', 'LCM product of two spaces'), ('coproduct', 'disjoint union of two spaces')):
        sub = verbs.add_parser(name, help=text)
        sub.add_argument('left')
        sub.add_argument('right')

    for name, text in (('equalizer', 'equalizer of two parallel morphisms'),
                       ('pullback', 'pullback of two morphisms with a common codomain')):
        sub = verbs.add_parser(name, help=text)
        sub.add_argument('first')
        sub.add_argument('second')

    lim = verbs.add_parser('limit', help='limit of a finite diagram')
    lim.add_argument('--diagram', required=True)

    gamma = verbs.add_parser('gamma', help='Γ of the Specker group of a space (or of a group)')
    gamma.add_argument('file')

    laws = verbs.add_parser('laws', help='run the full invariant sweep')
    laws.add_argument('--max-points', type=int, default=SWEEP_MAX_POINTS)
    laws.add_argument('--max-mult', type=int, default=SWEEP_MAX_MULT)
    laws.add_argument('--random-spaces', type=int, default=500)
    laws.add_argument('--seed', type=int, default=DEFAULT_SEED)
    laws.add_argument('--report', help='also save the full report as JSON')
    laws.add_argument('--quiet', action='store_true', help='no progress output on stderr')

    omega = verbs.add_parser('omega', help='obstructions on the one-point compactification of Z≥0')
    omega.add_argument('action', choices=['demo'])
    omega.add_argument('--which', required=True, choices=['not-specker', 'power', 'pushout'])
    omega.add_argument('--bound', type=int)
    omega.add_argument('--seed', type=int, default=DEFAULT_SEED)

    dot = verbs.add_parser('export-dot', help='DOT graph of a morphism')
    dot.add_argument('file')
    return parser


def _space(path: str) -> MultiSpace:
    return MultiSpace.from_dict(load_mapping(path))


def _morphism(path: str) -> BmsMorphism:
    return BmsMorphism.from_dict(load_mapping(path))


def _dual(kind: str, path: str) -> dict:
    data = load_mapping(path)
    if kind == 'obj':
        if 'points' in data:
            S = S_obj(MultiSpace.from_dict(data))
            return {'group': S.to_dict(), 'unit': list(S.unit.values)}
        if 'space' in data:
            return B_obj(SpeckerGroup.from_dict(data)).to_dict()
        raise SchemaError('dual obj expects a multispace ("points") or a group ("space")')
    if 'map' in data:
        return S_mor(BmsMorphism.from_dict(data)).to_dict()
    if 'matrix' in data:
        return morphism_payload(B_mor(LHom.from_dict(data)))
    raise SchemaError('dual mor expects a morphism ("map") or an ℓ-hom ("matrix")')


def _gamma(path: str) -> dict:
    data = load_mapping(path)
    if 'space' in data:
        return gamma_report(SpeckerGroup.from_dict(data))
    return gamma_report(S_obj(MultiSpace.from_dict(data)))


def _laws(args) -> tuple[dict, int]:
    if args.max_points < 0 or args.max_mult < 1 or args.random_spaces < 0:
        raise SchemaError('laws needs --max-points >= 0, --max-mult >= 1 and --random-spaces >= 0')
    sweep = LawsSweep(
        max_points=args.max_points,
        max_mult=args.max_mult,
        seed=args.seed,
        random_spaces=args.random_spaces,
        quiet=args.quiet,
    )
    report = sweep.run_full_sweep()
    if args.report:
        try:
            sweep.save_report(args.report)
        except OSError as e:
            raise InputOutputError(f"cannot write {args.report}: {e.strerror or e}") from None
    summary = {
        'total_failures': report['total_failures'],
        'by_module': report['by_module'],
        'failures': report['failures'],
        'total_time_seconds': report['total_time_seconds'],
    }
    return summary, report['total_failures']


def _omega(args) -> dict:
    if args.bound is not None and args.bound < 0:
        raise SchemaError('--bound must be nonnegative')
    if args.which == 'not-specker':
        return verify_H_not_specker(args.seed)
    if args.which == 'power':
        return discontinuity_witness_power(POWER_SWEEP if args.bound is None else args.bound)
    return pushout_obstruction(DEFAULT_OMEGA_BOUND if args.bound is None else args.bound)


def dispatch(args, out) -> int:
    if args.verb == 'export-dot':
        out.write(export_dot(_morphism(args.file)))
        return EXIT_OK
    failures = 0
    if args.verb == 'space':
        payload = {'valid': True, 'space': _space(args.file).to_dict()}
    elif args.verb == 'morph':
        payload = {'valid': True, 'morphism': morphism_payload(_morphism(args.file))}
    elif args.verb == 'hom':
        homs = enumerate_homs(_space(args.dom), _space(args.cod))
        payload = {'count': len(homs), 'morphisms': [{'map': m.mapping, 'zeta': list(m.zeta)} for m in homs]}
    elif args.verb == 'dual':
        payload = _dual(args.kind, args.file)
    elif args.verb == 'product':
        payload = product(_space(args.left), _space(args.right)).to_dict()
    elif args.verb == 'coproduct':
        payload = coproduct(_space(args.left), _space(args.right)).to_dict()
    elif args.verb == 'equalizer':
        payload = equalizer(_morphism(args.first), _morphism(args.second)).to_dict()
    elif args.verb == 'pullback':
        payload = pullback(_morphism(args.first), _morphism(args.second)).to_dict()
    elif args.verb == 'limit':
        payload = limit(Diagram.from_dict(load_mapping(args.diagram))).to_dict()
    elif args.verb == 'gamma':
        payload = _gamma(args.file)
    elif args.verb == 'laws':
        payload, failures = _laws(args)
    else:
        payload = _omega(args)
    out.write(json.dumps(clean_for_json(payload), ensure_ascii=False) + '\n')
    if failures:
        raise VerificationFailure(f"laws sweep found {failures} failures")
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    """Ejecutar un comando; devuelve el código de salida"""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb == 'laws':
            args.quiet = args.quiet or args.global_quiet
        return dispatch(args, out)
    except MultispaceError as e:
        err.write(json.dumps({'error': e.kind, 'message': str(e)}, ensure_ascii=False) + '\n')
        return e.exit_code


if __name__ == "__main__":
    sys.exit(run())
