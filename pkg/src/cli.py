#!/usr/bin/env python
# --------------------------------------------------------
#       command line front end: eval, asympt, bounds, identity-check, figure, bench
# created on October 18th 2026
# --------------------------------------------------------
import ast
import csv
import json
import operator
import re
import sys
from argparse import ArgumentParser
from io import StringIO
from pathlib import Path

import numpy as np

from src.analysis import Analysis
from src.asymptotics import DefaultOrder, Flavor, asymptotic
from src.bounds import BoundFlavor, bounds_Cn, bounds_Cn_phi1, bounds_Sn, bounds_Sn_phi1, bounds_Sn_phi_a, historical_bounds
from src.corpus import Corpus
from src.errors import DomainError, OutputError, TrigSumError, UsageError
from src.figures import Figures
from src.numerics import EULER, DoubleWide
from src.representations import eval_cotangent_form, eval_digamma_finite, eval_digamma_infinite, eval_integral_form, eval_mixed_form
from src.sums import C, EvalResult, Family, Method, S, SumSpec, eval_direct
from utility.utils import error, info

Separator = Analysis.get_config('output', 'separator', default=',')
Names = {'pi': np.pi, 'ln2': np.log(2), 'gamma': EULER}
Operators = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv, ast.USub: operator.neg, ast.UAdd: operator.pos}
Historical = [BoundFlavor.CochranePeral, BoundFlavor.AlzerKoumandos, BoundFlavor.Pomerance, BoundFlavor.TongEtAl]


# ----------------------------------------
# region PARSING
def parse_expression(text: str) -> float:
    """ real number from an expression with + - * /, parentheses and the names pi, ln2 and gamma; '2ln2' reads as 2*ln2 """
    src = re.sub(r'(\d|\))\s*(pi|ln2|gamma|\()', r'\1*\2', str(text).strip())

    def value(node):
        if isinstance(node, ast.Expression):
            return value(node.body)
        if isinstance(node, ast.Constant) and type(node.value) in (int, float):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in Names:
            return float(Names[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in Operators:
            return Operators[type(node.op)](value(node.left), value(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in Operators:
            return Operators[type(node.op)](value(node.operand))
        raise UsageError(f'invalid expression "{text}"')
    try:
        return value(ast.parse(src, mode='eval'))
    except (SyntaxError, ZeroDivisionError):
        raise UsageError(f'invalid expression "{text}"')


def parse_method(text: str):
    """ method name with an optional order, e.g. asympt:3 """
    name, _, order = str(text).partition(':')
    try:
        method = Method(name)
        if order and method != Method.Asymptotic:
            raise ValueError
        return method, int(order) if order else (DefaultOrder if method == Method.Asymptotic else None)
    except ValueError:
        raise UsageError(f'unknown method "{text}", choose from {[m.value for m in Method]} (asympt:N for an order)')


class Parser(ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def make_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument('--json', action='store_true', help='write JSON instead of CSV')
    common.add_argument('--out', '-o', default=None, help='output file (default: standard output)')
    common.add_argument('--verbose', '-v', action='store_true')
    group = common.add_mutually_exclusive_group()
    group.add_argument('--precision', '-p', choices=['native', 'wide'], default=None, help='native (default) or wide')
    group.add_argument('--wide', action='store_const', dest='precision', const='wide', help='shortcut for --precision wide')

    def sum_args(p, family=True):
        if family:
            p.add_argument('--family', '-f', choices=[f.value for f in Family], default=Family.Csc.value)
        p.add_argument('--n', '-n', type=int, required=True)
        p.add_argument('--phi', type=parse_expression, default=0., help='radians, e.g. "pi/3" or "2*ln2"')
        p.add_argument('--a', '-a', type=parse_expression, default=1.)

    parser = Parser(prog='trigsum', description='finite cosecant, secant, tangent and cotangent sums')
    verbs = parser.add_subparsers(dest='verb', required=True)
    p = verbs.add_parser('eval', parents=[common], help='evaluate a sum by one of its representations')
    sum_args(p)
    p.add_argument('--method', '-m', type=parse_method, default=(Method.Direct, None))
    p.add_argument('--flavor', choices=[f.value for f in Flavor], default=Flavor.Log.value, help='leading term of the asymptotic method')
    p.add_argument('--pv', action='store_true', help='principal value: drop the terms on a pole')
    p = verbs.add_parser('asympt', parents=[common], help='large-n expansion with its leading terms')
    sum_args(p)
    p.add_argument('--order', '-N', type=int, default=DefaultOrder)
    p.add_argument('--flavor', choices=[f.value for f in Flavor], default=Flavor.Log.value)
    p = verbs.add_parser('bounds', parents=[common], help='two-sided bounds of S_n or C_n')
    sum_args(p, family=False)
    p.add_argument('--flavor', choices=[f.value for f in BoundFlavor], default=BoundFlavor.Harmonic.value)
    p = verbs.add_parser('identity-check', parents=[common], help='run the identity corpus with random parameters')
    p.add_argument('--list', action='store_true', help='list the registered checks')
    p.add_argument('--draws', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--names', nargs='+', default=None)
    p.add_argument('--group', default=None)
    p = verbs.add_parser('figure', parents=[common], help='data of a comparison figure')
    p.add_argument('--which', '-w', choices=list(Figures.Which), required=True)
    p.add_argument('--nmax', type=int, default=None)
    p.add_argument('--nmin', type=int, default=None)
    p = verbs.add_parser('bench', parents=[common], help='direct against asymptotic timing')
    p.add_argument('--nmax', type=int, default=10 ** 6)
    p.add_argument('--reps', type=int, default=5)
    return parser
# endregion PARSING
# ----------------------------------------


# ----------------------------------------
# region OUTPUT
def to_plain(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating, DoubleWide)):
        return float(v)
    return v


def to_csv_field(v):
    v = to_plain(v)
    return repr(v) if isinstance(v, float) else '' if v is None else str(v)


def render(header, rows, as_json=False, single=False) -> str:
    """ CSV with a header row and shortest round-trip reals, or JSON records """
    if as_json:
        recs = [{key: to_plain(v) for key, v in zip(header, row)} for row in rows]
        return json.dumps(recs[0] if single else recs, indent=2) + '\n'
    f = StringIO()
    w = csv.writer(f, delimiter=Separator, lineterminator='\n')
    w.writerows([header] + [[to_csv_field(v) for v in row] for row in rows])
    return f.getvalue()


def write(text, out=None):
    if out is None:
        return sys.stdout.write(text)
    try:
        Path(out).write_text(text)
    except OSError as err:
        raise OutputError(out, err.strerror)


def records(dicts):
    """ (header, rows) from a list of dicts, keys in order of first appearance """
    header = list(dict.fromkeys(key for d in dicts for key in d))
    return header, [[d.get(key) for key in header] for d in dicts]
# endregion OUTPUT
# ----------------------------------------


# ----------------------------------------
# region VERBS
def evaluate(spec: SumSpec, method=Method.Direct, order=None, flavor=Flavor.Log, precision='native') -> EvalResult:
    """ value of the sum through the requested representation """
    method = Method(method)
    if spec.principal_value and method != Method.Direct:
        raise UsageError('the principal value is available with the direct method only')
    if method == Method.Direct:
        return eval_direct(spec, precision)
    if method in (Method.CotangentId, Method.Mixed):
        if spec.family != Family.Csc or float(spec.a) != 1:
            raise DomainError(f'the {method.value} form needs family csc and a = 1', (spec.family.value, float(spec.a)))
        return (eval_cotangent_form if method == Method.CotangentId else eval_mixed_form)(spec.n, spec.phi, precision)
    if method == Method.DigammaFinite:
        return eval_digamma_finite(spec, precision)
    if method == Method.DigammaInfinite:
        return eval_digamma_infinite(spec, precision=precision)
    if method == Method.Integral:
        return eval_integral_form(spec, precision=precision)
    return asymptotic(spec, DefaultOrder if order is None else order, flavor, precision).result()


def cmd_eval(args):
    method, order = args.method
    spec = SumSpec(args.family, args.n, args.phi, args.a, args.pv)
    res = evaluate(spec, method, order, args.flavor, args.precision)
    row = {'family': spec.family.value, 'n': spec.n, 'phi': float(spec.phi), 'a': float(spec.a), **res.row()}
    return records([row]), True


def cmd_asympt(args):
    series = asymptotic(SumSpec(args.family, args.n, args.phi, args.a), args.order, args.flavor, args.precision)
    res = series.result()
    row = {'family': args.family, 'n': args.n, 'phi': args.phi, 'a': args.a, 'regime': series.Regime.value, **res.row()}
    row.update({f'leading {key}': float(series.Kernel.out(v)) for key, v in series.Leading.items()})
    return records([row]), True


def bound_pairs(flavor: BoundFlavor, n, phi, a, precision):
    """ the bound pair and the direct value of the bounded sum """
    if flavor in (BoundFlavor.Harmonic, BoundFlavor.Log):
        return bounds_Sn(n, flavor, precision), S(n, 0, 1, 'wide')
    if flavor in Historical:
        return next(b for b in historical_bounds(n, precision) if b.Flavor == flavor), S(n, 0, 1, 'wide')
    if flavor == BoundFlavor.General:
        return bounds_Sn_phi_a(n, phi, a, precision), S(n, phi, a, 'wide')
    if flavor == BoundFlavor.Phi1:
        return bounds_Sn_phi1(n, phi, precision), S(n, phi, 1, 'wide')
    if flavor == BoundFlavor.Secant:
        return bounds_Cn(n, phi, a, precision), C(n, phi, a, 'wide')
    return bounds_Cn_phi1(n, phi, precision), C(n, phi, 1, 'wide')


def cmd_bounds(args):
    pair, exact = bound_pairs(BoundFlavor(args.flavor), args.n, args.phi, args.a, args.precision)
    row = {**pair.row(), 'sum': float(exact.Value), 'inside': exact.Value in pair, **{f'const {key}': v for key, v in pair.Constants.items()}}
    return records([row]), True


def cmd_identity_check(args):
    corpus = Corpus(args.verbose)
    if args.list:
        return records([{'check': c.Name, 'group': c.Group, 'inverted': c.Inverted, 'description': c.Description} for c in corpus.select(args.names, args.group)]), False
    results = corpus.run(args.draws, args.seed, args.names, args.group, prnt=True)
    failed = [r.name for r in results if not r.ok]
    if failed:
        error(f'{len(failed)} check(s) failed: {", ".join(failed)}')
    return records([r.row() for r in results]), False, 1 if failed else 0


def cmd_figure(args):
    return Figures(args.verbose)(args.which, args.nmax, args.nmin), False


def cmd_bench(args):
    figures = Figures(args.verbose)
    header, rows = figures.bench(args.nmax, args.reps)
    if len(rows) > 1:
        info(', '.join(f'{key} log-log slope {v:.2f}' for key, v in figures.slopes(rows).items()))
    return (header, rows), False
# endregion VERBS
# ----------------------------------------


Commands = {'eval': cmd_eval, 'asympt': cmd_asympt, 'bounds': cmd_bounds, 'identity-check': cmd_identity_check, 'figure': cmd_figure, 'bench': cmd_bench}


def main(argv=None) -> int:
    """ runs one verb and returns the exit code: 0 success, 1 failed checks, 2 domain error, 3 pole, 64 usage, 74 unwritable output """
    try:
        args = make_parser().parse_args(argv)
        args.precision = args.precision or 'native'
        table, single, *code = Commands[args.verb](args)
        write(render(*table, as_json=args.json, single=single), args.out)
        return code[0] if code else 0
    except TrigSumError as err:
        error(str(err))
        return err.ExitCode


if __name__ == '__main__':
    sys.exit(main())
