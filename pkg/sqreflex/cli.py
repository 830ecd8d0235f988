"""
.. module:: cli
    :platform: Unix, Windows
    :synopsis: Command-line application

.. moduleauthor:: sqreflex developers

"""

import sys
import time
import logging
import argparse
from . import __version__
from . import config
from . import gf
from . import polyring
from . import places
from . import sqref
from . import qforms
from . import hyperell
from . import transfer
from . import corpus
from . import exchange
from .exceptions import SqreflexError, ParseError, NonPrime, EvenCharacteristic, ConsistencyError

__all__ = []

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_REFUTATION = 2
EXIT_USAGE = 64

REFUTATION_BANNER = """
************************************************************************
*  CONSISTENCY FAILURE: a refutation was found over a finite field.    *
*  Every square-free polynomial over a finite field is square-         *
*  reflexive, so this indicates a defect in the implementation.        *
************************************************************************
"""


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--field', default='gf(3)', help="base field, e.g. gf(3), gf(9), gf(3^2)")
    common.add_argument('--seed', type=int, default=config.DEFAULT_SEED, help="global seed")
    common.add_argument('--jobs', type=int, default=1, help="number of worker processes")
    common.add_argument('--json', action='store_true', help="write JSON reports")
    common.add_argument('--timing', action='store_true', help="report wall time")
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging on stderr")
    return common


def build_parser():
    """ Builds the argument parser of the command-line application.

    :rtype: argparse.ArgumentParser
    """
    common = _common_options()
    parser = _ArgumentParser(prog='sqreflex', description="Square-reflexivity and quadratic forms over F_q(X)")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subs = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)

    p = subs.add_parser('certify-sqref', parents=[common], help="certify square-reflexivity of f")
    p.add_argument('--poly', required=True, help="square-free polynomial")
    p.add_argument('--exhaustive', action='store_true', help="use the bounded exhaustive search only")
    p.add_argument('--kornblum-cap', type=int, default=None, help="initial degree cap of the Kornblum search")
    p.add_argument('--witness-cap', type=int, default=None, help="degree cap of the exhaustive search")
    p.add_argument('--out', default=None, help="write the certificate to this file")

    p = subs.add_parser('isotropy', parents=[common], help="decide isotropy of a diagonal form")
    p.add_argument('--form', required=True, help="entries separated by ';'")
    p.add_argument('--witness-cap', dest='vector_cap', type=int, nargs='?', const=config.VECTOR_CAP, default=None,
                   metavar='N', help="search an isotropic vector of degree at most N (default N: %(const)s)")

    p = subs.add_parser('ramify', parents=[common], help="ramification of the symbol {f, g}")
    p.add_argument('--f', required=True, help="nonzero rational function")
    p.add_argument('--g', required=True, help="nonzero rational function")

    p = subs.add_parser('kornblum', parents=[common], help="irreducible polynomial in a residue class")
    p.add_argument('--f', required=True, help="modulus")
    p.add_argument('--g0', required=True, help="residue class")
    p.add_argument('--parity', choices=('even', 'odd'), default='odd', help="degree parity")
    p.add_argument('--cap', type=int, required=True, help="degree cap")

    p = subs.add_parser('hyperell', parents=[common], help="point of odd degree on Y^2 = f(X)")
    p.add_argument('--poly', required=True, help="square-free polynomial")
    p.add_argument('--cap', type=int, default=None, help="largest degree searched")

    p = subs.add_parser('transfer-curve', parents=[common], help="transfer curve of (f, g)")
    p.add_argument('--f', required=True, help="separable polynomial")
    p.add_argument('--g', default='1', help="polynomial coprime to f")
    p.add_argument('--ext', type=int, default=1, help="extension degree of the point enumeration")
    p.add_argument('--budget', type=int, default=config.ENUM_BUDGET, help="enumeration budget")

    p = subs.add_parser('lgp-scan', parents=[common], help="local versus slot verdicts on random 4-dim forms")
    p.add_argument('--degree', type=int, default=3, help="largest entry degree")
    p.add_argument('--samples', type=int, default=500, help="number of forms")

    p = subs.add_parser('corpus', parents=[common], help="verification scan over a corpus")
    p.add_argument('--kind', choices=corpus.KINDS, default='sqref', help="corpus kind")
    p.add_argument('--degree', type=int, required=True, help="polynomial degree")
    p.add_argument('--samples', type=int, default=500, help="number of random items")
    return parser


def _emit(args, obj, text, **kwargs):
    if args.json:
        print(exchange.export_json_str(obj, **kwargs))
    else:
        print(text)


def _cmd_certify(args, field, run_config):
    f = polyring.parse_poly(field, args.poly)
    options = run_config.search_options()
    options['jobs'] = run_config.jobs
    options['exhaustive'] = args.exhaustive
    result = sqref.certify(f, **options)
    if not result.is_certificate:
        sys.stderr.write(REFUTATION_BANNER)
        _emit(args, result, str(result))
        return EXIT_REFUTATION
    if not sqref.verify_certificate(result):
        raise ConsistencyError("Certificate for " + str(f) + " fails re-verification")
    if args.out is not None:
        exchange.export_json(result, args.out)
    lines = [str(result)] + ["  " + str(e) for e in result]
    _emit(args, result, "\n".join(lines))
    return EXIT_OK


def _cmd_isotropy(args, field, run_config):
    form = qforms.parse_form(field, args.form)
    options = run_config.search_options()
    options.pop('witness_cap', None)
    if args.vector_cap is not None:
        options['witness_cap'] = args.vector_cap
    verdict = qforms.is_isotropic(form, **options)
    text = str(form) + ": " + str(verdict)
    if verdict.witness is not None:
        text += "\n  witness: (" + ", ".join(str(x) for x in verdict.witness) + ")"
    _emit(args, verdict, text, form=form)
    return EXIT_OK


def _cmd_ramify(args, field, run_config):
    f = places.parse_ratfunc(field, args.f)
    g = places.parse_ratfunc(field, args.g)
    rho = places.ramify(f, g, field=field)
    _emit(args, rho, "{" + ", ".join(str(p) for p in rho.support) + "}")
    return EXIT_OK


def _cmd_kornblum(args, field, run_config):
    f = polyring.parse_poly(field, args.f)
    g0 = polyring.parse_poly(field, args.g0)
    parity = 1 if args.parity == 'odd' else 0
    q = sqref.kornblum_find(f, g0, parity, args.cap, seed=run_config.seed)
    data = dict(type='kornblum', field=str(field), f=str(f), g0=str(g0), parity=args.parity, cap=args.cap,
                q=str(q), degree=q.degree)
    _emit(args, data, str(q))
    return EXIT_OK


def _cmd_hyperell(args, field, run_config):
    f = polyring.parse_poly(field, args.poly)
    if args.cap is None:
        cap, complete = hyperell.odd_degree_cap(f)
    else:
        cap, complete = args.cap, None
    pt = hyperell.odd_point_search(f, cap, jobs=run_config.jobs)
    if args.json:
        print(exchange.export_json_str(exchange.point_report(pt, f, cap, complete)))
    elif pt is None:
        print("no point of odd degree up to " + str(cap) + (" (complete)" if complete else ""))
    else:
        print("degree " + str(pt.degree) + ": " + str(pt))
    return EXIT_OK


def _cmd_transfer(args, field, run_config):
    f = polyring.parse_poly(field, args.f)
    g = polyring.parse_poly(field, args.g)
    system = transfer.build_system(f, g)
    pencil_ok = transfer.pencil_rank_check(system)
    points = transfer.point_enum(system, args.ext, budget=args.budget, jobs=run_config.jobs)
    eq = transfer.equivalence_check(f, g, args.ext, points=points)
    if args.json:
        print(exchange.export_json_str(exchange.transfer_report(system, pencil_ok, points, eq)))
    else:
        print(str(system))
        print("  pencil rank >= 3: " + str(pencil_ok))
        print("  points over " + str(points.field) + ": " + str(len(points.cprime_points)) + " C', " +
              str(len(points.c_points)) + " C")
        print("  parameter: " + str(eq['parameter']) + ", agree: " + str(eq['agree']))
    return EXIT_OK


def _run_corpus(args, run_config, kind, degree):
    report = corpus.corpus_scan(kind, degree, run_config, samples=args.samples, timing=args.timing)
    _emit(args, report, str(report))
    if report.counters['refuted']:
        if kind == 'sqref':
            sys.stderr.write(REFUTATION_BANNER)
            return EXIT_REFUTATION
        return EXIT_COMPUTATION
    if report.counters['errors']:
        return EXIT_COMPUTATION
    return EXIT_OK


def _cmd_lgp_scan(args, field, run_config):
    return _run_corpus(args, run_config, 'lgp4', args.degree)


def _cmd_corpus(args, field, run_config):
    return _run_corpus(args, run_config, args.kind, args.degree)


_COMMANDS = {
    'certify-sqref': _cmd_certify,
    'isotropy': _cmd_isotropy,
    'ramify': _cmd_ramify,
    'kornblum': _cmd_kornblum,
    'hyperell': _cmd_hyperell,
    'transfer-curve': _cmd_transfer,
    'lgp-scan': _cmd_lgp_scan,
    'corpus': _cmd_corpus,
}


def _run_config(args, field):
    vector_cap = getattr(args, 'vector_cap', None)
    return config.RunConfig(
        field,
        seed=args.seed,
        jobs=args.jobs,
        output='json' if args.json else 'text',
        kornblum_cap=getattr(args, 'kornblum_cap', None),
        witness_cap=getattr(args, 'witness_cap', None),
        vector_cap=config.VECTOR_CAP if vector_cap is None else vector_cap,
        budget=getattr(args, 'budget', config.ENUM_BUDGET),
    )


def run(argv):
    """ Runs the command-line application.

    :param argv: arguments without the program name
    :type argv: list
    :return: exit code; 0 on success, 1 on a computation error, 2 on a refutation, 64 on a usage error
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write("sqreflex: error: " + str(e) + "\n")
        return EXIT_USAGE

    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.time()
    try:
        field = gf.parse_field(args.field)
        code = _COMMANDS[args.command](args, field, _run_config(args, field))
    except (ParseError, NonPrime, EvenCharacteristic) as e:
        sys.stderr.write("sqreflex: error: " + str(e) + "\n")
        return EXIT_USAGE
    except SqreflexError as e:
        _LOGGER.debug("Computation failed", exc_info=True)
        sys.stderr.write("sqreflex: " + type(e).__name__ + ": " + str(e) + "\n")
        return EXIT_COMPUTATION
    if args.timing:
        _LOGGER.warning("%s finished in %.3f s", args.command, time.time() - start)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
