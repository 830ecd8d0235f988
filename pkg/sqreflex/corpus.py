"""
.. module:: corpus
    :platform: Unix, Windows
    :synopsis: Exhaustive and seeded-random verification scans over families of polynomials and forms

.. moduleauthor:: sqreflex developers

"""

import time
import random
import logging
import functools
from . import config
from . import gf
from . import polyring
from . import places
from . import sqref
from . import qforms
from . import hyperell
from . import transfer
from .polyring import Poly
from .exceptions import SqreflexError, BudgetExceeded
from ._utilities import export, derive_seed, run_ordered

__all__ = ['CorpusReport']

_LOGGER = logging.getLogger(__name__)

KINDS = ('sqref', 'lgp4', 'reciprocity', 'hyperell', 'transfer')

STATUS_CERTIFIED = 'certified'
STATUS_REFUTED = 'refuted'
STATUS_ERROR = 'error'


class CorpusReport(object):
    """ Aggregate of a corpus scan.

    Every item ends up in exactly one of the counters ``certified``, ``refuted`` and ``errors``.
    """
    def __init__(self, kind, field, parameters, results, wall_time=None):
        self._kind = kind
        self._field = field
        self._parameters = parameters
        self._results = results
        self._wall_time = wall_time
        self._counters = dict(certified=0, refuted=0, errors=0)
        for res in results:
            if res['status'] == STATUS_CERTIFIED:
                self._counters['certified'] += 1
            elif res['status'] == STATUS_REFUTED:
                self._counters['refuted'] += 1
            else:
                self._counters['errors'] += 1

    def __str__(self):
        c = self._counters
        return "{} over {}: {} items, {} certified, {} refuted, {} errors".format(
            self._kind, self._field, len(self._results), c['certified'], c['refuted'], c['errors'])

    __repr__ = __str__

    def __len__(self):
        return len(self._results)

    @property
    def kind(self):
        return self._kind

    @property
    def field(self):
        return self._field

    @property
    def parameters(self):
        return self._parameters

    @property
    def results(self):
        """ Per-item results in scan order.

        :getter: Gets the results
        :type: list
        """
        return self._results

    @property
    def counters(self):
        return dict(self._counters)

    @property
    def wall_time(self):
        """ Elapsed seconds, recorded only when timing was requested.

        :getter: Gets the wall time
        :type: float
        """
        return self._wall_time

    @property
    def all_certified(self):
        return self._counters['certified'] == len(self._results)


def _random_poly(rng, field, max_degree):
    while True:
        d = rng.randint(0, max_degree)
        coeffs = [rng.randrange(field.q) for _ in range(d + 1)]
        f = Poly.from_indices(field, tuple(coeffs))
        if not f.is_zero():
            return f


def _random_squarefree_poly(rng, field, max_degree):
    while True:
        f = _random_poly(rng, field, max_degree)
        if polyring.is_squarefree(f):
            return f


def _squarefree_polys(field, degree):
    for f in polyring.polys_of_degree(field, degree):
        if polyring.is_squarefree(f):
            yield f


def _check_budget(count, limit):
    if count > limit:
        raise BudgetExceeded("Corpus of " + str(count) + " items exceeds the budget of " + str(limit))


def _items(kind, field, degree, seed, samples, limit):
    if kind in ('sqref', 'hyperell', 'transfer'):
        _check_budget((field.q - 1) * field.q ** degree, limit)
        if kind == 'transfer':
            polys = [f for f in _squarefree_polys(field, degree) if f.lc.is_one()]
        else:
            polys = list(_squarefree_polys(field, degree))
        return [str(f) for f in polys]
    _check_budget(samples, limit)
    rng = random.Random(derive_seed(seed, kind, field, degree))
    items = []
    for _ in range(samples):
        if kind == 'lgp4':
            items.append("; ".join(str(_random_squarefree_poly(rng, field, degree)) for _ in range(4)))
        else:
            items.append(str(_random_poly(rng, field, degree)) + " | " + str(_random_poly(rng, field, degree)))
    return items


def _scan_sqref(field, item, options):
    f = polyring.parse_poly(field, item)
    result = sqref.certify(f, **options)
    if not result.is_certificate:
        return STATUS_REFUTED, "class " + str(result.alpha) + " has no witness"
    if not sqref.verify_certificate(result):
        return STATUS_REFUTED, "certificate fails verification"
    return STATUS_CERTIFIED, str(len(result)) + " classes"


def _scan_lgp4(field, item, options):
    form = qforms.parse_form(field, item)
    report = qforms.lgp_cross_check(form, **options)
    verdict = "isotropic" if report['local'] else "anisotropic at " + str(report['refinement_place'])
    if not report['agree']:
        return STATUS_REFUTED, "local " + str(report['local']) + ", slot " + str(report['slot'])
    if not report['local'] and report['refinement_place'] is None:
        return STATUS_REFUTED, "no local obstruction on the refined place set"
    return STATUS_CERTIFIED, verdict


def _scan_reciprocity(field, item, options):
    f_text, g_text = item.split('|')
    rho = places.ramify(polyring.parse_poly(field, f_text.strip()), polyring.parse_poly(field, g_text.strip()))
    if not rho.is_valid():
        return STATUS_REFUTED, "odd support " + str(rho)
    return STATUS_CERTIFIED, str(len(rho)) + " places"


def _scan_hyperell(field, item, options):
    f = polyring.parse_poly(field, item)
    pt = hyperell.check_odd_point(f)
    return STATUS_CERTIFIED, "degree " + str(pt.degree)


def _scan_transfer(field, item, options):
    f = polyring.parse_poly(field, item)
    if f.degree < 2:
        return STATUS_CERTIFIED, "degree below 2"
    x = Poly.x(field)
    details = []
    for g in (Poly.constant(field, 1), x + 1):
        if not polyring.gcd(f, g).is_one():
            continue
        system = transfer.build_system(f, g)
        if not transfer.pencil_rank_check(system):
            return STATUS_REFUTED, "pencil of (" + str(f) + ", " + str(g) + ") has a member of rank below 3"
        eq = transfer.equivalence_check(f, g, 1, **options)
        details.append("g=" + str(g) + ": " + ("point" if eq['lhs'] else "no point"))
    return STATUS_CERTIFIED, "; ".join(details)


_SCANNERS = dict(
    sqref=_scan_sqref,
    lgp4=_scan_lgp4,
    reciprocity=_scan_reciprocity,
    hyperell=_scan_hyperell,
    transfer=_scan_transfer,
)


def _scan_worker(kind, field_text, options, item):
    # Runs in worker processes, so everything arrives as text
    field = gf.parse_field(field_text)
    try:
        status, detail = _SCANNERS[kind](field, item, options)
    except SqreflexError as e:
        status, detail = STATUS_ERROR, type(e).__name__ + ": " + str(e)
    return dict(item=item, status=status, detail=detail)


@export
def corpus_scan(kind, degree, run_config, **kwargs):
    """ Runs a verification scan over a corpus.

    Kinds:
        * ``sqref``: certifies every square-free polynomial of the degree
        * ``lgp4``: seeded-random 4-dimensional forms with square-free entries of degree at most ``degree``; the
          local scan and the slot-partner construction must agree
        * ``reciprocity``: seeded-random symbol pairs; every ramification support must be even
        * ``hyperell``: every square-free polynomial of the degree has a point of odd degree
        * ``transfer``: pencil rank and point criterion for every monic separable polynomial of the degree, with
          g = 1 and g = X + 1 when coprime

    Keyword arguments:
        * ``samples``: number of random items. *Default: 500*
        * ``limit``: largest corpus size. *Default: config.CORPUS_BUDGET*
        * ``timing``: record the wall time in the report. *Default: False*

    :param kind: corpus kind
    :type kind: str
    :param degree: degree of the corpus polynomials
    :type degree: int
    :param run_config: run configuration
    :type run_config: config.RunConfig
    :rtype: CorpusReport
    :raises BudgetExceeded: the corpus is larger than the limit
    """
    if kind not in _SCANNERS:
        raise ValueError("Unknown corpus kind '" + str(kind) + "'; expected one of " + ", ".join(KINDS))
    samples = int(kwargs.get('samples', 500))
    limit = int(kwargs.get('limit', config.CORPUS_BUDGET))
    timing = kwargs.get('timing', False)
    field = run_config.field
    start = time.time()
    items = _items(kind, field, int(degree), run_config.seed, samples, limit)
    options = run_config.search_options()
    if kind == 'transfer':
        options = dict(budget=run_config.budget)
    elif kind in ('reciprocity', 'hyperell'):
        options = {}
    _LOGGER.info("Scanning %d %s items over %s", len(items), kind, field)
    worker = functools.partial(_scan_worker, kind, str(field), options)
    results = run_ordered(worker, items, jobs=run_config.jobs)
    elapsed = time.time() - start
    _LOGGER.info("Corpus %s over %s finished in %.2f s", kind, field, elapsed)
    parameters = dict(degree=int(degree), seed=run_config.seed)
    if kind in ('lgp4', 'reciprocity'):
        parameters['samples'] = samples
    report = CorpusReport(kind, field, parameters, results, wall_time=elapsed if timing else None)
    for res in results:
        if res['status'] != STATUS_CERTIFIED:
            _LOGGER.warning("%s %s: %s", res['status'], res['item'], res['detail'])
    return report
