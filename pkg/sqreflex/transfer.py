"""
.. module:: transfer
    :platform: Unix, Windows
    :synopsis: Transfer curve of a separable polynomial: quadric system, pencil ranks, points and linear realisations

.. moduleauthor:: sqreflex developers

"""

import logging
import itertools
import functools
from collections import OrderedDict
from . import config
from . import gf
from . import polyring
from . import quotalg
from . import linalg
from . import hyperell
from .sqref import is_square_mod
from .polyring import Poly
from .exceptions import NotSeparable, DegreeTooSmall, NotCoprime, BudgetExceeded, ConsistencyError
from ._utilities import export, run_ordered

__all__ = ['QuadSystem', 'TransferPoints']

_LOGGER = logging.getLogger(__name__)


def _require_separable(f):
    if f.is_zero() or not polyring.is_squarefree(f):
        raise NotSeparable(str(f) + " is not separable")


class QuadSystem(object):
    """ The n-1 quadrics cutting out the transfer curve of (f, g).

    With :math:`\\vartheta = X + (f)` and :math:`s_k` the k-th coordinate in the power basis, the forms on
    :math:`E_f \\times E` are :math:`q_1(x, \\lambda) = s_1(g(\\vartheta) x^2) - \\lambda^2` and
    :math:`q_k(x, \\lambda) = s_k(g(\\vartheta) x^2)` for :math:`2 \\leq k \\leq n-1`. Coordinates are ordered
    :math:`(c_0, \\dots, c_{n-1}, \\lambda)`; the Gram matrix :math:`G` of q satisfies :math:`q(v) = v^T G v`.

    :param f: separable polynomial of degree n >= 2
    :type f: polyring.Poly
    :param g: polynomial coprime to f
    :type g: polyring.Poly
    :param gram: Gram matrices of q_1, ..., q_{n-1}
    :type gram: list
    """
    def __init__(self, f, g, gram):
        self._f = f
        self._g = g
        self._gram = gram

    def __str__(self):
        return "QuadSystem(f=" + str(self._f) + ", g=" + str(self._g) + ", forms=" + str(len(self._gram)) + ")"

    __repr__ = __str__

    def __len__(self):
        return len(self._gram)

    @property
    def f(self):
        return self._f

    @property
    def g(self):
        return self._g

    @property
    def field(self):
        return self._f.field

    @property
    def gram(self):
        """ Gram matrices of the quadrics.

        :getter: Gets the Gram matrices
        :type: list
        """
        return self._gram

    @property
    def dims(self):
        """ Number of forms and dimension of the space they live on.

        :getter: Gets (n - 1, n + 1)
        :type: tuple
        """
        return len(self._gram), self._f.degree + 1

    def evaluate(self, vector):
        """ Values of all forms at a coordinate vector. """
        return [linalg.quadratic_value(m, vector) for m in self._gram]

    def combination(self, coeffs):
        """ Gram matrix of :math:`\\sum_k c_k q_k`. """
        acc = None
        for c, m in zip(coeffs, self._gram):
            term = linalg.matrix_scale(m, c)
            acc = term if acc is None else linalg.matrix_add(acc, term)
        return acc

    def base_change(self, big):
        """ Gram matrices with entries mapped into an extension field. """
        if big == self.field:
            return [list(map(list, m)) for m in self._gram]
        embed = gf.embedding(self.field, big)
        return [[[embed(a) for a in row] for row in m] for m in self._gram]


@export
def build_system(f, g):
    """ Builds the quadric system of the transfer curve of (f, g).

    :param f: separable polynomial of degree at least 2
    :type f: polyring.Poly
    :param g: polynomial coprime to f
    :type g: polyring.Poly
    :rtype: QuadSystem
    :raises NotSeparable: f is not separable
    :raises DegreeTooSmall: deg f < 2
    :raises NotCoprime: gcd(f, g) is not a unit
    """
    _require_separable(f)
    n = f.degree
    if n < 2:
        raise DegreeTooSmall("The transfer curve needs deg f >= 2, got " + str(n))
    if not polyring.gcd(f, g).is_one():
        raise NotCoprime(str(f) + " and " + str(g) + " are not coprime")
    field = f.field
    alg = quotalg.QuotAlg(f)
    theta = alg.theta
    # coords[m][k] = s_k(g(theta) * theta^m) for 0 <= m <= 2n - 2
    coords = []
    value = alg(g)
    for _ in range(2 * n - 1):
        coords.append([value.rep.coeff(k) for k in range(n)])
        value = value * theta
    gram = []
    for k in range(1, n):
        m = [[field.zero for _ in range(n + 1)] for _ in range(n + 1)]
        for i in range(n):
            for j in range(n):
                m[i][j] = coords[i + j][k]
        if k == 1:
            m[n][n] = -field.one
        gram.append(m)
    return QuadSystem(f, g, gram)


def _projective_vectors(field, length):
    # One representative per line, first nonzero coordinate 1
    elems = list(field.elements())
    for lead in range(length):
        head = [field.zero] * lead + [field.one]
        for tail in itertools.product(elems, repeat=length - lead - 1):
            yield head + list(tail)


@export
def pencil_rank_check(system):
    """ Checks that every nonzero linear combination of the forms has rank at least 3.

    All :math:`(q^{n-1} - 1)/(q - 1)` projective combinations over the base field are enumerated.

    :param system: quadric system, or a list of Gram matrices over one field
    :type system: QuadSystem, list
    :rtype: bool
    """
    if isinstance(system, QuadSystem):
        mats = system.gram
        field = system.field
    else:
        mats = list(system)
        field = mats[0][0][0].field
    for coeffs in _projective_vectors(field, len(mats)):
        acc = None
        for c, m in zip(coeffs, mats):
            term = linalg.matrix_scale(m, c)
            acc = term if acc is None else linalg.matrix_add(acc, term)
        if linalg.matrix_rank(acc) < 3:
            _LOGGER.debug("Pencil member %s has rank below 3", [str(c) for c in coeffs])
            return False
    return True


class TransferPoints(object):
    """ Projective points of the transfer quadrics over an extension :math:`E' = \\mathbb{F}_{q^m}`.

    C'-points are all projective solutions; C-points have :math:`\\lambda \\neq 0` and x invertible in
    :math:`E'_f`.
    """
    def __init__(self, field, ext_degree, cprime, c):
        self._field = field
        self._ext_degree = ext_degree
        self._cprime = cprime
        self._c = c

    def __str__(self):
        return "TransferPoints(" + str(self._field) + ": " + str(len(self._cprime)) + " C', " + \
               str(len(self._c)) + " C)"

    __repr__ = __str__

    @property
    def field(self):
        return self._field

    @property
    def ext_degree(self):
        return self._ext_degree

    @property
    def cprime_points(self):
        """ All projective solutions.

        :getter: Gets the C'-points
        :type: list
        """
        return self._cprime

    @property
    def c_points(self):
        """ Solutions with nonzero last coordinate and invertible x.

        :getter: Gets the C-points
        :type: list
        """
        return self._c


def _extension(field, m):
    return gf.make_field(field.p, field.k * m)


def _chart_points(system, big, lead):
    # Points whose first nonzero coordinate sits at index lead
    n = system.f.degree
    mats = system.base_change(big)
    f_big = polyring.base_change(system.f, big)
    elems = list(big.elements())
    head = [big.zero] * lead + [big.one]
    out = []
    for tail in itertools.product(elems, repeat=n - lead):
        vec = head + list(tail)
        if any(linalg.quadratic_value(m, vec) for m in mats):
            continue
        x = Poly(big, vec[:n])
        is_c = bool(vec[n]) and not x.is_zero() and polyring.gcd(x, f_big).is_one()
        out.append((tuple(c.value for c in vec), is_c))
    return out


def _chart_worker(field_text, f_text, g_text, m, lead):
    field = gf.parse_field(field_text)
    system = build_system(polyring.parse_poly(field, f_text), polyring.parse_poly(field, g_text))
    return _chart_points(system, _extension(field, m), lead)


@export
def point_enum(system, ext_degree, **kwargs):
    """ Enumerates the projective points of the quadric system over :math:`\\mathbb{F}_{q^m}`.

    Keyword arguments:
        * ``budget``: largest admissible :math:`q^{m(n+1)}`. *Default: config.ENUM_BUDGET*
        * ``jobs``: number of worker processes, one affine chart per task. *Default: 1*

    :param system: quadric system
    :type system: QuadSystem
    :param ext_degree: extension degree m
    :type ext_degree: int
    :rtype: TransferPoints
    :raises BudgetExceeded: the enumeration is larger than the budget
    """
    budget = kwargs.get('budget', config.ENUM_BUDGET)
    jobs = kwargs.get('jobs', 1)
    field = system.field
    m = int(ext_degree)
    n = system.f.degree
    size = field.q ** (m * (n + 1))
    if size > budget:
        raise BudgetExceeded("Enumerating " + str(size) + " vectors over F_" + str(field.q) + "^" + str(m) +
                             " exceeds the budget of " + str(budget))
    big = _extension(field, m)
    charts = list(range(n + 1))
    if jobs is not None and jobs > 1:
        worker = functools.partial(_chart_worker, str(field), str(system.f), str(system.g), m)
        results = run_ordered(worker, charts, jobs=jobs)
    else:
        results = [_chart_points(system, big, lead) for lead in charts]
    cprime = []
    c = []
    for chart in results:
        for values, is_c in chart:
            pt = tuple(big.element(v) for v in values)
            cprime.append(pt)
            if is_c:
                c.append(pt)
    _LOGGER.debug("Transfer curve of (%s, %s) over %s: %d C', %d C", system.f, system.g, big, len(cprime), len(c))
    return TransferPoints(big, m, cprime, c)


def _parameter_witness(f, g, big):
    # Least a in E' with f(a) != 0 and (X - a) g a square modulo f over E'
    f_big = polyring.base_change(f, big)
    g_big = polyring.base_change(g, big)
    x = Poly.x(big)
    for a in big.elements():
        if f_big(a).is_zero():
            continue
        if is_square_mod((x - a) * g_big, f_big):
            return a
    return None


@export
def equivalence_check(f, g, ext_degree, **kwargs):
    """ Computes both sides of the point criterion of the transfer curve over :math:`E' = \\mathbb{F}_{q^m}`.

    The curve has a C-point over E' iff some :math:`a \\in E'` has :math:`f(a) \\neq 0` and :math:`(X - a) g` a square
    modulo f in :math:`E'[X]`. The left side is decided by :func:`point_enum`, the right side by scanning E'.

    Keyword arguments:
        * ``points``: result of :func:`point_enum` over the same extension, reused instead of enumerating again

    Other keyword arguments are passed to :func:`point_enum`.

    :return: dictionary with keys ``lhs``, ``rhs``, ``agree``, ``ext_degree``, ``point`` and ``parameter``
    :rtype: dict
    :raises ConsistencyError: the two sides disagree
    :raises ValueError: ``points`` belong to another extension degree
    """
    points = kwargs.pop('points', None)
    if points is None:
        points = point_enum(build_system(f, g), ext_degree, **kwargs)
    elif points.ext_degree != int(ext_degree):
        raise ValueError("Points were enumerated over degree " + str(points.ext_degree) + ", not " + str(ext_degree))
    a = _parameter_witness(f, g, points.field)
    lhs = bool(points.c_points)
    rhs = a is not None
    if lhs != rhs:
        raise ConsistencyError("Transfer curve of (" + str(f) + ", " + str(g) + ") over " + str(points.field) +
                               ": points " + str(lhs) + ", parameter " + str(rhs))
    return dict(lhs=lhs, rhs=rhs, agree=True, ext_degree=int(ext_degree),
                point=points.c_points[0] if lhs else None, parameter=a)


@export
def first_point_extension(f, g, max_degree, **kwargs):
    """ Least m with a C-point over :math:`\\mathbb{F}_{q^m}`.

    Extensions within the enumeration budget are decided by :func:`point_enum`; larger ones by the parameter
    criterion of :func:`equivalence_check`.

    :return: least extension degree, or None when there is none up to ``max_degree``
    :rtype: int
    """
    system = build_system(f, g)
    for m in range(1, int(max_degree) + 1):
        try:
            found = bool(point_enum(system, m, **kwargs).c_points)
        except BudgetExceeded:
            _LOGGER.debug("Degree %d over budget; using the parameter criterion", m)
            found = _parameter_witness(f, g, _extension(f.field, m)) is not None
        if found:
            return m
    return None


@export
def linear_realisation_scan(f):
    """ For each square class of :math:`E_f`, the least :math:`a \\in E` with
    :math:`\\vartheta - a \\in \\alpha (E_f^\\times)^2`.

    Over a small field only q values of a are available for :math:`2^r` classes, so some entries may be None.

    :param f: separable nonconstant polynomial
    :type f: polyring.Poly
    :return: ordered map from class representative to a or None
    :rtype: collections.OrderedDict
    :raises NotSeparable: f is not separable
    """
    _require_separable(f)
    if f.is_constant():
        raise NotSeparable("Constant polynomial " + str(f) + " has no square classes")
    alg = quotalg.QuotAlg(f)
    reps = quotalg.square_class_reps(alg)
    found = OrderedDict((alpha, None) for alpha in reps)
    classes = dict((tuple(quotalg.is_square_class(alpha)), alpha) for alpha in reps)
    theta = alg.theta
    for a in f.field.elements():
        if f(a).is_zero():
            continue
        alpha = classes[tuple(quotalg.is_square_class(theta - a))]
        if found[alpha] is None:
            found[alpha] = a
    return found


@export
def linear_realisation_report(f, **kwargs):
    """ Checks the hypotheses under which linear realisations certify square-reflexivity: every square class is
    realised by some :math:`\\vartheta - a`, and :math:`Y^2 = f(X)` has a point of odd degree.

    :return: dictionary with keys ``classes``, ``realised``, ``all_realised``, ``odd_degree`` and ``hypothesis``
    :rtype: dict
    """
    scan = linear_realisation_scan(f)
    realised = sum(1 for a in scan.values() if a is not None)
    odd = hyperell.min_odd_degree(f, **kwargs)
    all_realised = realised == len(scan)
    return dict(classes=len(scan), realised=realised, all_realised=all_realised, odd_degree=odd,
                hypothesis=all_realised and odd is not None, scan=scan)
