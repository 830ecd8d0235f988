"""
.. module:: hyperell
    :platform: Unix, Windows
    :synopsis: Points of odd degree on the affine hyperelliptic curve Y^2 = f(X)

.. moduleauthor:: sqreflex developers

"""

import logging
import functools
from . import gf
from . import polyring
from . import quotalg
from .exceptions import ConstantPolynomial, NotSquareFree, ConsistencyError
from ._utilities import export, run_ordered

__all__ = ['OddPoint']

_LOGGER = logging.getLogger(__name__)


class OddPoint(object):
    """ Closed point of odd degree on :math:`Y^2 = f(X)`.

    The x-coordinate is the class of X in :math:`E_p`, p its minimal polynomial; y is the canonical square root of
    :math:`f(\\bar{X})` in :math:`E_p`.

    :param f: curve polynomial
    :type f: polyring.Poly
    :param p: monic irreducible polynomial of odd degree
    :type p: polyring.Poly
    :param y: y-coordinate in the residue field of p
    :type y: quotalg.AlgElem
    """
    def __init__(self, f, p, y):
        self._f = f
        self._p = p
        self._y = y

    def __str__(self):
        return "(X mod " + str(self._p) + ", " + str(self._y) + ")"

    __repr__ = __str__

    @property
    def f(self):
        return self._f

    @property
    def degree(self):
        """ Degree of the point.

        :getter: Gets the degree
        :type: int
        """
        return self._p.degree

    @property
    def p(self):
        """ Minimal polynomial of the x-coordinate.

        :getter: Gets the place polynomial
        :type: polyring.Poly
        """
        return self._p

    @property
    def y(self):
        return self._y

    def verify(self):
        """ Checks :math:`y^2 = f(\\bar{X})` in :math:`E_p`. """
        res = quotalg.residue_field(self._p)
        return self._y * self._y == res(self._f)


def _require_curve(f):
    if f.is_constant():
        raise ConstantPolynomial("Curve polynomial " + str(f) + " is constant")
    if not polyring.is_squarefree(f):
        raise NotSquareFree(str(f) + " is not square-free")


def _point_over(f, p):
    res = quotalg.residue_field(p)
    value = res(f)
    if value.is_zero() or res.is_square(value):
        return OddPoint(f, p, res.sqrt(value))
    return None


def _scan_degree(f, d):
    for p in polyring.monic_irreducibles(f.field, d):
        pt = _point_over(f, p)
        if pt is not None:
            return pt
    return None


def _scan_worker(field_text, f_text, d):
    field = gf.parse_field(field_text)
    pt = _scan_degree(polyring.parse_poly(field, f_text), d)
    return None if pt is None else str(pt.p)


@export
def odd_point_search(f, degree_cap, **kwargs):
    """ First point of odd degree at most the cap, in canonical order.

    Odd degrees d = 1, 3, ... are scanned in turn; for each, the monic irreducible p of degree d are enumerated and
    f is tested for being zero or a square modulo p.

    Keyword arguments:
        * ``jobs``: number of worker processes, one degree per task. *Default: 1*

    :param f: nonconstant square-free polynomial
    :type f: polyring.Poly
    :param degree_cap: largest degree scanned
    :type degree_cap: int
    :return: point, or None when there is none up to the cap
    :rtype: OddPoint
    :raises ConstantPolynomial: f is constant
    :raises NotSquareFree: f is not square-free
    """
    _require_curve(f)
    degrees = list(range(1, int(degree_cap) + 1, 2))
    jobs = kwargs.get('jobs', 1)
    if jobs is not None and jobs > 1:
        worker = functools.partial(_scan_worker, str(f.field), str(f))
        for d, found in zip(degrees, run_ordered(worker, degrees, jobs=jobs)):
            if found is not None:
                return _point_over(f, polyring.parse_poly(f.field, found))
        return None
    for d in degrees:
        pt = _scan_degree(f, d)
        if pt is not None:
            _LOGGER.debug("Odd point of degree %d on Y^2 = %s", d, f)
            return pt
    return None


@export
def odd_degree_cap(f):
    """ Search cap for :func:`min_odd_degree` and whether a search up to it is complete.

    When deg f is even and lc(f) is not a square, a curve with a point of odd degree has one of degree at most
    deg(f)/2, so that search is complete. Otherwise the cap is deg f.

    :return: (cap, complete)
    :rtype: tuple
    """
    _require_curve(f)
    if f.degree % 2 == 0 and not gf.is_square(f.lc):
        return f.degree // 2, True
    return f.degree, False


@export
def min_odd_degree(f, **kwargs):
    """ Least degree of a point of odd degree, searched up to :func:`odd_degree_cap`.

    :param f: nonconstant square-free polynomial
    :type f: polyring.Poly
    :return: odd degree, or None when no point exists up to the cap
    :rtype: int
    """
    cap, _ = odd_degree_cap(f)
    pt = odd_point_search(f, cap, **kwargs)
    return None if pt is None else pt.degree


@export
def check_odd_point(f, **kwargs):
    """ Finds a point of odd degree and fails loudly when there is none.

    Over a finite field every square-free polynomial is square-reflexive, so every such curve has a point of odd
    degree.

    :return: verified point
    :rtype: OddPoint
    :raises ConsistencyError: no point up to the cap, or a point failing verification
    """
    cap, _ = odd_degree_cap(f)
    pt = odd_point_search(f, cap, **kwargs)
    if pt is None:
        raise ConsistencyError("Y^2 = " + str(f) + " has no point of odd degree up to " + str(cap))
    if not pt.verify():
        raise ConsistencyError("Point " + str(pt) + " is not on Y^2 = " + str(f))
    return pt
