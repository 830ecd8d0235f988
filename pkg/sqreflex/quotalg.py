"""
.. module:: quotalg
    :platform: Unix, Windows
    :synopsis: Quotient algebras E[X]/(f), residue fields and square classes

.. moduleauthor:: sqreflex developers

"""

import itertools
from functools import lru_cache
from . import config
from . import gf
from . import polyring
from .polyring import Poly
from .exceptions import ZeroPolynomial, NotSquareFree, NonInvertible, ZeroInput, NotASquare
from ._utilities import export

__all__ = ['QuotAlg', 'AlgElem', 'ResidueField']


class QuotAlg(object):
    """ The quotient algebra :math:`E_f = E[X]/(f)`.

    The algebra depends only on the ideal :math:`(f)`, so elements are reduced modulo the monic associate of ``f``.
    The leading coefficient is kept separately because it enters the norm condition of square-reflexivity.
    A constant ``f`` gives the zero ring.

    Keyword arguments:
        * ``seed``: global seed for the factorization. *Default: config.DEFAULT_SEED*

    :param f: defining polynomial
    :type f: polyring.Poly
    """
    def __init__(self, f, **kwargs):
        if f.is_zero():
            raise ZeroPolynomial("Quotient by the zero polynomial")
        self._field = f.field
        self._f = f
        self._monic = f.monic()
        self._seed = kwargs.get('seed', config.DEFAULT_SEED)
        self._factorization = kwargs.get('factorization', None)

    def __str__(self):
        return "E[X]/(" + str(self._f) + ") over " + str(self._field)

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, QuotAlg):
            return NotImplemented
        return self._field == other._field and self._monic == other._monic

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._field, self._monic))

    def __call__(self, value):
        """ Reduces a polynomial, field element or integer into the algebra. """
        if isinstance(value, AlgElem):
            if value.algebra != self:
                raise ValueError("Element belongs to a different algebra")
            return value
        if not isinstance(value, Poly):
            value = Poly.constant(self._field, value)
        return AlgElem(self, value % self._monic)

    @property
    def field(self):
        """ Base field :math:`E`.

        :getter: Gets the base field
        :type: gf.FieldDesc
        """
        return self._field

    @property
    def f(self):
        """ Defining polynomial, as given.

        :getter: Gets the defining polynomial
        :type: polyring.Poly
        """
        return self._f

    @property
    def monic_f(self):
        """ Monic associate of the defining polynomial.

        :getter: Gets the monic associate
        :type: polyring.Poly
        """
        return self._monic

    @property
    def lc(self):
        """ Leading coefficient of the defining polynomial.

        :getter: Gets the leading coefficient
        :type: gf.FieldElem
        """
        return self._f.lc

    @property
    def degree(self):
        """ Dimension over the base field.

        :getter: Gets the dimension
        :type: int
        """
        return self._monic.degree

    @property
    def factorization(self):
        """ Factorization of the monic associate, computed on first access.

        :getter: Gets the factorization
        :type: polyring.Factorization
        """
        if self._factorization is None:
            self._factorization = polyring.factor(self._monic, seed=self._seed)
        return self._factorization

    @property
    def support(self):
        """ Monic irreducible factors in canonical place order.

        :getter: Gets the support
        :type: list
        """
        return self.factorization.support

    def is_squarefree(self):
        return all(mult == 1 for _, mult in self.factorization)

    @property
    def one(self):
        return self(1)

    @property
    def zero(self):
        return AlgElem(self, Poly(self._field))

    @property
    def theta(self):
        """ The class :math:`\\vartheta = X + (f)`.

        :getter: Gets the class of X
        :type: AlgElem
        """
        return self(Poly.x(self._field))

    def elements(self):
        """ Generates all elements in canonical polynomial order of their representatives, zero first. """
        yield self.zero
        for rep in polyring.polys_up_to_degree(self._field, self.degree - 1):
            yield AlgElem(self, rep)

    def units(self):
        """ Generates the invertible elements in canonical order. """
        for x in self.elements():
            if x.is_invertible():
                yield x


class AlgElem(object):
    """ Element of a quotient algebra, represented by its reduced polynomial. """
    __slots__ = ('_alg', '_rep')

    def __init__(self, algebra, rep):
        self._alg = algebra
        self._rep = rep

    def __str__(self):
        return polyring.format_poly(self._rep)

    def __repr__(self):
        return "AlgElem(" + str(self) + " mod " + str(self._alg.monic_f) + ")"

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            if other._alg != self._alg:
                raise ValueError("Elements belong to different algebras")
            return other._rep
        if isinstance(other, (Poly, gf.FieldElem, int)):
            return self._alg(other)._rep
        return None

    def _new(self, rep):
        return AlgElem(self._alg, rep % self._alg.monic_f)

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return AlgElem(self._alg, self._rep + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return AlgElem(self._alg, self._rep - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return AlgElem(self._alg, b - self._rep)

    def __neg__(self):
        return AlgElem(self._alg, -self._rep)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._new(self._rep * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * AlgElem(self._alg, b).inverse()

    def __pow__(self, n):
        n = int(n)
        base = self.inverse() if n < 0 else self
        return AlgElem(self._alg, base._rep.powmod(abs(n), self._alg.monic_f))

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._rep == b

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self._rep.sort_key() < self._coerce(other).sort_key()

    def __hash__(self):
        return hash(self._rep)

    def __bool__(self):
        return not self._rep.is_zero()

    __nonzero__ = __bool__

    @property
    def algebra(self):
        """ Algebra the element belongs to.

        :getter: Gets the algebra
        :type: QuotAlg
        """
        return self._alg

    @property
    def rep(self):
        """ Reduced representative.

        :getter: Gets the representative polynomial
        :type: polyring.Poly
        """
        return self._rep

    def is_zero(self):
        return self._rep.is_zero()

    def is_one(self):
        return self._rep.is_one() or self._alg.degree == 0

    def is_invertible(self):
        if self._alg.degree == 0:
            return True
        return polyring.gcd(self._rep, self._alg.monic_f).is_one()

    def inverse(self):
        """ Multiplicative inverse.

        :raises NonInvertible: the element is a zero divisor
        """
        if self._alg.degree == 0:
            return self
        return AlgElem(self._alg, polyring.inverse_mod(self._rep, self._alg.monic_f))


class ResidueField(QuotAlg):
    """ Residue field :math:`E_p = E[X]/(p)` of a monic irreducible polynomial.

    Elements are enumerated in canonical polynomial order of their representatives, which fixes the canonical
    non-square and the canonical square root.

    :param p: monic irreducible polynomial
    :type p: polyring.Poly
    """
    def __init__(self, p):
        if p.is_constant() or not p.lc.is_one() or not polyring.is_irreducible(p):
            raise ValueError(str(p) + " is not a monic irreducible polynomial")
        super(ResidueField, self).__init__(p, factorization=polyring.Factorization(p.field.one, [(p, 1)]))
        self._order = p.field.q ** p.degree
        self._nonsquare = None

    def __str__(self):
        return "E[X]/(" + str(self._f) + ")"

    @property
    def order(self):
        """ Number of elements.

        :getter: Gets the field order
        :type: int
        """
        return self._order

    @property
    def place_poly(self):
        return self._f

    def is_square(self, x):
        """ Euler criterion in the residue field.

        :raises ZeroInput: x is zero
        """
        x = self(x)
        if x.is_zero():
            raise ZeroInput("Square test of zero")
        return x.rep.powmod((self._order - 1) // 2, self._monic).is_one()

    def canonical_nonsquare(self):
        """ First non-square of the residue field in canonical order. """
        if self._nonsquare is None:
            for x in self.elements():
                if x and not self.is_square(x):
                    self._nonsquare = x
                    break
        return self._nonsquare

    def sqrt(self, x):
        """ Canonical square root, the lesser root in canonical order.

        :raises NotASquare: x is not a square
        """
        x = self(x)
        if x.is_zero():
            return x
        if not self.is_square(x):
            raise NotASquare(str(x) + " is not a square in " + str(self))
        r = gf.tonelli_shanks(x, self._order, self.one, self.canonical_nonsquare())
        return min(r, -r)

    def norm(self, x):
        """ Norm to the base field, :math:`\\mathrm{Res}(p, x)`. """
        x = self(x)
        if x.is_zero():
            return self._field.zero
        return polyring.resultant(self._monic, x.rep)

    def to_base(self, x):
        """ Identifies an element of a degree-one residue field with a base field element. """
        if self.degree != 1:
            raise ValueError("Residue field " + str(self) + " is not the base field")
        return self(x).rep.coeff(0)


@export
@lru_cache(maxsize=None)
def residue_field(p):
    """ Cached residue field of a monic irreducible polynomial.

    :param p: monic irreducible polynomial
    :type p: polyring.Poly
    :rtype: ResidueField
    """
    return ResidueField(p)


@export
def is_square_mod_prime(h, p):
    """ Tests whether h is a square modulo the monic irreducible p (Euler criterion in :math:`E_p`).

    :raises ZeroInput: p divides h
    """
    r = h % p
    if r.is_zero():
        raise ZeroInput(str(p) + " divides " + str(h))
    order = p.field.q ** p.degree
    return r.powmod((order - 1) // 2, p).is_one()


@export
def norm(alpha):
    """ Norm :math:`\\mathsf{N}_{E_f/E}(\\alpha) = \\mathrm{Res}(f_{monic}, \\alpha)`.

    :param alpha: invertible element
    :type alpha: AlgElem
    :return: norm
    :rtype: gf.FieldElem
    :raises NonInvertible: alpha is a zero divisor
    """
    alg = alpha.algebra
    if alg.degree == 0:
        return alg.field.one
    if not alpha.is_invertible():
        raise NonInvertible(str(alpha) + " is not invertible in " + str(alg))
    return polyring.resultant(alg.monic_f, alpha.rep)


def _require_squarefree(alg):
    if not alg.is_squarefree():
        raise NotSquareFree(str(alg.f) + " is not square-free")


@export
def is_square_class(alpha):
    """ Per-component square test.

    :param alpha: invertible element of a square-free algebra
    :type alpha: AlgElem
    :return: for each monic irreducible factor in canonical order, whether the component is a square
    :rtype: list
    :raises NotSquareFree: the defining polynomial is not square-free
    :raises NonInvertible: alpha is a zero divisor
    """
    alg = alpha.algebra
    _require_squarefree(alg)
    if not alpha.is_invertible():
        raise NonInvertible(str(alpha) + " is not invertible in " + str(alg))
    return [is_square_mod_prime(alpha.rep, p) for p in alg.support]


@export
def square_class_reps(algebra):
    """ Representatives of :math:`E_f^\\times / (E_f^\\times)^2`.

    Each representative is the CRT lift of a choice of ``1`` or the canonical non-square per component; the choices
    run in lexicographic order, so the first representative is ``1``.

    :param algebra: square-free algebra
    :type algebra: QuotAlg
    :return: :math:`2^r` representatives
    :rtype: list
    :raises NotSquareFree: the defining polynomial is not square-free
    """
    _require_squarefree(algebra)
    support = algebra.support
    if not support:
        return []
    choices = [(Poly.constant(algebra.field, 1), residue_field(p).canonical_nonsquare().rep) for p in support]
    reps = []
    for combo in itertools.product(*[range(2)] * len(support)):
        residues = [(p, choices[i][bit]) for i, (p, bit) in enumerate(zip(support, combo))]
        reps.append(algebra(polyring.crt(residues)))
    return reps


@export
def norm_condition_filter(algebra, reps):
    """ Keeps the representatives whose norm lies in :math:`E^2 \\cup \\mathsf{lc}(f) E^2`.

    :param algebra: square-free algebra
    :type algebra: QuotAlg
    :param reps: square class representatives
    :type reps: list
    :rtype: list
    """
    lc_square = gf.is_square(algebra.lc)
    out = []
    for alpha in reps:
        nrm_square = gf.is_square(norm(alpha))
        if nrm_square or not lc_square:
            out.append(alpha)
    return out
