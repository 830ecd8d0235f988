"""
.. module:: places
    :platform: Unix, Windows
    :synopsis: Places of E(X), valuations, residues, tame symbols and ramification sequences

.. moduleauthor:: sqreflex developers

"""

from . import gf
from . import polyring
from . import quotalg
from .polyring import Poly
from .exceptions import ZeroFunction, NonUnitAtPlace, InvalidRamification, ZeroPolynomial, ParseError
from ._utilities import export

__all__ = ['Place', 'RatFunc', 'SquareClass', 'RamSeq']


class Place(object):
    """ A place of :math:`E(X)` trivial on :math:`E`: a monic irreducible polynomial or the place at infinity.

    Places are ordered like polynomials (degree first, then coefficients from the leading one down), with infinity
    last.

    :param poly: monic irreducible polynomial, ``None`` for infinity
    :type poly: polyring.Poly
    :param field: base field, required for infinity
    :type field: gf.FieldDesc
    """
    __slots__ = ('_poly', '_field')

    def __init__(self, poly=None, field=None):
        if poly is None:
            if field is None:
                raise ValueError("The place at infinity needs the base field")
            self._field = field
        else:
            if poly.is_constant() or not poly.lc.is_one() or not polyring.is_irreducible(poly):
                raise ValueError(str(poly) + " is not a monic irreducible polynomial")
            self._field = poly.field
        self._poly = poly

    @classmethod
    def infinity(cls, field):
        return cls(None, field)

    def __str__(self):
        return "inf" if self._poly is None else str(self._poly)

    def __repr__(self):
        return "Place(" + str(self) + ")"

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self._field == other._field and self._poly == other._poly

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self._poly)

    @property
    def poly(self):
        """ Monic irreducible polynomial of a finite place, ``None`` at infinity.

        :getter: Gets the polynomial
        :type: polyring.Poly
        """
        return self._poly

    @property
    def field(self):
        return self._field

    @property
    def is_infinite(self):
        return self._poly is None

    @property
    def degree(self):
        """ Degree of the residue field over the base field.

        :getter: Gets the degree
        :type: int
        """
        return 1 if self._poly is None else self._poly.degree

    @property
    def residue_field(self):
        """ Residue field :math:`E_p`; the base field itself at infinity.

        :getter: Gets the residue field
        :type: quotalg.ResidueField or gf.FieldDesc
        """
        if self._poly is None:
            return self._field
        return quotalg.residue_field(self._poly)

    def sort_key(self):
        if self._poly is None:
            return 1, ()
        return 0, self._poly.sort_key()


class RatFunc(object):
    """ Element of :math:`E(X)` as a reduced fraction with monic denominator.

    :param num: numerator
    :type num: polyring.Poly
    :param den: denominator, nonzero
    :type den: polyring.Poly
    """
    __slots__ = ('_num', '_den')

    def __init__(self, num, den=None):
        field = num.field
        if den is None:
            den = Poly.constant(field, 1)
        if den.is_zero():
            raise ZeroPolynomial("Zero denominator")
        if num.is_zero():
            self._num = num
            self._den = Poly.constant(field, 1)
            return
        d = polyring.gcd(num, den)
        num = num // d
        den = den // d
        scale = den.lc.inverse()
        self._num = num * scale
        self._den = den * scale

    def __str__(self):
        if self._den.is_one():
            return str(self._num)
        return "(" + str(self._num) + ")/(" + str(self._den) + ")"

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._num, self._den))

    def __mul__(self, other):
        other = as_ratfunc(other, self.field)
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_ratfunc(other, self.field)
        if other.is_zero():
            raise ZeroFunction("Division by the zero function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __neg__(self):
        return RatFunc(-self._num, self._den)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            if self.is_zero():
                raise ZeroFunction("Negative power of the zero function")
            return RatFunc(self._den ** (-n), self._num ** (-n))
        return RatFunc(self._num ** n, self._den ** n)

    @property
    def field(self):
        return self._num.field

    @property
    def num(self):
        """ Numerator.

        :getter: Gets the numerator
        :type: polyring.Poly
        """
        return self._num

    @property
    def den(self):
        """ Monic denominator.

        :getter: Gets the denominator
        :type: polyring.Poly
        """
        return self._den

    def is_zero(self):
        return self._num.is_zero()


@export
def as_ratfunc(value, field=None):
    """ Converts a polynomial, field element or integer into a rational function. """
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value)
    if field is None:
        raise ValueError("Converting a constant needs the base field")
    return RatFunc(Poly.constant(field, value))


@export
def parse_ratfunc(field, text):
    """ Parses ``num`` or ``(num)/(den)`` in the polynomial grammar.

    :raises ParseError: malformed input
    """
    depth = 0
    split = -1
    for i, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == '/' and depth == 0:
            if split >= 0:
                raise ParseError("More than one '/' in '" + text + "'")
            split = i
    if split < 0:
        return RatFunc(polyring.parse_poly(field, text))
    den = polyring.parse_poly(field, _strip_parens(text[split + 1:]))
    if den.is_zero():
        raise ParseError("Zero denominator in '" + text + "'")
    return RatFunc(polyring.parse_poly(field, _strip_parens(text[:split])), den)


def _strip_parens(text):
    src = text.strip()
    if src.startswith('(') and src.endswith(')'):
        return src[1:-1]
    return src


@export
def parse_place(field, text):
    """ Parses ``inf`` or a monic irreducible polynomial. """
    if text.strip().lower() in ('inf', 'infinity', 'oo'):
        return Place.infinity(field)
    try:
        return Place(polyring.parse_poly(field, text))
    except ValueError as e:
        raise ParseError(str(e))


class SquareClass(object):
    """ Element of :math:`k_1 E_p`, a group of order two, stored as one bit.

    The canonical witness is ``1`` for the trivial class and the canonical non-square of the residue field otherwise.
    A class without a place lives in :math:`k_1 E`.
    """
    __slots__ = ('_place', '_nontrivial', '_field', '_witness')

    def __init__(self, place, nontrivial, field=None):
        self._place = place
        self._nontrivial = bool(nontrivial)
        self._field = place.field if place is not None else field
        self._witness = None

    def __str__(self):
        return ("{" + str(self.witness) + "}") if self._nontrivial else "0"

    def __repr__(self):
        return "SquareClass(" + str(self._place) + ", " + str(self._nontrivial) + ")"

    def __eq__(self, other):
        if not isinstance(other, SquareClass):
            return NotImplemented
        return self._place == other._place and self._nontrivial == other._nontrivial

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._place, self._nontrivial))

    def __bool__(self):
        return self._nontrivial

    __nonzero__ = __bool__

    def __add__(self, other):
        if other._place != self._place:
            raise ValueError("Square classes at different places")
        return SquareClass(self._place, self._nontrivial != other._nontrivial, self._field)

    @property
    def place(self):
        return self._place

    @property
    def nontrivial(self):
        return self._nontrivial

    @property
    def witness(self):
        """ Canonical witness in the residue field.

        :getter: Gets the witness
        :type: gf.FieldElem or quotalg.AlgElem
        """
        if self._witness is None:
            if self._place is None or self._place.is_infinite:
                self._witness = gf.canonical_nonsquare(self._field) if self._nontrivial else self._field.one
            else:
                res = self._place.residue_field
                self._witness = res.canonical_nonsquare() if self._nontrivial else res.one
        return self._witness


class RamSeq(object):
    """ Ramification sequence: a finitely supported element of :math:`\\bigoplus_p k_1 E_p`.

    Since every :math:`k_1 E_p` has order two, the sequence is determined by its support. Addition is the symmetric
    difference of supports. Sequences from user input are validated with ``validate=True``: over a finite field a
    sequence is a ramification sequence iff its support has even size.

    :param places: support
    :param field: base field
    :param validate: raise on odd support
    :raises InvalidRamification: ``validate`` is set and the support has odd size
    """
    def __init__(self, places=(), field=None, validate=False):
        places = frozenset(places)
        if field is None:
            if not places:
                raise ValueError("An empty ramification sequence needs the base field")
            field = next(iter(places)).field
        self._support = places
        self._field = field
        if validate and not self.is_valid():
            raise InvalidRamification("Support " + str(self) + " has odd size")

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.support) + "}"

    def __repr__(self):
        return "RamSeq" + str(self)

    def __eq__(self, other):
        if not isinstance(other, RamSeq):
            return NotImplemented
        return self._support == other._support

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(self._support)

    def __len__(self):
        return len(self._support)

    def __iter__(self):
        return iter(self.support)

    def __contains__(self, place):
        return place in self._support

    def __getitem__(self, place):
        return SquareClass(place, place in self._support)

    def __add__(self, other):
        return RamSeq(self._support.symmetric_difference(other._support), self._field)

    __sub__ = __add__

    @property
    def field(self):
        return self._field

    @property
    def support(self):
        """ Support in canonical place order.

        :getter: Gets the support
        :type: list
        """
        return sorted(self._support, key=Place.sort_key)

    @property
    def finite_support(self):
        return [p for p in self.support if not p.is_infinite]

    @property
    def at_infinity(self):
        """ Whether the component at infinity is nontrivial.

        :getter: Gets the component at infinity
        :type: bool
        """
        return any(p.is_infinite for p in self._support)

    def is_empty(self):
        return not self._support

    def is_valid(self):
        return len(self._support) % 2 == 0

    def entries(self):
        """ Nontrivial square classes in canonical place order. """
        return [SquareClass(p, True) for p in self.support]

    def restrict(self, places):
        keep = set(places)
        return RamSeq([p for p in self._support if p in keep], self._field)


def _multiplicity(f, p):
    count = 0
    quot, rem = divmod(f, p)
    while rem.is_zero():
        count += 1
        f = quot
        quot, rem = divmod(f, p)
    return count, f


@export
def valuation(place, r):
    """ Valuation :math:`v_p` of a nonzero rational function; :math:`v_\\infty = \\deg(den) - \\deg(num)`.

    :raises ZeroFunction: r is zero
    """
    r = as_ratfunc(r, place.field)
    if r.is_zero():
        raise ZeroFunction("Valuation of the zero function")
    if place.is_infinite:
        return r.den.degree - r.num.degree
    return _multiplicity(r.num, place.poly)[0] - _multiplicity(r.den, place.poly)[0]


@export
def unit_residue(place, r):
    """ Valuation together with the residue of the unit part for the uniformizer :math:`p` (or :math:`1/X`).

    :return: (valuation, residue); the residue is a residue field element, or a base field element at infinity
    :rtype: tuple
    :raises ZeroFunction: r is zero
    """
    r = as_ratfunc(r, place.field)
    if r.is_zero():
        raise ZeroFunction("Residue of the zero function")
    if place.is_infinite:
        return r.den.degree - r.num.degree, r.num.lc / r.den.lc
    a, num0 = _multiplicity(r.num, place.poly)
    b, den0 = _multiplicity(r.den, place.poly)
    res = place.residue_field
    return a - b, res(num0) / res(den0)


@export
def residue(place, r):
    """ Residue of a rational function that is a unit at the place.

    :raises NonUnitAtPlace: the valuation is not zero
    """
    v, u = unit_residue(place, r)
    if v != 0:
        raise NonUnitAtPlace(str(r) + " has valuation " + str(v) + " at " + str(place))
    return u


@export
def is_residue_square(place, u):
    """ Square test of a nonzero residue at a place. """
    if place.is_infinite:
        return gf.is_square(u)
    return place.residue_field.is_square(u)


def _minus_one(place):
    if place.is_infinite:
        return -place.field.one
    return -place.residue_field.one


@export
def tame_symbol(place, f, g):
    """ Tame symbol :math:`\\partial_v(\\{f, g\\})`, the class of :math:`(-1)^{ab} f^{-b} g^{a}` with
    :math:`a = v(f)`, :math:`b = v(g)`.

    :return: square class at the place
    :rtype: SquareClass
    :raises ZeroFunction: f or g is zero
    """
    a, uf = unit_residue(place, f)
    b, ug = unit_residue(place, g)
    bit = False
    if (a * b) % 2 and not is_residue_square(place, _minus_one(place)):
        bit = not bit
    if b % 2 and not is_residue_square(place, uf):
        bit = not bit
    if a % 2 and not is_residue_square(place, ug):
        bit = not bit
    return SquareClass(place, bit)


def _support_places(r):
    out = []
    for poly in (r.num, r.den):
        if not poly.is_constant():
            out.extend(polyring.support(poly))
    return [Place(p) for p in out] if out else []


@export
def ramify(f, g, field=None):
    """ Ramification :math:`\\partial(\\{f, g\\})` over all places of :math:`E(X)`.

    Only places in the supports of f and g and infinity can ramify.

    :param f: nonzero rational function
    :param g: nonzero rational function
    :param field: base field, needed when both inputs are integers
    :return: ramification sequence
    :rtype: RamSeq
    :raises ZeroFunction: f or g is zero
    """
    if field is None:
        field = f.field if hasattr(f, 'field') else g.field
    f = as_ratfunc(f, field)
    g = as_ratfunc(g, field)
    if f.is_zero() or g.is_zero():
        raise ZeroFunction("Symbol with the zero function")
    candidates = set(_support_places(f))
    candidates.update(_support_places(g))
    candidates.add(Place.infinity(field))
    support = [p for p in candidates if tame_symbol(p, f, g)]
    result = RamSeq(support, field)
    assert result.is_valid(), "Hilbert reciprocity violated by " + str(result)
    return result


@export
def nmap(rho):
    """ Summed norm map to :math:`k_1 E`.

    Computes :math:`\\mathsf{N}_{E_p/E}` of each nontrivial witness and multiplies the classes.

    :param rho: sequence of square classes
    :type rho: RamSeq
    :return: class in the base field
    :rtype: SquareClass
    """
    bit = False
    for entry in rho.entries():
        place = entry.place
        if place.is_infinite:
            nrm = entry.witness
        else:
            nrm = place.residue_field.norm(entry.witness)
        if not gf.is_square(nrm):
            bit = not bit
    return SquareClass(None, bit, rho.field)


@export
def symbol_is_zero(a, b, field=None):
    """ Tests :math:`\\{a, b\\} = 0` in :math:`k_2 E(X)`, equivalently the Pfister form
    :math:`\\langle 1, -a, -b, ab \\rangle` is isotropic. Over a finite base field the ramification map is injective.
    """
    return ramify(a, b, field=field).is_empty()


@export
def local_slot_condition(d, b, c, place):
    """ Tests :math:`\\partial_v\\{b, c\\} \\in \\{0, \\{\\bar d\\}\\}` for d a unit at the place.

    :raises NonUnitAtPlace: d is not a unit at the place
    """
    d_res = residue(place, d)
    symbol = tame_symbol(place, b, c)
    if not symbol:
        return True
    return not is_residue_square(place, d_res)
