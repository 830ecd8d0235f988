"""
.. module:: qforms
    :platform: Unix, Windows
    :synopsis: Diagonal quadratic forms over E(X): local and global isotropy, slot partners and vector search

.. moduleauthor:: sqreflex developers

"""

import logging
import warnings
import itertools
from . import config
from . import gf
from . import polyring
from . import places
from . import sqref
from .polyring import Poly
from .places import Place
from .exceptions import ZeroEntry, NotSquareFree, PreconditionViolated, ConsistencyError, UnsupportedSupport, \
    BadInfinityClass, ParseError
from ._utilities import export

__all__ = ['DiagForm', 'IsotropyVerdict']

_LOGGER = logging.getLogger(__name__)

# Verdict justifications
ANISOTROPIC_1DIM = 'Anisotropic1Dim'
TWO_DIM_SQUARE = 'TwoDimSquare'
SYMBOL_VANISHES = 'SymbolVanishes'
SYMBOL_NONZERO = 'SymbolNonzero'
LOCAL_GLOBAL = 'LocalGlobal'
SLOT_PARTNER = 'SlotPartner'
DIM5_PLUS = 'Dim5Plus'


def _normalize_entry(value, field):
    r = places.as_ratfunc(value, field)
    if r.is_zero():
        raise ZeroEntry("Quadratic forms must be regular; got a zero entry")
    fac = polyring.factor(r.num * r.den)
    sqfree = Poly.constant(r.field, 1)
    for p, mult in fac:
        if mult % 2:
            sqfree = sqfree * p
    return fac.unit, sqfree


class DiagForm(object):
    """ Diagonal quadratic form :math:`\\langle a_1, \\dots, a_n \\rangle` over :math:`E(X)`.

    Entries are normalized modulo squares of :math:`E(X)^\\times` to a nonzero constant times a monic square-free
    polynomial.

    :param entries: polynomials, rational functions, field elements or integers
    :type entries: list, tuple
    :param field: base field, needed when no entry carries one
    :type field: gf.FieldDesc
    :raises ZeroEntry: an entry is zero
    """
    def __init__(self, entries, field=None):
        entries = list(entries)
        if not entries:
            raise ValueError("A quadratic form needs at least one entry")
        if field is None:
            for e in entries:
                if hasattr(e, 'field'):
                    field = e.field
                    break
        if field is None:
            raise ValueError("Cannot infer the base field of the form")
        self._field = field
        self._entries = [_normalize_entry(e, field) for e in entries]

    def __str__(self):
        return "<" + ", ".join(polyring.format_poly(v) for v in self.values) + ">"

    __repr__ = __str__

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, DiagForm):
            return NotImplemented
        return self._entries == other._entries

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __add__(self, other):
        return DiagForm(self.values + other.values, self._field)

    @property
    def field(self):
        return self._field

    @property
    def dim(self):
        return len(self._entries)

    @property
    def entries(self):
        """ Normalized entries as pairs (constant, monic square-free polynomial).

        :getter: Gets the entries
        :type: list
        """
        return list(self._entries)

    @property
    def values(self):
        """ Normalized entries as polynomials.

        :getter: Gets the entry polynomials
        :type: list
        """
        return [s * c for c, s in self._entries]

    @property
    def determinant(self):
        """ Determinant class, normalized like an entry.

        :getter: Gets the determinant
        :type: polyring.Poly
        """
        prod = Poly.constant(self._field, 1)
        for v in self.values:
            prod = prod * v
        c, s = _normalize_entry(prod, self._field)
        return s * c

    def scale(self, factor):
        """ Scaled form :math:`\\lambda \\varphi`.

        :param factor: nonzero polynomial, rational function or constant
        :rtype: DiagForm
        """
        lam = places.as_ratfunc(factor, self._field)
        return DiagForm([lam * v for v in self.values], self._field)

    def evaluate(self, vector):
        """ Value :math:`\\sum a_i x_i^2` at a polynomial vector. """
        if len(vector) != self.dim:
            raise ValueError("Vector length does not match the dimension")
        acc = Poly(self._field)
        for a, x in zip(self.values, vector):
            acc = acc + a * x * x
        return acc

    def places(self):
        """ Places where some entry is not a unit, followed by infinity. """
        found = set()
        for _, s in self._entries:
            if not s.is_constant():
                found.update(polyring.support(s))
        out = [Place(p) for p in sorted(found, key=Poly.sort_key)]
        out.append(Place.infinity(self._field))
        return out


@export
def parse_form(field, text):
    """ Parses ``a1; a2; ...`` with entries in the rational function grammar.

    :raises ParseError: malformed input
    """
    parts = [t.strip() for t in text.split(';')]
    if not parts or any(not t for t in parts):
        raise ParseError("Empty entry in form '" + text + "'")
    return DiagForm([places.parse_ratfunc(field, t) for t in parts], field)


class IsotropyVerdict(object):
    """ Isotropy decision with its justification.

    Keyword arguments:
        * ``place``: place of a nonvanishing symbol or a local obstruction
        * ``partner``: slot partner q certifying isotropy of a 4-dimensional form
        * ``witness``: isotropic vector
        * ``local_table``: list of (place, locally isotropic) pairs
    """
    def __init__(self, isotropic, justification, **kwargs):
        self._isotropic = bool(isotropic)
        self._justification = justification
        self._place = kwargs.get('place', None)
        self._partner = kwargs.get('partner', None)
        self._witness = kwargs.get('witness', None)
        self._local_table = kwargs.get('local_table', None)

    def __str__(self):
        word = "isotropic" if self._isotropic else "anisotropic"
        detail = " at " + str(self._place) if self._place is not None else ""
        return word + " (" + self._justification + detail + ")"

    __repr__ = __str__

    def __bool__(self):
        return self._isotropic

    __nonzero__ = __bool__

    @property
    def isotropic(self):
        return self._isotropic

    @property
    def justification(self):
        return self._justification

    @property
    def place(self):
        return self._place

    @property
    def partner(self):
        return self._partner

    @property
    def witness(self):
        """ Isotropic vector, if one was computed.

        :getter: Gets the witness vector
        :setter: Sets the witness vector
        :type: list
        """
        return self._witness

    @witness.setter
    def witness(self, value):
        self._witness = value

    @property
    def local_table(self):
        return self._local_table


def _residue_form_isotropic(place, units):
    if len(units) >= 3:
        return True
    if len(units) == 2:
        return places.is_residue_square(place, -(units[0] * units[1]))
    return False


@export
def local_isotropy(form, place):
    """ Isotropy over the completion at a place.

    The entries split by the parity of their valuation; the unit parts reduce to two residue forms, and the form is
    isotropic iff one of them is. Over a finite residue field a residue form of dimension at least 3 is isotropic, and
    :math:`\\langle x, y \\rangle` is isotropic iff :math:`-xy` is a square.

    :param form: diagonal form
    :type form: DiagForm
    :param place: place of E(X)
    :type place: places.Place
    :rtype: bool
    """
    parts = ([], [])
    for value in form.values:
        v, u = places.unit_residue(place, value)
        parts[v % 2].append(u)
    return _residue_form_isotropic(place, parts[0]) or _residue_form_isotropic(place, parts[1])


@export
def local_table(form, place_list=None):
    """ Local isotropy at every place where the form can fail to be isotropic.

    :return: list of (place, bool) in canonical place order
    :rtype: list
    """
    place_list = form.places() if place_list is None else place_list
    return [(place, local_isotropy(form, place)) for place in place_list]


def _normal_value(value, field):
    c, s = _normalize_entry(value, field)
    return s * c


@export
def pfister_form(a, b, field=None):
    """ The 2-fold Pfister form :math:`\\langle\\langle a, b \\rangle\\rangle = \\langle 1, -a, -b, ab \\rangle`. """
    if field is None:
        field = a.field if hasattr(a, 'field') else b.field
    a = places.as_ratfunc(a, field)
    b = places.as_ratfunc(b, field)
    return DiagForm([1, -a, -b, a * b], field)


@export
def reduce_four(form):
    """ Similar shape :math:`\\langle f, -g, -h, gh \\rangle` of a 4-dimensional form.

    For :math:`\\langle a, b, c, d \\rangle` scaling by bcd gives :math:`\\langle abcd, cd, bd, bc \\rangle` modulo squares,
    so :math:`f = abcd`, :math:`g = -cd`, :math:`h = -bd`, each normalized.

    :return: (f, g, h), f square-free
    :rtype: tuple
    """
    if form.dim != 4:
        raise ValueError("Only 4-dimensional forms have this shape")
    a, b, c, d = form.values
    field = form.field
    return _normal_value(a * b * c * d, field), _normal_value(-(c * d), field), _normal_value(-(b * d), field)


@export
def find_slot_partner(f, g, h, **kwargs):
    """ Constructs q with :math:`\\{g, h\\} = \\{f, q\\}`, which certifies isotropy of :math:`\\langle f, -g, -h, gh
    \\rangle`.

    With :math:`\\sigma = \\partial(\\{g, h\\})`, S the finite places of its support outside the support of f and
    :math:`P_S` their product, the symbol :math:`\\{f, a\\}` with :math:`a = P_S` (times :math:`(-1)^{\\deg P_S} c'` for odd
    deg f, c' the witness of :math:`\\sigma_\\infty`) absorbs :math:`\\sigma` on S whenever f is not a square at these
    places. The remaining ramification lives on the support of f and infinity and is realized by
    :func:`sqref.realize_ramification`.

    :param f: square-free polynomial
    :param g: nonzero polynomial or rational function
    :param h: nonzero polynomial or rational function
    :return: partner q, or None when a local obstruction exists
    :rtype: polyring.Poly
    :raises NotSquareFree: f is not square-free
    """
    field = f.field
    if f.is_zero() or not polyring.is_squarefree(f):
        raise NotSquareFree(str(f) + " is not square-free")
    sigma = places.ramify(g, h, field=field)
    f_supp = set(polyring.support(f)) if not f.is_constant() else set()
    prod = Poly.constant(field, 1)
    for place in sigma.finite_support:
        if place.poly not in f_supp:
            prod = prod * place.poly
    a = prod
    if f.degree % 2 == 1:
        c_prime = gf.canonical_nonsquare(field) if sigma.at_infinity else field.one
        if prod.degree % 2 == 1:
            c_prime = -c_prime
        a = prod * c_prime
    rho = sigma + places.ramify(f, a)
    try:
        q0 = sqref.realize_ramification(rho, f, **kwargs)
    except (UnsupportedSupport, BadInfinityClass) as e:
        _LOGGER.debug("No slot partner for %s: %s", f, e)
        return None
    q = q0 * a
    if places.ramify(f, q) != sigma:
        raise ConsistencyError("Slot partner " + str(q) + " of " + str(f) + " does not reproduce " + str(sigma))
    return q


@export
def common_slot(symbols, field=None, **kwargs):
    """ Common slot of finitely many symbols.

    The slot is :math:`f = c \\prod p` over the union of the finite ramification supports, c the canonical non-square
    (so that every class at infinity is admissible); an empty union is padded with X.

    :param symbols: pairs (a, b) of nonzero polynomials or rational functions
    :param field: base field, needed for an empty input
    :return: (f, partners) with :math:`\\partial(\\{f, g_i\\}) = \\partial(\\{a_i, b_i\\})`
    :rtype: tuple
    """
    symbols = list(symbols)
    if field is None:
        if not symbols:
            raise ValueError("An empty symbol list needs the base field")
        a0, b0 = symbols[0]
        field = a0.field if hasattr(a0, 'field') else b0.field
    sigmas = [places.ramify(a, b, field=field) for a, b in symbols]
    union = set()
    for sigma in sigmas:
        union.update(p.poly for p in sigma.finite_support)
    f = Poly.constant(field, gf.canonical_nonsquare(field))
    if not union:
        f = f * Poly.x(field)
    for p in sorted(union, key=Poly.sort_key):
        f = f * p
    partners = []
    for sigma in sigmas:
        g = sqref.realize_ramification(sigma, f, **kwargs)
        if places.ramify(f, g) != sigma:
            raise ConsistencyError("Partner " + str(g) + " does not realize " + str(sigma))
        partners.append(g)
    return f, partners


@export
def lgp_cross_check(form, **kwargs):
    """ Decides a 4-dimensional form twice: by the local scan and by the slot-partner construction.

    :return: dictionary with keys ``local``, ``slot``, ``agree``, ``partner``, ``shape`` (f, g, h), ``table`` and
        ``refinement_place`` (a place of the support of {g, h}, of f, or infinity where the form is anisotropic)
    :rtype: dict
    """
    table = local_table(form)
    local_iso = all(flag for _, flag in table)
    f, g, h = reduce_four(form)
    q = find_slot_partner(f, g, h, **kwargs)
    refinement = None
    if not local_iso:
        shape = DiagForm([f, -g, -h, g * h], form.field)
        sigma = places.ramify(g, h, field=form.field)
        candidates = set(sigma.support)
        if not f.is_constant():
            candidates.update(Place(p) for p in polyring.support(f))
        candidates.add(Place.infinity(form.field))
        for place in sorted(candidates, key=Place.sort_key):
            if not local_isotropy(shape, place):
                refinement = place
                break
    return dict(local=local_iso, slot=q is not None, agree=local_iso == (q is not None), partner=q,
                shape=(f, g, h), table=table, refinement_place=refinement)


@export
def is_isotropic(form, **kwargs):
    """ Decides isotropy of a diagonal form over :math:`E(X)`.

    * dimension 1: anisotropic
    * dimension 2: isotropic iff :math:`-a_1 a_2` is a square in :math:`E(X)`
    * dimension 3: isotropic iff :math:`\\partial(\\{-a_1 a_2, -a_1 a_3\\})` vanishes
    * dimension 4: local-global principle, cross-checked by a slot partner
    * dimension 5 and more: isotropic

    Keyword arguments:
        * ``witness_cap``: when set, isotropic verdicts get a vector from :func:`vector_search` with this cap.
        * ``seed``: global seed. *Default: config.DEFAULT_SEED*

    :param form: diagonal form
    :type form: DiagForm
    :rtype: IsotropyVerdict
    :raises ConsistencyError: the two dimension-4 decisions disagree
    """
    dim = form.dim
    field = form.field
    witness_cap = kwargs.pop('witness_cap', None)
    if dim == 1:
        return IsotropyVerdict(False, ANISOTROPIC_1DIM)
    if dim == 2:
        (c1, s1), (c2, s2) = form.entries
        ratio = -c2 / c1
        if s1 == s2 and gf.is_square(ratio):
            witness = [Poly.constant(field, gf.sqrt(ratio)), Poly.constant(field, 1)]
            return IsotropyVerdict(True, TWO_DIM_SQUARE, witness=witness)
        return IsotropyVerdict(False, TWO_DIM_SQUARE)
    if dim == 3:
        a, b, c = form.values
        rho = places.ramify(-(a * b), -(a * c), field=field)
        if rho.is_empty():
            verdict = IsotropyVerdict(True, SYMBOL_VANISHES)
        else:
            return IsotropyVerdict(False, SYMBOL_NONZERO, place=rho.support[0])
    elif dim == 4:
        report = lgp_cross_check(form, **kwargs)
        if not report['agree']:
            raise ConsistencyError("Local scan and slot partner disagree on " + str(form))
        _LOGGER.debug("Dimension 4 form %s: local %s, partner %s", form, report['local'], report['partner'])
        if not report['local']:
            return IsotropyVerdict(False, LOCAL_GLOBAL, place=report['refinement_place'], local_table=report['table'])
        verdict = IsotropyVerdict(True, SLOT_PARTNER, partner=report['partner'], local_table=report['table'])
    else:
        verdict = IsotropyVerdict(True, DIM5_PLUS)
    if witness_cap is not None:
        verdict.witness = vector_search(form, witness_cap)
    return verdict


def _search_degree(values, field, degree, split):
    cands = [Poly(field)] + list(polyring.polys_up_to_degree(field, degree))
    squares = [x * x for x in cands]
    table = [[a * sq for sq in squares] for a in values]
    n = len(values)
    left = {}
    left_zero = None
    for idx in itertools.product(range(len(cands)), repeat=split):
        acc = Poly(field)
        for i, j in enumerate(idx):
            acc = acc + table[i][j]
        if acc not in left:
            left[acc] = idx
        if left_zero is None and acc.is_zero() and any(idx):
            left_zero = idx
    if left_zero is not None:
        return [cands[j] for j in left_zero] + [cands[0]] * (n - split)
    for idx in itertools.product(range(len(cands)), repeat=n - split):
        if not any(idx):
            continue
        acc = Poly(field)
        for i, j in enumerate(idx):
            acc = acc + table[split + i][j]
        match = left.get(-acc)
        if match is not None:
            return [cands[j] for j in match] + [cands[j] for j in idx]
    return None


@export
def vector_search(form, degree_cap=None):
    """ Bounded search for an isotropic vector of polynomials.

    Degrees are deepened from 0 to the cap; at each degree the values of the first half of the coordinates are
    tabulated and matched against the second half. The vector is scaled so that its first nonzero coordinate has
    leading coefficient 1. Finding nothing within the cap proves nothing.

    :param form: diagonal form of dimension at least 2
    :type form: DiagForm
    :param degree_cap: largest coordinate degree. *Default: config.VECTOR_CAP*
    :return: isotropic vector or None
    :rtype: list
    """
    if form.dim < 2:
        raise ValueError("Vector search needs a form of dimension at least 2")
    cap = config.VECTOR_CAP if degree_cap is None else int(degree_cap)
    values = form.values
    for degree in range(cap + 1):
        found = _search_degree(values, form.field, degree, form.dim // 2)
        if found is not None:
            lead = next(x for x in found if not x.is_zero()).lc.inverse()
            return [x * lead for x in found]
    warnings.warn("No isotropic vector of degree at most " + str(cap) + " for " + str(form), UserWarning)
    return None


@export
def hyper_example_form(f, p):
    """ The form :math:`\\langle f, -p, X, -pX \\rangle` for a monic irreducible factor p of f with
    :math:`f(0) p(0)` a nonzero square; it is locally isotropic at every place.

    :raises PreconditionViolated: the conditions on p fail
    """
    field = f.field
    if p.is_constant() or not p.lc.is_one() or not polyring.is_irreducible(p):
        raise PreconditionViolated(str(p) + " is not monic irreducible")
    if not (f % p).is_zero():
        raise PreconditionViolated(str(p) + " does not divide " + str(f))
    value = f(field.zero) * p(field.zero)
    if value.is_zero() or not gf.is_square(value):
        raise PreconditionViolated("f(0) p(0) = " + str(value) + " is not a nonzero square")
    x = Poly.x(field)
    return DiagForm([f, -p, x, -(p * x)], field)
