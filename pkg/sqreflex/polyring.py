"""
.. module:: polyring
    :platform: Unix, Windows
    :synopsis: Univariate polynomial algebra over finite fields

.. moduleauthor:: sqreflex developers

"""

import random
import itertools
from . import config
from . import gf
from .exceptions import ZeroPolynomial, ConstantInput, NonCoprimeModuli, ParseError, NonInvertible
from ._utilities import export, derive_seed

__all__ = ['Poly', 'Factorization']

# Degree of the zero polynomial
DEG_ZERO = float('-inf')


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    if F.k == 1:
        p = F.p
        out = [(x + y) % p for x, y in zip(a, b)]
    else:
        out = [F.add(x, y) for x, y in zip(a, b)]
    out.extend(a[len(b):])
    return _trim(out)


def _pneg(F, a):
    return tuple(F.neg(x) for x in a)


def _psub(F, a, b):
    return _padd(F, a, _pneg(F, b))


def _pscale(F, a, c):
    if c == 0:
        return ()
    if c == 1:
        return a
    return tuple(F.mul(x, c) for x in a)


def _pmul(F, a, b):
    if not a or not b:
        return ()
    res = [0] * (len(a) + len(b) - 1)
    if F.k == 1:
        p = F.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return _trim([c % p for c in res])
    mul = F.mul
    add = F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = add(res[i + j], mul(x, y))
    return _trim(res)


def _pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("Polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return (), a
    inv_lc = F.inv(b[-1])
    r = list(a)
    quot = [0] * (len(a) - db)
    if F.k == 1:
        p = F.p
        for i in range(len(a) - 1, db - 1, -1):
            c = (r[i] * inv_lc) % p
            if c == 0:
                continue
            quot[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
        return _trim(quot), _trim([x % p for x in r[:db]])
    mul = F.mul
    sub = F.sub
    for i in range(len(a) - 1, db - 1, -1):
        if r[i] == 0:
            continue
        c = mul(r[i], inv_lc)
        quot[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = sub(r[i - db + j], mul(c, b[j]))
    return _trim(quot), _trim(r[:db])


def _pmod(F, a, b):
    return _pdivmod(F, a, b)[1]


def _pmonic(F, a):
    if not a or a[-1] == 1:
        return a
    return _pscale(F, a, F.inv(a[-1]))


def _pgcd(F, a, b):
    while b:
        a, b = b, _pmod(F, a, b)
    return _pmonic(F, a)


def _ppowmod(F, a, n, m):
    result = (1,) if len(m) > 1 else ()
    base = _pmod(F, a, m)
    while n:
        if n & 1:
            result = _pmod(F, _pmul(F, result, base), m)
        n >>= 1
        if n:
            base = _pmod(F, _pmul(F, base, base), m)
    return result


class Poly(object):
    """ Univariate polynomial over a finite field, dense representation.

    Coefficients are stored as element indices of the base field, constant term first, with no trailing zeros.
    Instances are immutable and hashable; ``<`` follows the canonical polynomial order (degree first, then the
    coefficients from the leading one downward).

    :param field: base field
    :type field: gf.FieldDesc
    :param coeffs: coefficients, constant term first (field elements or integers)
    :type coeffs: list, tuple
    """
    __slots__ = ('_field', '_c')

    def __init__(self, field, coeffs=()):
        self._field = field
        vals = []
        for c in coeffs:
            if isinstance(c, gf.FieldElem):
                if c.field != field:
                    raise ValueError("Coefficient " + str(c) + " does not belong to " + str(field))
                vals.append(c.value)
            else:
                vals.append(field.from_int(int(c)))
        self._c = _trim(vals)

    @classmethod
    def from_indices(cls, field, indices):
        """ Builds a polynomial from coefficient indices (constant term first). """
        obj = cls.__new__(cls)
        obj._field = field
        obj._c = _trim(tuple(indices))
        return obj

    @classmethod
    def x(cls, field):
        """ The indeterminate :math:`X`. """
        return cls.from_indices(field, (0, 1))

    @classmethod
    def constant(cls, field, value):
        """ Constant polynomial. """
        return cls(field, [field(value)])

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Poly(" + str(self._field) + ", " + str(self) + ")"

    def _lift(self, other):
        if isinstance(other, Poly):
            if other._field != self._field:
                raise ValueError("Polynomials over different fields")
            return other._c
        if isinstance(other, gf.FieldElem):
            return _trim((self._field(other).value,))
        if isinstance(other, int):
            return _trim((self._field.from_int(other),))
        return None

    def _new(self, coeffs):
        return Poly.from_indices(self._field, coeffs)

    def __add__(self, other):
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self._new(_padd(self._field, self._c, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self._new(_psub(self._field, self._c, b))

    def __rsub__(self, other):
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self._new(_psub(self._field, b, self._c))

    def __neg__(self):
        return self._new(_pneg(self._field, self._c))

    def __mul__(self, other):
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self._new(_pmul(self._field, self._c, b))

    __rmul__ = __mul__

    def __divmod__(self, other):
        b = self._lift(other)
        if b is None:
            return NotImplemented
        quot, rem = _pdivmod(self._field, self._c, b)
        return self._new(quot), self._new(rem)

    def __floordiv__(self, other):
        return self.__divmod__(other)[0]

    def __mod__(self, other):
        return self.__divmod__(other)[1]

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("Negative exponent")
        result = (1,)
        base = self._c
        while n:
            if n & 1:
                result = _pmul(self._field, result, base)
            n >>= 1
            if n:
                base = _pmul(self._field, base, base)
        return self._new(result)

    def __eq__(self, other):
        if isinstance(other, Poly) and other.field != self._field:
            return False
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self._c == b

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    __nonzero__ = __bool__

    def __call__(self, x):
        """ Evaluates the polynomial at a field element (Horner scheme). """
        F = self._field
        a = F(x).value
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, a), c)
        return gf.FieldElem(F, acc)

    @property
    def field(self):
        """ Base field.

        :getter: Gets the base field
        :type: gf.FieldDesc
        """
        return self._field

    @property
    def indices(self):
        """ Coefficient indices, constant term first.

        :getter: Gets the coefficient indices
        :type: tuple
        """
        return self._c

    @property
    def coeffs(self):
        """ Coefficients, constant term first.

        :getter: Gets the coefficients
        :type: tuple
        """
        return tuple(gf.FieldElem(self._field, c) for c in self._c)

    @property
    def degree(self):
        """ Degree; the zero polynomial has degree ``-inf``.

        :getter: Gets the degree
        :type: int
        """
        return len(self._c) - 1 if self._c else DEG_ZERO

    @property
    def lc(self):
        """ Leading coefficient (zero for the zero polynomial).

        :getter: Gets the leading coefficient
        :type: gf.FieldElem
        """
        return gf.FieldElem(self._field, self._c[-1] if self._c else 0)

    def coeff(self, i):
        """ Coefficient of :math:`X^i`. """
        return gf.FieldElem(self._field, self._c[i] if 0 <= i < len(self._c) else 0)

    def is_zero(self):
        return not self._c

    def is_one(self):
        return self._c == (1,)

    def is_constant(self):
        return len(self._c) <= 1

    def sort_key(self):
        """ Key of the canonical polynomial order. """
        return len(self._c), tuple(reversed(self._c))

    def monic(self):
        """ Monic associate (the zero polynomial is returned unchanged). """
        return self._new(_pmonic(self._field, self._c))

    def derivative(self):
        F = self._field
        return self._new(_trim([F.mul(F.from_int(i), c) for i, c in enumerate(self._c)][1:]))

    def powmod(self, n, modulus):
        """ Computes :math:`self^n \\bmod modulus`. """
        return self._new(_ppowmod(self._field, self._c, int(n), modulus.indices))

    def gcd(self, other):
        return gcd(self, other)

    def is_squarefree(self):
        return is_squarefree(self)

    def is_irreducible(self):
        return is_irreducible(self)

    def factor(self, **kwargs):
        return factor(self, **kwargs)


class Factorization(object):
    """ Factorization into a unit and monic irreducible factors with multiplicities.

    Factors are kept in canonical polynomial order.
    """
    def __init__(self, unit, factors):
        self._unit = unit
        self._factors = sorted(factors, key=lambda fm: fm[0].sort_key())

    def __str__(self):
        parts = [str(self._unit)]
        for fac, mult in self._factors:
            parts.append("(" + str(fac) + ")" + ("^" + str(mult) if mult > 1 else ""))
        return " * ".join(parts)

    __repr__ = __str__

    def __iter__(self):
        return iter(self._factors)

    def __len__(self):
        return len(self._factors)

    @property
    def unit(self):
        """ Unit part (the leading coefficient of the input).

        :getter: Gets the unit
        :type: gf.FieldElem
        """
        return self._unit

    @property
    def factors(self):
        """ Pairs of monic irreducible factors and multiplicities, in canonical order.

        :getter: Gets the factors
        :type: list
        """
        return list(self._factors)

    @property
    def support(self):
        """ Monic irreducible factors, in canonical order.

        :getter: Gets the support
        :type: list
        """
        return [fac for fac, _ in self._factors]

    def expand(self):
        """ Multiplies the factorization out.

        :return: the factored polynomial
        :rtype: Poly
        """
        F = self._unit.field
        result = Poly.constant(F, self._unit)
        for fac, mult in self._factors:
            result = result * (fac ** mult)
        return result

    def multiplicity(self, p):
        for fac, mult in self._factors:
            if fac == p:
                return mult
        return 0


@export
def gcd(f, g):
    """ Monic greatest common divisor (zero if both inputs are zero). """
    return Poly.from_indices(f.field, _pgcd(f.field, f.indices, g.indices))


@export
def xgcd(f, g):
    """ Extended Euclidean algorithm.

    :return: (d, s, t) with :math:`d = s f + t g` and d monic (or zero)
    :rtype: tuple
    """
    F = f.field
    r0, r1 = f.indices, g.indices
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quot, rem = _pdivmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(F, s0, _pmul(F, quot, s1))
        t0, t1 = t1, _psub(F, t0, _pmul(F, quot, t1))
    if r0:
        inv = F.inv(r0[-1])
        r0, s0, t0 = _pscale(F, r0, inv), _pscale(F, s0, inv), _pscale(F, t0, inv)
    return Poly.from_indices(F, r0), Poly.from_indices(F, s0), Poly.from_indices(F, t0)


@export
def inverse_mod(a, m):
    """ Inverse of a modulo m.

    :raises NonInvertible: a and m are not coprime
    """
    d, s, _ = xgcd(a % m, m)
    if not d.is_one():
        raise NonInvertible(str(a) + " is not invertible modulo " + str(m))
    return s % m


def _pth_root(F, a):
    # a is a polynomial in X^p; take p-th roots of the coefficients
    p = F.p
    e = F.q // p
    return _trim([F.power(a[i], e) for i in range(0, len(a), p)])


def _sqf_decomposition(F, a):
    out = []
    if len(a) <= 1:
        return out
    deriv = _trim([F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])
    c = _pgcd(F, a, deriv)
    w = _pdivmod(F, a, c)[0]
    i = 1
    while len(w) > 1:
        y = _pgcd(F, w, c)
        z = _pdivmod(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _pdivmod(F, c, y)[0]
    if len(c) > 1:
        for part, mult in _sqf_decomposition(F, _pth_root(F, c)):
            out.append((part, mult * F.p))
    return out


@export
def squarefree_decomposition(f):
    """ Square-free decomposition of the monic associate of f.

    :return: list of (square-free monic part, multiplicity), parts pairwise coprime
    :rtype: list
    :raises ZeroPolynomial: f is zero
    """
    if f.is_zero():
        raise ZeroPolynomial("Square-free decomposition of the zero polynomial")
    F = f.field
    return [(Poly.from_indices(F, part), mult) for part, mult in _sqf_decomposition(F, _pmonic(F, f.indices))]


def _distinct_degree(F, a):
    out = []
    rem = a
    xq = (0, 1)
    i = 1
    while len(rem) - 1 >= 2 * i:
        xq = _ppowmod(F, xq, F.q, rem)
        g = _pgcd(F, rem, _psub(F, xq, (0, 1)))
        if len(g) > 1:
            out.append((g, i))
            rem = _pdivmod(F, rem, g)[0]
            xq = _pmod(F, xq, rem)
        i += 1
    if len(rem) > 1:
        out.append((rem, len(rem) - 1))
    return out


def _equal_degree(F, a, d, rng):
    if len(a) - 1 == d:
        return [a]
    n = len(a) - 1
    exponent = (F.q ** d - 1) // 2
    while True:
        trial = _trim([rng.randrange(F.q) for _ in range(n)])
        if len(trial) <= 1:
            continue
        u = _pgcd(F, a, trial)
        if 1 < len(u) < len(a):
            break
        b = _psub(F, _ppowmod(F, trial, exponent, a), (1,))
        u = _pgcd(F, a, b)
        if 1 < len(u) < len(a):
            break
    return _equal_degree(F, u, d, rng) + _equal_degree(F, _pdivmod(F, a, u)[0], d, rng)


@export
def factor(f, **kwargs):
    """ Complete factorization into monic irreducible polynomials.

    The pipeline is square-free decomposition, distinct-degree factorization and randomized equal-degree splitting.
    The splitting seed is derived from the global seed and the input, so results are reproducible.

    Keyword arguments:
        * ``seed``: global seed. *Default: config.DEFAULT_SEED*

    :param f: nonzero polynomial
    :type f: Poly
    :return: factorization
    :rtype: Factorization
    :raises ZeroPolynomial: f is zero
    """
    if f.is_zero():
        raise ZeroPolynomial("Factorization of the zero polynomial")
    seed = kwargs.get('seed', config.DEFAULT_SEED)
    F = f.field
    rng = random.Random(derive_seed(seed, F, f.indices))
    factors = []
    for part, mult in _sqf_decomposition(F, _pmonic(F, f.indices)):
        for block, d in _distinct_degree(F, part):
            for irr in _equal_degree(F, block, d, rng):
                factors.append((Poly.from_indices(F, irr), mult))
    return Factorization(f.lc, factors)


@export
def support(f):
    """ Monic irreducible factors of f in canonical order. """
    return factor(f).support


@export
def squarefree_part(f):
    """ Product of the monic irreducible factors of f with odd multiplicity. """
    F = f.field
    result = Poly.constant(F, 1)
    for fac, mult in factor(f):
        if mult % 2:
            result = result * fac
    return result


@export
def is_squarefree(f):
    """ Tests whether f is square-free; nonzero constants are square-free.

    :raises ZeroPolynomial: f is zero
    """
    if f.is_zero():
        raise ZeroPolynomial("Square-free test of the zero polynomial")
    if f.is_constant():
        return True
    deriv = f.derivative()
    if deriv.is_zero():
        return False
    return gcd(f, deriv).is_one()


@export
def is_irreducible(f):
    """ Rabin irreducibility test.

    :math:`f` of degree :math:`n` is irreducible iff :math:`X^{q^n} \\equiv X \\bmod f` and
    :math:`\\gcd(X^{q^{n/l}} - X, f) = 1` for every prime :math:`l \\mid n`.

    :raises ConstantInput: f is constant
    """
    if f.is_constant():
        raise ConstantInput("Irreducibility test of a constant polynomial")
    F = f.field
    a = _pmonic(F, f.indices)
    n = len(a) - 1
    if n == 1:
        return True
    frob = [(0, 1)]
    for _ in range(n):
        frob.append(_ppowmod(F, frob[-1], F.q, a))
    if frob[n] != _pmod(F, (0, 1), a):
        return False
    for ell in gf._prime_divisors(n):
        g = _pgcd(F, a, _psub(F, frob[n // ell], (0, 1)))
        if len(g) != 1:
            return False
    return True


@export
def resultant(f, g):
    """ Resultant :math:`\\mathrm{Res}(f, g) = \\mathrm{lc}(f)^{\\deg g} \\prod g(\\alpha_i)` over the roots of f.

    Computed with the Euclidean remainder sequence.

    :raises ZeroPolynomial: f or g is zero
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Resultant with the zero polynomial")
    F = f.field
    a, b = f.indices, g.indices
    res = 1
    while True:
        n = len(a) - 1
        m = len(b) - 1
        if n == 0:
            return gf.FieldElem(F, F.mul(res, F.power(a[0], m)))
        if m == 0:
            return gf.FieldElem(F, F.mul(res, F.power(b[0], n)))
        rem = _pmod(F, b, a)
        if not rem:
            return F.zero
        dr = len(rem) - 1
        res = F.mul(res, F.power(a[-1], m - dr))
        if (n * dr) % 2:
            res = F.neg(res)
        a, b = rem, a


@export
def crt(residues, field=None):
    """ Chinese remainder theorem.

    :param residues: pairs (modulus, value)
    :type residues: list
    :param field: base field, required only when ``residues`` is empty
    :return: the unique polynomial of degree less than the sum of the modulus degrees matching every value
    :rtype: Poly
    :raises NonCoprimeModuli: two moduli share a factor
    """
    residues = list(residues)
    if not residues:
        if field is None:
            raise ValueError("Empty CRT input needs the base field")
        return Poly(field)
    modulus, value = residues[0]
    result = value % modulus
    for m, v in residues[1:]:
        d, s, _ = xgcd(modulus, m)
        if not d.is_one():
            raise NonCoprimeModuli("Moduli " + str(modulus) + " and " + str(m) + " are not coprime")
        result = result + modulus * (((v - result) * s) % m)
        modulus = modulus * m
        result = result % modulus
    return result


@export
def base_change(f, big):
    """ Maps the coefficients of f into an extension field through the canonical embedding. """
    if f.field == big:
        return f
    embed = gf.embedding(f.field, big)
    return Poly(big, [embed(c) for c in f.coeffs])


@export
def polys_of_degree(field, d, monic=False):
    """ Generates all polynomials of degree d in canonical order.

    :param field: base field
    :param d: degree
    :param monic: restrict to monic polynomials
    """
    if d < 0:
        return
    leads = [1] if monic else range(1, field.q)
    for lead in leads:
        for lower in itertools.product(range(field.q), repeat=d):
            yield Poly.from_indices(field, tuple(reversed(lower)) + (lead,))


@export
def polys_up_to_degree(field, d, monic=False):
    """ Generates all nonzero polynomials of degree at most d in canonical order. """
    for e in range(d + 1):
        for f in polys_of_degree(field, e, monic=monic):
            yield f


@export
def monic_irreducibles(field, d):
    """ Generates the monic irreducible polynomials of degree d in canonical order. """
    for f in polys_of_degree(field, d, monic=True):
        if d == 1 or is_irreducible(f):
            yield f


def _split_top_level(src):
    terms = []
    depth = 0
    start = 0
    for i, ch in enumerate(src):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ParseError("Unbalanced parentheses in '" + src + "'")
        elif ch in '+-' and depth == 0 and i > start and src[i - 1] not in '^*':
            terms.append(src[start:i])
            start = i
    if depth != 0:
        raise ParseError("Unbalanced parentheses in '" + src + "'")
    terms.append(src[start:])
    return terms


@export
def parse_poly(field, text):
    """ Parses a polynomial in :math:`X` with coefficients in the field element syntax.

    Terms ``c*X^e`` are joined by ``+`` or ``-``; coefficients containing ``+`` are parenthesized, e.g.
    ``2*X^4 + (t+1)*X + 1``.

    :param field: base field
    :type field: gf.FieldDesc
    :param text: polynomial literal
    :type text: str
    :return: polynomial
    :rtype: Poly
    :raises ParseError: malformed input
    """
    src = text.replace(' ', '').replace('x', 'X')
    if not src:
        raise ParseError("Empty polynomial literal")
    result = Poly(field)
    for term in _split_top_level(src):
        sign = 1
        while term and term[0] in '+-':
            if term[0] == '-':
                sign = -sign
            term = term[1:]
        if not term:
            raise ParseError("Empty term in '" + text + "'")
        pos = _find_top_level(term, 'X')
        if pos < 0:
            coeff = gf.parse_element(field, term)
            exponent = 0
        else:
            head = term[:pos]
            tail = term[pos + 1:]
            if head.endswith('*'):
                head = head[:-1]
            coeff = gf.parse_element(field, head) if head else field.one
            if not tail:
                exponent = 1
            elif tail.startswith('^') and tail[1:].isdigit():
                exponent = int(tail[1:])
            else:
                raise ParseError("Cannot parse exponent in term '" + term + "'")
        if sign < 0:
            coeff = -coeff
        result = result + Poly(field, [0] * exponent + [coeff])
    return result


def _find_top_level(term, ch):
    depth = 0
    for i, c in enumerate(term):
        if c == '(':
            depth += 1
        elif c == ')':
            depth -= 1
        elif c == ch and depth == 0:
            return i
    return -1


@export
def format_poly(f):
    """ Canonical text of a polynomial, e.g. ``X^2 + 2*X + (t+1)``. """
    F = f.field
    terms = []
    for e in range(len(f.indices) - 1, -1, -1):
        c = f.indices[e]
        if c == 0:
            continue
        cs = gf.format_element(gf.FieldElem(F, c))
        if '+' in cs:
            cs = "(" + cs + ")"
        if e == 0:
            terms.append(cs)
            continue
        mono = "X" if e == 1 else "X^" + str(e)
        terms.append(mono if c == 1 else cs + "*" + mono)
    return " + ".join(terms) if terms else "0"
