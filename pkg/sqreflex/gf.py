"""
.. module:: gf
    :platform: Unix, Windows
    :synopsis: Exact arithmetic in finite fields of odd characteristic

.. moduleauthor:: sqreflex developers

"""

import re
import itertools
from functools import lru_cache
from . import config
from .exceptions import NonPrime, EvenCharacteristic, NotASubfield, ParseError, ZeroInput, NotASquare, \
    NonInvertible, ConsistencyError
from ._utilities import export

__all__ = ['FieldDesc', 'FieldElem']

_FIELD_RE = re.compile(r'^\s*(?:gf|GF|F)\s*\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$')
_ELEM_TERM_RE = re.compile(r'^(\d+)?\*?(t(?:\^(\d+))?)?$')


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_divisors(n):
    divisors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            divisors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        divisors.append(n)
    return divisors


class FieldDesc(object):
    """ Finite field :math:`\\mathbb{F}_{p^k}` of odd characteristic.

    Elements are identified with integer indices :math:`\\sum c_i p^i` of their coefficient vectors
    :math:`(c_0, \\dots, c_{k-1})` over the prime field with respect to the power basis of the generator ``t``. The
    index order is the canonical element order. Multiplication uses exponential and logarithm tables, which are built
    once at construction for fields up to ``config.FIELD_TABLE_LIMIT`` elements.

    Use :func:`make_field` for the canonical field of a given order; pass ``modulus`` explicitly only for a
    user-supplied presentation.

    :param p: characteristic
    :type p: int
    :param k: extension degree
    :type k: int
    :param modulus: coefficients of the defining polynomial over the prime field, constant term first
    :type modulus: list, tuple
    """
    def __init__(self, p, k=1, modulus=None):
        p = int(p)
        k = int(k)
        if k < 1:
            raise ValueError("Extension degree must be a positive integer")
        if not _is_prime(p):
            raise NonPrime("Characteristic " + str(p) + " is not a prime")
        if p == 2:
            raise EvenCharacteristic("Characteristic 2 is not supported")
        self._p = p
        self._k = k
        self._q = p ** k
        self._modulus = None
        self._user_modulus = False
        self._digits = None
        self._exp = None
        self._log = None
        self._nonsquare = None
        self._generator = None
        if k > 1:
            if modulus is None:
                self._modulus = _canonical_modulus(p, k)
            else:
                self._modulus = _check_modulus(p, k, modulus)
                self._user_modulus = True
            if self._q <= config.FIELD_TABLE_LIMIT:
                self._build_tables()
        elif modulus is not None and len(modulus) > 0:
            coeffs = tuple(int(c) % p for c in modulus)
            if len(coeffs) != 2 or coeffs[-1] != 1:
                raise ValueError("Modulus must be monic of degree 1")

    def __str__(self):
        if self._k == 1:
            return "gf(" + str(self._p) + ")"
        if self._user_modulus:
            return "gf(" + str(self._p) + "^" + str(self._k) + ", " + str(list(self._modulus)) + ")"
        return "gf(" + str(self._p) + "^" + str(self._k) + ")"

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, FieldDesc):
            return NotImplemented
        return self._p == other._p and self._k == other._k and self._modulus == other._modulus

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._p, self._k, self._modulus))

    def __call__(self, value):
        """ Converts an integer, a coefficient sequence or an element of this field into a field element. """
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError("Element belongs to " + str(value.field) + ", not to " + str(self))
            return value
        if isinstance(value, int):
            return FieldElem(self, value % self._p)
        if isinstance(value, (list, tuple)):
            return FieldElem(self, self.index_of(value))
        if isinstance(value, str):
            return parse_element(self, value)
        raise TypeError("Cannot convert " + repr(value) + " into an element of " + str(self))

    def __len__(self):
        return self._q

    @property
    def p(self):
        """ Characteristic.

        :getter: Gets the characteristic
        :type: int
        """
        return self._p

    @property
    def k(self):
        """ Degree over the prime field.

        :getter: Gets the extension degree
        :type: int
        """
        return self._k

    @property
    def q(self):
        """ Number of elements.

        :getter: Gets the field order
        :type: int
        """
        return self._q

    @property
    def modulus(self):
        """ Defining polynomial over the prime field, constant term first (``None`` for prime fields).

        :getter: Gets the modulus coefficients
        :type: tuple
        """
        return self._modulus

    @property
    def is_prime_field(self):
        """ Whether the field is a prime field.

        :getter: Gets the prime field flag
        :type: bool
        """
        return self._k == 1

    @property
    def zero(self):
        """ Zero element.

        :getter: Gets zero
        :type: FieldElem
        """
        return FieldElem(self, 0)

    @property
    def one(self):
        """ Identity element.

        :getter: Gets one
        :type: FieldElem
        """
        return FieldElem(self, 1)

    @property
    def gen(self):
        """ The generator ``t`` of the field over the prime field (``0`` is never returned; for prime fields, ``1``).

        :getter: Gets the field generator
        :type: FieldElem
        """
        return FieldElem(self, self._p if self._k > 1 else 1)

    # Index level arithmetic (used by the polynomial kernels)

    def digits(self, a):
        """ Coefficient vector of the element with index ``a``, constant term first. """
        if self._digits is not None:
            return self._digits[a]
        out = []
        for _ in range(self._k):
            a, r = divmod(a, self._p)
            out.append(r)
        return tuple(out)

    def index_of(self, coeffs):
        """ Index of the element with the given coefficient vector, constant term first. """
        if len(coeffs) > self._k:
            raise ValueError("Coefficient vector is longer than the extension degree")
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self._p + (int(c) % self._p)
        return idx

    def from_int(self, n):
        """ Index of the image of the integer ``n`` in the prime field. """
        return n % self._p

    def add(self, a, b):
        if self._k == 1:
            return (a + b) % self._p
        da = self.digits(a)
        db = self.digits(b)
        return self.index_of([x + y for x, y in zip(da, db)])

    def sub(self, a, b):
        if self._k == 1:
            return (a - b) % self._p
        da = self.digits(a)
        db = self.digits(b)
        return self.index_of([x - y for x, y in zip(da, db)])

    def neg(self, a):
        if self._k == 1:
            return (-a) % self._p
        return self.index_of([-x for x in self.digits(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._k == 1:
            return (a * b) % self._p
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self._q - 1)]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise NonInvertible("Zero has no inverse in " + str(self))
        if self._k == 1:
            return pow(a, self._p - 2, self._p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self._q - 1)]
        return self.power(a, self._q - 2)

    def power(self, a, n):
        if n < 0:
            a = self.inv(a)
            n = -n
        if a == 0:
            return 1 if n == 0 else 0
        if self._k == 1:
            return pow(a, n, self._p)
        if self._log is not None:
            return self._exp[(self._log[a] * n) % (self._q - 1)]
        result = 1
        base = a
        while n:
            if n & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            n >>= 1
        return result

    def square_test(self, a):
        """ Euler criterion on the element with index ``a`` (nonzero). """
        return self.power(a, (self._q - 1) // 2) == 1

    def nonsquare_index(self):
        """ Index of the canonical non-square. """
        if self._nonsquare is None:
            for a in range(1, self._q):
                if not self.square_test(a):
                    self._nonsquare = a
                    break
        return self._nonsquare

    # Element level helpers

    def element(self, index):
        """ Field element with the given index. """
        if not 0 <= index < self._q:
            raise ValueError("Index out of range for " + str(self))
        return FieldElem(self, index)

    def elements(self):
        """ Generates all elements in canonical order. """
        for a in range(self._q):
            yield FieldElem(self, a)

    def units(self):
        """ Generates all nonzero elements in canonical order. """
        for a in range(1, self._q):
            yield FieldElem(self, a)

    def primitive_element(self):
        """ Least generator of the multiplicative group in canonical order.

        :return: primitive element
        :rtype: FieldElem
        """
        if self._generator is None:
            self._generator = self._find_generator()
        return FieldElem(self, self._generator)

    # Construction helpers

    def _mul_slow(self, a, b):
        p = self._p
        k = self._k
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self._modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k + 1):
                    prod[i - k + j] -= c * mod[j]
        return self.index_of(prod[:k])

    def _find_generator(self):
        if self._q == 3:
            return 2
        exponents = [(self._q - 1) // r for r in _prime_divisors(self._q - 1)]
        for a in range(2, self._q):
            if all(self._slow_power(a, e) != 1 for e in exponents):
                return a
        raise ConsistencyError("No primitive element found in " + str(self))

    def _slow_power(self, a, n):
        if self._k == 1:
            return pow(a, n, self._p)
        result = 1
        while n:
            if n & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            n >>= 1
        return result

    def _build_tables(self):
        q = self._q
        self._digits = [tuple((a // (self._p ** i)) % self._p for i in range(self._k)) for a in range(q)]
        gen = self._find_generator()
        exp = [0] * (q - 1)
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_slow(cur, gen)
        if cur != 1:
            raise ConsistencyError("Modulus of " + str(self) + " does not define a field")
        self._generator = gen
        self._exp = exp
        self._log = log


class FieldElem(object):
    """ Element of a finite field.

    Supports the arithmetic operators with other elements of the same field and with Python integers, which are mapped
    into the prime field. Comparison with ``<`` follows the canonical element order.
    """
    __slots__ = ('_field', '_value')

    def __init__(self, field, value):
        self._field = field
        self._value = value

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "FieldElem(" + str(self._field) + ", " + str(self) + ")"

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other._field is not self._field and other._field != self._field:
                raise ValueError("Elements belong to different fields")
            return other._value
        if isinstance(other, int):
            return other % self._field.p
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.add(self._value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.sub(self._value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.sub(b, self._value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.mul(self._value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.mul(self._value, self._field.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self._field, self._field.mul(b, self._field.inv(self._value)))

    def __neg__(self):
        return FieldElem(self._field, self._field.neg(self._value))

    def __pow__(self, n):
        return FieldElem(self._field, self._field.power(self._value, int(n)))

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._value == b

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self._value < self._coerce(other)

    def __hash__(self):
        return hash(self._value)

    def __bool__(self):
        return self._value != 0

    __nonzero__ = __bool__

    @property
    def field(self):
        """ Field the element belongs to.

        :getter: Gets the field
        :type: FieldDesc
        """
        return self._field

    @property
    def value(self):
        """ Index of the element in the canonical enumeration.

        :getter: Gets the element index
        :type: int
        """
        return self._value

    @property
    def rep(self):
        """ Coefficient vector over the prime field, constant term first.

        :getter: Gets the coefficient vector
        :type: tuple
        """
        return self._field.digits(self._value)

    def inverse(self):
        """ Multiplicative inverse. """
        return FieldElem(self._field, self._field.inv(self._value))

    def is_zero(self):
        return self._value == 0

    def is_one(self):
        return self._value == 1


def _check_modulus(p, k, modulus):
    coeffs = tuple(int(c) % p for c in modulus)
    if len(coeffs) != k + 1 or coeffs[-1] != 1:
        raise ValueError("Modulus must be monic of degree " + str(k))
    from . import polyring
    prime = make_field(p, 1)
    if not polyring.Poly(prime, list(coeffs)).is_irreducible():
        raise ValueError("Modulus " + str(list(coeffs)) + " is reducible over gf(" + str(p) + ")")
    return coeffs


def _canonical_modulus(p, k):
    # Least monic irreducible in graded-lex order: lower coefficients read from X^(k-1) down to X^0
    from . import polyring
    prime = make_field(p, 1)
    for lower in itertools.product(range(p), repeat=k):
        if lower[-1] == 0:
            continue
        coeffs = list(reversed(lower)) + [1]
        if polyring.Poly(prime, coeffs).is_irreducible():
            return tuple(coeffs)
    raise ConsistencyError("No irreducible polynomial of degree " + str(k) + " over gf(" + str(p) + ")")


def tonelli_shanks(x, order, one, nonsquare):
    """ Tonelli-Shanks square root in a finite field of odd order.

    Works with any element type supporting ``*``, ``**`` and ``==``; used for base fields and residue fields.

    :param x: nonzero square
    :param order: number of elements of the field
    :type order: int
    :param one: identity element
    :param nonsquare: a non-square of the field
    :return: a square root of x
    """
    s = 0
    m = order - 1
    while m % 2 == 0:
        m //= 2
        s += 1
    c = nonsquare ** m
    r = x ** ((m + 1) // 2)
    t = x ** m
    e = s
    while t != one:
        i = 0
        t2 = t
        while t2 != one:
            t2 = t2 * t2
            i += 1
            if i == e:
                raise NotASquare("Input is not a square")
        b = c
        for _ in range(e - i - 1):
            b = b * b
        r = r * b
        c = b * b
        t = t * c
        e = i
    return r


@export
@lru_cache(maxsize=None)
def make_field(p, k=1):
    """ Returns the finite field with :math:`p^k` elements in its canonical presentation.

    For :math:`k > 1` the modulus is the least monic irreducible polynomial of degree :math:`k` over
    :math:`\\mathbb{F}_p` in graded-lexicographic order. The result is cached, so equal arguments return the same object.

    :param p: odd prime
    :type p: int
    :param k: extension degree
    :type k: int
    :return: field descriptor
    :rtype: FieldDesc
    :raises NonPrime: p is not a prime
    :raises EvenCharacteristic: p is 2
    """
    return FieldDesc(p, k)


@export
def parse_field(text):
    """ Parses a field designator such as ``gf(3)``, ``gf(9)`` or ``gf(3^2)``.

    :param text: field designator
    :type text: str
    :return: canonical field
    :rtype: FieldDesc
    """
    match = _FIELD_RE.match(text)
    if match is None:
        raise ParseError("Cannot parse field designator '" + text + "'")
    base = int(match.group(1))
    if match.group(2) is not None:
        return make_field(base, int(match.group(2)))
    if base < 2:
        raise NonPrime(str(base) + " is not a prime power")
    p = _prime_divisors(base)[0]
    k = 0
    n = base
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NonPrime(str(base) + " is not a prime power")
    return make_field(p, k)


@export
def parse_element(field, text):
    """ Parses a field element written as a polynomial in the generator ``t``, e.g. ``2*t^2+t+1``.

    :param field: field
    :type field: FieldDesc
    :param text: element literal
    :type text: str
    :return: field element
    :rtype: FieldElem
    """
    src = text.replace(' ', '')
    while src.startswith('(') and src.endswith(')'):
        src = src[1:-1]
    if not src:
        raise ParseError("Empty field element literal")
    terms = re.findall(r'([+-]?)([^+-]+)', src)
    if not terms or ''.join(s + t for s, t in terms) != src:
        raise ParseError("Cannot parse field element '" + text + "'")
    result = field.zero
    for sign, body in terms:
        match = _ELEM_TERM_RE.match(body)
        if match is None or (match.group(1) is None and match.group(2) is None):
            raise ParseError("Cannot parse term '" + body + "' of field element '" + text + "'")
        coeff = int(match.group(1)) if match.group(1) is not None else 1
        term = field(coeff)
        if match.group(2) is not None:
            if field.k == 1:
                raise ParseError("The prime field " + str(field) + " has no generator symbol 't'")
            exponent = int(match.group(3)) if match.group(3) is not None else 1
            term = term * (field.gen ** exponent)
        result = result - term if sign == '-' else result + term
    return result


@export
def format_element(x):
    """ Canonical text of a field element, e.g. ``2*t+1``.

    :param x: field element
    :type x: FieldElem
    :return: element literal
    :rtype: str
    """
    coeffs = x.rep
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "t" if i == 1 else "t^" + str(i)
            terms.append(mono if c == 1 else str(c) + "*" + mono)
    return "+".join(terms) if terms else "0"


@export
def is_square(x):
    """ Tests whether a nonzero field element is a square by the Euler criterion :math:`x^{(q-1)/2} = 1`.

    :param x: nonzero element
    :type x: FieldElem
    :return: True if x is a square
    :rtype: bool
    :raises ZeroInput: x is zero
    """
    if x.is_zero():
        raise ZeroInput("Square test of zero")
    return x.field.square_test(x.value)


@export
def canonical_nonsquare(field):
    """ First non-square in the canonical element enumeration.

    :param field: field
    :type field: FieldDesc
    :return: canonical non-square
    :rtype: FieldElem
    """
    return FieldElem(field, field.nonsquare_index())


@export
def sqrt(x):
    """ Canonical square root: the lesser of the two roots in canonical order.

    Computed by Tonelli-Shanks with the canonical non-square as auxiliary element, hence deterministic.

    :param x: square
    :type x: FieldElem
    :return: square root
    :rtype: FieldElem
    :raises NotASquare: x is not a square
    """
    field = x.field
    if x.is_zero():
        return x
    if not field.square_test(x.value):
        raise NotASquare(str(x) + " is not a square in " + str(field))
    r = tonelli_shanks(x, field.q, field.one, canonical_nonsquare(field))
    return min(r, -r)


@export
def primitive_element(field):
    """ Least multiplicative generator of the field in canonical order.

    :param field: field
    :type field: FieldDesc
    :return: primitive element
    :rtype: FieldElem
    """
    return field.primitive_element()


@lru_cache(maxsize=None)
def _embedding_table(sub, big):
    if sub.k == 1:
        return tuple(range(sub.p))
    # Least root of the subfield modulus in the larger field
    mod = sub.modulus
    root = None
    for a in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, a), big.from_int(c))
        if acc == 0:
            root = a
            break
    if root is None:
        raise ConsistencyError("Modulus of " + str(sub) + " has no root in " + str(big))
    table = []
    for a in range(sub.q):
        acc = 0
        for c in reversed(sub.digits(a)):
            acc = big.add(big.mul(acc, root), big.from_int(c))
        table.append(acc)
    return tuple(table)


@export
def embedding(sub, big):
    """ Canonical embedding of a subfield, defined by the least root of the subfield modulus in the larger field.

    :param sub: subfield
    :type sub: FieldDesc
    :param big: field containing a copy of ``sub``
    :type big: FieldDesc
    :return: function mapping elements of ``sub`` to elements of ``big``
    :rtype: callable
    :raises NotASubfield: the degrees or characteristics are incompatible
    """
    if sub.p != big.p or big.k % sub.k != 0:
        raise NotASubfield(str(sub) + " is not a subfield of " + str(big))
    table = _embedding_table(sub, big)

    def embed(x):
        return FieldElem(big, table[x.value])
    return embed


@export
def norm_to_prime(x, subfield):
    """ Norm of a field element to a subfield, :math:`x^{(Q-1)/(q-1)}`.

    The subfield is usually the prime field; for other subfields the value is pulled back through the canonical
    embedding.

    :param x: element of the larger field
    :type x: FieldElem
    :param subfield: subfield
    :type subfield: FieldDesc
    :return: norm of x
    :rtype: FieldElem
    :raises NotASubfield: subfield is not a subfield of the field of x
    """
    big = x.field
    if subfield == big:
        return x
    if subfield.p != big.p or big.k % subfield.k != 0:
        raise NotASubfield(str(subfield) + " is not a subfield of " + str(big))
    y = x ** ((big.q - 1) // (subfield.q - 1))
    table = _embedding_table(subfield, big)
    try:
        return FieldElem(subfield, table.index(y.value))
    except ValueError:
        raise ConsistencyError("Norm of " + str(x) + " does not lie in " + str(subfield))
