"""
.. module:: sqref
    :platform: Unix, Windows
    :synopsis: Square-reflexivity certification, realization of ramification sequences and related reductions

.. moduleauthor:: sqreflex developers

"""

import abc
import random
import logging
import warnings
import functools
import six
from . import config
from . import gf
from . import polyring
from . import quotalg
from . import places
from .polyring import Poly
from .places import RamSeq, Place
from .exceptions import NotSquareFree, NotCoprime, ZeroPolynomial, CapExceeded, UnsupportedSupport, \
    BadInfinityClass, InvalidRamification, DegreeTooSmall, PreconditionViolated, ConsistencyError
from ._utilities import export, derive_seed, run_ordered

__all__ = ['CertificateEntry', 'SqRefResult', 'SqRefCertificate', 'SqRefRefutation']

_LOGGER = logging.getLogger(__name__)

# Paths a certificate entry can come from
PATH_KORNBLUM = 'kornblum'
PATH_EXHAUSTIVE = 'exhaustive'


class CertificateEntry(object):
    """ One square class of a certificate together with its witness.

    :param alpha: square class representative
    :type alpha: quotalg.AlgElem
    :param witness: witness polynomial g
    :type witness: polyring.Poly
    :param path: search path that produced the witness
    :type path: str
    """
    def __init__(self, alpha, witness, path, checks=None):
        self._alpha = alpha
        self._witness = witness
        self._path = path
        self._checks = checks if checks is not None else {}

    def __str__(self):
        return str(self._alpha) + " -> " + str(self._witness) + " [" + self._path + "]"

    __repr__ = __str__

    @property
    def alpha(self):
        return self._alpha

    @property
    def witness(self):
        return self._witness

    @property
    def path(self):
        return self._path

    @property
    def checks(self):
        """ Results of the verifier for this entry.

        :getter: Gets the checks
        :type: dict
        """
        return self._checks


@six.add_metaclass(abc.ABCMeta)
class SqRefResult(object):
    """ Abstract base of the outcomes of a square-reflexivity decision. """
    def __init__(self, f):
        self._f = f

    @property
    def f(self):
        """ Polynomial the result is about.

        :getter: Gets the polynomial
        :type: polyring.Poly
        """
        return self._f

    @property
    @abc.abstractmethod
    def is_certificate(self):
        """ Whether every admissible class has a witness. """
        pass


class SqRefCertificate(SqRefResult):
    """ Certificate of square-reflexivity: one verified entry per norm-admissible square class of :math:`E_f`.

    :param f: square-free polynomial
    :type f: polyring.Poly
    :param entries: certificate entries in class order
    :type entries: list
    """
    def __init__(self, f, entries):
        super(SqRefCertificate, self).__init__(f)
        self._entries = tuple(entries)

    def __str__(self):
        return "SqRefCertificate(" + str(self._f) + ", " + str(len(self._entries)) + " classes)"

    __repr__ = __str__

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    @property
    def entries(self):
        return list(self._entries)

    @property
    def is_certificate(self):
        return True


class SqRefRefutation(SqRefResult):
    """ A norm-admissible square class without a witness up to the degree bound. """
    def __init__(self, f, alpha):
        super(SqRefRefutation, self).__init__(f)
        self._alpha = alpha

    def __str__(self):
        return "SqRefRefutation(" + str(self._f) + ", alpha=" + str(self._alpha) + ")"

    __repr__ = __str__

    @property
    def alpha(self):
        return self._alpha

    @property
    def is_certificate(self):
        return False


def _require_squarefree(f):
    if f.is_zero():
        raise ZeroPolynomial("Square-reflexivity of the zero polynomial")
    if not polyring.is_squarefree(f):
        raise NotSquareFree(str(f) + " is not square-free")


@export
def is_square_mod(f, g):
    """ Tests whether f is a square modulo g.

    A unit modulo :math:`p^e` is a square iff it is a square modulo :math:`p` (odd characteristic), so the test runs
    on the monic irreducible factors of g. A constant g gives the zero ring, where the test holds vacuously.

    :param f: polynomial coprime to g
    :type f: polyring.Poly
    :param g: nonzero polynomial
    :type g: polyring.Poly
    :rtype: bool
    :raises NotCoprime: f and g share a factor
    """
    if g.is_zero():
        raise ZeroPolynomial("Square test modulo the zero polynomial")
    if not polyring.gcd(f, g).is_one():
        raise NotCoprime(str(f) + " and " + str(g) + " are not coprime")
    if g.is_constant():
        return True
    return all(quotalg.is_square_mod_prime(f, p) for p in polyring.support(g))


@export
def witness_bound(f):
    """ Degree bound of the exhaustive witness search, :math:`\\lfloor 3 \\deg(f) / 2 \\rfloor`. """
    return (3 * f.degree) // 2


@export
def verify_witness(f, alpha, g):
    """ Checks a certificate entry from scratch.

    :param f: square-free polynomial
    :param alpha: class representative in :math:`E_f`
    :param g: witness
    :return: results of the coprimality, class and square checks
    :rtype: dict
    """
    checks = dict(coprime=False, square_class=False, square_mod_g=False)
    if g.is_zero() or not polyring.gcd(f, g).is_one():
        return checks
    checks['coprime'] = True
    alg = alpha.algebra
    checks['square_class'] = all(quotalg.is_square_class(alpha * alg(g)))
    checks['square_mod_g'] = is_square_mod(f, g)
    return checks


@export
def verify_certificate(cert):
    """ Re-verifies every entry of a certificate and the set of classes it covers.

    :param cert: certificate
    :type cert: SqRefCertificate
    :return: True if every entry passes and every norm-admissible class is covered
    :rtype: bool
    """
    f = cert.f
    if f.is_constant():
        return len(cert) == 0
    alg = quotalg.QuotAlg(f)
    expected = quotalg.norm_condition_filter(alg, quotalg.square_class_reps(alg))
    if sorted(e.alpha.rep.sort_key() for e in cert) != sorted(a.rep.sort_key() for a in expected):
        return False
    for entry in cert:
        if not all(verify_witness(f, alpha=alg(entry.alpha.rep), g=entry.witness).values()):
            return False
    return True


@export
def check_pair(f, alpha, **kwargs):
    """ Exhaustive witness search for one square class.

    Scans all nonzero g of degree at most :math:`\\lfloor 3 \\deg(f)/2 \\rfloor` in canonical order and returns the first
    g coprime to f with :math:`g \\in \\alpha (E_f^\\times)^2` and f a square modulo g. Within this bound the search is
    complete, so ``None`` means that no witness exists at all.

    Keyword arguments:
        * ``witness_cap``: degree cap overriding the bound. *Default: 3 deg(f) / 2*

    :param f: square-free polynomial
    :type f: polyring.Poly
    :param alpha: invertible element of :math:`E_f`
    :type alpha: quotalg.AlgElem
    :return: certificate entry or None
    :rtype: CertificateEntry
    :raises NotSquareFree: f is not square-free
    """
    _require_squarefree(f)
    cap = kwargs.get('witness_cap', None)
    cap = witness_bound(f) if cap is None else int(cap)
    alg = alpha.algebra
    support = alg.support
    target = quotalg.is_square_class(alpha)
    for g in polyring.polys_up_to_degree(f.field, cap):
        matched = True
        for p, want in zip(support, target):
            r = g % p
            if r.is_zero() or quotalg.is_square_mod_prime(r, p) != want:
                matched = False
                break
        if matched and is_square_mod(f, g):
            return CertificateEntry(alpha, g, PATH_EXHAUSTIVE)
    return None


def _candidate_degrees(start, parity, cap):
    m = start if start % 2 == parity else start + 1
    while m <= cap:
        yield m
        m += 2


@export
def kornblum_find(f, g0, degree_parity, degree_cap, **kwargs):
    """ Searches a monic irreducible :math:`q \\equiv g_0 \\bmod f` of the requested degree parity.

    Candidates of degree :math:`m \\geq \\deg(f)` are :math:`q = h f_{monic} + (g_0 \\bmod f)` with h monic of degree
    :math:`m - \\deg(f)`; below :math:`\\deg(f)` the only candidate is the remainder itself. Degrees are tried in
    increasing order. Small search spaces are enumerated, larger ones sampled with a seed derived from the inputs.

    Keyword arguments:
        * ``seed``: global seed. *Default: config.DEFAULT_SEED*
        * ``exhaustive_limit``: largest search space that is enumerated. *Default: config.EXHAUSTIVE_LIMIT*
        * ``sample_size``: number of samples for larger spaces. *Default: config.SAMPLE_SIZE*

    :param f: nonconstant polynomial
    :param g0: polynomial coprime to f
    :param degree_parity: 0 for even, 1 for odd degrees
    :param degree_cap: largest degree tried
    :return: monic irreducible polynomial
    :rtype: polyring.Poly
    :raises NotCoprime: f and g0 share a factor
    :raises CapExceeded: nothing found up to the cap
    """
    seed = kwargs.get('seed', config.DEFAULT_SEED)
    limit = kwargs.get('exhaustive_limit', config.EXHAUSTIVE_LIMIT)
    samples = kwargs.get('sample_size', config.SAMPLE_SIZE)
    if not polyring.gcd(f, g0).is_one():
        raise NotCoprime(str(f) + " and " + str(g0) + " are not coprime")
    field = f.field
    fm = f.monic()
    n = fm.degree
    r = g0 % fm
    for m in _candidate_degrees(1, degree_parity % 2, degree_cap):
        if m < n:
            if r.degree == m and r.lc.is_one() and polyring.is_irreducible(r):
                return r
            continue
        d = m - n
        if field.q ** d <= limit:
            candidates = polyring.polys_of_degree(field, d, monic=True)
        else:
            rng = random.Random(derive_seed(seed, 'kornblum', field, fm.indices, r.indices, m))
            candidates = (Poly.from_indices(field, tuple(rng.randrange(field.q) for _ in range(d)) + (1,))
                          for _ in range(samples))
        for h in candidates:
            q = h * fm + r
            if polyring.is_irreducible(q):
                return q
    raise CapExceeded("No irreducible polynomial of parity " + str(degree_parity) + " up to degree " +
                      str(degree_cap) + " in the class of " + str(g0) + " mod " + str(f))


def _kornblum_with_retries(f, g0, parity, **kwargs):
    cap = kwargs.get('degree_cap', None)
    cap = f.degree + config.KORNBLUM_CAP_OFFSET if cap is None else int(cap)
    retries = kwargs.get('retries', config.KORNBLUM_RETRIES)
    for attempt in range(retries + 1):
        try:
            return kornblum_find(f, g0, parity, cap, **kwargs)
        except CapExceeded:
            _LOGGER.debug("Kornblum search for %s hit cap %d (attempt %d)", f, cap, attempt + 1)
            cap *= 2
    raise CapExceeded("Kornblum search for " + str(f) + " failed after " + str(retries) + " retries")


def _infinity_choice(f, infinity_bit):
    """ Degree parity of q and unit l such that the symbol {f, l q} has the requested class at infinity.

    The class at infinity is that of :math:`(-1)^{nm} c^m l^n` with :math:`n = \\deg f`, :math:`m = \\deg q`,
    :math:`c = \\mathsf{lc}(f)`.
    """
    field = f.field
    c = f.lc
    if f.degree % 2 == 0:
        if infinity_bit and gf.is_square(c):
            raise BadInfinityClass("Class at infinity must be trivial or that of " + str(c))
        return (1 if infinity_bit else 0), field.one
    minus_c_nonsquare = not gf.is_square(-c)
    if minus_c_nonsquare == bool(infinity_bit):
        return 1, field.one
    return 1, gf.canonical_nonsquare(field)


def _kornblum_witness(f, alpha_rep, infinity_bit, **kwargs):
    parity, ell = _infinity_choice(f, infinity_bit)
    g0 = (alpha_rep * ell.inverse()) % f.monic()
    q = _kornblum_with_retries(f, g0, parity, **kwargs)
    return q * ell


def _certify_class(f, alpha, **kwargs):
    exhaustive = kwargs.get('exhaustive', False)
    entry = None
    if not exhaustive:
        infinity_bit = not gf.is_square(quotalg.norm(alpha))
        try:
            g = _kornblum_witness(f, alpha.rep, infinity_bit, **kwargs)
            entry = CertificateEntry(alpha, g, PATH_KORNBLUM)
        except CapExceeded as e:
            warnings.warn(str(e) + "; falling back to the exhaustive search", UserWarning)
    if entry is None:
        _LOGGER.debug("Exhaustive witness search for %s, class %s", f, alpha)
        entry = check_pair(f, alpha, **kwargs)
        if entry is None:
            return None
    checks = verify_witness(f, alpha, entry.witness)
    if not all(checks.values()):
        raise ConsistencyError("Witness " + str(entry.witness) + " for class " + str(alpha) + " of " + str(f) +
                               " fails verification: " + str(checks))
    return CertificateEntry(alpha, entry.witness, entry.path, checks)


def _certify_worker(field_text, f_text, options, alpha_text):
    # Runs in worker processes, so everything arrives as text
    field = gf.parse_field(field_text)
    f = polyring.parse_poly(field, f_text)
    alg = quotalg.QuotAlg(f)
    alpha = alg(polyring.parse_poly(field, alpha_text))
    entry = _certify_class(f, alpha, **options)
    if entry is None:
        return None
    return str(entry.witness), entry.path


@export
def certify(f, **kwargs):
    """ Decides and certifies square-reflexivity of a square-free polynomial.

    Every norm-admissible square class of :math:`E_f` gets a witness. The fast path builds one from an irreducible
    polynomial in the class (Kornblum search); when its cap is exhausted, or with ``exhaustive=True``, the bounded
    exhaustive search is used. Every witness is re-verified before it is returned.

    Keyword arguments:
        * ``seed``: global seed. *Default: config.DEFAULT_SEED*
        * ``exhaustive``: skip the fast path. *Default: False*
        * ``degree_cap``: initial Kornblum degree cap. *Default: deg(f) + 4*
        * ``retries``: number of cap doublings. *Default: config.KORNBLUM_RETRIES*
        * ``witness_cap``: degree cap of the exhaustive search. *Default: 3 deg(f) / 2*
        * ``jobs``: number of worker processes used over the square classes. *Default: 1*

    :param f: square-free polynomial
    :type f: polyring.Poly
    :return: certificate, or a refutation naming a class without witness
    :rtype: SqRefCertificate or SqRefRefutation
    :raises NotSquareFree: f is not square-free
    :raises ZeroPolynomial: f is zero
    """
    _require_squarefree(f)
    if f.is_constant():
        return SqRefCertificate(f, [])
    jobs = kwargs.pop('jobs', 1)
    alg = quotalg.QuotAlg(f, seed=kwargs.get('seed', config.DEFAULT_SEED))
    classes = quotalg.norm_condition_filter(alg, quotalg.square_class_reps(alg))
    _LOGGER.debug("Certifying %s: %d admissible classes", f, len(classes))
    if jobs > 1:
        worker = functools.partial(_certify_worker, str(f.field), str(f), kwargs)
        results = run_ordered(worker, [str(a) for a in classes], jobs=jobs)
        entries = []
        for alpha, res in zip(classes, results):
            if res is None:
                return SqRefRefutation(f, alpha)
            g = polyring.parse_poly(f.field, res[0])
            entries.append(CertificateEntry(alpha, g, res[1], verify_witness(f, alpha, g)))
        return SqRefCertificate(f, entries)
    entries = []
    for alpha in classes:
        entry = _certify_class(f, alpha, **kwargs)
        if entry is None:
            return SqRefRefutation(f, alpha)
        entries.append(entry)
    return SqRefCertificate(f, entries)


def _check_realizable(rho, f):
    supp = set(polyring.support(f)) if not f.is_constant() else set()
    for place in rho.finite_support:
        if place.poly not in supp:
            raise UnsupportedSupport("Place " + str(place) + " is not in the support of " + str(f))
    # for odd deg f a unit factor of g moves the class at infinity freely
    if rho.at_infinity and f.degree % 2 == 0 and gf.is_square(f.lc):
        raise BadInfinityClass("Class at infinity must be trivial or that of lc(f) = " + str(f.lc))
    if not rho.is_valid():
        raise InvalidRamification("Support " + str(rho) + " has odd size")


def _class_lift(rho, f):
    residues = []
    for p in polyring.support(f):
        place = Place(p)
        if place in rho:
            residues.append((p, place.residue_field.canonical_nonsquare().rep))
        else:
            residues.append((p, Poly.constant(f.field, 1)))
    return polyring.crt(residues, field=f.field)


@export
def minimal_realization(rho, f):
    """ Least g in canonical order with :math:`\\partial(\\{f, g\\}) = \\rho` among :math:`\\deg g \\leq \\deg(f)/2`.

    :return: realizing polynomial or None
    :rtype: polyring.Poly
    """
    for g in polyring.polys_up_to_degree(f.field, f.degree // 2):
        if places.ramify(f, g) == rho:
            return g
    return None


@export
def realize_ramification(rho, f, **kwargs):
    """ Finds g with :math:`\\partial(\\{f, g\\}) = \\rho`.

    The fast path takes an irreducible q in the class prescribed by :math:`\\rho` on the support of f, with its
    degree parity (and a unit factor) fixed by the class at infinity; reciprocity then leaves no ramification at q.
    The fallback is :func:`minimal_realization`, which is complete for minimal realizations.

    The class at infinity is constrained only when deg f is even: the tame symbol at infinity is then the class of
    lc(f) raised to deg g, so a nontrivial class needs lc(f) to be a non-square. For odd deg f a non-square unit
    factor of g toggles the class at infinity, so every class there is realizable.

    Keyword arguments:
        * ``exhaustive``: use the exhaustive search only. *Default: False*
        * ``seed``, ``degree_cap``, ``retries``: as in :func:`certify`

    :param rho: ramification sequence supported on the support of f and infinity
    :type rho: places.RamSeq
    :param f: square-free polynomial
    :type f: polyring.Poly
    :return: realizing polynomial
    :rtype: polyring.Poly
    :raises UnsupportedSupport: rho ramifies outside the support of f and infinity
    :raises BadInfinityClass: deg f is even, lc(f) is a square and the class at infinity is nontrivial
    :raises InvalidRamification: the support of rho has odd size
    """
    _require_squarefree(f)
    _check_realizable(rho, f)
    if rho.is_empty():
        return Poly.constant(f.field, 1)
    if not kwargs.get('exhaustive', False) and not f.is_constant():
        try:
            g = _kornblum_witness(f, _class_lift(rho, f), rho.at_infinity, **kwargs)
            if places.ramify(f, g) == rho:
                return g
            _LOGGER.debug("Fast path realization of %s for %s missed; using the exhaustive search", rho, f)
        except CapExceeded as e:
            warnings.warn(str(e) + "; falling back to the exhaustive search", UserWarning)
    g = minimal_realization(rho, f)
    if g is None:
        raise ConsistencyError("No realization of " + str(rho) + " for " + str(f))
    return g


@export
def ram_reduce(rho, f):
    """ Ramification reduction: g coprime to f with :math:`\\deg g < \\deg f` matching :math:`\\rho` on the support
    of f, so that :math:`\\rho - \\partial(\\{f, g\\})` is supported on the support of g and infinity.

    :raises UnsupportedSupport: rho ramifies outside the support of f and infinity
    """
    supp = set(polyring.support(f)) if not f.is_constant() else set()
    for place in rho.finite_support:
        if place.poly not in supp:
            raise UnsupportedSupport("Place " + str(place) + " is not in the support of " + str(f))
    if not rho.finite_support:
        return Poly.constant(f.field, 1)
    g = _class_lift(rho, f)
    rest = rho - places.ramify(f, g)
    g_supp = set(polyring.support(g)) if not g.is_constant() else set()
    assert all(p.is_infinite or p.poly in g_supp for p in rest), "Reduction left " + str(rest)
    return g


def _is_square_in(alg, h):
    for p in alg.support:
        r = h % p
        if not r.is_zero() and not quotalg.is_square_mod_prime(r, p):
            return False
    return True


@export
def bezout_reduce(f, g):
    """ Transfer-form reduction of a class modulo f.

    Searches x in :math:`E_f` with :math:`s_{n-1}(g x^2) = 1`, where :math:`s_{n-1}` reads the coefficient of
    :math:`\\vartheta^{n-1}`. Then :math:`g x^2 \\bmod f` is monic of degree n - 1, and its square-free part
    :math:`g^*` satisfies: :math:`g g^*` is a square in :math:`E_f` and :math:`\\deg g^* \\equiv \\deg f - 1 \\pmod 2`.
    Squares in :math:`E_f` include zero divisors, so x runs over all nonzero elements in canonical order.

    :param f: monic square-free polynomial of degree at least 2
    :param g: polynomial coprime to f
    :return: monic square-free polynomial
    :rtype: polyring.Poly
    :raises DegreeTooSmall: deg f < 2
    :raises NotCoprime: f and g share a factor
    """
    if f.is_zero() or f.degree < 2:
        raise DegreeTooSmall("Transfer reduction needs deg(f) >= 2, got " + str(f))
    if not polyring.gcd(f, g).is_one():
        raise NotCoprime(str(f) + " and " + str(g) + " are not coprime")
    fm = f.monic()
    n = fm.degree
    alg = quotalg.QuotAlg(fm)
    gx = alg(g)
    for x in alg.elements():
        value = (gx * x * x).rep
        if value.degree != n - 1 or not value.lc.is_one():
            continue
        g_star = polyring.squarefree_part(value)
        if _is_square_in(alg, g * g_star):
            return g_star
    raise ConsistencyError("The transfer form of " + str(g) + " mod " + str(f) + " does not represent 1")


@export
def counterexample_form(f, rho, **kwargs):
    """ Guarded construction of a 4-dimensional form of determinant f that is locally isotropic everywhere but
    anisotropic, from a ramification sequence that f cannot realize.

    Over a finite base field every admissible sequence is realizable, so the guard always fires.

    :raises PreconditionViolated: rho is realizable by f
    """
    from . import qforms
    _require_squarefree(f)
    _check_realizable(rho, f)
    if minimal_realization(rho, f) is not None:
        raise PreconditionViolated(str(rho) + " is realized by a symbol with slot " + str(f))
    field = f.field
    g = bezout_reduce(f.monic(), ram_reduce(rho, f))
    rest = rho - places.ramify(f, g)
    c = gf.canonical_nonsquare(field) if rest.at_infinity else field.one
    cg = g * c
    h = realize_ramification(rest, cg, **kwargs)
    return qforms.DiagForm([f, -cg, -h, cg * h])
