"""
Formal oscillatory integrals over the dual cycles Xi_delta.

Monomials are reduced in the twisted de Rham quotient with the two relations

    x_i^{r_i - 1} x^a Omega = 0,
    x_i^{r_i} x^a Omega = -hbar (a_i + 1) / r_i x^a Omega,

and the pairing with Xi_delta picks out the coefficient of the basis element
x^delta. The hbar^-j coefficients are exact polynomials in the deformation
variables.
"""

from .base import ExpansionError, sign
from .poly import HbarSeries, Poly, poly_mul

from fractions import Fraction
import collections
import itertools
import logging


log = logging.getLogger(__name__)


class FermatSignature (tuple):
    """
    Exponents (r_1, ..., r_n) of x_1^{r_1} + ... + x_n^{r_n}.
    """

    def __new__(cls, exponents):
        if isinstance(exponents, int):
            exponents = (exponents,)
        exponents = tuple(int(r) for r in exponents)
        if not exponents or any(r < 2 for r in exponents):
            raise ValueError('Fermat exponents must all be at least 2, got %r' % (exponents,))
        return super(FermatSignature, cls).__new__(cls, exponents)

    @property
    def n(self):
        return len(self)

    def basis(self):
        """
        The index set D. For n = 1 indices are plain ints 0..r-2, otherwise
        exponent tuples in lexicographic order.
        """
        if self.n == 1:
            return list(range(self[0] - 1))
        return [tuple(d) for d in itertools.product(*[range(r - 1) for r in self])]

    @property
    def dimension(self):
        result = 1
        for r in self:
            result *= r - 1
        return result

    def unit_index(self):
        return 0 if self.n == 1 else (0,) * self.n


class ReducedForm (collections.namedtuple('ReducedForm', 'basis hbar_power scalar')):
    """
    scalar * hbar^hbar_power * x^basis, or zero (basis None).
    """

    @classmethod
    def zero(cls):
        return cls(None, 0, Fraction(0))

    def is_zero(self):
        return self.basis is None


def hbar_shift_coefficient(r, m, k):
    """
    (-1)^m prod_{i=1}^m (i - 1 + (k + 1)/r): the factor relating the integral of
    x^{mr + k} to that of x^k. It stands in for Gamma(m + (k+1)/r)/Gamma((k+1)/r).
    """
    base = Fraction(k + 1, r)
    result = Fraction(sign(m))
    for i in range(1, m + 1):
        result *= i - 1 + base
    return result


def reduce_monomial(signature, exponents):
    """
    Reduces x^e Omega to a multiple of a basis element. Each variable is handled
    independently: e_i = m_i r_i + k_i contributes hbar^{m_i} times the shift
    coefficient, and k_i = r_i - 1 kills the form.
    """
    signature = FermatSignature(signature)
    if isinstance(exponents, int):
        exponents = (exponents,)
    if len(exponents) != signature.n:
        raise ValueError('Expected %d exponents, got %r' % (signature.n, exponents))
    basis = []
    power = 0
    scalar = Fraction(1)
    for r, e in zip(signature, exponents):
        if e < 0:
            raise ValueError('Negative exponent %d' % e)
        m, k = divmod(e, r)
        if k == r - 1:
            return ReducedForm.zero()
        basis.append(k)
        power += m
        scalar *= hbar_shift_coefficient(r, m, k)
    index = basis[0] if signature.n == 1 else tuple(basis)
    return ReducedForm(index, power, scalar)


def leading_term(signature, registry):
    """
    x_1^{r_1} + ... + x_n^{r_n} over ``registry``.
    """
    if len(registry.x_positions) != signature.n:
        raise ExpansionError('%r has %d formal variables, the signature needs %d'
                             % (registry, len(registry.x_positions), signature.n))
    poly = Poly.zero(registry)
    for name, r in zip(registry.x_names, signature):
        poly = poly + Poly.monomial(registry, {name: r})
    return poly


def _check_deformation(signature, registry, deformation):
    for exps in deformation.terms:
        if registry.deformation_degree(exps) < 1:
            raise ExpansionError('Deformation term of degree 0 in the deformation variables: %s'
                                 % Poly._build(registry, {exps: deformation.terms[exps]}))
        for i, r in zip(registry.x_positions, signature):
            if exps[i] >= r:
                raise ExpansionError('Deformation term with x-degree >= %d: %s'
                                     % (r, Poly._build(registry, {exps: deformation.terms[exps]})))


def expand_all(signature, potential, degree_cap, max_order=None):
    """
    Expands the integral of e^{W/hbar} Omega over every Xi_delta at once,

        sum_{h >= 0} (W - W_0)^h / (h! hbar^h),

    complete through deformation degree ``degree_cap``. Returns a dict from
    basis index to HbarSeries. With ``max_order`` set, hbar^-j coefficients with
    j > max_order are not computed.
    """
    signature = FermatSignature(signature)
    potential = getattr(potential, 'poly', potential)
    registry = potential.registry
    deformation = potential - leading_term(signature, registry)
    _check_deformation(signature, registry, deformation)

    x_positions = registry.x_positions
    slack = signature.n - 1
    buckets = dict((index, {}) for index in signature.basis())
    unit = tuple(0 for _ in range(len(registry)))
    buckets[signature.unit_index()][0] = {unit: Fraction(1)}

    power = Poly.one(registry)
    for h in range(1, degree_cap + 1):
        power = poly_mul(power, deformation, degree_cap) * Fraction(1, h)
        if max_order is not None:
            # The order j = h - sum floor(e_i / r_i) drops by at most n - 1 per
            # further factor, so anything beyond this bound never comes back.
            bound = max_order + slack * (degree_cap - h)
            power = Poly._build(registry, dict(
                (exps, c) for exps, c in power.terms.items()
                if h - sum(exps[i] // r for i, r in zip(x_positions, signature)) <= bound))
        if not power:
            break
        log.debug('order h=%d: %d terms', h, len(power))
        for exps, coeff in power.terms.items():
            reduced = reduce_monomial(signature, tuple(exps[i] for i in x_positions))
            if reduced.is_zero():
                continue
            order = h - reduced.hbar_power
            if max_order is not None and order > max_order:
                continue
            stripped = list(exps)
            for i in x_positions:
                stripped[i] = 0
            stripped = tuple(stripped)
            bucket = buckets[reduced.basis].setdefault(order, {})
            bucket[stripped] = bucket.get(stripped, 0) + coeff * reduced.scalar

    series = {}
    for index, orders in buckets.items():
        series[index] = HbarSeries(registry, dict(
            (order, Poly(registry, terms)) for order, terms in orders.items()))
    return series


def expand_integral(signature, potential, index, degree_cap, max_order=None):
    """
    sum_j phi_{index,j} hbar^-j for a single cycle Xi_index.
    """
    signature = FermatSignature(signature)
    if index not in signature.basis():
        raise ValueError('Basis index %r is outside %r' % (index, signature.basis()))
    return expand_all(signature, potential, degree_cap, max_order)[index]
