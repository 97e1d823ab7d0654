from .base import factorial, sign
from .combinatorics import aut_order
from .invariants import enumerate_nonzero
from .poly import FORMAL_X, Poly, VarRegistry

from fractions import Fraction
import itertools
import logging


log = logging.getLogger(__name__)


class Unfolding (object):
    """
    A deformation of x^r, kept together with its r and registry.
    """

    def __init__(self, r, poly):
        self.r = r
        self.poly = poly

    @property
    def registry(self):
        return self.poly.registry

    def deformation(self):
        """
        Everything except the leading x^r.
        """
        return self.poly - Poly.monomial(self.registry, {FORMAL_X: self.r})

    def __eq__(self, other):
        return type(self) is type(other) and self.r == other.r and self.poly == other.poly

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        return self.poly.text()

    def __repr__(self):
        return '%s(r=%d, %s)' % (self.__class__.__name__, self.r, self.poly.text())


class DeformedPotential (Unfolding):
    pass


class VersalUnfolding (Unfolding):
    pass


def build_deformed_potential(r):
    """
    W_t: the generating function of primary open r-spin invariants,

        sum (-1)^(l-1) <prod tau_0^{a_i} sigma^{k+1}> / (k! |Aut(I)|) t_I x^k,

    over the nonzero invariants with twists <= r - 2. The l = 0 term gives x^r.
    """
    registry = VarRegistry.potential(r)
    poly = Poly.zero(registry)
    for key, value in enumerate_nonzero(r):
        coefficient = sign(key.l - 1) * value / (factorial(key.k) * aut_order(key.twists))
        powers = {FORMAL_X: key.k}
        for a in key.twists:
            name = 't%d' % a
            powers[name] = powers.get(name, 0) + 1
        poly = poly + Poly.monomial(registry, powers, coefficient)
    log.debug('W_t for r=%d has %d terms', r, len(poly))
    return DeformedPotential(r, poly)


def build_versal(r):
    """
    x^r + sum_{d=0}^{r-2} y_d x^d.
    """
    registry = VarRegistry.versal(r)
    poly = Poly.monomial(registry, {FORMAL_X: r})
    for d in range(r - 1):
        poly = poly + Poly.monomial(registry, {'y%d' % d: 1, FORMAL_X: d})
    return VersalUnfolding(r, poly)


def fermat_basis(exponents):
    """
    The exponent vectors delta with 0 <= delta_i <= r_i - 2, lexicographically.
    """
    return [tuple(delta) for delta in itertools.product(*[range(r - 1) for r in exponents])]


def build_fermat_versal(exponents):
    """
    x_1^{r_1} + ... + x_n^{r_n} + sum_delta y_delta x^delta, over x1..xn.
    """
    exponents = tuple(exponents)
    basis = fermat_basis(exponents)
    registry = VarRegistry.fermat(basis)
    x_names = registry.x_names
    poly = Poly.zero(registry)
    for name, r in zip(x_names, exponents):
        poly = poly + Poly.monomial(registry, {name: r})
    for delta in basis:
        y_name = registry.names[registry.deformation_positions[basis.index(delta)]]
        powers = dict(zip(x_names, delta))
        powers[y_name] = 1
        poly = poly + Poly.monomial(registry, powers, Fraction(1))
    return poly
