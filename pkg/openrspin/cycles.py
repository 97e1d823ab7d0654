"""
Floating-point check of the explicit cycle basis for x^r.

The rays Psi_j = {t exp(i((pi + arg hbar) + 2 pi j)/r)} carry x^r/hbar onto the
negative reals, so int_{Psi_j} x^k e^{x^r/hbar} dx converges and can be computed
by quadrature. Differences of consecutive rays give the matrix A, whose closed
form and explicit inverse define the cycles Xi_j with
int_{Xi_j} x^k e^{x^r/hbar} dx = delta_{jk}.

Branch: arg hbar is taken in (-pi, pi] and hbar^s = exp(s (ln|hbar| + i arg hbar)),
consistently for C_k, Xi_j and the ray angles.
"""

import numpy as np

from . import conf
from .base import QuadratureError
from .oscillatory import FermatSignature

import cmath
import logging
import math


log = logging.getLogger(__name__)

# Lanczos coefficients for g = 7, n = 9; relative accuracy near 1e-15 on the
# positive reals.
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def lanczos_gamma(x):
    """
    Gamma(x) for real x, by the Lanczos approximation (reflection below 1/2).
    """
    x = float(x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * lanczos_gamma(1.0 - x))
    x -= 1.0
    series = LANCZOS_COEFFICIENTS[0]
    for i, c in enumerate(LANCZOS_COEFFICIENTS[1:], 1):
        series += c / (x + i)
    t = x + LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series


def principal_arg(hbar):
    if hbar == 0:
        raise ValueError('hbar must be nonzero.')
    return cmath.phase(complex(hbar))


def hbar_power(hbar, s, arg=None):
    """
    hbar^s on the branch fixed by ``arg`` (the principal one by default).
    """
    arg = principal_arg(hbar) if arg is None else arg
    return cmath.exp(s * complex(math.log(abs(hbar)), arg))


def ray_angle(r, j, arg):
    return (math.pi + arg + 2.0 * math.pi * j) / r


_RULES = {}


def _gauss_legendre_rule(nodes):
    if nodes not in _RULES:
        _RULES[nodes] = np.polynomial.legendre.leggauss(nodes)
    return _RULES[nodes]


def _gauss_legendre(func, a, b, nodes):
    x, w = _gauss_legendre_rule(nodes)
    half = 0.5 * (b - a)
    return half * float(np.dot(w, func(0.5 * (a + b) + half * x)))


def adaptive_gauss_legendre(func, a, b, tolerance=conf.QUADRATURE_TOLERANCE,
                            nodes=conf.QUADRATURE_NODES, max_depth=conf.QUADRATURE_MAX_DEPTH):
    """
    Integrates a vectorised real function over [a, b], bisecting until the two
    halves agree with the whole to ``tolerance``. The subdivision is
    deterministic.
    """
    def refine(lo, hi, whole, depth):
        mid = 0.5 * (lo + hi)
        left = _gauss_legendre(func, lo, mid, nodes)
        right = _gauss_legendre(func, mid, hi, nodes)
        if abs(left + right - whole) <= tolerance:
            return left + right
        if depth >= max_depth:
            raise QuadratureError('No convergence on [%g, %g] after %d bisections' % (lo, hi, depth))
        return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1)

    return refine(a, b, _gauss_legendre(func, a, b, nodes), 0)


def tail_cutoff(r, k, tail=conf.QUADRATURE_TAIL, limit=2000.0):
    """
    The smallest integer U with exp(-U) U^((k+1)/r) < tail.
    """
    s = (k + 1.0) / r
    u = 1.0
    while math.exp(-u) * u ** s >= tail:
        u += 1.0
        if u > limit:
            raise QuadratureError('Tail bound %g not reached for r=%d, k=%d' % (tail, r, k))
    return u


def psi_ray_integral(r, j, k, hbar, arg=None, tail=conf.QUADRATURE_TAIL, **kwargs):
    """
    int_{Psi_j} x^k e^{x^r/hbar} dx by quadrature. With x = t e^{i theta_j} and
    t = |hbar|^{1/r} s the integral becomes

        e^{i (k+1) theta_j} |hbar|^{(k+1)/r} int_0^inf s^k e^{-s^r} ds,

    whose integrand is smooth; the range is cut where the tail drops below
    ``tail``.
    """
    if r < 2 or not 0 <= k <= r - 2:
        raise ValueError('Need r >= 2 and 0 <= k <= r - 2, got r=%d, k=%d' % (r, k))
    arg = principal_arg(hbar) if arg is None else arg
    upper = tail_cutoff(r, k, tail) ** (1.0 / r)
    radial = adaptive_gauss_legendre(lambda s: s ** k * np.exp(-s ** r), 0.0, upper, **kwargs)
    theta = ray_angle(r, j, arg)
    value = cmath.exp(1j * (k + 1) * theta) * abs(hbar) ** ((k + 1.0) / r) * radial
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise QuadratureError('Non-finite ray integral for r=%d, j=%d, k=%d' % (r, j, k))
    return value


def psi_ray_closed(r, j, k, hbar, arg=None):
    """
    Closed form of the ray integral: e^{i (k+1) theta_j} |hbar|^{(k+1)/r} Gamma((k+1)/r) / r.
    """
    arg = principal_arg(hbar) if arg is None else arg
    s = (k + 1.0) / r
    return cmath.exp(1j * (k + 1) * ray_angle(r, j, arg)) * abs(hbar) ** s * lanczos_gamma(s) / r


def zeta(r):
    return cmath.exp(2j * math.pi / r)


def c_coefficients(r, hbar, arg=None):
    """
    C_k = e^{pi i (k+1)/r} hbar^{(k+1)/r} Gamma((k+1)/r) (e^{2 pi i (k+1)/r} - 1).
    """
    values = []
    for k in range(r - 1):
        s = (k + 1.0) / r
        values.append(cmath.exp(1j * math.pi * s) * hbar_power(hbar, s, arg) * lanczos_gamma(s)
                      * (cmath.exp(2j * math.pi * s) - 1.0))
    return np.array(values, dtype=complex)


def b_matrix(r, rows=None):
    """
    B_{jk} = zeta^{j(k+1)} / r. ``rows`` defaults to 0..r-2.
    """
    rows = range(r - 1) if rows is None else rows
    z = zeta(r)
    return np.array([[z ** (j * (k + 1)) / r for k in range(r - 1)] for j in rows], dtype=complex)


def b_inverse_closed(r):
    """
    (B^-1)_{jk} = zeta^{-k(j+1)} - zeta^{j+1}.
    """
    z = zeta(r)
    return np.array([[z ** (-k * (j + 1)) - z ** (j + 1) for k in range(r - 1)] for j in range(r - 1)],
                    dtype=complex)


def a_matrix_closed(r, hbar, arg=None, rows=None):
    """
    A_{jk} = C_k zeta^{j(k+1)} / r, the integral of x^k e^{x^r/hbar} over
    Psi_{j+1} - Psi_j.
    """
    return b_matrix(r, rows) * c_coefficients(r, hbar, arg)[np.newaxis, :]


def a_matrix_quadrature(r, hbar, arg=None, **kwargs):
    """
    A built from ray integrals: A_{jk} = psi(j+1, k) - psi(j, k).
    """
    psi = np.array([[psi_ray_integral(r, j, k, hbar, arg, **kwargs) for k in range(r - 1)]
                    for j in range(r)], dtype=complex)
    return psi[1:, :] - psi[:-1, :]


class CycleBasis (object):
    """
    The cycles Xi_j written in the basis Psi_{k+1} - Psi_k: row j of
    ``coefficients`` is (A^-1)_{jk} = (zeta^{-k(j+1)} - zeta^{j+1}) / C_j.
    """

    def __init__(self, r, hbar=conf.DEFAULT_HBAR, arg=None):
        self.r = r
        self.hbar = complex(hbar)
        self.arg = principal_arg(hbar) if arg is None else arg
        c = c_coefficients(r, self.hbar, self.arg)
        self.coefficients = b_inverse_closed(r) / c[:, np.newaxis]

    def pair(self, a_matrix):
        """
        int_{Xi_j} x^k e^{x^r/hbar} dx, from the integrals over Psi_{j+1} - Psi_j.
        """
        return self.coefficients.dot(a_matrix)


def _max_deviation(matrix):
    return float(np.max(np.abs(matrix - np.eye(matrix.shape[0]))))


def dual_basis_matrix(r, hbar=conf.DEFAULT_HBAR, quadrature=True, **kwargs):
    basis = CycleBasis(r, hbar)
    if quadrature:
        a = a_matrix_quadrature(r, basis.hbar, basis.arg, **kwargs)
    else:
        a = a_matrix_closed(r, basis.hbar, basis.arg)
    return basis.pair(a)


def dual_basis_check(r, hbar=conf.DEFAULT_HBAR, quadrature=True, **kwargs):
    """
    max |int_{Xi_j} x^k e^{x^r/hbar} dx - delta_{jk}| over all j, k.
    """
    error = _max_deviation(dual_basis_matrix(r, hbar, quadrature, **kwargs))
    log.debug('dual basis r=%d hbar=%r: max error %.3g', r, hbar, error)
    return error


def b_inverse_check(r):
    """
    max |B B^-1 - 1| with the closed-form inverse.
    """
    return _max_deviation(b_matrix(r).dot(b_inverse_closed(r)))


def a_inverse_check(r, hbar=conf.DEFAULT_HBAR):
    basis = CycleBasis(r, hbar)
    return _max_deviation(a_matrix_closed(r, basis.hbar, basis.arg).dot(basis.coefficients))


def quadrature_error(r, hbar=conf.DEFAULT_HBAR, **kwargs):
    """
    Largest relative gap between quadrature and closed form over all rays
    j = 0..r-1 and k = 0..r-2.
    """
    worst = 0.0
    for j in range(r):
        for k in range(r - 1):
            numeric = psi_ray_integral(r, j, k, hbar, **kwargs)
            closed = psi_ray_closed(r, j, k, hbar)
            worst = max(worst, abs(numeric - closed) / abs(closed))
    return worst


def branch_shift_error(r, hbar=conf.DEFAULT_HBAR):
    """
    Moving arg hbar to arg hbar + 2 pi turns Psi_j into Psi_{j+1}, so row j of
    the shifted A must equal row j + 1 of the original.
    """
    arg = principal_arg(hbar)
    shifted = a_matrix_closed(r, hbar, arg + 2.0 * math.pi)
    original = a_matrix_closed(r, hbar, arg, rows=range(1, r))
    return float(np.max(np.abs(shifted - original)))


def product_dual_check(signature, hbar=conf.DEFAULT_HBAR, quadrature=True, **kwargs):
    """
    For Xi_delta = Xi_{delta_1} x Xi_{delta_2}, the pairing with x^{delta'} is the
    Kronecker product of the one-variable pairings; returns its max deviation
    from the identity.
    """
    signature = FermatSignature(signature)
    if signature.n != 2:
        raise ValueError('Product cycles are checked for two variables, got %r' % (signature,))
    first, second = [dual_basis_matrix(r, hbar, quadrature, **kwargs) for r in signature]
    return _max_deviation(np.kron(first, second))
