"""
Checks that dx is a primitive form for W_t and that t_0, ..., t_{r-2} are its
flat coordinates, by three independent routes:

  * expanding the oscillatory integrals of W_t directly,
  * computing flat coordinates of the versal unfolding and inverting them,
  * showing that every partition-weighted sum Lambda_I vanishes.
"""

from . import conf
from .base import InadmissibleTwistsError, factorial, rising_product, sign
from .combinatorics import SetPartition, multiset_partitions, set_partitions
from .invariants import InvariantKey, admissible_multisets, is_admissible, open_invariant
from .oscillatory import FermatSignature, expand_all
from .poly import Poly, VarRegistry, series_invert, substitute, truncate_degree
from .potential import build_deformed_potential, build_fermat_versal, build_versal

from fractions import Fraction
import collections
import logging


log = logging.getLogger(__name__)

Failure = collections.namedtuple('Failure', 'index order condition monomial coefficient')
BasisEntry = collections.namedtuple('BasisEntry', 'index phi0 phi1 negative')


class PrimitivityReport (object):
    """
    Outcome of verify_theorem_A: phi_{d,0}, phi_{d,1} and any negative-order
    coefficients per basis index, plus every offending term.
    """

    NEGATIVE = 'negative-order'
    UNIT = 'phi0'
    FLAT = 'phi1'
    DEGREE = 'degree-bound'

    def __init__(self, r, degree_cap):
        self.r = r
        self.degree_cap = degree_cap
        self.entries = []
        self.failures = []

    def add(self, index, phi0, phi1, negative):
        self.entries.append(BasisEntry(index, phi0, phi1, negative))

    def fail(self, index, order, condition, poly):
        for exps, coeff in poly.sorted_terms():
            monomial = Poly._build(poly.registry, {exps: Fraction(1)}).text()
            self.failures.append(Failure(index, order, condition, monomial, coeff))

    @property
    def primitive(self):
        return not any(f.condition in (self.NEGATIVE, self.UNIT) for f in self.failures)

    @property
    def flat(self):
        return self.primitive and not self.failures

    def to_json(self):
        return {
            'r': self.r,
            'degree_cap': self.degree_cap,
            'primitive': self.primitive,
            'flat': self.flat,
            'basis': [
                {
                    'd': entry.index,
                    'phi0': entry.phi0.text(),
                    'phi1': entry.phi1.text(),
                    'negative': dict(('%d' % j, p.text()) for j, p in sorted(entry.negative.items())),
                }
                for entry in self.entries
            ],
            'failures': [
                {
                    'd': f.index,
                    'j': f.order,
                    'condition': f.condition,
                    'monomial': f.monomial,
                    'coefficient': str(f.coefficient),
                }
                for f in self.failures
            ],
        }


def verify_theorem_A(r, degree_cap=None):
    """
    Expands the integral of e^{W_t/hbar} dx over each Xi_d and checks that
    phi_{d,j} = 0 for j < 0, phi_{d,0} = delta_{d0} and phi_{d,1} = t_d.

    Only admissible multisets, of size at most r // 2, can feed phi_{d,1}, so any
    cap >= r // 2 decides the j <= 1 coefficients completely.
    """
    degree_cap = r if degree_cap is None else degree_cap
    if r < 2:
        raise ValueError('r must be at least 2, got %d' % r)
    if degree_cap < max(1, r // 2):
        raise ValueError('Degree cap %d is below r // 2 = %d' % (degree_cap, r // 2))
    potential = build_deformed_potential(r)
    registry = potential.registry
    series = expand_all(FermatSignature(r), potential.poly, degree_cap, max_order=conf.FLATNESS_ORDER)

    report = PrimitivityReport(r, degree_cap)
    for d in range(r - 1):
        expansion = series[d]
        negative = dict((j, expansion[j]) for j in expansion.negative_orders())
        phi0, phi1 = expansion[0], expansion[1]
        report.add(d, phi0, phi1, negative)
        for j, poly in sorted(negative.items()):
            report.fail(d, j, report.NEGATIVE, poly)
        unit = Poly.one(registry) if d == 0 else Poly.zero(registry)
        report.fail(d, 0, report.UNIT, phi0 - unit)
        report.fail(d, 1, report.FLAT, phi1 - Poly.variable(registry, 't%d' % d))
        excess = phi1 - truncate_degree(phi1, None, r // 2)
        report.fail(d, 1, report.DEGREE, excess)
    log.debug('r=%d cap=%d: primitive=%s flat=%s', r, degree_cap, report.primitive, report.flat)
    return report


def versal_flat_map(signature, degree_cap):
    """
    The flat coordinates t_delta = phi_{delta,1}(y) of the versal unfolding, one
    x-free Poly per basis index. An int signature means W = x^r.
    """
    signature = FermatSignature(signature)
    if degree_cap < 1:
        raise ValueError('Degree cap must be at least 1, got %d' % degree_cap)
    if signature.n == 1:
        versal = build_versal(signature[0]).poly
    else:
        versal = build_fermat_versal(signature)
    series = expand_all(signature, versal, degree_cap, max_order=1)
    return [series[index][1] for index in signature.basis()]


def oracle_flat_potential(r, degree_cap=None):
    """
    Rewrites the versal unfolding in its own flat coordinates: invert the map
    y -> t and substitute. Uses no open invariants at all.
    """
    degree_cap = r if degree_cap is None else degree_cap
    target = VarRegistry.potential(r)
    inverse = series_invert(versal_flat_map(r, degree_cap), target, degree_cap)
    assignment = dict(('y%d' % d, g) for d, g in enumerate(inverse))
    return substitute(build_versal(r).poly, assignment, target, degree_cap=degree_cap)


def oracle_difference(r, degree_cap=None):
    """
    W_t minus the versal-inversion potential, modulo the degree cap + 1 ideal.
    Zero is the expected answer.
    """
    degree_cap = r if degree_cap is None else degree_cap
    potential = truncate_degree(build_deformed_potential(r).poly, None, degree_cap)
    return potential - oracle_flat_potential(r, degree_cap)


class LambdaInput (object):
    """
    What Lambda_I is evaluated on. Numeric mode needs an admissible multiset and
    sets b_i = r - a_i; symbolic mode keeps b_1..b_l formal and so depends only on
    r and l.
    """

    def __init__(self, r, multiset=None, symbolic=False, size=None):
        self.r = r
        self.multiset = multiset
        self.symbolic = symbolic
        if multiset is not None:
            if multiset.r != r:
                raise ValueError('Multiset is over r=%d, expected %d' % (multiset.r, r))
            size = multiset.l
            if not symbolic and not (multiset.l and is_admissible(multiset)):
                raise InadmissibleTwistsError('%r is not admissible for r=%d' % (multiset, r))
        elif not symbolic:
            raise InadmissibleTwistsError('Numeric Lambda needs a multiset of twists.')
        if size is None or size < 2:
            raise InadmissibleTwistsError('Lambda is defined for |I| >= 2, got %r' % (size,))
        self.size = size

    @property
    def twists(self):
        return None if self.symbolic else self.multiset.entries


def cont(r, partition, twists=None, registry=None):
    """
    Cont(Q) = (-1)^(h-1) prod_{j=1}^{h-1} (jr + 1 - b_I)
              prod_j prod_{i=1}^{|Q_j|-1} (r - b_{Q_j} + i),

    where I is the union of the blocks. With twists given, b_i = r - a_i and the
    result is a constant.
    """
    elements = partition.elements()
    if registry is None:
        registry = VarRegistry.twists(max(elements) if elements else 0)

    def b(i):
        if twists is None:
            return Poly.variable(registry, 'b%d' % i)
        return Poly.constant(registry, r - twists[i - 1])

    b_total = Poly.zero(registry)
    for i in elements:
        b_total = b_total + b(i)
    result = Poly.constant(registry, sign(partition.h - 1))
    for j in range(1, partition.h):
        result = result * (j * r + 1 - b_total)
    for block in partition:
        b_block = Poly.zero(registry)
        for i in block:
            b_block = b_block + b(i)
        for i in range(1, len(block)):
            result = result * (r - b_block + i)
    return result


def lambda_contributions(lambda_input):
    """
    |Aut(I)| Lambda_I split by the number of blocks h, summed over Part_h([l]).
    """
    r, l = lambda_input.r, lambda_input.size
    registry = VarRegistry.twists(l)
    scale = Fraction(1, r ** (l - 1))
    contributions = {}
    for h in range(1, l + 1):
        total = Poly.zero(registry)
        for partition in set_partitions(l, h):
            total = total + cont(r, partition, lambda_input.twists, registry)
        total = total * scale
        contributions[h] = total if lambda_input.symbolic else total.constant_term()
    return contributions


def lambda_value(lambda_input):
    """
    |Aut(I)| Lambda_I: a Fraction in numeric mode, a Poly in b_1..b_l in
    symbolic mode. Both vanish.
    """
    contributions = lambda_contributions(lambda_input)
    if lambda_input.symbolic:
        total = Poly.zero(VarRegistry.twists(lambda_input.size))
    else:
        total = Fraction(0)
    for h in sorted(contributions):
        total = total + contributions[h]
    return total


def lambda_contributions_from_invariants(multiset):
    """
    The same split of |Aut(I)| Lambda_I by h, computed from the closed-form
    invariants over multiset partitions with automorphism weights instead of
    set partitions.
    """
    if not (multiset.l and is_admissible(multiset)):
        raise InadmissibleTwistsError('%r is not admissible for r=%d' % (multiset, multiset.r))
    r, k_total = multiset.r, multiset.residue
    contributions = {}
    for h in range(1, multiset.l + 1):
        total = Fraction(0)
        for partition in multiset_partitions(multiset, h):
            ks = [part.residue for part in partition]
            if sum(ks) != k_total + (h - 1) * r:
                raise InadmissibleTwistsError('Boundary counts of %r do not add up' % (partition,))
            term = sign(h - 1) * rising_product(Fraction(1 + k_total, r), h - 1) / partition.aut_order()
            for part, k in zip(partition, ks):
                invariant = open_invariant(InvariantKey.from_multiset(part, k))
                term *= sign(part.l - 1) * invariant / (factorial(k) * part.aut_order())
            total += term
        contributions[h] = total * multiset.aut_order()
    return contributions


def lambda_from_invariants(multiset):
    return sum(lambda_contributions_from_invariants(multiset).values(), Fraction(0))


def forget_last(partition):
    """
    f: Part([l]) -> Part([l-1]), deleting l from its block (and the block if it
    was {l}).
    """
    last = max(partition.elements())
    blocks = [tuple(i for i in block if i != last) for block in partition]
    return SetPartition(block for block in blocks if block)


def lift_partitions(partition, l):
    """
    The h + 1 preimages of Q under f: Q with {l} added, then l placed in each block.
    """
    lifts = [SetPartition(list(partition) + [(l,)])]
    for j in range(partition.h):
        lifts.append(SetPartition(
            block + (l,) if n == j else block for n, block in enumerate(partition)))
    return lifts


def cont_recursion_check(r, l):
    """
    Checks sum_{Q' in f^-1(Q)} Cont(Q')|_{b_l=0} = (l - 2) Cont(Q) for every Q in
    Part([l-1]), as polynomials in b_1..b_{l-1}.
    """
    if l < 2:
        raise ValueError('The recursion starts at l = 2, got %d' % l)
    registry = VarRegistry.twists(l)
    last = 'b%d' % l
    passed = True
    for partition in set_partitions(l - 1):
        lifts = lift_partitions(partition, l)
        if any(forget_last(lift) != partition for lift in lifts):
            log.warning('Lift of %r does not map back under f', partition)
            passed = False
        lhs = Poly.zero(registry)
        for lift in lifts:
            lhs = lhs + substitute(cont(r, lift, registry=registry), {last: 0})
        rhs = cont(r, partition, registry=registry) * (l - 2)
        if lhs != rhs:
            log.warning('Cont recursion fails for r=%d at %r: %s != %s', r, partition, lhs, rhs)
            passed = False
    return passed


def lambda_scan(r, max_size=None):
    """
    Numeric |Aut(I)| Lambda_I for every admissible I with 2 <= |I| <= max_size.
    """
    max_size = r // 2 if max_size is None else max_size
    results = []
    for multiset in admissible_multisets(r, min_size=2, max_size=max_size):
        results.append((multiset, lambda_value(LambdaInput(r, multiset))))
    return results


def symbolic_lambda(r, l):
    return lambda_value(LambdaInput(r, symbolic=True, size=l))
