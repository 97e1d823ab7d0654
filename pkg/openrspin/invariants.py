"""
Closed-form primary open r-spin invariants <prod tau_0^{a_i} sigma^{k+1}> and
the admissibility criteria that decide which of them are nonzero.
"""

from .base import factorial
from .combinatorics import TwistMultiset

from fractions import Fraction
import collections
import itertools
import logging


log = logging.getLogger(__name__)


class InvariantKey (collections.namedtuple('InvariantKey', 'r twists k')):
    """
    (r, I, k): l internal points with twists I and k + 1 boundary points. At this
    level twists may go up to r - 1.
    """

    def __new__(cls, r, twists, k):
        twists = tuple(sorted(int(a) for a in twists))
        if r < 2:
            raise ValueError('r must be at least 2, got %d' % r)
        for a in twists:
            if not 0 <= a <= r - 1:
                raise ValueError('Twist %d is outside 0..%d' % (a, r - 1))
        return super(InvariantKey, cls).__new__(cls, r, twists, int(k))

    @classmethod
    def from_multiset(cls, multiset, k):
        return cls(multiset.r, multiset.entries, k)

    @property
    def l(self):
        return len(self.twists)


def satisfies_dimension_constraint(r, twists, k):
    """
    ((r - 2)k + 2 sum a_i) / r == 2l + k - 2, tested without division.
    """
    return r * (2 * len(twists) + k - 2) == (r - 2) * k + 2 * sum(twists)


def open_invariant(key):
    """
    (k + l - 1)! / (-r)^(l - 1) when the dimension constraint holds, else 0. For
    l = 0 the exponent is -1 and the value is -r!.
    """
    r, twists, k = key
    if k < 0 or not satisfies_dimension_constraint(r, twists, k):
        return Fraction(0)
    n = k + len(twists) - 1
    if n < 0:
        return Fraction(0)
    return Fraction(factorial(n)) / Fraction(-r) ** (len(twists) - 1)


def is_admissible(multiset):
    """
    sum a_i == r(I) + (|I| - 1)r, equivalently 0 < b_I <= r.
    """
    if not multiset.l:
        raise ValueError('Admissibility is defined for nonempty multisets only.')
    return sum(multiset.entries) == multiset.residue + (multiset.l - 1) * multiset.r


def unique_boundary_count(multiset):
    """
    The only k with a nonzero invariant for I, namely r(I), or None.
    """
    if is_admissible(multiset):
        return multiset.residue
    return None


def admissible_multisets(r, min_size=1, max_size=None):
    """
    Every admissible I with min_size <= |I| <= max_size, found by scanning the
    region b_I <= r (each b_i >= 2), ordered by size then entries.
    """
    found = []

    def extend(b_values, budget):
        if b_values and len(b_values) >= min_size:
            found.append(TwistMultiset(r, [r - b for b in b_values]))
        if max_size is not None and len(b_values) >= max_size:
            return
        # Non-increasing b keeps each multiset generated once.
        top = b_values[-1] if b_values else r
        for b in range(min(top, budget), 1, -1):
            extend(b_values + [b], budget - b)

    extend([], r)
    return sorted(found)


def enumerate_nonzero(r):
    """
    All nonzero primary invariants with twists <= r - 2: the l = 0 term at k = r
    followed by the admissible multisets at k = r(I).
    """
    if r < 2:
        raise ValueError('r must be at least 2, got %d' % r)
    closed = InvariantKey(r, (), r)
    items = [(closed, open_invariant(closed))]
    for multiset in admissible_multisets(r):
        key = InvariantKey.from_multiset(multiset, multiset.residue)
        items.append((key, open_invariant(key)))
    log.debug('r=%d: %d nonzero primary invariants', r, len(items))
    return items


def brute_force_nonzero(r):
    """
    Raw scan of the dimension constraint over |I| <= r and k in 0..2r, twists
    <= r - 2. Slow; used to cross-check enumerate_nonzero.
    """
    items = []
    for l in range(r + 1):
        for twists in itertools.combinations_with_replacement(range(r - 1), l):
            for k in range(2 * r + 1):
                key = InvariantKey(r, twists, k)
                value = open_invariant(key)
                if value:
                    items.append((key, value))
    return sorted(items, key=lambda item: (item[0].l, item[0].twists, item[0].k))
