from .base import PartitionError, factorial

import collections


class TwistMultiset (object):
    """
    A sorted multiset of internal twists a_i, 0 <= a_i <= r - 2, together with
    the ambient r.
    """

    def __init__(self, r, entries=()):
        if r < 2:
            raise ValueError('r must be at least 2, got %d' % r)
        entries = tuple(sorted(int(a) for a in entries))
        for a in entries:
            if not 0 <= a <= r - 2:
                raise ValueError('Twist %d is outside 0..%d' % (a, r - 2))
        self.r = r
        self.entries = entries

    @property
    def l(self):
        return len(self.entries)

    @property
    def residue(self):
        """
        r(I): the sum of the twists reduced into 0..r-1.
        """
        return sum(self.entries) % self.r

    @property
    def b(self):
        return tuple(self.r - a for a in self.entries)

    @property
    def b_total(self):
        return sum(self.b)

    def aut_order(self):
        return aut_order(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, TwistMultiset) and (self.r, self.entries) == (other.r, other.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.r, self.entries))

    def __lt__(self, other):
        return (len(self.entries), self.entries) < (len(other.entries), other.entries)

    def __repr__(self):
        return '{%s}' % ','.join(str(a) for a in self.entries)


def aut_order(entries):
    """
    |Aut(I)|: the product of the factorials of the entry multiplicities.
    """
    result = 1
    for count in collections.Counter(entries).values():
        result *= factorial(count)
    return result


class MultisetPartition (tuple):
    """
    An unordered partition of a multiset into nonempty parts, stored in canonical
    order: parts sorted by size, then entries.
    """

    def __new__(cls, parts):
        parts = sorted(parts)
        if any(len(part) == 0 for part in parts):
            raise PartitionError('Partition parts must be nonempty.')
        if len(set(part.r for part in parts)) > 1:
            raise PartitionError('Partition parts disagree on r.')
        return super(MultisetPartition, cls).__new__(cls, parts)

    @property
    def h(self):
        return len(self)

    def union(self):
        entries = tuple(a for part in self for a in part)
        return TwistMultiset(self[0].r, entries)

    def aut_order(self):
        """
        |Aut({I_1, ..., I_h})|: permutations of the parts fixing the partition.
        """
        return aut_order(part.entries for part in self)

    def __repr__(self):
        return '{%s}' % ', '.join(repr(part) for part in self)


class SetPartition (tuple):
    """
    A partition of {1..l} into disjoint nonempty blocks, blocks sorted by their
    smallest element.
    """

    def __new__(cls, blocks):
        blocks = sorted(tuple(sorted(block)) for block in blocks)
        if any(not block for block in blocks):
            raise PartitionError('Set partition blocks must be nonempty.')
        return super(SetPartition, cls).__new__(cls, blocks)

    @property
    def h(self):
        return len(self)

    @property
    def size(self):
        return sum(len(block) for block in self)

    def elements(self):
        return sorted(i for block in self for i in block)

    def __repr__(self):
        return '{%s}' % ', '.join('{%s}' % ','.join(str(i) for i in block) for block in self)


def _set_partitions(l, h):
    # Place 1, 2, ..., l in turn into an existing block or a fresh one.
    def place(i, blocks):
        remaining = l - i + 1
        if h is not None and (len(blocks) > h or len(blocks) + remaining < h):
            return
        if i > l:
            yield SetPartition(blocks)
            return
        for block in blocks:
            block.append(i)
            for partition in place(i + 1, blocks):
                yield partition
            block.pop()
        blocks.append([i])
        for partition in place(i + 1, blocks):
            yield partition
        blocks.pop()

    return place(1, [])


def set_partitions(l, h=None):
    """
    All partitions of {1..l} into h blocks (any number of blocks when h is
    None). With h given there are S(l, h) of them.
    """
    if l == 0:
        return [SetPartition([])] if h in (None, 0) else []
    if h is not None and not 1 <= h <= l:
        raise ValueError('Need 1 <= h <= l, got h=%d, l=%d' % (h, l))
    return list(_set_partitions(l, h))


def twist_image(multiset, partition):
    """
    The map a: Part([l]) -> Part(I), sending block Q_j to {a_i | i in Q_j}, with
    a_i the i-th entry of I in sorted order.
    """
    if partition.size != multiset.l or partition.elements() != list(range(1, multiset.l + 1)):
        raise PartitionError('%r does not partition [%d]' % (partition, multiset.l))
    return MultisetPartition(
        TwistMultiset(multiset.r, [multiset.entries[i - 1] for i in block]) for block in partition)


def multiset_partitions(multiset, h):
    """
    Part_h(I): every unordered partition of I into h multisets, exactly once.
    """
    if not 1 <= h <= multiset.l:
        raise ValueError('Need 1 <= h <= |I|, got h=%d, |I|=%d' % (h, multiset.l))
    images = set(twist_image(multiset, q) for q in set_partitions(multiset.l, h))
    return sorted(images)


def fiber_size(multiset, partition):
    """
    |a^{-1}(P)|, from |Aut(I)| = |a^{-1}(P)| * |Aut(P)| * prod_j |Aut(I_j)|.
    """
    if partition.union() != multiset:
        raise PartitionError('%r is not a partition of %r' % (partition, multiset))
    denominator = partition.aut_order()
    for part in partition:
        denominator *= part.aut_order()
    quotient, remainder = divmod(multiset.aut_order(), denominator)
    if remainder:
        raise PartitionError('|Aut(%r)| is not divisible by %d' % (multiset, denominator))
    return quotient
