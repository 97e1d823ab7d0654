from openrspin.base import PartitionError
from openrspin.combinatorics import (
    MultisetPartition, SetPartition, TwistMultiset, aut_order, fiber_size, multiset_partitions, set_partitions,
    twist_image)

import itertools
import unittest


BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


class TwistMultisetTests (unittest.TestCase):

    def test_basics(self):
        m = TwistMultiset(6, [4, 3, 4])
        self.assertEqual(m.entries, (3, 4, 4))
        self.assertEqual(m.l, 3)
        self.assertEqual(m.residue, 5)
        self.assertEqual(m.b, (3, 2, 2))
        self.assertEqual(m.b_total, 7)
        self.assertEqual(repr(m), '{3,4,4}')

    def test_range(self):
        self.assertRaises(ValueError, TwistMultiset, 4, [3])
        self.assertRaises(ValueError, TwistMultiset, 4, [-1])
        self.assertRaises(ValueError, TwistMultiset, 1, [])

    def test_order(self):
        self.assertLess(TwistMultiset(5, [3]), TwistMultiset(5, [0, 0]))


class AutTests (unittest.TestCase):

    def test_aut_order(self):
        self.assertEqual(aut_order([]), 1)
        self.assertEqual(aut_order([2, 2, 1]), 2)
        self.assertEqual(aut_order([0, 0, 0, 1, 1]), 12)
        self.assertEqual(aut_order([1, 2, 2, 3, 3, 3]), 12)
        self.assertEqual(TwistMultiset(6, [4, 4, 4]).aut_order(), 6)

    def test_partition_aut_order(self):
        two = MultisetPartition([TwistMultiset(4, [2]), TwistMultiset(4, [2])])
        self.assertEqual(two.aut_order(), 2)
        self.assertEqual(two.union(), TwistMultiset(4, [2, 2]))
        mixed = MultisetPartition([TwistMultiset(5, [0, 1]), TwistMultiset(5, [0])])
        self.assertEqual(mixed.aut_order(), 1)
        self.assertEqual(mixed[0], TwistMultiset(5, [0]))


class SetPartitionTests (unittest.TestCase):

    def test_bell_numbers(self):
        for l in range(1, 9):
            self.assertEqual(len(set_partitions(l)), BELL[l])
            self.assertEqual(sum(len(set_partitions(l, h)) for h in range(1, l + 1)), BELL[l])

    def test_stirling(self):
        self.assertEqual(len(set_partitions(4, 2)), 7)
        self.assertEqual(len(set_partitions(5, 3)), 25)
        self.assertEqual(set_partitions(3, 3), [SetPartition([[1], [2], [3]])])

    def test_distinct(self):
        partitions = set_partitions(5)
        self.assertEqual(len(set(partitions)), len(partitions))
        for q in partitions:
            self.assertEqual(q.elements(), [1, 2, 3, 4, 5])

    def test_empty(self):
        self.assertEqual(set_partitions(0), [SetPartition([])])
        self.assertRaises(ValueError, set_partitions, 3, 4)

    def test_canonical_form(self):
        self.assertEqual(SetPartition([[3, 1], [2]]), SetPartition([[2], [1, 3]]))
        self.assertEqual(repr(SetPartition([[3, 1], [2]])), '{{1,3}, {2}}')


class MultisetPartitionTests (unittest.TestCase):

    def test_twist_image(self):
        m = TwistMultiset(4, [2, 2])
        image = twist_image(m, SetPartition([[1], [2]]))
        self.assertEqual(image, MultisetPartition([TwistMultiset(4, [2]), TwistMultiset(4, [2])]))
        self.assertRaises(PartitionError, twist_image, m, SetPartition([[1], [3]]))

    def test_multiset_partitions(self):
        m = TwistMultiset(5, [0, 0, 1])
        parts = multiset_partitions(m, 2)
        self.assertEqual(len(parts), 2)
        self.assertIn(MultisetPartition([TwistMultiset(5, [0]), TwistMultiset(5, [0, 1])]), parts)
        self.assertIn(MultisetPartition([TwistMultiset(5, [1]), TwistMultiset(5, [0, 0])]), parts)
        self.assertEqual(multiset_partitions(m, 3), [MultisetPartition([TwistMultiset(5, [a]) for a in (0, 0, 1)])])

    def test_fiber_size(self):
        m = TwistMultiset(5, [0, 0, 1])
        self.assertEqual(fiber_size(m, MultisetPartition([TwistMultiset(5, [0]), TwistMultiset(5, [0, 1])])), 2)
        self.assertEqual(fiber_size(m, MultisetPartition([TwistMultiset(5, [1]), TwistMultiset(5, [0, 0])])), 1)
        self.assertRaises(PartitionError, fiber_size, m, MultisetPartition([TwistMultiset(5, [1])]))

    def test_fibers_by_counting(self):
        # |Aut(I)| = |a^-1(P)| |Aut(P)| prod |Aut(I_j)|, checked by counting preimages.
        for l in range(1, 7):
            for entries in itertools.combinations_with_replacement(range(4), l):
                m = TwistMultiset(5, entries)
                for h in range(1, l + 1):
                    counts = {}
                    for q in set_partitions(l, h):
                        image = twist_image(m, q)
                        counts[image] = counts.get(image, 0) + 1
                    self.assertEqual(sorted(counts), multiset_partitions(m, h))
                    for partition, count in counts.items():
                        self.assertEqual(fiber_size(m, partition), count)

    def test_two_pairs(self):
        m = TwistMultiset(4, [1, 1, 2, 2])

        def part(*blocks):
            return MultisetPartition([TwistMultiset(4, block) for block in blocks])

        expected = [part([1], [1, 2, 2]), part([2], [1, 1, 2]), part([1, 1], [2, 2]), part([1, 2], [1, 2])]
        self.assertEqual(sorted(multiset_partitions(m, 2)), sorted(expected))
        self.assertEqual(fiber_size(m, part([1, 2], [1, 2])), 2)
        self.assertEqual(fiber_size(m, part([1, 1], [2, 2])), 1)
        self.assertEqual(fiber_size(m, part([1], [1, 2, 2])), 2)
