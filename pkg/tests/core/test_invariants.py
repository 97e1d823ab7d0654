from openrspin.base import format_rational
from openrspin.combinatorics import TwistMultiset, multiset_partitions
from openrspin.invariants import (
    InvariantKey, admissible_multisets, brute_force_nonzero, enumerate_nonzero, is_admissible, open_invariant,
    satisfies_dimension_constraint, unique_boundary_count)

from fractions import Fraction
import itertools
import json
import math
import os
import unittest


def load_fixture(name):
    fixture_path = os.path.join(os.path.dirname(__file__), 'fixtures', name)
    with open(fixture_path, 'r') as fp:
        return json.load(fp)


class OpenInvariantTests (unittest.TestCase):

    def test_values(self):
        self.assertEqual(open_invariant(InvariantKey(4, (2, 2), 0)), Fraction(-1, 4))
        self.assertEqual(open_invariant(InvariantKey(4, (), 4)), -24)
        self.assertEqual(open_invariant(InvariantKey(2, (), 2)), -2)
        self.assertEqual(open_invariant(InvariantKey(6, (4, 4, 4), 0)), Fraction(1, 18))
        self.assertEqual(open_invariant(InvariantKey(4, (2, 2), 1)), 0)
        self.assertEqual(open_invariant(InvariantKey(4, (), 3)), 0)

    def test_top_twist_allowed(self):
        key = InvariantKey(4, (3,), 3)
        self.assertTrue(satisfies_dimension_constraint(4, (3,), 3))
        self.assertEqual(open_invariant(key), 6)
        self.assertRaises(ValueError, InvariantKey, 4, (4,), 0)

    def test_raw_scan(self):
        # Division form of the constraint and the closed value, written out
        # independently; twists run all the way to r - 1.
        for r in range(2, 9):
            for l in range(5):
                for twists in itertools.combinations_with_replacement(range(r), l):
                    for k in range(2 * r + 1):
                        expected = Fraction(0)
                        if Fraction((r - 2) * k + 2 * sum(twists), r) == 2 * l + k - 2 and k + l >= 1:
                            expected = Fraction(math.factorial(k + l - 1)) / Fraction(-r) ** (l - 1)
                        key = InvariantKey(r, twists, k)
                        self.assertEqual(open_invariant(key), expected, repr(key))

    def test_brute_force_bounds(self):
        for r in range(2, 9):
            for key, value in brute_force_nonzero(r):
                self.assertLessEqual(max(key.twists or (0,)), r - 2)
                self.assertLessEqual(key.k, r)
                self.assertLessEqual(key.l, r)

    def test_unique_boundary_count(self):
        for r in range(2, 9):
            for m in admissible_multisets(r):
                k_values = [k for k in range(2 * r + 1) if open_invariant(InvariantKey.from_multiset(m, k))]
                self.assertEqual(k_values, [m.residue])
                self.assertEqual(unique_boundary_count(m), m.residue)

    def test_unique_boundary_count_examples(self):
        self.assertEqual(unique_boundary_count(TwistMultiset(4, [0])), 0)
        self.assertEqual(unique_boundary_count(TwistMultiset(4, [2, 2])), 0)
        self.assertIsNone(unique_boundary_count(TwistMultiset(4, [0, 0])))


class AdmissibilityTests (unittest.TestCase):

    def test_examples(self):
        self.assertTrue(is_admissible(TwistMultiset(4, [2, 2])))
        self.assertFalse(is_admissible(TwistMultiset(4, [2, 2, 2])))
        self.assertRaises(ValueError, is_admissible, TwistMultiset(4, []))

    def test_admissible_multisets(self):
        found = admissible_multisets(6)
        self.assertEqual([m.entries for m in found],
                         [(0,), (1,), (2,), (3,), (4,), (2, 4), (3, 3), (3, 4), (4, 4), (4, 4, 4)])
        self.assertEqual([m.entries for m in admissible_multisets(6, min_size=2, max_size=2)],
                         [(2, 4), (3, 3), (3, 4), (4, 4)])
        self.assertEqual(admissible_multisets(3, min_size=2), [])

    def test_hereditary(self):
        for r in range(2, 10):
            for m in admissible_multisets(r):
                self.assertLessEqual(m.b_total, r)
                for size in range(1, m.l + 1):
                    for entries in set(itertools.combinations(m.entries, size)):
                        sub = TwistMultiset(r, entries)
                        self.assertTrue(is_admissible(sub), '%r in %r, r=%d' % (sub, m, r))

    def test_partition_additivity(self):
        for r in range(2, 8):
            for m in admissible_multisets(r):
                for h in range(1, m.l + 1):
                    for partition in multiset_partitions(m, h):
                        self.assertEqual(sum(part.residue for part in partition), m.residue + (h - 1) * r)


class EnumerateTests (unittest.TestCase):

    def test_fixture_tables(self):
        for table in load_fixture('invariants.json'):
            items = [
                {'twists': list(key.twists), 'k': key.k, 'value': format_rational(value)}
                for key, value in enumerate_nonzero(table['r'])
            ]
            self.assertEqual(items, table['items'])

    def test_r2(self):
        self.assertEqual(enumerate_nonzero(2), [
            (InvariantKey(2, (), 2), Fraction(-2)),
            (InvariantKey(2, (0,), 0), Fraction(1)),
        ])

    def test_bounds(self):
        for r in range(2, 11):
            for key, value in enumerate_nonzero(r):
                self.assertNotEqual(value, 0)
                self.assertLessEqual(key.k, r)
                self.assertLessEqual(key.l, r)
                if key.l:
                    self.assertLessEqual(key.l, r // 2)

    def test_against_brute_force(self):
        for r in range(2, 11):
            self.assertEqual(enumerate_nonzero(r), brute_force_nonzero(r))

    def test_bad_r(self):
        self.assertRaises(ValueError, enumerate_nonzero, 1)
