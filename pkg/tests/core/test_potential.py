from openrspin import Poly, VarRegistry, build_deformed_potential, build_versal
from openrspin.potential import DeformedPotential, VersalUnfolding, build_fermat_versal, fermat_basis

from fractions import Fraction
import json
import os
import unittest


class PotentialTests (unittest.TestCase):

    def setUp(self):
        fixture_path = os.path.join(os.path.dirname(__file__), 'fixtures', 'potentials.json')
        with open(fixture_path, 'r') as fp:
            self.golden = json.load(fp)

    def test_golden_text(self):
        for entry in self.golden:
            self.assertEqual(build_deformed_potential(entry['r']).poly.text(), entry['text'])

    def test_golden_latex(self):
        for entry in self.golden:
            self.assertEqual(build_deformed_potential(entry['r']).poly.latex(), entry['latex'])

    def test_quartic(self):
        w = build_deformed_potential(4)
        self.assertIsInstance(w, DeformedPotential)
        self.assertEqual(w.registry, VarRegistry.potential(4))
        self.assertEqual(w.poly.coefficient({'t2': 2}), Fraction(1, 8))
        self.assertEqual(str(w), 'x^4 + t2*x^2 + t1*x + t0 + 1/8*t2^2')

    def test_leading_term(self):
        for r in range(2, 10):
            w = build_deformed_potential(r)
            self.assertEqual(w.poly.coefficient({'x': r}), 1)
            self.assertEqual(w.deformation().x_degree(), r - 2)
            for exps in w.deformation().terms:
                self.assertGreaterEqual(w.registry.deformation_degree(exps), 1)

    def test_linear_part(self):
        # Modulo I_2 the potential is the versal unfolding with y_d renamed t_d.
        for r in range(2, 9):
            w = build_deformed_potential(r).poly
            for d in range(r - 1):
                self.assertEqual(w.coefficient({'t%d' % d: 1, 'x': d}), 1)

    def test_degree_bound(self):
        for r in range(2, 10):
            self.assertLessEqual(build_deformed_potential(r).poly.degree(), r // 2)


class VersalTests (unittest.TestCase):

    def test_versal(self):
        v = build_versal(4)
        self.assertIsInstance(v, VersalUnfolding)
        self.assertEqual(v.poly.text(), 'x^4 + y2*x^2 + y1*x + y0')
        self.assertEqual(v, build_versal(4))
        self.assertNotEqual(v, build_versal(3))
        self.assertEqual(repr(build_versal(2)), 'VersalUnfolding(r=2, x^2 + y0)')

    def test_fermat_basis(self):
        self.assertEqual(fermat_basis((3, 4)), [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])
        self.assertEqual(len(fermat_basis((2, 5, 3))), 8)

    def test_fermat_versal(self):
        w = build_fermat_versal((3, 3))
        self.assertEqual(w.registry.names, ('x1', 'x2', 'y0_0', 'y0_1', 'y1_0', 'y1_1'))
        self.assertEqual(w.coefficient({'x1': 3}), 1)
        self.assertEqual(w.coefficient({'x2': 3}), 1)
        self.assertEqual(w.coefficient({'y1_1': 1, 'x1': 1, 'x2': 1}), 1)
        self.assertEqual(len(w), 6)
        self.assertIsInstance(w, Poly)
