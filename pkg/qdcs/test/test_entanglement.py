# Copyright (c) 2024, the qdcslib developers.
#
# All Rights reserved.
# See file COPYRIGHT for details.
#
# This file is part of the qdcslib library.
#
# qdcslib is free software; you can redistribute it and/or modify it under the
# terms of the GNU General Public License (as published by the Free
# Software Foundation) version 2.0 dated June 1991.

import unittest
import math
import warnings
import numpy as np

from numpy.testing import assert_allclose

import sys
sys.path.append('../../')
from qdcs import *

class TestConcurrence(unittest.TestCase):
    """
    Test suite for the closed form concurrences
    """
    def test_pair_spec(self):
        self.assertRaises(ValueError, BipartitePairSpec, 0., 0., 1., -1., -1., 1., 0.1)
        spec = ent_psi1_spec(1. + .5j, -.3, 0.7, 0.2)
        other = BipartitePairSpec.from_dict(spec.as_dict())
        self.assertEqual(other.labels(), spec.labels())
        self.assertAlmostEqual(other.nu, spec.nu, places=15)
        self.assertEqual(other.eps, 0.2)
        data = spec.as_dict()
        data.pop("delta")
        self.assertRaises(ValueError, BipartitePairSpec.from_dict, data)
        
    def test_general(self):
        self.assertAlmostEqual(concurrence_general(1., 1., 0., 0.).c, 1., places=15)
        value = concurrence_general(1., 1., 1., 0.3)
        self.assertEqual(value.c, 0.)
        self.assertEqual(value.note, "degenerate-superposition")
        self.assertAlmostEqual(concurrence_general(1., -1., 0.5, 0.5).c, 1., places=14)
        self.assertAlmostEqual(concurrence_general(1., -1., 0.3j, 0.3j).c, 1., places=14)
        self.assertRaises(ValueError, concurrence_general, 1., -1., 1., 1.)
        # |mu| != |nu| cannot be maximal
        self.assertLess(concurrence_general(1., 0.5, 0.2, 0.2).c, 1.)
        
    def test_norm_consistent(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            value = concurrence_norm_consistent(1., 1., 0.2, 0.4)
        self.assertTrue(any([issubclass(x.category, qdcsExperimentalWarning) for x in w]))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            self.assertAlmostEqual(value.c, concurrence_general(1., 1., 0.2, 0.4).c, places=15)
            # the two forms differ for complex overlaps
            self.assertNotAlmostEqual(concurrence_norm_consistent(1., 1., 0.4j, 0.4j).c,
                                      concurrence_general(1., 1., 0.4j, 0.4j).c, places=3)
                                      
    def test_margin(self):
        self.assertAlmostEqual(validity_margin(1., 0.1), 0.1333333, places=7)
        self.assertAlmostEqual(validity_margin(1.1, 0.4), 0.7808533, places=7)
        self.assertAlmostEqual(validity_margin(1.1, -0.4), 0.7808533, places=7)
        self.assertTrue(is_allowed(validity_margin(0.5, 0.4)))
        self.assertFalse(is_allowed(validity_margin(1., 0.1)))
        self.assertTrue(is_allowed(validity_margin(1., 0.1), 0.2))
        
    def test_symmetric(self):
        self.assertAlmostEqual(concurrence_symmetric(1., 0., 0.).c, 0.9640276, places=7)
        self.assertAlmostEqual(concurrence_symmetric(1., 0., 0.4).c, 0.9453664, places=7)
        self.assertAlmostEqual(concurrence_symmetric(1., 0., -0.4).c, 0.9830503, places=7)
        for eps in [-0.4, 0., 0.4]:
            for alpha in [0.3, 1., 1.5]:
                self.assertEqual(concurrence_symmetric(alpha, math.pi, eps).c, 1.)
            self.assertAlmostEqual(concurrence_symmetric(1., 0., eps).c, concurrence_symmetric(1., 2.*math.pi, eps).c, places=15)
        self.assertFalse(concurrence_symmetric(1., 0., 0.4).valid)
        self.assertTrue(concurrence_symmetric(0.5, 0., 0.4).valid)
        
    def test_symmetric_trends(self):
        c = [concurrence_symmetric(1., 0., eps).c for eps in np.linspace(-0.6, 1., 17)]
        self.assertTrue(np.all(np.diff(c) < 0.))
        self.assertGreater(abs(concurrence_symmetric(1., 0., 0.4).c - concurrence_symmetric(1., 0., 0.).c), 0.01)
        # decreasing in eps over |alpha| in [0.5, 1.2] while the margin stays below 1
        for alpha in np.linspace(0.5, 1.2, 8):
            eps = [e for e in np.linspace(-0.4, 0.4, 17) if validity_margin(alpha, e) < 1.]
            self.assertGreater(len(eps), 10)
            c = [concurrence_symmetric(alpha, 0., e).c for e in eps]
            self.assertTrue(np.all(np.diff(c) < 0.), "alpha = {0}".format(alpha))
        c = [concurrence_symmetric(alpha, 0., 0.1).c for alpha in np.linspace(0.2, 1.5, 14)]
        self.assertTrue(np.all(np.diff(c) > 0.))
        
    def test_general_symmetric(self):
        eps = 0.2
        for theta in [0., 0.5*math.pi, 2.]:
            c0 = concurrence_symmetric(1., theta, eps).c
            c1 = concurrence_general_symmetric(1., -1., theta, eps).c
            c2 = concurrence_pair(ent_psi2_spec(1., theta, eps)).c
            self.assertLess(abs(c0 - c1), eps*eps)
            self.assertAlmostEqual(c1, c2, places=12)
        self.assertEqual(concurrence_general_symmetric(1., -1., math.pi, eps).c, 1.)
        self.assertRaises(ValueError, concurrence_general_symmetric, 1., 1., math.pi, eps)
        self.assertEqual(concurrence_general_symmetric(1., 1., 0., eps).c, 0.)
        
        
class TestFockOracle(unittest.TestCase):
    """
    Test suite for the reduced density matrix concurrence of the truncated two-mode state
    """
    def test_standard_states(self):
        spec = ent_psi2_spec(1., 0., 0.)
        self.assertAlmostEqual(concurrence_fock_oracle(spec, 64).c, 0.9640276, places=7)
        self.assertLess(abs(concurrence_fock_oracle(spec, 64).c - concurrence_symmetric(1., 0., 0.).c), 1e-8)
        self.assertLess(abs(concurrence_fock_oracle(ent_psi2_spec(0.6, math.pi, 0.), 64).c - 1.), 1e-8)
        
    def test_product_state(self):
        self.assertLess(concurrence_fock_oracle(BipartitePairSpec(1., 0., 1., -1., 0., 0., 0.1), 64).c, 1e-6)
        self.assertLess(concurrence_fock_oracle(BipartitePairSpec(1., 1., 1., -1., 1., -1., 0.1), 64).c, 1e-6)
        
    def test_reduced_density_matrix_route(self):
        for spec in [ent_psi2_spec(1., 0., 0.1), ent_psi1_spec(0.8, -0.3j, 0.5*math.pi, -0.2)]:
            w = pair_state(spec, 64)
            rho = reduced_density_matrix(w, 1)
            self.assertAlmostEqual(np.trace(rho).real, 1., delta=1e-13)
            expected = math.sqrt(2.*(1. - np.trace(rho.dot(rho)).real))
            self.assertAlmostEqual(concurrence_fock_oracle(spec, 64).c, expected, delta=1e-12)
            self.assertAlmostEqual(concurrence_fock_oracle(spec, 64).c, math.sqrt(2.*purity_defect(w)), delta=1e-12)
            
    def test_deformed_states(self):
        for eps in [0.1, 0.05]:
            for alpha in [0.3, 1., 1.2]:
                for theta in [0., 0.5*math.pi, 2.*math.pi]:
                    spec = ent_psi2_spec(alpha, theta, eps)
                    self.assertLess(abs(concurrence_fock_oracle(spec, 64).c - concurrence_pair(spec).c), 2.*eps*eps)
        value = concurrence_fock_oracle(ent_psi2_spec(1., 0., 0.1), 64, NUMERIC)
        self.assertLess(abs(value.c - concurrence_symmetric(1., 0., 0.1).c), 0.02)
        self.assertFalse(value.truncated)
        self.assertAlmostEqual(value.margin, validity_margin(1., 0.1), places=15)
        
        
class TestMaximallyEntangled(unittest.TestCase):
    """
    Test suite for the maximal entanglement conditions
    """
    def test_catalogue(self):
        for alpha in [0.8, 0.5 + 0.3j]:
            for eps in [0.2, 0.1, 0.05, -0.1]:
                for name, spec in maximally_entangled_examples(alpha, eps):
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        ok, diag = is_maximally_entangled(spec)
                    self.assertTrue(ok, msg="{0} {1} {2}".format(name, alpha, eps))
                    self.assertAlmostEqual(diag["concurrence"], 1., places=12)
                    self.assertAlmostEqual(diag["concurrence_norm_consistent"], 1., places=12)
                    
    def test_rotated(self):
        spec = dict(maximally_entangled_examples(0.8, 0.1))["rotated"]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ok, diag = is_maximally_entangled(spec)
        self.assertEqual(diag["p1"], diag["p2"])
        self.assertEqual(diag["n1"], diag["n2"])
        
    def test_not_maximal(self):
        ok, diag = is_maximally_entangled(BipartitePairSpec(1., 0., 1., -1., 0., 0., 0.1))
        self.assertFalse(ok)
        self.assertEqual(diag["concurrence"], 0.)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ok, diag = is_maximally_entangled(ent_psi2_spec(1., 0., 0.1))
            self.assertFalse(ok)
            self.assertGreater(diag["phase_residual"], 1e-3)
            ok, diag = is_maximally_entangled(BipartitePairSpec(1., -0.5, 1., -1., -1., 1., 0.1))
            self.assertFalse(ok)
            self.assertAlmostEqual(diag["modulus_residual"], 0.5, places=15)
            
            
if __name__ == '__main__':
    unittest.main()
