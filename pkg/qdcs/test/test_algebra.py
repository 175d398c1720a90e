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
import warnings
import numpy as np

from numpy.testing import assert_allclose

import sys
sys.path.append('../../')
from qdcs import *

class TestDeformation(unittest.TestCase):
    """
    Test suite for the deformation parameter and the f-deformation function
    """
    def test_deformation(self):
        d = Deformation(0.1)
        self.assertAlmostEqual(d.q, 1.1, places=15)
        self.assertTrue(d.weak)
        self.assertFalse(d.regime_flag)
        self.assertTrue(as_deformation(d) is d)
        self.assertEqual(as_deformation(0.1), d)
        
    def test_regime_flag(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            d = Deformation(-0.7)
            self.assertTrue(d.regime_flag)
            self.assertTrue(d.weak)
            self.assertTrue(any([issubclass(x.category, qdcsPerturbativeRegimeWarning) for x in w]))
            self.assertFalse(Deformation(1.5).weak)
            
    def test_invalid(self):
        self.assertRaises(TypeError, Deformation, "0.1")
        self.assertRaises(TypeError, Deformation, 0.1j)
        self.assertRaises(ValueError, Deformation, np.nan)
        
    def test_deformation_function(self):
        for eps in [-0.4, 0., 0.1, 0.3]:
            self.assertEqual(deformation_function(eps, 1), 1.)
        self.assertAlmostEqual(deformation_function(0.1, 3), 1.05, places=15)
        self.assertEqual(deformation_function(0., 7), 1.)
        assert_allclose(deformation_function(0.2, np.arange(4)), [0.95, 1., 1.05, 1.1], rtol=1e-15)
        self.assertRaises(ValueError, deformation_function, 0.1, -1)
        self.assertRaises(TypeError, deformation_function, 0.1, 1.5)


class TestDeformedOperators(unittest.TestCase):
    """
    Test suite for the first order representation of b and b+
    """
    def test_undeformed_limit(self):
        self.assertTrue(np.array_equal(deformed_annihilator(0., 10).mat, make_annihilator(10).mat))
        self.assertTrue(np.array_equal(deformed_creation(0., 10).mat, make_creation(10).mat))
        assert_allclose(deformed_number(0., 10).diagonal().real, np.arange(10), atol=1e-14)
        
    def test_action(self):
        b = deformed_annihilator(0.1, 8)
        v = b.mult(basis_state(2, 8))
        assert_allclose(v.amp, np.sqrt(2.)*1.025*basis_state(1, 8).amp, atol=1e-14)
        v = deformed_creation(0.1, 8).mult(basis_state(1, 8))
        assert_allclose(v.amp, np.sqrt(2.)*1.025*basis_state(2, 8).amp, atol=1e-14)
        
    def test_adjoint_pair(self):
        for eps in [-0.3, 0.05, 0.2]:
            b = deformed_annihilator(eps, 16)
            bd = deformed_creation(eps, 16)
            self.assertTrue(np.array_equal(bd.mat, b.mat.conj().T))
            self.assertTrue(np.array_equal(bd.adjoint().mat, b.mat))
            
    def test_deformed_number(self):
        self.assertAlmostEqual(deformed_number(0.1, 8).diagonal()[2].real, 2.10125, places=13)
        n = np.arange(8)
        for eps in [0.01, 0.02, 0.04]:
            nd = deformed_number(eps, 8).diagonal().real
            residual = nd - n - .5*eps*n*(n - 1.)
            assert_allclose(residual, eps*eps*n*(n - 1.)**2/16., atol=1e-14)
        self.assertTrue(np.count_nonzero(deformed_number(0.3, 8).mat - np.diag(np.diag(deformed_number(0.3, 8).mat))) == 0)
            
    def test_commutator(self):
        b = deformed_annihilator(0.2, 12)
        assert_allclose(commutator(b, b).mat, np.zeros((12,12)))
        R = commutator(make_number(12), b) + b
        self.assertLess(np.max(np.abs(R.mat[:10, :10])), 1e-13)
        assert_allclose(commutator(make_annihilator(4), make_creation(4)).diagonal().real, [1., 1., 1., -3.], atol=1e-14)
        self.assertRaises(ValueError, commutator, make_annihilator(3), make_annihilator(4))
        
    def test_generator(self):
        X = deformed_generator(1. + .5j, 0.2, 16)
        assert_allclose(X.mat, -X.mat.conj().T, atol=1e-15)
        

class TestAlgebraVerify(unittest.TestCase):
    """
    Test suite for the matrix checks of the deformed algebra
    """
    def test_undeformed(self):
        for r in verify_q_commutator(0., 16) + verify_ncs_identities(0., 16) + verify_bch_commutators(1. + .5j, 0., 16):
            self.assertLess(r.residual, 1e-10, r.name)
            self.assertTrue(r.passed)
            
    def test_q_commutator_values(self):
        first_order, q_relation = verify_q_commutator(0.1, 64)
        self.assertEqual(first_order.name, "q-commutator first order")
        self.assertEqual(q_relation.name, "q-relation")
        self.assertAlmostEqual(first_order.profile[2], 0.00625, delta=1e-13)
        self.assertAlmostEqual(q_relation.profile[2], 0.003875, delta=1e-13)
        self.assertEqual(len(first_order.profile), 9)
        self.assertTrue(first_order.passed)
        self.assertTrue(q_relation.passed)
        self.assertGreater(first_order.edge, first_order.residual)
        
    def test_q_commutator_order(self):
        parameters = AlgebraVerify_ParameterList()
        lo, hi = parameters["order_window"]
        r = dict([(eps, verify_q_commutator(eps, 64)[0].residual) for eps in [0.2, 0.1, 0.05]])
        for coarse, fine in [(0.2, 0.1), (0.1, 0.05)]:
            ratio = order_ratio(r[coarse], r[fine])
            self.assertTrue(lo <= ratio <= hi)
            self.assertAlmostEqual(ratio, 4., delta=1e-6)
        self.assertTrue(order_ratio(1e-3, 1e-14) is None)
            
    def test_ncs_identities(self):
        for eps in [0.1, -0.3, 0.4]:
            reports = verify_ncs_identities(eps, 32)
            self.assertEqual(len(reports), 6)
            for r in reports:
                self.assertTrue(r.passed, r)
            self.assertTrue("deviates" in reports[4].note)
            
    def test_bch(self):
        for alpha in [0.5, 1., 1. + .5j]:
            for eps in [0.05, 0.1]:
                for r in verify_bch_commutators(alpha, eps, 64):
                    self.assertTrue(r.passed, r)
                    
    def test_bch_matrix_element(self):
        b = deformed_annihilator(0.05, 16)
        X = b.adjoint() - b
        XY = commutator(X, b)
        self.assertAlmostEqual(XY.mat[2,2].real, -1.1, delta=3e-3)
        
    def test_minimum_dim(self):
        self.assertRaises(ValueError, verify_q_commutator, 0.1, 3)
        self.assertRaises(ValueError, verify_bch_commutators, 1., 0.1, 7)
        
    def test_print(self):
        parameters = AlgebraVerify_ParameterList()
        parameters["print_level"] = 1
        verify_q_commutator(0.1, 16, parameters)
        

if __name__ == '__main__':
    unittest.main()
