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
import json
import warnings

import sys
sys.path.append('../../')
from qdcs import *
from qdcs import __version__

class TestCheckRecord(unittest.TestCase):
    """
    Test suite for the records of the verification report
    """
    def test_passed(self):
        self.assertTrue(CheckRecord("a", 0.1, 1e-3, 1e-2).passed)
        self.assertFalse(CheckRecord("a", 0.1, 1e-1, 1e-2).passed)
        self.assertTrue(CheckRecord("a", 0.1, 1e-3, 1e-2, order_ratio=2.).passed)
        self.assertFalse(CheckRecord("a", 0.1, 1e-3, 1e-2, order_ratio=2., order_checked=True).passed)
        self.assertTrue(CheckRecord("a", 0.1, 1e-3, 1e-2, order_ratio=4.1, order_checked=True).passed)
        self.assertTrue(CheckRecord("a", None, 0., 0.).passed)
        self.assertFalse(CheckRecord("a", None, float("nan"), 1.).passed)
        
    def test_report(self):
        report = VerificationReport(64, [0.1, 0.05])
        report.add(CheckRecord("a", 0.1, 1e-3, 1e-2))
        self.assertTrue(report.passed)
        report.add(CheckRecord("b", None, 1., 1e-2))
        self.assertFalse(report.passed)
        self.assertEqual([r.name for r in report.failures()], ["b"])
        out = report.as_dict()
        self.assertEqual(sorted(out.keys()), ["checks", "dim", "eps_grid", "notes", "pass", "version"])
        self.assertEqual(out["checks"][0]["name"], "a [eps=0.1]")
        self.assertEqual(out["checks"][1]["name"], "b")
        self.assertFalse(out["pass"])
        self.assertEqual(out["version"], __version__)
        json.dumps(out)
        
        
class TestVerificationSuite(unittest.TestCase):
    """
    Test suite for the consolidated verification entry point
    """
    def test_default(self):
        report = run_verification_suite()
        self.assertTrue(report.passed, msg=str([r.label for r in report.failures()]))
        self.assertEqual(report.dim, 64)
        self.assertEqual(report.eps_grid, [0.2, 0.1, 0.05])
        for name in ["q-commutator first order", "natural normalization", "method agreement"]:
            records = report.find(name)
            self.assertEqual(len(records), 3)
            ratio = [r.order_ratio for r in records if r.order_ratio is not None]
            self.assertEqual(len(ratio), 1)
            self.assertTrue(3.5 <= ratio[0] <= 4.5)
        for name in ["overlap dd", "overlap dn", "overlap nd", "overlap standard", "concurrence oracle",
                     "antisymmetric robustness", "maximally entangled catalogue", "closed form dd self overlap = 1",
                     "a|alpha> = alpha|alpha>", "uncertainty product = 1/2", "Poisson number distribution"]:
            self.assertGreater(len(report.find(name)), 0, msg=name)
        self.assertEqual(report.find("closed form dd self overlap = 1")[0].residual, 0.)
        self.assertTrue(any(["deviates" in note for note in report.notes]))
        json.dumps(report.as_dict())
        
    def test_undeformed(self):
        report = run_verification_suite(dim=48, eps_grid=[0.])
        self.assertTrue(report.passed, msg=str([r.label for r in report.failures()]))
        for r in report.records:
            if r.name.startswith("BCH") or r.name.startswith("q-") or r.name == "method agreement":
                self.assertLessEqual(r.residual, 1e-10, msg=r.label)
                
    def test_wrong_coefficient(self):
        parameters = Verification_ParameterList()
        parameters["perturbative_coefficients"] = [1./24., 1./6., 1./4.]
        report = run_verification_suite(eps_grid=[0.1, 0.05], tol_profile=parameters)
        self.assertFalse(report.passed)
        failed = set([r.name for r in report.failures()])
        self.assertIn("method agreement", failed)
        self.assertIn("natural normalization", failed)
        # the profile is copied, not modified
        self.assertEqual(parameters["eps_grid"], [0.2, 0.1, 0.05])
        
    def test_invalid(self):
        self.assertRaises(ValueError, run_verification_suite, 16)
        self.assertRaises(ValueError, run_verification_suite, 64, [])
        

if __name__ == '__main__':
    unittest.main()
