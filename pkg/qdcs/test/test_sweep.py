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
import os
import tempfile
import warnings
import numpy as np

from numpy.testing import assert_allclose

import sys
sys.path.append('../../')
from qdcs import *

class TestSweeps(unittest.TestCase):
    """
    Test suite for the alpha, theta and region sweeps
    """
    def setUp(self):
        self.filters = warnings.catch_warnings()
        self.filters.__enter__()
        warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
        
    def tearDown(self):
        self.filters.__exit__()
        
    def test_spec(self):
        self.assertEqual(SweepSpec("alpha").kind, ALPHA_SWEEP)
        self.assertEqual(SweepSpec(REGION_SCAN).kind, REGION_SCAN)
        self.assertRaises(ValueError, SweepSpec, "phase")
        self.assertRaises(ValueError, SweepSpec, "alpha", alpha_range=[1., 0., 11])
        self.assertRaises(ValueError, SweepSpec, "alpha", alpha_range=[0., 1., 1])
        self.assertRaises(ValueError, SweepSpec, "alpha", alpha_range=[0., 1.])
        self.assertRaises(ValueError, SweepSpec, "alpha", eps_list=[])
        self.assertRaises(ValueError, SweepSpec, "alpha", threshold=0.)
        self.assertRaises(ValueError, run_theta_sweep, SweepSpec("alpha"))
        parameters = Sweep_ParameterList()
        parameters["kind"] = THETA_SWEEP
        parameters["alpha_fixed"] = 0.9
        spec = SweepSpec.from_parameters(parameters)
        self.assertEqual(spec.kind, THETA_SWEEP)
        self.assertEqual(spec.alpha_fixed, 0.9)
        
    def test_alpha_sweep(self):
        table = run_sweep(SweepSpec("alpha", eps_list=[-0.4, 0., 0.4]))
        self.assertEqual(len(table), 153)
        self.assertEqual(list(table.columns), ["alpha_abs", "theta", "eps", "concurrence", "margin", "allowed"])
        # |alpha| outer, eps inner
        assert_allclose(table.column("eps")[:6], [-0.4, 0., 0.4, -0.4, 0., 0.4])
        self.assertEqual(table.rows[0].alpha_abs, 0.)
        self.assertEqual(table.rows[0].concurrence, 0.)
        rows = table.select(alpha_abs=1., eps=0.4).rows
        self.assertEqual(len(rows), 1)
        self.assertAlmostEqual(rows[0].concurrence, 0.9453664, places=7)
        self.assertFalse(rows[0].allowed)
        c = table.select(eps=0.).column("concurrence")
        self.assertTrue(np.all(np.diff(c) >= 0.))
        c = table.column("concurrence")
        self.assertTrue(np.all(c >= 0.) and np.all(c <= 1.))
        
    def test_alpha_sweep_monotone(self):
        # every default eps, restricted to the rows with margin < 1
        spec = SweepSpec.from_parameters(Sweep_ParameterList())
        table = run_alpha_sweep(spec)
        for eps in spec.eps_list:
            rows = table.select(eps=eps)
            inside = rows.column("margin") < 1.
            self.assertGreater(np.count_nonzero(inside), 10)
            alpha = rows.column("alpha_abs")[inside]
            c = rows.column("concurrence")[inside]
            self.assertTrue(np.all(np.diff(alpha) > 0.))
            self.assertTrue(np.all(np.diff(c) >= 0.), "eps = {0}".format(eps))
            
    def test_theta_sweep(self):
        table = run_theta_sweep(SweepSpec("theta"))
        self.assertEqual(len(table), 201*5)
        for eps in [-0.4, 0., 0.4]:
            rows = table.select(eps=eps)
            self.assertEqual(rows.rows[0].concurrence, rows.rows[-1].concurrence)
            self.assertAlmostEqual(rows.select(theta=math.pi).rows[0].concurrence, 1., places=12)
            c = rows.column("concurrence")
            self.assertEqual(np.argmin(c), 0)
            
    def test_theta_extremum(self):
        table = run_theta_sweep(SweepSpec("theta"))
        for eps in [-0.4, -0.2, 0., 0.2, 0.4]:
            rows = table.select(eps=eps)
            theta = rows.column("theta")
            c = rows.column("concurrence")
            i = int(np.argmin(np.abs(theta - math.pi)))
            self.assertEqual(c[i], 1.)
            for j in [1, 2, 5]:
                h = .5*(theta[i+j] - theta[i-j])
                self.assertAlmostEqual(h, j*2.*math.pi/200., places=12)
                # zero central difference, second order one sided growth
                self.assertLess(abs(c[i+j] - c[i-j])/(2.*h), 1e-10)
                self.assertLess(c[i+j], 1.)
                self.assertLess((c[i] - c[i+j])/h, 1.5*j*h)
                
    def test_region_scan(self):
        table = run_region_scan(SweepSpec("region", alpha_range=[0.5, 1.5, 11]))
        self.assertEqual(len(table), 11*201)
        row = table.select(alpha_abs=1., eps=0.1).rows[0]
        self.assertAlmostEqual(row.margin, 0.1333333, places=7)
        self.assertFalse(row.allowed)
        row = run_region_scan(SweepSpec("region", alpha_range=[0.5, 1.5, 11], threshold=0.2)).select(alpha_abs=1., eps=0.1).rows[0]
        self.assertTrue(row.allowed)
        self.assertEqual(region_boundary(0., 0.1), np.inf)
        for alpha in [0.5, 0.8, 1., 1.2]:
            boundary = region_boundary(alpha, 0.1)
            rows = table.select(alpha_abs=alpha)
            eps = np.abs(rows.column("eps"))
            allowed = rows.column("allowed")
            if np.any(~allowed):
                self.assertLessEqual(np.max(eps[allowed]), boundary)
                self.assertGreaterEqual(np.min(eps[~allowed]), boundary)
                self.assertLess(np.min(eps[~allowed]) - np.max(eps[allowed]), 0.01 + 1e-12)
                
    def test_summary_warning(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            run_alpha_sweep(SweepSpec("alpha", alpha_range=[0., 1.5, 4], eps_list=[0.7, 0.9]))
        flagged = [x for x in w if issubclass(x.category, qdcsPerturbativeRegimeWarning)]
        self.assertEqual(len(flagged), 1)
        
    def test_collective(self):
        spec = SweepSpec("alpha", alpha_range=[0., 1., 5])
        serial = run_alpha_sweep(spec)
        other = run_alpha_sweep(spec, NullCollective())
        self.assertEqual(sweep_csv(serial), sweep_csv(other))
        
        
class TestPercentDecrease(unittest.TestCase):
    """
    Test suite for the relative decrease of the concurrence
    """
    def test_values(self):
        self.assertAlmostEqual(percent_decrease(1., 0., -0.4, 0.4), 3.83, delta=0.05)
        self.assertAlmostEqual(percent_decrease(0.9, 0., -0.4, 0.4), 5.34, delta=0.05)
        self.assertAlmostEqual(percent_decrease(1.1, 0., -0.4, 0.4), 2.44, delta=0.05)
        self.assertAlmostEqual(percent_decrease(1., 2.*math.pi, -0.4, 0.4), percent_decrease(1., 0., -0.4, 0.4), places=12)
        self.assertAlmostEqual(percent_decrease(1., math.pi, -0.4, 0.4), 0., places=12)
        self.assertRaises(ValueError, percent_decrease, 1., 0., 0.4, -0.4)
        self.assertRaises(ValueError, percent_decrease, 0., 0., -0.4, 0.4)
        
    def test_report(self):
        report = percent_decrease_report()
        self.assertEqual(len(report), len(QUOTED_DECREASE))
        for r in report:
            self.assertLess(abs(r["discrepancy"]), 1.5)
            self.assertTrue(r["flagged"])
        report = percent_decrease_report(tolerance=1.5)
        self.assertFalse(any([r["flagged"] for r in report]))
        
        
class TestSweepIO(unittest.TestCase):
    """
    Test suite for the sweep table files
    """
    def setUp(self):
        self.filters = warnings.catch_warnings()
        self.filters.__enter__()
        warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
        self.tmp = tempfile.mkdtemp()
        
    def tearDown(self):
        self.filters.__exit__()
        for f in os.listdir(self.tmp):
            os.remove(os.path.join(self.tmp, f))
        os.rmdir(self.tmp)
        
    def test_format(self):
        self.assertEqual(format_float(1.), "1.0000000000000000e+00")
        self.assertEqual(float(format_float(0.1)), 0.1)
        self.assertEqual(float(format_float(math.pi)), math.pi)
        
    def test_deterministic(self):
        spec = SweepSpec("alpha", eps_list=[-0.4, 0., 0.4])
        f1 = os.path.join(self.tmp, "a.csv")
        f2 = os.path.join(self.tmp, "b.csv")
        write_sweep_csv(run_alpha_sweep(spec), f1)
        write_sweep_csv(run_alpha_sweep(spec), f2)
        with open(f1, "rb") as f:
            b1 = f.read()
        with open(f2, "rb") as f:
            b2 = f.read()
        self.assertEqual(b1, b2)
        self.assertTrue(b1.startswith((CSV_HEADER + "\n").encode()))
        self.assertNotIn(b"\r", b1)
        
    def test_read(self):
        table = run_region_scan(SweepSpec("region", alpha_range=[0.5, 1., 3], eps_range=[-0.2, 0.2, 5]))
        filename = os.path.join(self.tmp, "region.csv")
        write_sweep_csv(table, filename)
        data = read_sweep_csv(filename)
        for name in table.columns:
            self.assertTrue(np.array_equal(data[name], table.column(name)))
        with open(filename, "w") as f:
            f.write("a,b\n1,2\n")
        self.assertRaises(ValueError, read_sweep_csv, filename)
        

if __name__ == '__main__':
    unittest.main()
