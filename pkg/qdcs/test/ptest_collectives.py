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

import sys
sys.path.append('../../')

from qdcs import scheduling as cl
from qdcs import SweepSpec, run_alpha_sweep, sweep_csv, qdcsPerturbativeRegimeWarning

class TestCollectives(unittest.TestCase):
    def setUp(self):
        self.collective = cl.default_collective()
        self.mpi_rank = self.collective.rank()
        self.mpi_size = self.collective.size()

    def testinterface(self):
        for c in [self.collective, cl.NullCollective()]:
            for name in ["size", "rank", "allGather"]:
                self.assertTrue(callable(getattr(c, name)))
            self.assertFalse(hasattr(c, "allReduce"))
        
    def testallGather(self):
        out = self.collective.allGather(self.mpi_rank)
        self.assertEqual(out, list(range(self.mpi_size)))
        
    def testorderedMap(self):
        items = list(range(23))
        out = cl.ordered_map(lambda x: x*x, items, self.collective)
        self.assertEqual(out, [x*x for x in items])
        self.assertEqual(cl.ordered_map(lambda x: x, [], self.collective), [])
        
    def testsweep(self):
        spec = SweepSpec("alpha", alpha_range=[0., 2., 21], eps_list=[-0.4, 0., 0.4])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
            parallel = run_alpha_sweep(spec, self.collective)
            serial = run_alpha_sweep(spec, cl.NullCollective())
        # the table does not depend on the number of processes
        self.assertEqual(sweep_csv(parallel), sweep_csv(serial))


if __name__ == '__main__':
    unittest.main()
