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

import math
import argparse
import warnings

import sys
import os
sys.path.append( os.environ.get('QDCS_BASE_DIR', "../../") )
from qdcs import *

def figure_specs(alpha_steps, theta_steps, region_steps):
    """
    Grids of the concurrence and validity figures: concurrence against :math:`|\\alpha|`,
    its zoom around :math:`|\\alpha| = 1`, concurrence against :math:`\\theta` and the allowed region.
    """
    return [("fig1_alpha.csv", SweepSpec(ALPHA_SWEEP, alpha_range=[0., 2.5, alpha_steps])),
            ("fig2_alpha_zoom.csv", SweepSpec(ALPHA_SWEEP, alpha_range=[0.9, 1.1, 41])),
            ("fig3_theta.csv", SweepSpec(THETA_SWEEP, theta_range=[0., 2.*math.pi, theta_steps])),
            ("fig4_region.csv", SweepSpec(REGION_SCAN, alpha_range=[0., 2., region_steps], eps_range=[-1., 1., region_steps]))]

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Figure data of the deformed coherent state concurrence')
    parser.add_argument('--outdir',
                        default="data",
                        type=str,
                        help="Directory of the CSV files")
    parser.add_argument('--alpha_steps',
                        default=51,
                        type=int,
                        help="Number of |alpha| points of the alpha sweep")
    parser.add_argument('--theta_steps',
                        default=201,
                        type=int,
                        help="Number of theta points of the phase sweep")
    parser.add_argument('--region_steps',
                        default=201,
                        type=int,
                        help="Number of points along each axis of the region scan")
    parser.add_argument('--verify',
                        action="store_true",
                        help="Also run the verification suite")
    args = parser.parse_args()
    
    sep = "\n"+"#"*80+"\n"
    collective = default_collective()
    rank = collective.rank()
    
    if rank == 0 and not os.path.isdir(args.outdir):
        os.makedirs(args.outdir)
        
    for filename, spec in figure_specs(args.alpha_steps, args.theta_steps, args.region_steps):
        if rank == 0:
            print( sep, "Sweep {0} -> {1}".format(spec.kind, filename), sep )
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
            table = run_sweep(spec, collective)
        if rank == 0:
            write_sweep_csv(table, os.path.join(args.outdir, filename))
            n_out = sum([not r.allowed for r in table])
            print( "{0} rows, {1} outside the perturbative region (threshold {2:g})".format(len(table), n_out, spec.threshold) )
            
    if rank == 0:
        print( sep, "Percent decrease of the concurrence for eps from -0.4 to 0.4", sep )
        report = percent_decrease_report(print_level=1)
        write_json(report, os.path.join(args.outdir, "percent_decrease.json"))
        
    if args.verify:
        if rank == 0:
            print( sep, "Verification suite", sep )
        parameters = Verification_ParameterList()
        parameters["print_level"] = 1 if rank == 0 else 0
        report = run_verification_suite(tol_profile=parameters, collective=collective)
        if rank == 0:
            write_report(report, os.path.join(args.outdir, "verification.json"))
