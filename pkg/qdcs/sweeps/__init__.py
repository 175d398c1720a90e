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

from .sweep import ALPHA_SWEEP, THETA_SWEEP, REGION_SCAN, QUOTED_DECREASE, Sweep_ParameterList, SweepSpec, SweepRow, SweepTable, \
                   run_alpha_sweep, run_theta_sweep, run_region_scan, run_sweep, region_boundary, percent_decrease, percent_decrease_report
from .verification import Verification_ParameterList, CheckRecord, VerificationReport, run_verification_suite
from .io import CSV_HEADER, format_float, sweep_csv, write_sweep_csv, read_sweep_csv, state_record, write_json, write_report, read_pair_spec, load_config
from .cli import main
