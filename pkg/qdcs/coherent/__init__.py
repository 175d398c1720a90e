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

from .dcs import PERTURBATIVE, NUMERIC, PERTURBATIVE_COEFFICIENTS, DeformedStateSpec, deformed_displacement, dcs_numeric, dcs_perturbative, deformed_coherent_state, normalization_defect
from .overlaps import DD, DN, ND, STANDARD, as_overlap_kind, gaussian_overlap, overlap_prefactor, overlap_closed_form, OverlapValue, overlap_numeric
