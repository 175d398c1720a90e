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

from .concurrence import DEFAULT_THRESHOLD, BipartitePairSpec, OrthoBasisData, ConcurrenceValue, validity_margin, is_allowed, \
                         concurrence_general, concurrence_norm_consistent, concurrence_pair, concurrence_symmetric, \
                         concurrence_general_symmetric, ent_psi1_spec, ent_psi2_spec
from .oracle import pair_state, concurrence_fock_oracle
from .maximal import is_maximally_entangled, maximally_entangled_examples
