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

from .deformation import Deformation, Deformation_ParameterList, as_deformation
from .deformedOperators import deformation_function, deformed_annihilator, deformed_creation, deformed_number, deformed_generator, commutator
from .algebraVerify import AlgebraVerify_ParameterList, ResidualReport, order_ratio, verify_q_commutator, verify_ncs_identities, verify_bch_commutators
