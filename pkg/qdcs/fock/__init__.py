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

from .vectors import FockVector, TwoModeVector, basis_state, vacuum, check_dim
from .operators import FockOperator, make_annihilator, make_creation, make_number, make_identity, make_quadratures
from .linalg import inner_product, tensor_product, tail_mass, reduced_density_matrix, schmidt_coefficients, purity_defect, purity_defect_from_spectrum
from .expm import matrix_exponential
from .states import Truncation_ParameterList, coherent_state, poisson_weights, annihilator_eigen_residual, uncertainty_product, check_complex
