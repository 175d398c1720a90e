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

import scipy.linalg as sla

from ..fock.linalg import tensor_product, reduced_density_matrix, purity_defect_from_spectrum
from ..coherent.dcs import PERTURBATIVE, DeformedStateSpec, deformed_coherent_state
from .concurrence import ConcurrenceValue, DEFAULT_THRESHOLD, pair_margin, is_allowed

def pair_state(spec, dim=64, method=PERTURBATIVE):
    """
    The two-mode vector :math:`\\mu|\\alpha\\rangle_d\\otimes|\\beta\\rangle_d + \\nu|\\gamma\\rangle_d\\otimes|\\delta\\rangle_d`,
    not normalized.
    """
    d = spec.deformation
    u = [deformed_coherent_state(DeformedStateSpec(z, d, dim, method)) for z in spec.labels()]
    return spec.mu*tensor_product(u[0], u[1]) + spec.nu*tensor_product(u[2], u[3])


def concurrence_fock_oracle(spec, dim=64, method=PERTURBATIVE, threshold=DEFAULT_THRESHOLD):
    """
    Pure state concurrence :math:`\\sqrt{2(1-\\mathrm{Tr}\\rho_1^2)}` of the truncated two-mode state,
    computed from the spectrum of the mode 1 reduced density matrix. Each mode lives in the span of two vectors,
    so this coincides with the two-qubit concurrence.
    """
    w = pair_state(spec, dim, method)
    if w.norm()**2 <= 1e-14:
        raise ValueError("concurrence_fock_oracle: null state")
    rho = reduced_density_matrix(w, 1)
    c = math.sqrt(2.*purity_defect_from_spectrum(sla.eigvalsh(rho)))
    margin = pair_margin(spec)
    return ConcurrenceValue(min(c, 1.), valid=is_allowed(margin, threshold), margin=margin, truncated=w.truncated)
