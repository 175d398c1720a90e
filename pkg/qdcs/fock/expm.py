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

import numpy as np
import scipy.linalg as sla

from .operators import FockOperator

"""
Matrix exponential of dense complex operators.

The default path is :code:`scipy.linalg.expm` (scaling and squaring with Pade
approximants). For anti-Hermitian generators an eigendecomposition of the
Hermitian matrix :math:`iM` can be used instead.
"""


def expm_antihermitian(A):
    """
    Exponential of an anti-Hermitian array through the eigendecomposition
    :math:`iA = V \\mathrm{diag}(w) V^\\dagger`, so that :math:`e^A = V \\mathrm{diag}(e^{-iw}) V^\\dagger`.
    """
    A = np.asarray(A, dtype=np.complex128)
    H = 1j*A
    H = .5*(H + H.conj().T)
    w, V = sla.eigh(H)
    return np.dot(V*np.exp(-1j*w), V.conj().T)


def matrix_exponential(M, method="pade"):
    """
    Compute :math:`e^M` for a :code:`FockOperator` :code:`M`.
    
    - :code:`method = "pade"`: scaling and squaring (any generator).
    - :code:`method = "eigh"`: eigendecomposition path, only valid for anti-Hermitian generators.
    """
    if not isinstance(M, FockOperator):
        raise TypeError("matrix_exponential expects a FockOperator")
    A = M.mat
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix_exponential: invalid operand, non-finite entries")
    if method == "pade":
        return FockOperator(sla.expm(A))
    elif method == "eigh":
        skew = np.linalg.norm(A + A.conj().T, 1)
        if skew > 1e-12*max(1., np.linalg.norm(A, 1)):
            raise ValueError("matrix_exponential: the eigh path requires an anti-Hermitian operand")
        return FockOperator(expm_antihermitian(A))
    else:
        raise ValueError("Unknown matrix exponential method {0}".format(method))
