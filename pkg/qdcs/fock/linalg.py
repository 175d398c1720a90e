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

from .vectors import FockVector, TwoModeVector


def inner_product(u, v):
    """
    Compute :math:`\\langle u|v\\rangle`, conjugate-linear in :code:`u`.
    Both arguments must be :code:`FockVector` or both :code:`TwoModeVector` with equal dimension.
    """
    if type(u) is not type(v):
        raise TypeError("inner_product: incompatible types {0} and {1}".format(type(u), type(v)))
    if u.dim != v.dim:
        raise ValueError("inner_product: dimension mismatch {0} != {1}".format(u.dim, v.dim))
    return complex(np.vdot(u.amp, v.amp))


def tensor_product(u, v):
    """
    Compute :math:`u \\otimes v` with amplitude :math:`u_{n_1} v_{n_2}` at :code:`n1*dim + n2`.
    """
    if not (isinstance(u, FockVector) and isinstance(v, FockVector)):
        raise TypeError("tensor_product expects two FockVector")
    if u.dim != v.dim:
        raise ValueError("tensor_product: dimension mismatch {0} != {1}".format(u.dim, v.dim))
    return TwoModeVector(np.kron(u.amp, v.amp), u.dim, u.truncated or v.truncated)


def tail_mass(v, k):
    """
    Fraction of the squared norm of :code:`v` carried by the levels :math:`n \\geq k`.
    The null vector has tail mass 0.
    """
    if k < 0 or k >= v.dim:
        raise ValueError("tail_mass: level {0} out of range for dim = {1}".format(k, v.dim))
    w = np.abs(v.amp)**2
    total = np.sum(w)
    if total == 0.:
        return 0.
    return float(np.sum(w[k:])/total)


def reduced_density_matrix(w, mode=1):
    """
    Reduced density matrix of mode 1 (:math:`\\rho_1 = \\mathrm{Tr}_2 |w\\rangle\\langle w|`)
    or mode 2 of the normalized two-mode state :code:`w`.
    """
    M = w.normalized().as_matrix()
    if mode == 1:
        return np.dot(M, M.conj().T)
    elif mode == 2:
        return np.dot(M.T, M.conj())
    else:
        raise ValueError("mode must be 1 or 2, got {0}".format(mode))


def schmidt_coefficients(w):
    """
    Schmidt coefficients of the normalized two-mode state :code:`w`, in decreasing order.
    Their squares are the eigenvalues of either reduced density matrix.
    """
    return sla.svdvals(w.normalized().as_matrix())


def purity_defect_from_spectrum(lam):
    """
    Compute :math:`1 - \\sum_i \\lambda_i^2` for the spectrum :code:`lam` of a reduced
    density matrix, renormalized to unit trace, as :math:`2\\sum_{i<j}\\lambda_i\\lambda_j`.
    The latter is free of cancellation for nearly separable states.
    """
    lam = np.clip(np.asarray(lam, dtype=np.float64), 0., None)
    total = np.sum(lam)
    if total <= 0.:
        raise ValueError("purity_defect_from_spectrum: empty spectrum")
    lam = np.sort(lam/total)
    tail = np.cumsum(lam[::-1])[::-1]
    return float(2.*np.sum(lam[:-1]*tail[1:]))


def purity_defect(w):
    """
    Compute :math:`1 - \\mathrm{Tr}\\rho_1^2` from the Schmidt spectrum of :code:`w`.
    """
    return purity_defect_from_spectrum(schmidt_coefficients(w)**2)
