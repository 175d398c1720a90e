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

import numbers
import numpy as np

from ..fock.operators import FockOperator, make_annihilator
from ..fock.states import check_complex
from .deformation import as_deformation

def deformation_function(d, n):
    """
    The f-deformation function :math:`f(n) = 1 + \\varepsilon (n-1)/4`, so that :math:`b = a f(\\hat{n})`.
    :code:`n` is a non-negative integer or an integer array.
    """
    d = as_deformation(d)
    n_arr = np.asarray(n)
    if not np.issubdtype(n_arr.dtype, np.integer):
        raise TypeError("deformation_function expects integer levels, got {0}".format(n_arr.dtype))
    if np.any(n_arr < 0):
        raise ValueError("deformation_function: levels must be non-negative")
    f = 1. + .25*d.eps*(n_arr - 1.)
    if isinstance(n, numbers.Integral):
        return float(f)
    return f


def deformed_annihilator(d, dim):
    """
    First order representation of the deformed annihilator,
    :math:`b = a + \\frac{\\varepsilon}{4} a^\\dagger a a`.
    """
    d = as_deformation(d)
    a = make_annihilator(dim)
    ad = a.adjoint()
    if d.eps == 0.:
        return a
    return a + (.25*d.eps)*(ad @ a @ a)


def deformed_creation(d, dim):
    """
    :math:`b^\\dagger = a^\\dagger + \\frac{\\varepsilon}{4} a^{\\dagger 2} a`, the entrywise adjoint of :code:`deformed_annihilator`.
    """
    return deformed_annihilator(d, dim).adjoint()


def deformed_number(d, dim):
    """
    The deformed number operator, defined as the product :math:`b^\\dagger b` of the representation matrices.
    Its eigenvalue on :math:`|n\\rangle` is :math:`n f(n)^2`.
    """
    b = deformed_annihilator(d, dim)
    return b.adjoint() @ b


def deformed_generator(alpha, d, dim):
    """
    The anti-Hermitian generator :math:`\\alpha b^\\dagger - \\bar{\\alpha} b` of the deformed displacement.
    """
    alpha = check_complex(alpha)
    b = deformed_annihilator(d, dim)
    return alpha*b.adjoint() - alpha.conjugate()*b


def commutator(A, B):
    """
    :math:`[A,B] = AB - BA`.
    """
    if not (isinstance(A, FockOperator) and isinstance(B, FockOperator)):
        raise TypeError("commutator expects two FockOperator")
    if A.dim != B.dim:
        raise ValueError("commutator: dimension mismatch {0} != {1}".format(A.dim, B.dim))
    return A @ B - B @ A
