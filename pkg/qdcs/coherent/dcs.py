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

from ..fock.vectors import check_dim, vacuum
from ..fock.operators import make_creation
from ..fock.expm import matrix_exponential
from ..fock.states import Truncation_ParameterList, check_complex, coherent_amplitudes, attach_tail
from ..algebra.deformation import as_deformation
from ..algebra.deformedOperators import deformed_generator

PERTURBATIVE = "perturbative"
NUMERIC = "numeric"

PERTURBATIVE_COEFFICIENTS = (1./24., 1./6., 1./8.)

class DeformedStateSpec(object):
    """
    One deformed coherent state :math:`|\\alpha\\rangle_d`: the label :code:`alpha`,
    the deformation :code:`eps`, the truncation :code:`dim` and the construction
    :code:`method` (:code:`"perturbative"` or :code:`"numeric"`).
    """
    def __init__(self, alpha, eps, dim=64, method=PERTURBATIVE):
        self.alpha = check_complex(alpha)
        self.deformation = as_deformation(eps)
        self.dim = check_dim(dim)
        if method not in [PERTURBATIVE, NUMERIC]:
            raise ValueError("Unknown construction method {0}".format(method))
        self.method = method
        
    @property
    def eps(self):
        return self.deformation.eps
    
    def __repr__(self):
        return "DeformedStateSpec(alpha={0}, eps={1:g}, dim={2}, method={3})".format(self.alpha, self.eps, self.dim, self.method)


def deformed_displacement(alpha, d, dim, method="pade"):
    """
    The deformed displacement :math:`D_d(\\alpha) = \\exp(\\alpha b^\\dagger - \\bar{\\alpha} b)`
    in the first order representation of :math:`b`.
    """
    return matrix_exponential(deformed_generator(alpha, d, dim), method)


def dcs_numeric(spec, parameters=None, expm_method="pade"):
    """
    :math:`|\\alpha\\rangle_d = D_d(\\alpha)|0\\rangle` by exact exponentiation in the truncated space.
    The deformed and standard vacua coincide since :math:`b|0\\rangle = 0`.
    """
    if parameters is None:
        parameters = Truncation_ParameterList()
    D = deformed_displacement(spec.alpha, spec.deformation, spec.dim, expm_method)
    return attach_tail(D.mult(vacuum(spec.dim)).amp, "dcs_numeric", parameters)


def dcs_perturbative(spec, parameters=None, coefficients=PERTURBATIVE_COEFFICIENTS):
    """
    First order closed form
    
    .. math:: |\\alpha\\rangle_d = \\left[1 + \\varepsilon\\left(c_0|\\alpha|^4 - c_1|\\alpha|^2\\alpha a^\\dagger + c_2\\alpha^2 a^{\\dagger 2}\\right)\\right]|\\alpha\\rangle
    
    with :math:`(c_0,c_1,c_2) = (1/24, 1/6, 1/8)`, applied to the truncated coherent vector.
    The result is not renormalized: its norm is :math:`1 + O(\\varepsilon^2)`.
    """
    if parameters is None:
        parameters = Truncation_ParameterList()
    if spec.dim < 3:
        raise ValueError("dcs_perturbative requires dim >= 3, got {0}".format(spec.dim))
    alpha = spec.alpha
    eps = spec.eps
    c0, c1, c2 = coefficients
    a2 = alpha.real*alpha.real + alpha.imag*alpha.imag
    
    v = coherent_amplitudes(alpha, spec.dim)
    ad = make_creation(spec.dim).mat
    adv = np.dot(ad, v)
    ad2v = np.dot(ad, adv)
    amp = (1. + eps*c0*a2*a2)*v - (eps*c1*a2*alpha)*adv + (eps*c2*alpha*alpha)*ad2v
    return attach_tail(amp, "dcs_perturbative", parameters)


def deformed_coherent_state(spec, parameters=None):
    """
    Build :code:`spec` with the construction path it names.
    """
    if spec.method == NUMERIC:
        return dcs_numeric(spec, parameters)
    return dcs_perturbative(spec, parameters)


def normalization_defect(spec, parameters=None):
    """
    :math:`\\|v\\|^2 - 1` for the state described by :code:`spec`.
    """
    v = deformed_coherent_state(spec, parameters)
    return v.norm()**2 - 1.
