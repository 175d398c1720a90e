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
from scipy.stats import poisson

from .vectors import FockVector, check_dim
from .operators import make_annihilator, make_quadratures
from .linalg import tail_mass
from ..utils.parameterList import ParameterList
from ..utils.flags import flag_truncation

def Truncation_ParameterList():
    """
    Generate a ParameterList for the truncated Fock space.
    Type :code:`Truncation_ParameterList().showMe()` for default values and their descriptions
    """
    parameters = {}
    parameters["dim"]            = [64, "number of retained levels |0>, ..., |dim-1>"]
    parameters["tail_margin"]    = [8, "the truncation gauge is the tail mass from level dim - tail_margin"]
    parameters["tail_tolerance"] = [1e-10, "states with a larger tail mass are flagged as truncated"]
    return ParameterList(parameters)


def check_complex(z, what="alpha"):
    if isinstance(z, bool) or not isinstance(z, numbers.Number):
        raise TypeError("{0} must be a number, got {1}".format(what, type(z)))
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError("{0} must be finite, got {1}".format(what, z))
    return z


def truncation_gauge(v, tail_margin):
    """
    Tail mass of :code:`v` from level :code:`max(dim - tail_margin, 1)`.
    A single level space carries no tail.
    """
    if v.dim == 1:
        return 0.
    return tail_mass(v, max(v.dim - tail_margin, 1))


def attach_tail(amp, where, parameters):
    """
    Wrap :code:`amp` into a :code:`FockVector` carrying its truncation gauge and flag.
    """
    v = FockVector(amp)
    tail = truncation_gauge(v, parameters["tail_margin"])
    truncated = flag_truncation(tail, parameters["tail_tolerance"], where)
    return FockVector(v.amp, tail=tail, truncated=truncated)


def coherent_amplitudes(alpha, dim):
    """
    :math:`e^{-|\\alpha|^2/2}\\alpha^n/\\sqrt{n!}` for :math:`n = 0, \\ldots, dim-1`,
    built by the recurrence :math:`c_n = c_{n-1}\\alpha/\\sqrt{n}`.
    """
    amp = np.empty(dim, dtype=np.complex128)
    amp[0] = np.exp(-.5*(alpha.real*alpha.real + alpha.imag*alpha.imag))
    if dim > 1:
        amp[1:] = amp[0]*np.cumprod(alpha/np.sqrt(np.arange(1, dim, dtype=np.float64)))
    return amp


def coherent_state(alpha, dim, parameters=None):
    """
    The standard coherent state :math:`|\\alpha\\rangle` truncated to :code:`dim` levels.
    Inadequate truncation is flagged (see :code:`Truncation_ParameterList`), never raised.
    """
    if parameters is None:
        parameters = Truncation_ParameterList()
    alpha = check_complex(alpha)
    dim = check_dim(dim)
    return attach_tail(coherent_amplitudes(alpha, dim), "coherent_state", parameters)


def poisson_weights(alpha, dim):
    """
    Photon number distribution :math:`|\\langle n|\\alpha\\rangle|^2` of a coherent state,
    a Poisson distribution of mean :math:`|\\alpha|^2`.
    """
    alpha = check_complex(alpha)
    dim = check_dim(dim)
    return poisson.pmf(np.arange(dim), abs(alpha)**2)


def annihilator_eigen_residual(alpha, dim, edge=1):
    """
    :math:`\\| a|\\alpha\\rangle - \\alpha|\\alpha\\rangle \\|` on the levels :math:`n < dim - edge`.
    The last level is corrupted by the truncation of :math:`a`.
    """
    v = coherent_state(alpha, dim)
    r = make_annihilator(v.dim).mult(v).amp - complex(alpha)*v.amp
    return np.linalg.norm(r[:max(v.dim - edge, 0)])


def uncertainty_product(v):
    """
    :math:`\\Delta Q\\,\\Delta P` in the state :code:`v` (normalized internally).
    Coherent states saturate the Heisenberg bound :math:`1/2`.
    """
    v = v.normalized()
    Q, P = make_quadratures(v.dim)
    varQ = Q.inner(v, Q.mult(v)).real - Q.inner(v, v).real**2
    varP = P.inner(v, P.mult(v)).real - P.inner(v, v).real**2
    return np.sqrt(max(varQ, 0.)*max(varP, 0.))
