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

import cmath

from ..fock.linalg import inner_product
from ..fock.states import check_complex, coherent_state
from ..algebra.deformation import as_deformation
from .dcs import DeformedStateSpec, dcs_perturbative

"""
Overlaps :math:`\\langle\\beta|\\alpha\\rangle` between deformed and standard coherent states.

- :code:`DD`: both states deformed, :math:`{}_d\\langle\\beta|\\alpha\\rangle_d`
- :code:`DN`: deformed ket, :math:`\\langle\\beta|\\alpha\\rangle_d`
- :code:`ND`: deformed bra, :math:`{}_d\\langle\\beta|\\alpha\\rangle`
- :code:`STANDARD`: the Gaussian overlap of two standard coherent states
"""

DD = "dd"
DN = "dn"
ND = "nd"
STANDARD = "standard"

_kinds = {"dd": DD, "dn": DN, "nd": ND, "standard": STANDARD, "std": STANDARD}

def as_overlap_kind(kind):
    try:
        return _kinds[kind]
    except (KeyError, TypeError):
        raise ValueError("Unknown overlap kind {0}: use one of dd, dn, nd, std".format(kind))


def _abs2(z):
    return z.real*z.real + z.imag*z.imag


def gaussian_overlap(alpha, beta):
    """
    :math:`\\langle\\beta|\\alpha\\rangle = \\exp[\\frac{1}{2}(2\\alpha\\bar{\\beta} - |\\alpha|^2 - |\\beta|^2)]`.
    """
    alpha = check_complex(alpha, "alpha")
    beta = check_complex(beta, "beta")
    return cmath.exp(.5*(2.*alpha*beta.conjugate() - _abs2(alpha) - _abs2(beta)))


def overlap_prefactor(alpha, beta, d, kind):
    """
    First order correction multiplying the Gaussian overlap.
    With :math:`s = \\bar{\\beta}\\alpha`:
    
    - dd: :math:`1 + \\frac{\\varepsilon}{24}\\left[|\\alpha|^4 + |\\beta|^4 - 4(|\\alpha|^2 + |\\beta|^2)s + 6s^2\\right]`
    - dn: :math:`1 + \\frac{\\varepsilon}{24}\\left[|\\alpha|^4 - 4|\\alpha|^2 s + 3s^2\\right]`
    - nd: :math:`1 + \\frac{\\varepsilon}{24}\\left[|\\beta|^4 - 4|\\beta|^2 s + 3s^2\\right]`
    """
    kind = as_overlap_kind(kind)
    d = as_deformation(d)
    alpha = check_complex(alpha, "alpha")
    beta = check_complex(beta, "beta")
    if kind == STANDARD:
        return complex(1.)
    a2 = _abs2(alpha)
    b2 = _abs2(beta)
    s = alpha*beta.conjugate()
    if kind == DD:
        bracket = (a2*a2 + b2*b2) - 4.*(a2 + b2)*s + 6.*(s*s)
    elif kind == DN:
        bracket = a2*a2 - 4.*a2*s + 3.*(s*s)
    else:
        bracket = b2*b2 - 4.*b2*s + 3.*(s*s)
    return 1. + d.eps*bracket/24.


def overlap_closed_form(alpha, beta, d, kind):
    """
    Closed form of :math:`\\langle\\beta|\\alpha\\rangle` for the overlap :code:`kind`.
    The dd overlap of a state with itself is exactly 1.
    """
    return overlap_prefactor(alpha, beta, d, kind)*gaussian_overlap(alpha, beta)


class OverlapValue(object):
    """
    A numerically evaluated overlap :code:`value` and the :code:`truncated` flag of the
    state vectors it was computed from.
    """
    def __init__(self, value, truncated=False):
        self.value = complex(value)
        self.truncated = truncated
        
    def __complex__(self):
        return self.value
    
    def __abs__(self):
        return abs(self.value)
    
    def __repr__(self):
        return "OverlapValue(value={0:.10g}, truncated={1})".format(self.value, self.truncated)


def overlap_numeric(alpha, beta, d, kind, dim=64):
    """
    Inner product of the truncated perturbative (or standard) state vectors selected by :code:`kind`.
    The result is flagged as :code:`truncated` when either vector is.
    """
    kind = as_overlap_kind(kind)
    d = as_deformation(d)
    if kind in [DD, ND]:
        bra = dcs_perturbative(DeformedStateSpec(beta, d, dim))
    else:
        bra = coherent_state(beta, dim)
    if kind in [DD, DN]:
        ket = dcs_perturbative(DeformedStateSpec(alpha, d, dim))
    else:
        ket = coherent_state(alpha, dim)
    return OverlapValue(inner_product(bra, ket), bra.truncated or ket.truncated)
