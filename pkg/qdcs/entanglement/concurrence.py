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
import cmath
import numpy as np

from ..fock.states import check_complex
from ..algebra.deformation import as_deformation
from ..coherent.overlaps import DD, overlap_closed_form
from ..utils.flags import experimental

DEFAULT_THRESHOLD = 0.1

class BipartitePairSpec(object):
    """
    The (unnormalized) two-mode state
    :math:`\\mu|\\alpha\\rangle_d\\otimes|\\beta\\rangle_d + \\nu|\\gamma\\rangle_d\\otimes|\\delta\\rangle_d`.
    """
    def __init__(self, mu, nu, alpha, beta, gamma, delta, eps):
        self.mu = check_complex(mu, "mu")
        self.nu = check_complex(nu, "nu")
        if self.mu == 0. and self.nu == 0.:
            raise ValueError("BipartitePairSpec: mu and nu cannot both vanish")
        self.alpha = check_complex(alpha, "alpha")
        self.beta = check_complex(beta, "beta")
        self.gamma = check_complex(gamma, "gamma")
        self.delta = check_complex(delta, "delta")
        self.deformation = as_deformation(eps)
        
    @property
    def eps(self):
        return self.deformation.eps
    
    def labels(self):
        return [self.alpha, self.beta, self.gamma, self.delta]
    
    def as_dict(self):
        out = {}
        for k in ["mu", "nu", "alpha", "beta", "gamma", "delta"]:
            z = getattr(self, k)
            out[k] = [z.real, z.imag]
        out["eps"] = self.eps
        return out
    
    @classmethod
    def from_dict(cls, data):
        """
        Inverse of :code:`as_dict`. Complex entries are :code:`[re, im]` pairs or plain numbers.
        """
        def z(key):
            v = data[key]
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) else v
        try:
            return cls(z("mu"), z("nu"), z("alpha"), z("beta"), z("gamma"), z("delta"), data["eps"])
        except KeyError as e:
            raise ValueError("BipartitePairSpec: missing entry {0}".format(e))
    
    def __repr__(self):
        return "BipartitePairSpec(mu={0}, nu={1}, alpha={2}, beta={3}, gamma={4}, delta={5}, eps={6:g})".format(
            self.mu, self.nu, self.alpha, self.beta, self.gamma, self.delta, self.eps)


class OrthoBasisData(object):
    """
    Overlaps :math:`p_1 = {}_d\\langle\\alpha|\\gamma\\rangle_d`, :math:`p_2 = {}_d\\langle\\beta|\\delta\\rangle_d`
    of the two modes and the normalizers :math:`N_i = \\sqrt{1-|p_i|}` of the orthogonalized basis.
    """
    def __init__(self, p1, p2):
        self.p1 = complex(p1)
        self.p2 = complex(p2)
        self.n1 = math.sqrt(max(1. - abs(self.p1), 0.))
        self.n2 = math.sqrt(max(1. - abs(self.p2), 0.))
        
    @classmethod
    def from_spec(cls, spec):
        p1 = overlap_closed_form(spec.gamma, spec.alpha, spec.deformation, DD)
        p2 = overlap_closed_form(spec.delta, spec.beta, spec.deformation, DD)
        return cls(p1, p2)


class ConcurrenceValue(object):
    """
    A concurrence :code:`c` in :math:`[0,1]` with the validity :code:`margin` of the
    first order expansion it relies on. :code:`valid` is :code:`False` when the margin
    is not below the threshold or the closed form left its range.
    """
    def __init__(self, c, valid=True, margin=0., note="", truncated=False):
        self.c = float(c)
        self.valid = valid
        self.margin = float(margin)
        self.note = note
        self.truncated = truncated
        
    def __float__(self):
        return self.c
    
    def __repr__(self):
        return "ConcurrenceValue(c={0:.10g}, valid={1}, margin={2:.4g}{3})".format(self.c, self.valid, self.margin,
                                                                                 ", note='{0}'".format(self.note) if self.note else "")


def validity_margin(alpha_abs, d):
    """
    :math:`\\frac{4}{3}|\\alpha|^4|\\varepsilon|`, which must stay well below 1 for the first order results.
    """
    d = as_deformation(d)
    return 4.*abs(alpha_abs)**4*abs(d.eps)/3.


def is_allowed(margin, threshold=DEFAULT_THRESHOLD):
    return margin < threshold


def concurrence_general(mu, nu, p1, p2):
    """
    Concurrence of :math:`\\mu|\\alpha\\rangle\\otimes|\\beta\\rangle + \\nu|\\gamma\\rangle\\otimes|\\delta\\rangle`
    from the overlaps :math:`p_1 = \\langle\\alpha|\\gamma\\rangle`, :math:`p_2 = \\langle\\beta|\\delta\\rangle`:
    
    .. math:: \\mathcal{C} = \\frac{2|\\mu||\\nu|\\sqrt{1-|p_1|^2}\\sqrt{1-|p_2|^2}}{|\\mu|^2+|\\nu|^2+\\mu\\bar{\\nu}\\bar{p}_1 p_2+\\bar{\\mu}\\nu p_1\\bar{p}_2}
    
    A vanishing denominator (null state) raises :code:`ValueError`.
    If one of the overlaps has unit modulus the state is a product state and 0 is returned.
    """
    mu, nu, p1, p2 = complex(mu), complex(nu), complex(p1), complex(p2)
    cross = mu*nu.conjugate()*p1.conjugate()*p2
    den = abs(mu)**2 + abs(nu)**2 + cross + cross.conjugate()
    assert abs(den.imag) <= 1e-12
    den = den.real
    if den <= 1e-14:
        raise ValueError("concurrence_general: null state (denominator {0:.3e})".format(den))
    if max(abs(p1), abs(p2)) >= 1. - 1e-14:
        return ConcurrenceValue(0., note="degenerate-superposition")
    num = 2.*abs(mu)*abs(nu)*math.sqrt(1. - abs(p1)**2)*math.sqrt(1. - abs(p2)**2)
    c = num/den
    if c > 1. + 1e-12:
        return ConcurrenceValue(1., valid=False, note="clipped from {0:.6g}".format(c))
    return ConcurrenceValue(min(c, 1.))


@experimental(version="1.0.0", msg="The denominator is the squared norm of the state instead of the printed cross terms.")
def concurrence_norm_consistent(mu, nu, p1, p2):
    """
    Variant of :code:`concurrence_general` with the denominator
    :math:`|\\mu|^2+|\\nu|^2+2\\mathrm{Re}(\\bar{\\mu}\\nu p_1 p_2)`, the squared norm of the state.
    The two forms agree when the overlaps are real.
    """
    mu, nu, p1, p2 = complex(mu), complex(nu), complex(p1), complex(p2)
    den = abs(mu)**2 + abs(nu)**2 + 2.*(mu.conjugate()*nu*p1*p2).real
    if den <= 1e-14:
        raise ValueError("concurrence_norm_consistent: null state (denominator {0:.3e})".format(den))
    if max(abs(p1), abs(p2)) >= 1. - 1e-14:
        return ConcurrenceValue(0., note="degenerate-superposition")
    num = 2.*abs(mu)*abs(nu)*math.sqrt(1. - abs(p1)**2)*math.sqrt(1. - abs(p2)**2)
    return ConcurrenceValue(min(num/den, 1.))


def pair_margin(spec):
    return validity_margin(max([abs(z) for z in spec.labels()]), spec.deformation)


def concurrence_pair(spec, threshold=DEFAULT_THRESHOLD):
    """
    Concurrence of a :code:`BipartitePairSpec` from the closed form deformed overlaps.
    The margin is evaluated at the largest coherence label of the state.
    """
    ortho = OrthoBasisData.from_spec(spec)
    value = concurrence_general(spec.mu, spec.nu, ortho.p1, ortho.p2)
    value.margin = pair_margin(spec)
    value.valid = value.valid and is_allowed(value.margin, threshold)
    return value


def _symmetric_value(num, den, margin, threshold):
    valid = is_allowed(margin, threshold)
    if den <= 0.:
        return ConcurrenceValue(0. if num <= 0. else 1., valid=False, margin=margin, note="vanishing denominator")
    c = num/den
    if c < 0. or c > 1.:
        return ConcurrenceValue(min(max(c, 0.), 1.), valid=False, margin=margin, note="clipped from {0:.6g}".format(c))
    return ConcurrenceValue(c, valid=valid, margin=margin)


def concurrence_symmetric(alpha_abs, theta, d, threshold=DEFAULT_THRESHOLD):
    """
    Closed form concurrence of :math:`|\\alpha\\rangle_d\\otimes|-\\alpha\\rangle_d + e^{i\\theta}|-\\alpha\\rangle_d\\otimes|\\alpha\\rangle_d`:
    
    .. math:: \\mathcal{C} = \\frac{1 - k}{1 + k\\cos\\theta}, \\quad k = \\left(1+\\frac{4}{3}|\\alpha|^4\\varepsilon\\right)e^{-4|\\alpha|^2}.
    
    The antisymmetric state :math:`\\cos\\theta = -1` has :math:`\\mathcal{C} = 1` exactly.
    Values outside :math:`[0,1]` (only possible far outside the perturbative region) are clipped and marked invalid.
    """
    d = as_deformation(d)
    alpha_abs = abs(float(alpha_abs))
    margin = validity_margin(alpha_abs, d)
    cos = math.cos(theta)
    if cos == -1.:
        return ConcurrenceValue(1., valid=is_allowed(margin, threshold), margin=margin)
    a2 = alpha_abs*alpha_abs
    k = (1. + 4.*a2*a2*d.eps/3.)*math.exp(-4.*a2)
    return _symmetric_value(1. - k, 1. + cos*k, margin, threshold)


def concurrence_general_symmetric(alpha, beta, theta, d, threshold=DEFAULT_THRESHOLD):
    """
    Concurrence of :math:`|\\alpha\\rangle_d\\otimes|\\beta\\rangle_d + e^{i\\theta}|\\beta\\rangle_d\\otimes|\\alpha\\rangle_d`,
    
    .. math:: \\mathcal{C} = \\frac{1 - |{}_d\\langle\\alpha|\\beta\\rangle_d|^2}{1 + \\cos\\theta|{}_d\\langle\\alpha|\\beta\\rangle_d|^2}.
    """
    d = as_deformation(d)
    alpha = check_complex(alpha, "alpha")
    beta = check_complex(beta, "beta")
    margin = validity_margin(max(abs(alpha), abs(beta)), d)
    p2 = abs(overlap_closed_form(beta, alpha, d, DD))**2
    cos = math.cos(theta)
    if p2 >= 1. - 1e-14:
        if 1. + cos*p2 <= 1e-14:
            raise ValueError("concurrence_general_symmetric: null state (alpha = beta, theta = pi)")
        return ConcurrenceValue(0., valid=is_allowed(margin, threshold), margin=margin, note="degenerate-superposition")
    if cos == -1.:
        return ConcurrenceValue(1., valid=is_allowed(margin, threshold), margin=margin)
    return _symmetric_value(1. - p2, 1. + cos*p2, margin, threshold)


def ent_psi1_spec(alpha, beta, theta, eps):
    """
    :math:`|\\alpha\\rangle_d\\otimes|\\beta\\rangle_d + e^{i\\theta}|\\beta\\rangle_d\\otimes|\\alpha\\rangle_d`.
    """
    return BipartitePairSpec(1., cmath.exp(1j*theta), alpha, beta, beta, alpha, eps)


def ent_psi2_spec(alpha_abs, theta, eps):
    """
    :math:`|\\alpha\\rangle_d\\otimes|-\\alpha\\rangle_d + e^{i\\theta}|-\\alpha\\rangle_d\\otimes|\\alpha\\rangle_d` with real :math:`\\alpha`.
    """
    a = float(alpha_abs)
    return BipartitePairSpec(1., cmath.exp(1j*theta), a, -a, -a, a, eps)
