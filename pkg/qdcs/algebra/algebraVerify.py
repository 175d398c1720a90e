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

from ..fock.operators import make_identity, make_number
from ..fock.vectors import check_dim, vacuum
from ..fock.states import check_complex
from ..utils.parameterList import ParameterList
from .deformation import as_deformation
from .deformedOperators import deformed_annihilator, deformed_number, deformation_function, commutator

def AlgebraVerify_ParameterList():
    """
    Generate a ParameterList for the matrix checks of the deformed algebra.
    Type :code:`AlgebraVerify_ParameterList().showMe()` for default values and their descriptions
    """
    parameters = {}
    parameters["commutator_window"]   = [8, "highest level n used in the commutator checks"]
    parameters["commutator_constant"] = [12.0, "tolerance of the first order commutator check is commutator_constant*eps^2"]
    parameters["edge"]                = [3, "levels n > dim - edge are excluded from the safe block"]
    parameters["bch_window"]          = [2, "the nested commutators are compared on the block of levels n <= bch_window"]
    parameters["bch_constant"]        = [8.0, "tolerance of the nested commutators is bch_constant*eps^2*max(1,|alpha|^4)"]
    parameters["order_window"]        = [[3.5, 4.5], "accepted range of the residual ratio under eps halving"]
    parameters["floor"]               = [1e-10, "absolute tolerance added to every check (round-off)"]
    parameters["print_level"]         = [0, "print info on screen"]
    return ParameterList(parameters)


class ResidualReport(object):
    """
    Outcome of one matrix identity check.
    
    - :code:`residual`: max norm of the residual on the safe block.
    - :code:`profile`: per-level residuals on the safe block, when meaningful.
    - :code:`edge`: max residual on the rows excluded by the truncation edge (:code:`None` if not computed).
    """
    def __init__(self, name, residual, tolerance, profile=None, edge=None, note=""):
        self.name = name
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.profile = profile
        self.edge = edge
        self.note = note
        
    @property
    def passed(self):
        return self.residual <= self.tolerance
    
    def __repr__(self):
        return "ResidualReport({0}: {1:.3e} <= {2:.3e} {3})".format(self.name, self.residual, self.tolerance,
                                                                    "pass" if self.passed else "FAIL")


def order_ratio(r_coarse, r_fine, floor=1e-10):
    """
    Ratio of two residuals at :math:`\\varepsilon` and :math:`\\varepsilon/2`.
    Returns :code:`None` when the fine residual is at round-off level.
    """
    if r_fine <= floor:
        return None
    return r_coarse/r_fine


def _print_reports(reports, parameters):
    if parameters["print_level"] > 0:
        for r in reports:
            print( "{0:<40} {1:12.4e} {2:12.4e}  {3}".format(r.name, r.residual, r.tolerance, "pass" if r.passed else "FAIL"))


def _check_levels(dim, minimum, where):
    dim = check_dim(dim)
    if dim < minimum:
        raise ValueError("{0} requires dim >= {1}, got {2}".format(where, minimum, dim))
    return dim


def verify_q_commutator(d, dim, parameters=None):
    """
    Check the deformed commutator on the safe block :math:`n \\leq \\min(window, dim-3)`.
    
    Two records are returned:
    
    - :code:`q-commutator first order`: :math:`[b,b^\\dagger] - (I + \\varepsilon\\hat{n})`,
      whose diagonal is exactly :math:`\\varepsilon^2 n(3n-1)/16` for this representation;
    - :code:`q-relation`: :math:`bb^\\dagger - q b^\\dagger b - I = [b,b^\\dagger] - (I + \\varepsilon b^\\dagger b)`.
    
    Both residuals are :math:`O(\\varepsilon^2)`.
    """
    if parameters is None:
        parameters = AlgebraVerify_ParameterList()
    d = as_deformation(d)
    dim = _check_levels(dim, 4, "verify_q_commutator")
    eps = d.eps
    
    b = deformed_annihilator(d, dim)
    C = commutator(b, b.adjoint())
    I = make_identity(dim)
    top = min(parameters["commutator_window"], dim - parameters["edge"])
    
    tol1 = parameters["commutator_constant"]*eps*eps + parameters["floor"]
    tol2 = 2.*parameters["commutator_constant"]*eps*eps*(1. + abs(eps)) + parameters["floor"]
    
    reports = []
    for name, R, tol in [("q-commutator first order", C - I - eps*make_number(dim), tol1),
                         ("q-relation", C - I - eps*deformed_number(d, dim), tol2)]:
        absR = np.abs(R.mat)
        rows = np.max(absR, axis=1)
        profile = rows[:top+1]
        edge = float(np.max(rows[dim - parameters["edge"] + 1:]))
        reports.append(ResidualReport(name, np.max(profile), tol, profile=profile, edge=edge))
        
    _print_reports(reports, parameters)
    return reports


def verify_ncs_identities(d, dim, parameters=None):
    """
    Exact identities of the nonlinear coherent state form :math:`b = a f(\\hat{n})` on the safe block:
    :math:`[\\hat{n},b] = -b`, :math:`[\\hat{n},b^\\dagger] = b^\\dagger`,
    :math:`b|n\\rangle = \\sqrt{n} f(n)|n-1\\rangle`,
    :math:`[b,b^\\dagger] = (\\hat{n}+1)f^2(\\hat{n}+1) - \\hat{n}f^2(\\hat{n})`,
    the eigenvalues of :math:`b^\\dagger b` against their first order expansion, and :math:`b|0\\rangle = 0`.
    """
    if parameters is None:
        parameters = AlgebraVerify_ParameterList()
    d = as_deformation(d)
    dim = _check_levels(dim, 4, "verify_ncs_identities")
    eps = d.eps
    floor = parameters["floor"]
    s = dim - parameters["edge"] + 1
    
    b = deformed_annihilator(d, dim)
    bd = b.adjoint()
    N = make_number(dim)
    levels = np.arange(dim)
    f = deformation_function(d, levels)
    
    reports = []
    R = commutator(N, b) + b
    reports.append(ResidualReport("[n,b] = -b", np.max(np.abs(R.mat[:s, :s])), floor))
    R = commutator(N, bd) - bd
    reports.append(ResidualReport("[n,b+] = b+", np.max(np.abs(R.mat[:s, :s])), floor))
    
    expected = np.diag(np.sqrt(levels[1:])*f[1:], k=1)
    R = np.abs(b.mat - expected)[:s, :s]
    reports.append(ResidualReport("b|n> = sqrt(n) f(n)|n-1>", np.max(R), floor))
    
    g = levels*f*f
    diag = np.diag(commutator(b, bd).mat).real
    R = np.abs(diag[:s-1] - (g[1:s] - g[:s-1]))
    reports.append(ResidualReport("[b,b+] = (n+1)f^2(n+1) - nf^2(n)", np.max(R), floor, profile=R))
    
    nd = np.diag(deformed_number(d, dim).mat).real
    first_order = levels + .5*eps*levels*(levels - 1.)
    printed = levels + eps*(levels + .5*levels*levels)
    top = min(parameters["commutator_window"], s - 1)
    # the remainder is eps^2 n (n-1)^2 / 16
    R = np.abs(nd - first_order)[:top+1]
    gap = float(np.max(np.abs(nd - printed)[:top+1]))
    reports.append(ResidualReport("b+b = n + (eps/2) n(n-1)", np.max(R), eps*eps*top**3/16. + floor,
                                  profile=R,
                                  note="the expansion n + eps(n + n^2/2) deviates by {0:.3e}".format(gap)))
    
    v = b.mult(vacuum(dim))
    reports.append(ResidualReport("b|0> = 0", v.norm(), floor))
    
    _print_reports(reports, parameters)
    return reports


def verify_bch_commutators(alpha, d, dim, parameters=None):
    """
    Check the nested commutators of :math:`X = \\alpha b^\\dagger - \\bar{\\alpha} b` and :math:`Y = \\bar{\\alpha} b`
    that enter the Baker-Campbell-Hausdorff expansion of the deformed displacement:
    
    - :math:`[X,Y] = -|\\alpha|^2(1 + \\varepsilon b^\\dagger b)`
    - :math:`[X,[X,Y]] = |\\alpha|^2\\varepsilon(\\alpha b^\\dagger + \\bar{\\alpha} b)`
    - :math:`[Y,[X,Y]] = -|\\alpha|^2\\bar{\\alpha}\\varepsilon b`
    - :math:`[Y,[X,[X,Y]]] = |\\alpha|^4\\varepsilon` (a c-number)
    
    Each identity holds up to :math:`O(\\varepsilon^2)`; residuals are the max norm on the
    block of levels :math:`n \\leq` :code:`bch_window`, which requires :code:`dim >= bch_window + 6`.
    """
    if parameters is None:
        parameters = AlgebraVerify_ParameterList()
    d = as_deformation(d)
    alpha = check_complex(alpha)
    w = parameters["bch_window"]
    dim = _check_levels(dim, w + 6, "verify_bch_commutators")
    eps = d.eps
    a2 = alpha.real*alpha.real + alpha.imag*alpha.imag
    
    b = deformed_annihilator(d, dim)
    bd = b.adjoint()
    I = make_identity(dim)
    X = alpha*bd - alpha.conjugate()*b
    Y = alpha.conjugate()*b
    XY = commutator(X, Y)
    XXY = commutator(X, XY)
    
    tol = parameters["bch_constant"]*eps*eps*max(1., a2*a2) + parameters["floor"]
    checks = [("[X,Y]", XY + a2*(I + eps*deformed_number(d, dim))),
              ("[X,[X,Y]]", XXY - (a2*eps)*(alpha*bd + alpha.conjugate()*b)),
              ("[Y,[X,Y]]", commutator(Y, XY) + (a2*eps*alpha.conjugate())*b),
              ("[Y,[X,[X,Y]]]", commutator(Y, XXY) - (a2*a2*eps)*I)]
    reports = []
    for name, R in checks:
        block = np.abs(R.mat[:w+1, :w+1])
        reports.append(ResidualReport(name, np.max(block), tol, profile=np.max(block, axis=1)))
    
    _print_reports(reports, parameters)
    return reports
