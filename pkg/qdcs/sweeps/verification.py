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
import numpy as np

from ..version import __version__
from ..fock.linalg import inner_product
from ..fock.states import coherent_state, poisson_weights, annihilator_eigen_residual, uncertainty_product
from ..algebra.deformation import Deformation
from ..algebra.algebraVerify import AlgebraVerify_ParameterList, order_ratio, verify_q_commutator, verify_ncs_identities, verify_bch_commutators
from ..coherent.dcs import DeformedStateSpec, dcs_numeric, dcs_perturbative
from ..coherent.overlaps import DD, DN, ND, STANDARD, overlap_closed_form
from ..entanglement.concurrence import concurrence_pair, concurrence_symmetric, ent_psi2_spec
from ..entanglement.oracle import concurrence_fock_oracle
from ..entanglement.maximal import is_maximally_entangled, maximally_entangled_examples
from ..scheduling.collective import NullCollective, ordered_map
from ..utils.parameterList import ParameterList

def Verification_ParameterList():
    """
    Generate a ParameterList for :code:`run_verification_suite`.
    Type :code:`Verification_ParameterList().showMe()` for default values and their descriptions
    """
    parameters = {}
    parameters["dim"]                       = [64, "truncation dimension (at least 32)"]
    parameters["eps_grid"]                  = [[0.2, 0.1, 0.05], "deformation parameters; the two smallest give the order ratios"]
    parameters["bch_alpha_list"]            = [[[0.5, 0.], [1., 0.], [1., 0.5]], "coherence labels [re, im] of the nested commutator checks"]
    parameters["norm_alpha_list"]           = [[0.3, 0.5, 1.0, 1.5], "coherence labels of the normalization and standard state checks"]
    parameters["pair_list"]                 = [[[1., 0.], [-1., 0.], [0., 1.], [0., -1.], [0.5, 0.]], "labels [re, im] of the overlap checks"]
    parameters["overlap_constant"]          = [5e-3, "overlaps must agree within overlap_constant*eps at the smallest eps"]
    parameters["agreement_alpha"]           = [1.0, "coherence label of the method agreement check"]
    parameters["agreement_constant"]        = [1.0, "numeric and perturbative states must agree within agreement_constant*eps^2"]
    parameters["oracle_alpha_list"]         = [[0.3, 0.6, 1.0, 1.2, 1.5], "|alpha| grid of the concurrence oracle check"]
    parameters["oracle_theta_list"]         = [[0., .5*math.pi, math.pi, 1.5*math.pi, 2.*math.pi], "theta grid of the concurrence oracle check"]
    parameters["oracle_constant"]           = [2.0, "concurrences must agree within max(1e-8, oracle_constant*eps^2)"]
    parameters["maximal_alpha"]             = [0.8, "coherence label of the maximally entangled catalogue"]
    parameters["perturbative_coefficients"] = [[1./24., 1./6., 1./8.], "coefficients of the closed form deformed coherent state"]
    parameters["algebra"]                   = [AlgebraVerify_ParameterList(), "Sublist containing the parameters of the algebra checks"]
    parameters["print_level"]               = [0, "print info on screen"]
    return ParameterList(parameters)


class CheckRecord(object):
    """
    One check at one deformation :code:`eps` (:code:`None` for checks that do not depend on it).
    Order checked records also fail when their ratio under :math:`\\varepsilon` halving leaves :code:`window`.
    """
    def __init__(self, name, eps, residual, tolerance, order_ratio=None, order_checked=False, window=(3.5, 4.5), note=""):
        self.name = name
        self.eps = eps
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.order_ratio = order_ratio
        self.order_checked = order_checked
        self.window = window
        self.note = note
        
    @property
    def label(self):
        return self.name if self.eps is None else "{0} [eps={1:g}]".format(self.name, self.eps)
        
    @property
    def passed(self):
        if not self.residual <= self.tolerance:
            return False
        if self.order_checked and self.order_ratio is not None:
            return self.window[0] <= self.order_ratio <= self.window[1]
        return True
    
    def as_dict(self):
        return {"name": self.label, "residual": self.residual, "tolerance": self.tolerance,
                "order_ratio": self.order_ratio, "pass": bool(self.passed)}


class VerificationReport(object):
    """
    Records of every check with the environment they ran in.
    The report passes if and only if every record passes.
    """
    def __init__(self, dim, eps_grid):
        self.dim = dim
        self.eps_grid = list(eps_grid)
        self.version = __version__
        self.records = []
        self.notes = []
        
    def add(self, record):
        self.records.append(record)
        
    @property
    def passed(self):
        return all([r.passed for r in self.records])
    
    def failures(self):
        return [r for r in self.records if not r.passed]
    
    def find(self, name):
        return [r for r in self.records if r.name == name]
    
    def as_dict(self):
        return {"version": self.version, "dim": self.dim, "eps_grid": self.eps_grid,
                "checks": [r.as_dict() for r in self.records], "pass": self.passed, "notes": self.notes}
    
    def showMe(self, print_level=1):
        sep = "\n"+"#"*80+"\n"
        print( sep, "Verification report (dim = {0}, eps grid = {1})".format(self.dim, self.eps_grid), sep)
        for r in self.records:
            if print_level > 1 or not r.passed:
                ratio = "" if r.order_ratio is None else "{0:8.3f}".format(r.order_ratio)
                print( "{0:<55} {1:12.4e} {2:12.4e} {3:>8}  {4}".format(r.label, r.residual, r.tolerance, ratio, "pass" if r.passed else "FAIL"))
        for note in self.notes:
            print( "Note:", note)
        print( "{0} of {1} checks passed".format(len(self.records) - len(self.failures()), len(self.records)))


def _order_pair(eps_values):
    """
    The two smallest :math:`|\\varepsilon|` of the grid, if the larger is twice the smaller.
    """
    s = sorted(set(eps_values), key=abs)
    if len(s) < 2 or s[0] == 0.:
        return None
    fine, coarse = s[0], s[1]
    if abs(coarse - 2.*fine) <= 1e-12*abs(coarse):
        return coarse, fine
    return None


def _add_series(report, name, eps_values, residual, tolerance, order_checked, parameters, note=""):
    """
    Add the records of one check over :code:`eps_values`; the record at the smallest
    :math:`|\\varepsilon|` carries the order ratio.
    """
    floor = parameters["algebra"]["floor"]
    window = tuple(parameters["algebra"]["order_window"])
    pair = _order_pair(eps_values)
    for eps in eps_values:
        ratio = None
        if pair is not None and eps == pair[1]:
            ratio = order_ratio(residual[pair[0]], residual[pair[1]], floor)
        report.add(CheckRecord(name, eps, residual[eps], tolerance[eps], ratio, order_checked, window, note))


def _algebra_checks(report, eps_grid, dim, parameters):
    algebra = parameters["algebra"]
    series = {}
    for eps in eps_grid:
        d = Deformation(eps)
        reports = verify_q_commutator(d, dim, algebra) + verify_ncs_identities(d, dim, algebra)
        for a in parameters["bch_alpha_list"]:
            alpha = complex(a[0], a[1])
            for r in verify_bch_commutators(alpha, d, dim, algebra):
                r.name = "BCH {0} alpha={1:g}".format(r.name, alpha)
                reports.append(r)
        for r in reports:
            series.setdefault(r.name, {})[eps] = r
            if r.note:
                report.notes.append("{0} at eps={1:g}: {2}".format(r.name, eps, r.note))
    for name, by_eps in series.items():
        _add_series(report, name, eps_grid,
                    dict([(e, r.residual) for e, r in by_eps.items()]),
                    dict([(e, r.tolerance) for e, r in by_eps.items()]),
                    name == "q-commutator first order", parameters)


def _standard_state_checks(report, dim, parameters):
    floor = parameters["algebra"]["floor"]
    eig, unc, poi = 0., 0., 0.
    for alpha in parameters["norm_alpha_list"]:
        eig = max(eig, annihilator_eigen_residual(alpha, dim))
        unc = max(unc, abs(uncertainty_product(coherent_state(alpha, dim)) - .5))
        poi = max(poi, np.max(np.abs(np.abs(coherent_state(alpha, dim).amp)**2 - poisson_weights(alpha, dim))))
    report.add(CheckRecord("a|alpha> = alpha|alpha>", None, eig, floor))
    report.add(CheckRecord("uncertainty product = 1/2", None, unc, floor))
    report.add(CheckRecord("Poisson number distribution", None, poi, floor))


def _state_checks(report, eps_grid, dim, parameters):
    floor = parameters["algebra"]["floor"]
    coefficients = tuple(parameters["perturbative_coefficients"])
    
    residual, tolerance = {}, {}
    for eps in eps_grid:
        r, t = 0., floor
        for alpha in parameters["norm_alpha_list"]:
            v = dcs_perturbative(DeformedStateSpec(alpha, eps, dim), coefficients=coefficients)
            r = max(r, abs(v.norm()**2 - 1.))
            a4 = abs(alpha)**4
            t = max(t, 2.*max(a4*a4, a4/16.)*eps*eps + floor)
        residual[eps], tolerance[eps] = r, t
    _add_series(report, "natural normalization", eps_grid, residual, tolerance, True, parameters)
    
    alpha = parameters["agreement_alpha"]
    residual, tolerance, unitarity = {}, {}, {}
    for eps in eps_grid:
        u = dcs_numeric(DeformedStateSpec(alpha, eps, dim, "numeric"))
        v = dcs_perturbative(DeformedStateSpec(alpha, eps, dim), coefficients=coefficients)
        residual[eps] = (u - v).norm()
        tolerance[eps] = parameters["agreement_constant"]*eps*eps + floor
        unitarity[eps] = abs(u.norm() - 1.)
    _add_series(report, "method agreement", eps_grid, residual, tolerance, True, parameters)
    _add_series(report, "displacement unitarity", eps_grid, unitarity, dict([(e, 1e-11) for e in eps_grid]), False, parameters)


def _overlap_checks(report, eps_grid, dim, parameters):
    """
    Closed form against numeric overlaps at the smallest :math:`|\\varepsilon|` of the grid and at half of it.
    """
    floor = parameters["algebra"]["floor"]
    fine = sorted(eps_grid, key=abs)[0]
    eps_values = [fine] if fine == 0. else [fine, .5*fine]
    labels = [complex(z[0], z[1]) for z in parameters["pair_list"]]
    
    for kind in [DD, DN, ND, STANDARD]:
        residual, tolerance = {}, {}
        for eps in eps_values:
            d = Deformation(eps)
            states = {}
            for z in labels:
                states[z] = (coherent_state(z, dim), dcs_perturbative(DeformedStateSpec(z, d, dim)))
            r = 0.
            for a in labels:
                for b in labels:
                    bra = states[b][1] if kind in [DD, ND] else states[b][0]
                    ket = states[a][1] if kind in [DD, DN] else states[a][0]
                    r = max(r, abs(inner_product(bra, ket) - overlap_closed_form(a, b, d, kind)))
            residual[eps] = r
            tolerance[eps] = (floor if kind == STANDARD else parameters["overlap_constant"]*abs(eps)) + floor
        _add_series(report, "overlap {0}".format(kind), eps_values, residual, tolerance, False, parameters)
        
    self_overlap = max([abs(overlap_closed_form(z, z, Deformation(e), DD) - 1.) for z in labels for e in eps_grid])
    report.add(CheckRecord("closed form dd self overlap = 1", None, self_overlap, 0.))


def _oracle_point(p):
    alpha_abs, theta, eps, dim = p
    spec = ent_psi2_spec(alpha_abs, theta, eps)
    closed = concurrence_symmetric(alpha_abs, theta, Deformation(eps)).c
    return concurrence_pair(spec).c, concurrence_fock_oracle(spec, dim).c, closed


def _concurrence_checks(report, eps_grid, dim, parameters, collective):
    points = [(a, t, e, dim) for e in eps_grid for a in parameters["oracle_alpha_list"] for t in parameters["oracle_theta_list"]]
    values = ordered_map(_oracle_point, points, collective)
    
    residual, robust, tolerance = {}, {}, {}
    for eps in eps_grid:
        residual[eps], robust[eps] = 0., 0.
        tolerance[eps] = max(1e-8, parameters["oracle_constant"]*eps*eps)
    for (a, t, e, dim), (pair, oracle, closed) in zip(points, values):
        residual[e] = max(residual[e], abs(pair - oracle))
        if math.cos(t) == -1.:
            robust[e] = max(robust[e], abs(oracle - 1.), abs(closed - 1.))
    _add_series(report, "concurrence oracle", eps_grid, residual, tolerance, False, parameters)
    _add_series(report, "antisymmetric robustness", eps_grid, robust, tolerance, False, parameters)
    
    residual = {}
    for eps in eps_grid:
        r = 0.
        for name, spec in maximally_entangled_examples(parameters["maximal_alpha"], eps):
            ok, diag = is_maximally_entangled(spec)
            r = max(r, diag["modulus_residual"], diag["phase_residual"], diag["overlap_residual"],
                    (1. - 2.*eps*eps) - diag["concurrence"])
            if not ok:
                r = max(r, 1.)
        residual[eps] = r
    _add_series(report, "maximally entangled catalogue", eps_grid, residual, dict([(e, 1e-10) for e in eps_grid]), False, parameters)


def run_verification_suite(dim=None, eps_grid=None, tol_profile=None, collective=None):
    """
    Run every matrix identity, state, overlap and concurrence check.
    Failures are recorded in the returned :code:`VerificationReport`, never raised.
    
    :code:`tol_profile` is a :code:`Verification_ParameterList`; :code:`dim` and
    :code:`eps_grid`, when given, override its entries.
    """
    parameters = Verification_ParameterList() if tol_profile is None else tol_profile.copy()
    parameters.update({"dim": dim, "eps_grid": eps_grid})
    if collective is None:
        collective = NullCollective()
    dim = int(parameters["dim"])
    if dim < 32:
        raise ValueError("run_verification_suite requires dim >= 32, got {0}".format(dim))
    eps_grid = [float(e) for e in parameters["eps_grid"]]
    if len(eps_grid) == 0:
        raise ValueError("run_verification_suite: empty eps grid")
    
    report = VerificationReport(dim, eps_grid)
    _algebra_checks(report, eps_grid, dim, parameters)
    _standard_state_checks(report, dim, parameters)
    _state_checks(report, eps_grid, dim, parameters)
    _overlap_checks(report, eps_grid, dim, parameters)
    _concurrence_checks(report, eps_grid, dim, parameters, collective)
    
    if parameters["print_level"] > 0 and collective.rank() == 0:
        report.showMe(parameters["print_level"])
    return report
