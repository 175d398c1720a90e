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
import numbers
import warnings
import numpy as np

from ..algebra.deformation import Deformation
from ..entanglement.concurrence import concurrence_symmetric, is_allowed
from ..scheduling.collective import NullCollective, ordered_map
from ..utils.parameterList import ParameterList
from ..utils.warningCategories import qdcsPerturbativeRegimeWarning

ALPHA_SWEEP = "alpha_sweep"
THETA_SWEEP = "theta_sweep"
REGION_SCAN = "region_scan"

_kinds = {"alpha": ALPHA_SWEEP, "theta": THETA_SWEEP, "region": REGION_SCAN,
          ALPHA_SWEEP: ALPHA_SWEEP, THETA_SWEEP: THETA_SWEEP, REGION_SCAN: REGION_SCAN}

# (|alpha|, theta, quoted decrease in percent) over eps in [-0.4, 0.4]
QUOTED_DECREASE = [(0.9, 0., 6.3), (1.0, 0., 4.7), (1.1, 0., 3.0), (1.0, 2.*math.pi, 4.7)]

def Sweep_ParameterList():
    """
    Generate a ParameterList for the figure data sweeps.
    Type :code:`Sweep_ParameterList().showMe()` for default values and their descriptions
    """
    parameters = {}
    parameters["kind"]        = [ALPHA_SWEEP, "alpha_sweep, theta_sweep or region_scan"]
    parameters["alpha_range"] = [[0., 2.5, 51], "|alpha| grid: min, max, number of points"]
    parameters["theta_range"] = [[0., 2.*math.pi, 201], "theta grid: min, max, number of points"]
    parameters["eps_list"]    = [[-0.4, -0.2, 0., 0.2, 0.4], "deformation parameters of the alpha and theta sweeps"]
    parameters["eps_range"]   = [[-1., 1., 201], "eps grid of the region scan: min, max, number of points"]
    parameters["theta_fixed"] = [0., "phase of the alpha sweep and of the region scan"]
    parameters["alpha_fixed"] = [1., "|alpha| of the theta sweep"]
    parameters["dim"]         = [64, "truncation dimension (recorded with the table)"]
    parameters["threshold"]   = [0.1, "a grid point is allowed if its validity margin is below threshold"]
    parameters["print_level"] = [0, "print info on screen"]
    return ParameterList(parameters)


def _check_range(r, what):
    if len(r) != 3:
        raise ValueError("{0} must be (min, max, steps), got {1}".format(what, r))
    lo, hi, steps = r
    if isinstance(steps, bool) or not isinstance(steps, numbers.Integral) or steps < 2:
        raise ValueError("{0}: steps must be an integer >= 2, got {1}".format(what, steps))
    if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
        raise ValueError("{0}: the range ({1}, {2}) is not ordered".format(what, lo, hi))
    return (float(lo), float(hi), int(steps))


class SweepSpec(object):
    """
    Parameterization of one sweep. Unset fields take the values of :code:`Sweep_ParameterList()`.
    """
    def __init__(self, kind, alpha_range=None, theta_range=None, eps_list=None, eps_range=None,
                 theta_fixed=None, alpha_fixed=None, dim=None, threshold=None):
        defaults = Sweep_ParameterList()
        if kind not in _kinds:
            raise ValueError("Unknown sweep kind {0}".format(kind))
        self.kind = _kinds[kind]
        pick = lambda v, k: defaults[k] if v is None else v
        self.alpha_range = _check_range(pick(alpha_range, "alpha_range"), "alpha_range")
        self.theta_range = _check_range(pick(theta_range, "theta_range"), "theta_range")
        self.eps_range = _check_range(pick(eps_range, "eps_range"), "eps_range")
        self.eps_list = [float(e) for e in pick(eps_list, "eps_list")]
        if len(self.eps_list) == 0:
            raise ValueError("eps_list must not be empty")
        if not np.all(np.isfinite(self.eps_list)):
            raise ValueError("eps_list must be finite")
        self.theta_fixed = float(pick(theta_fixed, "theta_fixed"))
        self.alpha_fixed = float(pick(alpha_fixed, "alpha_fixed"))
        self.dim = int(pick(dim, "dim"))
        self.threshold = float(pick(threshold, "threshold"))
        if not self.threshold > 0.:
            raise ValueError("threshold must be positive, got {0}".format(self.threshold))
        
    @classmethod
    def from_parameters(cls, parameters):
        return cls(parameters["kind"], parameters["alpha_range"], parameters["theta_range"], parameters["eps_list"],
                   parameters["eps_range"], parameters["theta_fixed"], parameters["alpha_fixed"],
                   parameters["dim"], parameters["threshold"])
        
    def alpha_grid(self):
        return np.linspace(*self.alpha_range)
    
    def theta_grid(self):
        return np.linspace(*self.theta_range)
    
    def eps_grid(self):
        return np.linspace(*self.eps_range)


class SweepRow(object):
    __slots__ = ["alpha_abs", "theta", "eps", "concurrence", "margin", "allowed"]
    
    def __init__(self, alpha_abs, theta, eps, concurrence, margin, allowed):
        self.alpha_abs = float(alpha_abs)
        self.theta = float(theta)
        self.eps = float(eps)
        self.concurrence = float(concurrence)
        self.margin = float(margin)
        self.allowed = bool(allowed)
        
    def __getstate__(self):
        return [getattr(self, k) for k in self.__slots__]
    
    def __setstate__(self, state):
        for k, v in zip(self.__slots__, state):
            setattr(self, k, v)
            
    def __repr__(self):
        return "SweepRow(|alpha|={0:g}, theta={1:g}, eps={2:g}, C={3:.10g}, margin={4:.4g}, allowed={5})".format(
            self.alpha_abs, self.theta, self.eps, self.concurrence, self.margin, self.allowed)


class SweepTable(object):
    """
    Rows of a sweep, in the deterministic order of the grid.
    """
    columns = SweepRow.__slots__
    
    def __init__(self, spec, rows):
        self.spec = spec
        self.rows = rows
        
    def __len__(self):
        return len(self.rows)
    
    def __iter__(self):
        return iter(self.rows)
    
    def column(self, name):
        if name not in self.columns:
            raise ValueError("Unknown column {0}".format(name))
        return np.array([getattr(r, name) for r in self.rows])
    
    def select(self, **kwargs):
        """
        Rows whose columns match the given values, e.g. :code:`table.select(eps=0.4)`.
        """
        rows = [r for r in self.rows if all(abs(getattr(r, k) - v) <= 1e-12*max(1., abs(v)) for k, v in kwargs.items())]
        return SweepTable(self.spec, rows)


def _row(alpha_abs, theta, eps, threshold):
    value = concurrence_symmetric(alpha_abs, theta, Deformation(eps), threshold)
    return SweepRow(alpha_abs, theta, eps, value.c, value.margin, is_allowed(value.margin, threshold))


def _evaluate(spec, points, collective, parameters):
    """
    Evaluate :code:`points` (triplets :code:`|alpha|, theta, eps`) in parallel and warn once
    if some of them lie outside the perturbative region.
    """
    if collective is None:
        collective = NullCollective()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
        rows = ordered_map(lambda p: _row(p[0], p[1], p[2], spec.threshold), points, collective)
    table = SweepTable(spec, rows)
    n_out = sum([not r.allowed for r in rows])
    if n_out > 0:
        warnings.warn("{0}: {1} of {2} grid points have a validity margin above {3:g}".format(spec.kind, n_out, len(rows), spec.threshold),
                      category=qdcsPerturbativeRegimeWarning,
                      stacklevel=3)
    if parameters is not None and parameters["print_level"] > 0 and collective.rank() == 0:
        print( "{0}: {1} rows, {2} outside the perturbative region".format(spec.kind, len(rows), n_out))
    return table


def _check_kind(spec, kind):
    if spec.kind != kind:
        raise ValueError("Invalid sweep spec: kind {0} given to the {1} runner".format(spec.kind, kind))


def run_alpha_sweep(spec, collective=None, parameters=None):
    """
    Concurrence of the symmetric state at :code:`theta_fixed` over the :math:`|\\alpha|` grid,
    :math:`|\\alpha|` outer, :math:`\\varepsilon` inner.
    """
    _check_kind(spec, ALPHA_SWEEP)
    points = [(a, spec.theta_fixed, e) for a in spec.alpha_grid() for e in spec.eps_list]
    return _evaluate(spec, points, collective, parameters)


def run_theta_sweep(spec, collective=None, parameters=None):
    """
    Concurrence at :code:`alpha_fixed` over the phase grid, :math:`\\theta` outer, :math:`\\varepsilon` inner.
    """
    _check_kind(spec, THETA_SWEEP)
    points = [(spec.alpha_fixed, t, e) for t in spec.theta_grid() for e in spec.eps_list]
    return _evaluate(spec, points, collective, parameters)


def run_region_scan(spec, collective=None, parameters=None):
    """
    Validity margin and allowed flag over the :math:`(|\\alpha|, \\varepsilon)` grid,
    :math:`|\\alpha|` outer, :math:`\\varepsilon` inner.
    """
    _check_kind(spec, REGION_SCAN)
    points = [(a, spec.theta_fixed, e) for a in spec.alpha_grid() for e in spec.eps_grid()]
    return _evaluate(spec, points, collective, parameters)


def run_sweep(spec, collective=None, parameters=None):
    runners = {ALPHA_SWEEP: run_alpha_sweep, THETA_SWEEP: run_theta_sweep, REGION_SCAN: run_region_scan}
    return runners[spec.kind](spec, collective, parameters)


def region_boundary(alpha_abs, threshold):
    """
    :math:`|\\varepsilon|` at which the validity margin reaches :code:`threshold`, :math:`\\frac{3}{4}\\,threshold/|\\alpha|^4`.
    """
    a4 = float(alpha_abs)**4
    return np.inf if a4 == 0. else .75*threshold/a4


def percent_decrease(alpha_abs, theta, eps_lo, eps_hi):
    """
    Relative decrease in percent of the closed form concurrence when the deformation grows from
    :code:`eps_lo` to :code:`eps_hi`.
    """
    if not eps_lo < eps_hi:
        raise ValueError("percent_decrease requires eps_lo < eps_hi, got {0} and {1}".format(eps_lo, eps_hi))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=qdcsPerturbativeRegimeWarning)
        c_lo = concurrence_symmetric(alpha_abs, theta, Deformation(eps_lo)).c
        c_hi = concurrence_symmetric(alpha_abs, theta, Deformation(eps_hi)).c
    if c_lo == 0.:
        raise ValueError("percent_decrease: vanishing concurrence at eps = {0}".format(eps_lo))
    return 100.*(c_lo - c_hi)/c_lo


def percent_decrease_report(cases=None, eps_lo=-0.4, eps_hi=0.4, tolerance=0.05, print_level=0):
    """
    Computed vs quoted percent decrease for each :code:`(|alpha|, theta, quoted)` case.
    A case is flagged when the two differ by more than :code:`tolerance` percentage points.
    """
    if cases is None:
        cases = QUOTED_DECREASE
    report = []
    for alpha_abs, theta, quoted in cases:
        computed = percent_decrease(alpha_abs, theta, eps_lo, eps_hi)
        report.append({"alpha_abs": alpha_abs, "theta": theta, "eps_lo": eps_lo, "eps_hi": eps_hi,
                       "computed": computed, "quoted": quoted, "discrepancy": computed - quoted,
                       "flagged": abs(computed - quoted) > tolerance})
    if print_level > 0:
        print( "{0:>8} {1:>8} {2:>10} {3:>8} {4:>10}".format("|alpha|", "theta", "computed", "quoted", "flag"))
        for r in report:
            print( "{0:8.3f} {1:8.4f} {2:10.2f} {3:8.1f} {4:>10}".format(r["alpha_abs"], r["theta"], r["computed"], r["quoted"],
                                                                          "MISMATCH" if r["flagged"] else ""))
    return report
