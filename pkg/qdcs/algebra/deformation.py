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

from ..utils.parameterList import ParameterList
from ..utils.flags import flag_regime

def Deformation_ParameterList():
    """
    Generate a ParameterList for the weak deformation :math:`q = 1 + \\varepsilon`.
    Type :code:`Deformation_ParameterList().showMe()` for default values and their descriptions
    """
    parameters = {}
    parameters["weak_limit"] = [0.5, "|eps| above this value is flagged as outside the perturbative regime"]
    parameters["hard_limit"] = [1.0, "|eps| must stay below this value for the weak deformation mode"]
    return ParameterList(parameters)


class Deformation(object):
    """
    Weak deformation of the Weyl-Heisenberg algebra,
    :math:`bb^\\dagger - q b^\\dagger b = 1` with :math:`q = 1 + \\varepsilon`.
    
    Any finite :code:`eps` is accepted. The attributes :code:`regime_flag`
    (:math:`|\\varepsilon|` above :code:`weak_limit`) and :code:`weak`
    (:math:`|\\varepsilon|` below :code:`hard_limit`) record how far the
    first order representation can be trusted.
    """
    def __init__(self, eps, parameters=None):
        if parameters is None:
            parameters = Deformation_ParameterList()
        if isinstance(eps, bool) or not isinstance(eps, numbers.Real):
            raise TypeError("The deformation parameter must be real, got {0}".format(type(eps)))
        eps = float(eps)
        if not np.isfinite(eps):
            raise ValueError("The deformation parameter must be finite, got {0}".format(eps))
        self._eps = eps
        self.weak = abs(eps) < parameters["hard_limit"]
        self.regime_flag = flag_regime(eps, parameters["weak_limit"], "eps", "Deformation")
        
    @property
    def eps(self):
        return self._eps
    
    @property
    def q(self):
        return 1. + self._eps
    
    def __eq__(self, other):
        return isinstance(other, Deformation) and other.eps == self._eps
    
    def __hash__(self):
        return hash(self._eps)
    
    def __repr__(self):
        return "Deformation(eps={0:g})".format(self._eps)


def as_deformation(d):
    """
    Accept either a :code:`Deformation` or a bare real :math:`\\varepsilon`.
    """
    if isinstance(d, Deformation):
        return d
    return Deformation(d)
