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

"""
State vectors in the truncated number basis :math:`|0\\rangle, \\ldots, |N-1\\rangle`.

Vectors are immutable: the amplitude array is copied on construction and
flagged read-only, so vectors can be shared between threads and processes.
"""

def check_dim(dim):
    """
    Validate a truncation dimension and return it as :code:`int`.
    """
    if isinstance(dim, bool) or not isinstance(dim, numbers.Integral):
        raise TypeError("The truncation dimension must be an integer, got {0}".format(type(dim)))
    if dim < 1:
        raise ValueError("Invalid truncation dimension {0}: must be >= 1".format(dim))
    return int(dim)


def _frozen(amp):
    amp = np.array(amp, dtype=np.complex128)
    if not np.all(np.isfinite(amp)):
        raise ValueError("Amplitudes must be finite")
    amp.setflags(write=False)
    return amp


class FockVector(object):
    """
    Complex amplitudes :math:`\\langle n|v\\rangle`, :math:`0 \\leq n < N`.
    
    State-producing operations record the truncation gauge :code:`tail`
    (see :code:`tail_mass`) and set :code:`truncated = True` when it exceeds
    the tolerance.
    """
    __array_ufunc__ = None
    
    def __init__(self, amp, tail=None, truncated=False):
        amp = _frozen(amp)
        if amp.ndim != 1 or amp.shape[0] < 1:
            raise ValueError("FockVector amplitudes must be a non-empty 1D array")
        self._amp = amp
        self.tail = tail
        self.truncated = truncated
        
    @property
    def dim(self):
        return self._amp.shape[0]
    
    @property
    def amp(self):
        return self._amp
    
    def norm(self):
        return np.linalg.norm(self._amp)
    
    def normalized(self):
        nrm = self.norm()
        if nrm == 0.:
            raise ValueError("Cannot normalize the null vector")
        return FockVector(self._amp/nrm, self.tail, self.truncated)
    
    def _check_same(self, other):
        if not isinstance(other, FockVector):
            raise TypeError("Expected a FockVector, got {0}".format(type(other)))
        if other.dim != self.dim:
            raise ValueError("Dimension mismatch: {0} != {1}".format(self.dim, other.dim))
    
    def __add__(self, other):
        self._check_same(other)
        return FockVector(self._amp + other.amp, truncated=self.truncated or other.truncated)
    
    def __sub__(self, other):
        self._check_same(other)
        return FockVector(self._amp - other.amp, truncated=self.truncated or other.truncated)
    
    def __mul__(self, c):
        if not isinstance(c, numbers.Number):
            return NotImplemented
        return FockVector(c*self._amp, truncated=self.truncated)
    
    __rmul__ = __mul__
    
    def __neg__(self):
        return FockVector(-self._amp, truncated=self.truncated)
    
    def __repr__(self):
        return "FockVector(dim={0}, norm={1:.6g}, truncated={2})".format(self.dim, self.norm(), self.truncated)


class TwoModeVector(object):
    """
    Amplitudes of a state of two modes with the same truncation :math:`N`.
    The amplitude of :math:`|n_1\\rangle \\otimes |n_2\\rangle` is stored at :code:`n1*dim + n2`.
    """
    __array_ufunc__ = None
    
    def __init__(self, amp, dim, truncated=False):
        dim = check_dim(dim)
        amp = _frozen(amp)
        if amp.shape != (dim*dim,):
            raise ValueError("TwoModeVector amplitudes must have length dim**2 = {0}".format(dim*dim))
        self._amp = amp
        self._dim = dim
        self.truncated = truncated
        
    @property
    def dim(self):
        return self._dim
    
    @property
    def amp(self):
        return self._amp
    
    def as_matrix(self):
        """
        Amplitudes as a :code:`dim x dim` matrix, row index :math:`n_1`.
        """
        return self._amp.reshape((self._dim, self._dim))
    
    def norm(self):
        return np.linalg.norm(self._amp)
    
    def normalized(self):
        nrm = self.norm()
        if nrm == 0.:
            raise ValueError("Cannot normalize the null state")
        return TwoModeVector(self._amp/nrm, self._dim, self.truncated)
    
    def _check_same(self, other):
        if not isinstance(other, TwoModeVector):
            raise TypeError("Expected a TwoModeVector, got {0}".format(type(other)))
        if other.dim != self.dim:
            raise ValueError("Dimension mismatch: {0} != {1}".format(self.dim, other.dim))
    
    def __add__(self, other):
        self._check_same(other)
        return TwoModeVector(self._amp + other.amp, self._dim, self.truncated or other.truncated)
    
    def __sub__(self, other):
        self._check_same(other)
        return TwoModeVector(self._amp - other.amp, self._dim, self.truncated or other.truncated)
    
    def __mul__(self, c):
        if not isinstance(c, numbers.Number):
            return NotImplemented
        return TwoModeVector(c*self._amp, self._dim, self.truncated)
    
    __rmul__ = __mul__


def basis_state(n, dim):
    """
    The number state :math:`|n\\rangle` in a space of dimension :code:`dim`.
    """
    dim = check_dim(dim)
    if n < 0 or n >= dim:
        raise ValueError("Number state {0} out of range for dim = {1}".format(n, dim))
    amp = np.zeros(dim, dtype=np.complex128)
    amp[n] = 1.
    return FockVector(amp)


def vacuum(dim):
    return basis_state(0, dim)
