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

from .vectors import FockVector, check_dim

class FockOperator(object):
    """
    Dense complex matrix acting on the truncated number basis.
    The matrix is copied on construction and flagged read-only.
    """
    __array_ufunc__ = None
    
    def __init__(self, mat):
        mat = np.array(mat, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
            raise ValueError("FockOperator requires a non-empty square matrix, got shape {0}".format(mat.shape))
        if not np.all(np.isfinite(mat)):
            raise ValueError("FockOperator entries must be finite")
        mat.setflags(write=False)
        self._mat = mat
        
    @property
    def dim(self):
        return self._mat.shape[0]
    
    @property
    def mat(self):
        return self._mat
    
    def adjoint(self):
        return FockOperator(self._mat.conj().T)
    
    def mult(self, x):
        """
        Compute :math:`Ax` for a :code:`FockVector` :code:`x`.
        """
        if x.dim != self.dim:
            raise ValueError("Dimension mismatch: operator {0}, vector {1}".format(self.dim, x.dim))
        return FockVector(np.dot(self._mat, x.amp), truncated=x.truncated)
    
    def inner(self, x, y):
        """
        Compute the matrix element :math:`\\langle x|A|y\\rangle`.
        """
        return complex(np.vdot(x.amp, self.mult(y).amp))
    
    def diagonal(self):
        return np.diag(self._mat).copy()
    
    def _check_same(self, other):
        if other.dim != self.dim:
            raise ValueError("Dimension mismatch: {0} != {1}".format(self.dim, other.dim))
        
    def __matmul__(self, other):
        if isinstance(other, FockVector):
            return self.mult(other)
        if isinstance(other, FockOperator):
            self._check_same(other)
            return FockOperator(np.dot(self._mat, other.mat))
        return NotImplemented
    
    def __add__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check_same(other)
        return FockOperator(self._mat + other.mat)
    
    def __sub__(self, other):
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check_same(other)
        return FockOperator(self._mat - other.mat)
    
    def __mul__(self, c):
        if not isinstance(c, numbers.Number):
            return NotImplemented
        return FockOperator(c*self._mat)
    
    __rmul__ = __mul__
    
    def __neg__(self):
        return FockOperator(-self._mat)
    
    def __repr__(self):
        return "FockOperator(dim={0})".format(self.dim)


def make_annihilator(dim):
    """
    Annihilation operator :math:`a|n\\rangle = \\sqrt{n}|n-1\\rangle`.
    """
    dim = check_dim(dim)
    return FockOperator(np.diag(np.sqrt(np.arange(1, dim, dtype=np.float64)), k=1))


def make_creation(dim):
    """
    Creation operator, the entrywise adjoint of :code:`make_annihilator(dim)`.
    """
    return make_annihilator(dim).adjoint()


def make_number(dim):
    dim = check_dim(dim)
    return FockOperator(np.diag(np.arange(dim, dtype=np.float64)))


def make_identity(dim):
    dim = check_dim(dim)
    return FockOperator(np.eye(dim))


def make_quadratures(dim):
    """
    Dimensionless position and momentum :math:`Q = (a+a^\\dagger)/\\sqrt{2}`,
    :math:`P = -i(a-a^\\dagger)/\\sqrt{2}`, so that :math:`[Q,P] = i` away from the truncation edge.
    """
    a = make_annihilator(dim)
    ad = a.adjoint()
    Q = (1./np.sqrt(2.))*(a + ad)
    P = (-1j/np.sqrt(2.))*(a - ad)
    return Q, P
