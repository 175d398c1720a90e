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

"""
Soft flags raised while building states and evaluating concurrences.

Every flag is also stored on the returned object, so the warnings only
inform the user; nothing downstream depends on the warning filters.
The filter action of each category is read from the environment variable
with the same name as the category (default :code:`"once"`).
"""

from functools import wraps
import warnings
import os

from .warningCategories import qdcsTruncationWarning, qdcsPerturbativeRegimeWarning, qdcsExperimentalWarning

for _category in [qdcsTruncationWarning, qdcsPerturbativeRegimeWarning, qdcsExperimentalWarning]:
    warnings.filterwarnings(os.environ.get(_category.__name__, "once"), category=_category)


def flag_truncation(tail, tolerance, where):
    """
    Warn when the tail mass :code:`tail` of a state exceeds :code:`tolerance`.
    Returns :code:`True` if the state is flagged.
    """
    if tail > tolerance:
        warnings.warn("{0}: tail mass {1:.3e} exceeds {2:.1e}, increase the truncation dimension".format(where, tail, tolerance),
                      category=qdcsTruncationWarning,
                      stacklevel=3)
        return True
    return False


def flag_regime(value, limit, what, where):
    """
    Warn when :code:`|value|` is not below :code:`limit`, i.e. when a first order
    expansion in the deformation parameter can no longer be trusted.
    Returns :code:`True` if the input is flagged.
    """
    if abs(value) > limit:
        warnings.warn("{0}: {1} = {2:g} is outside the perturbative regime (limit {3:g})".format(where, what, value, limit),
                      category=qdcsPerturbativeRegimeWarning,
                      stacklevel=3)
        return True
    return False


def experimental(version, msg="", name=None):
    """
    Mark a closed form as experimental: every call emits a
    :code:`qdcsExperimentalWarning` naming :code:`name` (the function name by default),
    the release :code:`version` that introduced it and :code:`msg`.
    """
    def decorate(f):
        label = f.__name__ if name is None else name
        text = "{0} is experimental since v{1}. {2}".format(label, version, msg).rstrip()
        
        @wraps(f)
        def flagged(*args, **kwargs):
            warnings.warn(text, category=qdcsExperimentalWarning, stacklevel=2)
            return f(*args, **kwargs)
        return flagged
    return decorate
