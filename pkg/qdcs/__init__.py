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
qdcslib implements the weakly q-deformed Weyl-Heisenberg algebra
:math:`bb^\\dagger - (1+\\varepsilon)b^\\dagger b = 1`, the deformed coherent
states it generates, and the entanglement of bipartite superpositions of
such states.

Deformed coherent states are built both from their first order closed form
and by exact exponentiation of the deformed displacement operator in a
truncated number basis; the latter serves as an oracle for the former.
Every closed form result (overlaps, concurrences) has a numerical
counterpart, and :code:`run_verification_suite` checks them against each
other together with the commutation relations of the algebra.

Conceptually, qdcslib can be viewed as a toolbox that provides the building
blocks (operators, states, overlaps, concurrences) and the drivers that
produce the figure data of the numerical study (sweeps, command line).
"""

# version
from .version import version_info, __version__

# utils
from .utils import *

# truncated Fock space
from .fock import *

# deformed algebra
from .algebra import *

# deformed coherent states
from .coherent import *

# entanglement
from .entanglement import *

# scheduling
from .scheduling import *

# sweeps, verification and command line
from .sweeps import *
