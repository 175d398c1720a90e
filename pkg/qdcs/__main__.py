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

import sys

from .sweeps.cli import main

sys.exit(main())
