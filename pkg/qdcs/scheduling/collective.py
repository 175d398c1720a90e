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


class NullCollective:
    """
    No-overhead "parallel" utilities when the whole grid is evaluated by 1 process.
    """
    def __init__(self):
        pass
    
    def size(self):
        return 1
    
    def rank(self):
        return 0
    
    def allGather(self, obj):
        return [obj]
    

class MPICollective:
    """
    Gather utilities when the grid points are shared among the processes of an MPI communicator.
    """
    def __init__(self, comm):
        """
        :code:`comm` is :code:`mpi4py.MPI` comm
        """
        self.comm = comm
    
    def size(self):
        return self.comm.Get_size()
    
    def rank(self):
        return self.comm.Get_rank()
    
    def allGather(self, obj):
        """
        List of the (picklable) :code:`obj` of every process, ordered by rank.
        """
        return self.comm.allgather(obj)
    

def default_collective():
    """
    :code:`MPICollective` on :code:`MPI.COMM_WORLD` when running under :code:`mpirun` with more
    than one process, :code:`NullCollective` otherwise (or when mpi4py is not installed).
    """
    try:
        from mpi4py import MPI
    except ImportError:
        return NullCollective()
    if MPI.COMM_WORLD.Get_size() > 1:
        return MPICollective(MPI.COMM_WORLD)
    return NullCollective()


def ordered_map(fun, items, collective=None):
    """
    Evaluate :code:`fun` on every entry of :code:`items`.
    Process :code:`r` evaluates the entries :code:`r, r + size, ...`; the results are gathered
    and returned in the order of :code:`items` on every process.
    """
    if collective is None:
        collective = NullCollective()
    items = list(items)
    size = collective.size()
    rank = collective.rank()
    local = [fun(x) for x in items[rank::size]]
    gathered = collective.allGather(local)
    out = [None]*len(items)
    for r, chunk in enumerate(gathered):
        out[r::size] = chunk
    return out
