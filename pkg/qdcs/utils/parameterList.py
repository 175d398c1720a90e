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

import copy

class ParameterList(object):
    """
    A small class for storing parameters and their description.
    This class will raise an exception if the key one tries to access is not present.
    """
    def __init__(self, data):
        """
        data is a dictionary where each value is the pair [value, description]
        """
        self.data = data
        
    def __getitem__(self,key):
        if self.data.__contains__(key):
            return self.data[key][0]
        else:
            raise ValueError(key)
        
    def __setitem__(self,key, value):
        if self.data.__contains__(key):
            self.data[key][0] = value
        else:
            raise ValueError(key)
        
    def __contains__(self, key):
        return self.data.__contains__(key)
    
    def keys(self):
        return sorted(self.data.keys())
    
    def copy(self):
        """
        Deep copy, so that the defaults returned by a factory are never shared.
        """
        return ParameterList(copy.deepcopy(self.data))
    
    def update(self, values, strict=True):
        """
        Overwrite the entries listed in the dictionary :code:`values`.
        Nested dictionaries update the corresponding sublists.
        Entries whose value is :code:`None` are skipped (unset command line flags).
        With :code:`strict=False` unknown keys are ignored instead of raising :code:`ValueError`.
        """
        for k, v in values.items():
            if v is None:
                continue
            if not self.data.__contains__(k):
                if strict:
                    raise ValueError(k)
                continue
            if isinstance(self.data[k][0], ParameterList) and isinstance(v, dict):
                self.data[k][0].update(v, strict)
            else:
                self.data[k][0] = v
        return self
                
    def as_dict(self):
        """
        Plain dictionary of the values (no descriptions), sublists included.
        """
        out = {}
        for k in sorted(self.data.keys()):
            v = self.data[k][0]
            out[k] = v.as_dict() if isinstance(v, ParameterList) else v
        return out
        
    def showMe(self, indent=""):
        for k in sorted(self.data.keys()):
            print( indent, "---")
            if type(self.data[k][0]) == ParameterList:
                print( indent, k, "(ParameterList):", self.data[k][1] )
                self.data[k][0].showMe(indent+"    ")
            else:
                print( indent, k, "({0}):".format(self.data[k][0]),  self.data[k][1] )
        
        print( indent, "---")
