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

import io
import json
import numpy as np

from ..entanglement.concurrence import BipartitePairSpec

CSV_HEADER = "alpha_abs,theta,eps,concurrence,margin,allowed"

def format_float(x):
    """
    17 significant digits in scientific notation, so that the text determines the double exactly.
    """
    return "{0:.16e}".format(float(x))


def format_bool(b):
    return "true" if b else "false"


def sweep_csv(table):
    """
    The sweep table as CSV text with '\\n' line endings.
    """
    out = io.StringIO(newline="")
    out.write(CSV_HEADER + "\n")
    for r in table.rows:
        out.write(",".join([format_float(r.alpha_abs), format_float(r.theta), format_float(r.eps),
                            format_float(r.concurrence), format_float(r.margin), format_bool(r.allowed)]) + "\n")
    return out.getvalue()


def write_sweep_csv(table, filename):
    with open(filename, "w", newline="") as f:
        f.write(sweep_csv(table))


def read_sweep_csv(filename):
    """
    Columns of a sweep CSV file as a dictionary of numpy arrays.
    """
    with open(filename, "r", newline="") as f:
        lines = f.read().split("\n")
    if lines[0] != CSV_HEADER:
        raise ValueError("{0} is not a sweep table: unexpected header {1}".format(filename, lines[0]))
    names = CSV_HEADER.split(",")
    rows = [l.split(",") for l in lines[1:] if l]
    out = {}
    for j, name in enumerate(names):
        if name == "allowed":
            out[name] = np.array([r[j] == "true" for r in rows])
        else:
            out[name] = np.array([float(r[j]) for r in rows])
    return out


def state_record(spec, v):
    """
    JSON record of a state vector built from a :code:`DeformedStateSpec`.
    """
    return {"alpha_re": spec.alpha.real, "alpha_im": spec.alpha.imag, "eps": spec.eps, "dim": spec.dim,
            "method": spec.method, "norm": float(v.norm()), "tail": v.tail, "truncated": v.truncated,
            "amp": [[z.real, z.imag] for z in v.amp.tolist()]}


def write_json(obj, filename):
    with open(filename, "w", newline="") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")
        

def write_report(report, filename):
    write_json(report.as_dict(), filename)


def read_pair_spec(filename):
    """
    Read a :code:`BipartitePairSpec` from a JSON object with entries
    :code:`mu, nu, alpha, beta, gamma, delta` (numbers or :code:`[re, im]`) and :code:`eps`.
    """
    with open(filename, "r") as f:
        data = json.load(f)
    return BipartitePairSpec.from_dict(data)


def load_config(filename):
    """
    Configuration file: a JSON object whose keys are the command line flags with dashes replaced by underscores.
    """
    with open(filename, "r") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError("The configuration file {0} must contain a JSON object".format(filename))
    return dict([(k.replace("-", "_"), v) for k, v in data.items()])
