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

import argparse
import json
import math
import sys

from ..coherent.dcs import PERTURBATIVE, NUMERIC, DeformedStateSpec, dcs_numeric, dcs_perturbative
from ..coherent.overlaps import as_overlap_kind, overlap_closed_form, overlap_numeric
from ..entanglement.concurrence import concurrence_pair, concurrence_symmetric, ent_psi2_spec
from ..entanglement.oracle import concurrence_fock_oracle
from ..entanglement.maximal import is_maximally_entangled
from ..scheduling.collective import default_collective
from .sweep import Sweep_ParameterList, SweepSpec, run_sweep, percent_decrease_report
from .verification import Verification_ParameterList, run_verification_suite
from .io import sweep_csv, write_sweep_csv, state_record, write_json, write_report, read_pair_spec, load_config

"""
Command line interface::

    qdcs [--threshold T] [--config FILE] [--print-level N] [--seedless] COMMAND ...

with the commands :code:`state`, :code:`overlap`, :code:`concurrence`, :code:`sweep`,
:code:`verify` and :code:`percent`. Every flag can also be given in the configuration file;
flags on the command line take precedence.
"""

def _parser():
    parser = argparse.ArgumentParser(prog="qdcs", description="q-deformed coherent states: states, overlaps, concurrence, figure data")
    parser.add_argument("--threshold", type=float, default=None, help="validity margin threshold of the allowed region (default 0.1)")
    parser.add_argument("--config", default=None, help="JSON configuration file mirroring the command line flags")
    parser.add_argument("--print-level", type=int, default=None, help="verbosity (0 silent)")
    parser.add_argument("--seedless", action="store_true", help="accepted for compatibility; every computation is deterministic")
    sub = parser.add_subparsers(dest="command")
    
    p = sub.add_parser("state", help="build a deformed coherent state")
    p.add_argument("--alpha-re", type=float, default=None)
    p.add_argument("--alpha-im", type=float, default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--method", choices=[PERTURBATIVE, NUMERIC, "both"], default=None)
    p.add_argument("--out", default=None, help="JSON output file (stdout if absent)")
    
    p = sub.add_parser("overlap", help="closed form and numeric overlap <b|a>")
    p.add_argument("--a", type=float, nargs=2, metavar=("RE", "IM"), default=None)
    p.add_argument("--b", type=float, nargs=2, metavar=("RE", "IM"), default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--kind", choices=["dd", "dn", "nd", "std"], default=None)
    p.add_argument("--dim", type=int, default=None)
    
    p = sub.add_parser("concurrence", help="concurrence of a two-mode deformed state")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--spec", default=None, help="JSON file describing mu|alpha>|beta> + nu|gamma>|delta>")
    g.add_argument("--psi2", action="store_true", help="use |alpha>|-alpha> + e^(i theta)|-alpha>|alpha>")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="also evaluate the truncated Fock space oracle")
    
    p = sub.add_parser("sweep", help="figure data as CSV")
    p.add_argument("sweep_kind", choices=["alpha", "theta", "region"])
    p.add_argument("--alpha-range", type=float, nargs=3, metavar=("MIN", "MAX", "STEPS"), default=None)
    p.add_argument("--theta-range", type=float, nargs=3, metavar=("MIN", "MAX", "STEPS"), default=None)
    p.add_argument("--eps-range", type=float, nargs=3, metavar=("MIN", "MAX", "STEPS"), default=None)
    p.add_argument("--eps-list", type=float, nargs="+", default=None)
    p.add_argument("--theta-fixed", type=float, default=None)
    p.add_argument("--alpha-fixed", type=float, default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--out", default=None, help="CSV output file (stdout if absent)")
    
    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--eps-grid", type=float, nargs="+", default=None)
    p.add_argument("--report", default=None, help="JSON report file")
    
    sub.add_parser("percent", help="computed vs quoted percent decrease of the concurrence")
    return parser


def _apply_config(args, config):
    """
    Fill the flags that were not given on the command line from the configuration file.
    """
    for k, v in config.items():
        if hasattr(args, k) and getattr(args, k) is None:
            setattr(args, k, v)
    return args


def _value(v, default):
    return default if v is None else v


def _range(r):
    return None if r is None else [float(r[0]), float(r[1]), int(r[2])]


def cmd_state(args):
    alpha = complex(_value(args.alpha_re, 0.), _value(args.alpha_im, 0.))
    eps = _value(args.eps, 0.)
    dim = _value(args.dim, 64)
    method = _value(args.method, PERTURBATIVE)
    records = []
    vectors = []
    for m in ([PERTURBATIVE, NUMERIC] if method == "both" else [method]):
        spec = DeformedStateSpec(alpha, eps, dim, m)
        v = dcs_numeric(spec) if m == NUMERIC else dcs_perturbative(spec)
        records.append(state_record(spec, v))
        vectors.append(v)
    out = records[0] if len(records) == 1 else {"states": records, "difference": float((vectors[0] - vectors[1]).norm())}
    if args.out is None:
        print( json.dumps(out, indent=2, sort_keys=True))
    else:
        write_json(out, args.out)
    return 0


def cmd_overlap(args):
    a = complex(*_value(args.a, [0., 0.]))
    b = complex(*_value(args.b, [0., 0.]))
    eps = _value(args.eps, 0.)
    kind = as_overlap_kind(_value(args.kind, "dd"))
    closed = overlap_closed_form(a, b, eps, kind)
    value = overlap_numeric(a, b, eps, kind, _value(args.dim, 64))
    numeric = value.value
    print( "closed form: {0:.16e} {1:+.16e}i".format(closed.real, closed.imag))
    print( "numeric:     {0:.16e} {1:+.16e}i".format(numeric.real, numeric.imag))
    print( "difference:  {0:.3e}".format(abs(closed - numeric)))
    print( "truncated:   {0}".format("yes" if value.truncated else "no"))
    return 0


def cmd_concurrence(args):
    threshold = _value(args.threshold, 0.1)
    if args.spec is not None:
        spec = read_pair_spec(args.spec)
    else:
        spec = ent_psi2_spec(_value(args.alpha, 1.), _value(args.theta, 0.), _value(args.eps, 0.))
    value = concurrence_pair(spec, threshold)
    print( "concurrence: {0:.16e}".format(value.c))
    print( "margin:      {0:.16e} ({1})".format(value.margin, "allowed" if value.valid else "outside the perturbative region"))
    if value.note:
        print( "note:        {0}".format(value.note))
    if args.spec is None:
        closed = concurrence_symmetric(abs(_value(args.alpha, 1.)), _value(args.theta, 0.), _value(args.eps, 0.), threshold)
        print( "closed form: {0:.16e}".format(closed.c))
    ok, diagnostics = is_maximally_entangled(spec)
    print( "maximally entangled: {0}".format("yes" if ok else "no"))
    if args.oracle:
        oracle = concurrence_fock_oracle(spec, _value(args.dim, 64), threshold=threshold)
        print( "oracle:      {0:.16e}{1}".format(oracle.c, " (truncated)" if oracle.truncated else ""))
    return 0


def cmd_sweep(args):
    parameters = Sweep_ParameterList()
    parameters.update({"kind": args.sweep_kind + ("_sweep" if args.sweep_kind != "region" else "_scan"),
                       "alpha_range": _range(args.alpha_range), "theta_range": _range(args.theta_range),
                       "eps_range": _range(args.eps_range), "eps_list": args.eps_list,
                       "theta_fixed": args.theta_fixed, "alpha_fixed": args.alpha_fixed,
                       "dim": args.dim, "threshold": args.threshold, "print_level": args.print_level})
    collective = default_collective()
    table = run_sweep(SweepSpec.from_parameters(parameters), collective, parameters)
    if collective.rank() == 0:
        if args.out is None:
            sys.stdout.write(sweep_csv(table))
        else:
            write_sweep_csv(table, args.out)
    return 0


def cmd_verify(args):
    parameters = Verification_ParameterList()
    parameters.update({"print_level": _value(args.print_level, 1)})
    collective = default_collective()
    report = run_verification_suite(args.dim, args.eps_grid, parameters, collective)
    if args.report is not None and collective.rank() == 0:
        write_report(report, args.report)
    return 0 if report.passed else 1


def cmd_percent(args):
    percent_decrease_report(print_level=1)
    return 0


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    if args.config is not None:
        _apply_config(args, load_config(args.config))
    commands = {"state": cmd_state, "overlap": cmd_overlap, "concurrence": cmd_concurrence,
                "sweep": cmd_sweep, "verify": cmd_verify, "percent": cmd_percent}
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return commands[args.command](args)
    except (ValueError, TypeError) as e:
        print( "qdcs {0}: error: {1}".format(args.command, e), file=sys.stderr)
        return 2
