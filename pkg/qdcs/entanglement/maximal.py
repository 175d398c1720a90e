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

from ..fock.states import check_complex
from .concurrence import BipartitePairSpec, OrthoBasisData, concurrence_general, concurrence_norm_consistent

def is_maximally_entangled(spec, tol=1e-10):
    """
    Test the maximal entanglement conditions of a :code:`BipartitePairSpec`:
    
    - :math:`\\mu = \\nu e^{i\\theta}`, i.e. :math:`|\\mu| = |\\nu|`;
    - :math:`|p_1| = |p_2|` and :math:`e^{i\\theta}\\bar{p}_1 p_2 = -|p_1||p_2|`, the exponentiated
      form of the condition on the overlap exponents (it only holds modulo :math:`2\\pi i`).
    
    Returns the boolean and a dictionary of diagnostics with the residual of each condition
    and the concurrence in both the printed and the norm consistent form.
    """
    ortho = OrthoBasisData.from_spec(spec)
    p1, p2 = ortho.p1, ortho.p2
    diagnostics = {"p1": p1, "p2": p2, "n1": ortho.n1, "n2": ortho.n2}
    
    diagnostics["modulus_residual"] = abs(abs(spec.mu) - abs(spec.nu))
    if spec.nu == 0.:
        diagnostics["phase_residual"] = float("nan")
        diagnostics["overlap_residual"] = float("nan")
        diagnostics["concurrence"] = 0.
        diagnostics["note"] = "product state"
        return False, diagnostics
    
    phase = spec.mu/spec.nu
    phase = phase/abs(phase)
    diagnostics["phase_residual"] = abs(phase*p1.conjugate()*p2 + abs(p1)*abs(p2))
    diagnostics["overlap_residual"] = abs(abs(p1) - abs(p2))
    
    try:
        diagnostics["concurrence"] = concurrence_general(spec.mu, spec.nu, p1, p2).c
        diagnostics["concurrence_norm_consistent"] = concurrence_norm_consistent(spec.mu, spec.nu, p1, p2).c
    except ValueError as e:
        diagnostics["concurrence"] = 0.
        diagnostics["note"] = str(e)
        return False, diagnostics
    
    ok = diagnostics["modulus_residual"] <= tol and diagnostics["phase_residual"] <= tol and diagnostics["overlap_residual"] <= tol
    return ok, diagnostics


def maximally_entangled_examples(alpha, eps, z=0.3, zprime=0.7):
    """
    Catalogue of maximally entangled deformed states, as a list of :code:`(name, spec)`:
    
    - :math:`|\\alpha\\rangle\\otimes|-\\alpha\\rangle - |-\\alpha\\rangle\\otimes|-3\\alpha\\rangle`
    - :math:`|\\alpha\\rangle\\otimes|-\\alpha\\rangle - |-i\\alpha\\rangle\\otimes|i\\alpha\\rangle`
    - :math:`|\\varepsilon\\alpha\\rangle\\otimes|-\\alpha\\rangle - |-\\alpha\\rangle\\otimes|\\varepsilon\\alpha\\rangle`
    - :math:`|\\alpha\\rangle\\otimes|-\\alpha+z\\varepsilon\\rangle - |-\\alpha+(z'-z)\\varepsilon\\rangle\\otimes|-3\\alpha+z'\\varepsilon\\rangle`
    
    The first and last families need real :code:`alpha`, :code:`z`, :code:`zprime`; the real part of :code:`alpha` is used there.
    """
    alpha = check_complex(alpha)
    a = alpha.real
    return [("shifted", BipartitePairSpec(1., -1., a, -a, -a, -3.*a, eps)),
            ("rotated", BipartitePairSpec(1., -1., alpha, -alpha, -1j*alpha, 1j*alpha, eps)),
            ("contracted", BipartitePairSpec(1., -1., eps*alpha, -alpha, -alpha, eps*alpha, eps)),
            ("two-parameter", BipartitePairSpec(1., -1., a, -a + z*eps, -a + (zprime - z)*eps, -3.*a + zprime*eps, eps))]
