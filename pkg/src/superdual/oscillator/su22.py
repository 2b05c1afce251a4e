"""su(2,2) sector helpers: helicity and masslessness."""

from __future__ import annotations

from fractions import Fraction

from .algebra import OscillatorSpec, basis_states, generator_action
from .states import combine, scale


def helicity(spec: OscillatorSpec, v) -> Fraction:
    """Eigenvalue of Z = (N_a - N_b)/2 on a weight vector."""
    lc = v if isinstance(v, dict) else {v: Fraction(1)}
    vals = set()
    for s in lc:
        na = sum(map(sum, s.a)) + (spec.q * (spec.gamma_R - s.sR) if spec.a_deformed else 0)
        nb = sum(map(sum, s.b)) + (spec.p * (spec.gamma_L - s.sL) if spec.b_deformed else 0)
        vals.add(Fraction(na - nb, 2) if isinstance(na - nb, int) else (na - nb) / 2)
    if len(vals) != 1:
        raise ValueError("not a helicity eigenvector")
    return vals.pop()


def is_massless(spec: OscillatorSpec, cutoff: int = 3) -> bool:
    """P = 1 masslessness: det over the 2x2 block of E_{alpha beta-dot}
    vanishes identically on the truncated module.

    The E_{alpha beta-dot} = -a+ b+ generators commute, so the determinant is
    E_{a1 b1}E_{a2 b2} - E_{a1 b2}E_{a2 b1} as an operator.
    """
    if spec.p != 2 or spec.q != 2:
        raise ValueError("masslessness check is for the su(2,2) sector")
    a0 = spec.p + spec.m  # first a index
    b0 = 0

    def det_op(lc):
        t1 = generator_action(spec, a0, b0, generator_action(spec, a0 + 1, b0 + 1, lc))
        t2 = generator_action(spec, a0, b0 + 1, generator_action(spec, a0 + 1, b0, lc))
        return combine(t1, scale(t2, Fraction(-1)))

    for st in basis_states(spec, cutoff):
        if det_op({st: Fraction(1)}):
            return False
    return True
