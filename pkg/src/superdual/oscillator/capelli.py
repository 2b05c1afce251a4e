"""Capelli identity and norm ladder on a single deformed block.

On F_gamma with P colours the column-ordered determinant identity

    Delta+ Delta = det(E_ij + (P - i) delta_ij),   det M = eps_{i...} M_{i1 1} ... M_{iP P}

holds exactly; evaluating it on the mu-sector of the t^n subspace gives the
norm recursion |v_{mu,n+1}|^2 = prod_i (mu_i + P - i + gamma + n + 1) |v_{mu,n}|^2.
"""

from __future__ import annotations

from fractions import Fraction

from ..partitions import Partition
from ..rationals import rat
from .algebra import OscillatorSpec, basis_states, delta_dagger, delta_lower, generator_action
from .states import PERMS, combine, scale


def capelli_norm_factor(mu: Partition, gamma, n: int, P: int) -> Fraction:
    """prod_{i=1}^{P} (mu_i + P - i + gamma + n + 1) with shifted weights."""
    mu, gamma = Partition(mu), rat(gamma)
    if mu.height > P:
        raise ValueError("partition taller than the colour count")
    out = Fraction(1)
    for i in range(1, P + 1):
        out *= mu.part(i) + P - i + gamma + n + 1
    return out


def block_spec(P: int, gamma) -> OscillatorSpec:
    """A single deformed a-block: q = P flavours over P colours."""
    gamma = rat(gamma)
    return OscillatorSpec(
        0, 0, P, P, rat(0), gamma, (), tuple(range(P)), (), ()
    )


def capelli_identity_check(P: int, gamma, cutoff: int = 4, max_s: int = 1) -> bool:
    """Verify Delta+ Delta = colDet(E + rho) as operators on the truncated basis."""
    spec = block_spec(P, gamma)
    if not spec.a_deformed:
        # gamma = 0: undeformed Fock block; Delta acts by plain derivatives
        spec = OscillatorSpec(0, 0, P, P, rat(0), rat(0), (), tuple(range(P)), (), ())
    basis = basis_states(spec, cutoff, max_s=max_s if gamma != 0 else 0)
    for st in basis:
        lhs = delta_dagger(spec, "a", delta_lower(spec, "a", {st: Fraction(1)}))
        rhs = _column_det_action(spec, {st: Fraction(1)})
        if combine(lhs, scale(rhs, Fraction(-1))):
            return False
    return True


def _column_det_action(spec: OscillatorSpec, lc):
    """colDet(E_ij + (P - i) delta_ij) acting on lc (1-based i in the formula)."""
    P = spec.q
    total = {}
    base = spec.p + spec.m  # a-block offset in generator indices
    for perm, sign in PERMS[P]:
        # eps_{i_1..i_P} M[i_1][1] ... M[i_P][P], columns applied right to left
        term = lc
        for col in range(P - 1, -1, -1):
            row = perm[col]
            term = combine(
                generator_action(spec, base + row, base + col, term),
                scale(term, Fraction(P - (row + 1))) if row == col else {},
            )
            if not term:
                break
        if term:
            total = combine(total, scale(term, Fraction(sign)))
    return total


def delta_ladder_norms(P: int, gamma, mu: Partition, nmax: int):
    """Norm ratios |v_{mu,n+1}|^2 / |v_{mu,n}|^2 via explicit Delta+ powers."""
    from .inner import inner_product
    from .states import State

    spec = block_spec(P, gamma)
    mu = Partition(mu)
    # highest vector of V_mu (x) V_mu: top-left minors
    v = {spec.vacuum(): Fraction(1)}
    from .algebra import mul_a
    from .module import _apply_minor

    for y in range(1, mu.height + 1):
        for _ in range(mu.part(y) - mu.part(y + 1)):
            v = _apply_minor(spec, v, list(range(y)), tuple(range(y)), mul_a)
    ratios = []
    prev = inner_product(spec, v, v)
    cur = v
    for n in range(nmax):
        cur = delta_dagger(spec, "a", cur)
        nxt = inner_product(spec, cur, cur)
        ratios.append(nxt / prev)
        prev = nxt
    return ratios
