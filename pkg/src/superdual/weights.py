"""Fundamental weights: exact E_ii eigenvalues on a highest-weight state."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gradings import Grading
from .rationals import rat


@dataclass(frozen=True)
class FundamentalWeight:
    """Eigenvalues m_i of all E_ii on the HWS, tagged with the grading used."""

    grading: Grading
    values: tuple

    def __post_init__(self):
        vals = tuple(rat(v) for v in self.values)
        if len(vals) != len(self.grading):
            raise ValueError("weight length does not match grading")
        object.__setattr__(self, "values", vals)

    def __iter__(self):
        return iter(self.values)

    def m(self, i: int) -> Fraction:
        """1-based eigenvalue of E_ii."""
        return self.values[i - 1]


def dynkin_from_fundamental(w: FundamentalWeight) -> tuple:
    """Dynkin labels omega_i = m_i - (-1)^{p_i + p_{i+1}} m_{i+1}.

    The sign is + on p-odd nodes (the Cartan element there is E_ii + E_jj)
    and - on p-even nodes.
    """
    g = w.grading
    out = []
    for i in range(1, len(g)):
        sign = -1 if (g.p(i) + g.p(i + 1)) % 2 else 1
        out.append(w.m(i) - sign * w.m(i + 1))
    return tuple(out)


def outer_dual(w: FundamentalWeight) -> FundamentalWeight:
    """Weight of the representation composed with the outer automorphism.

    phi_out: E_ij -> -E_ji (p-even pairs), E_ij -> i E_ji (p-odd pairs);
    on Cartan eigenvalues m_i -> -m_i, and the c-parity of every p-odd index
    flips in the grading tag.  An involution on (weight, grading) pairs.
    """
    g = w.grading
    new_entries = tuple((p, (c + p) % 2) for (p, c) in g.entries)
    return FundamentalWeight(Grading(new_entries), tuple(-v for v in w.values))
