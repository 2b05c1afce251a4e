"""Highest-weight vectors, induced modules and exact Gram positivity.

U_0 is built from bottom-row b-minors, fermionic tau-columns, full fermion
columns Delta_f(C) over F_Delta, top-row a-minors and the deformed reference
states.  The induced module is spanned by PBW monomials in the E^(-)
generators applied to a K-basis of U_0; the Gram matrix of that spanning
family (per Cartan slice) is positive definite for long unitary labels,
degenerates exactly at shortenings, and acquires negative directions on the
non-unitary side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..diagrams import NonCompactYoungDiagram
from ..labels import grading_pmq
from ..weights import FundamentalWeight
from .algebra import OscillatorSpec, generator_action, mul_a, mul_b, mul_f
from .inner import inner_product
from .states import PERMS, add_into, combine, scale


# ---------------------------------------------------------------------------
# U_0 construction
# ---------------------------------------------------------------------------

def build_u0(d: NonCompactYoungDiagram):
    """The K-highest vector of U_0 as a LinComb, plus its OscillatorSpec."""
    spec = OscillatorSpec.from_diagram(d)
    label = d.label
    v = {spec.vacuum(): Fraction(1)}

    # left block: bottom-row minors of b over B_delta colours
    mu_l = label.mu_L
    for y in range(1, mu_l.height + 1):
        power = mu_l.part(y) - mu_l.part(y + 1)
        rows = list(range(spec.p - y, spec.p))  # bottom y flavours
        cols = spec.B_delta[:y]
        for _ in range(power):
            v = _apply_minor(spec, v, rows, cols, mul_b)

    # fermionic tau columns over F colours
    tau_conj = label.tau.conjugate()
    for x in range(1, label.tau.part(1) + 1):
        col = spec.F_cols[x - 1]
        for fl in range(tau_conj.part(x)):
            v = mul_f(spec, fl, col, v)

    # full fermion columns over F_delta
    for col in spec.F_delta:
        for fl in range(spec.m):
            v = mul_f(spec, fl, col, v)

    # right block: top-row minors of a over A_delta colours
    mu_r = label.mu_R
    for y in range(1, mu_r.height + 1):
        power = mu_r.part(y) - mu_r.part(y + 1)
        rows = list(range(y))  # top y flavours
        cols = spec.A_delta[:y]
        for _ in range(power):
            v = _apply_minor(spec, v, rows, cols, mul_a)
    return spec, v


def _apply_minor(spec, v, rows, cols, mul):
    out = {}
    for perm, sign in PERMS[len(rows)]:
        term = v
        for i, r in enumerate(rows):
            term = mul(spec, r, cols[perm[i]], term)
        out = combine(out, scale(term, Fraction(sign)))
    return out


# ---------------------------------------------------------------------------
# HWS verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HwsReport:
    raised_to_zero: bool
    weight: FundamentalWeight | None
    failing: tuple | None  # (i, j) of the first non-annihilating raising op


def verify_hws(spec: OscillatorSpec, v) -> HwsReport:
    """Check E_ij v = 0 for all i < j and read the Cartan eigenvalues."""
    lc = v if isinstance(v, dict) else {v: Fraction(1)}
    weights = {spec.state_weight(s) for s in lc}
    if len(weights) != 1:
        return HwsReport(False, None, None)
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            if generator_action(spec, i, j, lc):
                return HwsReport(False, None, (i, j))
    w = FundamentalWeight(grading_pmq(spec.p, spec.m, spec.q), weights.pop())
    return HwsReport(True, w, None)


# ---------------------------------------------------------------------------
# generator alphabets
# ---------------------------------------------------------------------------

def eminus_generators(spec: OscillatorSpec):
    """E^(-) generators (i, j, odd?) with block(i) > block(j)."""
    gens = []
    p, m, q = spec.p, spec.m, spec.q
    for a in range(p, p + m):  # f rows x b cols: odd
        for bd in range(p):
            gens.append((a, bd, True))
    for al in range(p + m, p + m + q):  # a rows x b cols: even
        for bd in range(p):
            gens.append((al, bd, False))
    for al in range(p + m, p + m + q):  # a rows x f cols: odd
        for a in range(p, p + m):
            gens.append((al, a, True))
    return gens


def k_lowering_generators(spec: OscillatorSpec):
    gens = []
    blocks = [(0, spec.p), (spec.p, spec.p + spec.m), (spec.p + spec.m, spec.n)]
    for lo, hi in blocks:
        for j in range(lo, hi):
            for i in range(j + 1, hi):
                gens.append((i, j))
    return gens


# ---------------------------------------------------------------------------
# exact row reduction over the monomial basis
# ---------------------------------------------------------------------------

class RowSpace:
    """Incremental row-echelon store for LinComb vectors."""

    def __init__(self):
        self.pivots = {}  # state -> reduced vector with coeff 1 there

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            piv = max(vec)
            if piv not in self.pivots:
                return vec, piv
            coeff = vec[piv]
            for s, c in self.pivots[piv].items():
                add_into(vec, s, -coeff * c)
        return {}, None

    def insert(self, vec):
        """Reduce and store; returns the reduced vector or None if dependent."""
        red, piv = self.reduce(vec)
        if piv is None:
            return None
        inv = Fraction(1) / red[piv]
        red = scale(red, inv)
        self.pivots[piv] = red
        return red


def u0_k_basis(spec: OscillatorSpec, u0, max_iter: int = 60):
    """Basis of the K-module U_0: closure of u0 under K-lowering operators."""
    gens = k_lowering_generators(spec)
    space = RowSpace()
    space.insert(dict(u0))
    frontier = [dict(u0)]
    basis = [dict(u0)]
    for _ in range(max_iter):
        new_frontier = []
        for v in frontier:
            for (i, j) in gens:
                w = generator_action(spec, i, j, v)
                if not w:
                    continue
                red = space.insert(w)
                if red is not None:
                    new_frontier.append(w)
                    basis.append(w)
        if not new_frontier:
            return basis
        frontier = new_frontier
    raise AssertionError("K-orbit failed to close (is U_0 finite-dimensional?)")


# ---------------------------------------------------------------------------
# PBW spanning family and Gram analysis
# ---------------------------------------------------------------------------

def pbw_family(spec: OscillatorSpec, u0_basis, cutoff: int):
    """PBW monomials in E^(-) applied to the U_0 basis, grouped by weight.

    Returns dict weight -> list of (tag, LinComb); tags identify the monomial
    for witness reporting.  Monomials whose image vanishes identically are
    kept (as empty LinCombs at their formal weight): they are exact null
    directions of the generalized Verma module -- for instance the one-step
    BPS conditions E u0 = 0 -- and must show up in the Gram kernel.
    """
    gens = eminus_generators(spec)

    monomials = [()]

    def extend(prefix, start):
        for gi in range(start, len(gens)):
            odd = gens[gi][2]
            if odd and prefix and prefix[-1] == gi:
                continue
            new = prefix + (gi,)
            if len(new) <= cutoff:
                monomials.append(new)
                extend(new, gi)

    extend((), 0)

    slices = {}
    for mono in monomials:
        for bi, base in enumerate(u0_basis):
            base_weight = {spec.state_weight(s) for s in base}
            assert len(base_weight) == 1
            weight = list(base_weight.pop())
            for gi in mono:
                i, j, _odd = gens[gi]
                weight[i] += 1
                weight[j] -= 1
            vec = base
            for gi in reversed(mono):
                i, j, _odd = gens[gi]
                vec = generator_action(spec, i, j, vec)
                if not vec:
                    break
            if vec:
                got = {spec.state_weight(s) for s in vec}
                assert got == {tuple(weight)}, "PBW vector mixes Cartan slices"
            tag = (mono, bi)
            slices.setdefault(tuple(weight), []).append((tag, vec))
    return slices


@dataclass
class SliceReport:
    weight: tuple
    dim: int
    kernel_dim: int
    negative: bool
    witness: tuple | None  # (tags, coefficients) of a nonpositive vector


@dataclass
class GramReport:
    positive_definite: bool
    has_negative: bool
    kernel_total: int
    slices: list
    negative_witness: tuple | None

    def kernel_dims(self):
        return {tuple(s.weight): s.kernel_dim for s in self.slices if s.kernel_dim}


def analyze_gram(G):
    """Symmetric elimination (Gram-Schmidt with isotropic handling).

    Returns (kernel_dim, negative_coeffs | None): negative_coeffs is a
    coefficient vector over the original family of a vector with negative
    norm, if one exists.
    """
    n = len(G)
    pivots = []  # (coeff vector, G @ coeff, norm)
    kernel = 0
    for i in range(n):
        c = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
        for (cj, gj, nj) in pivots:
            num = sum(c[t] * gj[t] for t in range(n) if c[t])
            if num:
                f = num / nj
                c = [a - f * b for a, b in zip(c, cj)]
        g = [sum(G[u][t] * c[t] for t in range(n) if c[t]) for u in range(n)]
        norm = sum(c[t] * g[t] for t in range(n) if c[t])
        if norm > 0:
            pivots.append((c, g, norm))
        elif norm < 0:
            return kernel, c
        else:
            partner = next((u for u in range(n) if g[u] != 0), None)
            if partner is None:
                kernel += 1
            else:
                # isotropic direction pairing with e_partner: indefinite
                s = g[partner]
                h = G[partner][partner]
                tau = -(abs(h) + 1) / (2 * s)
                wit = [tau * x for x in c]
                wit[partner] += 1
                return kernel, wit
    return kernel, None


def gram_positivity(d: NonCompactYoungDiagram, cutoff: int = 4) -> GramReport:
    """Exact Gram analysis of the induced module up to the given E^(-) depth."""
    spec, u0 = build_u0(d)
    norm0 = inner_product(spec, u0, u0)
    if norm0 == 0:
        raise AssertionError("U_0 highest vector is null; realization degenerate")
    basis0 = u0_k_basis(spec, u0)
    slices = pbw_family(spec, basis0, cutoff)

    reports = []
    witness = None
    kernel_total = 0
    has_negative = False
    for weight, fam in sorted(slices.items()):
        G = [[Fraction(0)] * len(fam) for _ in fam]
        for r in range(len(fam)):
            for c in range(r, len(fam)):
                val = inner_product(spec, fam[r][1], fam[c][1])
                G[r][c] = val
                G[c][r] = val
        kern, neg = analyze_gram(G)
        kernel_total += kern
        rep = SliceReport(weight, len(fam), kern, neg is not None, None)
        if neg is not None:
            has_negative = True
            rep.witness = (tuple(tag for tag, _v in fam), tuple(neg))
            if witness is None:
                witness = (weight, rep.witness)
        reports.append(rep)
    return GramReport(
        positive_definite=(not has_negative and kernel_total == 0),
        has_negative=has_negative,
        kernel_total=kernel_total,
        slices=reports,
        negative_witness=witness,
    )
