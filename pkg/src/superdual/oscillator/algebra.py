"""Oscillator realisation of gl(p,|m|q) generators on (deformed) Fock states.

Index order follows the su(p,|m|q) grading: 0..p-1 are the dotted bosons (b),
p..p+m-1 the fermions (f), p+m..p+m+q-1 the undotted bosons (a).  The
generator table is

    E =  [ -b.b+   b.f    b.a  ]
         [ -f+.b+  f+.f   f+.a ]
         [ -a+.b+  a+.f   a+.a ]

with the dot summing the colour index over 0..P-1.  A lowering oscillator on
a deformed square block acts as d/dx + (d det/dx)(gamma/t + d/dt).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..diagrams import NonCompactYoungDiagram, Realization, realize
from ..labels import RepLabel, grading_pmq, weight_pmq_from_realization
from ..rationals import rat
from ..weights import FundamentalWeight
from .states import PERMS, State, add_into, combine, reduce_state, scale, zero_state


@dataclass(frozen=True)
class OscillatorSpec:
    """Flavour counts, colour count and the deformed/fermion-filled colours."""

    p: int
    m: int
    q: int
    P: int
    gamma_L: Fraction
    gamma_R: Fraction
    B_delta: tuple  # colours of the b-deformation block (square iff gamma_L != 0)
    A_delta: tuple  # colours of the a-deformation block / minor colours
    F_delta: tuple  # fermion-filled colours (A_delta subset for m > 0)
    F_cols: tuple  # colours of the tau columns

    @classmethod
    def plain(cls, p=0, m=0, q=0, P=1):
        """Undeformed Fock spec (unit tests, compact algebras)."""
        return cls(p, m, q, P, rat(0), rat(0), (), (), (), ())

    @classmethod
    def from_diagram(cls, d: NonCompactYoungDiagram) -> "OscillatorSpec":
        label, r = d.label, d.realization
        nB = r.b_delta_size(label)
        nA = r.a_delta_size(label)
        B_delta = tuple(range(nB))
        if label.m:
            F_delta = tuple(range(nB, nB + r.fdelta))
            A_delta = F_delta[:nA]
            if nA > len(F_delta):
                raise ValueError("realization lacks colours for A_Delta inside F_Delta")
            F_cols = tuple(range(nB + r.fdelta, nB + r.fdelta + label.tau.part(1)))
            top = nB + r.fdelta + label.tau.part(1)
        else:
            F_delta = ()
            A_delta = tuple(range(nB, nB + nA))
            F_cols = ()
            top = nB + nA
        if top > r.P:
            raise ValueError(f"realization needs at least {top} colours, has {r.P}")
        return cls(
            label.p, label.m, label.q, r.P, r.gamma_L, r.gamma_R,
            B_delta, A_delta, F_delta, F_cols,
        )

    @property
    def n(self) -> int:
        return self.p + self.m + self.q

    @property
    def a_deformed(self) -> bool:
        return self.gamma_R != 0

    @property
    def b_deformed(self) -> bool:
        return self.gamma_L != 0

    def a_block_cols(self):
        return self.A_delta if self.a_deformed else ()

    def b_block_cols(self):
        return self.B_delta if self.b_deformed else ()

    def vacuum(self) -> State:
        return zero_state(self.p, self.m, self.q, self.P)

    def reduce(self, state: State) -> dict:
        return reduce_state(state, self.a_block_cols(), self.b_block_cols())

    # -- weights ------------------------------------------------------------
    def state_weight(self, s: State) -> tuple:
        """E_ii eigenvalues of a monomial state, in su(p,|m|q) index order."""
        out = []
        for r in range(self.p):
            val = -(sum(s.b[r]) + self.P)
            if self.b_deformed:
                val -= self.gamma_L - s.sL
            out.append(rat(val))
        for a in range(self.m):
            out.append(rat(sum(1 for A in range(self.P) if s.f >> (a * self.P + A) & 1)))
        for al in range(self.q):
            val = sum(s.a[al])
            if self.a_deformed:
                val += self.gamma_R - s.sR
            out.append(rat(val))
        return tuple(out)


# ---------------------------------------------------------------------------
# primitive oscillator actions (linear maps on LinCombs)
# ---------------------------------------------------------------------------

def _bump(mat, row, col, delta):
    r = list(mat[row])
    r[col] += delta
    out = list(mat)
    out[row] = tuple(r)
    return tuple(out)


def _fsign(mask: int, bit: int) -> int:
    return -1 if bin(mask & ((1 << bit) - 1)).count("1") % 2 else 1


def mul_a(spec: OscillatorSpec, fl: int, col: int, lc: dict) -> dict:
    out = {}
    for s, c in lc.items():
        ns = s._replace(a=_bump(s.a, fl, col, +1))
        if s.sR and col in spec.a_block_cols():
            for rs, rc in spec.reduce(ns).items():
                add_into(out, rs, c * rc)
        else:
            add_into(out, ns, c)
    return out


def mul_b(spec: OscillatorSpec, fl: int, col: int, lc: dict) -> dict:
    out = {}
    for s, c in lc.items():
        ns = s._replace(b=_bump(s.b, fl, col, +1))
        if s.sL and col in spec.b_block_cols():
            for rs, rc in spec.reduce(ns).items():
                add_into(out, rs, c * rc)
        else:
            add_into(out, ns, c)
    return out


def _ann_boson(spec, which, fl, col, lc):
    """Annihilator on the a- or b-family, with the deformed tail."""
    deformed = spec.a_deformed if which == "a" else spec.b_deformed
    cols = spec.A_delta if which == "a" else spec.B_delta
    gamma = spec.gamma_R if which == "a" else spec.gamma_L
    out = {}
    for s, c in lc.items():
        mat = s.a if which == "a" else s.b
        spow = s.sR if which == "a" else s.sL
        # plain derivative
        if mat[fl][col]:
            ns_mat = _bump(mat, fl, col, -1)
            ns = s._replace(**{which: ns_mat})
            add_into(out, ns, c * mat[fl][col])
        # determinant tail: (d det/dx_{fl,col}) (gamma - s) s^{+1}
        if deformed and col in cols:
            pos = cols.index(col)
            n = len(cols)
            for perm, sign in PERMS[n]:
                if perm[fl] != pos:
                    continue
                ns_mat = mat
                for j in range(n):
                    if j != fl:
                        ns_mat = _bump(ns_mat, j, cols[perm[j]], +1)
                coeff = c * sign * (gamma - spow)
                ns = s._replace(**{which: ns_mat})
                ns = ns._replace(sR=s.sR + 1) if which == "a" else ns._replace(sL=s.sL + 1)
                for rs, rc in spec.reduce(ns).items():
                    add_into(out, rs, coeff * rc)
    return out


def ann_a(spec, fl, col, lc):
    return _ann_boson(spec, "a", fl, col, lc)


def ann_b(spec, fl, col, lc):
    return _ann_boson(spec, "b", fl, col, lc)


def mul_f(spec, fl, col, lc):
    out = {}
    bit = fl * spec.P + col
    for s, c in lc.items():
        if s.f >> bit & 1:
            continue
        add_into(out, s._replace(f=s.f | (1 << bit)), c * _fsign(s.f, bit))
    return out


def ann_f(spec, fl, col, lc):
    out = {}
    bit = fl * spec.P + col
    for s, c in lc.items():
        if not s.f >> bit & 1:
            continue
        add_into(out, s._replace(f=s.f & ~(1 << bit)), c * _fsign(s.f, bit))
    return out


def deformed_action(spec: OscillatorSpec, kind: str, direction: str, fl: int, col: int, v):
    """Single-oscillator action; kind in {a, b, f}, direction in {raise, lower}."""
    lc = v if isinstance(v, dict) else {v: Fraction(1)}
    table = {
        ("a", "raise"): mul_a,
        ("a", "lower"): ann_a,
        ("b", "raise"): mul_b,
        ("b", "lower"): ann_b,
        ("f", "raise"): mul_f,
        ("f", "lower"): ann_f,
    }
    return table[(kind, direction)](spec, fl, col, lc)


# ---------------------------------------------------------------------------
# determinant operators of the deformed blocks
# ---------------------------------------------------------------------------

def delta_dagger(spec: OscillatorSpec, which: str, lc: dict) -> dict:
    """Multiplication by t (= det of the raising oscillators on the block)."""
    cols = spec.A_delta if which == "a" else spec.B_delta
    n = len(cols)
    out = {}
    for s, c in lc.items():
        spow = s.sR if which == "a" else s.sL
        if spow:
            ns = s._replace(sR=s.sR - 1) if which == "a" else s._replace(sL=s.sL - 1)
            add_into(out, ns, c)
            continue
        mat = s.a if which == "a" else s.b
        for perm, sign in PERMS[n]:
            ns_mat = mat
            for i in range(n):
                ns_mat = _bump(ns_mat, i, cols[perm[i]], +1)
            add_into(out, s._replace(**{which: ns_mat}), c * sign)
    return out


def delta_lower(spec: OscillatorSpec, which: str, lc: dict) -> dict:
    """The annihilator determinant Delta = det(a_i(A)) on the block."""
    cols = spec.A_delta if which == "a" else spec.B_delta
    n = len(cols)
    out = {}
    fn = ann_a if which == "a" else ann_b
    for perm, sign in PERMS[n]:
        term = lc
        for i in range(n):
            term = fn(spec, perm[i], cols[i], term)
        for s, c in term.items():
            add_into(out, s, c * sign)
    return out


# ---------------------------------------------------------------------------
# gl generators
# ---------------------------------------------------------------------------

def _block_of(spec, i):
    if i < spec.p:
        return ("b", i)
    if i < spec.p + spec.m:
        return ("f", i - spec.p)
    return ("a", i - spec.p - spec.m)


def generator_action(spec: OscillatorSpec, i: int, j: int, v) -> dict:
    """E_ij acting on a state or LinComb (0-based su(p,|m|q) indices)."""
    lc = v if isinstance(v, dict) else {v: Fraction(1)}
    (bi, fi), (bj, fj) = _block_of(spec, i), _block_of(spec, j)
    out = {}
    for A in range(spec.P):
        if bi == "b" and bj == "b":
            term = scale(ann_b(spec, fi, A, mul_b(spec, fj, A, lc)), Fraction(-1))
        elif bi == "b" and bj == "f":
            term = ann_b(spec, fi, A, ann_f(spec, fj, A, lc))
        elif bi == "b" and bj == "a":
            term = ann_b(spec, fi, A, ann_a(spec, fj, A, lc))
        elif bi == "f" and bj == "b":
            term = scale(mul_f(spec, fi, A, mul_b(spec, fj, A, lc)), Fraction(-1))
        elif bi == "f" and bj == "f":
            term = mul_f(spec, fi, A, ann_f(spec, fj, A, lc))
        elif bi == "f" and bj == "a":
            term = mul_f(spec, fi, A, ann_a(spec, fj, A, lc))
        elif bi == "a" and bj == "b":
            term = scale(mul_a(spec, fi, A, mul_b(spec, fj, A, lc)), Fraction(-1))
        elif bi == "a" and bj == "f":
            term = mul_a(spec, fi, A, ann_f(spec, fj, A, lc))
        else:
            term = mul_a(spec, fi, A, ann_a(spec, fj, A, lc))
        out = combine(out, term)
    return out


def basis_states(spec: OscillatorSpec, cutoff: int, max_s: int = 0):
    """All canonical monomials with oscillator degree <= cutoff, s <= max_s."""
    from itertools import product

    def mats(rows, budget):
        cells = rows * spec.P
        if cells == 0:
            yield ()
            return
        for combo in _bounded_tuples(cells, budget):
            yield tuple(combo[r * spec.P : (r + 1) * spec.P] for r in range(rows))

    out = []
    for total_a in range(cutoff + 1):
        for amat in mats(spec.q, total_a):
            if sum(map(sum, amat)) != total_a:
                continue
            for total_b in range(cutoff - total_a + 1):
                for bmat in mats(spec.p, total_b):
                    if sum(map(sum, bmat)) != total_b:
                        continue
                    budget_f = cutoff - total_a - total_b
                    for fmask in _masks(spec.m * spec.P, budget_f):
                        for sL in range(max_s + 1 if spec.b_deformed else 1):
                            for sR in range(max_s + 1 if spec.a_deformed else 1):
                                st = State(amat, bmat, fmask, sL, sR)
                                if spec.reduce(st) != {st: Fraction(1)}:
                                    continue  # not canonical
                                out.append(st)
    return out


def _bounded_tuples(cells, budget):
    if cells == 0:
        if budget == 0:
            yield ()
        return
    if cells == 1:
        yield (budget,)
        return
    for first in range(budget + 1):
        for rest in _bounded_tuples(cells - 1, budget - first):
            yield (first,) + rest


def _masks(bits, max_pop):
    for mask in range(1 << bits):
        if bin(mask).count("1") <= max_pop:
            yield mask


def generator_matrix(spec: OscillatorSpec, i: int, j: int, cutoff: int, max_s: int = 0):
    """Sparse matrix of E_ij over the degree-truncated canonical basis.

    Returns (basis, matrix) where matrix[col_index] lists (row_state, coeff);
    images leaving the truncation window are kept (as states), so commutation
    identities can be checked exactly on the sub-basis that stays inside.
    """
    basis = basis_states(spec, cutoff, max_s)
    cols = {}
    for k, st in enumerate(basis):
        cols[k] = generator_action(spec, i, j, st)
    return basis, cols
