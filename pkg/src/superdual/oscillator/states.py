"""Monomial states of the (deformed) Fock modules and exact linear combinations.

A state is a monomial in the bosonic variables x[alpha][A] (a-oscillators),
y[adot][A] (b-oscillators), the fermionic theta bits, and nonnegative powers
sL, sR of the inverse determinant variables of the deformed blocks.  The
deformed block over a square colour set realises F_gamma = C[X] (x) C[t,t^-1]
modulo (det X - t); positive t powers are expanded into determinant
polynomials and the canonical form forbids a full block diagonal alongside a
positive s power, via

    x^diag s^k  =  x^0 s^(k-1) - sum_{sigma != id} sgn(sigma) x^(e_sigma) s^k.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import NamedTuple


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


PERMS = {n: [(p, _perm_sign(p)) for p in permutations(range(n))] for n in range(1, 5)}


class State(NamedTuple):
    a: tuple  # q rows x P colours of exponents
    b: tuple  # p rows x P colours
    f: int  # bitmask, bit = flavour * P + colour
    sL: int
    sR: int

    def osc_degree(self) -> int:
        return (
            sum(map(sum, self.a))
            + sum(map(sum, self.b))
            + bin(self.f).count("1")
        )


def zero_state(p: int, m: int, q: int, P: int) -> State:
    return State(
        tuple((0,) * P for _ in range(q)),
        tuple((0,) * P for _ in range(p)),
        0,
        0,
        0,
    )


# LinComb: dict[State, Fraction]; all helpers below are non-mutating unless
# named *_into.

def add_into(acc: dict, state: State, coeff: Fraction):
    cur = acc.get(state)
    new = coeff if cur is None else cur + coeff
    if new == 0:
        acc.pop(state, None)
    else:
        acc[state] = new


def combine(*terms) -> dict:
    acc = {}
    for t in terms:
        for s, c in t.items():
            add_into(acc, s, c)
    return acc


def scale(lc: dict, factor: Fraction) -> dict:
    if factor == 0:
        return {}
    return {s: c * factor for s, c in lc.items()}


def _bump(mat, row, col, delta):
    r = list(mat[row])
    r[col] += delta
    out = list(mat)
    out[row] = tuple(r)
    return tuple(out)


def _reduce_block(mat, s, cols):
    """Canonicalise one deformed block: returns list of (mat', s', coeff)."""
    n = len(cols)
    if s == 0 or n == 0:
        return [(mat, s, Fraction(1))]
    if any(mat[i][cols[i]] == 0 for i in range(n)):
        return [(mat, s, Fraction(1))]
    # strip one diagonal
    stripped = mat
    for i in range(n):
        stripped = _bump(stripped, i, cols[i], -1)
    out = []
    for tail in _reduce_block(stripped, s - 1, cols):
        out.append(tail)
    for perm, sign in PERMS[n]:
        if list(perm) == list(range(n)):
            continue
        withperm = stripped
        for i in range(n):
            withperm = _bump(withperm, i, cols[perm[i]], +1)
        for mat2, s2, c2 in _reduce_block(withperm, s, cols):
            out.append((mat2, s2, -sign * c2))
    merged = {}
    for mat2, s2, c2 in out:
        key = (mat2, s2)
        merged[key] = merged.get(key, Fraction(0)) + c2
    return [(mm, ss, cc) for (mm, ss), cc in merged.items() if cc != 0]


def reduce_state(state: State, a_cols, b_cols) -> dict:
    """Canonical form of a monomial given the deformed-block colour tuples."""
    out = {}
    for amat, sR, ca in _reduce_block(state.a, state.sR, a_cols):
        for bmat, sL, cb in _reduce_block(state.b, state.sL, b_cols):
            add_into(out, State(amat, bmat, state.f, sL, sR), ca * cb)
    return out


def block_matrix(mat, rows, cols):
    """Extract the sub-matrix over the given flavour rows and colours."""
    return tuple(tuple(mat[r][c] for c in cols) for r in rows)
