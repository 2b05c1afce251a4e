import random
from fractions import Fraction as F

import pytest

from superdual.gradings import Grading, parse_grading
from superdual.labels import grading_distinguished, grading_pmq
from superdual.lattice import (
    build_weight_lattice,
    duality_step,
    lattice_shape,
    plaquette_check,
    weight_in_grading,
)
from superdual.weights import FundamentalWeight


def su24_weight(beta):
    # compact su(2|4): 2 fermions, 4 bosons; tau = (1,0), mu = (3,1,0,0)
    return FundamentalWeight(grading_pmq(0, 2, 4), (1 + beta, beta, 3, 1, 0, 0))


def test_duality_step_branches():
    g = Grading.from_blocks([(1, 0, 0), (1, 1, 1)])
    w = FundamentalWeight(g, (-2, 2))  # nu = -2, lambda = 2: shortening branch
    w2 = duality_step(w, 1)
    assert w2.values == (2, -2) and w2.grading.entries == ((1, 1), (0, 0))
    w3 = FundamentalWeight(g, (0, 3))  # nu = 0, lambda = 3 -> (4, -1)
    w4 = duality_step(w3, 1)
    assert w4.values == (4, -1)


def test_duality_step_involution():
    rng = random.Random(0)
    g = parse_grading("su(2,|4|2)")
    for _ in range(25):
        vals = tuple(F(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(8))
        w = FundamentalWeight(g, vals)
        for node in (2, 6):  # the p-odd nodes of su(2,|4|2)
            ww = duality_step(duality_step(w, node), node)
            assert ww.values == w.values and ww.grading == w.grading


def test_duality_step_rejections():
    g = parse_grading("su(2,2|4)")
    w = FundamentalWeight(g, (0,) * 8)
    with pytest.raises(ValueError):
        duality_step(w, 1)  # compact p-even
    with pytest.raises(ValueError):
        duality_step(w, 2)  # non-compact


def test_su24_sign_matrices():
    expected = {
        F(1): ((("+", "+"), ("+", "+"), ("+", "-"), ("0", "-")), False),
        F(2): ((("+", "+"), ("+", "+"), ("+", "0"), ("0", "0")), True),
        F(5, 2): ((("+", "+"), ("+", "+"), ("+", "+"), ("+", "-")), False),
        F(3): ((("+", "+"), ("+", "+"), ("+", "+"), ("+", "0")), True),
        F(7, 2): ((("+", "+"), ("+", "+"), ("+", "+"), ("+", "+")), True),
    }
    for beta, (signs, ok) in expected.items():
        rep = plaquette_check(build_weight_lattice(su24_weight(beta)))
        assert rep.signs == signs
        assert rep.ok == ok
    # beta = 5/2 violation sits in the upper-right corner
    rep = plaquette_check(build_weight_lattice(su24_weight(F(5, 2))))
    assert rep.violations == ((4, 2),)


def test_su24_zero_cells_match_fat_hook_rule():
    # independent geometric rule: cell (a, c) is zero iff mu_a = 0 and
    # lambda_c <= a - 1 with lambda = tau + beta
    tau, mu = (1, 0), (3, 1, 0, 0)
    for beta in (2, 3):
        lam = [tau[c] + beta for c in range(2)]
        geo = sorted(
            (a, c + 1)
            for a in range(1, 5)
            for c in range(2)
            if mu[a - 1] == 0 and lam[c] <= a - 1
        )
        rep = plaquette_check(build_weight_lattice(su24_weight(F(beta))))
        assert sorted(rep.zeros) == geo


def test_vacuum_transport():
    w = FundamentalWeight(grading_pmq(2, 4, 2), (-1, -1, 0, 0, 0, 0, 0, 0))
    lat = build_weight_lattice(w)
    out = weight_in_grading(lat, grading_distinguished(2, 2, 4))
    assert out.values == (-1, -1, 0, 0, 0, 0, 0, 0)


def test_identity_path_read_back():
    g = grading_pmq(2, 4, 2)
    w = FundamentalWeight(g, (-1, -1, 1, 0, 0, 0, 0, 0))
    lat = build_weight_lattice(w)
    assert weight_in_grading(lat, g).values == w.values


def test_zero_weight_lattice():
    w = FundamentalWeight(grading_pmq(1, 2, 1), (0, 0, 0, 0))
    lat = build_weight_lattice(w)
    assert all(v == 0 for v in lat.h_edges.values())
    assert all(v == 0 for v in lat.v_edges.values())


def test_interior_noncompact_rejected():
    g = Grading.from_blocks([(1, 0, 0), (1, 0, 1), (1, 0, 0), (2, 1, 1)])
    with pytest.raises(ValueError):
        lattice_shape(g)


def random_paths(p, q, m, rng, count):
    """Random monotone staircases with p lower rows, q upper rows, m columns."""
    out = []
    for _ in range(count):
        steps = ["v"] * (p + q) + ["h"] * m
        rng.shuffle(steps)
        entries = []
        row = 0
        for s in steps:
            if s == "v":
                row += 1
                entries.append((0, 0 if row <= p else 1))
            else:
                entries.append((1, 1))
        out.append(Grading(entries))
    return out


def test_path_independence_random():
    # build the lattice from one grading, re-read along another, rebuild:
    # the two lattices agree edge by edge
    rng = random.Random(42)
    for _ in range(60):
        p, q, m = rng.randint(0, 2), rng.randint(0, 2), rng.randint(1, 3)
        if p + q == 0:
            q = 1
        g0, g1 = random_paths(p, q, m, rng, 2)
        vals = tuple(F(rng.randint(-8, 8), rng.choice([1, 2])) for _ in range(p + q + m))
        w = FundamentalWeight(g0, vals)
        lat0 = build_weight_lattice(w)
        w1 = weight_in_grading(lat0, g1)
        lat1 = build_weight_lattice(w1)
        assert lat0.h_edges == lat1.h_edges
        assert lat0.v_edges == lat1.v_edges


def test_column_monotonicity_long():
    # generic (no-zero) lattices: stepping one row away from the c-even side
    # lowers lambda by one, so S changes by the nu-difference minus one;
    # with equal adjacent nu's that is a unit step per plaquette
    w = su24_weight(F(9, 2))
    lat = build_weight_lattice(w)
    for c in (1, 2):
        for r in (1, 2, 3):
            up = lat.cell_sum(r + 1, c)
            lo = lat.cell_sum(r, c)
            nu_step = lat.v_edges[(r + 1, lat.m)] - lat.v_edges[(r, lat.m)]
            assert up - lo == nu_step - 1
