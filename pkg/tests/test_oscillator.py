import itertools
from fractions import Fraction as F

import pytest

from superdual.diagrams import Realization, realize
from superdual.labels import RepLabel, classify_supqm, grading_pmq, weight_from_label
from superdual.oscillator import (
    OscillatorSpec,
    basis_states,
    deformed_action,
    generator_action,
    gram_positivity,
    inner_product,
    verify_hws,
)
from superdual.oscillator.algebra import delta_dagger, delta_lower
from superdual.oscillator.capelli import block_spec
from superdual.oscillator.module import build_u0
from superdual.oscillator.states import State, combine, scale


def apply_comm(spec, a, b, lc):
    """[E_a, E_b] with the super sign for odd x odd pairs."""
    i, j = a
    k, l = b
    p = spec.p
    m = spec.m

    def parity(x, y):
        bx = 0 if x < p else (1 if x < p + m else 0)
        by = 0 if y < p else (1 if y < p + m else 0)
        return (bx + by) % 2

    left = generator_action(spec, i, j, generator_action(spec, k, l, lc))
    right = generator_action(spec, k, l, generator_action(spec, i, j, lc))
    sign = -1 if parity(i, j) and parity(k, l) else 1
    return combine(left, scale(right, F(-sign)))


def comrel_rhs(spec, a, b, lc):
    i, j = a
    k, l = b
    p, m = spec.p, spec.m

    def parity(x, y):
        bx = 0 if x < p else (1 if x < p + m else 0)
        by = 0 if y < p else (1 if y < p + m else 0)
        return (bx + by) % 2

    out = {}
    if j == k:
        out = combine(out, generator_action(spec, i, l, lc))
    if l == i:
        sgn = -1 if parity(i, j) and parity(k, l) else 1
        out = combine(out, scale(generator_action(spec, k, j, lc), F(-sgn)))
    return out


@pytest.mark.parametrize(
    "spec",
    [
        OscillatorSpec.plain(q=2, P=1),
        OscillatorSpec.plain(m=1, q=1, P=1),
        OscillatorSpec.plain(p=1, m=2, q=1, P=2),
    ],
)
def test_commutation_relations(spec):
    pairs = [(i, j) for i in range(spec.n) for j in range(spec.n)]
    states = basis_states(spec, 2)
    for (a, b) in itertools.product(pairs, repeat=2):
        for st in states[:6]:
            lc = {st: F(1)}
            got = apply_comm(spec, a, b, lc)
            want = comrel_rhs(spec, a, b, lc)
            assert combine(got, scale(want, F(-1))) == {}, (a, b, st)


def test_commutation_deformed_block():
    # gl(2) relations on the deformed block, exactly, including s-states
    spec = block_spec(2, F(1, 2))
    base = spec.p + spec.m
    pairs = [(base + i, base + j) for i in range(2) for j in range(2)]
    for st in basis_states(spec, 2, max_s=1):
        for (a, b) in itertools.product(pairs, repeat=2):
            lc = {st: F(1)}
            got = apply_comm(spec, a, b, lc)
            want = comrel_rhs(spec, a, b, lc)
            assert combine(got, scale(want, F(-1))) == {}


def test_su11_nilpotency():
    spec = OscillatorSpec.plain(m=1, q=1, P=1)
    for st in basis_states(spec, 3):
        twice = generator_action(spec, 0, 1, generator_action(spec, 0, 1, {st: F(1)}))
        assert twice == {}


def test_deformed_action_examples():
    # a acting on the identity monomial of the gamma-block: cofactor * gamma/t
    spec = block_spec(2, F(1, 2))
    vac = spec.vacuum()
    out = deformed_action(spec, "a", "lower", 0, 0, vac)
    (st, coeff), = out.items()
    assert st.sR == 1 and coeff == F(1, 2)  # gamma * cofactor x_22
    assert st.a == ((0, 0), (0, 1))
    # gamma = 0: plain Fock derivative
    spec0 = OscillatorSpec.plain(q=2, P=2)
    st0 = State(((1, 0), (0, 0)), (), 0, 0, 0)
    out0 = deformed_action(spec0, "a", "lower", 0, 0, st0)
    assert out0 == {spec0.vacuum(): F(1)}
    # Delta |> t^0 = gamma(gamma+1) t^-1 for P=2
    res = delta_lower(spec, "a", {vac: F(1)})
    assert res == {vac._replace(sR=1): F(3, 4)}


def test_f_gamma_shift_isomorphism():
    # multiplication by t intertwines the gamma+1 and gamma actions exactly
    g = F(-1, 3)
    spec_lo = block_spec(2, g)
    spec_hi = block_spec(2, g + 1)
    base = 0
    for st in basis_states(spec_hi, 2, max_s=1):
        lc = {st: F(1)}
        for (i, j) in [(0, 1), (1, 0), (0, 0), (1, 1)]:
            lhs = delta_dagger(spec_lo, "a", generator_action(spec_hi, i, j, lc))
            rhs = generator_action(spec_lo, i, j, delta_dagger(spec_lo, "a", lc))
            assert combine(lhs, scale(rhs, F(-1))) == {}


def test_inner_product_examples():
    # |Delta+ |0>|^2 = 2 for P=2, gamma=0, two ways
    spec0 = OscillatorSpec.plain(q=2, P=2)
    det = {
        State(((1, 0), (0, 1)), (), 0, 0, 0): F(1),
        State(((0, 1), (1, 0)), (), 0, 0, 0): F(-1),
    }
    assert inner_product(spec0, det, det) == 2
    spec = block_spec(2, F(1, 2))
    t1 = delta_dagger(spec, "a", {spec.vacuum(): F(1)})
    assert inner_product(spec, t1, t1) == (F(1, 2) + 1) * (F(1, 2) + 2)


def test_adjointness_on_module_slices():
    # <E_ij u, v> = (-1)^{c_i+c_j} <u, E_ji v> on module vectors
    lab = RepLabel(1, 2, 2, (), (1,), (), F(3, 2), 1)
    d = realize(lab)
    spec, u0 = build_u0(d)
    from superdual.oscillator.module import pbw_family, u0_k_basis

    fam = pbw_family(spec, u0_k_basis(spec, u0), 2)
    vecs = [v for sl in fam.values() for (_t, v) in sl][:14]
    g = grading_pmq(spec.p, spec.m, spec.q)
    for i in range(spec.n):
        for j in range(spec.n):
            ci, cj = g.entries[i][1], g.entries[j][1]
            sign = -1 if (ci + cj) % 2 else 1
            for u in vecs[:6]:
                for v in vecs[:6]:
                    lhs = inner_product(spec, generator_action(spec, i, j, u), v)
                    rhs = sign * inner_product(spec, u, generator_action(spec, j, i, v))
                    assert lhs == rhs


def test_verify_hws_table1_and_non_hws():
    d = realize(RepLabel(2, 2, 4, (), (), (5, 0), 0, 1))
    spec, u0 = build_u0(d)
    rep = verify_hws(spec, u0)
    assert rep.raised_to_zero
    assert rep.weight.values == (-1, -1, 1, 1, 1, 1, 5, 0)
    # a+ b+ |0> is not a HWS (E^{+} = b.a acts nontrivially)
    spec2 = OscillatorSpec.plain(p=2, q=2, P=1)
    bad = {State(((1,), (0,)), ((1,), (0,)), 0, 0, 0): F(1)}
    rep2 = verify_hws(spec2, bad)
    assert not rep2.raised_to_zero


def test_fock_vacuum_weight():
    # vacuum with P colours: weight [-(P)-; -0-; -0-]
    lab = RepLabel(2, 2, 4, (), (), (), 2, 0)
    d = realize(lab)
    assert d.realization.P == 2
    spec, u0 = build_u0(d)
    rep = verify_hws(spec, u0)
    assert rep.weight.values == (-2, -2, 0, 0, 0, 0, 0, 0)


def test_gram_su11_continuous():
    pos = gram_positivity(realize(RepLabel(1, 1, 0, (), (), (), 0, F(3, 2))), cutoff=6)
    assert pos.positive_definite
    # beta = 1/2 is unitary for su(1,1) (threshold is h = 0): stays positive
    pos2 = gram_positivity(
        realize(RepLabel(1, 1, 0, (), (), (), 0, F(1, 2))), cutoff=6
    )
    assert pos2.positive_definite


def test_gram_su22_negative_witness():
    lab = RepLabel(2, 2, 0, (), (), (), 0, F(1, 2))
    assert not classify_supqm(lab).unitary
    rep = gram_positivity(realize(lab, allow_nonunitary=True), cutoff=3)
    assert rep.has_negative and rep.negative_witness is not None


def test_gram_su22_polynomial_shortening_kernel():
    # su(2|2) weight [1,1;0,0]: the kernel vector is the antisymmetrised
    # two-step lowering monomial; each monomial alone acts nonzero
    lab = RepLabel(0, 2, 2, (), (), (), 0, 1)
    d = realize(lab)
    spec, u0 = build_u0(d)
    rep = verify_hws(spec, u0)
    assert rep.weight.values == (1, 1, 0, 0)
    g = gram_positivity(d, cutoff=2)
    # three null directions: the two same-column two-step monomial
    # shortenings (r_a = 2) plus the mixed-column polynomial combination
    assert not g.has_negative and g.kernel_total == 3
    mixed = [s for s in g.slices if s.weight == (F(0), F(0), F(1), F(1))]
    assert len(mixed) == 1 and mixed[0].dim == 2 and mixed[0].kernel_dim == 1
    # the explicit null combination: E_{31}, E_{42} vs E_{32}, E_{41} (0-based
    # fermions 0,1; bosons 2,3)
    m1 = generator_action(spec, 3, 1, generator_action(spec, 2, 0, {s: c for s, c in u0.items()}))
    m2 = generator_action(spec, 3, 0, generator_action(spec, 2, 1, {s: c for s, c in u0.items()}))
    assert m1 and m2
    null = combine(m1, m2)
    assert inner_product(spec, null, null) == 0
    assert all(inner_product(spec, null, v) == 0 for v in (m1, m2))


def test_helicity_and_masslessness():
    from superdual.oscillator import generator_matrix, helicity, is_massless

    # P = 1 doubleton (a+)^m: helicity m/2
    for m in (1, 2, 3):
        lab = RepLabel(2, 2, 0, (), (), (m, 0), 0, 1)
        d = realize(lab)
        assert d.realization.P == 1
        spec, u0 = build_u0(d)
        assert helicity(spec, u0) == F(m, 2)
    assert is_massless(OscillatorSpec.plain(p=2, q=2, P=1))
    assert not is_massless(OscillatorSpec.plain(p=2, q=2, P=2))


def test_conformal_hamiltonian_on_vacuum():
    # H = (N_a + N_b)/2 + P has eigenvalue P on |0> (E_0 = P = 1 doubleton)
    spec = OscillatorSpec.plain(p=2, m=4, q=2, P=1)
    vac = {spec.vacuum(): F(1)}
    h = {}
    for (i, sgn) in [(0, -1), (1, -1), (6, 1), (7, 1)]:
        for s, c in generator_action(spec, i, i, vac).items():
            from superdual.oscillator.states import add_into

            add_into(h, s, F(sgn, 2) * c)
    assert h == {spec.vacuum(): F(1)}


def test_generator_matrix_api():
    from superdual.oscillator import generator_matrix

    spec = OscillatorSpec.plain(q=2, P=1)
    basis, cols = generator_matrix(spec, 0, 1, cutoff=2)
    assert len(basis) == 6  # monomials of degree <= 2 in two variables
    # E_12 maps x2 -> x1
    idx = {s: k for k, s in enumerate(basis)}
    x2 = State(((0,), (1,)), (), 0, 0, 0)
    x1 = State(((1,), (0,)), (), 0, 0, 0)
    assert cols[idx[x2]] == {x1: F(1)}
