"""Command-line front end.

Exit codes: 0 ok / unitary, 3 non-unitary, 2 usage error, 4 internal
inconsistency or golden mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import tables as tables_mod
from .diagrams import NonCompactYoungDiagram, Realization, fat_hook, realize, render
from .gradings import parse_grading, render_grading
from .labels import (
    RepLabel,
    classify_supqm,
    grading_pmq,
    label_from_weight,
    psu_central_charge,
    weight_from_label,
)
from .lattice import build_weight_lattice, plaquette_check, weight_in_grading
from .rationals import rat, rat_str
from .shortening import bps_type_22_4, dolan_osborn, shortening_profile_of
from .weights import FundamentalWeight

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NON_UNITARY = 3
EXIT_INTERNAL = 4


def _load_json_arg(text: str):
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"--label/--weight expects a JSON file or literal ({exc})"
        ) from exc


def _label_arg(text: str) -> RepLabel:
    return RepLabel.from_json(_load_json_arg(text))


def _weight_arg(text: str) -> FundamentalWeight:
    d = _load_json_arg(text)
    g = parse_grading(d["grading"]) if isinstance(d["grading"], str) else None
    if g is None:
        from .gradings import Grading

        g = Grading.from_blocks([(b["size"], b["p"], b["c"]) for b in d["grading"]["blocks"]])
    return FundamentalWeight(g, tuple(rat(v) for v in d["values"]))


def weight_to_json(w: FundamentalWeight) -> dict:
    blocks = [{"size": s, "p": p, "c": c} for (s, p, c) in w.grading.blocks()]
    out = {"grading": {"blocks": blocks}, "values": [rat_str(v) for v in w.values]}
    try:
        out["grading_text"] = render_grading(w.grading)
    except ValueError:
        pass
    return out


def _diagram_arg(args) -> NonCompactYoungDiagram:
    label = _label_arg(args.label)
    data = _load_json_arg(args.label)
    if all(k in data for k in ("gamma_L", "gamma_R", "fdelta", "P")):
        return realize(label, strategy=Realization.from_json(data))
    if getattr(args, "P", None):
        # pick the realization with the requested colour count via iso moves
        d = realize(label)
        from .diagrams import iso_move_lower

        while d.realization.P < args.P:
            d = iso_move_lower(d)
        return d
    return realize(label)


def cmd_classify(args):
    label = _label_arg(args.label)
    verdict = classify_supqm(label)
    extra = ""
    if verdict.unitary and (label.p, label.q, label.m) == (2, 2, 4):
        d = realize(label)
        s, sbar, t, tbar = bps_type_22_4(d)
        if s or sbar:
            extra = f" ({rat_str(s)},{rat_str(sbar)})-BPS"
    if args.format == "json":
        print(json.dumps({"status": verdict.status, "witnesses": list(verdict.witnesses)}))
    else:
        print(str(verdict) + extra)
    return EXIT_OK if verdict.unitary else EXIT_NON_UNITARY


def cmd_weight(args):
    label = _label_arg(args.label)
    target = parse_grading(args.grading) if args.grading else None
    w = weight_from_label(label, target, allow_nonunitary=args.allow_nonunitary)
    if args.format == "json":
        print(json.dumps(weight_to_json(w)))
    else:
        print("[" + ",".join(rat_str(v) for v in w.values) + "]")
    return EXIT_OK


def cmd_lattice(args):
    if args.weight:
        w = _weight_arg(args.weight)
    else:
        label = _label_arg(args.label)
        w = weight_from_label(label, allow_nonunitary=True)
    if args.grading:
        lat = build_weight_lattice(w)
        w = weight_in_grading(lat, parse_grading(args.grading))
    lat = build_weight_lattice(w)
    rep = plaquette_check(lat)
    if args.format == "json":
        out = {
            "p": lat.p,
            "q": lat.q,
            "m": lat.m,
            "h_edges": {f"{k[0]},{k[1]}": rat_str(v) for k, v in sorted(lat.h_edges.items())},
            "v_edges": {f"{k[0]},{k[1]}": rat_str(v) for k, v in sorted(lat.v_edges.items())},
            "violations": [list(v) for v in rep.violations],
            "zeros": [list(z) for z in rep.zeros],
        }
        print(json.dumps(out))
    else:
        # rows printed top-to-bottom: c-even (upper) block first
        for row in reversed(rep.signs):
            print(" ".join(row))
        if rep.violations:
            print("violations:", " ".join(f"({r},{c})" for r, c in rep.violations))
        else:
            print("violations: none")
    return EXIT_OK if not rep.violations else EXIT_NON_UNITARY


def cmd_diagram(args):
    d = _diagram_arg(args)
    if args.format == "json":
        print(json.dumps(d.to_json()))
    elif args.format == "svg":
        print(render(d, "svg"))
    else:
        print(render(d, "ascii"))
    return EXIT_OK


def cmd_shorten(args):
    d = _diagram_arg(args)
    prof = shortening_profile_of(d)
    print("right:", " ".join("inf" if r is None else str(r) for r in prof.right))
    print("left: ", " ".join("inf" if r is None else str(r) for r in prof.left))
    if (d.label.p, d.label.q, d.label.m) == (2, 2, 4):
        try:
            print("DO:", str(dolan_osborn(d)))
        except ValueError as exc:
            print(f"DO: n/a ({exc})")
    return EXIT_OK


def cmd_do_label(args):
    d = _diagram_arg(args)
    print(str(dolan_osborn(d)))
    return EXIT_OK


def cmd_verify(args):
    from .oscillator.module import gram_positivity

    label = _label_arg(args.label)
    d = realize(label, allow_nonunitary=True)
    report = gram_positivity(d, cutoff=args.cutoff)
    verdict = classify_supqm(label)
    print(f"classify: {verdict.status}")
    print(
        f"gram: positive_definite={report.positive_definite} "
        f"negative={report.has_negative} kernel={report.kernel_total}"
    )
    flagged = [s for s in report.slices if s.kernel_dim or s.negative]
    for s in flagged[:8]:
        tag = "NEGATIVE" if s.negative else f"kernel {s.kernel_dim}"
        print(f"  slice {tuple(rat_str(x) for x in s.weight)} dim {s.dim}: {tag}")
    if len(flagged) > 8:
        print(f"  ... {len(flagged) - 8} more flagged slices")
    agrees = verdict.unitary == (not report.has_negative)
    if not agrees:
        print("MISMATCH between classify and the oscillator oracle")
        return EXIT_INTERNAL
    return EXIT_OK if verdict.unitary else EXIT_NON_UNITARY


def cmd_tables(args):
    text = tables_mod.render_table(args.table, m=args.m, n=args.n)
    sys.stdout.write(text)
    if args.check:
        golden = os.path.join(os.path.dirname(__file__), "goldens", f"table{args.table}.txt")
        with open(golden) as fh:
            want = fh.read()
        if want != text:
            print("golden mismatch", file=sys.stderr)
            return EXIT_INTERNAL
    return EXIT_OK


def cmd_tensor(args):
    left = realize(_label_arg(args.left))
    right = realize(_label_arg(args.right))
    from .oscillator.tensor import tensor_decompose

    for lab in tensor_decompose(left, right):
        print(str(lab))
    return EXIT_OK


def cmd_selfcheck(args):
    import itertools

    from .partitions import partitions_bounded

    bad = 0
    checked = 0
    betas = [Fraction(k, 2) for k in range(0, 7)]
    for p, q, m in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (0, 2, 2), (2, 2, 1)]:
        for mu_l in partitions_bounded(max(p - 1, 0), 2):
            for tau in partitions_bounded(max(m - 1, 0), 2):
                for mu_r in partitions_bounded(max(q - 1, 0), 2):
                    for bl in betas if p else [Fraction(0)]:
                        for br in betas if q else [Fraction(0)]:
                            lab = RepLabel(p, q, m, mu_l, tau, mu_r, bl, br)
                            w = weight_from_label(lab, allow_nonunitary=True)
                            rep = plaquette_check(build_weight_lattice(w))
                            v = classify_supqm(lab)
                            checked += 1
                            if v.unitary != rep.ok or (
                                v.unitary and v.short != bool(rep.zeros)
                            ):
                                bad += 1
    print(f"plaquette/theorem agreement: {checked - bad}/{checked}")

    from .oscillator.capelli import capelli_identity_check

    cap = all(
        capelli_identity_check(P, g, 2)
        for P in (2,)
        for g in (Fraction(0), Fraction(1, 2))
    )
    print(f"capelli spot checks: {'ok' if cap else 'FAILED'}")

    from .oscillator.module import gram_positivity

    gram_ok = True
    for lab, expect in [
        (RepLabel(1, 1, 0, (), (), (), 0, Fraction(3, 2)), True),
        (RepLabel(2, 2, 0, (), (), (), 0, Fraction(1, 2)), False),
    ]:
        rep = gram_positivity(realize(lab, allow_nonunitary=True), cutoff=3)
        gram_ok &= (not rep.has_negative) == expect
    print(f"gram spot checks: {'ok' if gram_ok else 'FAILED'}")

    if bad or not cap or not gram_ok:
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="superdual",
        description="Exact unitarity classification for su(p,q|m) highest-weight representations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("classify", cmd_classify, help="unitarity verdict for a label")
    sp.add_argument("--label", required=True, help="label JSON (file or literal)")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = add("weight", cmd_weight, help="fundamental weight of a label in a grading")
    sp.add_argument("--label", required=True)
    sp.add_argument("--grading", help='target grading, e.g. "su(2,2|4)"')
    sp.add_argument("--format", choices=["text", "json"], default="json")
    sp.add_argument("--allow-nonunitary", action="store_true")

    sp = add("lattice", cmd_lattice, help="plaquette sign matrix of a weight")
    sp.add_argument("--weight", help="weight JSON (file or literal)")
    sp.add_argument("--label", help="alternatively a label JSON")
    sp.add_argument("--grading", help="re-read the lattice along this grading first")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = add("diagram", cmd_diagram, help="non-compact Young diagram of a label")
    sp.add_argument("--label", required=True)
    sp.add_argument("--grading")
    sp.add_argument("--P", type=int, help="request a larger colour count via iso moves")
    sp.add_argument("--format", choices=["ascii", "svg", "json"], default="ascii")

    sp = add("shorten", cmd_shorten, help="monomial shortening profile")
    sp.add_argument("--label", required=True)
    sp.add_argument("--P", type=int)

    sp = add("do-label", cmd_do_label, help="Dolan-Osborn label (su(2,2|4))")
    sp.add_argument("--label", required=True)
    sp.add_argument("--P", type=int)

    sp = add("verify", cmd_verify, help="oscillator-module Gram verification")
    sp.add_argument("--label", required=True)
    sp.add_argument("--cutoff", type=int, default=3)

    sp = add("tables", cmd_tables, help="regenerate the multiplet tables")
    sp.add_argument("--table", type=int, required=True, choices=range(1, 8))
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--check", action="store_true", help="diff against the shipped golden")

    sp = add("tensor", cmd_tensor, help="decompose a K-module tensor product")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)

    add("selfcheck", cmd_selfcheck, help="run the bounded equivalence suites")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
