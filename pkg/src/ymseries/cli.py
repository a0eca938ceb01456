"""Command-line interface: compute series and run the verification suites.

Verbs:
  poincare            closed-form flat/central series of a group and class
  series              truncated power-series coefficients of the same
  stratum             series of a single stratum index
  strata-list         enumerate stratum indices with codimensions
  components          nonorientable component classification (JSON-able)
  verify-recursion    stratification identity for one bundle
  verify-isomorphisms the four exceptional-isomorphism series identities
  verify-appendix     cone-sum and alternating-identity property suites

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Diagnostics go to stderr; results to stdout.  The default truncation degree
for verification verbs is 40, overridable by --order or the environment
variable YM_TRUNCATION_DEFAULT.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .closedforms import (
    flat_series,
    so_even_flat,
    so_odd_flat,
    sp_flat,
    sun_flat,
)
from .exactalg import latex_ratfun, ratfun_eq, ratfun_to_json, render_ratfun, series_expand
from .inversion import ConeSumSpec, cone_sum_closed, cone_sum_truncated, verify_langlands
from .nonorient import (
    NonorientablePoint,
    classify_components,
    decomposition_render,
)
from .rootsys import GroupSpec, validate_topclass
from .strata import AtiyahBottPoint, enumerate_ab_points, stratum_series, verify_recursion


class UsageError(Exception):
    pass


def _default_truncation() -> int:
    raw = os.environ.get("YM_TRUNCATION_DEFAULT", "40")
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"YM_TRUNCATION_DEFAULT must be an integer, got {raw!r}") from exc


def _group(args) -> GroupSpec:
    try:
        return GroupSpec(args.group, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _topclass(args, g: GroupSpec) -> int:
    if g.family in ("u", "su"):
        c = args.degree if args.degree is not None else 0
    elif g.family in ("so-odd", "so-even"):
        c = args.w2
    else:
        c = 0
    try:
        validate_topclass(g, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return c


def _parse_int_list(text: str, what: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"{what} must be a comma-separated integer list") from exc


def _emit_ratfun(f, fmt: str, meta: dict) -> str:
    if fmt == "latex":
        return latex_ratfun(f)
    if fmt == "json":
        payload = dict(meta)
        payload["series"] = ratfun_to_json(f)
        return json.dumps(payload, sort_keys=True)
    return render_ratfun(f)


def cmd_poincare(args) -> int:
    g = _group(args)
    c = _topclass(args, g)
    meta = {"group": g.describe(), "genus": args.genus, "topclass": c}
    if args.engine == "specialized":
        f = flat_series(g, c, args.genus)
    elif args.engine == "general":
        f = flat_series(g, c, args.genus, engine="general")
    else:
        f = flat_series(g, c, args.genus)
        general = flat_series(g, c, args.genus, engine="general")
        if not ratfun_eq(f, general):
            print("engine disagreement between specialized and general routes", file=sys.stderr)
            return 1
    print(_emit_ratfun(f, args.format, meta))
    return 0


def cmd_series(args) -> int:
    g = _group(args)
    c = _topclass(args, g)
    f = flat_series(g, c, args.genus)
    coeffs = series_expand(f, args.order).coeffs
    if args.format == "json":
        print(
            json.dumps(
                {
                    "group": g.describe(),
                    "genus": args.genus,
                    "topclass": c,
                    "order": args.order,
                    "coefficients": list(coeffs),
                },
                sort_keys=True,
            )
        )
    else:
        print(" ".join(str(x) for x in coeffs))
    return 0


def cmd_stratum(args) -> int:
    g = _group(args)
    comp = _parse_int_list(args.composition, "--composition")
    labels = _parse_int_list(args.labels, "--labels")
    tail = {"none": "none", "zero": "zero_block", "minus": "minus_last"}[args.tail]
    try:
        pt = AtiyahBottPoint(g.family, comp, labels, tail)
        f = stratum_series(g, pt, args.genus, component=args.component)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    meta = {
        "group": g.describe(),
        "genus": args.genus,
        "composition": list(comp),
        "labels": list(labels),
        "tail": tail,
    }
    print(_emit_ratfun(f, args.format, meta))
    return 0


def cmd_strata_list(args) -> int:
    g = _group(args)
    c = _topclass(args, g)
    pts = enumerate_ab_points(g, c, args.genus, args.codim_bound)
    if args.format == "json":
        rows = [
            {
                "composition": list(p.composition),
                "labels": list(p.labels),
                "tail": p.tail_kind,
                "codim": d,
            }
            for p, d in pts
        ]
        print(json.dumps({"group": g.describe(), "topclass": c, "strata": rows}, sort_keys=True))
    else:
        for p, d in pts:
            comp = ",".join(str(x) for x in p.composition)
            labels = ",".join(str(x) for x in p.labels)
            print(f"codim={d}\tcomposition=({comp})\tlabels=({labels})\ttail={p.tail_kind}")
    return 0


def cmd_components(args) -> int:
    g = _group(args)
    comp = _parse_int_list(args.composition, "--composition")
    labels = _parse_int_list(args.labels, "--labels")
    try:
        pt = NonorientablePoint(
            g.family, comp, labels, args.zero_tail, args.surface_i, args.minus_last
        )
        report = classify_components(g, pt)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(decomposition_render(report))
    return 0


def cmd_verify_recursion(args) -> int:
    g = _group(args)
    c = _topclass(args, g)
    report = verify_recursion(g, c, args.genus, args.order)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        status = "holds" if report.holds else "FAILS"
        print(
            f"{g.describe()} class {c} genus {args.genus}: identity {status} "
            f"to degree {args.order} using {report.strata_used} strata"
        )
    return 0 if report.holds else 1


def cmd_verify_isomorphisms(args) -> int:
    ell = args.genus
    checks = [
        ("Sp(1) = SU(2)", ratfun_eq(sp_flat(1, ell), sun_flat(2, ell))),
        ("Sp(1) = Spin(3)", ratfun_eq(sp_flat(1, ell), so_odd_flat(1, ell, 0))),
        ("Sp(2) = Spin(5)", ratfun_eq(sp_flat(2, ell), so_odd_flat(2, ell, 0))),
        (
            "Spin(4) = SU(2) x SU(2)",
            ratfun_eq(so_even_flat(2, ell, 0), sun_flat(2, ell) * sun_flat(2, ell)),
        ),
        ("Spin(6) = SU(4)", ratfun_eq(so_even_flat(3, ell, 0), sun_flat(4, ell))),
    ]
    ok = True
    for name, holds in checks:
        print(f"{name}: {'ok' if holds else 'FAIL'}")
        ok = ok and holds
    return 0 if ok else 1


def cmd_verify_appendix(args) -> int:
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.cone_samples):
        k = rng.randint(1, 3)
        weights, classes = [], []
        for _ in range(k):
            p = rng.randint(1, 6)
            den = rng.choice([d for d in range(1, 7) if p % d == 0])
            classes.append(Fraction(rng.randint(0, den - 1), den))
            weights.append(p)
        spec = ConeSumSpec(tuple(weights), tuple(classes))
        if cone_sum_truncated(spec, args.order) != series_expand(
            cone_sum_closed(spec), args.order
        ):
            print(f"cone sum mismatch at {spec}", file=sys.stderr)
            ok = False
    print(f"cone sums: {args.cone_samples} random specs to degree {args.order}: "
          f"{'ok' if ok else 'FAIL'}")
    for rank in (1, 2, 3):
        holds = verify_langlands(rank, samples=args.langlands_samples, seed=args.seed)
        print(f"alternating identities, rank {rank}: {'ok' if holds else 'FAIL'}")
        ok = ok and holds
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ymseries",
        description="exact equivariant series of Yang-Mills strata for classical groups",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_group_flags(p, genus=True):
        p.add_argument(
            "--group",
            required=True,
            choices=["u", "su", "so-odd", "so-even", "sp", "spin-odd", "spin-even"],
        )
        p.add_argument("--rank", type=int, required=True, help="the rank parameter n")
        if genus:
            p.add_argument("--genus", type=int, required=True)
        p.add_argument("--degree", type=int, default=None, help="bundle degree (u only)")
        p.add_argument("--w2", type=int, default=0, choices=[0, 1], help="orthogonal bundle class")

    p = sub.add_parser("poincare", help="closed-form flat/central series")
    add_group_flags(p)
    p.add_argument("--engine", choices=["specialized", "general", "both"], default="both")
    p.add_argument("--format", choices=["text", "latex", "json"], default="text")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("series", help="truncated series coefficients")
    add_group_flags(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("stratum", help="series of one stratum")
    add_group_flags(p)
    p.add_argument("--composition", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--tail", choices=["none", "zero", "minus"], default="none")
    p.add_argument("--component", choices=["plus", "minus"], default=None)
    p.add_argument("--format", choices=["text", "latex", "json"], default="text")
    p.set_defaults(func=cmd_stratum)

    p = sub.add_parser("strata-list", help="enumerate strata with codimensions")
    add_group_flags(p)
    p.add_argument("--codim-bound", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_strata_list)

    p = sub.add_parser("components", help="nonorientable component classification")
    add_group_flags(p, genus=False)
    p.add_argument("--surface-i", type=int, choices=[1, 2], required=True)
    p.add_argument("--composition", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--zero-tail", action="store_true")
    p.add_argument("--minus-last", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("verify-recursion", help="stratification identity for one bundle")
    add_group_flags(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify_recursion)

    p = sub.add_parser("verify-isomorphisms", help="exceptional isomorphism identities")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_verify_isomorphisms)

    p = sub.add_parser("verify-appendix", help="cone-sum and alternating-identity suites")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--cone-samples", type=int, default=50)
    p.add_argument("--langlands-samples", type=int, default=8)
    p.set_defaults(func=cmd_verify_appendix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "order") and args.order is None:
            args.order = _default_truncation()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
