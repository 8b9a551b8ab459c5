"""Command-line front end: ``sp4gysin <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from sp4gysin import branching, char_ring, gysin, lie_structure, lvalues, modular_forms, nilpotent
from sp4gysin.char_ring import DominantWeight
from sp4gysin.errors import Sp4GysinError

OUTPUT_DIR_ENV = "SP4GYSIN_OUTPUT_DIR"


def _weight(text: str) -> DominantWeight:
    try:
        return DominantWeight.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"expected a,b with a >= b >= 0, got {text!r}") from exc


def _pair(text: str) -> tuple[int, int]:
    try:
        c, d = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected c,d, got {text!r}") from exc
    if c < 0 or d < 0:
        raise argparse.ArgumentTypeError("entries must be nonnegative")
    return c, d


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not x > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def _positive_int(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return x


def _decomposition_json(table: dict[DominantWeight, int]) -> list[dict]:
    return [{"pair": [w.a, w.b], "module": str(w), "mult": m} for w, m in table.items()]


def _laurent_json(p) -> list[dict]:
    return [{"exponent": list(e), "coeff": c} for e, c in p.sorted_terms()]


def cmd_decompose(args) -> dict:
    if args.tensor:
        c = char_ring.sp4_irrep_character(args.tensor[0])
        for w in args.tensor[1:]:
            c = c * char_ring.sp4_irrep_character(w)
        what = " x ".join(str(w) for w in args.tensor)
    elif args.lambda2:
        c, what = lie_structure.lambda2(char_ring.sp4_irrep_character(args.lambda2)), f"Lambda^2 {args.lambda2}"
    elif args.sym2:
        c, what = lie_structure.sym2(char_ring.sp4_irrep_character(args.sym2)), f"Sym^2 {args.sym2}"
    else:
        raise _Usage("decompose needs --tensor, --lambda2 or --sym2")
    table = char_ring.decompose_sp4(c)
    return {"input": what, "dimension": c.dimension(), "decomposition": _decomposition_json(table),
            "provenance": "computed"}


def cmd_free_lie(args) -> dict:
    if args.degree > args.max_degree:
        raise _Usage(f"degree {args.degree} exceeds --max-degree {args.max_degree}")
    piece = lie_structure.free_lie_graded(char_ring.sp4_irrep_character(args.generator), args.degree)
    out = {"generator": str(args.generator), "degree": args.degree, "dimension": piece.dimension,
           "witt_dimension": lie_structure.witt_dimension(args.generator.dimension, args.degree),
           "provenance": "computed"}
    if args.target is not None:
        out["target"] = str(args.target)
        out["multiplicity"] = lie_structure.multiplicity_in_free_lie(args.target, args.generator, args.degree)
    else:
        out["decomposition"] = _decomposition_json(lie_structure.free_lie_decomposition(args.generator, args.degree))
    return out


def cmd_branch(args) -> dict:
    w = args.weight
    return {
        "weight": str(w),
        "untwisted": [{"pair": list(k), "mult": m} for k, m in branching.restrict_untwisted(w).items()],
        "sigma_twisted_trace": _laurent_json(branching.sigma_twisted_trace(w)),
        "wreath": branching.restrict_wreath(w).to_json(),
        "provenance": "computed",
    }


def _table(t: dict) -> list[dict]:
    return [{"w": k, "dim": v} for k, v in sorted(t.items())]


def cmd_d11(args) -> dict:
    c = branching.cohomology_D11(args.weight, args.twist)
    return {"weight": str(args.weight), "twist": args.twist, "H0": _table(c.h0), "H1": _table(c.h1),
            "provenance": "computed"}


def cmd_kostant(args) -> dict:
    label = args.weight if args.parabolic == "Q" else args.weight.a + args.weight.b
    degrees = [args.degree] if args.degree is not None else range(4 if args.parabolic == "Q" else 2)
    rows = []
    for l in degrees:
        k = nilpotent.kostant_cohomology(args.parabolic, label, l)
        rows.append({"degree": l, "levi_weight": list(k.levi_weight), "sl2_label": k.sl2_label})
    return {"parabolic": args.parabolic, "weight": str(args.weight), "cohomology": rows, "provenance": "computed"}


def cmd_ce(args) -> dict:
    alg = nilpotent.ALGEBRAS[args.algebra]
    text = args.coefficient
    if args.algebra == "n_B":
        label = int(text)
    elif args.algebra == "n_P":
        label = _pair(text)
    else:
        label = _weight(text)
    res = nilpotent.ce(alg, label, representatives=False)
    rows = []
    for l in range(alg.dimension + 1):
        row = {"degree": l, "dimension": res.dimension(l),
               "weights": [{"torus": list(mu), "dim": d} for mu, d in sorted(res.by_degree[l].items())]}
        if args.algebra == "n_Q":
            row["levi"] = [{"gl2": list(k), "sl2_label": k[0] - k[1], "mult": m}
                           for k, m in res.levi_decomposition(l).items()]
        rows.append(row)
    return {"algebra": args.algebra, "coefficient": res.coefficient, "cohomology": rows,
            "euler_characteristic": res.euler_characteristic(), "provenance": "computed"}


def cmd_stalks(args) -> dict:
    return nilpotent.stalk_dimensions(args.weight).to_json()


def cmd_dim_cusp(args) -> dict:
    return {"weight": args.k, "s": modular_forms.dim_cusp_forms(args.k), "provenance": "computed"}


def _form(args):
    if args.form == "delta":
        return modular_forms.delta(args.precision)
    if args.form == "eisenstein":
        return modular_forms.eisenstein(args.weight, args.precision)
    return modular_forms.eigenform(args.weight, args.precision)


def cmd_qexp(args) -> dict:
    f = _form(args)
    return {"form": args.form, "weight": f.weight, "precision": f.precision,
            "coefficients": [str(c) for c in f.coefficients], "provenance": "computed"}


def cmd_lvalue(args) -> dict:
    f = modular_forms.eigenform(args.weight, args.precision)
    return lvalues.l_value(f, args.s, args.tolerance).to_json()


def cmd_period(args) -> dict:
    f = modular_forms.eigenform(args.weight, args.precision)
    return lvalues.period(f, args.n, args.tolerance).to_json()


def cmd_gysin(args) -> dict:
    return gysin.weight_ledger_report(args.weight, certify=args.certify).to_json()


def cmd_h1(args) -> dict:
    return {"weight": str(args.weight), "H1_M2": _table(gysin.h1_M2(args.weight)), "provenance": "computed"}


def cmd_h2_weights(args) -> dict:
    return {"weight": str(args.weight), "possible_weights": sorted(gysin.h2_M2_weights(args.weight)),
            "provenance": "computed"}


def cmd_relations(args) -> dict:
    rep = gysin.relation_candidates(certify=args.certify, max_weight=args.max_weight)
    return {
        "generator": rep.generator.to_json(),
        "candidates": [c.to_json() for c in rep.candidates],
        "degrees": rep.degrees,
        "free_lie_zero": [[c.weight.a, c.weight.b] for c in rep.ruled_out_by_free_lie()],
        "exclusions": [e.to_json() for e in rep.exclusions],
        "stable_beyond_sweep": rep.stable,
    }


def cmd_theorem_a(args) -> dict:
    return gysin.theorem_a(max_weight=args.max_weight, certify=args.certify)


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-weight", type=int, default=gysin.DEFAULT_SWEEP)
    common.add_argument("--tolerance", type=_positive_float, default=lvalues.DEFAULT_TOLERANCE)
    common.add_argument("--precision", type=_positive_int, default=lvalues.DEFAULT_PRECISION)
    common.add_argument("--certify", action="store_true")

    parser = argparse.ArgumentParser(prog="sp4gysin",
                                     description="Sp4 character calculus and Gysin weight bookkeeping in genus two.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("decompose", cmd_decompose, "decompose tensor products, Lambda^2 or Sym^2 of irreducibles")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--tensor", nargs="+", type=_weight, metavar="A,B")
    g.add_argument("--lambda2", type=_weight, metavar="A,B")
    g.add_argument("--sym2", type=_weight, metavar="A,B")

    p = add("free-lie", cmd_free_lie, "graded pieces of the free Lie algebra on V_{a+b}")
    p.add_argument("--generator", type=_weight, default=DominantWeight(2, 2))
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--target", type=_weight)
    p.add_argument("--max-degree", type=_positive_int, default=lie_structure.DEFAULT_DEGREE_CAP)

    for name, func, help_text in (
        ("branch", cmd_branch, "restriction to SL2 x SL2 x| S2"),
        ("stalks", cmd_stalks, "boundary stalk dimensions"),
        ("gysin", cmd_gysin, "Gysin weight ledger report"),
        ("h1", cmd_h1, "weight-graded H^1(M2, V)"),
        ("h2-weights", cmd_h2_weights, "possible weights of H^2(M2, V)"),
    ):
        add(name, func, help_text).add_argument("weight", type=_weight, metavar="A,B")

    p = add("d11-cohomology", cmd_d11, "weight-graded H^0, H^1 of D11")
    p.add_argument("weight", type=_weight, metavar="A,B")
    p.add_argument("--twist", type=int, default=0)

    p = add("kostant", cmd_kostant, "Kostant's theorem for n_Q (or n_B)")
    p.add_argument("weight", type=_weight, metavar="A,B")
    p.add_argument("--parabolic", choices=("Q", "B"), default="Q")
    p.add_argument("--degree", type=int)

    p = add("ce", cmd_ce, "Chevalley-Eilenberg cohomology")
    p.add_argument("--algebra", choices=sorted(nilpotent.ALGEBRAS), default="n_Q")
    p.add_argument("coefficient", help="m for n_B, c,d for n_P, a,b for n_Q")

    p = add("dim-cusp", cmd_dim_cusp, "dimension of level-one cusp forms")
    p.add_argument("k", type=int)

    p = add("qexp", cmd_qexp, "q-expansion of a level-one form")
    p.add_argument("--form", choices=("delta", "eisenstein", "eigenform"), default="delta")
    p.add_argument("--weight", type=int, default=12)

    p = add("lvalue", cmd_lvalue, "certified L-value of an eigenform")
    p.add_argument("--weight", type=int, default=12)
    p.add_argument("--s", type=float, required=True)

    p = add("period", cmd_period, "period r_n of an eigenform")
    p.add_argument("--weight", type=int, default=12)
    p.add_argument("--n", type=int, required=True)

    add("relations", cmd_relations, "relation candidates for H_2(u_2)")
    add("theorem-a", cmd_theorem_a, "generator and relation bound end to end")
    return parser


def render_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return pad + ", ".join(json.dumps(v) for v in value)
        return "\n".join(f"{pad}-\n{render_text(v, indent + 1)}" for v in value)
    return pad + json.dumps(value)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except _Usage as exc:
        parser.print_usage(stderr)
        print(f"sp4gysin: error: {exc}", file=stderr)
        return 2
    except Sp4GysinError as exc:
        err = {"error": exc.code, "message": str(exc)}
        print(json.dumps(err, sort_keys=True) if args.format == "json" else f"{exc.code}: {exc}", file=stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": "E_INPUT", "message": str(exc)}), file=stderr)
        return 1
    text = json.dumps(result, indent=2, sort_keys=False) if args.format == "json" else render_text(result)
    print(text, file=stdout)
    out_dir = os.environ.get(OUTPUT_DIR_ENV)
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        suffix = "json" if args.format == "json" else "txt"
        (path / f"{args.command}.{suffix}").write_text(text + "\n", encoding="utf-8")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
