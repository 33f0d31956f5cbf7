"""Command-line surface.

Subcommands: eval, profile, table, verify, shift, monomial.  Exit codes:
0 success, 1 invalid input, 2 unsupported by the implemented formulas,
3 internal inconsistency (always a bug).

Coefficients are dense by default (--coeffs a0,a1,...,ak meaning exponents
0..k); --alphas switches to sparse input where the i-th coefficient pairs
with the i-th exponent and zero coefficients are rejected.  Over extension
bases (n > 1) each coefficient is a comma-separated residue vector and
terms are separated by semicolons.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .cyclotomic import ExpSumValue
from .evaluator import evaluate, verify
from .fieldcore import build_field_ctx
from .lifts import monomial_eval, shift_linear
from .nullity import QuadFunc, nullity_profile
from .quadform import DEFAULT_CAP
from .tabulate import diff_reference, generate_table, reference_path, rows_to_csv, rows_to_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSUPPORTED = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise errors.InvalidInput(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="quadsums", description="Exact exponential sums of quadratic functions over GF(p^n)")
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, coeffs=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--n", type=int, default=1, help="base extension degree")
        sp.add_argument("--modulus", help="base modulus, comma-separated residues, constant first")
        if coeffs:
            sp.add_argument("--coeffs", required=True, help="coefficients (dense unless --alphas)")
            sp.add_argument("--alphas", help="sparse exponent list a1,a2,...")
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")

    sp = sub.add_parser("eval", help="exact value of the full-field sum")
    common(sp)
    sp.add_argument("--m", type=int, required=True, help="extension multiplier")

    sp = sub.add_parser("profile", help="splitting exponent and nullity table")
    common(sp)

    sp = sub.add_parser("table", help="regenerate a nullity table")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--alpha-max", type=int, required=True)
    sp.add_argument("--diff", help="reference CSV to compare against (or 'table1'/'table2')")
    sp.add_argument("--out", help="write CSV/JSON here instead of stdout")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="csv")

    sp = sub.add_parser("verify", help="closed form vs brute-force enumeration")
    common(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp = sub.add_parser("shift", help="reduce the linearly shifted sum to the unshifted one")
    common(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--b", required=True, help="shift coefficient in GF(p^(m*n))")

    sp = sub.add_parser("monomial", help="closed form for a single-term function")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--N", type=int, required=True, help="total extension degree")
    sp.add_argument("--modulus", help="modulus for GF(p^N)")
    sp.add_argument("--a", required=True, help="coefficient in GF(p^N)")
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    return top


def _parse_func(args) -> QuadFunc:
    ctx = build_field_ctx(args.p, args.n, _parse_modulus(args))
    if args.n > 1:
        coeff_strs = args.coeffs.split(";")
        coeffs = [ctx.parse_elem(s) for s in coeff_strs]
    else:
        coeffs = [ctx.elem(int(t)) for t in args.coeffs.split(",")]
    alphas = getattr(args, "alphas", None)
    if alphas:
        exps = [int(t) for t in alphas.split(",")]
        if len(exps) != len(coeffs):
            raise errors.InvalidInput(
                f"{len(coeffs)} coefficients but {len(exps)} exponents"
            )
        if any(c.is_zero() for c in coeffs):
            raise errors.InvalidInput("sparse terms must have nonzero coefficients")
        return QuadFunc.from_terms(ctx, list(zip(coeffs, exps)))
    if not coeffs or coeffs[-1].is_zero():
        raise errors.InvalidInput("top dense coefficient must be nonzero")
    return QuadFunc.from_terms(ctx, [(c, j) for j, c in enumerate(coeffs)])


def _parse_modulus(args):
    mod = getattr(args, "modulus", None)
    if mod is None:
        return None
    return tuple(int(t) for t in mod.split(","))


def _parse_elem_flexible(ctx, text: str):
    """A single residue means a prime-field constant; otherwise a full
    coordinate vector is required."""
    tokens = text.split(",")
    if len(tokens) == 1:
        return ctx.elem(int(tokens[0]))
    return ctx.parse_elem(text)


def _value_json(f: QuadFunc, m: int, v: ExpSumValue) -> dict:
    return {
        "p": v.p,
        "n": f.n,
        "m": m,
        "N": v.N,
        "l": v.l,
        "t": v.t,
        "value_exact": v.exact_str(),
        "value_cyclotomic": list(v.to_cyclotomic().coords),
        "value_complex": [v.complex_value().real, v.complex_value().imag],
        "provenance": list(v.provenance),
    }


def _print_value(f: QuadFunc, m: int, v: ExpSumValue, fmt: str, out):
    if fmt == "json":
        json.dump(_value_json(f, m, v), out, indent=2)
        out.write("\n")
        return
    cyc = v.to_cyclotomic()
    z = v.complex_value()
    out.write(f"p={v.p} n={f.n} m={m} N={v.N}  modulus={_mod_str(f)}\n")
    out.write(f"t={v.t:+d}  l={v.l}\n")
    out.write(f"value = {v.exact_str()}\n")
    out.write(f"cyclotomic coords = {list(cyc.coords)}\n")
    out.write(f"complex ~ {z.real:.6f} {z.imag:+.6f}i\n")
    out.write("provenance:\n")
    for step in v.provenance:
        out.write(f"  - {step}\n")


def _mod_str(f: QuadFunc) -> str:
    return "none" if f.n == 1 else ",".join(map(str, f.ctx.modulus))


def _cmd_eval(args, out) -> int:
    f = _parse_func(args)
    v = evaluate(f, args.m)
    _print_value(f, args.m, v, args.format, out)
    return EXIT_OK


def _cmd_profile(args, out) -> int:
    f = _parse_func(args)
    prof = nullity_profile(f)
    if args.format == "json":
        json.dump(prof.to_json_dict(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        pairs = " ".join(f"({m},{l})" for m, l in prof.entries)
        coeffs = " ".join(str(c.coeffs[0]) if f.n == 1 else str(c) for c in f.dense_coeffs())
        out.write(f"{coeffs};{prof.s};{pairs}\n")
    else:
        out.write(f"s = {prof.s}\n")
        out.write("pairs: " + " ".join(f"({m},{l})" for m, l in prof.entries) + "\n")
    return EXIT_OK


def _cmd_table(args, out) -> int:
    rows = generate_table(args.p, args.alpha_max, jobs=args.jobs)
    payload = rows_to_csv(rows) if args.format != "json" else json.dumps(rows_to_json(rows), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    elif not args.diff:
        out.write(payload)
    if args.diff:
        path = reference_path(args.diff) if args.diff in ("table1", "table2") else args.diff
        rep = diff_reference(rows, path)
        out.write(str(rep) + "\n")
        if not rep.clean:
            return EXIT_INTERNAL
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    f = _parse_func(args)
    rep = verify(f, args.m, cap=args.cap)
    if args.format == "json":
        json.dump(
            {
                "equal": rep.equal,
                "closed_form": list(rep.closed_form.coords),
                "brute_force": list(rep.brute.coords),
                "value": _value_json(f, args.m, rep.value),
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(str(rep) + "\n")
    return EXIT_OK if rep.equal else EXIT_INTERNAL


def _cmd_shift(args, out) -> int:
    f = _parse_func(args)
    N = args.m * f.n
    ctx_big = build_field_ctx(f.p, N)
    b = _parse_elem_flexible(ctx_big, args.b)
    value = evaluate(f, args.m)
    sh = shift_linear(f, b, N, value)
    if args.format == "json":
        json.dump(
            {
                "zero": sh.zero,
                "phase": None if sh.zero else sh.phase,
                "base": _value_json(f, args.m, value),
                "cyclotomic": list(sh.to_cyclotomic().coords),
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif sh.zero:
        out.write("0 (the shifted sum vanishes)\n")
    else:
        out.write(f"zeta^(-{sh.phase}) * ({value.exact_str()})\n")
        out.write(f"cyclotomic coords = {list(sh.to_cyclotomic().coords)}\n")
    return EXIT_OK


def _cmd_monomial(args, out) -> int:
    ctx = build_field_ctx(args.p, args.N, _parse_modulus(args))
    a = _parse_elem_flexible(ctx, args.a)
    v = monomial_eval(a, args.alpha, args.N)
    case = v.provenance[0]["case"]
    if args.format == "json":
        payload = _value_json_monomial(args, v, case)
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        cyc = v.to_cyclotomic()
        out.write(f"value = {v.exact_str()}  (case {case})\n")
        if not any(cyc.coords[1:]):
            out.write(f"integer value = {cyc.coords[0]}\n")
        out.write(f"cyclotomic coords = {list(cyc.coords)}\n")
    return EXIT_OK


def _value_json_monomial(args, v: ExpSumValue, case: str) -> dict:
    return {
        "p": v.p,
        "N": v.N,
        "alpha": args.alpha,
        "a": args.a,
        "l": v.l,
        "t": v.t,
        "case": case,
        "value_exact": v.exact_str(),
        "value_cyclotomic": list(v.to_cyclotomic().coords),
        "value_complex": [v.complex_value().real, v.complex_value().imag],
    }


_COMMANDS = {
    "eval": _cmd_eval,
    "profile": _cmd_profile,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "shift": _cmd_shift,
    "monomial": _cmd_monomial,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "format", None) == "csv" and args.command in ("eval", "verify", "shift"):
            raise errors.InvalidInput("csv output is only available for table and profile")
        return _COMMANDS[args.command](args, out)
    except errors.Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (errors.InternalInconsistency, errors.ParityViolation, errors.DivisibilityViolated) as exc:
        print(f"internal inconsistency (bug): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (errors.QuadsumsError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
