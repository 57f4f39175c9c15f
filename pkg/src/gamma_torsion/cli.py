"""Command-line interface: ``gamma-torsion <subcommand> ...``.

Exit status 0 on success, 1 when a verification check fails, 2 on input
errors.  ``--json`` output has sorted keys and canonical polynomial strings.
"""

import argparse
import os
import sys

from . import hypersurface as hs
from .chain import homology, is_rationally_acyclic
from .cyclotomic import factor_cyclotomic
from .errors import GammaError, InputError, NotCyclotomicError
from .io import (
    bundled_dataset,
    complex_from_json,
    dumps,
    hbasis_from_json,
    load_dataset,
    matrix_from_json,
    matrix_to_json,
    read_json,
)
from .laurent import Ambiguity, canonical_representative, format_poly, format_ratfn
from .linalg import smith_normal_form
from .parser import parse_poly
from .singularity import brieskorn_charpoly, brieskorn_milnor_number, brieskorn_orders
from .torsion import torsion_exact

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# engine verdicts rather than malformed input
_FAILURE_CODES = {"NOT_CYCLOTOMIC", "DIVISIBILITY_VIOLATION", "BOUND_VIOLATION", "IDENTITY_VIOLATION"}


class Result:
    def __init__(self, text, data, status=EXIT_OK):
        self.text = text
        self.data = data
        self.status = status


def _use_color(stream):
    setting = os.environ.get("GAMMA_TORSION_COLOR", "auto").lower()
    if setting == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


# -- subcommands --------------------------------------------------------
def cmd_factor(args):
    p = parse_poly(args.poly)
    try:
        fac = factor_cyclotomic(p)
    except NotCyclotomicError as exc:
        partial = exc.partial.format() if exc.partial else "1"
        residual = format_poly(exc.residual)
        return Result(
            f"{format_poly(p)} is not a product of cyclotomic polynomials\n"
            f"  cyclotomic part: {partial}\n  residual: {residual}",
            {"input": format_poly(p), "cyclotomic": False, "partial": partial, "residual": residual},
            EXIT_FAIL,
        )
    return Result(
        f"{fac.format()} = {format_poly(p)}",
        {
            "input": format_poly(p),
            "cyclotomic": True,
            "factored": fac.format(),
            "factors": {str(m): e for m, e in fac.factors.items()},
            "unit": {"coefficient": str(fac.unit[0]), "exponent": fac.unit[1]},
        },
    )


def cmd_snf(args):
    A = matrix_from_json(read_json(args.matrix))
    S = smith_normal_form(A)
    facs = [format_poly(f) for f in S.invariant_factors]
    lines = [f"rank {S.rank}", "invariant factors:"] + [f"  d_{k + 1} = {f}" for k, f in enumerate(facs)]
    return Result(
        "\n".join(lines),
        {
            "rank": S.rank,
            "invariant_factors": facs,
            "D": matrix_to_json(S.D),
            "U": matrix_to_json(S.U),
            "V": matrix_to_json(S.V),
        },
    )


def _describe_module(mod):
    parts = []
    if mod.free_rank:
        parts.append("Γ" if mod.free_rank == 1 else f"Γ^{mod.free_rank}")
    parts += [f"Γ/({format_poly(f)})" for f in mod.torsion_factors]
    return " + ".join(parts) or "0"


def cmd_homology(args):
    C = complex_from_json(read_json(args.complex))
    prof = homology(C)
    lines, degrees = [], []
    for i, mod in enumerate(prof.modules):
        delta = format_poly(mod.order())
        lines.append(f"H_{i} = {_describe_module(mod)}    delta_{i} = {delta}")
        degrees.append(
            {
                "degree": i,
                "free_rank": mod.free_rank,
                "torsion_factors": [format_poly(f) for f in mod.torsion_factors],
                "alexander": delta,
            }
        )
    acyclic = prof.is_torsion()
    lines.append("rationally acyclic" if acyclic else "not rationally acyclic")
    return Result("\n".join(lines), {"degrees": degrees, "rationally_acyclic": acyclic})


def cmd_torsion(args):
    C = complex_from_json(read_json(args.complex))
    h = hbasis_from_json(read_json(args.hbasis)) if args.hbasis else None
    tau = canonical_representative(torsion_exact(C, h), args.mode)
    mode = "+-t^k" if args.mode is Ambiguity.PM_TK else "c*t^k"
    return Result(
        f"tau = {format_ratfn(tau)}  (modulo {mode})",
        {"torsion": format_ratfn(tau), "mode": args.mode.value, "rationally_acyclic": is_rationally_acyclic(C)},
    )


def cmd_charpoly(args):
    try:
        exps = tuple(int(a) for a in args.exponents)
        poly = brieskorn_charpoly(exps)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    fac = factor_cyclotomic(poly)
    return Result(
        f"{fac.format()} = {format_poly(poly)}",
        {
            "exponents": list(exps),
            "factored": fac.format(),
            "charpoly": format_poly(poly),
            "factors": {str(m): e for m, e in brieskorn_orders(exps).items()},
            "milnor_number": brieskorn_milnor_number(exps),
        },
    )


def _dataset(ref):
    if ref.startswith("builtin:"):
        return bundled_dataset(ref[len("builtin:"):])
    return load_dataset(ref)


def cmd_hypersurface(args):
    data = _dataset(args.data)
    if args.action == "verify":
        rep = hs.verify_corollary(data, args.mode)
        return Result(rep.to_text(color=_use_color(sys.stdout)), rep.to_dict(), EXIT_OK if rep.ok else EXIT_FAIL)
    solved = hs.solve(data)
    out = solved.to_dict()
    out["det_phi"] = format_ratfn(hs.det_phi(solved)) if solved.delta_n is not None else out.get("det_phi")
    text = "\n".join(f"{k} = {out[k]}" for k in ("delta_n", "det_phi") if out.get(k) is not None)
    return Result(text, out)


# -- entry point --------------------------------------------------------
def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p.add_argument(
        "--mode", choices=["pm", "c"], default=argparse.SUPPRESS, help="unit ambiguity: +-t^k (pm) or c*t^k (c)"
    )
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="gamma-torsion",
        description="Alexander polynomials, Reidemeister torsion and hypersurface identities over Q[t, t^-1].",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor a polynomial into cyclotomic polynomials")
    p.add_argument("poly")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of a matrix (JSON file)")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("homology", parents=[common], help="homology modules of a chain complex (JSON file)")
    p.add_argument("complex")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("torsion", parents=[common], help="Reidemeister torsion of a based complex")
    p.add_argument("complex")
    p.add_argument("--hbasis", help="JSON file of homology lifts per degree")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("charpoly", parents=[common], help="monodromy polynomial of a Brieskorn germ")
    p.add_argument("exponents", nargs="+")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("hypersurface", parents=[common], help="verify or solve the hypersurface identities")
    p.add_argument("action", choices=["verify", "solve"])
    p.add_argument("data", help="dataset JSON file, or builtin:<name>")
    p.set_defaults(func=cmd_hypersurface)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    args.mode = Ambiguity.parse(getattr(args, "mode", "pm"))
    try:
        res = args.func(args)
    except GammaError as exc:
        status = EXIT_FAIL if exc.code in _FAILURE_CODES else EXIT_INPUT
        if as_json:
            print(dumps({"error": exc.to_dict()}), file=stdout)
        else:
            print(f"error [{exc.code}]: {exc}", file=stderr)
        return status
    print(dumps(res.data) if as_json else res.text, file=stdout)
    return res.status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
