"""``lmosplice`` command line.

Every command prints an echo of itself, its inputs and its exact outputs;
``--machine`` appends a block of ``key=value`` lines meant for scripts.
Exit codes: 0 success, 2 invalid input, 3 not a rational homology sphere,
4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Optional, Sequence

from . import verify as verify_mod
from .dedekind import ValidationError, dedekind_symbol
from .diagrams import graph, named
from .records import load_records, parse_framing, parse_rational
from .sl2z import Mat2, decompose, recompose, splice_recompose
from .splice import (
    K1,
    K2,
    NULL,
    ConsistencyError,
    NotQHS,
    casson_walker,
    extract_invariants,
    hopf_chain,
    is_qhs,
    kappa,
    lambda2_splice,
    lens,
    lens_closed_form,
    linking_matrix,
    rational_surgery,
    splice_lmo_general,
    splice_lmo_truncated,
    splice_space,
    wheeled_invariant,
)
from .tridiag import SingularMatrix, Tridiagonal, inverse_corners, kirby_melvin, signature_oracle, signature_recursive

EXIT_OK, EXIT_INVALID, EXIT_NOT_QHS, EXIT_INCONSISTENT = 0, 2, 3, 4


class Report:
    def __init__(self, argv: Sequence[str]):
        self.echo = "lmosplice " + " ".join(argv)
        self.inputs: list[tuple[str, object]] = []
        self.outputs: list[tuple[str, str, object]] = []

    def given(self, key: str, value) -> None:
        self.inputs.append((key, value))

    def out(self, label: str, value, key: Optional[str] = None) -> None:
        self.outputs.append((label, key or label, value))

    def render(self, machine: bool) -> str:
        lines = [f"$ {self.echo}"]
        lines += [f"  {k}: {_fmt(v)}" for k, v in self.inputs]
        lines += [f"{label} = {_fmt(v)}" for label, _, v in self.outputs]
        if machine:
            lines.append("[machine]")
            lines += [f"{key}={_fmt(v)}" for _, key, v in self.outputs]
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)) and not hasattr(v, "_fields"):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def _ints(values: Sequence[str]) -> list[int]:
    out = []
    for v in values:
        x = parse_rational(v)
        if x.denominator != 1:
            raise ValidationError(f"{v} is not an integer")
        out.append(int(x))
    return out


# ---------------------------------------------------------------- commands

def cmd_dedekind(a, rep: Report) -> None:
    p, q = _ints([a.p, a.q])
    rep.out(f"S({p}/{q})", dedekind_symbol(p, q), "S")


def cmd_decompose(a, rep: Report) -> None:
    m = Mat2(*_ints(a.entries))
    seq = decompose(m)
    if recompose(seq) != m:
        raise ConsistencyError("recomposition does not return the input")
    rep.given("matrix", m)
    rep.out("generators", seq)


def _tridiagonal(entries) -> Tridiagonal:
    return Tridiagonal([parse_rational(c) for c in entries])


def cmd_signature(a, rep: Report) -> None:
    t = _tridiagonal(a.entries)
    sig = signature_recursive(t)
    if sig != signature_oracle(t):
        raise ConsistencyError("recursive signature disagrees with diagonalization")
    rep.out("signature", sig)


def cmd_corners(a, rep: Report) -> None:
    t = _tridiagonal(a.entries)
    try:
        c = inverse_corners(t)
    except SingularMatrix:
        rep.out("singular", "yes")
        return
    rep.out("singular", "no")
    rep.out("inverse[1,1]", c.top_left, "top_left")
    rep.out(f"inverse[1,{len(t)}]", c.off_corner, "off_corner")
    rep.out(f"inverse[{len(t)},{len(t)}]", c.bottom_right, "bottom_right")


def cmd_kirby_melvin(a, rep: Report) -> None:
    t = Tridiagonal(_ints(a.entries))
    km = kirby_melvin(t)
    rep.out("3 sig - tr", km.lhs, "lhs")
    rep.out("dedekind side", km.rhs, "rhs")
    if km.lhs != km.rhs:
        raise ConsistencyError("Kirby-Melvin identity fails")


def _gluing(a) -> Mat2:
    p, q, r, s = _ints([a.p, a.q, a.r, a.s])
    return Mat2(p, r, q, s)


def cmd_chain(a, rep: Report) -> None:
    g = _gluing(a)
    f1, f2 = parse_framing(a.framing1), parse_framing(a.framing2)
    hc = hopf_chain(g)
    if splice_recompose(hc.chain) != g:
        raise ConsistencyError("chain does not recompose to the gluing")
    rep.given("gluing", g)
    rep.given("framings", (f1, f2))
    rep.out("chain", hc.chain)
    rep.out("parity", hc.parity)
    ok, lam = is_qhs(g, f1, f2)
    rep.out("lambda", lam)
    rep.out("linking matrix", linking_matrix(g, f1, f2, hc.chain), "linking")
    if not ok:
        raise NotQHS("lambda = 0")
    rep.out("kappa", kappa(g, f1, f2))


_NAMES = {graph.canonical(named.theta())[0]: "theta", graph.canonical(named.theta2())[0]: "theta2"}


def _label(space, mono) -> str:
    parts = []
    for i in mono:
        d = space.basis[i]
        parts.append(_NAMES.get(graph.canonical(d)[0], f"[{d.describe()}]"))
    return "*".join(parts) or "1"


def cmd_splice(a, rep: Report) -> None:
    records = load_records(a.file)
    try:
        k1, k2 = records[a.knot1], records[a.knot2]
    except KeyError as e:
        raise ValidationError(f"no record named {e.args[0]!r}") from None
    g = _gluing(a)
    rep.given("gluing", g)
    rep.given("knots", (k1.name, k2.name))
    ok, lam = is_qhs(g, k1.framing, k2.framing)
    if not ok:
        raise NotQHS(f"lambda = 0 for gluing {g}")
    chain = hopf_chain(g).chain
    if a.general:
        sp = splice_space(a.cap)
        zbar = [wheeled_invariant(replace(k, framing=NULL), sp, c) for k, c in ((k1, K1), (k2, K2))]
        z = splice_lmo_general(g, k1.framing, k2.framing, *zbar)
        lw, l2 = extract_invariants(z)
        if k1.framing.is_null() and k2.framing.is_null():
            _closed_form_check(g, k1, k2, lw, l2)
    else:
        res = splice_lmo_truncated(g, k1, k2, a.cap)
        lw, l2, z = res
        _closed_form_check(g, k1, k2, lw, l2)
    rep.out("lambda_W", lw, "lambda_w")
    rep.out("lambda_2", l2, "lambda2")
    rep.out("kappa", kappa(g, k1.framing, k2.framing))
    rep.out("lambda", lam)
    rep.out("chain", chain)
    if a.general:
        sp = z.space
        for m in sorted(z.terms, key=lambda m: (sp.mono_degree(m), _label(sp, m))):
            rep.out(f"coef[{_label(sp, m)}]", z.terms[m], f"coef[{_label(sp, m)}]")


def _closed_form_check(g, k1, k2, lw, l2) -> None:
    if (lw, l2) != (casson_walker(g, k1, k2), lambda2_splice(g, k1, k2)):
        raise ConsistencyError("diagrammatic and closed-form values differ")


def cmd_surgery(a, rep: Report) -> None:
    records = load_records(a.file)
    if a.knot not in records:
        raise ValidationError(f"no record named {a.knot!r}")
    r, s = _ints([a.r, a.s])
    rep.given("knot", a.knot)
    rep.given("coefficient", Fraction(r, s))
    res = rational_surgery(records[a.knot], r, s, a.cap)
    rep.out("lambda_W", res.lambda_w, "lambda_w")
    rep.out("lambda_2", res.lambda2, "lambda2")


def cmd_lens(a, rep: Report) -> None:
    r, s = _ints([a.r, a.s])
    res = lens(r, s)
    if (res.lambda_w, res.lambda2) != lens_closed_form(r, s):
        raise ConsistencyError("engine and closed form disagree")
    rep.out("lambda_W", res.lambda_w, "lambda_w")
    rep.out("lambda_2", res.lambda2, "lambda2")


def cmd_verify(a, rep: Report) -> int:
    names = list(verify_mod.SUITES) if "all" in a.suites else a.suites
    code = EXIT_OK
    for name in names:
        result = verify_mod.run(name, a.seed)
        rep.out(name, f"{'pass' if result.ok else 'FAIL'} {result.cases}", name)
        if not result.ok:
            code = EXIT_INCONSISTENT
    return code


# ---------------------------------------------------------------- parser

def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lmosplice", description="Exact low-degree LMO invariants of splices.")
    ap.add_argument("--machine", action="store_true", help="append a key=value block")
    # accepted after the subcommand too, without clobbering a leading flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(fn=fn)
        return p

    p = add("dedekind", cmd_dedekind, "Dedekind symbol S(p/q)")
    p.add_argument("p")
    p.add_argument("q")
    p = add("decompose", cmd_decompose, "factor (a b; c d) into generators (a, -1; 1, 0)")
    p.add_argument("entries", nargs=4, metavar="a b c d")
    for name, fn, help in (
        ("signature", cmd_signature, "signature of a unit tridiagonal matrix"),
        ("corners", cmd_corners, "corners of the inverse of a unit tridiagonal matrix"),
        ("kirby-melvin", cmd_kirby_melvin, "both sides of the Kirby-Melvin identity"),
    ):
        p = add(name, fn, help)
        p.add_argument("entries", nargs="+", metavar="c")

    def gluing_args(p):
        for x in "pqrs":
            p.add_argument(x)

    p = add("chain", cmd_chain, "Hopf chain, lambda and kappa of a gluing (p, r; q, s)")
    gluing_args(p)
    p.add_argument("--framing1", default="0/1")
    p.add_argument("--framing2", default="0/1")
    p = add("splice", cmd_splice, "lambda_W and lambda_2 of the splice of two records")
    p.add_argument("file")
    p.add_argument("knot1")
    p.add_argument("knot2")
    gluing_args(p)
    p.add_argument("--general", action="store_true", help="use the framed formula and print all coefficients")
    p.add_argument("--cap", type=int, default=5)
    p = add("surgery", cmd_surgery, "r/s surgery on a recorded knot")
    p.add_argument("file")
    p.add_argument("knot")
    p.add_argument("r")
    p.add_argument("s")
    p.add_argument("--cap", type=int, default=5)
    p = add("lens", cmd_lens, "invariants of the lens space L(r, s)")
    p.add_argument("r")
    p.add_argument("s")
    p = add("verify", cmd_verify, "run property suites")
    p.add_argument("suites", nargs="*", default=["all"], choices=["all", *verify_mod.SUITES])
    p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _parser().parse_args(argv)
    rep = Report(argv)
    try:
        code = args.fn(args, rep) or EXIT_OK
    except NotQHS as e:
        print(f"not a rational homology sphere: {e}", file=sys.stderr)
        return EXIT_NOT_QHS
    except ConsistencyError as e:
        print(f"consistency failure: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValidationError, ValueError, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    print(rep.render(args.machine))
    return code


if __name__ == "__main__":
    sys.exit(main())
