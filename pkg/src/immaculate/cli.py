"""Command-line front end: compute, convert, count, enumerate, and verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compositions import check_composition, is_partition
from .errors import PreconditionError, ResourceLimitError
from .linear import LinComb
from .nsym import (
    H_to_immaculate,
    forgetful_chi,
    immaculate_to_H,
    product_in_S_oracle,
)
from .pieri import left_pieri, right_pieri
from .schur import h_to_schur
from .sweeps import SUITES, default_max_degree
from .tableaux import (
    SkewTableau,
    count_immaculate_LR,
    enumerate_T_alpha_beta,
    enumerate_skew_immaculate,
    is_semistandard,
    is_yamanouchi,
    signed_product,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(PreconditionError):
    pass


def parse_composition(text: str) -> tuple:
    """Comma-separated positive integers; '0', '' or '[]' denote the empty
    composition."""
    text = text.strip()
    if text in ("", "0", "[]"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse composition {text!r}")
    try:
        return check_composition(parts)
    except PreconditionError:
        raise UsageError(f"not a composition: {text!r}")


def parse_vector(text: str) -> tuple:
    """Comma-separated nonnegative integers (content vectors allow zeros)."""
    text = text.strip()
    if text in ("", "[]"):
        return ()
    try:
        entries = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}")
    if any(e < 0 for e in entries):
        raise UsageError(f"negative entry in {text!r}")
    return entries


def parse_basis_index(text: str) -> tuple:
    """'S:2,4' or 'H:3' -> (basis, composition)."""
    if ":" not in text:
        raise UsageError(f"expected BASIS:parts, got {text!r}")
    basis, _, rest = text.partition(":")
    if basis not in ("H", "S"):
        raise UsageError(f"basis must be H or S, got {basis!r}")
    return basis, parse_composition(rest)


def emit_combination(f: LinComb, fmt: str):
    if fmt == "json":
        print(json.dumps(f.to_json_dict()))
    else:
        print(str(f))


def _as_S(basis: str, index: tuple) -> LinComb:
    if basis == "S":
        return LinComb.monomial("S", index)
    return H_to_immaculate(LinComb.monomial("H", index))


def cmd_product(args) -> int:
    lbasis, left = parse_basis_index(args.left)
    rbasis, right = parse_basis_index(args.right)
    if args.method == "tableau":
        if lbasis != "S" or rbasis != "S":
            raise UsageError("the tableau method needs S factors on both sides")
        result = signed_product(left, right)
    elif args.method == "closed-form":
        if lbasis != "H" and not (lbasis == "S" and len(left) <= 1):
            raise UsageError(
                "the closed form needs a single-part left factor (H_s or S_(s))"
            )
        if rbasis != "S":
            raise UsageError("the closed form needs an S right factor")
        if not left:
            result = LinComb.monomial("S", right)
        else:
            result = left_pieri(left[0], right)
    else:
        fl, fr = _as_S(lbasis, left), _as_S(rbasis, right)
        result = LinComb("S")
        for a, ca in fl.items():
            for b, cb in fr.items():
                result = result + product_in_S_oracle(a, b).scaled(ca * cb)
    emit_combination(result, args.format)
    return EXIT_OK


def cmd_convert(args) -> int:
    basis, index = parse_basis_index(args.source)
    f = LinComb.monomial(basis, index)
    target = args.to
    if target == basis:
        result = f
    elif (basis, target) == ("H", "S"):
        result = H_to_immaculate(f)
    elif (basis, target) == ("S", "H"):
        result = immaculate_to_H(index)
    elif (basis, target) == ("H", "h"):
        result = forgetful_chi(f)
    elif (basis, target) == ("S", "h"):
        result = forgetful_chi(immaculate_to_H(index))
    elif (basis, target) == ("S", "s"):
        result = h_to_schur(forgetful_chi(immaculate_to_H(index)))
    elif (basis, target) == ("H", "s"):
        result = h_to_schur(forgetful_chi(f))
    else:
        raise UsageError(f"cannot convert basis {basis!r} to {target!r}")
    emit_combination(result, args.format)
    return EXIT_OK


def cmd_coeff(args) -> int:
    alpha = parse_composition(args.alpha)
    beta = parse_composition(args.beta)
    gamma = parse_composition(args.gamma)
    if args.method == "tableau":
        if not is_partition(beta):
            raise UsageError("the tableau method needs a partition beta")
        value = count_immaculate_LR(alpha, beta, gamma)
    elif args.method == "closed-form":
        if len(alpha) != 1:
            raise UsageError("the closed form needs a single-part alpha")
        value = left_pieri(alpha[0], beta).coefficient(gamma)
    else:
        from .nsym import structure_constant

        value = structure_constant(alpha, beta, gamma)
    print(value)
    return EXIT_OK


def cmd_right_pieri(args) -> int:
    alpha = parse_composition(args.alpha)
    emit_combination(right_pieri(alpha, args.s), args.format)
    return EXIT_OK


def cmd_left_pieri(args) -> int:
    beta = parse_composition(args.beta)
    emit_combination(left_pieri(args.s, beta), args.format)
    return EXIT_OK


def render_tableau_ascii(t: SkewTableau) -> str:
    lines = []
    for r, row in enumerate(t.rows, 1):
        cells = ["."] * t.inner_at(r) + [str(e) for e in row]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def render_tableau_latex(t: SkewTableau) -> str:
    rows = []
    for r, row in enumerate(t.rows, 1):
        cells = ["\\none"] * t.inner_at(r) + [str(e) for e in row]
        rows.append(" & ".join(cells))
    body = " \\\\\n".join(rows)
    return "\\begin{ytableau}\n" + body + "\n\\end{ytableau}"


def tableau_json_dict(t: SkewTableau, sigma=None):
    data = {
        "inner": list(t.inner),
        "rows": [list(r) for r in t.rows],
        "outer": list(t.shape_composition()),
    }
    if sigma is not None:
        data["sigma"] = list(sigma.images)
        data["sign"] = sigma.sign
    return data


def cmd_tableaux(args) -> int:
    inner = parse_composition(args.inner)
    if (args.content is None) == (args.beta is None):
        raise UsageError("exactly one of --content and --beta is required")
    if args.beta is not None:
        beta = parse_composition(args.beta)
        pairs = enumerate_T_alpha_beta(inner, beta)
    else:
        content_vec = parse_vector(args.content)
        pairs = [(t, None) for t in enumerate_skew_immaculate(inner, content_vec)]

    shape = parse_composition(args.shape) if args.shape else None
    selected = []
    for t, sigma in pairs:
        if shape is not None and t.shape_composition() != shape:
            continue
        if args.yamanouchi and not is_yamanouchi(t):
            continue
        if args.semistandard and not is_semistandard(t):
            continue
        selected.append((t, sigma))

    if args.format == "json":
        print(json.dumps([tableau_json_dict(t, s) for t, s in selected]))
        return EXIT_OK
    render = render_tableau_latex if args.format == "latex" else render_tableau_ascii
    for i, (t, sigma) in enumerate(selected):
        if i:
            print()
        print(render(t))
        if sigma is not None:
            print(f"sigma = {tuple(sigma.images)}  sign = {sigma.sign:+d}")
    print(f"# {len(selected)} tableau{'x' if len(selected) != 1 else ''}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}"
        )
    max_size = args.max_size if args.max_size is not None else default_max_degree()
    witness = SUITES[args.suite](max_size)
    if args.suite == "saturation-nsym":
        from .sweeps import COUNTEREXAMPLE

        a, b, g, n = COUNTEREXAMPLE
        print(
            f"witness: C for alpha={a}, beta={b}, gamma={g} is 0 "
            f"but is 1 after scaling all three by N={n}"
        )
    if witness is None:
        print(f"suite {args.suite}: pass (max-size {max_size})")
        return EXIT_OK
    print(f"suite {args.suite}: FAIL: {witness}")
    return EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immaculate",
        description="Exact computations in the Schur-like basis of "
        "noncommutative symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("product", help="expand a product of basis elements")
    p.add_argument("--left", required=True, metavar="BASIS:PARTS")
    p.add_argument("--right", required=True, metavar="BASIS:PARTS")
    p.add_argument(
        "--method", choices=("oracle", "tableau", "closed-form"), default="oracle"
    )
    add_format(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("convert", help="change the basis of a monomial")
    p.add_argument("source", metavar="BASIS:PARTS")
    p.add_argument("--to", required=True, choices=("H", "S", "h", "s"))
    add_format(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("coeff", help="a single structure constant")
    p.add_argument("-a", "--alpha", required=True)
    p.add_argument("-b", "--beta", required=True)
    p.add_argument("-g", "--gamma", required=True)
    p.add_argument(
        "--method", choices=("oracle", "tableau", "closed-form"), default="oracle"
    )
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("right-pieri", help="expand S_alpha * H_s")
    p.add_argument("--alpha", required=True)
    p.add_argument("--s", required=True, type=int)
    add_format(p)
    p.set_defaults(func=cmd_right_pieri)

    p = sub.add_parser("left-pieri", help="expand H_s * S_beta")
    p.add_argument("--s", required=True, type=int)
    p.add_argument("--beta", required=True)
    add_format(p)
    p.set_defaults(func=cmd_left_pieri)

    p = sub.add_parser("tableaux", help="enumerate skew immaculate tableaux")
    p.add_argument("--inner", default="")
    p.add_argument("--content", help="exact content vector (zeros allowed)")
    p.add_argument(
        "--beta",
        help="enumerate the signed family for this beta and report sigma",
    )
    p.add_argument("--shape", help="keep only this outer shape")
    p.add_argument("--yamanouchi", action="store_true")
    p.add_argument("--semistandard", action="store_true")
    add_format(p, choices=("text", "json", "latex"))
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
