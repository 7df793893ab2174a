"""Command-line front end: ``kleinian-rp <command> ...``."""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import sys
from dataclasses import dataclass

from . import discreteness as disc
from . import orbifolds, realization
from .discreteness import ConditionViolated, SearchBounds
from .trace_core import InvalidRotation, Parameters, reduce_to_primitive

EXIT_CODES = {disc.DISCRETE: 0, disc.NOT_DISCRETE: 1, disc.NOT_CLASS_D: 2, disc.UNRESOLVED: 3}
EXIT_USAGE = 64
EXIT_DOMAIN = 65


@dataclass(frozen=True)
class CliConfig:
    tolerance: float = 1e-9
    relator_tolerance: float = 1e-8
    int_bound: int = 200
    census_bound: int = 50
    output: str = "text"

    def __post_init__(self):
        if not (self.tolerance > 0 and self.relator_tolerance > 0):
            raise ValueError("tolerances must be positive")
        if self.int_bound < 3 or self.census_bound < 3:
            raise ValueError("bounds must be at least 3")

    @property
    def bounds(self) -> SearchBounds:
        return SearchBounds(self.int_bound, self.tolerance)


# ---------------------------------------------------------------------------
# Real-number expressions such as "-4*sin(pi/7)^2"

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_FUNCS = {"sin": math.sin, "cos": math.cos, "sqrt": math.sqrt}
_NAMES = {"pi": math.pi, "sqrt5": math.sqrt(5)}


def parse_real(text: str) -> float:
    """Evaluate literals, + - * / ^, sin, cos, sqrt, pi and sqrt5."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        value = float(_eval(tree.body))
    except (SyntaxError, ValueError, TypeError, ZeroDivisionError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r}: {exc}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def _eval(node):
    if isinstance(node, ast.Constant) and type(node.value) in (int, float):
        return node.value
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left), _eval(node.right))
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id in _FUNCS and len(node.args) == 1 and not node.keywords):
        return _FUNCS[node.func.id](_eval(node.args[0]))
    raise ValueError(f"unsupported expression element {ast.dump(node)}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, allow_nan=False)


# ---------------------------------------------------------------------------
# Commands; each returns (exit code, json payload, text)


def _params(args) -> Parameters:
    return Parameters(args.beta, args.beta_prime, args.gamma)


def _result_text(res: disc.ClassificationResult) -> str:
    lines = [res.verdict]
    lines += [f"  {m}" for m in res.matches]
    if res.reason:
        lines.append(f"  reason: {res.reason}")
    if res.reduced is not None:
        lines.append("  primitive parameters: %r %r %r" % res.reduced.as_tuple())
    return "\n".join(lines)


def cmd_classify(args, cfg: CliConfig):
    res = disc.classify(_params(args), cfg.bounds)
    return EXIT_CODES[res.verdict], res.to_json(), _result_text(res)


def cmd_realize(args, cfg: CliConfig):
    pair = realization.realize(_params(args))
    text = f"F = {pair.F}\nG = {pair.G}\nmax parameter error: {pair.max_param_error():.3e}"
    return 0, pair.to_json(), text


def cmd_verify(args, cfg: CliConfig):
    res = disc.classify(_params(args), cfg.bounds)
    if res.verdict != disc.DISCRETE:
        return EXIT_CODES[res.verdict], {"classification": res.to_json()}, _result_text(res)
    inst = res.matches[0]
    report = realization.verify_relators(inst, cfg.relator_tolerance)
    payload = {"instance": inst.to_json(), "report": report.to_json()}
    lines = [f"{inst}", f"{report.status}: max relator deviation {report.max_deviation:.3e}"]
    lines += [f"  {c.label}^{c.exponent} [{c.kind}] {c.deviation:.3e} {'ok' if c.ok else 'FAIL'}"
              for c in report.checks]
    return (0 if report.passed else 1), payload, "\n".join(lines)


def cmd_two_elliptic(args, cfg: CliConfig):
    if args.gamma_from_clause3:
        beta = -4 * math.sin(math.pi / args.n) ** 2
        gamma = -(beta + 2) ** 2
    elif args.gamma is not None:
        gamma = args.gamma
    else:
        raise argparse.ArgumentTypeError("give --gamma or --gamma-from-clause3")
    res = disc.two_elliptic_discrete(args.n, args.m, gamma, cfg.bounds)
    return EXIT_CODES[res.verdict], res.to_json(), _result_text(res)


def cmd_census(args, cfg: CliConfig):
    kind = "compact" if args.compact else "cusped" if args.cusped else "all"
    entries = orbifolds.finite_volume_census(kind, args.schema, args.census_bound or cfg.census_bound)
    return 0, [e.to_json() for e in entries], "\n".join(str(e) for e in entries)


def cmd_gram(args, cfg: CliConfig):
    det = orbifolds.gram_det(args.n, args.m, args.q)
    hyp = orbifolds.is_hyperbolic(args.n, args.m, args.q)
    return 0, {"det": det, "hyperbolic": hyp}, f"det = {det!r}\nhyperbolic: {str(hyp).lower()}"


def cmd_reduce(args, cfg: CliConfig):
    r, g = reduce_to_primitive(args.n, args.q, args.gamma)
    return 0, {"r": r, "gamma": g}, f"r = {r}\ngamma' = {g!r}"


def cmd_enumerate(args, cfg: CliConfig):
    insts = list(disc.enumerate_instances(args.row, args.max_int, tol=cfg.tolerance))
    return 0, [i.to_json() for i in insts], "\n".join(str(i) for i in insts)


# ---------------------------------------------------------------------------


def _triple(p):
    for name in ("beta", "beta_prime", "gamma"):
        p.add_argument(name, type=parse_real)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kleinian-rp",
                                     description="Discreteness of real-parameter two-generator groups.")
    parser.add_argument("--tolerance", type=float, default=1e-9)
    parser.add_argument("--relator-tolerance", type=float, default=1e-8)
    parser.add_argument("--bound", type=int, default=200, help="integer search bound")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide discreteness of (beta, beta', gamma)")
    _triple(p)
    p.set_defaults(fn=cmd_classify)
    p = sub.add_parser("realize", help="normal-form matrices for (beta, beta', gamma)")
    _triple(p)
    p.set_defaults(fn=cmd_realize)
    p = sub.add_parser("verify", help="classify, realize and evaluate the relators")
    _triple(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("two-elliptic", help="two primitive elliptic generators")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--gamma", type=parse_real)
    p.add_argument("--gamma-from-clause3", action="store_true",
                   help="use gamma = -(beta + 2)^2")
    p.set_defaults(fn=cmd_two_elliptic)

    p = sub.add_parser("census", help="finite-volume orbifolds")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--compact", action="store_true")
    g.add_argument("--cusped", action="store_true")
    p.add_argument("--schema")
    p.add_argument("--census-bound", type=int, default=None)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("gram", help="Gram determinant of R[n, m; q]")
    for name in ("n", "m", "q"):
        p.add_argument(name, type=int)
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("reduce", help="primitive reduction of a rotation by 2 pi q/n")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("gamma", type=parse_real)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("enumerate-families", help="list admissible family instances")
    p.add_argument("--row", type=int)
    p.add_argument("--max-int", type=int, default=12)
    p.set_defaults(fn=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        cfg = CliConfig(args.tolerance, args.relator_tolerance, args.bound,
                        output="json" if args.json else "text")
        code, payload, text = args.fn(args, cfg)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, InvalidRotation, ConditionViolated, realization.NoCommutator) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(dumps(payload) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
