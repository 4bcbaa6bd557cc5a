"""Command-line interface: ``ipf <subcommand> ...``.

Elements are given in the canonical text form

    element     := "(" "sigma" "=" perm ";" "x" "=" point ";" "y" "=" point ")"
    perm        := "[" int ("," int)* "]"
    point       := "(" int ("," int)* ")"

Whitespace between tokens is ignored on input; output is always canonical.

Exit status: 0 success, 1 a requested verification failed, 2 usage error,
3 parse error, 4 dimension mismatch, 5 domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import config
from .cayley import cayley_fragment
from .errors import DimensionError, DomainError, ParseError
from .monoid import (
    congruent,
    format_element,
    green_H,
    green_L,
    green_R,
    group_congruence_class,
    ipf_inv,
    ipf_mul,
    is_idempotent,
    natural_leq,
    parse_element,
    random_element,
)
from .partition import find_shift_witness, parse_partition, validate_witness
from .poset import format_point
from .selftest import run_selftest
from .zero import (
    CofiniteNeighborhood,
    continuity_witness,
    solve_left,
    solve_right,
    translate_preimage,
)

EXIT_VERIFY = 1
EXIT_PARSE = 3
EXIT_DIMENSION = 4
EXIT_DOMAIN = 5


class Output:
    """Collects text lines and JSON fields, then prints in the chosen format."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.data = {}

    def emit(self, key, value, text=None):
        self.data[key] = value
        if text is not None:
            self.lines.append(text)

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.data, indent=2) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _elements(args, texts):
    out = []
    for t in texts:
        e = parse_element(t)
        if args.n is not None and e.n != args.n:
            raise DimensionError(f"expected arity n={args.n}, got {e.n}: {t!r}")
        out.append(e)
    if len({e.n for e in out}) > 1:
        raise DimensionError("arguments mix arities " + ", ".join(f"{e.n} ({t!r})" for e, t in zip(out, texts)))
    return out


def _excluded(args):
    texts = list(args.exclude or [])
    if args.exclude_file:
        try:
            content = Path(args.exclude_file).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read exclusion file ({exc.strerror})", token=args.exclude_file) from None
        for line in content.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                texts.append(line)
    return texts


# -- subcommands ---------------------------------------------------------------

def cmd_mul(args, out):
    elems = _elements(args, args.elements)
    result = elems[0]
    for e in elems[1:]:
        result = ipf_mul(result, e)
    out.emit("result", format_element(result), format_element(result))


def cmd_inv(args, out):
    (a,) = _elements(args, [args.element])
    r = format_element(ipf_inv(a))
    out.emit("result", r, r)


def cmd_idem(args, out):
    (a,) = _elements(args, [args.element])
    v = is_idempotent(a)
    out.emit("result", v, _bool(v))


def cmd_green(args, out):
    a, b = _elements(args, [args.a, args.b])
    rel = {"R": green_R, "L": green_L, "H": green_H}[args.relation]
    v = rel(a, b)
    out.emit("relation", args.relation)
    out.emit("result", v, _bool(v))


def cmd_order(args, out):
    a, b = _elements(args, [args.a, args.b])
    v = natural_leq(a, b)
    out.emit("result", v, _bool(v))


def cmd_congruence(args, out):
    elems = _elements(args, args.elements)
    classes = []
    for e in elems:
        sigma, offset = group_congruence_class(e)
        classes.append({"sigma": list(sigma.images), "offset": list(offset)})
        out.lines.append(f"sigma={sigma}; offset={format_point(offset)}")
    out.emit("classes", classes)
    if len(elems) > 1:
        v = all(congruent(elems[0], e) for e in elems[1:])
        out.emit("congruent", v, f"congruent: {_bool(v)}")


def cmd_solve(args, out):
    g, c = _elements(args, [args.g, args.c])
    sols = solve_left(g, c) if args.side == "left" else solve_right(g, c)
    texts = [format_element(s) for s in sols]
    out.lines.extend(texts)
    out.emit("solutions", texts)
    out.emit("count", len(sols), f"count: {len(sols)}")


def _verify_neighbourhood(args, g, u, v, sides):
    """Check g.x / x.g land in u for sampled x in v, and leave u for excluded x."""
    rng = random.Random(args.seed)
    for x in v.complement:
        if all((ipf_mul(g, x) if s == "left" else ipf_mul(x, g)) in u for s in sides):
            return False
    for _ in range(500):
        x = random_element(rng, g.n, args.window)
        if x in v:
            for s in sides:
                if (ipf_mul(g, x) if s == "left" else ipf_mul(x, g)) not in u:
                    return False
    return True


def _neighbourhood_command(args, out, sides):
    (g,) = _elements(args, [args.g])
    texts = _excluded(args)
    excluded = _elements(args, texts) if texts else []
    if excluded and excluded[0].n != g.n:
        raise DimensionError(f"excluded elements have arity {excluded[0].n}, g has {g.n}")
    u = CofiniteNeighborhood(excluded)
    if len(sides) == 2:
        v = continuity_witness(g, u)
    else:
        v = translate_preimage(g, u, sides[0])
    lines = v.to_lines()
    out.lines.extend(lines)
    out.emit("excluded", lines)
    if args.verify:
        ok = _verify_neighbourhood(args, g, u, v, sides)
        out.emit("verify", "PASS" if ok else "FAIL", f"verify: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else EXIT_VERIFY
    return 0


def cmd_preimage(args, out):
    return _neighbourhood_command(args, out, [args.side])


def cmd_witness(args, out):
    return _neighbourhood_command(args, out, ["left", "right"])


def cmd_cayley(args, out):
    gens = _elements(args, args.generators)
    frag = cayley_fragment(gens, args.depth)
    dot = frag.to_dot()
    if args.output:
        Path(args.output).write_text(dot)
        out.emit("file", args.output, f"wrote {args.output}")
    else:
        out.lines.append(dot.rstrip("\n"))
    out.emit("nodes", len(frag.nodes))
    out.emit("edges", len(frag.edges))
    if args.format == "json" and not args.output:
        out.emit("dot", dot)


def cmd_partition(args, out):
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read partition file ({exc.strerror})", token=args.file) from None
    part = parse_partition(text)
    if args.n is not None and part.n != args.n:
        raise DimensionError(f"expected arity n={args.n}, partition has n={part.n}: {args.file!r}")
    w = find_shift_witness(part)
    out.emit("k", w.k)
    out.emit("s", w.s)
    out.emit("size", len(w.C))
    out.emit("iterations", w.iterations)
    out.emit("pairs", [[format_point(c), format_point(d)] for c, d in zip(w.C, w.shifted())])
    out.lines.extend(w.format().rstrip("\n").split("\n"))
    if args.verify:
        ok = validate_witness(part, w)
        out.emit("verify", "PASS" if ok else "FAIL", f"verify: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else EXIT_VERIFY
    return 0


def cmd_selftest(args, out):
    results = run_selftest(args.seed, args.window)
    for name, ok in results:
        out.lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
    out.emit("checks", {name: ok for name, ok in results})
    return 0 if all(ok for _, ok in results) else EXIT_VERIFY


# -- parser --------------------------------------------------------------------

def _add_globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--n", type=int, default=d(None), help="required arity of every element argument")
    p.add_argument("--seed", type=int, default=d(config.DEFAULT_SEED), help="seed for sampled checks")
    p.add_argument("--window", type=int, default=d(config.FILTER_WINDOW), help="coordinate window for sampled checks")
    p.add_argument("--format", choices=["text", "json"], default=d("text"))
    p.add_argument("--verify", action="store_true", default=d(False), help="re-check the result pointwise")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ipf", description="Arithmetic in IPF(N^n) and its zero extension.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("mul", cmd_mul, "multiply elements left to right")
    p.add_argument("elements", nargs="+")
    p = add("inv", cmd_inv, "inverse of an element")
    p.add_argument("element")
    p = add("idem", cmd_idem, "is the element idempotent")
    p.add_argument("element")
    p = add("green", cmd_green, "Green's relations")
    rel = p.add_mutually_exclusive_group(required=True)
    rel.add_argument("-R", dest="relation", action="store_const", const="R")
    rel.add_argument("-L", dest="relation", action="store_const", const="L")
    rel.add_argument("-H", dest="relation", action="store_const", const="H")
    p.add_argument("a")
    p.add_argument("b")
    p = add("order", cmd_order, "natural partial order a <= b")
    p.add_argument("a")
    p.add_argument("b")
    p = add("congruence", cmd_congruence, "least group congruence class")
    p.add_argument("elements", nargs="+")
    p = add("solve", cmd_solve, "solve g.x = c (left) or x.g = c (right)")
    p.add_argument("g")
    p.add_argument("c")
    p.add_argument("--side", choices=["left", "right"], default="left")
    for name, fn, help in [
        ("preimage", cmd_preimage, "neighbourhood {x : g.x in U} or {x : x.g in U}"),
        ("witness", cmd_witness, "neighbourhood V with g.V and V.g inside U"),
    ]:
        p = add(name, fn, help)
        p.add_argument("g")
        p.add_argument("exclude", nargs="*", help="elements excluded from U")
        p.add_argument("--exclude-file", help="file with one excluded element per line")
        if name == "preimage":
            p.add_argument("--side", choices=["left", "right"], default="left")
    p = add("cayley", cmd_cayley, "right Cayley graph fragment in DOT")
    p.add_argument("generators", nargs="+")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("-o", "--output")
    p = add("partition", cmd_partition, "shift witness for a two-coloured box")
    p.add_argument("file")
    add("selftest", cmd_selftest, "run quick consistency checks")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        status = args.func(args, out) or 0
    except ParseError as exc:
        print(f"ipf {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionError as exc:
        print(f"ipf {args.command}: dimension error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (DomainError, ValueError) as exc:
        print(f"ipf {args.command}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(out.render())
    return status


if __name__ == "__main__":
    sys.exit(main())
