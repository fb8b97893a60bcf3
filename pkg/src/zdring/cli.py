"""Command-line surface: group-spec grammar, ring expressions, reports.

Group specs are compact strings (``free:m``, ``cyclic:q``, ``freeprod:q,r``
with ``r`` a number or ``inf``, ``nil2:n``, ``table:PATH``).  Ring
expressions follow

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] INT)*
    atom   := INT | NAME | '(' expr ')'

with ``^`` binding tighter than ``*`` tighter than ``+``/``-``, so
``a^-1`` needs no parentheses.  Names resolve against the active group:
``a1..am`` for free groups, ``a`` for cyclic groups, ``a``/``b`` (aliases
``a1``/``a2``) for free products, ``a``/``b``/``c`` for the class-2 model,
and table element names verbatim.

Every subcommand emits a human-readable report by default and a stable JSON
document under ``--json`` (fields: command, group, inputs, checks, verdict,
witness, elapsed_ms; elapsed_ms is null in JSON so identical inputs yield
byte-identical output).  Exit codes: 0 verified/found, 1 checked-and-negative,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence, Tuple

from .groups import (
    CyclicGroupSpec,
    CyclicSubgroup,
    FiniteTableSpec,
    FreeGroupSpec,
    FreeProductSpec,
    GroupElement,
    GroupSpec,
    Nil2Spec,
    is_antinormal_bounded,
    load_table,
)
from .ring import RingElement, geometric_sum
from .fox import fox_derivative, fox_power_rule_check, fundamental_identity_check, theta
from .zdlab import (
    ZeroDivisorPair,
    annihilator_right,
    construct_lemma3,
    construct_theorem1,
    construct_theorem2_finite,
    coset_report,
    primitive_pair_check,
    trivial_pair_check,
)

__all__ = ["ExpressionError", "GroupSpecError", "parse_group_spec", "parse_ring_expr", "run_command", "main"]


class GroupSpecError(ValueError):
    """Invalid group specification string."""


class ExpressionError(ValueError):
    """Syntax or resolution error in a ring expression, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# group-spec grammar


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``free:m`` | ``cyclic:q`` | ``freeprod:q,r`` | ``nil2:n`` | ``table:PATH``."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise GroupSpecError(f"missing ':' in group spec {text!r}")
    try:
        if head == "free":
            return FreeGroupSpec(_parse_int(rest))
        if head == "cyclic":
            return CyclicGroupSpec(_parse_int(rest))
        if head == "freeprod":
            q_text, comma, r_text = rest.partition(",")
            if not comma:
                raise GroupSpecError(f"freeprod needs two factors, got {rest!r}")
            r = None if r_text.strip() == "inf" else _parse_int(r_text)
            return FreeProductSpec(_parse_int(q_text), r)
        if head == "nil2":
            return Nil2Spec(_parse_int(rest))
        if head == "table":
            try:
                return load_table(rest)
            except OSError as exc:
                raise GroupSpecError(f"cannot read table file {rest!r}: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, GroupSpecError):
            raise
        raise GroupSpecError(str(exc)) from None
    raise GroupSpecError(f"unknown group kind {head!r}")


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise GroupSpecError(f"expected an integer, got {text.strip()!r}") from None


# ---------------------------------------------------------------------------
# ring-expression parser (recursive descent)


class _Parser:
    def __init__(self, text: str, spec: GroupSpec):
        self.text = text
        self.spec = spec
        self.symbols = spec.symbol_table()
        self.pos = 0

    def error(self, message: str) -> ExpressionError:
        return ExpressionError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self) -> RingElement:
        value = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return value

    def expr(self) -> RingElement:
        negate = self.take("-")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RingElement:
        value = self.factor()
        while self.take("*"):
            value = value * self.factor()
        return value

    def factor(self) -> RingElement:
        value = self.atom()
        while self.take("^"):
            value = self.power(value, self.exponent())
        return value

    def power(self, base: RingElement, exponent: int) -> RingElement:
        if exponent >= 0:
            return base**exponent
        inverse = base.inverse_monomial()
        if inverse is None:
            raise self.error("negative power of a non-invertible expression")
        return inverse ** (-exponent)

    def exponent(self) -> int:
        negate = self.take("-")
        n = self.integer()
        return -n if negate else n

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def atom(self) -> RingElement:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return value
        if ch.isdigit():
            return self.integer() * RingElement.one(self.spec)
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            element = self.symbols.get(name)
            if element is None:
                self.pos = start
                raise self.error(
                    f"unknown generator {name!r} in {self.spec.short_str()}"
                )
            return RingElement.monomial(element, 1)
        if ch:
            raise self.error(f"unexpected {ch!r}")
        raise self.error("unexpected end of expression")


def parse_ring_expr(text: str, spec: GroupSpec) -> RingElement:
    """Evaluate a ring expression in Z[G] for the given group."""
    return _Parser(text, spec).parse()


def _parse_single_element(text: str, spec: GroupSpec, what: str) -> GroupElement:
    value = parse_ring_expr(text, spec)
    terms = list(value.terms())
    if len(terms) != 1 or terms[0][1] != 1:
        raise ExpressionError(f"{what} must denote a single group element", 0)
    return terms[0][0]


# ---------------------------------------------------------------------------
# report plumbing


class _Report:
    def __init__(self, command: str, group: str, inputs: dict):
        self.data = {
            "command": command,
            "group": group,
            "inputs": inputs,
            "checks": [],
            "verdict": None,
            "witness": None,
            "elapsed_ms": None,
        }
        self.started = time.monotonic()

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.data["checks"].append({"name": name, "ok": bool(ok), "detail": detail})
        return ok

    def finish(self, verdict: str, witness=None) -> None:
        self.data["verdict"] = verdict
        if witness is not None:
            self.data["witness"] = witness

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
            return
        if "result" in self.data:
            print(self.data["result"])
            return
        for check in self.data["checks"]:
            mark = "ok" if check["ok"] else "FAIL"
            detail = f"  ({check['detail']})" if check["detail"] else ""
            print(f"[{mark:>4}] {check['name']}{detail}")
        if self.data["witness"] is not None:
            print(f"witness: {json.dumps(self.data['witness'], sort_keys=True)}")
        elapsed = int(1000 * (time.monotonic() - self.started))
        print(f"verdict: {self.data['verdict']}  [{elapsed} ms]")


_EXIT_BY_VERDICT = {
    "verified": 0,
    "found": 0,
    "primitive": 0,
    "no-violation": 0,
    "no-violation-within-bound": 0,
    "ok": 0,
    "failed": 1,
    "none-found": 1,
    "not-shown": 1,
    "violation": 1,
}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_verify_theorem1(args) -> Tuple[_Report, int]:
    n = args.n
    report = _Report("verify theorem1", f"nil2:{n}", {"n": n})
    pair = construct_theorem1(n)
    spec = pair.spec
    a, b = spec.gen_a(), spec.gen_b()
    c = spec.gen_c()
    d = a * b * a.inverse()
    ok = True
    ok &= report.check("left != 0", not pair.left.is_zero())
    ok &= report.check("right != 0", not pair.right.is_zero())
    ok &= report.check(
        "left * right = 0",
        (pair.left * pair.right).is_zero(),
        f"AB = 0, |supp A| = {pair.left.support_size()}",
    )
    ok &= report.check("d = c*b", d == c * b, f"d = {d}")
    ok &= report.check("d*a = a*b", d * a == a * b)
    ok &= report.check(
        "support sizes = 2n",
        pair.left.support_size() == 2 * n and pair.right.support_size() == 2 * n,
        f"|supp A| = {pair.left.support_size()}, |supp B| = {pair.right.support_size()}",
    )
    report.finish("verified" if ok else "failed")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_verify_lemma3(args) -> Tuple[_Report, int]:
    r = None if args.r == "inf" else int(args.r)
    q = args.q
    report = _Report(
        "verify lemma3",
        FreeProductSpec(q, r).short_str(),
        {"q": q, "r": "inf" if r is None else r},
    )
    pair, unit = construct_lemma3(q, r)
    one = RingElement.one(pair.spec)
    ok = True
    ok &= report.check("U * U^-1 = 1", unit.unit * unit.inverse == one)
    ok &= report.check("U^-1 * U = 1", unit.inverse * unit.unit == one)
    ok &= report.check("left * right = 0", (pair.left * pair.right).is_zero())
    ok &= report.check("augmentation(left) = 0", pair.left.augmentation() == 0)
    ok &= report.check(
        f"augmentation(right) = {q}", pair.right.augmentation() == q
    )
    supp = sorted(pair.left.support(), key=lambda g: g.sort_key())
    report.check(
        "support of left member",
        True,
        "supp A = {" + ", ".join(str(g) for g in supp) + "}",
    )
    report.finish("verified" if ok else "failed")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_verify_theorem2(args) -> Tuple[_Report, int]:
    spec = load_table(args.table)
    h1 = spec.element_by_name(args.h1)
    h2 = spec.element_by_name(args.h2)
    report = _Report(
        "verify theorem2",
        spec.short_str(),
        {"table": args.table, "h1": args.h1, "h2": args.h2},
    )
    pair = construct_theorem2_finite(spec, h1, h2)
    ok = True
    ok &= report.check(
        "left * right = 0",
        (pair.left * pair.right).is_zero(),
        f"A = {pair.left}, B = {pair.right}",
    )
    ok &= report.check("right != 0", not pair.right.is_zero())
    probe = trivial_pair_check(pair)
    ok &= report.check(
        "no triviality certificate",
        not probe.found,
        probe.search.describe(),
    )
    report.finish("verified" if ok else "failed")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_verify_fox(args) -> Tuple[_Report, int]:
    spec = FreeGroupSpec(args.rank)
    word = _parse_single_element(args.word, spec, "--word")
    n = args.n
    report = _Report(
        "verify fox",
        spec.short_str(),
        {"word": str(word), "n": n, "rank": args.rank},
    )
    power = word**n
    ok = True
    ok &= report.check("fundamental identity for w^n", fundamental_identity_check(power))
    for i in range(1, spec.rank + 1):
        ok &= report.check(
            f"power rule for d/d(a{i})", fox_power_rule_check(word, n, i)
        )
    if spec.rank == 2:
        target = Nil2Spec(n)
        images = [target.gen_a(), target.gen_b()]
        if theta(RingElement.monomial(power, 1), target, images) == RingElement.one(target):
            pipeline = theta(
                fox_derivative(power, 1)
                * (spec.generator(1) - 1)
                * geometric_sum(spec.generator(2), n),
                target,
                images,
            )
            ok &= report.check(
                "projected derivative identity",
                pipeline.is_zero(),
                f"image of d(w^n)/d(a1)*(a1-1)*sum(a2^j) in {target.short_str()}",
            )
        else:
            report.check(
                "projected derivative identity",
                True,
                "skipped: w^n does not map to 1 in the class-2 model",
            )
    report.finish("verified" if ok else "failed")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_eval(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    value = parse_ring_expr(args.expr, spec)
    report = _Report("eval", spec.short_str(), {"expr": args.expr})
    report.data["result"] = str(value)
    report.finish("ok")
    return report, 0


def _cmd_mul(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    left = parse_ring_expr(args.left, spec)
    right = parse_ring_expr(args.right, spec)
    report = _Report("mul", spec.short_str(), {"left": args.left, "right": args.right})
    report.data["result"] = str(left * right)
    report.finish("ok")
    return report, 0


def _check_bound(spec: GroupSpec, bound: Optional[int]) -> Optional[int]:
    if spec.is_finite:
        return None
    return bound if bound is not None else 4


def _cmd_trivial_check(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    left = parse_ring_expr(args.A, spec)
    right = parse_ring_expr(args.B, spec)
    pair = ZeroDivisorPair(left=left, right=right, provenance="user")
    bound = _check_bound(spec, args.bound)
    report = _Report(
        "trivial-check",
        spec.short_str(),
        {"A": args.A, "B": args.B, "bound": bound},
    )
    result = trivial_pair_check(pair, bound=bound)
    report.check("search space", True, result.search.describe())
    if result.found:
        report.finish("found", witness=result.certificate.to_dict())
    else:
        report.finish("none-found")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_primitive_check(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    left = parse_ring_expr(args.A, spec)
    right = parse_ring_expr(args.B, spec)
    pair = ZeroDivisorPair(left=left, right=right, provenance="user")
    bound = args.bound if args.bound is not None else 4
    report = _Report(
        "primitive-check",
        spec.short_str(),
        {"A": args.A, "B": args.B, "bound": bound},
    )
    result = primitive_pair_check(pair, bound=bound)
    report.check("units tested", True, str(result.units_tested))
    if result.primitive:
        report.finish("primitive", witness=result.to_dict())
    else:
        report.finish("not-shown")
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_annihilate(args) -> Tuple[_Report, int]:
    spec = load_table(args.table)
    x = parse_ring_expr(args.expr, spec)
    report = _Report("annihilate", spec.short_str(), {"expr": args.expr})
    b = annihilator_right(x)
    if b is None:
        report.check("kernel", True, "right-multiplication kernel is trivial")
        report.finish("none-found")
    else:
        report.check("x * B = 0", (x * b).is_zero(), f"B = {b}")
        report.finish("found", witness={"annihilator": str(b)})
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


def _cmd_coset_report(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    support = parse_ring_expr(args.set, spec).support()
    h = _parse_single_element(args.h, spec, "--h")
    subgroup = CyclicSubgroup.generated_by(h)
    report = _Report(
        "coset-report",
        spec.short_str(),
        {"set": args.set, "h": str(h), "side": args.side},
    )
    result = coset_report(support, subgroup, args.side)
    for idx, cls in enumerate(result.classes):
        report.check(
            f"class {idx}",
            True,
            "{" + ", ".join(str(g) for g in cls) + "}",
        )
    report.check(
        "all classes have size >= 2", True, str(result.all_classes_ge_2).lower()
    )
    report.data["witness"] = result.to_dict()
    report.finish("ok")
    return report, 0


def _cmd_antinormal(args) -> Tuple[_Report, int]:
    spec = parse_group_spec(args.group)
    h = _parse_single_element(args.h, spec, "--h")
    subgroup = CyclicSubgroup.generated_by(h)
    report = _Report(
        "antinormal",
        spec.short_str(),
        {"h": str(h), "bound": args.bound},
    )
    result = is_antinormal_bounded(
        subgroup, None if spec.is_finite else args.bound
    )
    report.check(
        "conjugators checked",
        True,
        f"{result.conjugators_checked}"
        + (" (exhaustive)" if result.exhaustive else f" (length <= {args.bound})"),
    )
    if result.witness is None:
        report.finish("no-violation" if result.exhaustive else "no-violation-within-bound")
    else:
        report.finish("violation", witness={"conjugator": str(result.witness)})
    return report, _EXIT_BY_VERDICT[report.data["verdict"]]


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument(
        "--json", action="store_true", help="emit a stable machine-readable report"
    )
    # Subparsers parse into a fresh namespace, so their defaults would clobber
    # a --json given before the subcommand; SUPPRESS keeps the parent value.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit a stable machine-readable report",
    )

    parser = argparse.ArgumentParser(
        prog="zdring",
        parents=[top],
        description="Exact zero-divisor computations in integral group rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a built-in verification")
    vsub = verify.add_subparsers(dest="target", required=True)

    p = vsub.add_parser("theorem1", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_theorem1)

    p = vsub.add_parser("lemma3", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", required=True, help="a number or 'inf'")
    p.set_defaults(handler=_cmd_verify_lemma3)

    p = vsub.add_parser("theorem2", parents=[common])
    p.add_argument("--table", required=True)
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.set_defaults(handler=_cmd_verify_theorem2)

    p = vsub.add_parser("fox", parents=[common])
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, default=2)
    p.set_defaults(handler=_cmd_verify_fox)

    p = sub.add_parser("eval", parents=[common], help="evaluate a ring expression")
    p.add_argument("--group", required=True)
    p.add_argument("--expr", required=True)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("mul", parents=[common], help="multiply two ring expressions")
    p.add_argument("--group", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_mul)

    p = sub.add_parser(
        "trivial-check", parents=[common], help="search for a triviality certificate"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(handler=_cmd_trivial_check)

    p = sub.add_parser(
        "primitive-check", parents=[common], help="search for a unit deflation"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(handler=_cmd_primitive_check)

    p = sub.add_parser(
        "annihilate", parents=[common], help="find a right annihilator over a table group"
    )
    p.add_argument("--table", required=True)
    p.add_argument("--expr", required=True)
    p.set_defaults(handler=_cmd_annihilate)

    p = sub.add_parser(
        "coset-report", parents=[common], help="partition a support set by cosets"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True, help="expression whose support is the set")
    p.add_argument("--h", required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.set_defaults(handler=_cmd_coset_report)

    p = sub.add_parser(
        "antinormal", parents=[common], help="bounded antinormality check of <h>"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(handler=_cmd_antinormal)

    return parser


def run_command(argv: Sequence[str]) -> int:
    """Run one CLI invocation and return its exit code.

    Exit codes: 0 verified/found, 1 checked-and-negative (none-found or
    violation), 2 usage or input error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report, code = args.handler(args)
    except (GroupSpecError, ExpressionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.emit(args.json)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
