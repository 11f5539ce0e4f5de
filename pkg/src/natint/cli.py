"""Command-line front end.

Subcommands build carriers from the structure-spec grammar, run the
analyzers, and print deterministic reports:

    table        Cayley table of a finite carrier (csv / text / json)
    analyze      full axiom + element + substructure report
    quotient     standard or Rees quotient by an ideal spec
    ideal        validate one ideal spec, or enumerate them all
    span         dimension of the span of interval vectors over a field
    verify-book  replay the catalogue of recorded claims
    eval         evaluate one interval expression

Exit codes: 0 ok, 2 malformed or inapplicable input, 3 enumeration
bound exceeded, 4 verification failure.  With a fixed seed and config
the emitted JSON is byte-identical across runs.
"""

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

import numpy as np

from .carriers import build_carrier
from .errors import (
    InfiniteDomain,
    NatIntError,
    NotAnIdeal,
    ParseError,
    TooLarge,
)
from .intervals import (
    Flavor,
    degenerate,
    iv_max,
    iv_min,
    parse_interval,
)
from .matrices import parse_matrix, span_dimension
from .quotients import (
    ideal_summary,
    is_ideal,
    maximal_minimal_ideals,
    parse_ideal_spec,
    quotient_analysis,
    rees_quotient,
    standard_quotient,
)
from .scalars import parse_domain
from .structures import analyze_structure
from .verify import claim_ids, run_verification

SCHEMA = "natint/1"

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_VERIFY = 4


# ----------------------------------------------------------------------
# run configuration


class RunConfig:
    """Runtime knobs shared by every subcommand."""

    FIELDS = ("size_bound", "worker_count", "seed", "output_format")
    FORMATS = ("json", "csv", "text")

    def __init__(self, size_bound=10 ** 6, worker_count=None, seed=0,
                 output_format="json"):
        self.size_bound = int(size_bound)
        self.worker_count = int(worker_count) if worker_count \
            else (os.cpu_count() or 1)
        self.seed = int(seed)
        if output_format not in self.FORMATS:
            raise ParseError(
                f"unknown output format {output_format!r}",
                expected=list(self.FORMATS))
        self.output_format = output_format


def load_config_file(path):
    """Read a key=value file; '#' starts a comment."""
    opts = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ParseError(f"cannot read config file: {exc}")
    for ln, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{ln}: expected key=value",
                             text=raw.rstrip("\n"), expected=["key=value"])
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in RunConfig.FIELDS:
            raise ParseError(f"{path}:{ln}: unknown config key {key!r}",
                             expected=list(RunConfig.FIELDS))
        opts[key] = value
    return opts


def make_config(args):
    """CLI flags override the config file, which overrides defaults."""
    opts = load_config_file(args.config) if args.config else {}
    if args.size_bound is not None:
        opts["size_bound"] = args.size_bound
    if args.workers is not None:
        opts["worker_count"] = args.workers
    if args.seed is not None:
        opts["seed"] = args.seed
    if args.format is not None:
        opts["output_format"] = args.format
    try:
        return RunConfig(**opts)
    except ValueError as exc:
        raise ParseError(f"bad config value: {exc}")


# ----------------------------------------------------------------------
# output rendering


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else \
            f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (set, frozenset)):
        return sorted(str(x) for x in obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return str(obj)


def _cell(value):
    """One scalar as it appears in csv / text output."""
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, Fraction):
        return _json_default(value) if value.denominator != 1 \
            else str(int(value))
    if isinstance(value, (np.integer, np.bool_)):
        return _cell(_json_default(value))
    return str(value)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        rows = []
        for key, value in obj.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            rows.extend(_flatten(value, path))
        return rows
    if isinstance(obj, (list, tuple)):
        rows = []
        for i, value in enumerate(obj):
            rows.extend(_flatten(value, f"{prefix}[{i}]"))
        return rows
    return [(prefix, _cell(obj))]


def _is_scalar(value):
    return not isinstance(value, (dict, list, tuple))


def _text_lines(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if _is_scalar(value):
                lines.append(f"{pad}{key}: {_cell(value)}")
            elif not value:
                lines.append(f"{pad}{key}: " +
                             ("{}" if isinstance(value, dict) else "[]"))
            elif isinstance(value, (list, tuple)) and \
                    all(_is_scalar(v) for v in value):
                joined = ", ".join(_cell(v) for v in value)
                lines.append(f"{pad}{key}: [{joined}]")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            if _is_scalar(value):
                lines.append(f"{pad}- {_cell(value)}")
            else:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(value, indent + 1))
    else:
        lines.append(f"{pad}{_cell(obj)}")
    return lines


def _grid_csv(corner, labels, grid):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([corner] + list(labels))
    for label, row in zip(labels, grid):
        writer.writerow([label] + list(row))
    return buf.getvalue()


def _grid_text(corner, labels, grid):
    head = [corner] + list(labels)
    rows = [head] + [[label] + list(row)
                     for label, row in zip(labels, grid)]
    widths = [max(len(row[c]) for row in rows) for c in range(len(head))]
    return "\n".join(
        " | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows) + "\n"


def _claims_csv(payload):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim_id", "status", "citation", "note"])
    for entry in payload["claims"]:
        writer.writerow([entry["claim_id"], entry["status"],
                         entry.get("citation", ""), entry.get("note", "")])
    return buf.getvalue()


def _claims_text(payload):
    lines = []
    for entry in payload["claims"]:
        lines.append(f"{entry['status']:<8} {entry['claim_id']:<28} "
                     f"{entry.get('citation', '')}".rstrip())
        if entry.get("note"):
            lines.append(f"{'':8} note: {entry['note']}")
    counts = payload["counts"]
    summary = ", ".join(f"{k}={counts[k]}" for k in
                        ("pass", "fail", "erratum", "skipped"))
    lines.append(f"counts: {summary}")
    lines.append(f"ok: {_cell(payload['ok'])}")
    return "\n".join(lines) + "\n"


def render(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, indent=2, default=_json_default) + "\n"
    is_grid = isinstance(payload, dict) and "table" in payload \
        and "labels" in payload
    is_claims = isinstance(payload, dict) and \
        payload.get("tool") == "verify-book"
    if fmt == "csv":
        if is_grid:
            return _grid_csv(payload["op"], payload["labels"],
                             payload["table"])
        if is_claims:
            return _claims_csv(payload)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(_flatten(payload))
        return buf.getvalue()
    if is_grid:
        return _grid_text(payload["op"], payload["labels"],
                          payload["table"])
    if is_claims:
        return _claims_text(payload)
    return "\n".join(_text_lines(payload)) + "\n"


def emit(payload, cfg, out_path):
    text = render(payload, cfg.output_format)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# interval expression evaluator


_NAME_RE = re.compile(r"[0-9A-Za-z_.]+")
_INT_RE = re.compile(r"[0-9]+")

_FUNCTIONS = {"min": 2, "max": 2, "recip": 1}


class ExpressionParser:
    """Recursive descent over interval expressions.

    Grammar:
        expr   := term (("+" | "-") term)*
        term   := power (("*" | "/") power)*
        power  := factor ("^" integer)?
        factor := "-" factor | atom
        atom   := interval | scalar | "(" expr ")"
                | ("min" | "max") "(" expr "," expr ")"
                | "recip" "(" expr ")"

    A "(" opens an interval literal when its bracketed body reads as
    two domain scalars; otherwise it groups a subexpression.  "[" always
    opens an interval literal.  Bare scalars become degenerate
    intervals, so `3*[1,2]` and `[3,3]*[1,2]` agree.
    """

    def __init__(self, text, domain, default_flavor=Flavor.CLOSED):
        self.text = text
        self.domain = domain
        self.flavor = default_flavor
        self.i = 0
        self.n = len(text)

    # --- cursor helpers

    def _skip_ws(self):
        while self.i < self.n and self.text[self.i].isspace():
            self.i += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.i] if self.i < self.n else ""

    def _fail(self, message, expected=None, pos=None):
        raise ParseError(message, text=self.text,
                         pos=self.i if pos is None else pos,
                         expected=expected)

    def _balanced_close(self, start):
        depth = 0
        for j in range(start, self.n):
            c = self.text[j]
            if c in "([":
                depth += 1
            elif c in ")]":
                depth -= 1
                if depth == 0:
                    return j
        self._fail("unbalanced bracket", expected=[")", "]"], pos=start)

    # --- grammar

    def parse(self):
        value = self._expr()
        self._skip_ws()
        if self.i != self.n:
            self._fail(f"trailing input {self.text[self.i:]!r}",
                       expected=["+", "-", "*", "/", "^", "end of input"])
        return value

    def _expr(self):
        value = self._term()
        while True:
            c = self._peek()
            if c == "+":
                self.i += 1
                value = value + self._term()
            elif c == "-":
                self.i += 1
                value = value - self._term()
            else:
                return value

    def _term(self):
        value = self._power()
        while True:
            c = self._peek()
            if c == "*":
                self.i += 1
                value = value * self._power()
            elif c == "/":
                self.i += 1
                value = value / self._power()
            else:
                return value

    def _power(self):
        value = self._factor()
        if self._peek() == "^":
            self.i += 1
            self._skip_ws()
            m = _INT_RE.match(self.text, self.i)
            if not m:
                self._fail("exponent must be an integer >= 1",
                           expected=["integer"])
            k = int(m.group())
            if k < 1:
                self._fail("exponent must be an integer >= 1",
                           expected=["integer >= 1"])
            self.i = m.end()
            value = value ** k
        return value

    def _factor(self):
        if self._peek() == "-":
            self.i += 1
            return -self._factor()
        return self._atom()

    def _atom(self):
        c = self._peek()
        if not c:
            self._fail("unexpected end of input",
                       expected=["interval", "scalar", "("])
        if c in "([":
            return self._bracketed(c)
        m = _NAME_RE.match(self.text, self.i)
        if not m:
            self._fail(f"unexpected character {c!r}",
                       expected=["interval", "scalar", "("])
        name = m.group()
        if name in _FUNCTIONS:
            after = self.text[m.end():].lstrip()
            if after.startswith("("):
                return self._call(name, m.end())
        try:
            value = self.domain.parse_scalar(name)
        except NatIntError:
            self._fail(f"{name!r} is not a scalar over {self.domain.spec}",
                       expected=["scalar"])
        self.i = m.end()
        return degenerate(self.domain, value, self.flavor)

    def _bracketed(self, opener):
        start = self.i
        close = self._balanced_close(start)
        span = self.text[start:close + 1]
        if opener == "[":
            value = parse_interval(span, self.domain, self.flavor)
            self.i = close + 1
            return value
        try:
            value = parse_interval(span, self.domain, self.flavor)
        except (NatIntError, ValueError, ArithmeticError):
            value = None
        if value is not None:
            self.i = close + 1
            return value
        if self.text[close] != ")":
            self._fail("an expression group must close with ')'",
                       expected=[")"], pos=close)
        self.i = start + 1
        value = self._expr()
        self._skip_ws()
        if self.i != close:
            self._fail(f"unexpected {self.text[self.i:close]!r} in group",
                       expected=[")"])
        self.i = close + 1
        return value

    def _call(self, name, name_end):
        arity = _FUNCTIONS[name]
        self.i = name_end
        self._skip_ws()
        self.i += 1  # the opening "("
        args = [self._expr()]
        while self._peek() == ",":
            self.i += 1
            args.append(self._expr())
        if self._peek() != ")":
            self._fail(f"unterminated call to {name}", expected=[")"])
        self.i += 1
        if len(args) != arity:
            self._fail(f"{name} takes {arity} argument"
                       f"{'s' if arity != 1 else ''}, got {len(args)}",
                       expected=[f"{arity} arguments"])
        if name == "min":
            return iv_min(args[0], args[1])
        if name == "max":
            return iv_max(args[0], args[1])
        return args[0].recip()


def eval_expression(text, domain, default_flavor=Flavor.CLOSED):
    return ExpressionParser(text, domain, default_flavor).parse()


# ----------------------------------------------------------------------
# subcommands


def _flavor_arg(code):
    try:
        return Flavor.from_code(code)
    except (NatIntError, KeyError, ValueError):
        raise ParseError(f"unknown flavor {code!r}",
                         expected=["c", "o", "oc", "co"])


def cmd_table(args, cfg):
    s = build_carrier(args.spec, size_bound=cfg.size_bound)
    if s.n * s.n > cfg.size_bound:
        raise TooLarge(f"a {s.n}x{s.n} table exceeds the bound "
                       f"{cfg.size_bound}")
    t = s.table(args.op)
    labels = [s.label(i) for i in range(s.n)]
    grid = [[labels[t[i, j]] if t[i, j] >= 0 else "?"
             for j in range(s.n)] for i in range(s.n)]
    payload = {
        "schema": SCHEMA,
        "spec": s.name,
        "op": args.op,
        "order": s.n,
        "labels": labels,
        "closed": all(cell != "?" for row in grid for cell in row),
        "table": grid,
    }
    return payload, EXIT_OK


def cmd_analyze(args, cfg):
    s = build_carrier(args.spec, size_bound=cfg.size_bound)
    payload = analyze_structure(s, workers=cfg.worker_count)
    return payload, EXIT_OK


def cmd_quotient(args, cfg):
    s = build_carrier(args.spec, size_bound=cfg.size_bound)
    ideal = parse_ideal_spec(s, args.ideal_spec)
    if args.kind == "rees":
        q = rees_quotient(s, ideal)
    else:
        q = standard_quotient(s, ideal)
    payload = quotient_analysis(q, workers=cfg.worker_count)
    return payload, EXIT_OK


def cmd_ideal(args, cfg):
    s = build_carrier(args.spec, size_bound=cfg.size_bound)
    if args.ideal_spec is not None:
        ideal = parse_ideal_spec(s, args.ideal_spec)
        ok, info = is_ideal(s, ideal.indices)
        payload = {
            "schema": SCHEMA,
            "spec": s.name,
            "ideal_spec": args.ideal_spec,
            "is_ideal": ok,
            "subset": ideal_summary(ideal),
        }
        payload.update(info)
        return payload, EXIT_OK if ok else EXIT_VERIFY
    report = maximal_minimal_ideals(s)
    payload = {
        "schema": SCHEMA,
        "spec": s.name,
        "total": report["total"],
        "proper_nonzero": report["proper_nonzero"],
        "minimal": [ideal_summary(i) for i in report["minimal"]],
        "maximal": [ideal_summary(i) for i in report["maximal"]],
    }
    return payload, EXIT_OK


def cmd_span(args, cfg):
    field = parse_domain(args.field)
    flavor = _flavor_arg(args.flavor)
    vectors = [parse_matrix(text, field, flavor) for text in args.vectors]
    payload = span_dimension(vectors, field)
    payload = {"schema": SCHEMA, **payload}
    return payload, EXIT_OK


def cmd_verify_book(args, cfg):
    only = None
    if args.only:
        only = [part.strip() for part in args.only.split(",") if part.strip()]
        known = set(claim_ids())
        missing = [c for c in only if c not in known]
        if missing:
            raise ParseError(f"unknown claim ids: {', '.join(missing)}",
                             expected=sorted(known)[:8] + ["..."])
    payload = run_verification(seed=cfg.seed, workers=cfg.worker_count,
                               only=only)
    return payload, EXIT_OK if payload["ok"] else EXIT_VERIFY


def cmd_eval(args, cfg):
    domain = parse_domain(args.domain)
    flavor = _flavor_arg(args.flavor)
    value = eval_expression(args.expr, domain, flavor)
    payload = {
        "schema": SCHEMA,
        "domain": domain.spec,
        "expr": args.expr,
        "result": str(value),
        "lo": domain.format_scalar(value.lo),
        "hi": domain.format_scalar(value.hi),
        "flavor": value.flavor.code,
        "degenerate": value.is_degenerate,
        "trend": value.trend().name.lower(),
    }
    return payload, EXIT_OK


# ----------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=RunConfig.FORMATS, default=None,
                        help="output format (default json)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized suites (default 0)")
    common.add_argument("--size-bound", type=int, default=None,
                        help="largest carrier to enumerate (default 10^6)")
    common.add_argument("--workers", type=int, default=None,
                        help="parallel scan width (default: all cores)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")
    common.add_argument("--config", default=None, metavar="PATH",
                        help="key=value config file (size_bound, "
                             "worker_count, seed, output_format)")

    parser = argparse.ArgumentParser(
        prog="natint",
        description="Exact arithmetic and finite-structure analysis for "
                    "the natural class of intervals.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    p = sub.add_parser("table", parents=[common],
                       help="print the Cayley table of a finite carrier")
    p.add_argument("spec", help='structure spec, e.g. "N(Zn:3)\\0"')
    p.add_argument("op", choices=["add", "mul"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("analyze", parents=[common],
                       help="full axiom/element/substructure report")
    p.add_argument("spec", help='structure spec, e.g. "N(Zn:12)"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("quotient", parents=[common],
                       help="quotient a carrier by an ideal")
    p.add_argument("spec")
    p.add_argument("ideal_spec",
                   help="gen{...} | col-zero | row-zero | "
                        "diag-multiples:<k>")
    p.add_argument("--kind", choices=["standard", "rees"], default="rees")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("ideal", parents=[common],
                       help="check one ideal spec, or enumerate all ideals")
    p.add_argument("spec")
    p.add_argument("ideal_spec", nargs="?", default=None)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("span", parents=[common],
                       help="dimension of the span of interval vectors")
    p.add_argument("field", help='field domain spec, e.g. "Q" or "Zn:7"')
    p.add_argument("vectors", nargs="+",
                   help='matrices like "[1,2],[0,1];[3,0],[1,1]"')
    p.add_argument("--flavor", default="c",
                   help="flavor for bare entries (c | o | oc | co)")
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("verify-book", parents=[common],
                       help="replay the catalogue of recorded claims")
    p.add_argument("--only", default=None, metavar="IDS",
                   help="comma-separated claim ids to run")
    p.set_defaults(func=cmd_verify_book)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate one interval expression")
    p.add_argument("domain", help='scalar domain spec, e.g. "Zn:12"')
    p.add_argument("expr",
                   help='e.g. "[3,4]*[4,3] + (1,11)^2" or "recip([2,3])"')
    p.add_argument("--flavor", default="c",
                   help="flavor for bare scalars (c | o | oc | co)")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        payload, code = args.func(args, cfg)
        emit(payload, cfg, args.out)
        return code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TooLarge, InfiniteDomain) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except NotAnIdeal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except NatIntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
