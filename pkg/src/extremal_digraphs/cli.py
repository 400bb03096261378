"""Command-line surface: analyze, generate, count, verify.

Digraph files are JSON documents {"n": <int>, "arcs": [[u, v], ...]}
with 1-based vertices and lexicographically sorted arcs on emission, or
a DOT subset `digraph { u -> v; ... }` restricted to integer node ids
(bare `u;` statements declare isolated vertices).

Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import formulas
from .criticality import Invariant, is_critical
from .digraph import (
    Digraph,
    condensation,
    from_arc_list,
    metric_profile,
    structure_flags,
)
from .errors import DomainError, ExtremalDigraphError, ParseError
from .families import (
    D4,
    BlowUp,
    GammaK,
    GammaK0,
    GammaKI,
    GammaPartition,
    MaximalQD3,
    MaximalRadius,
    ReversedMaximalRadius,
    build_family,
    recognize_hertz_family,
)
from .oracle import SCENARIOS, run_scenario

__all__ = [
    "main",
    "parse_digraph_document",
    "emit_digraph_document",
    "parse_dot",
    "emit_dot",
    "load_digraph_text",
]


# ---------------------------------------------------------------------------
# Digraph documents


def parse_digraph_document(text: str) -> Digraph:
    """Parse the JSON document format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict) or "n" not in doc or "arcs" not in doc:
        raise ParseError('document must be {"n": <int>, "arcs": [[u,v],...]}')
    n = doc["n"]
    arcs = doc["arcs"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f'"n" must be an integer, got {n!r}')
    if not isinstance(arcs, list):
        raise ParseError('"arcs" must be a list of [u, v] pairs')
    pairs = []
    for item in arcs:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ParseError(f"bad arc entry {item!r}; expected [u, v]")
        pairs.append((item[0], item[1]))
    try:
        return from_arc_list(n, pairs)
    except ExtremalDigraphError as exc:
        raise ParseError(str(exc)) from None


def emit_digraph_document(g: Digraph) -> str:
    arcs = sorted(g.arcs)
    return json.dumps({"n": g.n, "arcs": [list(a) for a in arcs]})


_DOT_ARC = re.compile(r"^(\d+)\s*->\s*(\d+)$")
_DOT_NODE = re.compile(r"^(\d+)$")


def parse_dot(text: str) -> Digraph:
    """Parse the DOT subset: integer ids, `u -> v;` and bare `u;` statements."""
    lines = text.splitlines()
    body: list[tuple[str, int]] = []
    opened = closed = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("//")[0].strip()
        if not line:
            continue
        if not opened:
            m = re.match(r"^digraph(\s+\w+)?\s*\{(.*)$", line)
            if not m:
                raise ParseError("expected 'digraph {'", line=lineno)
            opened = True
            line = m.group(2).strip()
            if not line:
                continue
        if closed:
            raise ParseError("content after closing '}'", line=lineno)
        if line.endswith("}"):
            closed = True
            line = line[:-1].strip()
            if not line:
                continue
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if stmt:
                body.append((stmt, lineno))
    if not opened:
        raise ParseError("expected 'digraph {'")
    if not closed:
        raise ParseError("missing closing '}'")
    arcs: list[tuple[int, int]] = []
    mentioned: set[int] = set()
    for stmt, lineno in body:
        m = _DOT_ARC.match(stmt)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            arcs.append((u, v))
            mentioned.update((u, v))
            continue
        m = _DOT_NODE.match(stmt)
        if m:
            mentioned.add(int(m.group(1)))
            continue
        raise ParseError(f"cannot parse statement {stmt!r}", line=lineno)
    if not mentioned:
        raise ParseError("empty digraph document")
    if min(mentioned) < 1:
        raise ParseError("node ids must be >= 1")
    try:
        return from_arc_list(max(mentioned), arcs)
    except ExtremalDigraphError as exc:
        raise ParseError(str(exc)) from None


def emit_dot(g: Digraph) -> str:
    lines = ["digraph {"]
    used = {u for arc in g.arcs for u in arc}
    for v in g.vertices():
        if v not in used:
            lines.append(f"  {v};")
    for u, v in sorted(g.arcs):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_digraph_text(text: str) -> Digraph:
    """Auto-detect JSON vs DOT."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return parse_digraph_document(text)
    return parse_dot(text)


# ---------------------------------------------------------------------------
# analyze


def _distance_json(d) -> int | str:
    return "inf" if d.is_infinite else d.steps


def _analysis(g: Digraph) -> dict:
    profile = metric_profile(g)
    cond = condensation(g)
    flags = structure_flags(g)
    family = recognize_hertz_family(cond.hertz)
    crit = {}
    for inv in Invariant:
        report = is_critical(g, inv)
        entry: dict = {"critical": report.critical}
        if not report.critical:
            entry["failing_arc"] = list(report.failing_arcs[0])
        crit[inv.label] = entry
    return {
        "n": g.n,
        "arc_count": g.arc_count,
        "arcs": [list(a) for a in sorted(g.arcs)],
        "metrics": {
            "d": _distance_json(profile.d),
            "d_m": _distance_json(profile.d_m),
            "r": _distance_json(profile.r),
            "r_m": _distance_json(profile.r_m),
            "ecc_out": [_distance_json(e) for e in profile.ecc_out],
            "ecc_m": [_distance_json(e) for e in profile.ecc_m],
        },
        "bicomponents": [list(c) for c in cond.components],
        "hertz": {
            "n": cond.hertz.n,
            "arcs": [list(a) for a in sorted(cond.hertz.arcs)],
        },
        "flags": {
            "acyclic": flags.is_acyclic,
            "transitive": flags.is_transitive,
            "complete_symmetric": flags.is_complete_symmetric,
            "transitive_tournament": flags.is_transitive_tournament,
            "biconnected": flags.is_biconnected,
        },
        "criticality": crit,
        "hertz_family": {
            "transitive_tournament": family.transitive_tournament,
            "gamma_ki": list(family.gamma_ki) if family.gamma_ki else None,
            "gamma_k0": family.gamma_k0,
            "partition_sizes": list(family.partition_sizes)
            if family.partition_sizes
            else None,
            "is_d4": family.is_d4,
        },
    }


def _print_analysis(info: dict, out) -> None:
    m = info["metrics"]
    print(f"digraph: n={info['n']}, arcs={info['arc_count']}", file=out)
    print(
        f"metrics: d={m['d']}  d_m={m['d_m']}  r={m['r']}  r_m={m['r_m']}",
        file=out,
    )
    comps = ", ".join("{" + ",".join(map(str, c)) + "}" for c in info["bicomponents"])
    print(f"bicomponents ({len(info['bicomponents'])}): {comps}", file=out)
    hertz_arcs = " ".join(f"{u}->{v}" for u, v in info["hertz"]["arcs"]) or "(none)"
    print(f"hertz graph: {info['hertz']['n']} vertices, arcs: {hertz_arcs}", file=out)
    on = [name for name, value in info["flags"].items() if value]
    print(f"flags: {', '.join(on) if on else '(none)'}", file=out)
    for label, entry in info["criticality"].items():
        if entry["critical"]:
            print(f"{label}-critical: yes", file=out)
        else:
            u, v = entry["failing_arc"]
            print(f"{label}-critical: no (arc ({u},{v}) fails)", file=out)
    fam = info["hertz_family"]
    names = []
    if fam["transitive_tournament"]:
        names.append(f"transitive tournament on {fam['transitive_tournament']}")
    if fam["gamma_ki"]:
        k, i = fam["gamma_ki"]
        names.append(f"Gamma_({k},{i})")
    if fam["gamma_k0"]:
        names.append(f"Gamma_({fam['gamma_k0']},0)")
    if fam["partition_sizes"]:
        names.append(f"layered partition {tuple(fam['partition_sizes'])}")
    if fam["is_d4"]:
        names.append("D_4")
    print(f"hertz family: {'; '.join(names) if names else 'unrecognized'}", file=out)


def _cmd_analyze(args) -> int:
    text = Path(args.path).read_text(encoding="utf-8")
    if args.format == "json":
        g = parse_digraph_document(text)
    elif args.format == "dot":
        g = parse_dot(text)
    else:
        g = load_digraph_text(text)
    info = _analysis(g)
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        _print_analysis(info, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# generate


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")


def _spec_from_args(args) -> object:
    family = args.family
    if family == "gamma-k":
        return GammaK(_need(args, "k"))
    if family == "gamma-ki":
        return GammaKI(_need(args, "k"), _need(args, "i"))
    if family == "gamma-k0":
        return GammaK0(_need(args, "k"))
    if family == "d4":
        return D4()
    if family == "partition":
        return GammaPartition(_need(args, "sizes"))
    if family == "blow-up":
        if args.hertz is None:
            raise DomainError("blow-up needs --hertz FILE")
        hertz = load_digraph_text(Path(args.hertz).read_text(encoding="utf-8"))
        return BlowUp(hertz, _need(args, "sizes"))
    if family == "max-radius":
        return MaximalRadius(
            _need(args, "n"), _need(args, "k"), _need(args, "pos"), _split(args)
        )
    if family == "max-radius-reversed":
        return ReversedMaximalRadius(
            _need(args, "n"), _need(args, "k"), _need(args, "pos"), _split(args)
        )
    if family == "qd3":
        sizes = _need(args, "sizes")
        if len(sizes) != 4:
            raise DomainError("qd3 needs --sizes m1,m2,m3,m4")
        return MaximalQD3(sizes)
    raise DomainError(f"unknown family {family!r}")


def _need(args, name):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise DomainError(f"family {args.family!r} needs --{name}")
    return value


def _split(args) -> tuple[int, int]:
    split = _need(args, "split")
    if len(split) != 2:
        raise DomainError("--split needs exactly two values a,b")
    return (split[0], split[1])


def _cmd_generate(args) -> int:
    g = build_family(_spec_from_args(args))
    if args.dot:
        sys.stdout.write(emit_dot(g))
    else:
        print(emit_digraph_document(g))
    return 0


# ---------------------------------------------------------------------------
# count


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
    except ValueError:
        raise DomainError(f"expected an int or lo..hi range, got {text!r}") from None
    return range(value, value + 1)


def _cmd_count(args) -> int:
    name = args.formula
    counts = dict(formulas.COUNT_FORMULAS)
    bounds = dict(formulas.BOUND_FORMULAS)
    if name not in counts and name not in bounds:
        known = ", ".join(sorted(set(counts) | set(bounds)))
        raise DomainError(f"unknown formula {name!r}; known: {known}")
    if args.k is None and name != "cor33":
        raise DomainError(f"formula {name!r} needs --k")
    rows = []
    k_range = _parse_range(args.k) if args.k is not None else [None]
    for n in _parse_range(args.n):
        for k in k_range:
            try:
                if name in counts:
                    value = counts[name](n, k)
                else:
                    value = formulas.bound_closed_form(name, n, k)
                rows.append((n, k, str(value)))
            except DomainError:
                rows.append((n, k, "—"))
    print("n\tk\t" + name)
    for n, k, value in rows:
        print(f"{n}\t{'-' if k is None else k}\t{value}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    names = list(args.scenarios)
    if names == ["all"]:
        names = list(SCENARIOS)
    reports = []
    for name in names:
        report = run_scenario(name, max_n=args.max_n, workers=args.workers)
        reports.append(report)
        for line in report.summary_lines():
            print(line, file=sys.stderr)
    payload = json.dumps(
        {"reports": [r.canonical_dict() for r in reports]}, indent=2, sort_keys=True
    )
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        print(f"report written to {args.out}", file=sys.stderr)
    else:
        print(payload)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-digraphs",
        description=(
            "Analyze digraphs under the metric functionals d, d_m, r, r_m; "
            "generate the canonical critical/maximal families; evaluate the "
            "counting formulas; verify the theory against exhaustive "
            "enumeration."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze a digraph file")
    p_analyze.add_argument("path")
    p_analyze.add_argument(
        "--format", choices=["auto", "json", "dot"], default="auto"
    )
    p_analyze.add_argument("--json", action="store_true", help="machine-readable output")
    p_analyze.set_defaults(fn=_cmd_analyze)

    p_generate = sub.add_parser("generate", help="emit a canonical family member")
    p_generate.add_argument(
        "family",
        choices=[
            "gamma-k",
            "gamma-ki",
            "gamma-k0",
            "d4",
            "partition",
            "blow-up",
            "max-radius",
            "max-radius-reversed",
            "qd3",
        ],
    )
    p_generate.add_argument("--k", type=int)
    p_generate.add_argument("--i", type=int)
    p_generate.add_argument("--n", type=int)
    p_generate.add_argument("--pos", type=int)
    p_generate.add_argument("--split", type=_int_tuple)
    p_generate.add_argument("--sizes", type=_int_tuple)
    p_generate.add_argument("--hertz", help="digraph file for blow-up")
    p_generate.add_argument("--dot", action="store_true", help="emit DOT")
    p_generate.set_defaults(fn=_cmd_generate)

    p_count = sub.add_parser("count", help="evaluate a closed-form table")
    p_count.add_argument("formula")
    p_count.add_argument("--n", required=True, help="value or range lo..hi")
    p_count.add_argument("--k", help="value or range lo..hi")
    p_count.set_defaults(fn=_cmd_count)

    p_verify = sub.add_parser("verify", help="run verification scenarios")
    p_verify.add_argument("scenarios", nargs="+", help="scenario names or 'all'")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--workers", type=int, default=None)
    p_verify.add_argument("--out", help="write the JSON report to a file")
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExtremalDigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
