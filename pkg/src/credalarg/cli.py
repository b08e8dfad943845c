"""Command-line front end.

Subcommands: ``solve`` (enumerate extensions), ``bounds`` (probability
intervals per extension or for an explicit set), ``check`` (profile and
graph diagnostics), ``export-dot`` (render for graphviz) and ``rank``
(heuristic interval ordering).

Exit codes: 0 success, 1 usage error, 2 parse/validation error (including
a missing input file), 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .af import DEFAULT_MAX_ARGS, SEMANTICS, Extension
from .bounds import (BoundsResult, agent_valuation_oracle, extension_bounds,
                     rank_extensions)
from .credal import is_maximal, is_uniform, rationality_report
from .errors import CapExceededError, CoverageError, CredalArgError
from .formats import FrameworkDocument, emit_json, export_dot, load_caf
from .samples import REPORTED_FIXTURES, diagnosis_document

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CAP = 3

SEMANTICS_CODES = {
    "cf": "conflict-free",
    "ad": "admissible",
    "co": "complete",
    "pr": "preferred",
    "gr": "grounded",
    "st": "stable",
}


@dataclass(frozen=True)
class RunConfiguration:
    command: str
    input_path: str | None
    semantics: str | None
    explicit_set: tuple[str, ...] | None
    output_format: str
    max_args: int
    tolerance: float
    use_oracle: bool = False
    strict: bool = False
    paper_fixtures: bool = False


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="credalarg",
                     description="argumentation analysis under imprecise, "
                                 "multi-agent opinions")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH",
                        help="input document in .caf format")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        dest="output_format", help="output format")
    common.add_argument("--max-args", type=int, default=DEFAULT_MAX_ARGS,
                        metavar="N", help="enumeration cap on the argument "
                        "count (default %(default)s)")
    common.add_argument("--tolerance", type=float, default=1e-9, metavar="X",
                        help="absolute tolerance for interval comparisons")

    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    solve = sub.add_parser("solve", parents=[common],
                           help="enumerate extensions of one semantics")
    solve.add_argument("--semantics", required=True,
                       help="cf|ad|co|pr|gr|st or the full semantics name")

    bounds = sub.add_parser("bounds", parents=[common],
                            help="probability intervals for extensions")
    target = bounds.add_mutually_exclusive_group(required=True)
    target.add_argument("--semantics",
                        help="compute bounds for every extension of this "
                             "semantics")
    target.add_argument("--set", dest="explicit_set", metavar="LIST",
                        help="comma-separated conflict-free set to analyze")
    target.add_argument("--paper-fixtures", action="store_true",
                        help="compare computed intervals against the "
                             "originally reported values for the bundled "
                             "diagnosis scenario")
    bounds.add_argument("--oracle", action="store_true", dest="use_oracle",
                        help="also run the independent per-agent oracle and "
                             "flag mismatches")

    check = sub.add_parser("check", parents=[common],
                           help="profile and causal-graph diagnostics")
    check.add_argument("--strict", action="store_true",
                       help="exit 2 when rationality violations exist")

    sub.add_parser("export-dot", parents=[common],
                   help="emit a graphviz rendering of the document")

    rank = sub.add_parser("rank", parents=[common],
                          help="order extensions by their intervals")
    rank.add_argument("--semantics", required=True,
                      help="semantics whose extensions are ranked")
    return parser


def _resolve_semantics(token: str | None, parser: argparse.ArgumentParser):
    if token is None:
        return None
    name = SEMANTICS_CODES.get(token, token)
    if name not in SEMANTICS:
        parser.error(f"unknown semantics {token!r} (use one of "
                     f"{'|'.join(SEMANTICS_CODES)})")
    return name


def _build_config(ns: argparse.Namespace,
                  parser: argparse.ArgumentParser) -> RunConfiguration:
    if ns.max_args < 1:
        parser.error("--max-args must be >= 1")
    if ns.tolerance <= 0:
        parser.error("--tolerance must be > 0")
    explicit = getattr(ns, "explicit_set", None)
    if explicit is not None:
        explicit = tuple(t.strip() for t in explicit.split(",") if t.strip())
    paper_fixtures = getattr(ns, "paper_fixtures", False)
    if ns.input is None and not paper_fixtures:
        parser.error("--input is required")
    return RunConfiguration(
        command=ns.command,
        input_path=ns.input,
        semantics=_resolve_semantics(getattr(ns, "semantics", None), parser),
        explicit_set=explicit,
        output_format=ns.output_format,
        max_args=ns.max_args,
        tolerance=ns.tolerance,
        use_oracle=getattr(ns, "use_oracle", False),
        strict=getattr(ns, "strict", False),
        paper_fixtures=paper_fixtures,
    )


def _load(cfg: RunConfiguration) -> FrameworkDocument:
    return load_caf(cfg.input_path)


def _fmt(interval) -> str:
    return f"{interval.lower:.6f} {interval.upper:.6f}"


def cmd_solve(cfg: RunConfiguration) -> int:
    doc = _load(cfg)
    exts = doc.framework.enumerate_extensions(cfg.semantics, cfg.max_args)
    if cfg.output_format == "json":
        print(emit_json(exts, semantics=cfg.semantics))
    elif not exts:
        print("no extensions")
    else:
        for ext in exts:
            print(ext)
    return EXIT_OK


def _bounds_entry(cfg: RunConfiguration, doc: FrameworkDocument,
                  ext: Extension) -> dict:
    entry: dict = {"members": list(ext.members)}
    result: BoundsResult | None = None
    try:
        result = extension_bounds(ext, doc.profile, doc.causality)
        entry.update(lower=result.interval.lower,
                     upper=result.interval.upper,
                     case=result.case)
    except CoverageError as exc:
        if cfg.explicit_set is not None:
            raise
        entry["error"] = str(exc)
    if cfg.use_oracle and ext.members:
        oracle = None
        try:
            oracle = agent_valuation_oracle(ext, doc.profile, doc.causality)
            entry["oracle_lower"] = oracle.lower
            entry["oracle_upper"] = oracle.upper
        except CoverageError as exc:
            entry["oracle_error"] = str(exc)
        if result is not None and oracle is not None:
            entry["oracle_match"] = (
                abs(result.interval.lower - oracle.lower) <= cfg.tolerance
                and abs(result.interval.upper - oracle.upper) <= cfg.tolerance)
        else:
            # consistent only if both sides refused for the same reason
            entry["oracle_match"] = result is None and oracle is None
    return entry


def _render_bounds_row(entry: dict, use_oracle: bool) -> str:
    members = "{%s}" % ",".join(entry["members"])
    if "error" in entry:
        row = f"{members} coverage-error: {entry['error']}"
    else:
        row = (f"{members} {entry['lower']:.6f} {entry['upper']:.6f} "
               f"{entry['case']}")
    if use_oracle:
        if "oracle_lower" in entry:
            row += (f" oracle={entry['oracle_lower']:.6f},"
                    f"{entry['oracle_upper']:.6f}")
        elif "oracle_error" in entry:
            row += " oracle=coverage-error"
        else:
            row += " oracle=n/a"
        if "oracle_match" in entry:
            row += " ok" if entry["oracle_match"] else " MISMATCH"
    return row


def cmd_bounds(cfg: RunConfiguration) -> int:
    if cfg.paper_fixtures:
        return _cmd_paper_fixtures(cfg)
    doc = _load(cfg)
    if cfg.explicit_set is not None:
        targets = [doc.framework.extension(cfg.explicit_set)]
        semantics = None
    else:
        targets = doc.framework.enumerate_extensions(cfg.semantics,
                                                     cfg.max_args)
        semantics = cfg.semantics
    entries = [_bounds_entry(cfg, doc, ext) for ext in targets]
    if cfg.output_format == "json":
        print(emit_json({"semantics": semantics, "extensions": entries}))
    else:
        for entry in entries:
            print(_render_bounds_row(entry, cfg.use_oracle))
    return EXIT_OK


def _cmd_paper_fixtures(cfg: RunConfiguration) -> int:
    doc = diagnosis_document()
    rows = []
    for fixture in REPORTED_FIXTURES:
        ext = doc.framework.extension(fixture.members)
        result = extension_bounds(ext, doc.profile, doc.causality)
        deviations = []
        if abs(result.interval.lower - fixture.reported.lower) > cfg.tolerance:
            deviations.append("lower")
        if abs(result.interval.upper - fixture.reported.upper) > cfg.tolerance:
            deviations.append("upper")
        rows.append((fixture, result, deviations))
    if cfg.output_format == "json":
        payload = {"fixtures": [
            {"label": f.label,
             "members": list(f.members),
             "reported_lower": f.reported.lower,
             "reported_upper": f.reported.upper,
             "computed_lower": r.interval.lower,
             "computed_upper": r.interval.upper,
             "deviates": dev}
            for f, r, dev in rows]}
        print(emit_json(payload))
        return EXIT_OK
    print(f"{'fixture':<10} {'members':<16} {'reported':<20} "
          f"{'computed':<20} verdict")
    for fixture, result, deviations in rows:
        reported = (f"[{fixture.reported.lower:.6f},"
                    f"{fixture.reported.upper:.6f}]")
        computed = (f"[{result.interval.lower:.6f},"
                    f"{result.interval.upper:.6f}]")
        verdict = ("matches" if not deviations
                   else "deviates(%s)" % ",".join(deviations))
        members = "{%s}" % ",".join(fixture.members)
        print(f"{fixture.label:<10} {members:<16} {reported:<20} "
              f"{computed:<20} {verdict}")
    return EXIT_OK


def cmd_check(cfg: RunConfiguration) -> int:
    doc = _load(cfg)
    violations = rationality_report(doc.profile, doc.framework)
    maximal = is_maximal(doc.profile)
    uniform = is_uniform(doc.profile)
    if cfg.output_format == "json":
        payload = {
            "arguments": len(doc.framework.arguments),
            "attacks": len(doc.framework.attacks),
            "causal_edges": len(doc.causality.edges),
            "agents": doc.profile.agent_count,
            "causality_valid": True,
            "maximal": maximal,
            "uniform": uniform,
            "violations": [
                {"agent": v.agent, "attacker": v.attacker,
                 "target": v.target,
                 "attacker_value": v.attacker_value,
                 "target_value": v.target_value}
                for v in violations],
        }
        print(emit_json(payload))
    else:
        print(f"arguments: {len(doc.framework.arguments)}")
        print(f"attacks: {len(doc.framework.attacks)}")
        print(f"causal-edges: {len(doc.causality.edges)}")
        print(f"agents: {doc.profile.agent_count}")
        print("causality: acyclic, attack-disjoint")
        print(f"maximal: {'yes' if maximal else 'no'}")
        print(f"uniform: {'yes' if uniform else 'no'}")
        print(f"rationality-violations: {len(violations)}")
        for v in violations:
            print(f"  agent {v.agent}: attack ({v.attacker},{v.target}) "
                  f"believed {v.attacker_value!r} and {v.target_value!r}")
    if cfg.strict and violations:
        return EXIT_INVALID
    return EXIT_OK


def cmd_export_dot(cfg: RunConfiguration) -> int:
    doc = _load(cfg)
    sys.stdout.write(export_dot(doc))
    return EXIT_OK


def cmd_rank(cfg: RunConfiguration) -> int:
    doc = _load(cfg)
    exts = doc.framework.enumerate_extensions(cfg.semantics, cfg.max_args)
    results: list[BoundsResult] = []
    failures: list[tuple[Extension, str]] = []
    for ext in exts:
        try:
            results.append(extension_bounds(ext, doc.profile, doc.causality))
        except CoverageError as exc:
            failures.append((ext, str(exc)))
    ranked = rank_extensions(results)
    if cfg.output_format == "json":
        payload = {
            "semantics": cfg.semantics,
            "extensions": [
                {"rank": i, "members": list(r.extension.members),
                 "lower": r.interval.lower, "upper": r.interval.upper,
                 "case": r.case}
                for i, r in enumerate(ranked, start=1)],
            "unranked": [{"members": list(e.members), "error": msg}
                         for e, msg in failures],
        }
        print(emit_json(payload))
    else:
        if not ranked and not failures:
            print("no extensions")
        for i, r in enumerate(ranked, start=1):
            print(f"{i}. {r.extension} {_fmt(r.interval)}")
        for ext, msg in failures:
            print(f"unranked {ext} coverage-error: {msg}")
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "bounds": cmd_bounds,
    "check": cmd_check,
    "export-dot": cmd_export_dot,
    "rank": cmd_rank,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = _build_config(ns, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[cfg.command](cfg)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CredalArgError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
