"""Command-line front end.

    maxsub verify all|theorem-a|theorem-b|lemma-sylow|case22|wreath-witnesses|
                  durbin|diagonal|solvability|extensions [flags]
    maxsub inspect --group EXPR [--maximals] [flags]

Exit codes: 0 every check passed (``verify all`` ignores skipped checks),
1 some check failed, 2 usage or input error, 3 resource bound hit or the
report could not be written.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .atlas import parse_group_expr
from .errors import ConsistencyError, InputError, ResourceBoundError
from .structure import fingerprint_name, maximal_subgroups
from .verify import CHECKS, FAIL, PASS, SKIPPED, CheckResult, Witness, _describe, run_check

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
VERIFY_TARGETS = ("all",) + tuple(sorted(CHECKS))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class RunConfig:
    subcommand: str
    target: str = "all"
    groups: list = field(default_factory=list)
    max_order: int = 10_000
    q_list: list = None
    seed: int = 0
    format: str = "json"
    report: str = None
    maximals: bool = False

    def check_config(self):
        cfg = {"seed": self.seed, "max_order": self.max_order}
        if self.q_list:
            cfg["q_list"] = self.q_list
        if self.groups:
            cfg["groups"] = self.groups
        return cfg


def _q_list(text):
    try:
        qs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not qs:
        raise argparse.ArgumentTypeError("empty --q list")
    return qs


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--group", action="append", default=[], metavar="EXPR", help="group expression (repeatable)")
    common.add_argument("--max-order", type=int, default=10_000, metavar="N")
    common.add_argument("--q", type=_q_list, default=None, metavar="LIST", help="comma-separated field orders")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")

    p = _Parser(prog="maxsub", description="Maximal-subgroup classification checks.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("target", choices=VERIFY_TARGETS)
    i = sub.add_parser("inspect", parents=[common], help="describe a group")
    i.add_argument("--maximals", action="store_true", help="list the maximal-subgroup classes")
    return p


def parse_config(argv):
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(
        subcommand=ns.subcommand,
        target=getattr(ns, "target", None),
        groups=ns.group,
        max_order=ns.max_order,
        q_list=ns.q,
        seed=ns.seed,
        format=ns.format,
        report=ns.report,
        maximals=getattr(ns, "maximals", False),
    )
    if cfg.subcommand == "inspect" and not cfg.groups:
        parser.error("inspect requires --group EXPR")
    if cfg.max_order < 1:
        parser.error("--max-order must be positive")
    return cfg


# ---------------------------------------------------------------------------


def inspect_group(expr, maximals=False):
    """A CheckResult-shaped description of one group."""
    import time

    from .structure import chief_series, fingerprint, is_solvable, is_supersolvable

    t0 = time.perf_counter()
    G = parse_group_expr(expr)
    notes = [f"degree {G.degree}, order {G.order()}"]
    witnesses = []
    if G.order() <= 10**6:
        fp = fingerprint(G)
        name = fingerprint_name(fp)
        dl = "inf" if fp.derived_length is None else fp.derived_length
        notes.append(f"fingerprint: centre order {fp.center_order}, derived length {dl}, "
                     f"abelian invariants {list(fp.abelian_invariants)}" + (f", matches {name}" if name else ""))
        notes.append(f"solvable={is_solvable(G)}, supersolvable={is_supersolvable(G)}")
        notes.append("chief factors: " + ", ".join(f"{f.order} ({f.kind})" for f in chief_series(G).factors))
    if maximals:
        reports = maximal_subgroups(G)
        notes.append(f"{len(reports)} maximal classes; indices {sorted({r.index for r in reports})}")
        for r in reports:
            notes.append(_describe(r))
            witnesses.append(Witness.from_report(f"{expr}: {_describe(r)}", r))
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(f"inspect:{expr}", PASS, witnesses, ms, notes)


def run_checks(cfg):
    if cfg.subcommand == "inspect":
        out = []
        for expr in cfg.groups:
            try:
                out.append(inspect_group(expr, cfg.maximals))
            except ResourceBoundError as err:
                out.append(CheckResult(f"inspect:{expr}", SKIPPED, [], 0, [f"resource bound: {err}"]))
        return out
    names = sorted(CHECKS) if cfg.target == "all" else [cfg.target]
    base = cfg.check_config()
    results = []
    for name in names:
        check_cfg = dict(base)
        if cfg.target == "all":
            # defaults for everything but the seed
            check_cfg = {"seed": cfg.seed}
        results.append(run_check(name, check_cfg))
    return sorted(results, key=lambda r: r.check_id)


def exit_code(results, cfg):
    if any(r.status == FAIL for r in results):
        return EXIT_FAIL
    if any(r.status == SKIPPED for r in results) and not (cfg.subcommand == "verify" and cfg.target == "all"):
        return EXIT_RESOURCE
    return EXIT_PASS


def emit_report(results, cfg):
    """Serialised report bytes in the configured format."""
    doc = {
        "tool_version": __version__,
        "seed": cfg.seed,
        "field_modulus_policy": "lex-min",
        "checks": [r.as_dict() for r in sorted(results, key=lambda r: r.check_id)],
    }
    if cfg.format == "json":
        return (json.dumps(doc, indent=2, sort_keys=False) + "\n").encode()
    lines = [f"maxsub {doc['tool_version']}  seed={doc['seed']}  field modulus policy: {doc['field_modulus_policy']}"]
    for c in doc["checks"]:
        lines.append(f"[{c['status'].upper():7}] {c['id']}  ({c['elapsed_ms']} ms)")
        lines.extend(f"    {n}" for n in c["notes"])
        for w in c["witnesses"]:
            lines.append(f"    witness: {w['description']}")
    return ("\n".join(lines) + "\n").encode()


def run(argv=None):
    """Run the CLI; returns ``(exit code, report bytes or None)``."""
    try:
        cfg = parse_config(argv)
    except UsageError as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE, None
    try:
        results = run_checks(cfg)
    except InputError as err:
        print(f"maxsub: input error: {err}", file=sys.stderr)
        return EXIT_USAGE, None
    except ResourceBoundError as err:
        print(f"maxsub: resource bound: {err}", file=sys.stderr)
        return EXIT_RESOURCE, None
    except ConsistencyError as err:
        print(f"maxsub: internal consistency failure: {err}", file=sys.stderr)
        return EXIT_FAIL, None
    report = emit_report(results, cfg)
    if cfg.report:
        try:
            with open(cfg.report, "wb") as fh:
                fh.write(report)
        except OSError as err:
            print(f"maxsub: cannot write report: {err}", file=sys.stderr)
            return EXIT_RESOURCE, report
    else:
        sys.stdout.buffer.write(report)
        sys.stdout.flush()
    return exit_code(results, cfg), report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
