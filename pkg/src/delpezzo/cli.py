"""Command line front end.

Subcommands:
    surf run <file> [--json]      run a surface-description file
    family build <tag> --params   build one family, print its report as JSON
    family verify-all             run the committed verification grid
    audit run --all | <name>      run proof audits, JSON array output
    group info <A5|A6|L2_7>       order, classes, orbit data
    sing resolve <r> <a>          Hirzebruch-Jung chain and codiscrepancies
    sing classify <graph-file>    classify a dual graph

Exit codes: 0 success, 1 usage/parse errors, 2 geometric rejection
(configuration not contractible or not log terminal).  All output is
deterministic: no timestamps, stable ordering, exact fractions as strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .audits import SWEEPS, run_all_sweeps
from .dsl import (
    AssertGenerating,
    Base,
    BlowupOrbit,
    Contract,
    DslSyntaxError,
    DslValidationError,
    Report,
    Track,
    parse,
    validate,
)
from .families import FamilyError, FamilyParams, default_grid, family_report, verify_claims
from .graphs import (
    DualGraph,
    NotContractibleError,
    NotLogTerminalError,
    QuotientType,
    classify,
    codiscrepancies,
    hj_expand,
    parse_graph,
)
from .groups import is_simple, p1_special_orbit_sizes, standard_group
from .surfaces import (
    ModelError,
    assert_generating,
    base_surface,
    base_symbols,
    blowup_orbit,
    contract,
    invariants_report,
    negative_curves,
    track,
)


class ProgramError(Exception):
    def __init__(self, statement_index, line, message):
        self.statement_index = statement_index
        self.line = line
        super().__init__(f"statement {statement_index} (line {line}): {message}")


def run_program(program):
    """Execute a validated Program and return its SurfaceReport."""
    validate(program)
    model = None
    sing = None
    for index, statement in enumerate(program.statements):
        try:
            if isinstance(statement, Base):
                model = base_surface(statement.kind)
            elif isinstance(statement, Track):
                symbols = base_symbols(model)
                for c in model.curves:
                    symbols.setdefault(c.name, c.coords)
                coords = [0] * model.rho
                for coefficient, symbol in statement.combination:
                    vector = symbols[symbol]
                    for i, x in enumerate(vector):
                        coords[i] += coefficient * x
                model = track(model, statement.name, coords)
            elif isinstance(statement, BlowupOrbit):
                model = blowup_orbit(
                    model,
                    statement.count,
                    on=statement.on,
                    near=statement.near,
                    label=statement.label,
                )
            elif isinstance(statement, AssertGenerating):
                model = assert_generating(model)
            elif isinstance(statement, Contract):
                if statement.names is None:
                    names = [name for name, _ in negative_curves(model)[0]]
                else:
                    names = []
                    labels = {o.label: o.size for o in model.orbits}
                    for name in statement.names:
                        if name in labels:
                            names.extend(
                                f"{name}{i + 1}" for i in range(labels[name])
                            )
                        else:
                            names.append(name)
                sing = contract(model, names)
            elif isinstance(statement, Report):
                if sing is None:
                    sing = contract(model, [])
        except (NotContractibleError, NotLogTerminalError):
            raise
        except ModelError as exc:
            raise ProgramError(index, statement.line, str(exc)) from exc
    if sing is None:
        sing = contract(model, [])
    return invariants_report(sing)


def _print_report(report, as_json):
    if as_json:
        print(json.dumps(report.to_json_dict(), indent=2))
        return
    print(f"rho: {report.rho}")
    print(f"rho_G: {report.rho_g if report.rho_g is not None else 'n/a'}")
    print(f"K^2: {report.k2}")
    print(f"resolution rank: {report.resolution_rank}")
    types = ", ".join(t for t, _ in report.singular) or "none"
    print(f"singular points: {types}")
    verdict = report.del_pezzo
    if report.witness:
        verdict += f" (witness: {report.witness})"
    print(f"del Pezzo: {verdict}")
    for assumption in report.assumptions:
        print(f"assumption: {assumption}")


def _cmd_surf_run(args):
    try:
        with open(args.file, encoding="utf-8") as handle:
            source = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        program = parse(source)
        report = run_program(program)
    except (DslSyntaxError, DslValidationError, ProgramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotContractibleError, NotLogTerminalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_report(report, args.json)
    return 0


def _parse_params(text):
    values = {}
    if text:
        for piece in text.split(","):
            key, _, value = piece.partition("=")
            if not _ or not key.strip():
                raise FamilyError(f"bad parameter {piece!r} (expected key=value)")
            values[key.strip()] = int(value)
    return values


def _cmd_family_build(args):
    try:
        params = FamilyParams(args.tag, **_parse_params(args.params))
        report = family_report(params)
    except (FamilyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0


def _cmd_family_verify_all(args):
    if args.grid != "default":
        print(f"error: unknown grid {args.grid!r}", file=sys.stderr)
        return 1
    failures = 0
    for params in default_grid():
        checks = verify_claims(params)
        status = "ok" if all(c.passed for c in checks) else "FAIL"
        failures += 0 if status == "ok" else 1
        detail = "; ".join(
            f"{c.name}: {'pass' if c.passed else 'FAIL ' + c.detail}" for c in checks
        )
        print(f"{params.label():<22} {status:<5} {detail}")
    print(f"total: {len(default_grid())} families, {failures} failures")
    return 0 if failures == 0 else 1


def _cmd_audit_run(args):
    overrides = {}
    if args.range:
        if args.name is None or args.name == "--all":
            print("error: --range needs a single audit name", file=sys.stderr)
            return 1
        settings = {}
        for piece in args.range:
            key, _, value = piece.partition("=")
            if not _:
                print(f"error: bad range {piece!r}", file=sys.stderr)
                return 1
            settings[key.strip()] = int(value)
        overrides[args.name] = settings
    if args.all or args.name is None:
        results = run_all_sweeps(overrides)
    else:
        if args.name not in SWEEPS:
            known = ", ".join(sorted(SWEEPS))
            print(f"error: unknown audit {args.name!r}; known: {known}", file=sys.stderr)
            return 1
        results = [SWEEPS[args.name](**overrides.get(args.name, {}))]
    print(json.dumps([r.to_json_dict() for r in results], indent=2))
    return 0 if all(r.verdict != "Fails" for r in results) else 2


def _cmd_group_info(args):
    group = standard_group(args.name)
    print(f"group: {group.name}")
    print(f"order: {group.order}")
    print(f"conjugacy classes: {len(group.classes)}")
    sizes = " ".join(str(c.size) for c in group.classes)
    print(f"class sizes: {sizes}")
    print(f"simple: {'yes' if is_simple(group) else 'no'}")
    orbits = p1_special_orbit_sizes(group)
    if orbits is None:
        print("P1 orbit sizes: NoFaithfulAction")
    else:
        print("P1 orbit sizes: " + " ".join(str(s) for s in sorted(orbits)))
    return 0


def _cmd_sing_resolve(args):
    try:
        quotient = QuotientType(args.r, args.a)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    chain = hj_expand(quotient)
    graph = DualGraph.chain([-b for b in chain])
    alphas = codiscrepancies(graph)
    chain_text = " ".join(str(-b) for b in chain)
    alpha_text = " ".join(str(a) for a in alphas)
    print(f"chain: {chain_text} | alpha: {alpha_text}")
    return 0


def _cmd_sing_classify(args):
    try:
        with open(args.file, encoding="utf-8") as handle:
            graph = parse_graph(handle.read())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cls = classify(graph)
    print(f"class: {cls.kind}")
    if cls.detail:
        print(f"type: {cls.detail}")
    try:
        alphas = codiscrepancies(graph)
        print("alpha: " + " ".join(str(a) for a in alphas))
    except NotContractibleError:
        print("alpha: not contractible")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="delpezzo",
        description="exact invariants of log del Pezzo surfaces",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")

    surf = sub.add_parser("surf", help="surface-description programs")
    surf_sub = surf.add_subparsers(dest="surf_command")
    surf_run = surf_sub.add_parser("run", help="run a .surf file")
    surf_run.add_argument("file")
    surf_run.add_argument("--json", action="store_true")
    surf_run.set_defaults(func=_cmd_surf_run)

    family = sub.add_parser("family", help="the classified families")
    family_sub = family.add_subparsers(dest="family_command")
    family_build = family_sub.add_parser("build", help="build one family")
    family_build.add_argument("tag")
    family_build.add_argument("--params", default="")
    family_build.set_defaults(func=_cmd_family_build)
    family_verify = family_sub.add_parser("verify-all", help="verify the grid")
    family_verify.add_argument("--grid", default="default")
    family_verify.set_defaults(func=_cmd_family_verify_all)

    audit = sub.add_parser("audit", help="proof arithmetic audits")
    audit_sub = audit.add_subparsers(dest="audit_command")
    audit_run = audit_sub.add_parser("run", help="run audits")
    audit_run.add_argument("name", nargs="?")
    audit_run.add_argument("--all", action="store_true")
    audit_run.add_argument("--range", action="append")
    audit_run.set_defaults(func=_cmd_audit_run)

    group = sub.add_parser("group", help="finite simple group data")
    group_sub = group.add_subparsers(dest="group_command")
    group_info = group_sub.add_parser("info", help="group summary")
    group_info.add_argument("name", choices=["A5", "A6", "L2_7"])
    group_info.set_defaults(func=_cmd_group_info)

    sing = sub.add_parser("sing", help="singularity tools")
    sing_sub = sing.add_subparsers(dest="sing_command")
    sing_resolve = sing_sub.add_parser("resolve", help="resolve 1/r(1,a)")
    sing_resolve.add_argument("r", type=int)
    sing_resolve.add_argument("a", type=int)
    sing_resolve.set_defaults(func=_cmd_sing_resolve)
    sing_classify = sing_sub.add_parser("classify", help="classify a graph file")
    sing_classify.add_argument("file")
    sing_classify.set_defaults(func=_cmd_sing_classify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    func = getattr(args, "func", None)
    if func is None:
        parser.print_usage(sys.stderr)
        return 1
    return func(args)


if __name__ == "__main__":
    sys.exit(main())
