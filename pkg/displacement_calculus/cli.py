"""Command-line interface for the displacement calculus engine."""

from __future__ import annotations

import argparse
import logging
import sys

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from .brill_noether import brill_noether, main_theorem_check
from .cache import DifficultyCache
from .chains import realize_certificate
from .config import EngineConfig
from .constructions import box_construction, komeda_probe, primitive_construction
from .displacement import displace, linkage
from .engine import difficulty, difficulty_oracle, verify_sequence, weight_lower_bound
from .errors import CacheIoError, CertificateInvalid, DisplacementError, ParseError, VerificationError
from .output import FORMATS, Report, certificate_report, render
from .parser import (
    parse_certificate_file,
    parse_partition,
    parse_progression,
    parse_range,
    parse_semigroup_spec,
)
from .semigroups import (
    imprimitivity_witness,
    semigroup_from,
    semigroup_stats,
    semigroup_to_partition,
)
from .table import difficulty_table

logger = logging.getLogger(__name__)

# stdout carries results only; everything else goes to stderr
console = Console(stderr=True)

EPILOG = """
Examples:
  displacement-calculus delta 4,4,4 --certificate
  displacement-calculus table --a 2..12 --b 2..11 --cache cache.json
  displacement-calculus displace 8,7,1,1,1 --lambda "2 mod 3" --up
  displacement-calculus bn --g 9 --d 8 --r 3 --format json
  displacement-calculus semigroup gaps:1,3,5 --partition --witness
  displacement-calculus verify --file certificate.json
"""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises ParseError instead of exiting."""

    def error(self, message):
        raise ParseError(message)


def configure_logging(debug: bool):
    """Route package logs through a RichHandler on the stderr console."""
    package_logger = logging.getLogger("displacement_calculus")
    for handler in list(package_logger.handlers):
        if isinstance(handler, RichHandler):
            package_logger.removeHandler(handler)
    handler = RichHandler(console=console, show_path=False, show_time=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if debug else logging.WARNING)


def build_config(args) -> EngineConfig:
    return EngineConfig.from_env(
        workers=getattr(args, "workers", None),
        cache_path=getattr(args, "cache", None),
        weight_limit=getattr(args, "limit", None),
    )


def open_cache(config: EngineConfig) -> DifficultyCache | None:
    """Load the configured cache, or run without one if it cannot be read."""
    if config.cache_path is None:
        return None
    try:
        return DifficultyCache(config.cache_path).load()
    except CacheIoError as e:
        logger.warning("cache disabled: %s", e)
        return None


def cmd_delta(args) -> Report:
    config = build_config(args)
    target = parse_partition(args.partition)
    cache = open_cache(config)
    result = cache.get(target) if cache is not None else None
    if result is None:
        result = difficulty(target, config=config)
        if cache is not None:
            try:
                cache.put(result)
                cache.flush()
            except CacheIoError as e:
                logger.warning("cache not saved: %s", e)
    else:
        console.print(f"[dim]cached:[/dim] {target}")

    # every reported delta is backed by a re-verified certificate
    if verify_sequence(result.certificate, target) != result.delta:
        raise CertificateInvalid(f"certificate for {target} does not cost {result.delta}")

    fields = {"lower_bound": weight_lower_bound(target)}
    if args.oracle:
        oracle = difficulty_oracle(target, config=config)
        fields["oracle"] = oracle
        fields["agrees"] = oracle == result.delta
    title = f"delta({target}) = {result.delta}"
    if args.certificate:
        return certificate_report(title, result.certificate, target, result.delta, **fields)
    return Report(title=title, fields={"target": target.to_text(), "delta": result.delta, **fields})


def cmd_table(args) -> Report:
    config = build_config(args)
    a_range = parse_range(args.a)
    b_range = parse_range(args.b)
    cache = open_cache(config)
    total = len(a_range) * len(b_range)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
    ) as progress:
        task = progress.add_task("Computing table...", total=total)

        def update_progress(current, count, cell, result):
            a, b = cell
            progress.update(task, completed=current, description=f"({a}^{b}): delta {result.delta}")

        table = difficulty_table(
            a_range,
            b_range,
            cache=cache,
            config=config,
            progress_callback=update_progress,
            use_duality=not args.no_duality,
        )

    headers = ["b\\a"] + [str(a) for a in table.a_values]
    rows = [[b] + values for b, values in zip(table.b_values, table.matrix())]
    return Report(
        title=f"delta((a^b)) for a in {args.a}, b in {args.b}",
        headers=headers,
        rows=rows,
        extra={"a": table.a_values, "b": table.b_values},
    )


def cmd_displace(args) -> Report:
    p = parse_partition(args.partition)
    lam = parse_progression(args.lam)
    direction = "down" if args.down else "up"
    result = displace(p, lam, direction)
    return Report(
        title=result.to_text(),
        fields={"input": p.to_text(), "lambda": lam.to_text(), "direction": direction, "result": result.to_text()},
    )


def cmd_linkage(args) -> Report:
    q = parse_partition(args.lower)
    q2 = parse_partition(args.upper)
    witness = linkage(q, q2)
    if witness is None:
        return Report(title=f"{q} and {q2} are not linked", fields={"linked": False})
    return Report(
        title=f"{q} -> {q2} is {witness.k}-linked by {witness.lam}",
        fields={
            "linked": True,
            "k": witness.k,
            "lambda": witness.lam.to_text(),
            "added_rows": " ".join(str(i) for i in witness.added_rows),
        },
    )


def cmd_construct(args) -> Report:
    if args.kind == "komeda":
        if args.m is None:
            raise ParseError("construct komeda needs --m")
        rows = komeda_probe(args.m, config=build_config(args))
        headers = ["m", "partition", "delta", "threshold", "genus", "covered"]
        return Report(
            title=f"((2m-1) m m) for 2 <= m <= {args.m}",
            headers=headers,
            rows=[[row[h] for h in headers] for row in rows],
            records=True,
        )
    if args.kind == "box":
        if args.a is None or args.b is None:
            raise ParseError("construct box needs --a and --b")
        sequence = box_construction(args.a, args.b)
        bound = args.a + 2 * args.b - 4 if args.a % 2 == 0 else args.a + 3 * args.b - 5
        target = sequence.final
        return certificate_report(
            f"box construction for ({args.a}^{args.b}): cost {sequence.cost}",
            sequence, target, sequence.cost, bound=bound,
        )
    if args.partition is None:
        raise ParseError("construct primitive needs a partition")
    target = parse_partition(args.partition)
    sequence = primitive_construction(target)
    return certificate_report(
        f"primitive construction for {target}: cost {sequence.cost}",
        sequence, target, sequence.cost,
    )


def cmd_semigroup(args) -> Report:
    kind, values = parse_semigroup_spec(args.spec)
    s = semigroup_from(values, kind=kind)
    stats = semigroup_stats(s)
    fields = {
        "gaps": " ".join(str(f) for f in sorted(s.gaps)),
        "genus": stats.genus,
        "weight": stats.weight,
        "primitive": stats.primitive,
    }
    if args.partition:
        fields["partition"] = semigroup_to_partition(s).to_text()
    if args.witness:
        witness = imprimitivity_witness(s)
        fields["witness_f"] = witness.f if witness else None
        fields["witness_k"] = witness.k if witness else None
        fields["witness_verified"] = witness.verified if witness else None
    return Report(title=s.to_text(), fields=fields)


def cmd_bn(args) -> Report:
    record = brill_noether(args.g, args.d, args.r)
    fields = record.to_dict()
    if args.theorem:
        chain = main_theorem_check(args.g, args.d, args.r)
        fields.update({
            "chain_holds": chain.chain_holds,
            "construction_cost": chain.construction_cost,
            "genus_needed": chain.genus_needed,
            "construction_suffices": chain.construction_suffices,
        })
    return Report(title=f"rho({args.g},{args.d},{args.r}) = {record.rho}", fields=fields)


def cmd_chain(args) -> Report:
    sequence, target, _ = parse_certificate_file(args.certificate)
    verify_sequence(sequence, target)
    state = realize_certificate(sequence, args.genus)
    document = state.to_dict()
    trace = document.pop("trace")
    document.pop("schema")
    document["vanishing"] = ",".join(str(a) for a in document["vanishing"])
    return Report(
        title=f"chain to genus {state.genus}: {document['partition']}",
        fields=document,
        headers=["lambda", "kind", "places", "flagged"],
        rows=[[t["lambda"], t["kind"], t["places"], t["flagged"]] for t in trace],
        rows_key="trace",
        records=True,
    )


def cmd_verify(args) -> Report:
    sequence, target, declared = parse_certificate_file(args.file)
    cost = verify_sequence(sequence, target)
    if declared is not None and declared != cost:
        raise CertificateInvalid(f"certificate costs {cost} but declares delta {declared}")
    final = target or sequence.final
    return Report(
        title=f"valid certificate for {final}: cost {cost}",
        fields={"valid": True, "target": final.to_text(), "cost": cost, "steps": len(sequence)},
    )


COMMANDS = {
    "delta": cmd_delta,
    "table": cmd_table,
    "displace": cmd_displace,
    "linkage": cmd_linkage,
    "construct": cmd_construct,
    "semigroup": cmd_semigroup,
    "bn": cmd_bn,
    "chain": cmd_chain,
    "verify": cmd_verify,
}


def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default="md",
        help="Output format (default: md)",
    )
    common.add_argument(
        "--debug",
        action="store_true",
        help="Enable verbose debug output",
    )

    engine = CliParser(add_help=False)
    engine.add_argument("--workers", type=int, help="Worker processes per weight layer")
    engine.add_argument("--limit", type=int, help="Largest |P| the engine will attempt")

    parser = CliParser(
        prog="displacement-calculus",
        description="Exact displacement difficulties of partitions, with verified certificates.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common, engine], help="Difficulty of one partition")
    p.add_argument("partition", help="Partition, e.g. 4,4,4 (0 for the empty partition)")
    p.add_argument("--certificate", action="store_true", help="List the verified certificate")
    p.add_argument("--oracle", action="store_true", help="Cross-check with the exhaustive oracle")
    p.add_argument("--cache", help="JSON cache file")

    p = sub.add_parser("table", parents=[common, engine], help="Difficulties of box partitions")
    p.add_argument("--a", required=True, help="Row length range MIN..MAX")
    p.add_argument("--b", required=True, help="Row count range MIN..MAX")
    p.add_argument("--cache", help="JSON cache file")
    p.add_argument("--no-duality", action="store_true", help="Compute both (a^b) and (b^a) from scratch")

    p = sub.add_parser("displace", parents=[common], help="Displace a partition")
    p.add_argument("partition")
    p.add_argument("--lambda", dest="lam", required=True, help="'empty', '{m}' or 'r mod d'")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--up", action="store_true")
    direction.add_argument("--down", action="store_true")

    p = sub.add_parser("linkage", parents=[common], help="Are two partitions linked?")
    p.add_argument("lower")
    p.add_argument("upper")

    p = sub.add_parser("construct", parents=[common, engine], help="Explicit valid sequences")
    p.add_argument("kind", choices=["box", "primitive", "komeda"])
    p.add_argument("partition", nargs="?", help="Target for 'primitive'")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int, help="Largest m for 'komeda'")

    p = sub.add_parser("semigroup", parents=[common], help="Numerical semigroup statistics")
    p.add_argument("spec", help="gens:2,3 or gaps:1,3,5")
    p.add_argument("--partition", action="store_true", help="Show the associated partition")
    p.add_argument("--witness", action="store_true", help="Show an imprimitivity witness")

    p = sub.add_parser("bn", parents=[common], help="Brill-Noether arithmetic")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--theorem", action="store_true", help="Check the main inequality chain")

    p = sub.add_parser("chain", parents=[common], help="Replay a certificate as a bridge chain")
    p.add_argument("--certificate", required=True, help="Certificate file (.json, .csv or text)")
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="Re-verify a certificate file")
    p.add_argument("--file", required=True, help="Certificate file (.json, .csv or text)")

    return parser


def run_cli(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns (exit code, text for stdout).

    Exit codes: 0 success, 1 domain or parse error, 2 verification failure.
    """
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.debug)
        if args.debug:
            console.print("[dim]Debug mode enabled[/dim]")
        report = COMMANDS[args.command](args)
        return 0, render(report, args.format)

    except SystemExit as e:
        # --help
        return (e.code if isinstance(e.code, int) else 0), ""
    except VerificationError as e:
        console.print(f"[red]error:[/red] {e.reason}: {escape(str(e))}", soft_wrap=True, highlight=False)
        return 2, ""
    except DisplacementError as e:
        console.print(f"[red]error:[/red] {e.reason}: {escape(str(e))}", soft_wrap=True, highlight=False)
        return 1, ""
    except OSError as e:
        console.print(f"[red]error:[/red] io: {escape(str(e))}", soft_wrap=True, highlight=False)
        return 1, ""
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted.[/yellow]")
        return 1, ""


def main():
    """Main CLI entry point."""
    code, text = run_cli(sys.argv[1:])
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
