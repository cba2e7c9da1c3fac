from __future__ import annotations

from collections.abc import Callable, Sequence
from enum import StrEnum
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from netorder.adapters.cli.batch import plan_directory
from netorder.adapters.cli.console import configure_logging, stderr_console
from netorder.adapters.cli.rendering import Shade, plan_step_shades, render_dot
from netorder.exceptions import NetOrderError
from netorder.instances.fixtures import Fixture, fixture, fixtures
from netorder.instances.generator import GeneratorMode, generate_random
from netorder.model.documents import parse_instance, serialize_instance
from netorder.model.network import NetworkInstance, NodeId
from netorder.model.updates import apply_rounds
from netorder.oracle.search import search_min_rounds
from netorder.oracle.verifier import verify_plan
from netorder.planner.modes import PlannerMode, plan_with
from netorder.planner.plan import parse_plan, serialize_plan
from netorder.settings import Settings
from netorder.shared.manager import BaseManager

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 2

_LOG_LEVELS = ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]


class RenderTarget(StrEnum):
    INITIAL = "initial"
    FINAL = "final"
    UNION = "union"
    PLAN_STEP = "plan-step"


def _choices(enum: type[StrEnum]) -> click.Choice[str]:
    return click.Choice([member.value for member in enum], case_sensitive=False)


def instance_source[F: Callable[..., Any]](command: F) -> F:
    """Accept an instance either as a file argument or as `--fixture NAME`."""

    command = click.option(
        "--fixture",
        "fixture_name",
        metavar="NAME",
        help="Use a bundled fixture instead of an instance file.",
    )(command)
    return click.argument(
        "instance_path",
        metavar="[INSTANCE]",
        required=False,
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
    )(command)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--log-level",
    type=click.Choice(_LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
    envvar="NETORDER_LOG_LEVEL",
    show_envvar=True,
)
@click.pass_context
def app(ctx: click.Context, log_level: str) -> None:
    """Plan per-packet consistent network updates."""

    settings = _validated({"log_level": log_level.upper()})
    configure_logging(settings.log_level)
    ctx.obj = settings


@app.command("plan")
@instance_source
@click.option("--mode", type=_choices(PlannerMode), default="optimal", show_default=True)
@click.option(
    "--batch",
    "batch_dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    help="Plan every instance file of a directory, one per packet type.",
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="Where batch plans go; defaults to the batch directory.",
)
@click.option("--workers", type=int, envvar="NETORDER_BATCH_WORKERS", show_envvar=True)
@click.option("--check-invariants", is_flag=True, help="Run the self-checking planner.")
@click.pass_context
def plan_command(  # noqa: PLR0913, PLR0917
    ctx: click.Context,
    instance_path: Path | None,
    fixture_name: str | None,
    mode: str,
    batch_dir: Path | None,
    output_dir: Path | None,
    workers: int | None,
    check_invariants: bool,  # noqa: FBT001
) -> int:
    """Compute a waited update plan."""

    planner_mode = PlannerMode(mode.lower())
    if batch_dir is not None:
        if instance_path is not None or fixture_name is not None:
            msg = "--batch cannot be combined with an instance"
            raise click.UsageError(msg)
        settings = _settings(ctx, batch_workers=workers)
        return _plan_batch(batch_dir, output_dir or batch_dir, planner_mode, settings.batch_workers)

    instance = _load_instance(instance_path, fixture_name)
    plan = plan_with(instance, planner_mode, check_invariants=check_invariants)
    click.echo(serialize_plan(plan), nl=False)
    return EXIT_OK if plan.solved else EXIT_NEGATIVE


@app.command("verify")
@instance_source
@click.option(
    "--plan",
    "plan_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--exhaustive-limit",
    type=int,
    envvar="NETORDER_EXHAUSTIVE_ROUND_LIMIT",
    show_envvar=True,
    help="Largest round checked over all of its permutations.",
)
@click.pass_context
def verify_command(
    ctx: click.Context,
    instance_path: Path | None,
    fixture_name: str | None,
    plan_path: Path,
    exhaustive_limit: int | None,
) -> int:
    """Check a plan file against an instance."""

    settings = _settings(ctx, exhaustive_round_limit=exhaustive_limit)
    instance = _load_instance(instance_path, fixture_name)
    plan = parse_plan(plan_path.read_text(encoding="utf-8"))
    report = verify_plan(instance, plan, exhaustive_limit=settings.exhaustive_round_limit)
    click.echo(report.to_document().model_dump_json(indent=2))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


@app.command("oracle")
@instance_source
@click.option(
    "--node-limit",
    type=int,
    envvar="NETORDER_ORACLE_NODE_LIMIT",
    show_envvar=True,
    help="Most changed nodes the exhaustive search accepts.",
)
@click.option("--careful", is_flag=True, help="Only update nodes that are valid when updated.")
@click.pass_context
def oracle_command(
    ctx: click.Context,
    instance_path: Path | None,
    fixture_name: str | None,
    node_limit: int | None,
    careful: bool,  # noqa: FBT001
) -> int:
    """Find the minimal number of rounds by exhaustive search."""

    settings = _settings(ctx, oracle_node_limit=node_limit)
    instance = _load_instance(instance_path, fixture_name)
    result = search_min_rounds(instance, settings.oracle_node_limit, careful=careful)
    click.echo(result.to_document().model_dump_json(indent=2))
    return EXIT_OK if result.exists else EXIT_NEGATIVE


@app.command("gen")
@click.option("--nodes", type=int, required=True)
@click.option("--density", type=float, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--mode", type=_choices(GeneratorMode), default="independent", show_default=True)
@click.option("--rewire", type=int, default=2, show_default=True)
def gen_command(nodes: int, density: float, seed: int, mode: str, rewire: int) -> int:
    """Print a random instance."""

    generator_mode = GeneratorMode(mode.lower())
    instance = generate_random(nodes, density, seed, mode=generator_mode, rewire=rewire)
    click.echo(serialize_instance(instance), nl=False)
    return EXIT_OK


@app.command("render")
@instance_source
@click.option("--target", type=_choices(RenderTarget), default="initial", show_default=True)
@click.option("--step", type=click.IntRange(min=0), help="Rounds applied for plan-step.")
@click.option("--mode", type=_choices(PlannerMode), default="optimal", show_default=True)
def render_command(
    instance_path: Path | None,
    fixture_name: str | None,
    target: str,
    step: int | None,
    mode: str,
) -> int:
    """Print a configuration as a DOT graph."""

    instance = _load_instance(instance_path, fixture_name)
    render_target = RenderTarget(target.lower())
    shades: dict[NodeId, Shade] = {}
    match render_target:
        case RenderTarget.INITIAL:
            configuration = instance.initial
        case RenderTarget.FINAL:
            configuration = instance.final
        case RenderTarget.UNION:
            configuration = instance.initial.union(instance.final)
        case RenderTarget.PLAN_STEP:
            if step is None:
                msg = "--target plan-step needs --step K"
                raise click.UsageError(msg)
            plan = plan_with(instance, PlannerMode(mode.lower()))
            if step > len(plan.rounds):
                msg = f"--step {step} exceeds the {len(plan.rounds)} rounds of the plan"
                raise click.UsageError(msg)
            configuration = apply_rounds(instance, instance.initial, plan.rounds[:step])
            shades = plan_step_shades(plan.rounds, step)

    name = render_target.value if step is None else f"{render_target.value}-{step}"
    click.echo(render_dot(instance, configuration, name=name, shades=shades), nl=False)
    return EXIT_OK


@app.command("fixtures")
@click.option("--solvable/--unsolvable", default=None, help="Keep only (un)solvable fixtures.")
@click.option("--min-rounds", type=click.IntRange(min=0), help="Keep fixtures needing >= N rounds.")
@click.option("--max-rounds", type=click.IntRange(min=0), help="Keep fixtures needing <= N rounds.")
@click.option("--name", "name_part", metavar="TEXT", help="Keep fixtures whose name contains TEXT.")
@click.option(
    "--skip",
    "skipped",
    metavar="TEXT",
    multiple=True,
    help="Drop fixtures whose name contains TEXT; repeatable.",
)
def fixtures_command(
    *,
    solvable: bool | None,
    min_rounds: int | None,
    max_rounds: int | None,
    name_part: str | None,
    skipped: tuple[str, ...],
) -> int:
    """List the bundled fixtures and what is expected of them."""

    selected: BaseManager[Fixture] = fixtures
    if solvable is not None:
        selected = selected.filter(solvable=solvable)
    # solvable goes first: min_rounds is None for unsolvable fixtures.
    if min_rounds is not None:
        selected = selected.filter(solvable=True, min_rounds__gte=min_rounds)
    if max_rounds is not None:
        selected = selected.filter(solvable=True, min_rounds__lte=max_rounds)
    if name_part is not None:
        selected = selected.filter(name__contains=name_part)
    for part in skipped:
        selected = selected.exclude(name__contains=part)

    table = Table(title="Fixtures")
    table.add_column("name", no_wrap=True)
    table.add_column("solvable")
    table.add_column("min rounds", justify="right")
    table.add_column("provenance")
    table.add_column("notes")
    for item in selected:
        expected = item.expected
        table.add_row(
            item.name,
            "yes" if expected.solvable else "no",
            "-" if expected.min_rounds is None else str(expected.min_rounds),
            ", ".join(f"{key}={value}" for key, value in sorted(expected.provenance.items())),
            expected.notes,
        )
    Console().print(table)
    return EXIT_OK


def _plan_batch(directory: Path, output_dir: Path, mode: PlannerMode, workers: int) -> int:
    outcomes = plan_directory(directory, output_dir=output_dir, mode=mode, workers=workers)

    table = Table(title=f"Batch plans ({mode})")
    table.add_column("packet type", no_wrap=True)
    table.add_column("status")
    table.add_column("rounds", justify="right")
    table.add_column("output")
    for outcome in outcomes:
        if outcome.plan is None:
            table.add_row(outcome.name, "error", "-", outcome.error or "")
        else:
            table.add_row(
                outcome.name,
                str(outcome.plan.status),
                str(len(outcome.plan.rounds)),
                str(outcome.output),
            )
    stderr_console().print(table)

    if any(outcome.plan is None for outcome in outcomes):
        return EXIT_INPUT_ERROR
    if any(outcome.plan is not None and not outcome.plan.solved for outcome in outcomes):
        return EXIT_NEGATIVE
    return EXIT_OK


def _load_instance(path: Path | None, fixture_name: str | None) -> NetworkInstance:
    if path is not None and fixture_name is None:
        return parse_instance(path.read_text(encoding="utf-8"), reduce_sources=True)
    if fixture_name is not None and path is None:
        return fixture(fixture_name).instance

    msg = "Pass either an INSTANCE file or --fixture NAME"
    raise click.UsageError(msg)


def _settings(ctx: click.Context, **overrides: int | None) -> Settings:
    base = ctx.find_object(Settings) or Settings()
    given = {key: value for key, value in overrides.items() if value is not None}
    values = base.model_dump() | given
    return _validated(values)


def _validated(values: dict[str, Any]) -> Settings:
    try:
        return Settings.model_validate(values)
    except ValidationError as exc:
        errors = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in exc.errors()
        )
        msg = f"Invalid settings: {errors}"
        raise click.UsageError(msg) from exc


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code.

    0 means success, 2 a negative answer (no consistent order, a plan violation, no
    oracle solution) and 1 a usage or input error.
    """

    try:
        result = app.main(
            args=None if argv is None else list(argv),
            prog_name="netorder",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT_ERROR
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INPUT_ERROR
    except (NetOrderError, OSError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_INPUT_ERROR

    return result if isinstance(result, int) else EXIT_OK
