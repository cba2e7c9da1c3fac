from __future__ import annotations

import logging
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from netorder.exceptions import NetOrderError
from netorder.model.documents import parse_instance
from netorder.planner.modes import PlannerMode, plan_with
from netorder.planner.plan import WaitedPlan, serialize_plan

logger = logging.getLogger(__name__)

PLAN_SUFFIX = ".plan.json"


@dataclass(frozen=True, slots=True, kw_only=True)
class BatchOutcome:
    """Result of planning one packet type of a batch."""

    name: str
    output: Path | None = None
    plan: WaitedPlan | None = None
    error: str | None = None


def plan_directory(
    directory: Path,
    *,
    output_dir: Path,
    mode: PlannerMode,
    workers: int,
) -> list[BatchOutcome]:
    """Plan every instance file in `directory`, each packet type independently.

    Plans are written next to each other in `output_dir` as `<name>.plan.json`.
    Outcomes come back in file-name order whatever order the workers finish in.
    """

    files = sorted(
        path for path in directory.glob("*.json") if not path.name.endswith(PLAN_SUFFIX)
    )
    logger.debug("Planning %d instance files with %d workers", len(files), workers)

    task = partial(_plan_file, output_dir=output_dir, mode=mode)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, files))


def write_atomic(target: Path, text: str) -> None:
    """Write `text` to `target` so readers never observe a partial file."""

    target.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        "w",
        encoding="utf-8",
        dir=target.parent,
        prefix=f".{target.name}.",
        suffix=".tmp",
        delete=False,
    ) as handle:
        handle.write(text)
        temporary = Path(handle.name)
    temporary.replace(target)


def _plan_file(path: Path, *, output_dir: Path, mode: PlannerMode) -> BatchOutcome:
    name = path.name.removesuffix(".json")
    try:
        instance = parse_instance(path.read_text(encoding="utf-8"), reduce_sources=True)
    except NetOrderError as exc:
        logger.warning("Skipping %s: %s", path.name, exc)
        return BatchOutcome(name=name, error=str(exc))

    plan = plan_with(instance, mode)
    output = output_dir / f"{name}{PLAN_SUFFIX}"
    write_atomic(output, serialize_plan(plan))
    return BatchOutcome(name=name, output=output, plan=plan)
