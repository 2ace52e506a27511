from collections.abc import Iterator
from dataclasses import dataclass
from typing import Annotated

from pydantic import ValidationError
from typer import Argument, Context, Exit, Option, Typer, echo

from app.common.constants import CORPUS_DIR_ENV_NAME
from app.common.getenv import getenv
from app.common.logger import logger
from app.core.settings import Settings
from app.dependencies import get_settings, get_workbench
from app.models import RunConfig
from app.services.zigzag import CorpusRunner, Workspace, ZigzagWorkbench
from app.services.zigzag.common import (
    CertificationFailure,
    ErrorStrategy,
    ExitCode,
    UsageError,
    handle_zigzag_exceptions,
)
from app.services.zigzag.common.logger import logger as zigzag_logger
from app.services.zigzag.models import Command, OutputFormat
from app.services.zigzag.models.reports import (
    CertificateRecord,
    ChaseRecord,
    CohomologyRecord,
    NerveRecord,
    SaturationRecord,
    Status,
)

from .constants import (
    CERTIFY_HELP,
    CHASE_HELP,
    CLI_DESC,
    CLI_TITLE,
    COHOMOLOGY_HELP,
    CORPUS_HELP,
    DEGREE_HELP,
    INPUT_HELP,
    NERVE_HELP,
    SATURATE_HELP,
)
from .helpers import corpus_tables, emit, print_tables, set_debug

InputArg = Annotated[str, Argument(help=INPUT_HELP, show_default=False)]
DegreeOpt = Annotated[int | None, Option("--degree", "-k", help=DEGREE_HELP, min=0)]


@dataclass
class CliState:
    settings: Settings
    verbose: bool = False


def version_callback(value: bool) -> None:
    if value:
        settings = get_settings()
        echo(f"{settings.PACKAGE_NAME} v{settings.VERSION}")
        if settings.DESCRIPTION:
            echo(settings.DESCRIPTION)
        raise Exit()


def _prepare(
    ctx: Context, command: Command, target: str | None = None, degree: int | None = None
) -> tuple[RunConfig, ZigzagWorkbench]:
    state: CliState = ctx.obj
    try:
        config = RunConfig(
            command=command,
            input=target,
            degree=degree,
            output_format=state.settings.OUTPUT_FORMAT,
            verbose=state.verbose,
            seed=state.settings.SEED,
        )
    except ValidationError as e:
        raise UsageError("; ".join(error["msg"] for error in e.errors())) from e
    return config, get_workbench(state.settings)


def _nerve_lines(record: NerveRecord) -> Iterator[str]:
    yield f"nerve of {record.name}: dimension {record.dimension}, f-vector {tuple(record.f_vector)}"
    start = 0
    for dim, count in enumerate(record.f_vector):
        yield f"  dim {dim}: " + " ".join(record.simplices[start : start + count])
        start += count


def _saturation_lines(record: SaturationRecord) -> Iterator[str]:
    yield f"saturation of {record.name}"
    yield "  original: " + " ".join(record.original)
    yield "  added: " + (" ".join(record.added) or "-")
    yield "  order: " + " ".join(record.order)


def _cohomology_lines(record: CohomologyRecord) -> Iterator[str]:
    space = f", X {record.space}" if record.space is not None else ""
    yield (
        f"H^{record.degree}({record.name}): Čech {record.cech}, nerve {record.nerve}{space}"
        f" [{record.generators} generators]"
    )


def _chase_lines(record: ChaseRecord) -> Iterator[str]:
    kind = "free" if record.order == 0 else f"order {record.order}"
    yield f"generator {record.generator} of H^{record.degree}({record.name}) [{kind}]"
    yield f"  alpha:     {record.alpha}"
    yield f"  chased:    {record.chased}"
    yield f"  evaluated: {record.evaluated}"


def _certificate_lines(record: CertificateRecord) -> Iterator[str]:
    yield (
        f"generator {record.generator} of H^{record.degree}({record.name}): {record.status.value}"
        f" (sign {record.sign:+d})"
    )
    yield f"  chased - evaluated = δ̌ {record.witness}"


def _saturation_record(ws: Workspace) -> SaturationRecord:
    order = list(ws.datum.indices)
    original = list(ws.original.labels) if ws.original is not None else order
    added = [i for i in order if i not in set(original)]
    return SaturationRecord(name=ws.name, original=original, added=added, order=order)


def create_application() -> Typer:  # noqa: PLR0915
    app = Typer(
        name="cech-zigzag",
        help=f"{CLI_TITLE}\n{CLI_DESC}",
        rich_markup_mode="rich",
        add_completion=False,
        no_args_is_help=True,
        pretty_exceptions_show_locals=False,
    )

    @app.callback()
    def main(
        ctx: Context,
        version: bool = Option(
            False,
            "--version",
            "-V",
            help="Show the version and exit.",
            is_eager=True,
            callback=version_callback,
        ),
        output_format: Annotated[
            OutputFormat | None,
            Option("--format", "-f", help="human or records (one key=value line per result)."),
        ] = None,
        seed: Annotated[
            int | None, Option("--seed", help="Seed for the randomised checks.")
        ] = None,
        verbose: Annotated[bool, Option("--verbose", "-v", help="Debug logging.")] = False,
    ) -> None:
        """Global options shared by every command."""
        settings = get_settings()
        overrides: dict[str, object] = {}
        if output_format is not None:
            overrides["OUTPUT_FORMAT"] = output_format
        if seed is not None:
            overrides["SEED"] = seed
        if verbose:
            set_debug(logger, zigzag_logger)
        ctx.obj = CliState(settings.model_copy(update=overrides), verbose)

    @app.command(name="nerve", help=NERVE_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def nerve(ctx: Context, target: InputArg) -> None:
        config, workbench = _prepare(ctx, Command.NERVE, target)
        ws = workbench.workspace(target)
        complex = ws.base_nerve
        record = NerveRecord(
            name=ws.name,
            dimension=complex.dimension,
            f_vector=list(complex.f_vector()),
            simplices=[str(s) for s in complex],
        )
        emit([record], config.output_format, _nerve_lines)

    @app.command(name="saturate", help=SATURATE_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def saturate(ctx: Context, target: InputArg) -> None:
        config, workbench = _prepare(ctx, Command.SATURATE, target)
        emit([_saturation_record(workbench.workspace(target))], config.output_format, _saturation_lines)

    @app.command(name="cohomology", help=COHOMOLOGY_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def cohomology(ctx: Context, target: InputArg, degree: DegreeOpt = None) -> None:
        config, workbench = _prepare(ctx, Command.COHOMOLOGY, target, degree)
        ws = workbench.workspace(target)
        records = []
        for k in workbench.degrees(ws, config.degree):
            groups = workbench.groups(ws, k)
            records.append(
                CohomologyRecord(
                    name=ws.name,
                    degree=k,
                    cech=str(groups.cech),
                    nerve=str(groups.nerve),
                    space=None if groups.space is None else str(groups.space),
                    generators=groups.generators,
                )
            )
        emit(records, config.output_format, _cohomology_lines)

    @app.command(name="chase", help=CHASE_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def chase(ctx: Context, target: InputArg, degree: DegreeOpt = None) -> None:
        config, workbench = _prepare(ctx, Command.CHASE, target, degree)
        ws = workbench.workspace(target)
        records = [
            ChaseRecord(
                name=ws.name,
                degree=k,
                generator=result.generator,
                order=result.order,
                alpha=str(result.alpha),
                chased=str(result.chased),
                evaluated=str(result.evaluated),
            )
            for k in workbench.degrees(ws, config.degree)
            for result in workbench.chase(ws, k)
        ]
        emit(records, config.output_format, _chase_lines)

    @app.command(name="certify", help=CERTIFY_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def certify(ctx: Context, target: InputArg, degree: DegreeOpt = None) -> None:
        config, workbench = _prepare(ctx, Command.CERTIFY, target, degree)
        ws = workbench.workspace(target)
        for k in workbench.degrees(ws, config.degree):
            try:
                certificates = workbench.certify(ws, k)
            except CertificationFailure as e:
                if e.counterexample is not None:
                    echo(e.counterexample.dump())
                raise
            if not certificates and config.output_format is OutputFormat.HUMAN:
                echo(f"H^{k}({ws.name}): no generators")
            records = [
                CertificateRecord(
                    name=ws.name,
                    degree=k,
                    generator=i,
                    sign=c.sign,
                    status=Status.PASS if c.all_checked else Status.FAIL,
                    alpha=str(c.alpha),
                    chased=str(c.chased),
                    evaluated=str(c.evaluated),
                    witness=str(c.witness),
                )
                for i, c in enumerate(certificates)
            ]
            emit(records, config.output_format, _certificate_lines)

    @app.command(name="corpus", help=CORPUS_HELP)
    @handle_zigzag_exceptions(ErrorStrategy.EXIT_CODE)
    def corpus(ctx: Context) -> None:
        config, workbench = _prepare(ctx, Command.CORPUS)
        if (override := getenv(CORPUS_DIR_ENV_NAME).as_path()) is not None:
            logger.info(f"corpus directory from {CORPUS_DIR_ENV_NAME}: {override}")
        report = CorpusRunner(workbench).run()
        if config.output_format is OutputFormat.RECORDS:
            for record in [*report.checks, *report.rows]:
                echo(record.to_record())
        else:
            print_tables(*corpus_tables(report))
        if not report.passed:
            code = ExitCode.CERTIFICATION if report.certification_failed else ExitCode.INVARIANT
            raise Exit(code=int(code))

    return app


app = create_application()
