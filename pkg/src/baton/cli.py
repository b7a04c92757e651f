"""Command-line interface.

Subcommands cover the non-interactive workflow: emit built-in patterns,
validate and reflect documents, render curve diagrams and speed plots,
export motion samples, and launch the playback service.  ``-`` means stdin
or stdout.  Exit codes: 0 success, 1 validation errors, 2 usage errors,
3 I/O errors.
"""

from __future__ import annotations

import sys

import click

from .motion import sample_trajectory
from .patterns import (
    SUPPORTED_DEFAULT_BEATS,
    PatternDocument,
    PatternFormatError,
    default_document,
    parse_document,
    reflect_pattern,
    serialize_document,
    validate_pattern,
)
from .render import RenderOptions, export_samples, render_curve, render_speed_plot
from .timing import Tempo, TimingLaw

_IO_ERROR = 3
_VALIDATION_ERROR = 1


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(_IO_ERROR)


def _write_output(path: str, text: str) -> None:
    if path == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {path}: {exc}", err=True)
        sys.exit(_IO_ERROR)


def _load_document(path: str) -> PatternDocument:
    try:
        return parse_document(_read_source(path))
    except PatternFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(_VALIDATION_ERROR)


def _check_beta(beta: float) -> float:
    if not 0.0 <= beta <= 1.0:
        raise click.BadParameter(f"must be in [0, 1], got {beta}", param_hint="--beta")
    return beta


def _check_bpm(bpm: float) -> float:
    if not bpm > 0.0:
        raise click.BadParameter(f"must be > 0, got {bpm}", param_hint="--bpm")
    return bpm


def _law(document: PatternDocument, bpm: float, beta: float) -> TimingLaw:
    return TimingLaw(
        tempo=Tempo(beats=document.pattern.beats, bpm=_check_bpm(bpm)),
        speed_balance=_check_beta(beta),
    )


@click.group()
@click.version_option(package_name="baton")
def main() -> None:
    """Conducting pattern toolkit: closed Hermite curves under an ease timing law."""


@main.command()
@click.option("--beats", type=int, required=True, help="Beat count: 2, 3, 4 or 6.")
@click.option("--out", default="-", help="Output path, or - for stdout.")
def defaults(beats: int, out: str) -> None:
    """Emit a built-in pattern document."""
    if beats not in SUPPORTED_DEFAULT_BEATS:
        raise click.BadParameter(
            f"no built-in pattern for {beats} beats; choose one of "
            f"{', '.join(map(str, SUPPORTED_DEFAULT_BEATS))}",
            param_hint="--beats",
        )
    _write_output(out, serialize_document(default_document(beats)))


@main.command()
@click.argument("file")
def validate(file: str) -> None:
    """Check FILE against the model's conventions; exit 0 iff no errors."""
    document = _load_document(file)
    report = validate_pattern(document.pattern)
    for finding in report.findings:
        where = "" if finding.anchor_index is None else f" anchors[{finding.anchor_index}]"
        click.echo(f"{finding.severity.value} {finding.code}{where}: {finding.message}")
    click.echo(f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)")
    if not report.ok:
        sys.exit(_VALIDATION_ERROR)


@main.command()
@click.argument("file")
@click.option("--out", default="-", help="Output path, or - for stdout.")
def reflect(file: str, out: str) -> None:
    """Mirror FILE between conductor and performer views."""
    document = _load_document(file)
    mirrored = PatternDocument(
        pattern=reflect_pattern(document.pattern),
        name=document.name,
        description=document.description,
        format_version=document.format_version,
        extras=document.extras,
    )
    _write_output(out, serialize_document(mirrored))


@main.command()
@click.argument("file")
@click.option("--out", default="-", help="Output path, or - for stdout.")
@click.option("--labels/--no-labels", default=False, help="Tag anchors P1, I1, ...")
def render(file: str, out: str, labels: bool) -> None:
    """Render FILE as an SVG curve diagram."""
    document = _load_document(file)
    opts = RenderOptions(show_labels=labels)
    _write_output(out, render_curve(document.pattern, opts))


@main.command()
@click.argument("file")
@click.option("--bpm", type=float, default=60.0, show_default=True)
@click.option("--beta", type=float, default=0.6, show_default=True,
              help="Speed balance in [0, 1].")
@click.option("--out", default="-", help="Output path, or - for stdout.")
def speed(file: str, bpm: float, beta: float, out: str) -> None:
    """Render an SVG speed plot (phase rate and tip speed over one cycle)."""
    document = _load_document(file)
    law = _law(document, bpm, beta)
    opts = RenderOptions(show_labels=True)
    _write_output(out, render_speed_plot(document.pattern, law, opts))


@main.command()
@click.argument("file")
@click.option("--bpm", type=float, default=60.0, show_default=True)
@click.option("--beta", type=float, default=0.6, show_default=True,
              help="Speed balance in [0, 1].")
@click.option("--from", "t0", type=float, default=0.0, show_default=True,
              help="Window start, seconds.")
@click.option("--to", "t1", type=float, default=None,
              help="Window end, seconds. [default: one cycle]")
@click.option("--count", type=int, default=101, show_default=True,
              help="Number of samples (>= 2).")
@click.option("--format", "fmt", type=click.Choice(["table", "structured"]),
              default="table", show_default=True)
@click.option("--out", default="-", help="Output path, or - for stdout.")
def sample(file: str, bpm: float, beta: float, t0: float, t1: float | None,
           count: int, fmt: str, out: str) -> None:
    """Export motion samples over a time window."""
    document = _load_document(file)
    law = _law(document, bpm, beta)
    if t1 is None:
        t1 = law.tempo.cycle_duration
    if t0 < 0.0 or t1 <= t0:
        raise click.BadParameter(
            f"need 0 <= from < to, got from={t0}, to={t1}", param_hint="--from/--to"
        )
    if count < 2:
        raise click.BadParameter(f"must be >= 2, got {count}", param_hint="--count")
    samples = sample_trajectory(document.pattern, law, t0, t1, count)
    _write_output(out, export_samples(samples, fmt))


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port: int, host: str) -> None:
    """Run the playback service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
