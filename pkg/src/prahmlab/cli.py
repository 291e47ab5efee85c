"""Command-line interface for prahmlab."""

from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any, NoReturn

import click
import numpy as np
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from prahmlab import __version__
from prahmlab.core.config import RunConfig
from prahmlab.core.exceptions import ConfigError, PrahmLabError
from prahmlab.core.logging import setup_logging
from prahmlab.core.models import VerificationReport
from prahmlab.export import CSVExporter, HTMLExporter, JSONExporter
from prahmlab.helical import vh_sweep
from prahmlab.interaction import interaction_energy
from prahmlab.ladder import ladder_table
from prahmlab.packet import (
    AdvancedMap,
    PacketSpec,
    envelope_velocity_measure,
    spectrum_uncertainty,
    synth_packet,
    velocity_mode,
)
from prahmlab.txline import (
    SourceModel,
    TxLineSpec,
    closed_form_energy,
    planck_xi,
    planck_xi_closed_form,
    simulate,
)
from prahmlab.verification import SUITE_REGISTRY, resolve_suites, run_suites
from prahmlab.waveguide import ModeSpec

console = Console()

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

LADDER_M = tuple(range(21))
DISPERSION_M = "0,1,2,5"


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    console.print(f"[red]Error: {escape(message)}[/red]")
    raise SystemExit(code)


def _checked_mode(config: RunConfig) -> ModeSpec:
    try:
        return config.validate()
    except ConfigError as e:
        _fail(str(e))


def _parse_int_list(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> list[int] | None:
    """Comma-separated non-negative integers, e.g. "0,1,2,5"."""
    if value is None:
        return None
    try:
        values = [int(v) for v in value.split(",") if v.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from e
    if not values or min(values) < 0:
        raise click.BadParameter("M values must be non-negative integers")
    return values


def _output_path(out: str | None, config: RunConfig) -> Path | None:
    if out is None:
        return config.output.out
    if not out.strip():
        _fail("output path is empty")
    return Path(out)


def _write_table(schema: str, rows: Sequence[Mapping[str, Any]], path: Path | None) -> None:
    """Write rows to `path`, or to stdout when no path is configured."""
    exporter = CSVExporter(schema)
    if path is None:
        click.echo(exporter.export_string(rows), nl=False)
        return
    try:
        exporter.export(rows, path)
    except OSError as e:
        _fail(f"cannot write {path}: {e}", EXIT_IO)
    console.print(f"[green]Table saved to: {escape(str(path))}[/green]")


out_option = click.option(
    "-o", "--out",
    default=None,
    help="CSV output file (default: configured output path, else stdout)",
)


@click.group()
@click.option(
    "-c", "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="JSON run configuration; every key is optional",
)
@click.option(
    "-v", "--verbose",
    is_flag=True,
    help="Verbose output",
)
@click.version_option(version=__version__)
@click.pass_context
def main(ctx: click.Context, config_path: Path | None, verbose: bool) -> None:
    """prahmlab - numerical lab for helically modulated waveguide packets.

    Verify the analytic properties of retarded/advanced helical packets on
    sampled fields, and write CSV tables for plotting.

    Examples:

        # Run every verification suite and save an HTML report
        prahmlab verify --report report.html

        # Field trace of the M = 2 packet at the reference point
        prahmlab synth --M 2 --out packet.csv
    """
    setup_logging(verbose, console)
    if config_path is None:
        ctx.obj = RunConfig()
        return
    try:
        ctx.obj = RunConfig.from_file(config_path)
    except ConfigError as e:
        _fail(str(e))


@main.command("verify")
@click.option(
    "-s", "--suite",
    type=click.Choice(["all", *SUITE_REGISTRY]),
    default="all",
    show_default=True,
    help="Suite to run",
)
@click.option(
    "-r", "--report",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Report file (HTML or JSON based on extension)",
)
@click.pass_obj
def cmd_verify(config: RunConfig, suite: str, report: Path | None) -> None:
    """Run verification suites; exit 1 if any check fails."""
    _checked_mode(config)
    names = resolve_suites(suite)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
        console=console,
    ) as progress:
        task = progress.add_task("Running suites...", total=len(names))
        results = run_suites(config, names, on_suite=lambda _name: progress.advance(task))

    display_report(results)

    target = report or config.output.report
    if target is not None:
        exporter = JSONExporter() if target.suffix.lower() == ".json" else HTMLExporter()
        try:
            exporter.export(results, target)
        except OSError as e:
            _fail(f"cannot write {target}: {e}", EXIT_IO)
        console.print(f"\n[green]Report saved to: {escape(str(target))}[/green]")

    if not results.all_passed:
        raise SystemExit(EXIT_FAILED)


def synth_rows(spec: PacketSpec, samples: int) -> list[dict[str, float]]:
    """Packet fields at the reference point, z = 0, for τ across the window."""
    packet = synth_packet(spec)
    x, y = spec.mode.profile.reference_point()
    tau = np.linspace(-spec.tau1, spec.tau2, samples)
    _, env = packet.envelope(tau)
    sample = packet(x, y, 0.0, tau)
    components = {
        "Et_x": sample.Et.x,
        "Et_y": sample.Et.y,
        "cBt_x": sample.cBt.x,
        "cBt_y": sample.cBt.y,
        "Ez": sample.Ez,
        "cBz": sample.cBz,
    }
    columns: dict[str, np.ndarray] = {"tau": tau, "envelope": np.asarray(env, dtype=np.float64)}
    for name, values in components.items():
        full = np.broadcast_to(np.asarray(values, dtype=np.complex128), tau.shape)
        columns[f"{name}_re"] = full.real
        columns[f"{name}_im"] = full.imag
    return [{name: float(values[i]) for name, values in columns.items()} for i in range(samples)]


@main.command("synth")
@click.option("--M", "M", type=int, default=None, help="Excitation number (default: first configured M)")
@click.option("--phi", type=float, default=None, help="Inter-wave angle in radians")
@click.option("--Q", "Q", type=int, default=None, help="Trapped carrier periods")
@click.option(
    "--samples",
    type=click.IntRange(min=3),
    default=257,
    show_default=True,
    help="Rows across the packet window",
)
@out_option
@click.pass_obj
def cmd_synth(
    config: RunConfig,
    M: int | None,
    phi: float | None,
    Q: int | None,
    samples: int,
    out: str | None,
) -> None:
    """Field trace of one packet at the cross-section reference point.

    The observable packet does not depend on the advanced-wave map, so
    `packet.advanced_map` only matters to the interaction command.
    """
    mode = _checked_mode(config)
    path = _output_path(out, config)
    spec = PacketSpec(
        M=config.packet.M[0] if M is None else M,
        mode=mode,
        phi=config.packet.phi if phi is None else phi,
        Q=config.packet.Q if Q is None else Q,
    )
    try:
        rows = synth_rows(spec, samples)
    except PrahmLabError as e:
        _fail(str(e))
    _write_table("synth", rows, path)


@main.command("sweep-vh")
@click.option("--from", "start", type=float, default=0.8, show_default=True, help="First v_h/v_g ratio")
@click.option("--to", "stop", type=float, default=1.2, show_default=True, help="Last v_h/v_g ratio")
@click.option("--steps", type=int, default=41, show_default=True, help="Number of ratios")
@click.option(
    "--omega-scale",
    type=float,
    default=0.5,
    show_default=True,
    help="Helical frequency as a multiple of the carrier frequency",
)
@out_option
@click.pass_obj
def cmd_sweep_vh(
    config: RunConfig,
    start: float,
    stop: float,
    steps: int,
    omega_scale: float,
    out: str | None,
) -> None:
    """Curl-equation residual against the helical velocity ratio."""
    mode = _checked_mode(config)
    if steps < 2 or start <= 0 or stop <= start or omega_scale <= 0:
        _fail("sweep needs 0 < from < to, steps >= 2 and omega-scale > 0")
    path = _output_path(out, config)
    ratios = [round(float(r), 12) for r in np.linspace(start, stop, steps)]
    try:
        points = vh_sweep(mode, omega_scale * mode.omega, ratios)
    except PrahmLabError as e:
        _fail(str(e))
    _write_table("sweep", [{"ratio": p.ratio, "residual": p.residual} for p in points], path)


@main.command("dispersion")
@click.option(
    "--M", "M_values",
    callback=_parse_int_list,
    default=DISPERSION_M,
    show_default=True,
    help="Comma-separated excitation numbers",
)
@out_option
@click.pass_obj
def cmd_dispersion(config: RunConfig, M_values: list[int], out: str | None) -> None:
    """Envelope velocity and distortion per M on a narrow-profile mode."""
    mode = velocity_mode(_checked_mode(config))
    path = _output_path(out, config)
    try:
        reports = [
            envelope_velocity_measure(PacketSpec(M=M, mode=mode, phi=config.packet.phi))
            for M in M_values
        ]
    except PrahmLabError as e:
        _fail(str(e))
    rows = [{"M": r.M, "velocity": r.velocity, "distortion": r.distortion} for r in reports]
    _write_table("dispersion", rows, path)


@main.command("txline")
@click.option("--zeta", type=float, default=1.0, show_default=True, help="Source current scale")
@click.option(
    "--round-trips",
    type=click.IntRange(min=1),
    default=4,
    show_default=True,
    help="Simulated duration in round trips",
)
@click.option(
    "--source",
    type=click.Choice([m.value for m in SourceModel]),
    default=None,
    help=(
        "Source model (default: configured txline.source). 'matched' stops driving "
        "once the first echo returns; 'ideal' is a pure current source that takes "
        "the stored energy back on alternate round trips"
    ),
)
@out_option
@click.pass_obj
def cmd_txline(
    config: RunConfig, zeta: float, round_trips: int, source: str | None, out: str | None
) -> None:
    """Source power and stored energy of the shorted one-wavelength line."""
    _checked_mode(config)
    if zeta <= 0:
        _fail(f"zeta must be positive, got {zeta}")
    path = _output_path(out, config)
    t = config.txline
    try:
        spec = TxLineSpec(
            Z0=t.Z0,
            omega=t.omega,
            current=zeta * t.current,
            steps_per_transit=t.steps_per_transit,
            source=SourceModel(source or t.source),
        )
        trace = simulate(spec, round_trips * spec.round_trip)
        xi = planck_xi(zeta, omega=t.omega, Z0=t.Z0)
    except PrahmLabError as e:
        _fail(str(e))

    rows = [
        {"t": float(a), "power": float(b), "energy": float(c)}
        for a, b, c in zip(trace.t, trace.power, trace.stored, strict=True)
    ]
    _write_table("txline", rows, path)
    if path is not None:
        summary = f"""
[bold]Source model:[/bold] {spec.source.value}
[bold]Stored energy:[/bold] {trace.stored[-1]:.6g} J
[bold]Closed form:[/bold] {closed_form_energy(spec):.6g} J
[bold]Planck factor:[/bold] {xi:.6g} (closed form {planck_xi_closed_form(t.Z0):.6g})
"""
        console.print(Panel(summary.strip(), title="[bold]Transmission line[/bold]", border_style="blue"))


@main.command("spectrum")
@click.option(
    "--M", "M_values",
    callback=_parse_int_list,
    default=None,
    help="Comma-separated excitation numbers (default: configured M)",
)
@click.option("--Q", "Q", type=int, default=None, help="Trapped carrier periods")
@out_option
@click.pass_obj
def cmd_spectrum(
    config: RunConfig, M_values: list[int] | None, Q: int | None, out: str | None
) -> None:
    """Temporal and spectral widths of the packet envelope."""
    mode = _checked_mode(config)
    path = _output_path(out, config)
    rows = []
    try:
        for M in M_values or config.packet.M:
            spec = PacketSpec(
                M=M, mode=mode, phi=config.packet.phi, Q=config.packet.Q if Q is None else Q
            )
            report = spectrum_uncertainty(spec)
            rows.append(
                {
                    "M": report.M,
                    "Q": report.Q,
                    "dw": report.delta_omega,
                    "dt": report.delta_t,
                    "product": report.product,
                }
            )
    except PrahmLabError as e:
        _fail(str(e))
    _write_table("spectrum", rows, path)


@main.command("ladder")
@click.option(
    "--M", "M_values",
    callback=_parse_int_list,
    default=None,
    help="Comma-separated excitation numbers (default: 0-20)",
)
@out_option
@click.pass_obj
def cmd_ladder(config: RunConfig, M_values: list[int] | None, out: str | None) -> None:
    """Ladder coefficients, commutator and number-operator deviations."""
    mode = _checked_mode(config)
    path = _output_path(out, config)
    try:
        rows = ladder_table(M_values or LADDER_M, omega=mode.omega)
    except PrahmLabError as e:
        _fail(str(e))

    table = Table(title="[bold cyan]Ladder operators[/bold cyan]")
    for column in ("M", "coeff", "number_dev", "commutator_dev", "energy"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(
            str(row["M"]),
            f"{row['coeff']:.12g}",
            f"{row['number_dev']:.3e}",
            f"{row['commutator_dev']:.3e}",
            f"{row['energy']:.12g}",
        )
    console.print(table)

    if path is not None:
        _write_table("ladder", rows, path)


@main.command("interaction")
@click.option(
    "--M", "M_values",
    callback=_parse_int_list,
    default=None,
    help="Comma-separated excitation numbers (default: configured M)",
)
@click.option(
    "--map", "maps",
    type=click.Choice([m.value for m in AdvancedMap]),
    multiple=True,
    help="Advanced-wave map (repeatable; default: configured packet.advanced_map)",
)
@out_option
@click.pass_obj
def cmd_interaction(
    config: RunConfig, M_values: list[int] | None, maps: tuple[str, ...], out: str | None
) -> None:
    """Interaction energy and per-quantum constant of each packet."""
    mode = _checked_mode(config)
    path = _output_path(out, config)
    rows = []
    try:
        for M in M_values or config.packet.M:
            spec = PacketSpec(M=M, mode=mode, phi=config.packet.phi, Q=config.packet.Q)
            for advanced_map in maps or (config.packet.advanced_map,):
                result = interaction_energy(spec, AdvancedMap(advanced_map))
                rows.append(
                    {"M": result.M, "map": result.map, "value": result.value, "constant": result.constant}
                )
    except PrahmLabError as e:
        _fail(str(e))

    table = Table(title="[bold magenta]Interaction energy[/bold magenta]")
    for column in ("M", "map", "value", "constant"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(str(row["M"]), row["map"], f"{row['value']:.9g}", f"{row['constant']:.9g}")
    console.print(table)

    if path is not None:
        _write_table("interaction", rows, path)


def display_report(report: VerificationReport) -> None:
    """Display verification results in formatted tables."""
    console.print("\n")

    stats = report.stats
    status = "[green]all checks passed[/green]" if report.all_passed else "[red]FAILED[/red]"
    summary = f"""
[bold]Suites run:[/bold] {stats['suites']}
[bold]Checks:[/bold] {stats['total_checks']}
[bold]Passed:[/bold] {stats['passed']}
[bold]Failed:[/bold] {stats['failed']}
[bold]Suite errors:[/bold] {stats['errors']}
[bold]Status:[/bold] {status}
"""
    console.print(Panel(summary.strip(), title="[bold]Summary[/bold]", border_style="blue"))

    for suite, checks in report.by_suite().items():
        if not checks:
            continue
        table = Table(title=f"[bold cyan]{suite}[/bold cyan]")
        table.add_column("Check", style="cyan")
        table.add_column("Measured", justify="right")
        table.add_column("Tolerance", justify="right")
        table.add_column("Result")
        for check in checks:
            result = "[green]pass[/green]" if check.passed else "[red]FAIL[/red]"
            table.add_row(check.name, f"{check.measured:.6g}", escape(check.tolerance_text()), result)
        console.print(table)
        console.print()

    if report.errors:
        table = Table(title="[bold red]Suite errors[/bold red]")
        table.add_column("Suite", style="red")
        table.add_column("Error")
        for suite, error in report.errors:
            table.add_row(suite, escape(error))
        console.print(table)


if __name__ == "__main__":
    main()
