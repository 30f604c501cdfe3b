"""Command-line front end.

Four subcommands cover the full workflow: ``generate`` writes reference
signals, ``analyze`` runs the regularity test on one file, ``psd`` writes a
normalized spectrum, and ``batch`` processes a manifest of files into a
summary table.

Exit codes follow one taxonomy everywhere: 2 for usage or invalid
parameters, 3 for I/O failures, 4 for data that cannot be analyzed.
"""

from __future__ import annotations

import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from .core import (
    TWO_PI,
    DEFAULT_N0_FRACTION,
    Aggregator,
    ClassificationBands,
    Method,
    TestConfig,
    run_test,
    translation_variables,
)
from .errors import (
    AllDegenerateError,
    Chaos01Error,
    DivergenceError,
    InvalidParameterError,
    MissingSampleRateError,
    SeriesFormatError,
    SeriesTooShortError,
)
from .seriesio import (
    SeriesFile,
    SeriesFormat,
    WindowPlan,
    export_psd,
    export_result,
    export_scatter,
    export_trajectory,
    load_series,
    segment,
    write_series,
)
from .signals import GeneratorKind, GeneratorSpec, make_series
from .spectral import psd as compute_psd

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DATA = 4

_DATA_ERRORS = (SeriesFormatError, MissingSampleRateError, SeriesTooShortError, AllDegenerateError)

_FORMAT_CHOICE = click.Choice([f.value for f in SeriesFormat])

_AGGREGATOR_ALIASES = {
    "trimmed": Aggregator.TRIMMED_MEAN,
    "trimmed_mean": Aggregator.TRIMMED_MEAN,
    "mean": Aggregator.MEAN,
    "median": Aggregator.MEDIAN,
}


def _fail(code: int, message) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(body):
    """Run a command body, translating package errors to exit codes."""
    try:
        return body()
    except (InvalidParameterError, DivergenceError) as exc:
        _fail(EXIT_USAGE, exc)
    except _DATA_ERRORS as exc:
        _fail(EXIT_DATA, exc)
    except OSError as exc:
        _fail(EXIT_IO, exc)


@click.group()
@click.version_option(package_name="chaos01")
def main():
    """Detect chaos in scalar time series with a 0-1 style growth-rate test."""


@main.command()
@click.option("--kind", required=True, type=click.Choice([k.value for k in GeneratorKind]),
              help="Which reference signal to produce.")
@click.option("--f", "freq", type=float, default=100.0, show_default=True,
              help="Tone frequency in Hz (sine and sawtooth).")
@click.option("--fs", type=float, default=None,
              help="Sample rate in Hz [default: 5000 for time-based kinds].")
@click.option("--n", type=int, default=5000, show_default=True, help="Number of samples.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for uniform_random.")
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="Output path (single_column format).")
def generate(kind, freq, fs, n, seed, out):
    """Write one reference signal to a file."""

    def body():
        spec = GeneratorSpec(kind=kind, num_samples=n, sample_rate=fs, freq=freq, seed=seed)
        series = make_series(spec)
        write_series(series, out)
        click.echo(f"wrote {out}: kind={kind} N={len(series)} {_describe(spec)}")

    _guarded(body)


def _describe(spec: GeneratorSpec) -> str:
    if spec.kind in (GeneratorKind.SINE, GeneratorKind.SAWTOOTH):
        return f"f={spec.freq} fs={spec.sample_rate}"
    if spec.kind is GeneratorKind.QUASI_PERIODIC:
        return f"fs={spec.sample_rate}"
    if spec.kind is GeneratorKind.CHIRP:
        return f"f0={spec.f0} f1={spec.f1} fs={spec.sample_rate}"
    if spec.kind is GeneratorKind.HENON:
        return f"a={spec.a} b={spec.b} x0={spec.x0} y0={spec.y0}"
    return f"seed={spec.seed}"


def _build_config(seed, num_c, method, aggregator, n0_fraction, c_low, c_high) -> TestConfig:
    return TestConfig(
        num_c=num_c,
        c_low=c_low,
        c_high=c_high,
        method=Method(method),
        aggregator=_AGGREGATOR_ALIASES[aggregator],
        n0_fraction=n0_fraction,
        seed=seed,
    )


@main.command()
@click.argument("input", type=click.Path(dir_okay=False))
@click.option("--format", "fmt", type=_FORMAT_CHOICE, default="single_column",
              show_default=True, help="Input file format.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for the frequency draw.")
@click.option("--num-c", type=int, default=100, show_default=True,
              help="Number of probe frequencies.")
@click.option("--method", type=click.Choice([m.value for m in Method]),
              default=Method.CORRELATION.value, show_default=True)
@click.option("--aggregator", type=click.Choice(["mean", "median", "trimmed"]),
              default="trimmed", show_default=True)
@click.option("--n0-fraction", type=float, default=DEFAULT_N0_FRACTION, show_default=True,
              help="Fraction of the series length used as the lag window.")
@click.option("--c-low", type=float, default=0.0, show_default=True)
@click.option("--c-high", type=float, default=TWO_PI, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Result JSON path [default: INPUT stem + .result.json].")
@click.option("--scatter", type=click.Path(dir_okay=False), default=None,
              help="Per-frequency growth-rate CSV [default: INPUT stem + .kc.csv].")
@click.option("--trajectory", type=click.Path(dir_okay=False), default=None,
              help="Also write the p,q trajectory CSV at --trajectory-c.")
@click.option("--trajectory-c", type=float, default=2.5, show_default=True,
              help="Frequency for the exported trajectory.")
def analyze(input, fmt, seed, num_c, method, aggregator, n0_fraction, c_low, c_high,
            out, scatter, trajectory, trajectory_c):
    """Run the test on one series and write result artifacts."""

    def body():
        config = _build_config(seed, num_c, method, aggregator, n0_fraction, c_low, c_high)
        series = load_series(SeriesFile(path=input, format=fmt))
        result = run_test(series, config)
        base = Path(input).with_suffix("")
        export_result(result, out or f"{base}.result.json")
        export_scatter(result, scatter or f"{base}.kc.csv")
        if trajectory is not None:
            export_trajectory(translation_variables(series, trajectory_c), trajectory)
        if result.short_series:
            click.echo(f"note: only {len(series)} samples, treat the statistic as advisory",
                       err=True)
        click.echo(f"K_m={result.k_m!r} label={result.label.value}")

    _guarded(body)


@main.command("psd")
@click.argument("input", type=click.Path(dir_okay=False))
@click.option("--format", "fmt", type=_FORMAT_CHOICE, default="single_column",
              show_default=True, help="Input file format.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Spectrum CSV path [default: INPUT stem + .psd.csv].")
def psd_command(input, fmt, out):
    """Write the normalized power spectrum of a series."""

    def body():
        series = load_series(SeriesFile(path=input, format=fmt))
        estimate = compute_psd(series)
        target = out or f"{Path(input).with_suffix('')}.psd.csv"
        export_psd(estimate, target)
        click.echo(f"wrote {target}: {estimate.frequencies.size} bins")

    _guarded(body)


def _manifest_config(raw: dict) -> TestConfig:
    raw = dict(raw)
    if "aggregator" in raw:
        try:
            raw["aggregator"] = _AGGREGATOR_ALIASES[raw["aggregator"]]
        except KeyError:
            raise InvalidParameterError(f"unknown aggregator: {raw['aggregator']!r}") from None
    if "bands" in raw:
        raw["bands"] = ClassificationBands(**raw["bands"])
    try:
        return TestConfig(**raw)
    except TypeError as exc:
        raise InvalidParameterError(f"bad manifest config: {exc}") from None


def _batch_one(path: Path, fmt: SeriesFormat, plan: WindowPlan | None,
               config: TestConfig) -> list[list[str]]:
    """Rows for one input file; failures become rows, never exceptions."""
    rows: list[list[str]] = []
    try:
        series = load_series(SeriesFile(path=path, format=fmt))
        if plan is None:
            parts = [(str(path), series)]
        else:
            parts = [
                (f"{path}@{i * plan.stride + 1}", window)
                for i, window in enumerate(segment(series, plan))
            ]
        for name, part in parts:
            try:
                result = run_test(part, config)
                degenerate = sum(r.degenerate for r in result.per_c)
                rows.append([name, str(len(part)), repr(result.k_m),
                             result.label.value, str(degenerate), ""])
            except Chaos01Error as exc:
                rows.append([name, str(len(part)), "", "", "", str(exc)])
    except (OSError, Chaos01Error) as exc:
        rows.append([str(path), "", "", "", "", str(exc)])
    return rows


@main.command()
@click.argument("manifest", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Summary CSV path [default: manifest 'out' entry, else MANIFEST stem + .summary.csv].")
@click.option("--window", type=int, default=None,
              help="Segment each series into windows of this many samples.")
@click.option("--stride", type=int, default=None,
              help="Window step [default: --window, i.e. non-overlapping].")
@click.option("--jobs", type=int, default=4, show_default=True,
              help="Concurrent workers.")
def batch(manifest, out, window, stride, jobs):
    """Analyze every file in a JSON manifest and write one summary CSV.

    The manifest holds {"inputs": [...paths...]} plus optional "format",
    "config" (run_test overrides), "window" ({"window_len", "stride"}) and
    "out" keys.  Paths are resolved relative to the manifest's directory.
    Row order follows manifest order regardless of worker scheduling.
    """

    def body():
        if jobs < 1:
            raise InvalidParameterError("--jobs must be at least 1")
        manifest_path = Path(manifest)
        try:
            doc = json.loads(manifest_path.read_text())
        except json.JSONDecodeError as exc:
            raise InvalidParameterError(f"manifest is not valid JSON: {exc}") from None
        if not isinstance(doc, dict) or not doc.get("inputs"):
            _fail(EXIT_USAGE, "manifest lists no inputs")

        base = manifest_path.parent
        fmt = SeriesFormat(doc.get("format", "single_column"))
        config = _manifest_config(doc.get("config", {}))
        plan = None
        manifest_window = doc.get("window")
        if window is not None:
            plan = WindowPlan(window_len=window, stride=stride or window)
        elif manifest_window:
            plan = WindowPlan(**manifest_window)

        inputs = [base / p for p in doc["inputs"]]
        workers = min(jobs, len(inputs))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_file = list(pool.map(lambda p: _batch_one(p, fmt, plan, config), inputs))

        target = out or (base / doc["out"] if "out" in doc
                         else f"{manifest_path.with_suffix('')}.summary.csv")
        rows = [row for group in per_file for row in group]
        with open(target, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["file", "n", "k_m", "label", "degenerate_count", "error"])
            writer.writerows(rows)

        succeeded = sum(1 for row in rows if row[5] == "")
        click.echo(f"wrote {target}: {succeeded}/{len(rows)} rows analyzed")
        if succeeded == 0:
            sys.exit(EXIT_DATA)

    _guarded(body)


if __name__ == "__main__":
    main()
