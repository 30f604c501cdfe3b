"""File ingestion, serialization of results and plot data, and windowed
segmentation of long recordings.

Two text formats are understood:

* ``single_column``: one decimal per line, LF terminated, with an optional
  leading ``# sample_rate=<Hz>`` comment.
* ``time_value_csv``: a ``time,value`` header followed by comma-separated
  rows; timestamps must be uniformly spaced (relative tolerance 1e-6) and
  their spacing defines the sample rate.

All reals are rendered with their shortest round-trip decimal form, so a
write/load cycle reproduces every sample bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from . import __version__
from .core import TestResult, TimeSeries, TranslationTrajectory, aggregate_k
from .errors import (
    InvalidParameterError,
    MissingSampleRateError,
    NonUniformSamplingError,
    SeriesFormatError,
    SeriesTooShortError,
)
from .spectral import PsdEstimate

#: Allowed relative deviation between timestamp gaps in time_value_csv files.
SPACING_RTOL = 1e-6


class SeriesFormat(str, Enum):
    SINGLE_COLUMN = "single_column"
    TIME_VALUE_CSV = "time_value_csv"


@dataclass(frozen=True)
class SeriesFile:
    """A reference to an on-disk series plus how to read it.

    ``sample_rate`` supplies a rate for single_column files that lack the
    comment header; time_value_csv files always infer theirs from the
    timestamp spacing.
    """

    path: str | Path
    format: SeriesFormat = SeriesFormat.SINGLE_COLUMN
    sample_rate: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "format", SeriesFormat(self.format))


@dataclass(frozen=True)
class WindowPlan:
    """Sliding-window layout for segmenting a long recording.

    Windows shorter than a few hundred samples rarely give a stable
    statistic; they are permitted (small windows are useful in tests) but
    the short-series flag on each result should be heeded.
    """

    window_len: int
    stride: int

    def __post_init__(self):
        if self.window_len < 1:
            raise InvalidParameterError("window_len must be at least 1")
        if self.stride < 1:
            raise InvalidParameterError("stride must be at least 1")


def _parse_float(text: str, line: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise SeriesFormatError(f"not a number: {text!r}", line=line) from None
    if not math.isfinite(value):
        raise SeriesFormatError(f"non-finite value: {text!r}", line=line)
    return value


def _load_single_column(lines: list[str], fallback_rate: float | None) -> tuple[np.ndarray, float | None]:
    rate = fallback_rate
    start = 0
    if lines and lines[0].lstrip().startswith("#"):
        comment = lines[0].lstrip()[1:].strip()
        if not comment.startswith("sample_rate="):
            raise SeriesFormatError(f"unrecognized comment: {lines[0]!r}", line=1)
        rate = _parse_float(comment[len("sample_rate="):], line=1)
        if not rate > 0:
            raise SeriesFormatError("sample_rate must be positive", line=1)
        start = 1
    values = []
    for i in range(start, len(lines)):
        text = lines[i].strip()
        if not text:
            raise SeriesFormatError("blank line", line=i + 1)
        values.append(_parse_float(text, line=i + 1))
    return np.array(values, dtype=float), rate


def _load_time_value(lines: list[str]) -> tuple[np.ndarray, float]:
    if not lines or lines[0].strip() != "time,value":
        raise SeriesFormatError("expected 'time,value' header", line=1)
    times = []
    values = []
    for i in range(1, len(lines)):
        text = lines[i].strip()
        if not text:
            raise SeriesFormatError("blank line", line=i + 1)
        parts = text.split(",")
        if len(parts) != 2:
            raise SeriesFormatError(f"expected two comma-separated fields: {text!r}", line=i + 1)
        times.append(_parse_float(parts[0], line=i + 1))
        values.append(_parse_float(parts[1], line=i + 1))
    if len(values) < 2:
        raise SeriesFormatError("need at least two rows to infer the sample rate")
    dt = times[1] - times[0]
    if dt <= 0:
        raise NonUniformSamplingError("timestamps must be strictly increasing", line=3)
    for i in range(1, len(times) - 1):
        gap = times[i + 1] - times[i]
        if abs(gap - dt) > SPACING_RTOL * dt:
            raise NonUniformSamplingError(
                f"timestamp gap {gap!r} deviates from {dt!r}", line=i + 3
            )
    return np.array(values, dtype=float), 1.0 / dt


def load_series(file: SeriesFile | str | Path) -> TimeSeries:
    """Read a series from disk.

    Accepts a :class:`SeriesFile` or a bare path (treated as
    single_column).  The file's stem becomes the series label.

    Raises
    ------
    SeriesFormatError
        On malformed content, with the 1-based line number when known.
    NonUniformSamplingError
        When time_value_csv timestamps are unevenly spaced.
    OSError
        When the path cannot be read.
    """
    if not isinstance(file, SeriesFile):
        file = SeriesFile(path=file)
    path = Path(file.path)
    lines = path.read_text().splitlines()
    if file.format is SeriesFormat.SINGLE_COLUMN:
        samples, rate = _load_single_column(lines, file.sample_rate)
    else:
        samples, rate = _load_time_value(lines)
    if samples.size == 0:
        raise SeriesFormatError("empty file")
    return TimeSeries(samples, sample_rate=rate, label=path.stem)


def write_series(series: TimeSeries, path: str | Path,
                 format: SeriesFormat = SeriesFormat.SINGLE_COLUMN) -> None:
    """Serialize a series; the inverse of :func:`load_series`."""
    format = SeriesFormat(format)
    out = []
    if format is SeriesFormat.SINGLE_COLUMN:
        if series.sample_rate is not None:
            out.append(f"# sample_rate={series.sample_rate!r}")
        out.extend(repr(float(v)) for v in series.samples)
    else:
        if series.sample_rate is None:
            raise MissingSampleRateError("time_value_csv needs a sample rate for the time column")
        out.append("time,value")
        for j, v in enumerate(series.samples):
            out.append(f"{j / series.sample_rate!r},{float(v)!r}")
    Path(path).write_text("\n".join(out) + "\n")


def segment(series: TimeSeries, plan: WindowPlan) -> list[TimeSeries]:
    """Cut a series into overlapping windows.

    Windows start at samples 1, 1+stride, 1+2*stride, ... and there are
    exactly floor((N - window_len)/stride) + 1 of them.  Each window keeps
    the parent's sample rate and gets its label suffixed with the window's
    1-based start index (``label@start``).
    """
    n = len(series)
    if plan.window_len > n:
        raise SeriesTooShortError(f"window of {plan.window_len} exceeds series length {n}")
    count = (n - plan.window_len) // plan.stride + 1
    windows = []
    for i in range(count):
        start = i * plan.stride
        windows.append(TimeSeries(
            series.samples[start:start + plan.window_len],
            sample_rate=series.sample_rate,
            label=f"{series.label}@{start + 1}",
        ))
    return windows


def export_result(result: TestResult, path: str | Path) -> None:
    """Write one test outcome as a JSON document.

    Key order is fixed so repeated runs diff cleanly; floats keep their
    shortest round-trip rendering, so re-parsing reproduces every k value
    bit for bit.
    """
    config = result.config
    doc = {
        "series_label": result.series_label,
        "method": config.method.value,
        "seed": config.seed,
        "num_c": config.num_c,
        "k_m": result.k_m,
        "label": result.label.value,
        "short_series": result.short_series,
        "per_c": [
            {"c": r.c, "k": r.k, "degenerate": r.degenerate} for r in result.per_c
        ],
        "config": {
            "num_c": config.num_c,
            "c_low": config.c_low,
            "c_high": config.c_high,
            "method": config.method.value,
            "aggregator": config.aggregator.value,
            "trim_fraction": config.trim_fraction,
            "n0_fraction": config.n0_fraction,
            "seed": config.seed,
            "msd_variant": config.msd_variant.value,
            "bands": {
                "regular_max": config.bands.regular_max,
                "quasi_periodic_max": config.bands.quasi_periodic_max,
                "aperiodic_max": config.bands.aperiodic_max,
            },
        },
        "version": __version__,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def export_trajectory(traj: TranslationTrajectory, path: str | Path) -> None:
    """Write the planar path as a two-column CSV with a single header row."""
    rows = ["p,q"]
    rows.extend(f"{float(p)!r},{float(q)!r}" for p, q in zip(traj.p, traj.q))
    Path(path).write_text("\n".join(rows) + "\n")


def export_scatter(result: TestResult, path: str | Path) -> None:
    """Write per-frequency growth rates as CSV: draw index, c, |k|."""
    rows = ["index,c,abs_k"]
    rows.extend(
        f"{i},{r.c!r},{abs(r.k)!r}" for i, r in enumerate(result.per_c)
    )
    Path(path).write_text("\n".join(rows) + "\n")


def export_psd(estimate: PsdEstimate, path: str | Path) -> None:
    """Write a spectrum as frequency,power CSV rows."""
    rows = ["frequency,power"]
    rows.extend(
        f"{float(f)!r},{float(p)!r}" for f, p in zip(estimate.frequencies, estimate.power)
    )
    Path(path).write_text("\n".join(rows) + "\n")


def recompute_k_m(result: TestResult) -> float:
    """Re-derive the aggregate from the per-frequency list.

    Exists so exports can be checked for internal consistency: the stored
    k_m must match this to within accumulation noise.
    """
    return aggregate_k(result.per_c, result.config.aggregator, result.config.trim_fraction)
