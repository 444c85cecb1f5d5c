"""Data ingestion, bundled case-study fixtures, and the reproduction pipeline.

The bundled dataset is the 2010 Competitive Industrial Performance study:
ranks of 135 countries under eight UNIDO indicators (``table6_criteria``),
the published aggregate rankings (``table6_aggregates``), the published
cycle counts, correlation tables and meta-rankings used as regression
references, and the canonical criterion vote weights.

All tabular data is CSV with a header row, UTF-8.  Loaders reject
incomplete or malformed rows with row/column coordinates; they never
impute.
"""

from __future__ import annotations

import csv
import time
import warnings
from collections.abc import Mapping
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import TextIO

from .cip import INDICATORS, IndicatorRecord
from .copeland import copeland_ranking
from .core import AlternativeSet, Criterion, Profile, Ranking
from .correlation import COINCIDING, TAU_B, correlation_matrix, kendall_tau_b
from .errors import InputError
from .majority import build_majority, count_cycles
from .markovian import markovian_ranking
from .metarank import closest_weak_order, optimal_order_count, rankings_majority
from .solutions import MES, UC, sort_by_solution

FIXTURE_FILES = (
    "table6_criteria.csv",
    "table6_aggregates.csv",
    "table1_cycles.csv",
    "table3_taub.csv",
    "table3_r.csv",
    "table5_meta.csv",
    "weights.cfg",
)

AGGREGATE_METHODS = ("Copeland1", "Copeland2", "Copeland3", "UC", "MES", "Markovian")


def bundled_fixtures_dir() -> Path:
    """Directory holding the packaged case-study tables."""
    return Path(resources.files("majorityrank") / "data")


def load_ranks(path: str | Path) -> tuple[AlternativeSet, dict[str, Ranking]]:
    """Load a ranks table: one row per country, one column per ranking.

    Every cell must be a positive integer; the first column holds the
    country names.  Dense numbering of each column is checked advisorily
    (a warning, not an error), since published tables keep their own rank
    labels.
    """
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty file") from None
        if len(header) < 2:
            raise InputError(f"{path}: need a country column plus at least one ranking column")
        columns = [h.strip() for h in header[1:]]
        if len(set(columns)) != len(columns):
            raise InputError(f"{path}: duplicate column names")
        countries: list[str] = []
        seen: set[str] = set()
        ranks: dict[str, dict[str, int]] = {name: {} for name in columns}
        for row_number, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise InputError(f"{path}: row {row_number} has {len(row)} cells, expected {len(header)}")
            country = row[0].strip()
            if not country:
                raise InputError(f"{path}: empty country name (row {row_number}, col {header[0].strip()})")
            if country in seen:
                raise InputError(f"{path}: duplicate country {country!r} (row {row_number})")
            seen.add(country)
            countries.append(country)
            for column, cell in zip(columns, row[1:]):
                text = cell.strip()
                if not text:
                    raise InputError(f"{path}: missing rank (row {row_number}, col {column})")
                try:
                    value = int(text)
                except ValueError:
                    raise InputError(f"{path}: rank {text!r} is not an integer (row {row_number}, col {column})") from None
                if value < 1:
                    raise InputError(f"{path}: rank {value} is not positive (row {row_number}, col {column})")
                ranks[column][country] = value
    if not countries:
        raise InputError(f"{path}: no data rows")
    alternatives = AlternativeSet(countries)
    rankings: dict[str, Ranking] = {}
    for column in columns:
        ranking = Ranking(alternatives, ranks[column])
        if not ranking.conforms_to_scheme():
            warnings.warn(f"{path}: column {column} is not densely numbered; keeping ranks as published")
        rankings[column] = ranking
    return alternatives, rankings


@dataclass(frozen=True)
class WeightsConfig:
    """Criterion vote weights in canonical order."""

    names: tuple[str, ...]
    weights: Mapping[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", MappingProxyType(dict(self.weights)))

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())


def load_weights(path: str | Path) -> WeightsConfig:
    """Parse a ``name = weight`` config file ('#' starts a comment)."""
    path = Path(path)
    names: list[str] = []
    weights: dict[str, int] = {}
    for line_number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}: line {line_number}: expected 'name = weight'")
        name, _, value = line.partition("=")
        name = name.strip()
        value = value.strip()
        if not name:
            raise InputError(f"{path}: line {line_number}: empty criterion name")
        if name in weights:
            raise InputError(f"{path}: line {line_number}: duplicate criterion {name!r}")
        try:
            weight = int(value)
        except ValueError:
            raise InputError(f"{path}: line {line_number}: weight {value!r} is not an integer") from None
        if weight < 1:
            raise InputError(f"{path}: line {line_number}: weight must be positive, got {weight}")
        names.append(name)
        weights[name] = weight
    if not names:
        raise InputError(f"{path}: no weights found")
    return WeightsConfig(names=tuple(names), weights=weights)


def build_profile(
    alternatives: AlternativeSet,
    rankings: Mapping[str, Ranking],
    weights: WeightsConfig,
) -> Profile:
    """Turn loaded ranking columns into a weighted profile (table column order).

    Every column needs a weight; config entries without a matching column
    are ignored, so one weights file can serve several tables.
    """
    criteria = []
    for name, ranking in rankings.items():
        if name not in weights.weights:
            raise InputError(f"no weight configured for criterion {name!r}")
        criteria.append(Criterion(name=name, weight=weights.weights[name], ranking=ranking))
    return Profile(alternatives, criteria)


def save_ranking(destination: str | Path | TextIO, ranking: Ranking, label: str = "country") -> None:
    """Write a ranking as a two-column CSV in alternative-set order."""
    def write(handle: TextIO) -> None:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([label, "rank"])
        for name in ranking.alternatives:
            writer.writerow([name, ranking.ranks[name]])

    if isinstance(destination, (str, Path)):
        with Path(destination).open("w", encoding="utf-8", newline="") as handle:
            write(handle)
    else:
        write(destination)


def write_labeled_matrix(destination: str | Path | TextIO, labels: tuple[str, ...], values, fmt=str) -> None:
    """Write a labelled square matrix as CSV (first column and row carry labels)."""
    def write(handle: TextIO) -> None:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["", *labels])
        for i, row_label in enumerate(labels):
            writer.writerow([row_label, *(fmt(values[i][j]) for j in range(len(labels)))])

    if isinstance(destination, (str, Path)):
        with Path(destination).open("w", encoding="utf-8", newline="") as handle:
            write(handle)
    else:
        write(destination)


def load_indicators(path: str | Path) -> list[IndicatorRecord]:
    """Load raw indicator values (country column plus the eight UNIDO variables)."""
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        missing = [c for c in ("country", *INDICATORS) if c not in (reader.fieldnames or ())]
        if missing:
            raise InputError(f"{path}: missing columns {missing}")
        records = []
        for row_number, row in enumerate(reader, start=2):
            try:
                values = {name: float(row[name]) for name in INDICATORS}
            except (TypeError, ValueError):
                raise InputError(f"{path}: malformed indicator value (row {row_number})") from None
            records.append(IndicatorRecord(country=(row["country"] or "").strip(), **values))
    if not records:
        raise InputError(f"{path}: no data rows")
    return records


# ---------------------------------------------------------------------------
# reproduction of the bundled case study


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    computed: str
    deviation: str
    passed: bool


@dataclass(frozen=True)
class ReproReport:
    checks: tuple[CheckResult, ...]
    elapsed_seconds: float = 0.0
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def format_text(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(
                f"{status}  {check.name:<44} expected={check.expected:<28} "
                f"computed={check.computed:<28} deviation={check.deviation}"
            )
        for note in self.notes:
            lines.append(f"note: {note}")
        good = sum(1 for check in self.checks if check.passed)
        overall = "PASS" if self.passed else "FAIL"
        lines.append(f"overall: {overall} ({good}/{len(self.checks)} checks, {self.elapsed_seconds:.2f}s)")
        return "\n".join(lines)


def _fixture(fixtures_dir: Path, filename: str) -> Path:
    path = fixtures_dir / filename
    if not path.is_file():
        raise InputError(f"missing fixture {path}")
    return path


def _read_simple_csv(path: Path) -> tuple[list[str], list[list[str]]]:
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        return [h.strip() for h in header], [row for row in reader if row]


def _load_reference_matrix(path: Path) -> tuple[list[str], list[list[float]]]:
    header, rows = _read_simple_csv(path)
    labels = header[1:]
    values = [[float(cell) for cell in row[1:]] for row in rows]
    if [row[0].strip() for row in rows] != labels:
        raise InputError(f"{path}: row labels must match column labels")
    return labels, values


def run_reproduce(fixtures_dir: str | Path | None = None) -> ReproReport:
    """Recompute the full case study and diff it against the bundled references.

    Pipeline: majority structure -> cycle counts -> six aggregate rankings
    -> full correlation matrices -> meta-rankings, each compared against
    its reference table at the documented tolerance.
    """
    started = time.perf_counter()
    fixtures = Path(fixtures_dir) if fixtures_dir is not None else bundled_fixtures_dir()
    if not fixtures.is_dir():
        raise InputError(f"fixture directory {fixtures} does not exist")

    alternatives, criteria_rankings = load_ranks(_fixture(fixtures, "table6_criteria.csv"))
    weights = load_weights(_fixture(fixtures, "weights.cfg"))
    profile = build_profile(alternatives, criteria_rankings, weights)
    structure = build_majority(profile)
    checks: list[CheckResult] = []

    # cycle counts are exact references
    header, rows = _read_simple_csv(_fixture(fixtures, "table1_cycles.csv"))
    for row in rows:
        k, expected = int(row[0]), int(row[1])
        computed = count_cycles(structure, k)
        checks.append(CheckResult(
            name=f"cycle count k={k}",
            expected=str(expected), computed=str(computed),
            deviation=str(abs(computed - expected)), passed=computed == expected,
        ))

    # aggregate rankings against the published columns
    agg_alternatives, published_aggregates = load_ranks(_fixture(fixtures, "table6_aggregates.csv"))
    if agg_alternatives.items != alternatives.items:
        raise InputError("aggregate fixture covers a different country set")
    computed_aggregates = {
        "Copeland1": copeland_ranking(structure, 1),
        "Copeland2": copeland_ranking(structure, 2),
        "Copeland3": copeland_ranking(structure, 3),
        "UC": sort_by_solution(structure, UC).ranking(),
        "MES": sort_by_solution(structure, MES).ranking(),
        "Markovian": markovian_ranking(structure),
    }
    for name, computed in computed_aggregates.items():
        published = published_aggregates[name]
        tau = kendall_tau_b(computed, published)
        checks.append(CheckResult(
            name=f"{name} vs published (tau-b >= 0.99)",
            expected=">=0.990", computed=f"{tau:.6f}",
            deviation=f"{max(0.0, 0.99 - tau):.6f}", passed=tau >= 0.99,
        ))
        expected_positions = published.distinct_positions()
        computed_positions = computed.distinct_positions()
        checks.append(CheckResult(
            name=f"{name} distinct positions (+/-2)",
            expected=str(expected_positions), computed=str(computed_positions),
            deviation=str(abs(computed_positions - expected_positions)),
            passed=abs(computed_positions - expected_positions) <= 2,
        ))
        published_top = {c for c in alternatives if published.ranks[c] == 1}
        computed_top = {c for c in alternatives if computed.ranks[c] == 1}
        checks.append(CheckResult(
            name=f"{name} top-ranked countries",
            expected=",".join(sorted(published_top)), computed=",".join(sorted(computed_top)),
            deviation="0" if computed_top == published_top else "set differs",
            passed=computed_top == published_top,
        ))

    # correlation matrices: criteria block at the tight tolerance, full matrix looser
    candidates: dict[str, Ranking] = dict(criteria_rankings)
    candidates["CIP"] = published_aggregates["CIP"]
    candidates.update(computed_aggregates)
    tolerance = {TAU_B: (0.001, 0.005), COINCIDING: (0.01, 0.05)}
    reference_file = {TAU_B: "table3_taub.csv", COINCIDING: "table3_r.csv"}
    matrices = {}
    for measure in (TAU_B, COINCIDING):
        labels, reference = _load_reference_matrix(_fixture(fixtures, reference_file[measure]))
        if set(labels) != set(candidates):
            raise InputError(f"{reference_file[measure]}: labels do not match the candidate set")
        matrix = correlation_matrix([(name, candidates[name]) for name in labels], measure)
        matrices[measure] = matrix
        n_criteria = len(criteria_rankings)
        block_dev = full_dev = 0.0
        for i in range(len(labels)):
            for j in range(len(labels)):
                dev = abs(matrix.values[i, j] - reference[i][j])
                full_dev = max(full_dev, dev)
                if i < n_criteria and j < n_criteria:
                    block_dev = max(block_dev, dev)
        tight, loose = tolerance[measure]
        checks.append(CheckResult(
            name=f"{measure} criteria block (+/-{tight})",
            expected=f"<={tight}", computed=f"{block_dev:.6f}",
            deviation=f"{max(0.0, block_dev - tight):.6f}", passed=block_dev <= tight,
        ))
        checks.append(CheckResult(
            name=f"{measure} full matrix (+/-{loose})",
            expected=f"<={loose}", computed=f"{full_dev:.6f}",
            deviation=f"{max(0.0, full_dev - loose):.6f}", passed=full_dev <= loose,
        ))

    # meta-rankings against the published weak orders
    header, rows = _read_simple_csv(_fixture(fixtures, "table5_meta.csv"))
    reference_meta = {row[0].strip(): (int(row[1]), int(row[2]), row[3].strip()) for row in rows}
    notes = []
    if any(label != data for label, (_, _, data) in reference_meta.items()):
        notes.append(
            "table5_meta.csv: the published comparison listed the six paired single-factor "
            "candidates under rotated labels; data_column records the candidate each row's "
            "ranks actually belong to, and the checks compare through that mapping."
        )
    criteria = list(profile.criteria)
    for measure, pick in ((TAU_B, 0), (COINCIDING, 1)):
        comparison = rankings_majority(candidates, criteria, measure)
        weak_order = closest_weak_order(comparison)
        expected_map = {
            data_column: (tau_rank, r_rank)[pick]
            for label, (tau_rank, r_rank, data_column) in reference_meta.items()
        }
        computed_map = {name: weak_order.ranks[name] for name in weak_order.alternatives}
        mismatches = sorted(name for name in expected_map if expected_map[name] != computed_map[name])
        checks.append(CheckResult(
            name=f"meta-ranking {measure} (published, label-corrected)",
            expected="0 mismatches", computed=f"{len(mismatches)} mismatches",
            deviation=",".join(mismatches) if mismatches else "0",
            passed=not mismatches,
        ))
        if measure == COINCIDING:
            count = optimal_order_count(comparison)
            checks.append(CheckResult(
                name="optimal linear orders (coinciding)",
                expected="6", computed=str(count), deviation=str(abs(count - 6)), passed=count == 6,
            ))

    return ReproReport(checks=tuple(checks), elapsed_seconds=time.perf_counter() - started, notes=tuple(notes))
