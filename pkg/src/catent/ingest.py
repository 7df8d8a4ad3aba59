"""CSV input, matrix output, and the bundled example datasets.

CSV contract: UTF-8, header row of column names, one record per row,
standard quoting (quoted fields may contain delimiters, quotes and
newlines).  Cell text and header names are NFC-normalised on load.
Empty cells either become the ordinary category ``"<NA>"`` (default) or
drop the whole row with uniform re-weighting of the remainder, chosen
by ``CsvSpec.na_policy``.

Distance matrices serialise to TSV (header row and row labels) or JSON
(``{"names": [...], "values": [[...]]}``); numbers are written with 17
significant digits so values round-trip bit-exactly.
"""

import csv
import io
import json
import sys
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import TextIO, Union

import numpy as np

from .metric import DistanceMatrix
from .model import CatentError, Dataset, format_label

NA_LABEL = "<NA>"
NA_POLICIES = ("keep-as-category", "drop-row")

INTERNSHIP = "internship.csv"
INDISCERNIBLES = "indiscernibles.csv"


class IngestError(CatentError):
    """Base class for input/output errors."""


class ParseError(IngestError):
    """Malformed input; ``line`` is the 1-based physical line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class EmptyDatasetError(IngestError):
    """The input contains no header or no data rows."""


class NameCollisionError(IngestError):
    """Two header fields normalise to the same column name."""


@dataclass(frozen=True)
class CsvSpec:
    """Parsing options for ``load_csv``."""

    delimiter: str = ","
    na_policy: str = "keep-as-category"

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise ParseError("delimiter must be a single character")
        if self.na_policy not in NA_POLICIES:
            raise ParseError(
                f"unknown NA policy {self.na_policy!r}; expected one of {NA_POLICIES}"
            )


Source = Union[str, Path, TextIO]


def _open_source(source: Source):
    # returns (file object, needs_close)
    if source == "-":
        return sys.stdin, False
    if isinstance(source, (str, Path)):
        # utf-8-sig transparently accepts an optional BOM
        return open(source, "r", encoding="utf-8-sig", newline=""), True
    return source, False


def load_csv(source: Source, spec: CsvSpec = CsvSpec()) -> Dataset:
    """Read a categorical dataset from a path, an open stream, or ``"-"``
    (stdin).  Rows get uniform weights."""
    stream, needs_close = _open_source(source)
    try:
        return _parse_csv(stream, spec)
    finally:
        if needs_close:
            stream.close()


def _parse_csv(stream: TextIO, spec: CsvSpec) -> Dataset:
    reader = csv.reader(stream, delimiter=spec.delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyDatasetError("input has no header row") from None

    names = [unicodedata.normalize("NFC", h) for h in header]
    if any(not n for n in names):
        raise ParseError("empty column name in header", line=1)
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise NameCollisionError(f"duplicate column names: {dupes}")

    rows: list[list[str]] = []
    for record in reader:
        if len(record) != len(names):
            raise ParseError(
                f"expected {len(names)} fields, got {len(record)}",
                line=reader.line_num,
            )
        cells = [unicodedata.normalize("NFC", c) for c in record]
        if spec.na_policy == "drop-row" and any(c == "" for c in cells):
            continue
        rows.append([c if c != "" else NA_LABEL for c in cells])

    if not rows:
        raise EmptyDatasetError("input has no data rows")

    columns = {name: [row[i] for row in rows] for i, name in enumerate(names)}
    return Dataset.from_columns(columns)


def save_csv(
    dataset: Dataset, target: Source | None = None, spec: CsvSpec = CsvSpec()
) -> str | None:
    """Write a dataset back to CSV; returns the text when ``target`` is
    ``None``.

    One record per row; weights are not serialised (CSV datasets are
    uniform by construction).  String labels are written verbatim;
    composite labels (joint columns) via ``format_label``.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=spec.delimiter)
    names = dataset.names
    writer.writerow(names)
    cols = [dataset[name].labels for name in names]
    for r in range(dataset.row_count):
        writer.writerow(
            [
                lab if isinstance(lab, str) else format_label(lab)
                for lab in (col[r] for col in cols)
            ]
        )
    text = buffer.getvalue()
    if target is None:
        return text
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)
    return None


# ---------------------------------------------------------------------------
# distance matrices

MATRIX_FORMATS = ("tsv", "json")


def save_matrix(
    matrix: DistanceMatrix,
    target: Source | None = None,
    fmt: str = "tsv",
    number_format: str = ".17g",
) -> str | None:
    """Serialise a distance matrix; returns the text when ``target`` is
    ``None``, otherwise writes to the path or stream.

    The default ``number_format`` keeps 17 significant digits, enough
    for ``load_matrix`` to reproduce every float bit-exactly.
    """
    if fmt not in MATRIX_FORMATS:
        raise ParseError(f"unknown matrix format {fmt!r}; expected one of {MATRIX_FORMATS}")
    if fmt == "tsv":
        lines = ["\t".join(("", *matrix.names))]
        for i, name in enumerate(matrix.names):
            lines.append(
                "\t".join((name, *(format(v, number_format) for v in matrix.values[i])))
            )
        text = "\n".join(lines) + "\n"
    else:
        text = (
            json.dumps(
                {
                    "names": list(matrix.names),
                    "values": [
                        [float(format(v, number_format)) for v in row]
                        for row in matrix.values
                    ],
                },
                indent=2,
            )
            + "\n"
        )
    if target is None:
        return text
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)
    return None


def load_matrix(source: Source, fmt: str = "tsv") -> DistanceMatrix:
    """Read a distance matrix written by ``save_matrix``."""
    if fmt not in MATRIX_FORMATS:
        raise ParseError(f"unknown matrix format {fmt!r}; expected one of {MATRIX_FORMATS}")
    stream, needs_close = _open_source(source)
    try:
        text = stream.read()
    finally:
        if needs_close:
            stream.close()
    if fmt == "json":
        payload = json.loads(text)
        try:
            names = tuple(payload["names"])
            values = np.array(payload["values"], dtype=float)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed matrix JSON: {exc}") from exc
    else:
        lines = [ln for ln in text.splitlines() if ln]
        if not lines:
            raise ParseError("matrix TSV is empty")
        names = tuple(lines[0].split("\t")[1:])
        body = []
        for ln in lines[1:]:
            fields = ln.split("\t")
            body.append([float(f) for f in fields[1:]])
        values = np.array(body, dtype=float)
    if values.shape != (len(names), len(names)):
        raise ParseError("matrix body does not match its name list")
    return DistanceMatrix(names, values)


# ---------------------------------------------------------------------------
# bundled example datasets


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled example dataset."""
    path = Path(str(resources.files("catent.data").joinpath(name)))
    if not path.is_file():
        raise FileNotFoundError(f"no bundled dataset named {name!r}")
    return path


def load_fixture(name: str, spec: CsvSpec = CsvSpec()) -> Dataset:
    """Load a bundled example dataset (``INTERNSHIP``, ``INDISCERNIBLES``)."""
    with resources.files("catent.data").joinpath(name).open(
        "r", encoding="utf-8-sig", newline=""
    ) as stream:
        return _parse_csv(stream, spec)
