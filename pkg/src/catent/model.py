"""Immutable data model for categorical datasets.

A dataset is a finite weighted sample space (rows) carrying named
categorical columns.  Every column induces a partition of the row
indices via inverse images of its labels, and all information-theoretic
structure downstream is computed from partitions, never from labels.

Probabilities at this layer are exact ``fractions.Fraction`` values, so
partition equality, coarseness, and canonical representatives are exact
discrete facts with no floating-point ambiguity.  Floats enter only when
logarithms are taken (see ``catent.entropy``).
"""

import unicodedata
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence, Union

Label = Hashable


class CatentError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(CatentError, ValueError):
    """A structural contract is violated: mismatched lengths, mismatched
    row universes, invalid weights, or malformed partitions."""


def _nfc(label: Label) -> Label:
    # strings are NFC-normalised so visually identical labels compare equal
    return unicodedata.normalize("NFC", label) if isinstance(label, str) else label


@dataclass(frozen=True)
class CategoricalVariable:
    """A named column: one category label per row.

    Labels may be any hashable values.  Plain columns use strings;
    joint variables (see ``catent.algebra``) use tuples of labels.
    """

    name: str
    labels: tuple[Label, ...]

    def __post_init__(self):
        if not isinstance(self.labels, tuple):
            object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise StructuralError(f"variable {self.name!r} has no rows")
        object.__setattr__(self, "labels", tuple(_nfc(l) for l in self.labels))

    @classmethod
    def from_labels(cls, name: str, labels: Iterable[Label]) -> "CategoricalVariable":
        return cls(name, tuple(labels))

    @cached_property
    def alphabet(self) -> tuple[Label, ...]:
        """Distinct labels in first-occurrence order."""
        return tuple(dict.fromkeys(self.labels))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class JointVariable(CategoricalVariable):
    """A column whose labels are pairs built row-wise from two parents.

    Constructed by ``catent.algebra.joint``; behaves exactly like any
    other ``CategoricalVariable`` everywhere else.
    """

    parents: tuple[str, str] = field(kw_only=True)


ColumnsLike = Union[
    Mapping[str, Union[CategoricalVariable, Sequence[Label]]],
    Iterable[CategoricalVariable],
]


@dataclass(frozen=True)
class Dataset:
    """A finite weighted sample space with named categorical columns.

    Row weights are positive ``Fraction`` values summing to one.  All
    columns must have exactly one label per row.  ``from_columns`` is
    the usual entry point; it defaults to uniform weights.
    """

    columns: Mapping[str, CategoricalVariable]
    row_weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.row_weights:
            raise StructuralError("dataset has no rows")
        weights = tuple(Fraction(w) for w in self.row_weights)
        if any(w <= 0 for w in weights):
            raise StructuralError("row weights must be positive")
        if sum(weights) != 1:
            raise StructuralError("row weights must sum to 1")
        object.__setattr__(self, "row_weights", weights)
        cols = dict(self.columns)
        for name, var in cols.items():
            if not isinstance(var, CategoricalVariable):
                raise StructuralError(f"column {name!r} is not a CategoricalVariable")
            if name != var.name:
                raise StructuralError(
                    f"column key {name!r} does not match variable name {var.name!r}"
                )
            if len(var) != len(weights):
                raise StructuralError(
                    f"column {name!r} has {len(var)} rows, dataset has {len(weights)}"
                )
        object.__setattr__(self, "columns", MappingProxyType(cols))

    @classmethod
    def from_columns(
        cls,
        columns: ColumnsLike,
        row_weights: Sequence[Union[Fraction, int]] | None = None,
    ) -> "Dataset":
        """Build a dataset from variables or from ``name -> labels`` mappings.

        With ``row_weights=None`` every row gets weight ``1/n``.
        """
        if isinstance(columns, Mapping):
            vars_ = {}
            for name, value in columns.items():
                if isinstance(value, CategoricalVariable):
                    vars_[name] = value
                else:
                    vars_[name] = CategoricalVariable(name, tuple(value))
        else:
            listed = list(columns)
            vars_ = {v.name: v for v in listed}
            if len(vars_) != len(listed):
                raise StructuralError("duplicate column names")
        if not vars_:
            raise StructuralError("dataset needs at least one column")
        n = len(next(iter(vars_.values())))
        if row_weights is None:
            weights = (Fraction(1, n),) * n
        else:
            weights = tuple(Fraction(w) for w in row_weights)
        return cls(vars_, weights)

    @property
    def row_count(self) -> int:
        return len(self.row_weights)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.columns)

    def __getitem__(self, name: str) -> CategoricalVariable:
        return self.columns[name]

    def __contains__(self, name: str) -> bool:
        return name in self.columns

    def with_column(self, var: CategoricalVariable) -> "Dataset":
        """A new dataset with ``var`` appended (or replaced, by name)."""
        cols = dict(self.columns)
        cols[var.name] = var
        return Dataset(cols, self.row_weights)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks of row indices covering the sample space.

    Blocks are stored sorted by their smallest row index, each with its
    exact probability mass.  The row weights travel with the partition
    so that two partitions compare equal only when they carve up the
    same weighted universe the same way.
    """

    blocks: tuple[frozenset[int], ...]
    block_probs: tuple[Fraction, ...]
    row_weights: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.row_weights)
        if not self.blocks:
            raise StructuralError("partition has no blocks")
        if any(not b for b in self.blocks):
            raise StructuralError("partition blocks must be nonempty")
        total = sum(len(b) for b in self.blocks)
        covered = frozenset().union(*self.blocks)
        if total != n or covered != frozenset(range(n)):
            raise StructuralError("blocks must exactly cover the row indices")
        mins = [min(b) for b in self.blocks]
        if mins != sorted(mins):
            raise StructuralError("blocks must be ordered by smallest row index")
        if len(self.block_probs) != len(self.blocks):
            raise StructuralError("one probability per block required")
        for b, p in zip(self.blocks, self.block_probs):
            if sum(self.row_weights[i] for i in b) != p:
                raise StructuralError("block probability does not match row weights")

    @classmethod
    def from_blocks(
        cls,
        blocks: Iterable[Iterable[int]],
        row_weights: Sequence[Fraction],
    ) -> "Partition":
        weights = tuple(Fraction(w) for w in row_weights)
        ordered = tuple(sorted((frozenset(b) for b in blocks), key=min))
        probs = tuple(sum(weights[i] for i in b) for b in ordered)
        return cls(ordered, probs, weights)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def universe_size(self) -> int:
        return len(self.row_weights)


@dataclass(frozen=True)
class ContingencyTable:
    """Exact joint probability mass of two variables over a dataset.

    ``counts[i][j]`` is the probability of seeing ``row_alphabet[i]``
    and ``col_alphabet[j]`` together; every cell is a ``Fraction`` and
    the whole grid sums to one.
    """

    row_alphabet: tuple[Label, ...]
    col_alphabet: tuple[Label, ...]
    counts: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.counts) != len(self.row_alphabet):
            raise StructuralError("one count row per row-alphabet entry required")
        for row in self.counts:
            if len(row) != len(self.col_alphabet):
                raise StructuralError("one count per col-alphabet entry required")
            if any(c < 0 for c in row):
                raise StructuralError("cell masses must be nonnegative")
        if sum(c for row in self.counts for c in row) != 1:
            raise StructuralError("cell masses must sum to 1")

    @cached_property
    def row_marginals(self) -> tuple[Fraction, ...]:
        return tuple(sum(row) for row in self.counts)

    @cached_property
    def col_marginals(self) -> tuple[Fraction, ...]:
        return tuple(sum(col) for col in zip(*self.counts))

    def mass(self, row_label: Label, col_label: Label) -> Fraction:
        """Joint mass of one (row label, column label) cell."""
        i = self.row_alphabet.index(row_label)
        j = self.col_alphabet.index(col_label)
        return self.counts[i][j]


@dataclass(frozen=True)
class CanonicalClass:
    """Canonical representative of a variable up to relabeling.

    Blocks are ordered by descending probability, ties broken by the
    smallest row index they contain.  Two variables get equal
    ``CanonicalClass`` values exactly when they induce the same
    partition of the rows; ``signature`` (the sorted probability
    profile) is additionally invariant under row permutations.
    """

    blocks: tuple[frozenset[int], ...]
    probs: tuple[Fraction, ...]
    signature: tuple[Fraction, ...]


def induced_partition(var: CategoricalVariable, dataset: Dataset) -> Partition:
    """Partition of row indices by inverse images of the variable's labels."""
    if len(var) != dataset.row_count:
        raise StructuralError(
            f"variable {var.name!r} has {len(var)} rows, dataset has {dataset.row_count}"
        )
    groups: dict[Label, list[int]] = {}
    for i, lab in enumerate(var.labels):
        groups.setdefault(lab, []).append(i)
    return Partition.from_blocks(groups.values(), dataset.row_weights)


def trivial_partition(dataset: Dataset) -> Partition:
    """The one-block partition: the whole sample space, probability one."""
    return Partition.from_blocks([range(dataset.row_count)], dataset.row_weights)


def ensure_same_universe(p: Partition, q: Partition) -> None:
    """Raise unless both partitions carve the same weighted row universe."""
    if p.row_weights != q.row_weights:
        raise StructuralError("partitions live on different row universes")


def _block_index(p: Partition) -> list[int]:
    # row index -> position of its block in p.blocks
    idx = [0] * p.universe_size
    for bi, block in enumerate(p.blocks):
        for r in block:
            idx[r] = bi
    return idx


def join(p: Partition, q: Partition) -> Partition:
    """Coarsest common refinement: blocks are the nonempty pairwise
    intersections of blocks of ``p`` and ``q``."""
    ensure_same_universe(p, q)
    pi, qi = _block_index(p), _block_index(q)
    groups: dict[tuple[int, int], list[int]] = {}
    for r in range(p.universe_size):
        groups.setdefault((pi[r], qi[r]), []).append(r)
    return Partition.from_blocks(groups.values(), p.row_weights)


def is_coarser(p: Partition, q: Partition) -> bool:
    """True iff every block of ``q`` sits inside a single block of ``p``
    (so ``p`` is coarser than or equal to ``q``)."""
    ensure_same_universe(p, q)
    pi = _block_index(p)
    return all(len({pi[r] for r in block}) == 1 for block in q.blocks)


def contingency(
    x: CategoricalVariable, y: CategoricalVariable, dataset: Dataset
) -> ContingencyTable:
    """Exact joint mass table of two variables over the dataset."""
    if len(x) != dataset.row_count or len(y) != dataset.row_count:
        raise StructuralError("variables must have one label per dataset row")
    rows, cols = x.alphabet, y.alphabet
    ri = {lab: i for i, lab in enumerate(rows)}
    ci = {lab: j for j, lab in enumerate(cols)}
    grid = [[Fraction(0)] * len(cols) for _ in rows]
    for r, w in enumerate(dataset.row_weights):
        grid[ri[x.labels[r]]][ci[y.labels[r]]] += w
    return ContingencyTable(rows, cols, tuple(tuple(row) for row in grid))


def canonical_class(p: Partition) -> CanonicalClass:
    """Canonical representative of a partition (see ``CanonicalClass``)."""
    order = sorted(
        range(p.n_blocks), key=lambda i: (-p.block_probs[i], min(p.blocks[i]))
    )
    blocks = tuple(p.blocks[i] for i in order)
    probs = tuple(p.block_probs[i] for i in order)
    return CanonicalClass(blocks, probs, tuple(sorted(probs, reverse=True)))


def canonicalize(var: CategoricalVariable, dataset: Dataset) -> CanonicalClass:
    """Canonical representative of the variable's induced partition."""
    return canonical_class(induced_partition(var, dataset))


def canonical_classes(
    dataset: Dataset, subset: Sequence[str] | None = None
) -> dict[str, CanonicalClass]:
    """Canonical representative of every (or each selected) column."""
    names = dataset.names if subset is None else tuple(subset)
    return {name: canonicalize(dataset[name], dataset) for name in names}


# ---------------------------------------------------------------------------
# label serialisation

_SPECIAL = "\\,()"


def format_label(label: Label) -> str:
    """Serialise a label to text.

    Tuple labels (joint variables) become ``(a,b)``; the characters
    ``\\ , ( )`` inside scalar labels are backslash-escaped, so nested
    pairs always parse back unambiguously.
    """
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(part) for part in label) + ")"
    text = str(label)
    return "".join("\\" + ch if ch in _SPECIAL else ch for ch in text)


def parse_label(text: str) -> Label:
    """Inverse of ``format_label``.  Scalar labels parse back as strings."""
    label, pos = _parse_label(text, 0)
    if pos != len(text):
        raise ValueError(f"trailing characters in label text: {text!r}")
    return label


def _parse_label(text: str, pos: int) -> tuple[Label, int]:
    if pos < len(text) and text[pos] == "(":
        parts = []
        pos += 1
        while True:
            part, pos = _parse_label(text, pos)
            parts.append(part)
            if pos >= len(text):
                raise ValueError("unterminated pair in label text")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                return tuple(parts), pos + 1
            raise ValueError(f"malformed pair at position {pos}")
    chars = []
    while pos < len(text) and text[pos] not in ",()":
        if text[pos] == "\\":
            pos += 1
            if pos >= len(text):
                raise ValueError("dangling escape in label text")
        chars.append(text[pos])
        pos += 1
    return "".join(chars), pos
