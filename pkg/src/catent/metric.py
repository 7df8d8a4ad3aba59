"""The symmetric-uncertainty distance and its validators.

``d(x, y) = 1 - SU(x, y)`` measures dissimilarity between columns of a
dataset: it is symmetric, lands in ``[0, 1]``, and vanishes exactly on
indiscernible columns (equal induced partitions).  This module computes
single distances and full matrices, and provides executable checks for
the similarity-measure conditions on SU and the metric axioms on d.

One caution, established by the checkers themselves: the triangle
inequality does NOT hold universally for this distance, so d is a
semimetric rather than a metric.  The smallest counterexample has three
uniform rows carved as {0,2}|{1}, {0}|{1}|{2} and {0}|{1,2}; routing
through the middle (finest) partition beats the direct distance by
about 0.19.  Many datasets, including the bundled one, satisfy the
triangle inequality exhaustively; ``check_distance_axioms`` reports
faithfully either way.  (Contractivity of the joint operation, proved
independently of the triangle inequality, is unaffected: see
``catent.algebra``.)

Reports use a uniform slack convention: every instance of an axiom is
reduced to a margin that must stay nonnegative (inequalities:
``rhs - lhs``; equalities: ``-|a - b|``), the worst (smallest) margin
and its witness are kept, and the axiom passes when the worst margin
clears the tolerance.  A failed check therefore always carries a
concrete witness reproducing the violation.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .model import (
    CanonicalClass,
    CategoricalVariable,
    Dataset,
    Partition,
    canonical_classes,
    induced_partition,
)
from .entropy import TOLERANCE, symmetric_uncertainty
from .randgen import SplitMix64

# past this many columns, exhaustive triple enumeration gives way to sampling
EXHAUSTIVE_LIMIT = 8
DEFAULT_SAMPLES = 1000


def partition_distance(x: Partition, y: Partition) -> float:
    """``1 - SU`` on two partitions of the same universe."""
    return 1.0 - symmetric_uncertainty(x, y)


def su_distance(
    x: CategoricalVariable, y: CategoricalVariable, dataset: Dataset
) -> float:
    """``1 - SU`` on two columns of a dataset.

    Zero exactly when the columns induce the same partition, one when
    they are independent.
    """
    return partition_distance(
        induced_partition(x, dataset), induced_partition(y, dataset)
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric matrix of pairwise SU-distances over named columns.

    Each unordered pair is computed once, so the matrix is symmetric by
    construction with an exactly zero diagonal.
    """

    names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.shape != (len(self.names), len(self.names)):
            raise ValueError("matrix shape must match the name list")
        object.__setattr__(self, "values", arr)

    def value(self, a: str, b: str) -> float:
        return float(self.values[self.names.index(a), self.names.index(b)])

    def __getitem__(self, pair: tuple[str, str]) -> float:
        return self.value(*pair)

    @property
    def size(self) -> int:
        return len(self.names)


def distance_matrix(dataset: Dataset, subset: Sequence[str] | None = None) -> DistanceMatrix:
    """Pairwise distance matrix over all columns or a named subset."""
    names = tuple(dataset.names if subset is None else subset)
    parts = [induced_partition(dataset[name], dataset) for name in names]
    n = len(names)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            values[i, j] = values[j, i] = partition_distance(parts[i], parts[j])
    return DistanceMatrix(names, values)


# ---------------------------------------------------------------------------
# axiom reports


@dataclass(frozen=True)
class AxiomCheck:
    """Result of one axiom over a set of instances.

    ``worst_slack`` is the smallest margin observed (``inf`` when the
    axiom had no instances); ``witness`` names the instance attaining
    it, with the two sides of the comparison in ``lhs``/``rhs``.
    """

    name: str
    passed: bool
    instances: int
    worst_slack: float
    witness: tuple[str, ...] | None
    lhs: float | None
    rhs: float | None


@dataclass(frozen=True)
class AxiomReport:
    """Bundle of axiom checks with a single overall verdict."""

    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}: instances={c.instances}"
            if c.instances and math.isfinite(c.worst_slack):
                line += f" worst_slack={c.worst_slack:.3e}"
            if not c.passed and c.witness is not None:
                line += f" witness={','.join(c.witness)}"
                if c.lhs is not None and c.rhs is not None:
                    line += f" lhs={c.lhs!r} rhs={c.rhs!r}"
            lines.append(line)
        return "\n".join(lines)


class _Gauge:
    """Accumulates margins for one axiom and keeps the worst instance."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.worst = math.inf
        self.witness: tuple[str, ...] | None = None
        self.lhs: float | None = None
        self.rhs: float | None = None

    def add(
        self,
        margin: float,
        witness: tuple[str, ...],
        lhs: float | None = None,
        rhs: float | None = None,
    ) -> None:
        self.count += 1
        if margin < self.worst:
            self.worst = margin
            self.witness = witness
            self.lhs = lhs
            self.rhs = rhs

    def finish(self, threshold: float, strict: bool = False) -> AxiomCheck:
        if self.count == 0:
            passed = True
        elif strict:
            passed = self.worst > threshold
        else:
            passed = self.worst >= threshold
        return AxiomCheck(
            self.name, passed, self.count, self.worst, self.witness, self.lhs, self.rhs
        )


def merge_reports(reports: Iterable[AxiomReport]) -> AxiomReport:
    """Combine same-shaped reports: instances add, worst witness wins."""
    merged: dict[str, AxiomCheck] = {}
    order: list[str] = []
    for report in reports:
        for c in report.checks:
            if c.name not in merged:
                merged[c.name] = c
                order.append(c.name)
                continue
            prev = merged[c.name]
            keep = c if c.worst_slack < prev.worst_slack else prev
            merged[c.name] = AxiomCheck(
                c.name,
                prev.passed and c.passed,
                prev.instances + c.instances,
                keep.worst_slack,
                keep.witness,
                keep.lhs,
                keep.rhs,
            )
    return AxiomReport(tuple(merged[name] for name in order))


def _sample_triples(
    names: Sequence[str], count: int, seed: int
) -> list[tuple[str, str, str]]:
    rng = SplitMix64(seed)
    return [
        (rng.choice(names), rng.choice(names), rng.choice(names))
        for _ in range(count)
    ]


# ---------------------------------------------------------------------------
# similarity-measure conditions on SU


def check_similarity_axioms(
    dataset: Dataset,
    triples: int | None = None,
    seed: int = 0,
    tol: float = TOLERANCE,
) -> AxiomReport:
    """Validate the similarity-measure conditions of SU on a dataset.

    Conditions checked, each over ordered instances drawn from the
    columns: symmetry ``SU(x,y) = SU(y,x)``; nonnegative
    self-similarity ``SU(x,x) >= 0``; dominance ``SU(x,x) >= SU(x,y)``;
    the triangle-style bound ``SU(x,y) + SU(y,z) <= SU(x,z) + SU(y,y)``;
    value range ``0 <= SU <= 1``; and maximality exactly on
    indiscernible pairs (``SU = 1`` iff equal canonical class).

    All conditions except the triangle bound are theorems and can only
    fail through an implementation fault; the triangle bound is a
    genuine property of the data and fails on some datasets (see the
    module docstring), in which case the report carries the witness.

    With ``triples=None`` and at most ``EXHAUSTIVE_LIMIT`` columns the
    triple set is exhaustive (all ordered triples); otherwise
    ``triples`` (default 1000) seeded samples are drawn.  Pair-based
    conditions run over the pairs occurring in the triple set plus all
    self-pairs.
    """
    names = list(dataset.names)
    parts = {nm: induced_partition(dataset[nm], dataset) for nm in names}
    classes = canonical_classes(dataset)

    if triples is None and len(names) <= EXHAUSTIVE_LIMIT:
        triple_list = list(itertools.product(names, repeat=3))
        pair_list = list(itertools.product(names, repeat=2))
    else:
        triple_list = _sample_triples(names, triples or DEFAULT_SAMPLES, seed)
        seen = {(a, b) for x, y, z in triple_list for a, b in ((x, y), (y, z), (x, z))}
        seen.update((nm, nm) for nm in names)
        pair_list = sorted(seen)

    su_cache: dict[tuple[str, str], float] = {}

    def su(a: str, b: str) -> float:
        key = (a, b)
        if key not in su_cache:
            su_cache[key] = symmetric_uncertainty(parts[a], parts[b])
        return su_cache[key]

    g_symmetry = _Gauge("symmetry")
    g_self_nonneg = _Gauge("self_similarity_nonnegative")
    g_dominance = _Gauge("self_similarity_dominates")
    g_triangle = _Gauge("triangle_bound")
    g_range = _Gauge("value_range")
    g_max_equal = _Gauge("max_on_indiscernible")
    g_max_only = _Gauge("max_only_on_indiscernible")

    for nm in names:
        g_self_nonneg.add(su(nm, nm), (nm,), lhs=su(nm, nm), rhs=0.0)

    done_unordered = set()
    for a, b in pair_list:
        v = su(a, b)
        g_range.add(min(v, 1.0 - v), (a, b), lhs=v, rhs=None)
        g_dominance.add(su(a, a) - v, (a, b), lhs=v, rhs=su(a, a))
        if frozenset((a, b)) not in done_unordered:
            done_unordered.add(frozenset((a, b)))
            g_symmetry.add(-abs(v - su(b, a)), (a, b), lhs=v, rhs=su(b, a))
        if classes[a] == classes[b]:
            g_max_equal.add(-(1.0 - v), (a, b), lhs=v, rhs=1.0)
        else:
            g_max_only.add(1.0 - v, (a, b), lhs=v, rhs=1.0)

    for x, y, z in triple_list:
        lhs = su(x, y) + su(y, z)
        rhs = su(x, z) + su(y, y)
        g_triangle.add(rhs - lhs, (x, y, z), lhs=lhs, rhs=rhs)

    return AxiomReport(
        (
            g_symmetry.finish(-tol),
            g_self_nonneg.finish(-tol),
            g_dominance.finish(-tol),
            g_triangle.finish(-tol),
            g_range.finish(-tol),
            g_max_equal.finish(-tol),
            g_max_only.finish(tol, strict=True),
        )
    )


# ---------------------------------------------------------------------------
# metric axioms on the distance matrix


def check_distance_axioms(
    matrix: DistanceMatrix,
    class_keys: Mapping[str, CanonicalClass],
    triples: int | None = None,
    seed: int = 0,
    tol: float = TOLERANCE,
) -> AxiomReport:
    """Validate the metric axioms on a computed distance matrix.

    ``class_keys`` maps each matrix column to its canonical class (see
    ``catent.model.canonical_classes``); zero distance must occur
    exactly on equal classes.  Triangle triples are exhaustive up to
    ``EXHAUSTIVE_LIMIT`` names, sampled (seeded) beyond that.
    """
    names = matrix.names
    missing = [nm for nm in names if nm not in class_keys]
    if missing:
        raise KeyError(f"no canonical class for columns: {missing}")
    d = matrix.value

    g_nonneg = _Gauge("nonnegativity")
    g_bounded = _Gauge("bounded_by_one")
    g_symmetry = _Gauge("symmetry")
    g_diag = _Gauge("zero_diagonal")
    g_triangle = _Gauge("triangle_inequality")
    g_zero_equal = _Gauge("zero_on_indiscernible")
    g_zero_only = _Gauge("zero_only_on_indiscernible")

    for i, a in enumerate(names):
        g_diag.add(-abs(d(a, a)), (a,), lhs=d(a, a), rhs=0.0)
        for b in names[i + 1 :]:
            v = d(a, b)
            g_nonneg.add(v, (a, b), lhs=v, rhs=0.0)
            g_bounded.add(1.0 - v, (a, b), lhs=v, rhs=1.0)
            g_symmetry.add(-abs(v - d(b, a)), (a, b), lhs=v, rhs=d(b, a))
            if class_keys[a] == class_keys[b]:
                g_zero_equal.add(-v, (a, b), lhs=v, rhs=0.0)
            else:
                g_zero_only.add(v, (a, b), lhs=v, rhs=0.0)

    if triples is None and len(names) <= EXHAUSTIVE_LIMIT:
        triple_list = list(itertools.product(names, repeat=3))
    else:
        triple_list = _sample_triples(names, triples or DEFAULT_SAMPLES, seed)
    for x, y, z in triple_list:
        lhs = d(x, z)
        rhs = d(x, y) + d(y, z)
        g_triangle.add(rhs - lhs, (x, y, z), lhs=lhs, rhs=rhs)

    return AxiomReport(
        (
            g_nonneg.finish(-tol),
            g_bounded.finish(-tol),
            g_symmetry.finish(-tol),
            g_diag.finish(-tol),
            g_triangle.finish(-tol),
            g_zero_equal.finish(-tol),
            g_zero_only.finish(tol, strict=True),
        )
    )


# ---------------------------------------------------------------------------
# the topology is not discrete


def nondiscreteness_demo(steps: int = 11) -> list[tuple[float, float]]:
    """Distances arbitrarily close to zero between distinct columns.

    For ``n = 4, 8, 16, ...`` (doubling ``steps`` times) build ``n``
    uniform rows and two indicator columns: membership in the first
    ``n/2`` rows versus the first ``n/2 + 1`` rows.  The columns induce
    different partitions, so the distance is strictly positive, yet it
    shrinks without bound as ``n`` grows: no ball of positive radius
    isolates a point, so the induced topology is not discrete.

    Returns ``(1/n, distance)`` pairs in generation order.
    """
    if steps < 1:
        raise ValueError("at least one step required")
    out = []
    for i in range(steps):
        n = 4 << i
        k = n // 2
        dataset = Dataset.from_columns(
            {
                "first_half": ["in" if r < k else "out" for r in range(n)],
                "half_plus_one": ["in" if r < k + 1 else "out" for r in range(n)],
            }
        )
        dist = su_distance(dataset["first_half"], dataset["half_plus_one"], dataset)
        out.append((1.0 / n, dist))
    return out
