"""The joint operation and its algebraic laws.

Two columns combine row-wise into a joint column whose labels are the
pairs of their labels.  Up to indiscernibility (equal induced
partitions) this operation is associative and commutative, any constant
column is its identity, and it is 1-Lipschitz in each argument for the
SU-distance:

    d(x * y, z * w)  <=  d(x, z) + d(y, w)

so joining is continuous in the metric of ``catent.metric``.  The law
checkers below test the monoid laws exactly (canonical-class equality,
no tolerance) and contractivity numerically.
"""

import itertools
from typing import Sequence

from .model import (
    CategoricalVariable,
    Dataset,
    JointVariable,
    StructuralError,
    canonicalize,
    induced_partition,
    join,
)
from .entropy import TOLERANCE
from .metric import (
    AxiomReport,
    DEFAULT_SAMPLES,
    EXHAUSTIVE_LIMIT,
    _Gauge,
    partition_distance,
)
from .randgen import SplitMix64


def joint(
    a: CategoricalVariable, b: CategoricalVariable, dataset: Dataset
) -> JointVariable:
    """Row-wise pairing of two columns: label ``(a[r], b[r])`` at row r.

    The result's partition is exactly ``join`` of the inputs'
    partitions; its name is ``(a.name*b.name)``.
    """
    if len(a) != dataset.row_count or len(b) != dataset.row_count:
        raise StructuralError("variables must have one label per dataset row")
    return JointVariable(
        name=f"({a.name}*{b.name})",
        labels=tuple(zip(a.labels, b.labels)),
        parents=(a.name, b.name),
    )


def identity_variable(dataset: Dataset, name: str = "constant") -> CategoricalVariable:
    """A constant column: the identity of the joint operation up to
    indiscernibility (pairing with it only relabels)."""
    return CategoricalVariable(name, ("const",) * dataset.row_count)


def are_indiscernible(
    a: CategoricalVariable, b: CategoricalVariable, dataset: Dataset
) -> bool:
    """True iff the two columns induce the same partition of the rows."""
    return canonicalize(a, dataset) == canonicalize(b, dataset)


def relabel(
    var: CategoricalVariable, fmt: str = "r{}", suffix: str = "'"
) -> CategoricalVariable:
    """An indiscernible copy of ``var`` with fresh labels.

    Labels are renamed bijectively by alphabet position, so the induced
    partition is untouched by construction.
    """
    rename = {lab: fmt.format(i) for i, lab in enumerate(var.alphabet)}
    return CategoricalVariable(var.name + suffix, tuple(rename[l] for l in var.labels))


def _sample_name_tuples(
    names: Sequence[str], width: int, count: int, seed: int
) -> list[tuple[str, ...]]:
    rng = SplitMix64(seed)
    return [tuple(rng.choice(names) for _ in range(width)) for _ in range(count)]


def check_monoid_laws(
    dataset: Dataset,
    triples: int | None = None,
    seed: int = 0,
) -> AxiomReport:
    """Validate the monoid laws of the joint operation, exactly.

    Every law is an equality of canonical classes, so there is no
    tolerance: a law either holds or produces a witness.  Checks:
    associativity ``(x*y)*z ~ x*(y*z)``; commutativity ``x*y ~ y*x``;
    identity ``x*constant ~ x``; and well-definedness, i.e. replacing
    the operands by relabeled (indiscernible) copies leaves the class
    of the result unchanged.

    Triples of column names are exhaustive for datasets of at most
    ``EXHAUSTIVE_LIMIT`` columns, otherwise ``triples`` (default 1000)
    seeded samples.
    """
    names = list(dataset.names)
    if triples is None and len(names) <= EXHAUSTIVE_LIMIT:
        triple_list = list(itertools.product(names, repeat=3))
    else:
        triple_list = _sample_name_tuples(
            names, 3, triples or DEFAULT_SAMPLES, seed
        )

    const = identity_variable(dataset)
    canon = lambda v: canonicalize(v, dataset)  # noqa: E731

    g_assoc = _Gauge("associativity")
    g_commut = _Gauge("commutativity")
    g_ident = _Gauge("identity_element")
    g_well = _Gauge("well_definedness")

    def verdict(equal: bool) -> float:
        # exact laws: margin 0 on success, -inf on a counterexample
        return 0.0 if equal else float("-inf")

    pairs_done: set[tuple[str, str]] = set()
    singles_done: set[str] = set()
    for nx, ny, nz in triple_list:
        x, y, z = dataset[nx], dataset[ny], dataset[nz]
        xy = joint(x, y, dataset)
        left = canon(joint(xy, z, dataset))
        right = canon(joint(x, joint(y, z, dataset), dataset))
        g_assoc.add(verdict(left == right), (nx, ny, nz))

        if (nx, ny) not in pairs_done:
            pairs_done.add((nx, ny))
            c_xy = canon(xy)
            g_commut.add(verdict(c_xy == canon(joint(y, x, dataset))), (nx, ny))
            relabeled = joint(relabel(x), relabel(y), dataset)
            g_well.add(verdict(canon(relabeled) == c_xy), (nx, ny))

        if nx not in singles_done:
            singles_done.add(nx)
            g_ident.add(verdict(canon(joint(x, const, dataset)) == canon(x)), (nx,))

    return AxiomReport(
        (
            g_assoc.finish(0.0),
            g_commut.finish(0.0),
            g_ident.finish(0.0),
            g_well.finish(0.0),
        )
    )


def check_contractivity(
    dataset: Dataset,
    quadruples: int | None = None,
    seed: int = 0,
    tol: float = TOLERANCE,
) -> AxiomReport:
    """Validate ``d(x*y, z*w) <= d(x,z) + d(y,w)`` over column quadruples.

    Exhaustive over all ordered quadruples for datasets of at most
    ``EXHAUSTIVE_LIMIT`` columns, otherwise ``quadruples`` (default
    1000) seeded samples.  The slack reported is the amount by which
    the right side exceeds the left.
    """
    names = list(dataset.names)
    if quadruples is None and len(names) <= EXHAUSTIVE_LIMIT:
        quad_list = list(itertools.product(names, repeat=4))
    else:
        quad_list = _sample_name_tuples(
            names, 4, quadruples or DEFAULT_SAMPLES, seed
        )

    parts = {nm: induced_partition(dataset[nm], dataset) for nm in names}
    joint_parts: dict[tuple[str, str], object] = {}

    def jp(a: str, b: str):
        key = (a, b)
        if key not in joint_parts:
            joint_parts[key] = join(parts[a], parts[b])
        return joint_parts[key]

    base_cache: dict[frozenset, float] = {}

    def base_d(a: str, b: str) -> float:
        key = frozenset((a, b))
        if key not in base_cache:
            base_cache[key] = partition_distance(parts[a], parts[b])
        return base_cache[key]

    joint_cache: dict[tuple, float] = {}

    def joint_d(p1: tuple[str, str], p2: tuple[str, str]) -> float:
        key = (p1, p2) if p1 <= p2 else (p2, p1)
        if key not in joint_cache:
            joint_cache[key] = partition_distance(jp(*p1), jp(*p2))
        return joint_cache[key]

    g = _Gauge("contractivity")
    for nx, ny, nz, nw in quad_list:
        lhs = joint_d((nx, ny), (nz, nw))
        rhs = base_d(nx, nz) + base_d(ny, nw)
        g.add(rhs - lhs, (nx, ny, nz, nw), lhs=lhs, rhs=rhs)

    return AxiomReport((g.finish(-tol),))
