"""Entropy functionals on partitions, in bits, plus law validators.

Everything here takes ``Partition`` values (build them with
``catent.model.induced_partition``), so a quantity like the conditional
entropy of one column given another is literally a sum over block
intersections.  Block probabilities stay exact ``Fraction`` values until
the moment a logarithm is taken; sums of float terms go through
``math.fsum`` so identities hold to near machine precision.

Conventions:

* ``TOLERANCE`` (1e-9) is the acceptance threshold for identities and
  inequalities among computed entropies.
* ``CLAMP`` (1e-12): accumulated round-off can leave a quantity that is
  mathematically nonnegative epsilon-negative; anything in
  ``[-CLAMP, 0)`` is snapped to exactly ``0.0``.
* The symmetric uncertainty of two constant variables is defined as 1
  (they are indiscernible, so they get the similarity value of a
  variable with itself); the entropic ratio of two constants is
  genuinely undefined and raises.
"""

import math
from dataclasses import dataclass

from .model import (
    CatentError,
    Partition,
    ensure_same_universe,
    is_coarser,
    join,
)

Bits = float

TOLERANCE = 1e-9
CLAMP = 1e-12


class UndefinedRatioError(CatentError, ZeroDivisionError):
    """The entropic ratio is undefined when both variables are constant."""


def _clamp(value: float) -> float:
    # negative round-off only; real negatives pass through untouched
    return 0.0 if -CLAMP <= value < 0.0 else value


def entropy(p: Partition) -> Bits:
    """Shannon entropy of a partition: ``-sum P(B) log2 P(B)``."""
    return _clamp(
        -math.fsum(float(q) * math.log2(float(q)) for q in p.block_probs)
    )


def conditional_entropy(x: Partition, y: Partition) -> Bits:
    """Entropy of ``x`` remaining after ``y`` is known.

    Computed as ``-sum_{Q,R} P(Q & R) log2(P(Q & R) / P(R))`` over block
    pairs; the ratio is formed exactly before conversion to float.
    """
    ensure_same_universe(x, y)
    weights = x.row_weights
    terms = []
    for r_block, r_prob in zip(y.blocks, y.block_probs):
        for q_block in x.blocks:
            inter = q_block & r_block
            if inter:
                mass = sum(weights[i] for i in inter)
                terms.append(float(mass) * math.log2(float(mass / r_prob)))
    return _clamp(-math.fsum(terms))


def joint_entropy(x: Partition, y: Partition) -> Bits:
    """Entropy of the joint observation: the entropy of ``join(x, y)``."""
    return entropy(join(x, y))


def mutual_information(x: Partition, y: Partition) -> Bits:
    """Shared information ``H(x) - H(x | y)`` in bits."""
    return _clamp(entropy(x) - conditional_entropy(x, y))


def symmetric_uncertainty(x: Partition, y: Partition) -> float:
    """Mutual information normalised to ``[0, 1]``:
    ``2 MI / (H(x) + H(y))``.

    Two constants are indiscernible, so the pair is assigned 1, the
    similarity of a variable with itself.
    """
    hx, hy = entropy(x), entropy(y)
    if hx == 0.0 and hy == 0.0:
        return 1.0
    return 2.0 * mutual_information(x, y) / (hx + hy)


def entropic_ratio(x: Partition, y: Partition) -> float:
    """Joint entropy over summed marginals, ``H(x,y) / (H(x) + H(y))``.

    Ranges over ``[1/2, 1]``: 1/2 when the partitions carry the same
    information, 1 when independent.  Undefined (raises) for two
    constants.
    """
    hx, hy = entropy(x), entropy(y)
    if hx + hy == 0.0:
        raise UndefinedRatioError(
            "entropic ratio is undefined for two constant variables"
        )
    return joint_entropy(x, y) / (hx + hy)


# ---------------------------------------------------------------------------
# cross-checks between independent formulations


@dataclass(frozen=True)
class CrossCheck:
    """Disagreement between alternative computation routes for one pair.

    Each gap is an absolute difference between two formulas that are
    equal in exact arithmetic; ``distance_gap`` is ``None`` when both
    variables are constant (the second distance form divides by
    ``H(x) + H(y)``).
    """

    su_gap: float
    mi_gap: float
    distance_gap: float | None

    @property
    def max_gap(self) -> float:
        gaps = [self.su_gap, self.mi_gap]
        if self.distance_gap is not None:
            gaps.append(self.distance_gap)
        return max(gaps)


def cross_check(x: Partition, y: Partition) -> CrossCheck:
    """Compare the posterior-sum and joint-entropy routes to MI, SU and
    the SU-distance on one pair of partitions."""
    hx, hy, hxy = entropy(x), entropy(y), joint_entropy(x, y)
    hx_y, hy_x = conditional_entropy(x, y), conditional_entropy(y, x)

    mi_posterior = hx - hx_y
    mi_joint = hx + hy - hxy
    mi_gap = abs(mi_posterior - mi_joint)

    if hx + hy == 0.0:
        # both constant: SU is 1 by convention on every route
        return CrossCheck(su_gap=0.0, mi_gap=mi_gap, distance_gap=None)

    su_mi = 2.0 * mi_posterior / (hx + hy)
    su_ratio = 2.0 * (1.0 - hxy / (hx + hy))
    dist_su = 1.0 - su_mi
    dist_conditional = (hx_y + hy_x) / (hx + hy)
    return CrossCheck(
        su_gap=abs(su_mi - su_ratio),
        mi_gap=mi_gap,
        distance_gap=abs(dist_su - dist_conditional),
    )


# ---------------------------------------------------------------------------
# conditional-entropy laws


@dataclass(frozen=True)
class LawClause:
    """Outcome of one law on one triple.

    ``gap`` is the worst violation magnitude (0.0 when the law holds
    cleanly, ``inf`` when a boolean implication fails).  ``vacuous``
    marks clauses whose hypothesis never fired on this triple.
    """

    name: str
    passed: bool
    vacuous: bool
    gap: float


@dataclass(frozen=True)
class LawReport:
    """Clause-by-clause outcome of the conditional-entropy laws."""

    clauses: tuple[LawClause, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, name: str) -> LawClause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> tuple[LawClause, ...]:
        return tuple(c for c in self.clauses if not c.passed)


def check_conditional_entropy_laws(
    x: Partition, y: Partition, z: Partition, tol: float = TOLERANCE
) -> LawReport:
    """Validate the standard conditional-entropy laws on one triple.

    Clauses:

    * ``chain_rule``: ``H(x v y | z) = H(x | z) + H(y | x v z)``.
    * ``coarsening_monotone``: if ``x`` is coarser than ``y`` then
      ``H(x | z) <= H(y | z)`` and ``H(z | x) >= H(z | y)``; vacuous
      when ``x`` is not coarser than ``y``.
    * ``zero_iff_coarser``: ``H(x | y) = 0`` exactly when ``x`` is
      coarser than (or equal to) ``y``; vacuous when neither side
      holds, i.e. when the equivalence is witnessed only negatively.
    * ``join_raises_entropy``: ``H(x) <= H(x v y)``.
    * ``conditioning_reduces``: ``H(x | y v z)`` is at most ``H(x | y)``
      and at most ``H(x | z)``.
    """
    ensure_same_universe(x, y)
    ensure_same_universe(x, z)
    xy = join(x, y)
    xz = join(x, z)
    yz = join(y, z)

    clauses = []

    lhs = conditional_entropy(xy, z)
    rhs = conditional_entropy(x, z) + conditional_entropy(y, xz)
    gap = abs(lhs - rhs)
    clauses.append(LawClause("chain_rule", gap <= tol, False, gap))

    coarser = is_coarser(x, y)
    if coarser:
        gap_fwd = max(conditional_entropy(x, z) - conditional_entropy(y, z), 0.0)
        gap_rev = max(conditional_entropy(z, y) - conditional_entropy(z, x), 0.0)
        gap = max(gap_fwd, gap_rev)
        clauses.append(LawClause("coarsening_monotone", gap <= tol, False, gap))
    else:
        clauses.append(LawClause("coarsening_monotone", True, True, 0.0))

    h_x_given_y = conditional_entropy(x, y)
    zero = h_x_given_y <= tol
    if coarser and not zero:
        clauses.append(LawClause("zero_iff_coarser", False, False, h_x_given_y))
    elif zero and not coarser:
        clauses.append(LawClause("zero_iff_coarser", False, False, math.inf))
    else:
        clauses.append(
            LawClause("zero_iff_coarser", True, not (coarser or zero), 0.0)
        )

    gap = max(entropy(x) - entropy(xy), 0.0)
    clauses.append(LawClause("join_raises_entropy", gap <= tol, False, gap))

    h_x_given_yz = conditional_entropy(x, yz)
    gap = max(
        h_x_given_yz - conditional_entropy(x, y),
        h_x_given_yz - conditional_entropy(x, z),
        0.0,
    )
    clauses.append(LawClause("conditioning_reduces", gap <= tol, False, gap))

    return LawReport(tuple(clauses))
