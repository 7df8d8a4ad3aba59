"""Seeded random dataset generation for validators and property tests.

The generator is deliberately self-contained: a SplitMix64 stream (the
public-domain mixing constants) rather than a platform RNG, so a given
``(GenConfig, columns)`` pair reproduces a byte-identical dataset on any
machine, Python version, or reimplementation in another language.

Correlation modes control how columns relate:

* ``independent``: every column drawn independently.
* ``refined``: the second column subdivides the first column's blocks,
  so the first partition is coarser than the second by construction
  (needs at least two columns to bite; later columns are independent).
* ``noisy-copy``: the second column is a relabeled copy of the first
  with at most one row flipped, landing on or near indiscernibility.
* ``arbitrary``: each column after the first independently picks one of
  independent / refine-an-earlier / noisy-copy-an-earlier / constant.
"""

from dataclasses import dataclass

from .model import CatentError, Dataset

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

MODES = ("independent", "refined", "noisy-copy", "arbitrary")


class ConfigError(CatentError, ValueError):
    """Generator configuration is out of range or malformed."""


class SplitMix64:
    """SplitMix64 pseudo-random stream over 64-bit integers.

    seed 0 produces 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, ... which
    matches the published reference outputs for this generator.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw from ``range(n)`` by modulo reduction.

        The modulo bias is ~n / 2**64, far below anything observable at
        test scale, and keeping the reduction trivial keeps the stream
        easy to reproduce elsewhere.
        """
        if n <= 0:
            raise ConfigError("draw range must be positive")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish draw from the inclusive range ``[lo, hi]``."""
        if hi < lo:
            raise ConfigError("empty integer range")
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class GenConfig:
    """Parameters for one generated dataset.

    ``rows`` and ``alphabet_size`` are inclusive ``(lo, hi)`` ranges;
    the alphabet range bounds the number of distinct symbols a column
    draws from (the realised alphabet may be smaller).
    """

    seed: int = 0
    rows: tuple[int, int] = (2, 12)
    alphabet_size: tuple[int, int] = (1, 4)
    correlation_mode: str = "arbitrary"

    def __post_init__(self):
        if not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")
        for field_name, (lo, hi) in (
            ("rows", self.rows),
            ("alphabet_size", self.alphabet_size),
        ):
            if lo < 1 or hi < lo:
                raise ConfigError(
                    f"{field_name} range ({lo}, {hi}) is empty or degenerate"
                )
        if self.correlation_mode not in MODES:
            raise ConfigError(
                f"unknown correlation mode {self.correlation_mode!r}; "
                f"expected one of {MODES}"
            )


def gen_dataset(config: GenConfig, columns: int) -> Dataset:
    """Generate a uniform-weight dataset with the given column count.

    Column names are ``c0, c1, ...``.  The output is a pure function of
    ``(config, columns)``.
    """
    if columns < 1:
        raise ConfigError("at least one column required")
    rng = SplitMix64(config.seed)
    n = rng.randint(*config.rows)

    def independent() -> list[str]:
        k = rng.randint(*config.alphabet_size)
        return [f"s{rng.below(k)}" for _ in range(n)]

    def refinement(base: list[str]) -> list[str]:
        # suffixing preserves block containment regardless of the draws
        return [f"{lab}/{rng.below(2)}" for lab in base]

    def noisy_copy(base: list[str]) -> list[str]:
        alphabet = list(dict.fromkeys(base))
        rename = {lab: f"t{i}" for i, lab in enumerate(alphabet)}
        out = [rename[lab] for lab in base]
        if rng.below(2):
            out[rng.below(n)] = f"t{rng.below(len(alphabet))}"
        return out

    built: list[list[str]] = []
    mode = config.correlation_mode
    for ci in range(columns):
        if ci == 0 or mode == "independent":
            built.append(independent())
        elif mode == "refined":
            built.append(refinement(built[0]) if ci == 1 else independent())
        elif mode == "noisy-copy":
            built.append(noisy_copy(built[0]) if ci == 1 else independent())
        else:  # arbitrary
            strategy = rng.below(4)
            if strategy == 0:
                built.append(independent())
            elif strategy == 1:
                built.append(refinement(rng.choice(built)))
            elif strategy == 2:
                built.append(noisy_copy(rng.choice(built)))
            else:
                built.append(["k0"] * n)

    return Dataset.from_columns({f"c{i}": col for i, col in enumerate(built)})
