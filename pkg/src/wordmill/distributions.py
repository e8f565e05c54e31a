"""Word-length distributions of wheel systems, kept in exact integer counts."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .wheels import Wheel, WheelSystem, enumerate_words, load_bundled_system, preset


@dataclass(frozen=True)
class LengthDistribution:
    """Map from word length to the number of tuples producing that length.

    Counts tuples, not distinct words: two tuples that collide on the same
    word still contribute two counts.
    """

    counts: dict[int, int]

    def __post_init__(self):
        cleaned: dict[int, int] = {}
        for length in sorted(self.counts):
            count = self.counts[length]
            if length < 0:
                raise ValueError("lengths must be non-negative")
            if count < 0:
                raise ValueError("counts must be non-negative")
            if count:
                cleaned[length] = count
        object.__setattr__(self, "counts", cleaned)

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "LengthDistribution":
        return cls(dict(Counter(lengths)))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, length: int) -> int:
        return self.counts.get(length, 0)

    def lengths(self) -> list[int]:
        return sorted(self.counts)


def wheel_length_distribution(wheel: Wheel) -> LengthDistribution:
    return LengthDistribution.from_lengths(len(f) for f in wheel.fragments)


def convolve(a: LengthDistribution, b: LengthDistribution) -> LengthDistribution:
    """Length distribution of words formed by concatenating one draw from each."""
    out: dict[int, int] = {}
    for la, ca in a.counts.items():
        for lb, cb in b.counts.items():
            key = la + lb
            out[key] = out.get(key, 0) + ca * cb
    return LengthDistribution(out)


def system_length_distribution(system: WheelSystem, mode: str = "tuple") -> LengthDistribution:
    """Distribution over all tuples of a system.

    mode="tuple" convolves the per-wheel distributions; mode="exhaustive"
    measures every generated word.  The two agree exactly.
    """
    if mode == "tuple":
        result = LengthDistribution({0: 1})
        for wheel in system.wheels:
            result = convolve(result, wheel_length_distribution(wheel))
        return result
    if mode == "exhaustive":
        return LengthDistribution.from_lengths(len(word) for _, word in enumerate_words(system))
    raise ValueError(f"unknown mode {mode!r}; expected 'tuple' or 'exhaustive'")


def binomial_reference(trials: int, shift: int = 0, total: int | None = None, exact: bool = True) -> LengthDistribution:
    """Binomial C(trials, k) profile shifted by ``shift`` and scaled to ``total``.

    In exact mode ``total`` must be divisible by 2**trials so every count is an
    integer; otherwise counts are rounded half up and the total may drift.
    """
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if shift < 0:
        raise ValueError("shift must be non-negative")
    denom = 1 << trials
    if total is None:
        total = denom
    if total < 1:
        raise ValueError("total must be positive")
    if exact and total % denom:
        raise ValueError(f"total {total} is not divisible by 2**{trials}; exact scaling impossible")
    counts = {}
    for k in range(trials + 1):
        raw = comb(trials, k) * total
        counts[k + shift] = raw // denom if exact else (2 * raw + denom) // (2 * denom)
    return LengthDistribution(counts)


def percentage_hundredths(distribution: LengthDistribution) -> dict[int, int]:
    """Percent of tuples per length, in integer hundredths, rounded half up."""
    total = distribution.total
    if total == 0:
        raise ValueError("empty distribution has no percentages")
    return {
        length: (20000 * count + total) // (2 * total)
        for length, count in distribution.counts.items()
    }


def percentages(distribution: LengthDistribution) -> list[tuple[int, float]]:
    """(length, percent) pairs with percent rounded half up to 2 decimals."""
    hundredths = percentage_hundredths(distribution)
    return [(length, hundredths[length] / 100) for length in sorted(hundredths)]


@dataclass(frozen=True)
class DeviationReport:
    max_percentage_point_diff: float
    at_length: int
    total_variation: float


def deviation(observed: LengthDistribution, reference: LengthDistribution) -> DeviationReport:
    """Largest per-length percentage-point gap and the total variation distance."""
    if observed.total == 0 or reference.total == 0:
        raise ValueError("cannot compare an empty distribution")
    to = Fraction(observed.total)
    tr = Fraction(reference.total)
    worst = Fraction(0)
    worst_length = min(observed.lengths() + reference.lengths())
    tv = Fraction(0)
    for length in sorted(set(observed.counts) | set(reference.counts)):
        po = Fraction(observed.count(length)) / to
        pr = Fraction(reference.count(length)) / tr
        gap = abs(po - pr)
        tv += gap
        if gap * 100 > worst:
            worst = gap * 100
            worst_length = length
    return DeviationReport(float(worst), worst_length, float(tv / 2))


def group_wheels(system: WheelSystem, grouping: Sequence[Sequence[int]]) -> WheelSystem:
    """Merge contiguous runs of wheels into single wheels.

    Each run becomes one wheel whose fragments are the Cartesian-product
    concatenations of the source wheels, in enumeration order.  The grouping
    must list every wheel index exactly once, in order.
    """
    flat = [i for run in grouping for i in run]
    if flat != list(range(len(system.wheels))):
        raise ValueError("grouping must partition the wheels into contiguous runs, in order")
    merged = []
    for run in grouping:
        fragment_lists = [system.wheels[i].fragments for i in run]
        merged.append(Wheel(tuple("".join(c) for c in itertools.product(*fragment_lists))))
    return WheelSystem(tuple(merged))


def reference_systems() -> dict[str, WheelSystem]:
    """The three bundled 24-fragment three-wheel configurations."""
    return {
        "binomial": preset("binomial_24"),
        "alternative_1": load_bundled_system("alternative_1.wheels"),
        "alternative_2": load_bundled_system("alternative_2.wheels"),
    }


# CSV exchange format for distributions: header "length,count", one row per length.


def parse_distribution_csv(text: str) -> LengthDistribution:
    import csv
    import io

    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise ValueError("empty distribution file")
    start = 1 if rows[0][:2] == ["length", "count"] or rows[0][0] == "length" else 0
    counts: dict[int, int] = {}
    for row in rows[start:]:
        length, count = int(row[0]), int(row[1])
        counts[length] = counts.get(length, 0) + count
    return LengthDistribution(counts)


def load_distribution_csv(path) -> LengthDistribution:
    with open(path, encoding="utf-8") as handle:
        return parse_distribution_csv(handle.read())
