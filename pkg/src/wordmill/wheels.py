"""Wheel systems: ordered fragment inventories whose Cartesian product is a vocabulary.

A wheel holds a fixed cycle of word fragments.  A system of N wheels generates
one word per fragment tuple by concatenating the selected fragments left to
right.  Tuples are indexed by mixed-radix numbers with the leftmost wheel as
the most significant digit, which keeps enumeration order lexicographic in
tuple space and makes the Roman preset order-isomorphic to numeric value.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import AmbiguousWordError, FormatError, NotInVocabularyError

Fragment = str

EMPTY: Fragment = ""

PRESET_NAMES = ("roman", "tiltman", "nine_wheel", "binomial_24")


@dataclass(frozen=True)
class Wheel:
    """A cycle of word fragments with a current rotation offset.

    Fragments may repeat and may be empty.  The offset only matters to
    ``spin``; indexing operations always use the stored fragment order.
    """

    fragments: tuple[Fragment, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "fragments", tuple(self.fragments))
        if not self.fragments:
            raise ValueError("a wheel needs at least one fragment")
        for frag in self.fragments:
            if not isinstance(frag, str):
                raise TypeError(f"fragment must be str, got {type(frag).__name__}")
        object.__setattr__(self, "offset", self.offset % len(self.fragments))

    @property
    def size(self) -> int:
        return len(self.fragments)

    def fragment_at(self, position: int) -> Fragment:
        """Fragment visible ``position`` steps from the current offset."""
        return self.fragments[(self.offset + position) % self.size]

    def rotated(self, delta: int) -> "Wheel":
        return Wheel(self.fragments, self.offset + delta)


@dataclass(frozen=True)
class WheelSystem:
    wheels: tuple[Wheel, ...]

    def __post_init__(self):
        object.__setattr__(self, "wheels", tuple(self.wheels))
        if not self.wheels:
            raise ValueError("a wheel system needs at least one wheel")
        for wheel in self.wheels:
            if not isinstance(wheel, Wheel):
                raise TypeError("wheel system entries must be Wheel instances")

    @classmethod
    def from_fragments(cls, fragment_lists: Iterable[Iterable[Fragment]]) -> "WheelSystem":
        return cls(tuple(Wheel(tuple(frags)) for frags in fragment_lists))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(w.size for w in self.wheels)


def tuple_count(system: WheelSystem) -> int:
    """Number of fragment tuples (not necessarily distinct words)."""
    return math.prod(system.sizes)


def digits_of(system: WheelSystem, index: int) -> tuple[int, ...]:
    """Mixed-radix decomposition of ``index``, leftmost wheel most significant."""
    count = tuple_count(system)
    if not 0 <= index < count:
        raise IndexError(f"index {index} out of range 0..{count - 1}")
    digits = []
    for size in reversed(system.sizes):
        index, digit = divmod(index, size)
        digits.append(digit)
    digits.reverse()
    return tuple(digits)


def index_from_digits(system: WheelSystem, digits: Sequence[int]) -> int:
    sizes = system.sizes
    if len(digits) != len(sizes):
        raise ValueError(f"expected {len(sizes)} digits, got {len(digits)}")
    index = 0
    for digit, size in zip(digits, sizes):
        if not 0 <= digit < size:
            raise IndexError(f"digit {digit} out of range 0..{size - 1}")
        index = index * size + digit
    return index


def word_for_digits(system: WheelSystem, digits: Sequence[int]) -> str:
    return "".join(w.fragments[d] for w, d in zip(system.wheels, digits))


def word_at(system: WheelSystem, index: int) -> str:
    """Word generated by tuple number ``index``."""
    return word_for_digits(system, digits_of(system, index))


def fragment_parses(system: WheelSystem, word: str) -> list[tuple[int, ...]]:
    """All fragment-position tuples that concatenate to ``word``.

    Exhaustive split search over one fragment per wheel, pruned by prefix
    matching.  Results come back in ascending index order.
    """
    wheels = system.wheels
    n = len(wheels)
    end = len(word)
    found: list[tuple[int, ...]] = []
    stack: list[int] = []

    def walk(wheel_no: int, pos: int) -> None:
        if wheel_no == n:
            if pos == end:
                found.append(tuple(stack))
            return
        for digit, frag in enumerate(wheels[wheel_no].fragments):
            if word.startswith(frag, pos):
                stack.append(digit)
                walk(wheel_no + 1, pos + len(frag))
                stack.pop()

    walk(0, 0)
    return found


def index_of(system: WheelSystem, word: str) -> int:
    """Inverse of word_at when the word has exactly one parse.

    Raises NotInVocabularyError when no tuple produces the word and
    AmbiguousWordError (carrying all parses) when several do.
    """
    parses = fragment_parses(system, word)
    if not parses:
        raise NotInVocabularyError(word)
    if len(parses) > 1:
        raise AmbiguousWordError(word, parses)
    return index_from_digits(system, parses[0])


def enumerate_words(system: WheelSystem) -> Iterator[tuple[int, str]]:
    """Yield (index, word) over the full index range in ascending order.

    Each call returns a fresh independent iterator.
    """
    ranges = [w.fragments for w in system.wheels]
    for index, combo in enumerate(itertools.product(*ranges)):
        yield index, "".join(combo)


@dataclass(frozen=True)
class DistinctReport:
    distinct_count: int
    collisions: dict[str, tuple[tuple[int, ...], ...]]

    @property
    def collision_count(self) -> int:
        return len(self.collisions)

    @property
    def is_collision_free(self) -> bool:
        return not self.collisions


def distinct_words(system: WheelSystem) -> DistinctReport:
    """Count distinct words and report every word produced by >1 tuple."""
    produced: dict[str, list[tuple[int, ...]]] = {}
    ranges = [range(s) for s in system.sizes]
    wheels = system.wheels
    for combo in itertools.product(*ranges):
        word = "".join(wheels[i].fragments[d] for i, d in enumerate(combo))
        produced.setdefault(word, []).append(combo)
    collisions = {w: tuple(t) for w, t in produced.items() if len(t) > 1}
    return DistinctReport(len(produced), collisions)


def spin(system: WheelSystem, offsets: Sequence[int]) -> str:
    """Word shown after turning wheel i by offsets[i] from its stored offset.

    Pure: the stored offsets are read, never written.
    """
    if len(offsets) != len(system.wheels):
        raise ValueError(f"expected {len(system.wheels)} offsets, got {len(offsets)}")
    return "".join(w.fragment_at(o) for w, o in zip(system.wheels, offsets))


# ---------------------------------------------------------------------------
# Wheel file format
#
#   wheel:        starts a new wheel section
#   <fragment>    one fragment per line, stored verbatim after trimming
#                 trailing whitespace only; "-" denotes the empty fragment
#   # comment     ignored, as are blank lines
# ---------------------------------------------------------------------------


def parse_wheel_text(text: str) -> WheelSystem:
    wheels: list[list[Fragment]] = []
    current: list[Fragment] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        if line == "wheel:":
            if current is not None and not current:
                raise FormatError(f"line {lineno}: previous wheel section is empty")
            current = []
            wheels.append(current)
            continue
        if current is None:
            raise FormatError(f"line {lineno}: fragment before first 'wheel:' section")
        current.append(EMPTY if line == "-" else line)
    if not wheels:
        raise FormatError("no 'wheel:' sections found")
    if not wheels[-1]:
        raise FormatError("last wheel section is empty")
    return WheelSystem.from_fragments(wheels)


def format_wheel_system(system: WheelSystem) -> str:
    lines: list[str] = []
    for wheel in system.wheels:
        lines.append("wheel:")
        for frag in wheel.fragments:
            if frag == EMPTY:
                lines.append("-")
                continue
            if frag == "-" or frag.startswith("#") or frag != frag.rstrip() or "\n" in frag:
                raise FormatError(f"fragment {frag!r} is not representable in the wheel format")
            lines.append(frag)
    return "\n".join(lines) + "\n"


def load_wheel_file(path) -> WheelSystem:
    with open(path, encoding="utf-8") as handle:
        return parse_wheel_text(handle.read())


def save_wheel_file(system: WheelSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_wheel_system(system))


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

# Additive notation only: four identical strokes, never subtractive pairs.
_ROMAN_WHEELS: tuple[tuple[Fragment, ...], ...] = (
    ("", "M", "MM", "MMM", "MMMM"),
    ("", "D"),
    ("", "C", "CC", "CCC", "CCCC"),
    ("", "L"),
    ("", "X", "XX", "XXX", "XXXX"),
    ("", "V"),
    ("", "I", "II", "III", "IIII"),
)

ROMAN_MAX = 4999

_BUNDLED_FILES = {
    "tiltman": "tiltman.wheels",
    "nine_wheel": "nine_wheel.wheels",
    "binomial_24": "binomial_24.wheels",
}


def _read_bundled(filename: str) -> str:
    return resources.files(__package__).joinpath("data").joinpath(filename).read_text(encoding="utf-8")


def load_bundled_system(filename: str) -> WheelSystem:
    """Load a wheel file shipped in the package data directory."""
    return parse_wheel_text(_read_bundled(filename))


@lru_cache(maxsize=None)
def preset(name: str) -> WheelSystem:
    """Bundled wheel system by name: roman, tiltman, nine_wheel or binomial_24."""
    if name == "roman":
        return WheelSystem.from_fragments(_ROMAN_WHEELS)
    try:
        filename = _BUNDLED_FILES[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}") from None
    return load_bundled_system(filename)


def roman_digits(value: int) -> tuple[int, ...]:
    """Wheel positions spelling ``value`` on the Roman preset."""
    if not 0 <= value <= ROMAN_MAX:
        raise ValueError(f"value {value} out of range 0..{ROMAN_MAX}")
    return (
        value // 1000,
        value // 500 % 2,
        value // 100 % 5,
        value // 50 % 2,
        value // 10 % 5,
        value // 5 % 2,
        value % 5,
    )


def roman_value(digits: Sequence[int]) -> int:
    if len(digits) != 7:
        raise ValueError("expected 7 wheel positions")
    places = (1000, 500, 100, 50, 10, 5, 1)
    return sum(d * p for d, p in zip(digits, places))


def roman_encode(value: int) -> str:
    """Additive Roman numeral for ``value`` as generated by the preset wheels."""
    return "".join(_ROMAN_WHEELS[i][d] for i, d in enumerate(roman_digits(value)))


def roman_decode(word: str) -> int:
    """Numeric value of an additive Roman numeral; '' decodes to 0."""
    return roman_value(digits_of(preset("roman"), index_of(preset("roman"), word)))
