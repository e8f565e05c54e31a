"""Layered word grammar: crust, mantle, core, mantle, crust.

Words are parsed outermost-first into at most five runs.  Glyph classes are
disjoint, so a word maps deterministically onto a class sequence; the parse
succeeds when that sequence fits the layered pattern with a single core run.
Prefix glyphs are only allowed word-initially and attach to the layer of the
glyph that follows them.  Final glyphs count as crust.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import FormatError

CORE = "core"
MANTLE = "mantle"
CRUST = "crust"

# Slot order of a full parse; crust may appear in slots 0 and 4, mantle in 1
# and 3, core only in slot 2.
_SLOTS = (CRUST, MANTLE, CORE, MANTLE, CRUST)
_SLOT_CHOICES = {CRUST: (0, 4), MANTLE: (1, 3), CORE: (2,)}


def _charset(chars: Iterable[str]) -> frozenset[str]:
    out = frozenset(chars)
    for ch in out:
        if len(ch) != 1:
            raise ValueError(f"glyphs must be single characters, got {ch!r}")
    return out


@dataclass(frozen=True)
class GrammarSpec:
    """Disjoint glyph classes plus the optional special-role sets.

    final_chars are crust glyphs in their own set; with final_strict they are
    rejected anywhere but the last position.  core_max_len caps the core run
    length when set.  prefix_left_splits admits the looser three-way splits
    that move a word-initial prefix run (and at most one following glyph) to
    the left piece.  strip_ornaments lets coverage retry paragraph-initial
    words with their ornament glyph removed.
    """

    core_chars: frozenset[str]
    mantle_chars: frozenset[str]
    crust_chars: frozenset[str]
    prefix_chars: frozenset[str] = frozenset()
    final_chars: frozenset[str] = frozenset()
    ornament_chars: frozenset[str] = frozenset()
    core_max_len: int | None = None
    final_strict: bool = False
    prefix_left_splits: bool = True
    strip_ornaments: bool = True

    def __post_init__(self):
        names = ("core_chars", "mantle_chars", "crust_chars", "prefix_chars", "final_chars", "ornament_chars")
        sets = []
        for name in names:
            cleaned = _charset(getattr(self, name))
            object.__setattr__(self, name, cleaned)
            sets.append((name, cleaned))
        for i, (name_a, set_a) in enumerate(sets):
            for name_b, set_b in sets[i + 1:]:
                shared = set_a & set_b
                if shared:
                    raise ValueError(f"{name_a} and {name_b} share glyphs: {sorted(shared)}")
        if self.core_max_len is not None and self.core_max_len < 1:
            raise ValueError("core_max_len must be at least 1 when set")

    def layer_of(self, glyph: str) -> str | None:
        """CORE, MANTLE or CRUST for layer glyphs, 'prefix' for prefix glyphs."""
        if glyph in self.core_chars:
            return CORE
        if glyph in self.mantle_chars:
            return MANTLE
        if glyph in self.crust_chars or glyph in self.final_chars:
            return CRUST
        if glyph in self.prefix_chars:
            return "prefix"
        return None


@dataclass(frozen=True)
class WordParse:
    """Result of parsing one word; slots concatenate back to the word when valid."""

    word: str
    slots: tuple[str, str, str, str, str] = ("", "", "", "", "")
    valid: bool = False
    failure_position: int | None = None

    @property
    def leading_crust(self) -> str:
        return self.slots[0]

    @property
    def leading_mantle(self) -> str:
        return self.slots[1]

    @property
    def core(self) -> str:
        return self.slots[2]

    @property
    def trailing_mantle(self) -> str:
        return self.slots[3]

    @property
    def trailing_crust(self) -> str:
        return self.slots[4]

    def runs(self) -> list[tuple[str, str]]:
        """Non-empty (text, layer) runs in word order."""
        return [(text, _SLOTS[i]) for i, text in enumerate(self.slots) if text]


def _failure(word: str, position: int) -> WordParse:
    return WordParse(word, valid=False, failure_position=position)


def parse_word(word: str, spec: GrammarSpec) -> WordParse:
    """Greedy outermost-first parse of a non-empty word.

    Failure is a value: valid=False plus the first offending glyph position.
    """
    if not word:
        raise ValueError("cannot parse an empty word")

    prefix_end = 0
    while prefix_end < len(word) and word[prefix_end] in spec.prefix_chars:
        prefix_end += 1
    if prefix_end == len(word):
        return _failure(word, 0)

    labels: list[str] = []
    for pos in range(prefix_end, len(word)):
        glyph = word[pos]
        layer = spec.layer_of(glyph)
        if layer is None or layer == "prefix":
            return _failure(word, pos)
        if spec.final_strict and glyph in spec.final_chars and pos != len(word) - 1:
            return _failure(word, pos)
        labels.append(layer)

    # Maximal same-layer runs over the body of the word.
    runs: list[tuple[str, int, int]] = []
    start = 0
    for i in range(1, len(labels) + 1):
        if i == len(labels) or labels[i] != labels[start]:
            runs.append((labels[start], prefix_end + start, prefix_end + i))
            start = i

    slots = ["", "", "", "", ""]
    last_slot = -1
    for run_no, (layer, begin, end) in enumerate(runs):
        placed = False
        for slot in _SLOT_CHOICES[layer]:
            if slot > last_slot:
                last_slot = slot
                placed = True
                break
        if not placed:
            return _failure(word, begin)
        text = word[begin:end]
        if run_no == 0:
            text = word[:prefix_end] + text
        if layer == CORE and spec.core_max_len is not None and end - begin > spec.core_max_len:
            return _failure(word, begin + spec.core_max_len)
        slots[last_slot] = text

    return WordParse(word, tuple(slots), valid=True)


def three_part_splits(word: str, spec: GrammarSpec) -> list[tuple[str, str, str]]:
    """All three-way splits consistent with the wheel layout.

    The left piece takes the leading crust and any prefix of the leading
    mantle, the right piece takes any suffix of the trailing mantle plus the
    trailing crust, and the centre keeps the core.  With prefix_left_splits, a
    word-initial prefix run (or that run plus one glyph) may also move to the
    left piece.  Order is deterministic: left cut ascending, then right cut
    ascending, with prefix variants appended.
    """
    parse = parse_word(word, spec)
    if not parse.valid:
        raise ValueError(f"word {word!r} does not parse against the grammar")

    c1, m1, core, m2, _ = parse.slots
    left_cuts = [len(c1) + j for j in range(len(m1) + 1)]
    right_base = len(c1) + len(m1) + len(core)
    right_cuts = [right_base + j for j in range(len(m2) + 1)]

    splits: list[tuple[str, str, str]] = []
    seen: set[tuple[str, str, str]] = set()

    def add(s1: int, s2: int) -> None:
        triple = (word[:s1], word[s1:s2], word[s2:])
        if triple not in seen:
            seen.add(triple)
            splits.append(triple)

    for s1 in left_cuts:
        for s2 in right_cuts:
            add(s1, s2)

    if spec.prefix_left_splits and word[0] in spec.prefix_chars:
        run = 1
        while run < len(word) and word[run] in spec.prefix_chars:
            run += 1
        variant_cuts = list(range(1, run + 1))
        if run + 1 <= len(word):
            variant_cuts.append(run + 1)
        for s1 in variant_cuts:
            for s2 in right_cuts:
                if s2 >= s1:
                    add(s1, s2)

    return splits


@dataclass(frozen=True)
class ParseFailure:
    word: str
    position: int | None
    splits_into_valid_words: bool


@dataclass(frozen=True)
class CoverageReport:
    total_types: int
    parsed_types: int
    ornament_recovered: tuple[str, ...]
    failures: tuple[ParseFailure, ...]

    @property
    def parsed_fraction(self) -> float:
        return self.parsed_types / self.total_types if self.total_types else 0.0

    def failures_by_position(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {}
        for failure in self.failures:
            out.setdefault(failure.position, []).append(failure.word)
        return out


def _concatenation_of_valid(word: str, spec: GrammarSpec) -> bool:
    for cut in range(1, len(word)):
        if parse_word(word[:cut], spec).valid and parse_word(word[cut:], spec).valid:
            return True
    return False


def coverage(corpus, spec: GrammarSpec) -> CoverageReport:
    """Fraction of word types that parse, plus a catalog of the failures.

    Types that occur paragraph-initially get a second chance with their first
    glyph stripped when it is an ornament glyph and strip_ornaments is on.
    Failed words that look like a concatenation of two valid words are
    flagged in the catalog.
    """
    types = sorted(corpus.types())
    paragraph_initial = {
        position.token for position in corpus.iter_positions() if position.paragraph_initial
    }
    parsed = 0
    recovered: list[str] = []
    failures: list[ParseFailure] = []
    for word in types:
        parse = parse_word(word, spec)
        if parse.valid:
            parsed += 1
            continue
        if (
            spec.strip_ornaments
            and len(word) > 1
            and word[0] in spec.ornament_chars
            and word in paragraph_initial
            and parse_word(word[1:], spec).valid
        ):
            parsed += 1
            recovered.append(word)
            continue
        failures.append(
            ParseFailure(word, parse.failure_position, _concatenation_of_valid(word, spec))
        )
    return CoverageReport(len(types), parsed, tuple(recovered), tuple(failures))


# ---------------------------------------------------------------------------
# Grammar config format: "<section>: glyph glyph ..." lines with sections
# core, mantle, crust, prefix, final and (optionally) ornament; "#" comments.
# Repeated section lines merge.
# ---------------------------------------------------------------------------

_SECTIONS = ("core", "mantle", "crust", "prefix", "final", "ornament")


def parse_grammar_text(text: str, **toggles) -> GrammarSpec:
    collected: dict[str, set[str]] = {name: set() for name in _SECTIONS}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or name not in _SECTIONS:
            raise FormatError(f"line {lineno}: expected '<section>: glyphs' with section in {_SECTIONS}")
        for glyph in rest.split():
            if len(glyph) != 1:
                raise FormatError(f"line {lineno}: glyph {glyph!r} is not a single character")
            collected[name].add(glyph)
    return GrammarSpec(
        core_chars=frozenset(collected["core"]),
        mantle_chars=frozenset(collected["mantle"]),
        crust_chars=frozenset(collected["crust"]),
        prefix_chars=frozenset(collected["prefix"]),
        final_chars=frozenset(collected["final"]),
        ornament_chars=frozenset(collected["ornament"]),
        **toggles,
    )


def format_grammar(spec: GrammarSpec) -> str:
    parts = []
    for name, chars in (
        ("core", spec.core_chars),
        ("mantle", spec.mantle_chars),
        ("crust", spec.crust_chars),
        ("prefix", spec.prefix_chars),
        ("final", spec.final_chars),
        ("ornament", spec.ornament_chars),
    ):
        if chars or name in ("core", "mantle", "crust"):
            parts.append(f"{name}: {' '.join(sorted(chars))}".rstrip())
    return "\n".join(parts) + "\n"


def load_grammar_file(path, **toggles) -> GrammarSpec:
    with open(path, encoding="utf-8") as handle:
        return parse_grammar_text(handle.read(), **toggles)
