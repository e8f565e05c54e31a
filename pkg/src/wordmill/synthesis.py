"""Building tables and wheels from a target vocabulary."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .errors import WordmillError
from .grammar import GrammarSpec, parse_word, three_part_splits
from .grille import FragmentTable, Grille
from .wheels import (
    EMPTY,
    WheelSystem,
    digits_of,
    fragment_parses,
    index_of,
    word_for_digits,
)

Splitter = Callable[[str, int], Sequence[str]]


def default_splitter(word: str, parts: int) -> tuple[str, ...]:
    """Near-even split by glyph count, longer parts first.

    Part lengths differ by at most one and never increase left to right:
    ("abcde", 3) -> ("ab", "cd", "e") and ("a", 3) -> ("a", "", "").
    """
    if parts < 1:
        raise ValueError("parts must be at least 1")
    base, extra = divmod(len(word), parts)
    sizes = [base + 1 if i < extra else base for i in range(parts)]
    out = []
    start = 0
    for size in sizes:
        out.append(word[start : start + size])
        start += size
    return tuple(out)


def grammar_splitter(spec: GrammarSpec, fallback: Splitter = default_splitter) -> Splitter:
    """Three-way splitter following the layered parse.

    Uses the first split from three_part_splits; words that do not parse fall
    back to the given splitter.  Only defined for exactly three parts.
    """

    def split(word: str, parts: int) -> tuple[str, ...]:
        if parts != 3:
            raise ValueError("the grammar layout defines exactly three parts")
        if word and parse_word(word, spec).valid:
            return three_part_splits(word, spec)[0]
        return tuple(fallback(word, parts))

    return split


def _split_checked(word: str, parts: int, splitter: Splitter) -> tuple[str, ...]:
    pieces = tuple(splitter(word, parts))
    if len(pieces) != parts:
        raise ValueError(
            f"splitter returned {len(pieces)} parts for {word!r}, expected {parts}"
        )
    if "".join(pieces) != word:
        raise ValueError(f"splitter pieces {pieces!r} do not concatenate to {word!r}")
    return pieces


def synthesize_table(
    vocab: Sequence[str],
    grille: Grille,
    splitter: Splitter = default_splitter,
) -> FragmentTable:
    """A single-group table that replays ``vocab`` in order under ``grille``.

    Word i is split into one part per column and part k is written to row
    i + hole_row[k] of column k; all other cells stay empty.  The table gets
    len(vocab) + grille.rows - 1 rows so sliding the grille stops exactly
    len(vocab) times.
    """
    if not grille.is_canonical:
        raise ValueError("grille must be canonical (topmost hole in row 0)")
    rows = len(vocab) + grille.rows - 1
    columns = [[EMPTY] * rows for _ in range(grille.cols)]
    for i, word in enumerate(vocab):
        pieces = _split_checked(word, grille.cols, splitter)
        for k, piece in enumerate(pieces):
            columns[k][i + grille.hole_row[k]] = piece
    return FragmentTable((tuple(tuple(col) for col in columns),))


@dataclass(frozen=True)
class DecompositionReport:
    covered: frozenset[str]
    uncovered: frozenset[str]
    overgenerated: frozenset[str]

    @property
    def coverage(self) -> float:
        total = len(self.covered) + len(self.uncovered)
        return len(self.covered) / total if total else 0.0

    @property
    def overgeneration_count(self) -> int:
        return len(self.overgenerated)


def decompose_vocabulary(
    types: Iterable[str],
    wheel_count: int,
    budget: int | Sequence[int],
    splitter: Splitter = default_splitter,
) -> tuple[WheelSystem, DecompositionReport]:
    """Greedy frequency-ranked wheel construction from a type inventory.

    Every type is split into wheel_count parts; per wheel position, fragments
    are ranked by how many types use them (ties broken lexicographically) and
    the top ``budget`` survive.  The empty fragment, once used at a position,
    always survives pruning.  This is a greedy heuristic, not an exact cover.
    """
    type_list = sorted(set(types))
    if not type_list:
        raise ValueError("need at least one word type")
    if wheel_count < 1:
        raise ValueError("wheel_count must be at least 1")
    budgets = (budget,) * wheel_count if isinstance(budget, int) else tuple(budget)
    if len(budgets) != wheel_count:
        raise ValueError(f"expected {wheel_count} budgets, got {len(budgets)}")
    for b in budgets:
        if b < 1:
            raise ValueError("budgets must be at least 1")

    usage: list[Counter[str]] = [Counter() for _ in range(wheel_count)]
    split_of: dict[str, tuple[str, ...]] = {}
    for word in type_list:
        pieces = _split_checked(word, wheel_count, splitter)
        split_of[word] = pieces
        for k, piece in enumerate(pieces):
            usage[k][piece] += 1

    kept: list[tuple[str, ...]] = []
    for k in range(wheel_count):
        ranked = sorted(usage[k].items(), key=lambda item: (-item[1], item[0]))
        chosen = [frag for frag, _ in ranked[: budgets[k]]]
        if EMPTY in usage[k] and EMPTY not in chosen:
            chosen = chosen[: budgets[k] - 1] + [EMPTY]
        kept.append(tuple(chosen))

    system = WheelSystem.from_fragments(kept)
    kept_sets = [set(frags) for frags in kept]
    covered = frozenset(
        word
        for word, pieces in split_of.items()
        if all(piece in kept_sets[k] for k, piece in enumerate(pieces))
    )
    uncovered = frozenset(type_list) - covered
    generated = {"".join(combo) for combo in itertools.product(*kept)}
    overgenerated = frozenset(generated - set(type_list))
    return system, DecompositionReport(covered, uncovered, overgenerated)


def verify_covered(system: WheelSystem, report: DecompositionReport) -> bool:
    """True when every covered type is generated by the system.

    A type counts as generated when at least one fragment parse exists; an
    ambiguous parse is still proof of generation.
    """
    return all(bool(fragment_parses(system, word)) for word in report.covered)


@dataclass(frozen=True)
class AlphabetCodec:
    """Trigram-style codec: alphabet position i on wheel k selects fragment i.

    Plaintext is chopped into groups of len(system.wheels) symbols, padded
    with the declared pad symbol; each group maps to one generated word.
    Decoding strips trailing pads, so the round trip is the identity exactly
    for texts that do not end with the pad symbol, and only when the system is
    collision-free.
    """

    system: WheelSystem
    alphabet: str
    pad: str

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        if len(self.alphabet) != 24:
            raise ValueError("alphabet must hold exactly 24 symbols")
        for wheel in self.system.wheels:
            if wheel.size != 24:
                raise ValueError("every wheel must hold exactly 24 fragments")
        if len(self.pad) != 1 or self.pad not in self.alphabet:
            raise ValueError("pad must be a single alphabet symbol")

    @property
    def group_size(self) -> int:
        return len(self.system.wheels)

    def encode(self, text: str) -> list[str]:
        for symbol in text:
            if symbol not in self.alphabet:
                raise WordmillError(f"symbol {symbol!r} is not in the alphabet")
        size = self.group_size
        if len(text) % size:
            text += self.pad * (size - len(text) % size)
        words = []
        for start in range(0, len(text), size):
            digits = [self.alphabet.index(symbol) for symbol in text[start : start + size]]
            words.append(word_for_digits(self.system, digits))
        return words

    def decode(self, words: Iterable[str]) -> str:
        symbols: list[str] = []
        for word in words:
            index = index_of(self.system, word)
            symbols.extend(self.alphabet[d] for d in digits_of(self.system, index))
        return "".join(symbols).rstrip(self.pad)


def alphabet_codec(system: WheelSystem, alphabet: str, pad: str | None = None) -> AlphabetCodec:
    """Build a codec; the pad defaults to the last alphabet symbol."""
    return AlphabetCodec(system, alphabet, pad if pad is not None else alphabet[-1])


# Latin letters with i/j and u/v identified, the usual 24-symbol inventory.
LATIN_24 = "abcdefghiklmnopqrstvwxyz"
