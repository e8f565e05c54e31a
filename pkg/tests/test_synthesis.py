"""Table and wheel synthesis from a target vocabulary, plus the codec."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wordmill import (
    LATIN_24,
    GrammarSpec,
    Grille,
    WordmillError,
    alphabet_codec,
    decompose_vocabulary,
    default_splitter,
    enumerate_grilles,
    flat_grille,
    grammar_splitter,
    slide,
    synthesize_table,
    verify_covered,
)

TOY = GrammarSpec(
    core_chars=frozenset("dt"),
    mantle_chars=frozenset("ce"),
    crust_chars=frozenset("oy"),
)


def shortlex(alphabet: str, count: int, min_len: int = 0) -> tuple[str, ...]:
    out: list[str] = []
    length = min_len
    while len(out) < count:
        out.extend("".join(p) for p in itertools.product(alphabet, repeat=length))
        length += 1
    return tuple(out[:count])


def disjoint_system():
    """Three 24-fragment wheels over disjoint alphabets; collision-free."""
    from wordmill import WheelSystem

    return WheelSystem.from_fragments(
        [shortlex("qod", 24), shortlex("elr", 24, min_len=1), shortlex("iny", 24)]
    )


class TestDefaultSplitter:
    def test_examples(self):
        assert default_splitter("abcde", 3) == ("ab", "cd", "e")
        assert default_splitter("a", 3) == ("a", "", "")
        assert default_splitter("", 2) == ("", "")
        assert default_splitter("abcd", 2) == ("ab", "cd")

    def test_rejects_bad_count(self):
        with pytest.raises(ValueError):
            default_splitter("ab", 0)

    @given(st.text(alphabet="abc", max_size=12), st.integers(1, 5))
    def test_concatenation_and_balance(self, word, parts):
        pieces = default_splitter(word, parts)
        assert len(pieces) == parts
        assert "".join(pieces) == word
        sizes = [len(p) for p in pieces]
        assert sizes == sorted(sizes, reverse=True)
        assert max(sizes) - min(sizes) <= 1


class TestGrammarSplitter:
    def test_uses_first_split(self):
        split = grammar_splitter(TOY)
        assert split("ocdcy", 3) == ("o", "cd", "cy")
        assert split("d", 3) == ("", "d", "")

    def test_falls_back_for_unparseable(self):
        split = grammar_splitter(TOY)
        assert split("zz", 3) == default_splitter("zz", 3)
        assert split("", 3) == ("", "", "")

    def test_custom_fallback(self):
        split = grammar_splitter(TOY, fallback=lambda w, p: (w, "", "")[:p])
        assert split("zz", 3) == ("zz", "", "")

    def test_only_three_parts(self):
        split = grammar_splitter(TOY)
        with pytest.raises(ValueError):
            split("ody", 2)


class TestSynthesizeTable:
    def test_flat_grille_replays_vocab(self):
        vocab = ["daiin", "ol", "qokeey"]
        table = synthesize_table(vocab, flat_grille(1, 3))
        assert table.rows == 3
        assert slide(table, flat_grille(1, 3)) == vocab

    def test_offset_grille_round_trip(self):
        vocab = ["daiin", "ol", "", "shey"]
        grille = Grille(2, (0, 0, 1))
        table = synthesize_table(vocab, grille)
        assert table.rows == len(vocab) + 1
        assert slide(table, grille) == vocab

    def test_cell_layout(self):
        grille = Grille(2, (0, 1, 0))
        table = synthesize_table(["abc"], grille)
        assert table.cell(0, 0, 0) == "a"
        assert table.cell(0, 1, 1) == "b"
        assert table.cell(0, 2, 0) == "c"
        assert table.cell(0, 1, 0) == ""

    def test_requires_canonical_grille(self):
        with pytest.raises(ValueError):
            synthesize_table(["ab"], Grille(2, (1, 1, 1)))

    def test_splitter_output_is_checked(self):
        with pytest.raises(ValueError):
            synthesize_table(["ab"], flat_grille(1, 3), splitter=lambda w, p: (w,))
        with pytest.raises(ValueError):
            synthesize_table(["ab"], flat_grille(1, 3), splitter=lambda w, p: ("x",) * p)

    def test_grammar_splitter_table(self):
        grille = Grille(2, (0, 0, 1))
        vocab = ["ocdcy", "ody"]
        table = synthesize_table(vocab, grille, splitter=grammar_splitter(TOY))
        assert slide(table, grille) == vocab
        assert table.cell(0, 0, 0) == "o"
        assert table.cell(0, 1, 0) == "cd"
        assert table.cell(0, 2, 1) == "cy"

    @given(
        st.lists(st.text(alphabet="qod", max_size=5), min_size=1, max_size=8),
        st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, vocab, data):
        rows = data.draw(st.integers(1, 3))
        grille = data.draw(st.sampled_from(enumerate_grilles(rows, 3)))
        assert slide(synthesize_table(vocab, grille), grille) == vocab


class TestDecomposeVocabulary:
    def test_single_type(self):
        system, report = decompose_vocabulary(["daiin"], 3, 24)
        assert [w.fragments for w in system.wheels] == [("da",), ("ii",), ("n",)]
        assert report.coverage == 1.0
        assert report.uncovered == frozenset()
        assert report.overgenerated == frozenset()

    def test_budget_pruning_keeps_empty(self):
        # Hand-worked: wheel 1 sees b three times, c twice, the empty fragment
        # once; with budget 2 the empty fragment displaces c.
        types = ["ab", "cb", "db", "ac", "dc", "a"]
        system, report = decompose_vocabulary(types, 2, (3, 2))
        assert set(system.wheels[0].fragments) == {"a", "c", "d"}
        assert set(system.wheels[1].fragments) == {"b", ""}
        assert report.covered == frozenset({"ab", "cb", "db", "a"})
        assert report.uncovered == frozenset({"ac", "dc"})
        assert report.overgenerated == frozenset({"d", "c"})
        assert report.coverage == pytest.approx(4 / 6)
        assert verify_covered(system, report)

    def test_duplicate_types_collapse(self):
        system, report = decompose_vocabulary(["ab", "ab"], 2, 24)
        assert report.covered == frozenset({"ab"})

    def test_grammar_splitter_recovers_wheels(self):
        spec = GrammarSpec(
            core_chars=frozenset("elr"),
            mantle_chars=frozenset(),
            crust_chars=frozenset("qodiny"),
        )
        left = ("", "q", "o")
        centre = ("e", "l", "r", "el")
        right = ("", "i", "n")
        types = ["".join(t) for t in itertools.product(left, centre, right)]
        assert len(set(types)) == len(types)

        system, report = decompose_vocabulary(
            types, 3, (3, 4, 3), splitter=grammar_splitter(spec)
        )
        assert set(system.wheels[0].fragments) == set(left)
        assert set(system.wheels[1].fragments) == set(centre)
        assert set(system.wheels[2].fragments) == set(right)
        assert report.coverage == 1.0
        assert report.overgenerated == frozenset()
        assert verify_covered(system, report)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            decompose_vocabulary([], 3, 24)
        with pytest.raises(ValueError):
            decompose_vocabulary(["ab"], 0, 24)
        with pytest.raises(ValueError):
            decompose_vocabulary(["ab"], 2, (24,))
        with pytest.raises(ValueError):
            decompose_vocabulary(["ab"], 2, 0)


class TestAlphabetCodec:
    def test_round_trip(self):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        words = codec.encode("abc")
        assert len(words) == 1
        assert codec.decode(words) == "abc"

    def test_padding_stripped(self):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        words = codec.encode("ab")
        assert len(words) == 1
        assert codec.decode(words) == "ab"

    def test_longer_text(self):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        text = "caesarsgallicwars".replace("u", "v")
        assert codec.decode(codec.encode(text)) == text

    def test_pad_defaults_to_last_symbol(self):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        assert codec.pad == "z"
        explicit = alphabet_codec(disjoint_system(), LATIN_24, pad="x")
        assert explicit.pad == "x"

    def test_rejects_foreign_symbols(self):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        with pytest.raises(WordmillError):
            codec.encode("juliet")

    def test_validation(self):
        from wordmill import Wheel, WheelSystem

        with pytest.raises(ValueError):
            alphabet_codec(disjoint_system(), "abc")
        with pytest.raises(ValueError):
            alphabet_codec(disjoint_system(), "a" * 24)
        with pytest.raises(ValueError):
            alphabet_codec(disjoint_system(), LATIN_24, pad="j")
        small = WheelSystem((Wheel(("a", "b")),))
        with pytest.raises(ValueError):
            alphabet_codec(small, LATIN_24)

    def test_latin_24_inventory(self):
        assert LATIN_24 == "abcdefghiklmnopqrstvwxyz"
        assert len(LATIN_24) == 24
        assert "j" not in LATIN_24 and "u" not in LATIN_24

    @given(st.text(alphabet="abz", max_size=9).filter(lambda t: not t.endswith("z")))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_property(self, text):
        codec = alphabet_codec(disjoint_system(), LATIN_24)
        assert codec.decode(codec.encode(text)) == text
