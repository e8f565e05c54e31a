"""Wheel-and-grille word generation: mechanisms, statistics, and synthesis.

The package models two families of mechanical word generators that have been
proposed for the Voynich manuscript text: a grille sliding over a table of
word fragments, and a set of concentric lettered wheels read one fragment per
wheel.  Alongside the generators it provides the analysis tools needed to
compare their output with a real transliterated corpus: word-length
distributions, a layered word grammar, positional glyph statistics, and
edit-distance networks.
"""

from .errors import (
    AmbiguousWordError,
    FormatError,
    NotInVocabularyError,
    OutOfBoundsError,
    WordmillError,
)
from .wheels import (
    EMPTY,
    PRESET_NAMES,
    Wheel,
    WheelSystem,
    digits_of,
    distinct_words,
    enumerate_words,
    fragment_parses,
    index_of,
    load_wheel_file,
    preset,
    roman_decode,
    roman_encode,
    save_wheel_file,
    spin,
    tuple_count,
    word_at,
)
from .grille import (
    FragmentTable,
    Grille,
    apply_grille,
    enumerate_grilles,
    flat_grille,
    grille_count,
    grille_to_shifts,
    load_table_file,
    save_table_file,
    shift_table,
    slide,
    table_entries_needed,
)
from .distributions import (
    DeviationReport,
    LengthDistribution,
    binomial_reference,
    convolve,
    deviation,
    group_wheels,
    percentage_hundredths,
    percentages,
    reference_systems,
    system_length_distribution,
    wheel_length_distribution,
)
from .grammar import (
    CoverageReport,
    GrammarSpec,
    ParseFailure,
    WordParse,
    coverage,
    load_grammar_file,
    parse_word,
    three_part_splits,
)
from .corpus import (
    Corpus,
    load_transliteration,
    load_word_list,
    parse_transliteration,
    positional_stats,
    save_word_list,
    subset_overlap,
    token_type_counts,
)
from .network import (
    EditGraph,
    build_edit_graph,
    is_distance_one,
    network_stats,
)
from .synthesis import (
    LATIN_24,
    alphabet_codec,
    decompose_vocabulary,
    default_splitter,
    grammar_splitter,
    synthesize_table,
    verify_covered,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousWordError",
    "Corpus",
    "CoverageReport",
    "DeviationReport",
    "EMPTY",
    "EditGraph",
    "FormatError",
    "FragmentTable",
    "GrammarSpec",
    "Grille",
    "LATIN_24",
    "LengthDistribution",
    "NotInVocabularyError",
    "OutOfBoundsError",
    "PRESET_NAMES",
    "ParseFailure",
    "Wheel",
    "WheelSystem",
    "WordParse",
    "WordmillError",
    "alphabet_codec",
    "apply_grille",
    "binomial_reference",
    "build_edit_graph",
    "convolve",
    "coverage",
    "decompose_vocabulary",
    "default_splitter",
    "deviation",
    "digits_of",
    "distinct_words",
    "enumerate_grilles",
    "enumerate_words",
    "flat_grille",
    "fragment_parses",
    "grammar_splitter",
    "grille_count",
    "grille_to_shifts",
    "group_wheels",
    "index_of",
    "is_distance_one",
    "load_grammar_file",
    "load_table_file",
    "load_transliteration",
    "load_wheel_file",
    "load_word_list",
    "network_stats",
    "parse_transliteration",
    "parse_word",
    "percentage_hundredths",
    "percentages",
    "positional_stats",
    "preset",
    "reference_systems",
    "roman_decode",
    "roman_encode",
    "save_table_file",
    "save_wheel_file",
    "save_word_list",
    "slide",
    "spin",
    "subset_overlap",
    "synthesize_table",
    "system_length_distribution",
    "table_entries_needed",
    "three_part_splits",
    "tuple_count",
    "verify_covered",
    "wheel_length_distribution",
    "word_at",
]
