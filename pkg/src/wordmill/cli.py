"""Command line interface.

Exit codes: 0 on success, 1 on domain errors (bad data, impossible requests),
2 on usage errors.  All data output is deterministic for fixed inputs; chart
files are optional side outputs and never replace the delimited report.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys

from . import corpus as corpus_mod
from . import distributions as dist_mod
from . import grammar as grammar_mod
from . import grille as grille_mod
from . import network as network_mod
from . import synthesis as synth_mod
from . import wheels as wheels_mod
from .errors import WordmillError


class _Parser(argparse.ArgumentParser):
    """ArgumentParser with one-line usage errors."""

    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Small output helpers
# ---------------------------------------------------------------------------


def _write_out(text: str, args) -> None:
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


_NUMERIC = set("0123456789.-")


def _render_table(header: list[str], rows: list[list[str]]) -> str:
    table = [header] + rows
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    numeric = [
        all(set(row[i]) <= _NUMERIC and row[i] for row in rows) if rows else False
        for i in range(len(header))
    ]
    lines = []
    for r, row in enumerate(table):
        cells = []
        for i, cell in enumerate(row):
            if numeric[i] and r > 0:
                cells.append(cell.rjust(widths[i]))
            else:
                cells.append(cell.ljust(widths[i]))
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(header: list[str], rows: list[list[str]], args) -> None:
    if getattr(args, "format", "text") == "csv":
        _write_out(_render_csv(header, rows), args)
    else:
        _write_out(_render_table(header, rows), args)


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("text", "csv"), default="text")
    parser.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def _show_word(word: str, args) -> str:
    """Empty words render as '-' in text mode, as an empty cell in csv."""
    if word == "" and getattr(args, "format", "text") == "text":
        return "-"
    return word


def _add_system_source(parser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", choices=wheels_mod.PRESET_NAMES)
    source.add_argument("--file", metavar="PATH", help="wheel file")


def _load_system(args) -> wheels_mod.WheelSystem:
    if args.preset:
        return wheels_mod.preset(args.preset)
    return wheels_mod.load_wheel_file(args.file)


def _parse_holes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise WordmillError(f"bad hole list {text!r}; expected comma-separated integers") from None


def _grille_from_args(args) -> grille_mod.Grille:
    holes = _parse_holes(args.grille)
    rows = args.grille_rows if args.grille_rows else max(holes) + 1
    return grille_mod.Grille(rows, holes)


def _percent_str(hundredths: int) -> str:
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def _grammar_from_args(args) -> grammar_mod.GrammarSpec:
    toggles = {}
    if getattr(args, "strict_final", False):
        toggles["final_strict"] = True
    if getattr(args, "core_max", None) is not None:
        toggles["core_max_len"] = args.core_max
    if getattr(args, "no_prefix_splits", False):
        toggles["prefix_left_splits"] = False
    return grammar_mod.load_grammar_file(args.grammar, **toggles)


def _add_grammar_options(parser) -> None:
    parser.add_argument("--grammar", metavar="PATH", required=True, help="grammar config file")
    parser.add_argument("--strict-final", action="store_true", dest="strict_final")
    parser.add_argument("--core-max", type=int, dest="core_max")
    parser.add_argument("--no-prefix-splits", action="store_true", dest="no_prefix_splits")


def _load_corpus(args) -> corpus_mod.Corpus:
    alphabet = getattr(args, "alphabet", None)
    if alphabet == "eva":
        alphabet = corpus_mod.DEFAULT_EVA_ALPHABET
    loaded = corpus_mod.load_transliteration(
        args.corpus, uncertain_spaces=args.uncertain, alphabet=alphabet
    )
    for warning in loaded.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return loaded


def _add_corpus_options(parser) -> None:
    parser.add_argument("corpus", metavar="FILE", help="transliteration file")
    parser.add_argument("--uncertain", choices=("split", "join"), default="split",
                        help="treat ',' as a word break (split) or remove it (join)")
    parser.add_argument("--alphabet", metavar="GLYPHS",
                        help="warn about glyphs outside this set ('eva' for the builtin default)")


# ---------------------------------------------------------------------------
# wheels
# ---------------------------------------------------------------------------


def _cmd_wheels_enumerate(args) -> int:
    system = _load_system(args)
    rows = []
    for index, word in wheels_mod.enumerate_words(system):
        if args.limit is not None and index >= args.limit:
            break
        rows.append([str(index), _show_word(word, args)])
    _emit(["index", "word"], rows, args)
    return 0


def _cmd_wheels_word_at(args) -> int:
    system = _load_system(args)
    word = wheels_mod.word_at(system, args.index)
    _write_out(("-" if word == "" else word) + "\n", args)
    return 0


def _cmd_wheels_index_of(args) -> int:
    system = _load_system(args)
    word = "" if args.word == "-" else args.word
    _write_out(f"{wheels_mod.index_of(system, word)}\n", args)
    return 0


def _cmd_wheels_preset(args) -> int:
    _write_out(wheels_mod.format_wheel_system(wheels_mod.preset(args.name)), args)
    return 0


def _cmd_wheels_distinct(args) -> int:
    system = _load_system(args)
    report = wheels_mod.distinct_words(system)
    if args.collisions:
        rows = [
            [_show_word(word, args), str(len(parses))]
            for word, parses in sorted(report.collisions.items())
        ]
        _emit(["word", "tuples"], rows, args)
        return 0
    text = (
        f"tuples: {wheels_mod.tuple_count(system)}\n"
        f"distinct words: {report.distinct_count}\n"
        f"colliding words: {report.collision_count}\n"
    )
    _write_out(text, args)
    return 0


# ---------------------------------------------------------------------------
# grille
# ---------------------------------------------------------------------------


def _cmd_grille_count(args) -> int:
    _write_out(f"{grille_mod.grille_count(args.rows, args.cols)}\n", args)
    return 0


def _cmd_grille_enumerate(args) -> int:
    rows = [
        [",".join(str(h) for h in g.hole_row)]
        for g in grille_mod.enumerate_grilles(args.rows, args.cols)
    ]
    _emit(["hole_rows"], rows, args)
    return 0


def _cmd_grille_slide(args) -> int:
    table = grille_mod.load_table_file(args.table)
    grille = _grille_from_args(args)
    words = grille_mod.slide(table, grille)
    if args.format == "csv":
        stops = table.rows - grille.rows + 1
        rows = [
            [str(i // stops), str(i % stops), word]
            for i, word in enumerate(words)
        ]
        _emit(["group", "stop", "word"], rows, args)
    else:
        _write_out("".join(("-" if w == "" else w) + "\n" for w in words), args)
    return 0


def _cmd_grille_equiv_check(args) -> int:
    rng = random.Random(args.seed)
    alphabet = "adelo"
    grilles = grille_mod.enumerate_grilles(args.rows, args.cols)
    checked = 0
    for _ in range(args.tables):
        rows = rng.randint(args.rows, args.rows + 5)
        groups = rng.randint(1, 2)
        table = grille_mod.FragmentTable(
            tuple(
                tuple(
                    tuple(
                        "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 3)))
                        for _ in range(rows)
                    )
                    for _ in range(args.cols)
                )
                for _ in range(groups)
            )
        )
        flat = grille_mod.flat_grille(args.rows, args.cols)
        for grille in grilles:
            shifted = grille_mod.shift_table(table, grille_mod.grille_to_shifts(grille))
            for group in range(table.group_count):
                for top in range(table.rows - args.rows + 1):
                    left = grille_mod.apply_grille(shifted, grille, group, top)
                    right = grille_mod.apply_grille(table, flat, group, top)
                    if left != right:
                        print(
                            f"mismatch: grille {grille.hole_row} group {group} stop {top}: "
                            f"{left!r} != {right!r}",
                            file=sys.stderr,
                        )
                        return 1
                    checked += 1
    _write_out(
        f"checked {args.tables} tables x {len(grilles)} grilles: "
        f"{checked} positions agree with the flat grille\n",
        args,
    )
    return 0


# ---------------------------------------------------------------------------
# dist
# ---------------------------------------------------------------------------


def _dist_rows(distribution) -> list[list[str]]:
    hundredths = dist_mod.percentage_hundredths(distribution)
    return [
        [str(length), str(distribution.count(length)), _percent_str(hundredths[length])]
        for length in distribution.lengths()
    ]


def _dist_source(spec: str):
    kind, _, detail = spec.partition(":")
    if kind == "preset" and detail:
        return spec, dist_mod.system_length_distribution(wheels_mod.preset(detail))
    if kind == "wheels" and detail:
        return spec, dist_mod.system_length_distribution(wheels_mod.load_wheel_file(detail))
    if kind == "csv" and detail:
        return spec, dist_mod.load_distribution_csv(detail)
    if kind == "binomial" and detail:
        parts = [int(p) for p in detail.split(",")]
        if len(parts) == 1:
            return spec, dist_mod.binomial_reference(parts[0])
        if len(parts) == 2:
            return spec, dist_mod.binomial_reference(parts[0], parts[1])
        if len(parts) == 3:
            return spec, dist_mod.binomial_reference(parts[0], parts[1], parts[2])
    raise WordmillError(
        f"bad distribution source {spec!r}; expected preset:NAME, wheels:PATH, "
        f"csv:PATH or binomial:TRIALS[,SHIFT[,TOTAL]]"
    )


def _cmd_dist_system(args) -> int:
    system = _load_system(args)
    distribution = dist_mod.system_length_distribution(system, args.mode)
    _emit(["length", "count", "percent"], _dist_rows(distribution), args)
    if args.chart:
        from . import charts

        label = args.preset or args.file
        charts.save_length_chart([(label, distribution)], args.chart)
    return 0


def _cmd_dist_convolve(args) -> int:
    result = dist_mod.load_distribution_csv(args.files[0])
    for path in args.files[1:]:
        result = dist_mod.convolve(result, dist_mod.load_distribution_csv(path))
    _emit(["length", "count", "percent"], _dist_rows(result), args)
    return 0


def _cmd_dist_compare(args) -> int:
    label_a, dist_a = _dist_source(args.observed)
    label_b, dist_b = _dist_source(args.reference)
    report = dist_mod.deviation(dist_a, dist_b)
    pct_a = dict(dist_mod.percentages(dist_a))
    pct_b = dict(dist_mod.percentages(dist_b))
    rows = [
        [str(length), f"{pct_a.get(length, 0.0):.2f}", f"{pct_b.get(length, 0.0):.2f}"]
        for length in sorted(set(dist_a.counts) | set(dist_b.counts))
    ]
    if args.format == "csv":
        _emit(["length", "observed_pct", "reference_pct"], rows, args)
        return 0
    body = _render_table(["length", "observed%", "reference%"], rows)
    summary = (
        f"observed: {label_a}\nreference: {label_b}\n{body}"
        f"max difference: {report.max_percentage_point_diff:.2f} percentage points "
        f"at length {report.at_length}\n"
        f"total variation distance: {report.total_variation:.4f}\n"
    )
    _write_out(summary, args)
    if args.chart:
        from . import charts

        charts.save_length_chart([(label_a, dist_a), (label_b, dist_b)], args.chart)
    return 0


def _cmd_dist_reference(args) -> int:
    systems = dist_mod.reference_systems()
    labels = ["binomial", "alternative_1", "alternative_2"]
    dists = {label: dist_mod.system_length_distribution(systems[label]) for label in labels}
    hundredths = {label: dist_mod.percentage_hundredths(dists[label]) for label in labels}
    lengths = sorted({length for d in dists.values() for length in d.lengths()})
    header = ["length"]
    for label in labels:
        header += [label, f"{label}_pct"]
    rows = []
    for length in lengths:
        row = [str(length)]
        for label in labels:
            row.append(str(dists[label].count(length)))
            row.append(_percent_str(hundredths[label].get(length, 0)))
        rows.append(row)
    total_row = ["total"]
    for label in labels:
        total_row += [str(dists[label].total), "100.00"]
    rows.append(total_row)
    _emit(header, rows, args)
    if args.chart:
        from . import charts

        charts.save_length_chart([(label, dists[label]) for label in labels], args.chart)
    return 0


# ---------------------------------------------------------------------------
# grammar
# ---------------------------------------------------------------------------


def _cmd_grammar_parse(args) -> int:
    spec = _grammar_from_args(args)
    word = args.word
    if args.splits:
        triples = grammar_mod.three_part_splits(word, spec)
        rows = [[p or "-" for p in triple] for triple in triples]
        if args.format == "csv":
            rows = [list(triple) for triple in triples]
        _emit(["left", "centre", "right"], rows, args)
        return 0
    parse = grammar_mod.parse_word(word, spec)
    if args.format == "csv":
        rows = [[text, layer] for text, layer in parse.runs()]
        _emit(["run", "layer"], rows, args)
        return 0
    lines = [f"word: {word}", f"valid: {'yes' if parse.valid else 'no'}"]
    if parse.valid:
        lines.append("layers: " + " ".join(f"{layer}:{text}" for text, layer in parse.runs()))
    else:
        glyph = word[parse.failure_position]
        lines.append(f"failure: position {parse.failure_position} (glyph {glyph!r})")
    _write_out("\n".join(lines) + "\n", args)
    return 0


def _cmd_grammar_coverage(args) -> int:
    spec = _grammar_from_args(args)
    loaded = _load_corpus(args)
    report = grammar_mod.coverage(loaded, spec)
    if args.format == "csv":
        rows = [
            [f.word, str(f.position), "yes" if f.splits_into_valid_words else "no"]
            for f in report.failures
        ]
        _emit(["word", "failure_position", "two_valid_words"], rows, args)
        return 0
    lines = [
        f"word types: {report.total_types}",
        f"parsed: {report.parsed_types}",
        f"fraction: {report.parsed_fraction:.4f}",
        f"recovered by ornament stripping: {len(report.ornament_recovered)}",
        f"failures: {len(report.failures)}",
    ]
    by_position = report.failures_by_position()
    for position in sorted(by_position):
        shown = ", ".join(by_position[position][: args.examples])
        lines.append(f"  at position {position}: {shown}")
    concat_like = [f.word for f in report.failures if f.splits_into_valid_words]
    if concat_like:
        lines.append("  look like two valid words: " + ", ".join(concat_like[: args.examples]))
    _write_out("\n".join(lines) + "\n", args)
    return 0


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


def _cmd_corpus_stats(args) -> int:
    loaded = _load_corpus(args)
    tokens, types = corpus_mod.token_type_counts(loaded)
    pages = len(loaded.pages)
    paragraphs = sum(len(p.paragraphs) for p in loaded.pages)
    lines_total = sum(len(par.lines) for p in loaded.pages for par in p.paragraphs)
    text = (
        f"pages: {pages}\nparagraphs: {paragraphs}\nlines: {lines_total}\n"
        f"tokens: {tokens}\nword types: {types}\n"
    )
    _write_out(text, args)
    if args.types_out:
        corpus_mod.save_word_list(sorted(loaded.types()), args.types_out)
    return 0


def _cmd_corpus_positions(args) -> int:
    loaded = _load_corpus(args)
    glyphs = args.glyphs.replace(",", "")
    report = corpus_mod.positional_stats(loaded, glyphs)
    header = [
        "glyph", "total", "paragraph_first", "top_line", "line_final", "elsewhere",
        "paragraph_first_frac", "top_line_frac", "line_final_frac", "elsewhere_frac",
    ]
    rows = []
    for glyph in glyphs:
        stats = report.glyph_stats[glyph]
        fracs = stats.fractions()
        rows.append(
            [
                glyph,
                str(stats.total),
                str(stats.paragraph_initial),
                str(stats.top_line),
                str(stats.line_final),
                str(stats.elsewhere),
                f"{fracs['paragraph_initial']:.4f}",
                f"{fracs['top_line']:.4f}",
                f"{fracs['line_final']:.4f}",
                f"{fracs['elsewhere']:.4f}",
            ]
        )
    if args.format == "text":
        _write_out(f"note: {report.note}\n" + _render_table(header, rows), args)
    else:
        _emit(header, rows, args)
    return 0


def _cmd_corpus_overlap(args) -> int:
    loaded = _load_corpus(args)
    report = corpus_mod.subset_overlap(loaded, args.tag_a, args.tag_b, key=args.tag_key)
    text = (
        f"types with {args.tag_key}={report.tag_a}: {report.types_a}\n"
        f"types with {args.tag_key}={report.tag_b}: {report.types_b}\n"
        f"shared types: {report.shared}\n"
        f"share of {report.tag_a}: {report.share_of_a:.4f}\n"
        f"share of {report.tag_b}: {report.share_of_b:.4f}\n"
        f"only in {report.tag_b}: {report.b_only}\n"
    )
    _write_out(text, args)
    return 0


# ---------------------------------------------------------------------------
# network
# ---------------------------------------------------------------------------


def _cmd_network_stats(args) -> int:
    words = corpus_mod.load_word_list(args.words)
    graph = network_mod.build_edit_graph(words, args.max_distance)
    stats = network_mod.network_stats(graph)
    if args.format == "csv":
        rows = [[str(d), str(c)] for d, c in stats.degree_histogram.items()]
        _emit(["degree", "count"], rows, args)
    else:
        lines = [
            f"word types: {stats.node_count}",
            f"edges: {stats.edge_count}",
            f"types with a neighbor: {stats.connected_fraction:.4f}",
            f"components: {stats.component_count}",
            f"largest component: {stats.largest_component_fraction:.4f}",
            "degree histogram:",
        ]
        for degree, count in stats.degree_histogram.items():
            lines.append(f"  {degree}: {count}")
        _write_out("\n".join(lines) + "\n", args)
    if args.chart:
        from . import charts

        charts.save_degree_chart(stats.degree_histogram, args.chart)
    return 0


def _cmd_network_edges(args) -> int:
    words = corpus_mod.load_word_list(args.words)
    graph = network_mod.build_edit_graph(words, args.max_distance)
    _write_out(network_mod.format_edge_list(graph), args)
    return 0


# ---------------------------------------------------------------------------
# synthesize
# ---------------------------------------------------------------------------


def _splitter_from_args(args):
    if args.splitter == "grammar":
        if not getattr(args, "grammar", None):
            raise WordmillError("--splitter grammar requires --grammar")
        return synth_mod.grammar_splitter(grammar_mod.load_grammar_file(args.grammar))
    return synth_mod.default_splitter


def _cmd_synthesize_table(args) -> int:
    vocab = corpus_mod.load_word_list(args.words)
    grille = _grille_from_args(args)
    table = synth_mod.synthesize_table(vocab, grille, _splitter_from_args(args))
    _write_out(grille_mod.format_table(table), args)
    return 0


def _cmd_synthesize_wheels(args) -> int:
    vocab = corpus_mod.load_word_list(args.words)
    budget = _parse_holes(args.budget) if "," in args.budget else int(args.budget)
    system, report = synth_mod.decompose_vocabulary(
        vocab, args.wheels, budget, _splitter_from_args(args)
    )
    summary = (
        f"types: {len(report.covered) + len(report.uncovered)}\n"
        f"covered: {len(report.covered)}\n"
        f"coverage: {report.coverage:.4f}\n"
        f"overgenerated: {report.overgeneration_count}\n"
    )
    if args.out:
        wheels_mod.save_wheel_file(system, args.out)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(wheels_mod.format_wheel_system(system))
        sys.stderr.write(summary)
    return 0


# ---------------------------------------------------------------------------
# roman
# ---------------------------------------------------------------------------


def _cmd_roman_encode(args) -> int:
    word = wheels_mod.roman_encode(args.value)
    _write_out(("-" if word == "" else word) + "\n", args)
    return 0


def _cmd_roman_decode(args) -> int:
    word = "" if args.word == "-" else args.word
    _write_out(f"{wheels_mod.roman_decode(word)}\n", args)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="wordmill", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    # wheels
    wheels_p = top.add_parser("wheels", help="wheel system operations")
    wheels_sub = wheels_p.add_subparsers(dest="subcommand", required=True)

    p = wheels_sub.add_parser("enumerate", help="list index,word pairs")
    _add_system_source(p)
    p.add_argument("--limit", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_wheels_enumerate)

    p = wheels_sub.add_parser("word-at", help="word for a tuple index")
    _add_system_source(p)
    p.add_argument("index", type=int)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_wheels_word_at)

    p = wheels_sub.add_parser("index-of", help="tuple index for a word ('-' for the empty word)")
    _add_system_source(p)
    p.add_argument("word")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_wheels_index_of)

    p = wheels_sub.add_parser("preset", help="print a bundled wheel file")
    p.add_argument("name", choices=wheels_mod.PRESET_NAMES)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_wheels_preset)

    p = wheels_sub.add_parser("distinct", help="distinct words and collisions")
    _add_system_source(p)
    p.add_argument("--collisions", action="store_true", help="list colliding words")
    _add_format(p)
    p.set_defaults(func=_cmd_wheels_distinct)

    # grille
    grille_p = top.add_parser("grille", help="fragment tables and grilles")
    grille_sub = grille_p.add_subparsers(dest="subcommand", required=True)

    p = grille_sub.add_parser("count", help="number of canonical grilles")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_grille_count)

    p = grille_sub.add_parser("enumerate", help="list canonical grilles")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, default=3)
    _add_format(p)
    p.set_defaults(func=_cmd_grille_enumerate)

    p = grille_sub.add_parser("slide", help="every word a grille reveals over a table")
    p.add_argument("--table", metavar="PATH", required=True)
    p.add_argument("--grille", metavar="H,H,H", required=True, help="hole row per column")
    p.add_argument("--grille-rows", type=int, dest="grille_rows")
    _add_format(p)
    p.set_defaults(func=_cmd_grille_slide)

    p = grille_sub.add_parser("equiv-check", help="verify the shifted-table equivalence on random tables")
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--tables", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_grille_equiv_check)

    # dist
    dist_p = top.add_parser("dist", help="word-length distributions")
    dist_sub = dist_p.add_subparsers(dest="subcommand", required=True)

    p = dist_sub.add_parser("system", help="length distribution of a wheel system")
    _add_system_source(p)
    p.add_argument("--mode", choices=("tuple", "exhaustive"), default="tuple")
    p.add_argument("--chart", metavar="PATH", help="also render a bar chart image")
    _add_format(p)
    p.set_defaults(func=_cmd_dist_system)

    p = dist_sub.add_parser("convolve", help="convolve distribution csv files")
    p.add_argument("files", nargs="+", metavar="CSV")
    _add_format(p)
    p.set_defaults(func=_cmd_dist_convolve)

    p = dist_sub.add_parser("compare", help="deviation between two distributions")
    p.add_argument("observed", help="preset:NAME | wheels:PATH | csv:PATH | binomial:N[,S[,T]]")
    p.add_argument("reference", help="same source syntax")
    p.add_argument("--chart", metavar="PATH")
    _add_format(p)
    p.set_defaults(func=_cmd_dist_compare)

    p = dist_sub.add_parser("reference", help="the three bundled 24-fragment configurations")
    p.add_argument("--chart", metavar="PATH")
    _add_format(p)
    p.set_defaults(func=_cmd_dist_reference)

    # grammar
    grammar_p = top.add_parser("grammar", help="layered word grammar")
    grammar_sub = grammar_p.add_subparsers(dest="subcommand", required=True)

    p = grammar_sub.add_parser("parse", help="parse one word")
    p.add_argument("word")
    _add_grammar_options(p)
    p.add_argument("--splits", action="store_true", help="list three-way wheel splits instead")
    _add_format(p)
    p.set_defaults(func=_cmd_grammar_parse)

    p = grammar_sub.add_parser("coverage", help="grammar coverage of a corpus")
    _add_corpus_options(p)
    _add_grammar_options(p)
    p.add_argument("--examples", type=int, default=8, help="failure examples per line")
    _add_format(p)
    p.set_defaults(func=_cmd_grammar_coverage)

    # corpus
    corpus_p = top.add_parser("corpus", help="transliteration statistics")
    corpus_sub = corpus_p.add_subparsers(dest="subcommand", required=True)

    p = corpus_sub.add_parser("stats", help="token and type counts")
    _add_corpus_options(p)
    p.add_argument("--types-out", metavar="PATH", dest="types_out", help="write the sorted type list")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_corpus_stats)

    p = corpus_sub.add_parser("positions", help="glyph counts by token position")
    _add_corpus_options(p)
    p.add_argument("--glyphs", required=True, help="glyphs to count, e.g. 'qk' or 'q,k'")
    _add_format(p)
    p.set_defaults(func=_cmd_corpus_positions)

    p = corpus_sub.add_parser("overlap", help="shared word types between two page tags")
    _add_corpus_options(p)
    p.add_argument("--tag-a", required=True, dest="tag_a")
    p.add_argument("--tag-b", required=True, dest="tag_b")
    p.add_argument("--tag-key", default="L", dest="tag_key")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_corpus_overlap)

    # network
    network_p = top.add_parser("network", help="edit-distance word networks")
    network_sub = network_p.add_subparsers(dest="subcommand", required=True)

    p = network_sub.add_parser("stats", help="connectivity summary")
    p.add_argument("--words", metavar="PATH", required=True, help="word list file")
    p.add_argument("--max-distance", type=int, default=1, dest="max_distance")
    p.add_argument("--chart", metavar="PATH", help="degree histogram image")
    _add_format(p)
    p.set_defaults(func=_cmd_network_stats)

    p = network_sub.add_parser("edges", help="tab-separated edge list")
    p.add_argument("--words", metavar="PATH", required=True)
    p.add_argument("--max-distance", type=int, default=1, dest="max_distance")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_network_edges)

    # synthesize
    synth_p = top.add_parser("synthesize", help="build tables or wheels from a vocabulary")
    synth_sub = synth_p.add_subparsers(dest="subcommand", required=True)

    p = synth_sub.add_parser("table", help="table that replays a word list under a grille")
    p.add_argument("--words", metavar="PATH", required=True)
    p.add_argument("--grille", metavar="H,H,H", required=True)
    p.add_argument("--grille-rows", type=int, dest="grille_rows")
    p.add_argument("--splitter", choices=("even", "grammar"), default="even")
    p.add_argument("--grammar", metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_synthesize_table)

    p = synth_sub.add_parser("wheels", help="greedy wheel decomposition of a word list")
    p.add_argument("--words", metavar="PATH", required=True)
    p.add_argument("--wheels", type=int, default=3)
    p.add_argument("--budget", default="24", help="fragments per wheel, uniform or comma-separated")
    p.add_argument("--splitter", choices=("even", "grammar"), default="even")
    p.add_argument("--grammar", metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_synthesize_wheels)

    # roman
    roman_p = top.add_parser("roman", help="additive Roman numerals on the preset wheels")
    roman_sub = roman_p.add_subparsers(dest="subcommand", required=True)

    p = roman_sub.add_parser("encode", help="numeral for a value (0..4999)")
    p.add_argument("value", type=int)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_roman_encode)

    p = roman_sub.add_parser("decode", help="value of an additive numeral")
    p.add_argument("word")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_roman_decode)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordmillError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
