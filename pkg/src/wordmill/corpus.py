"""Transliteration loading and positional token statistics.

The accepted file format is a small, documented subset of the IVTFF-style
conventions used for Voynich transliterations:

  # comment                     ignored
  <pageid>  $K=V $K=V ...       starts a page; "$key=value" pairs become page
                                tags (Currier language lives under key "L")
  <pageid.locus,code> text      one transliterated line; a code starting with
                                "+" opens a new paragraph, anything else
                                continues the current one
  blank line                    paragraph break (for files without codes)

Within the text part, "." separates words and "," marks an uncertain space
that is either split (default) or joined.  Inline "<...>" annotations are
stripped.  The first locus of a page always opens a paragraph.  Lines without
tokens are dropped.  A line of text with no locus tag is an error, as is any
malformed tag.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass, field

from .errors import FormatError, WordmillError

# Basic EVA letters; used only as the default for unknown-glyph warnings.
DEFAULT_EVA_ALPHABET = "acdefghiklmnopqrsty"

_PAGE_RE = re.compile(r"^<([^<>.,]+)>\s*(.*)$")
_LOCUS_RE = re.compile(r"^<([^<>.,]+)\.([^<>,]+)(?:,([^<>]*))?>\s*(.*)$")
_TAG_RE = re.compile(r"^\$(\w+)=(\S+)$")
_INLINE_RE = re.compile(r"<[^<>]*>")


@dataclass(frozen=True)
class Line:
    tokens: tuple[str, ...]
    locus: str | None = None


@dataclass(frozen=True)
class Paragraph:
    lines: tuple[Line, ...]


@dataclass(frozen=True)
class Page:
    page_id: str
    tags: dict[str, str] = field(default_factory=dict)
    paragraphs: tuple[Paragraph, ...] = ()


@dataclass(frozen=True)
class TokenPosition:
    page_id: str
    paragraph_index: int
    line_index: int
    token_index: int
    token: str
    line_token_count: int

    @property
    def paragraph_initial(self) -> bool:
        return self.line_index == 0 and self.token_index == 0

    @property
    def top_line(self) -> bool:
        return self.line_index == 0

    @property
    def line_final(self) -> bool:
        return self.token_index == self.line_token_count - 1


@dataclass(frozen=True)
class Corpus:
    pages: tuple[Page, ...]
    warnings: tuple[str, ...] = ()

    def iter_positions(self) -> Iterator[TokenPosition]:
        for page in self.pages:
            for p_idx, paragraph in enumerate(page.paragraphs):
                for l_idx, line in enumerate(paragraph.lines):
                    for t_idx, token in enumerate(line.tokens):
                        yield TokenPosition(
                            page.page_id, p_idx, l_idx, t_idx, token, len(line.tokens)
                        )

    def tokens(self) -> list[str]:
        return [position.token for position in self.iter_positions()]

    def types(self) -> set[str]:
        return set(self.tokens())


def _tokenize(text: str, uncertain_spaces: str) -> list[str]:
    text = _INLINE_RE.sub("", text)
    if uncertain_spaces == "split":
        text = text.replace(",", ".")
    elif uncertain_spaces == "join":
        text = text.replace(",", "")
    else:
        raise ValueError(f"uncertain_spaces must be 'split' or 'join', got {uncertain_spaces!r}")
    return [token for token in (part.strip() for part in text.split(".")) if token]


class _Builder:
    def __init__(self):
        self.pages: list[Page] = []
        self.page_id: str | None = None
        self.tags: dict[str, str] = {}
        self.paragraphs: list[Paragraph] = []
        self.lines: list[Line] = []

    def close_paragraph(self):
        if self.lines:
            self.paragraphs.append(Paragraph(tuple(self.lines)))
            self.lines = []

    def close_page(self):
        self.close_paragraph()
        if self.page_id is not None:
            self.pages.append(Page(self.page_id, self.tags, tuple(self.paragraphs)))
        self.page_id = None
        self.tags = {}
        self.paragraphs = []

    def open_page(self, page_id: str, tags: dict[str, str]):
        self.close_page()
        self.page_id = page_id
        self.tags = tags


def parse_transliteration(
    text: str,
    *,
    uncertain_spaces: str = "split",
    alphabet: str | None = None,
) -> Corpus:
    allowed = set(alphabet) if alphabet is not None else None
    warnings: list[str] = []
    builder = _Builder()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            builder.close_paragraph()
            continue

        locus_match = _LOCUS_RE.match(line)
        if locus_match:
            page_id, locus_no, code, body = locus_match.groups()
            code = code or ""
            if builder.page_id is None:
                builder.open_page(page_id, {})
            elif page_id != builder.page_id:
                raise FormatError(
                    f"line {lineno}: locus page {page_id!r} does not match page {builder.page_id!r}"
                )
            if code.startswith("+"):
                builder.close_paragraph()
            tokens = _tokenize(body, uncertain_spaces)
            if allowed is not None:
                for token in tokens:
                    strange = sorted(set(token) - allowed)
                    if strange:
                        warnings.append(
                            f"line {lineno}: glyphs {''.join(strange)!r} outside the alphabet in {token!r}"
                        )
            if tokens:
                builder.lines.append(Line(tuple(tokens), f"{page_id}.{locus_no},{code}"))
            continue

        page_match = _PAGE_RE.match(line)
        if page_match:
            page_id, rest = page_match.groups()
            tags: dict[str, str] = {}
            for chunk in rest.split():
                tag_match = _TAG_RE.match(chunk)
                if not tag_match:
                    raise FormatError(f"line {lineno}: bad page tag {chunk!r}")
                tags[tag_match.group(1)] = tag_match.group(2)
            builder.open_page(page_id, tags)
            continue

        if line.startswith("<"):
            raise FormatError(f"line {lineno}: malformed locus tag: {line!r}")
        raise FormatError(f"line {lineno}: text without a locus tag: {line!r}")

    builder.close_page()
    return Corpus(tuple(builder.pages), tuple(warnings))


def load_transliteration(path, *, uncertain_spaces: str = "split", alphabet: str | None = None) -> Corpus:
    with open(path, encoding="utf-8") as handle:
        return parse_transliteration(
            handle.read(), uncertain_spaces=uncertain_spaces, alphabet=alphabet
        )


_RESERVED_IN_TOKEN = set(".,<>#$|")


def format_transliteration(corpus: Corpus) -> str:
    """Canonical writer for the format accepted by parse_transliteration."""
    out: list[str] = []
    for page in corpus.pages:
        if "." in page.page_id or set(page.page_id) & set("<>,"):
            raise FormatError(f"page id {page.page_id!r} is not representable")
        header = f"<{page.page_id}>"
        if page.tags:
            header += " " + " ".join(f"${k}={v}" for k, v in sorted(page.tags.items()))
        out.append(header)
        counter = 0
        for paragraph in page.paragraphs:
            for l_idx, line in enumerate(paragraph.lines):
                counter += 1
                for token in line.tokens:
                    if not token or set(token) & _RESERVED_IN_TOKEN or token != token.strip():
                        raise FormatError(f"token {token!r} is not representable")
                code = "+P0" if l_idx == 0 else "=P0"
                out.append(f"<{page.page_id}.{counter},{code}> " + ".".join(line.tokens))
    return "\n".join(out) + "\n"


def save_transliteration(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_transliteration(corpus))


def token_type_counts(corpus: Corpus) -> tuple[int, int]:
    """(token occurrences, distinct word types)."""
    tokens = corpus.tokens()
    return len(tokens), len(set(tokens))


@dataclass(frozen=True)
class GlyphPositionStats:
    """Occurrence counts for one glyph by token position.

    paragraph_initial is a subset of top_line; both are reported as counted.
    elsewhere counts occurrences in tokens that are none of the three.
    """

    glyph: str
    total: int
    paragraph_initial: int
    top_line: int
    line_final: int
    elsewhere: int

    def fractions(self) -> dict[str, float]:
        if self.total == 0:
            return {"paragraph_initial": 0.0, "top_line": 0.0, "line_final": 0.0, "elsewhere": 0.0}
        return {
            "paragraph_initial": self.paragraph_initial / self.total,
            "top_line": self.top_line / self.total,
            "line_final": self.line_final / self.total,
            "elsewhere": self.elsewhere / self.total,
        }


@dataclass(frozen=True)
class PositionalReport:
    glyph_stats: dict[str, GlyphPositionStats]
    note: str = (
        "categories overlap: every paragraph-first word also lies on its paragraph's top line; "
        "counts are reported independently"
    )


def positional_stats(corpus: Corpus, glyphs: str) -> PositionalReport:
    """Occurrence counts of each glyph by the position of its containing token."""
    if not glyphs:
        raise ValueError("glyphs must not be empty")
    stats = {
        g: {"total": 0, "paragraph_initial": 0, "top_line": 0, "line_final": 0, "elsewhere": 0}
        for g in glyphs
    }
    for position in corpus.iter_positions():
        for glyph in stats:
            hits = position.token.count(glyph)
            if not hits:
                continue
            bucket = stats[glyph]
            bucket["total"] += hits
            in_any = False
            if position.paragraph_initial:
                bucket["paragraph_initial"] += hits
                in_any = True
            if position.top_line:
                bucket["top_line"] += hits
                in_any = True
            if position.line_final:
                bucket["line_final"] += hits
                in_any = True
            if not in_any:
                bucket["elsewhere"] += hits
    return PositionalReport(
        {g: GlyphPositionStats(g, **bucket) for g, bucket in stats.items()}
    )


@dataclass(frozen=True)
class OverlapReport:
    tag_a: str
    tag_b: str
    types_a: int
    types_b: int
    shared: int
    b_only: int

    @property
    def share_of_a(self) -> float:
        return self.shared / self.types_a if self.types_a else 0.0

    @property
    def share_of_b(self) -> float:
        return self.shared / self.types_b if self.types_b else 0.0


def subset_overlap(corpus: Corpus, tag_a: str, tag_b: str, *, key: str = "L") -> OverlapReport:
    """Word-type overlap between the pages tagged key=tag_a and key=tag_b."""

    def types_for(value: str) -> set[str]:
        pages = [p for p in corpus.pages if p.tags.get(key) == value]
        if not pages:
            raise WordmillError(f"no page carries tag {key}={value}")
        sub = Corpus(tuple(pages))
        return sub.types()

    types_a = types_for(tag_a)
    types_b = types_for(tag_b)
    shared = types_a & types_b
    return OverlapReport(
        tag_a, tag_b, len(types_a), len(types_b), len(shared), len(types_b - types_a)
    )


# Plain word lists: one word per line, "-" for the empty word, "#" comments.


def parse_word_list(text: str) -> list[str]:
    words = []
    for raw in text.splitlines():
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        words.append("" if line == "-" else line)
    return words


def load_word_list(path) -> list[str]:
    with open(path, encoding="utf-8") as handle:
        return parse_word_list(handle.read())


def save_word_list(words, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for word in words:
            handle.write(("-" if word == "" else word) + "\n")
