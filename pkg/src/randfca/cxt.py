"""Plain-text cross-table context files (.cxt).

The format, with LF line endings throughout:

    line 1      the magic character "B"
    line 2      blank (a context name is tolerated here when reading)
    line 3      object count, decimal
    line 4      attribute count, decimal
    line 5      blank
    next |G|    object labels, one per line
    next |M|    attribute labels, one per line
    next |G|    incidence rows: exactly |M| characters, 'X' or '.'

Writing always emits a blank line 2 unless the document carries a title.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import FormalContext
from .errors import ParseError, SerializationError


@dataclass(frozen=True)
class CxtDocument:
    """A context plus the optional title text a file may carry."""

    context: FormalContext
    title: str | None = None

    def __post_init__(self) -> None:
        if self.title == "":
            object.__setattr__(self, "title", None)


class _LineReader:
    def __init__(self, text: str) -> None:
        self._lines = text.split("\n")
        self._next = 0

    @property
    def line_number(self) -> int:
        return self._next

    def take(self, what: str) -> str:
        if self._next >= len(self._lines):
            raise ParseError(f"unexpected end of file, expected {what}", self._next + 1)
        line = self._lines[self._next]
        self._next += 1
        return line

    def expect_trailing_blank(self) -> None:
        while self._next < len(self._lines):
            if self._lines[self._next] != "":
                raise ParseError("unexpected content after incidence rows", self._next + 1)
            self._next += 1


def _take_count(reader: _LineReader, what: str) -> int:
    line = reader.take(what)
    try:
        value = int(line)
    except ValueError:
        raise ParseError(f"expected {what} as a decimal integer, got {line!r}", reader.line_number) from None
    if value < 0:
        raise ParseError(f"{what} must be >= 0, got {value}", reader.line_number)
    return value


def _take_labels(reader: _LineReader, count: int, kind: str) -> tuple[str, ...]:
    labels: list[str] = []
    seen: set[str] = set()
    for _ in range(count):
        label = reader.take(f"{kind} label")
        if label in seen:
            raise ParseError(f"duplicate {kind} label {label!r}", reader.line_number)
        seen.add(label)
        labels.append(label)
    return tuple(labels)


def read_cxt(data: str | bytes) -> CxtDocument:
    """Parse a cross-table document. Raises ParseError with a line number."""
    if isinstance(data, (bytes, bytearray)):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    else:
        text = data
    reader = _LineReader(text)
    magic = reader.take("magic line 'B'")
    if magic != "B":
        raise ParseError(f"expected magic line 'B', got {magic!r}", 1)
    title = reader.take("title line") or None
    object_count = _take_count(reader, "object count")
    attribute_count = _take_count(reader, "attribute count")
    blank = reader.take("blank separator line")
    if blank != "":
        raise ParseError(f"expected a blank line, got {blank!r}", reader.line_number)
    objects = _take_labels(reader, object_count, "object")
    attributes = _take_labels(reader, attribute_count, "attribute")
    rows = []
    for _ in range(object_count):
        line = reader.take("incidence row")
        if len(line) != attribute_count:
            raise ParseError(
                f"incidence row has {len(line)} characters, expected {attribute_count}",
                reader.line_number,
            )
        mask = 0
        for j, ch in enumerate(line):
            if ch == "X":
                mask |= 1 << j
            elif ch != ".":
                raise ParseError(
                    f"illegal incidence character {ch!r} (only 'X' and '.' allowed)",
                    reader.line_number,
                )
        rows.append(mask)
    reader.expect_trailing_blank()
    context = FormalContext.from_bit_rows(objects, attributes, rows)
    return CxtDocument(context=context, title=title)


def write_cxt(doc: CxtDocument | FormalContext) -> str:
    """Serialize to the canonical cross-table text (LF endings, trailing LF)."""
    if isinstance(doc, FormalContext):
        doc = CxtDocument(context=doc)
    ctx = doc.context
    title = doc.title or ""
    for label in (title, *ctx.objects, *ctx.attributes):
        if "\n" in label or "\r" in label:
            raise SerializationError(
                f"label {label!r} contains a line break and cannot be serialized"
            )
    lines = [
        "B",
        title,
        str(ctx.object_count),
        str(ctx.attribute_count),
        "",
        *ctx.objects,
        *ctx.attributes,
        *("".join("X" if v else "." for v in row) for row in ctx.incidence),
    ]
    return "\n".join(lines) + "\n"
