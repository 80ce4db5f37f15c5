"""Plain-text exchange formats for Gram matrices, binary codes, and frames.

Gram files: first line the rank, then rank rows of rank integers; an
optional second line ``scale 1/2`` marks the entries as doubled inner
products (allowing exact half-integer forms).  Code files: first line
``length dim``, then dim lines of 0/1 characters with coordinate 0 first.
Frame files: first line the number of sign pairs, then one coordinate row
per pair in the lattice basis.  Vector lists: one vector per line with
entries written ``p`` or ``p/q``.

Blank lines and ``#`` comments are ignored everywhere.
"""

from fractions import Fraction

from .f2codes import BinaryCode
from .frames import LatticeFrame
from .lattices import IntegralLattice

__all__ = [
    "ParseError",
    "parse_gram",
    "format_gram",
    "parse_code",
    "format_code",
    "parse_frame",
    "format_frame",
    "parse_vectors",
    "format_vectors",
    "load_gram",
    "load_code",
    "load_frame",
]


class ParseError(ValueError):
    """An exchange file does not follow its format."""


def _content_lines(text):
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def _int_row(line, width, what):
    toks = line.split()
    if len(toks) != width:
        raise ParseError(f"{what}: expected {width} entries, found {len(toks)} in {line!r}")
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise ParseError(f"{what}: non-integer entry in {line!r}") from None


def parse_gram(text):
    """IntegralLattice from Gram-file text."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty Gram file")
    try:
        rank = int(lines[0])
    except ValueError:
        raise ParseError(f"bad rank line {lines[0]!r}") from None
    if rank < 0:
        raise ParseError("rank must be nonnegative")
    body = lines[1:]
    halved = bool(body) and body[0].split() == ["scale", "1/2"]
    if halved:
        body = body[1:]
    if len(body) != rank:
        raise ParseError(f"expected {rank} matrix rows, found {len(body)}")
    rows = tuple(_int_row(ln, rank, "Gram row") for ln in body)
    try:
        if halved:
            return IntegralLattice(rows)
        return IntegralLattice.from_gram(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_gram(lattice):
    """Gram-file text for a lattice (uses ``scale 1/2`` only when needed)."""
    halved = any(x % 2 for row in lattice.gram2 for x in row)
    lines = [str(lattice.rank)]
    if halved:
        lines.append("scale 1/2")
        rows = lattice.gram2
    else:
        rows = [[x // 2 for x in row] for row in lattice.gram2]
    lines += [" ".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def parse_code(text):
    """BinaryCode from code-file text."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty code file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"bad header {lines[0]!r}: expected 'length dim'")
    try:
        length, dim = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    if len(lines) != 1 + dim:
        raise ParseError(f"expected {dim} generator rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != length or set(ln) - {"0", "1"}:
            raise ParseError(f"bad generator row {ln!r}")
        rows.append(sum(1 << i for i, ch in enumerate(ln) if ch == "1"))
    try:
        return BinaryCode.from_rows(length, rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_code(code):
    lines = [f"{code.length} {len(code.rows)}"]
    for r in code.rows:
        lines.append("".join("1" if (r >> i) & 1 else "0" for i in range(code.length)))
    return "\n".join(lines) + "\n"


def _fraction(tok, what):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what}: bad rational {tok!r}") from None


def parse_vectors(text, width=None):
    """Tuple of Fraction coordinate rows, one per line."""
    rows = []
    for ln in _content_lines(text):
        row = tuple(_fraction(tok, "vector entry") for tok in ln.split())
        if width is not None and len(row) != width:
            raise ParseError(f"expected {width} coordinates, found {len(row)} in {ln!r}")
        rows.append(row)
    return tuple(rows)


def format_vectors(rows):
    return "\n".join(" ".join(str(Fraction(x)) for x in row) for row in rows) + "\n"


def parse_frame(text, lattice):
    """LatticeFrame from frame-file text (coordinates in the lattice basis)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty frame file")
    try:
        pairs = int(lines[0])
    except ValueError:
        raise ParseError(f"bad pair-count line {lines[0]!r}") from None
    if len(lines) != 1 + pairs:
        raise ParseError(f"expected {pairs} frame rows, found {len(lines) - 1}")
    vectors = []
    for ln in lines[1:]:
        row = tuple(_fraction(tok, "frame entry") for tok in ln.split())
        if len(row) != lattice.rank:
            raise ParseError(f"expected {lattice.rank} coordinates, found {len(row)} in {ln!r}")
        if any(x.denominator != 1 for x in row):
            raise ParseError(f"frame row {ln!r} is not integral in the lattice basis")
        vectors.append(tuple(int(x) for x in row))
    try:
        return LatticeFrame(lattice, vectors)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_frame(frame):
    lines = [str(frame.pair_count)]
    lines += [" ".join(str(x) for x in v) for v in frame.vectors]
    return "\n".join(lines) + "\n"


def load_gram(path):
    with open(path, encoding="utf-8") as fh:
        return parse_gram(fh.read())


def load_code(path):
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def load_frame(path, lattice):
    with open(path, encoding="utf-8") as fh:
        return parse_frame(fh.read(), lattice)
