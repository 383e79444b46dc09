"""Line-oriented text formats: SEIFERT, FORM, DISKS and FRAMEDLINK.

All four share the same lexical rules: ``#`` starts a comment running to the
end of the line, blank lines are ignored, and tokens are separated by
arbitrary whitespace.  The first significant line is a header such as
``SEIFERT k=1 dim=22``.  Every error is reported as a :class:`ParseError`
with a 1-based line and column.

SEIFERT::

    SEIFERT k=0 dim=2
    -1 1
    0 -1

FORM::

    FORM dim=2
    0 1
    1 0

DISKS (one line per disk: target sign-sum, colon, double-point signs)::

    DISKS count=2
    0 :
    -1 : + - -

FRAMEDLINK (framings line, then the linking matrix with zero diagonal)::

    FRAMEDLINK size=2
    framings 0 0
    0 1
    1 0
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .forms import SymForm
from .handles import DiskSystem, FramedLink
from .seifert import SeifertMatrix

_INT = re.compile(r"[+-]?[0-9]+")
_TOKEN = re.compile(r"[^\s#]+")
_MAX_DIM = 10_000

HEADERS = ("SEIFERT", "FORM", "DISKS", "FRAMEDLINK")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


@dataclass
class _Line:
    number: int
    tokens: list[_Tok]
    raw: str


def _lines(text: str) -> list[_Line]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [_Tok(m.group(), number, m.start() + 1) for m in _TOKEN.finditer(body)]
        if toks:
            out.append(_Line(number, toks, body))
    return out


def _end_position(text: str) -> tuple[int, int]:
    """Position just past the last line, for 'unexpected end of input' errors."""
    return len(text.splitlines()) + 1, 1


def _to_int(text: str, line: int, col: int) -> int:
    try:
        return int(text)
    except ValueError:  # beyond the interpreter's digit limit
        raise ParseError("integer literal too long", line, col) from None


def _int(tok: _Tok, what: str = "integer") -> int:
    if not _INT.fullmatch(tok.text):
        raise ParseError(f"expected {what}, found {tok.text!r}", tok.line, tok.col, {"INT"})
    return _to_int(tok.text, tok.line, tok.col)


def _keyval(tok: _Tok, key: str, minimum: int = 0) -> int:
    prefix = key + "="
    if not tok.text.startswith(prefix):
        raise ParseError(f"expected {prefix}<int>, found {tok.text!r}", tok.line, tok.col, {prefix})
    value = tok.text[len(prefix):]
    if not _INT.fullmatch(value):
        raise ParseError(f"expected an integer after {prefix}", tok.line, tok.col + len(prefix), {"INT"})
    v = _to_int(value, tok.line, tok.col + len(prefix))
    if v < minimum:
        raise ParseError(f"{key} must be >= {minimum}, got {v}", tok.line, tok.col + len(prefix))
    if v > _MAX_DIM and key in ("dim", "count", "size"):
        raise ParseError(f"{key}={v} exceeds the supported maximum {_MAX_DIM}", tok.line, tok.col + len(prefix))
    return v


def _header(text: str, lines: list[_Line], name: str, keys: tuple[str, ...]) -> list[int]:
    if not lines:
        line, col = _end_position(text)
        raise ParseError(f"empty input, expected a {name} header", line, col, {name})
    head = lines[0]
    first = head.tokens[0]
    if first.text != name:
        raise ParseError(f"expected {name} header, found {first.text!r}", first.line, first.col, {name})
    values = []
    for i, key in enumerate(keys, start=1):
        if i >= len(head.tokens):
            last = head.tokens[-1]
            raise ParseError(f"missing {key}=<int> in header", head.number, last.col + len(last.text) + 1, {key + "="})
        values.append(_keyval(head.tokens[i], key))
    if len(head.tokens) > len(keys) + 1:
        extra = head.tokens[len(keys) + 1]
        raise ParseError(f"unexpected token {extra.text!r} in header", extra.line, extra.col)
    return values


def _matrix_rows(text: str, lines: list[_Line], start: int, dim: int, what: str) -> tuple[list[list[int]], list[list[_Tok]]]:
    rows, toks = [], []
    for r in range(dim):
        idx = start + r
        if idx >= len(lines):
            line, col = _end_position(text)
            raise ParseError(f"missing {what} row {r + 1} of {dim}", line, col, {"INT"})
        ln = lines[idx]
        if len(ln.tokens) != dim:
            at = ln.tokens[dim] if len(ln.tokens) > dim else ln.tokens[-1]
            col = at.col if len(ln.tokens) > dim else at.col + len(at.text)
            raise ParseError(
                f"{what} row {r + 1} has {len(ln.tokens)} entries, expected {dim}", ln.number, col
            )
        rows.append([_int(t) for t in ln.tokens])
        toks.append(ln.tokens)
    return rows, toks


def _no_trailing(lines: list[_Line], used: int) -> None:
    if len(lines) > used:
        tok = lines[used].tokens[0]
        raise ParseError(f"unexpected data after the matrix: {tok.text!r}", tok.line, tok.col)


def parse_seifert(text: str) -> SeifertMatrix:
    lines = _lines(text)
    k, dim = _header(text, lines, "SEIFERT", ("k", "dim"))
    rows, _ = _matrix_rows(text, lines, 1, dim, "matrix")
    _no_trailing(lines, 1 + dim)
    return SeifertMatrix(k, rows)


def parse_form(text: str) -> SymForm:
    lines = _lines(text)
    (dim,) = _header(text, lines, "FORM", ("dim",))
    rows, toks = _matrix_rows(text, lines, 1, dim, "form")
    _no_trailing(lines, 1 + dim)
    for i in range(dim):
        for j in range(i + 1, dim):
            if rows[i][j] != rows[j][i]:
                tok = toks[j][i]
                raise ParseError(
                    f"form is not symmetric: ({i + 1},{j + 1}) = {rows[i][j]} but ({j + 1},{i + 1}) = {rows[j][i]}",
                    tok.line,
                    tok.col,
                )
    return SymForm(rows)


def parse_disks(text: str) -> DiskSystem:
    lines = _lines(text)
    (count,) = _header(text, lines, "DISKS", ("count",))
    disks, targets = [], []
    for d in range(count):
        idx = 1 + d
        if idx >= len(lines):
            line, col = _end_position(text)
            raise ParseError(f"missing disk line {d + 1} of {count}", line, col, {"INT"})
        ln = lines[idx]
        colon = ln.raw.find(":")
        if colon < 0:
            last = ln.tokens[-1]
            raise ParseError("expected ':' after the target", ln.number, last.col + len(last.text), {":"})
        head = list(_TOKEN.finditer(ln.raw[:colon]))
        if len(head) != 1:
            col = head[1].start() + 1 if head else colon + 1
            raise ParseError("expected exactly one target before ':'", ln.number, col, {"INT"})
        targets.append(_int(_Tok(head[0].group(), ln.number, head[0].start() + 1), "target"))
        signs = []
        for m in _TOKEN.finditer(ln.raw, colon + 1):
            s = m.group()
            if s in ("+", "+1"):
                signs.append(1)
            elif s in ("-", "-1"):
                signs.append(-1)
            else:
                raise ParseError(f"expected a sign, found {s!r}", ln.number, m.start() + 1, {"+", "-"})
        disks.append(signs)
    _no_trailing(lines, 1 + count)
    return DiskSystem(disks, targets)


def parse_framed_link(text: str) -> FramedLink:
    lines = _lines(text)
    (size,) = _header(text, lines, "FRAMEDLINK", ("size",))
    if len(lines) < 2:
        line, col = _end_position(text)
        raise ParseError("missing framings line", line, col, {"framings"})
    fl = lines[1]
    if fl.tokens[0].text != "framings":
        tok = fl.tokens[0]
        raise ParseError(f"expected 'framings', found {tok.text!r}", tok.line, tok.col, {"framings"})
    if len(fl.tokens) != size + 1:
        last = fl.tokens[-1]
        raise ParseError(f"expected {size} framings, found {len(fl.tokens) - 1}", fl.number, last.col)
    framings = [_int(t, "framing") for t in fl.tokens[1:]]
    rows, toks = _matrix_rows(text, lines, 2, size, "linking")
    _no_trailing(lines, 2 + size)
    for i in range(size):
        if rows[i][i] != 0:
            tok = toks[i][i]
            raise ParseError(f"linking matrix diagonal ({i + 1},{i + 1}) must be 0", tok.line, tok.col)
        for j in range(i + 1, size):
            if rows[i][j] != rows[j][i]:
                tok = toks[j][i]
                raise ParseError(
                    f"linking matrix is not symmetric: ({i + 1},{j + 1})/({j + 1},{i + 1})", tok.line, tok.col
                )
    return FramedLink(rows, framings)


def _render_rows(rows) -> list[str]:
    return [" ".join(str(x) for x in row) for row in rows]


def render_seifert(s: SeifertMatrix) -> str:
    return "\n".join([f"SEIFERT k={s.k} dim={s.size}"] + _render_rows(s.matrix)) + "\n"


def render_form(f: SymForm) -> str:
    return "\n".join([f"FORM dim={f.size}"] + _render_rows(f.entries)) + "\n"


def render_disks(ds: DiskSystem) -> str:
    out = [f"DISKS count={len(ds.disks)}"]
    for target, signs in zip(ds.targets, ds.disks):
        line = f"{target} :"
        if signs:
            line += " " + " ".join("+" if s > 0 else "-" for s in signs)
        out.append(line)
    return "\n".join(out) + "\n"


def render_framed_link(fl: FramedLink) -> str:
    framings = " ".join(["framings"] + [str(f) for f in fl.framings])
    return "\n".join([f"FRAMEDLINK size={fl.size}", framings] + _render_rows(fl.linking)) + "\n"


def sniff(text: str) -> str | None:
    """Header keyword of ``text``, if it is one of the four formats."""
    for line in _lines(text):
        word = line.tokens[0].text
        return word if word in HEADERS else None
    return None
