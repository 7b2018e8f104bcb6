"""Line-oriented text format for character tables and class data.

    # comment
    group <name>
    order <int>
    classes <k>
    centralizers
    <k integers, any line breaks>
    degrees                      (optional)
    <k integers>
    char 1: v_1 ... v_k          (optional, k lines)

Values use the grammar ``<int>`` or ``<c>*z(<n>,<j>)`` terms joined by
``+``/``-``; ``z(n,j)`` is exp(2 pi i j/n).
"""
from __future__ import annotations

import io
import os
import re

from .chartab import CharacterTable, ClassData
from .cyclotomic import Cyclotomic
from .errors import ConsistencyError, ParseError


def format_table(t: CharacterTable) -> str:
    out = io.StringIO()
    out.write(f"group {t.name}\n")
    out.write(f"order {t.order}\n")
    out.write(f"classes {t.k}\n")
    out.write("centralizers\n")
    out.write(" ".join(str(z) for z in t.centralizers) + "\n")
    out.write("degrees\n")
    out.write(" ".join(str(d) for d in t.degrees) + "\n")
    for i, row in enumerate(t.values, 1):
        out.write(f"char {i}: " + " ".join(v.to_string() for v in row) + "\n")
    return out.getvalue()


def write_table(t: CharacterTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_table(t))


def _read(source) -> str:
    if isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    if hasattr(source, "read"):
        return source.read()
    return str(source)


def _parse(text: str) -> ClassData:
    lines = text.splitlines()
    name = order = k = None
    centralizers: list[int] | None = None
    degrees: list[int] | None = None
    chars: dict[int, list[Cyclotomic]] = {}
    pending = None  # (list being filled, keyword)
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if pending is not None:
            target, key = pending
            for col, tok in _tokens(line):
                if len(target) == k:
                    raise ParseError(f"too many {key} values", lineno, col)
                target.append(_integer(tok, lineno, col))
            if len(target) == k:
                pending = None
            continue
        word, _, rest = line.strip().partition(" ")
        col = raw.index(word) + 1
        rest = rest.strip()
        if word == "group":
            name = rest
        elif word == "order":
            order = _integer(rest, lineno, col + 6)
        elif word == "classes":
            k = _integer(rest, lineno, col + 8)
            if k < 1:
                raise ParseError("class count must be positive", lineno, col + 8)
        elif word in ("centralizers", "degrees"):
            if k is None:
                raise ParseError(f"'{word}' before 'classes'", lineno, col)
            target: list[int] = []
            if word == "centralizers":
                centralizers = target
            else:
                degrees = target
            for c2, tok in _tokens(rest, offset=len(raw) - len(raw.lstrip()) + len(word) + 1):
                target.append(_integer(tok, lineno, c2))
            if len(target) > k:
                raise ParseError(f"too many {word} values", lineno, col)
            if len(target) < k:
                pending = (target, word)
        elif word == "char":
            m = re.fullmatch(r"(\d+)\s*:(.*)", rest)
            if not m or k is None:
                raise ParseError("expected 'char <i>: v_1 ... v_k' after 'classes'", lineno, col)
            idx = int(m.group(1))
            if idx in chars:
                raise ParseError(f"duplicate char {idx}", lineno, col)
            body_start = raw.index(":") + 1
            row = []
            for c2, tok in _tokens(m.group(2), offset=body_start):
                try:
                    row.append(Cyclotomic.parse(tok))
                except ParseError as exc:
                    raise ParseError(f"bad value {tok!r}", lineno, c2 + (exc.column or 1) - 1) from None
            if len(row) != k:
                raise ParseError(f"char {idx} has {len(row)} values, expected {k}", lineno, col)
            chars[idx] = row
        else:
            raise ParseError(f"unknown keyword {word!r}", lineno, col)
    if pending is not None:
        raise ParseError(f"unexpected end of file inside '{pending[1]}'", len(lines), 1)
    for key, val in (("group", name), ("order", order), ("classes", k), ("centralizers", centralizers)):
        if val is None:
            raise ParseError(f"missing '{key}' line")
    values = None
    if chars:
        if sorted(chars) != list(range(1, k + 1)):
            raise ParseError(f"expected char lines 1..{k}")
        values = [chars[i] for i in range(1, k + 1)]
    cd = ClassData(name=name, order=order, centralizers=centralizers, degrees=degrees, values=values)
    cd.validate()
    if values is not None:
        from_values = [int(r[0].to_rational()) if r[0].is_rational() else None for r in values]
        if degrees is not None and from_values != degrees:
            raise ConsistencyError("degrees line disagrees with identity column")
    return cd


def _tokens(text, offset=0):
    for m in re.finditer(r"\S+", text):
        yield offset + m.start() + 1, m.group(0)


def _integer(tok, line, col):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", line, col) from None


def parse_class_data(source) -> ClassData:
    return _parse(_read(source))


def parse_table(source) -> CharacterTable:
    cd = parse_class_data(source)
    if cd.values is None:
        raise ParseError("file has no 'char' lines")
    t = cd.to_table()
    t.validate()
    return t
