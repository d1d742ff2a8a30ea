"""Strict RFC 8259 text bridge for the constrained document model.

``parse`` accepts UTF-8 JSON whose top-level value is an object and returns a
DOC-indexed tree built through the checked constructors, so the structural
invariants hold on every successful parse.  ``serialize`` is the inverse and
only accepts complete documents.

Deliberately rejected: comments, trailing commas, NaN/Infinity literals,
numbers outside double range, and nesting beyond ``MAX_DEPTH`` containers.
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .jsondoc import (
    JArray,
    JBool,
    JDoc,
    JMap,
    JNull,
    JNum,
    JStr,
    JsonDoc,
    JTy,
    jarray,
    jdoc,
    jmap,
    jty_of,
)

MAX_DEPTH = 512

_WS = " \t\n\r"

_NUMBER_RE = re.compile(r"-?(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?")


class ParseErrorKind(Enum):
    SYNTAX = "Syntax"
    ROOT_NOT_OBJECT = "RootNotObject"
    NUMBER_OVERFLOW = "NumberOverflow"
    BAD_ESCAPE = "BadEscape"
    TRAILING = "Trailing"


class ParseError(Exception):
    def __init__(self, kind: ParseErrorKind, offset: int, text: str, message: str):
        self.kind = kind
        self.offset = offset
        prefix = text[:offset]
        self.line = prefix.count("\n") + 1
        self.column = offset - (prefix.rfind("\n") + 1) + 1
        self.message = message
        super().__init__(
            "%s at %d:%d: %s" % (kind.value, self.line, self.column, message)
        )


class NotADocument(Exception):
    """serialize applied to a value that is not a complete document."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(
        self, kind: ParseErrorKind, message: str, offset: Optional[int] = None
    ) -> ParseError:
        where = self.pos if offset is None else offset
        return ParseError(kind, where, self.text, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(
                ParseErrorKind.SYNTAX,
                "expected %r" % ch if self.peek() else "unexpected end of input",
            )
        self.pos += 1

    def parse_value(self, depth: int) -> JsonDoc:
        ch = self.peek()
        if ch == "{":
            return self.parse_object(depth)
        if ch == "[":
            return self.parse_array(depth)
        if ch == '"':
            return JStr(self.parse_string())
        if ch == "-" or ch.isdigit():
            return self.parse_number()
        for literal, node in (("true", JBool(True)), ("false", JBool(False)), ("null", JNull())):
            if self.text.startswith(literal, self.pos):
                self.pos += len(literal)
                return node
        raise self.fail(
            ParseErrorKind.SYNTAX,
            "unexpected end of input" if not ch else "unexpected character %r" % ch,
        )

    def parse_object(self, depth: int) -> JMap:
        if depth >= MAX_DEPTH:
            raise self.fail(ParseErrorKind.SYNTAX, "nesting too deep")
        self.expect("{")
        entries: List[Tuple[str, JsonDoc]] = []
        self.skip_ws()
        if self.peek() == "}":
            self.pos += 1
            return jmap(entries)
        while True:
            self.skip_ws()
            if self.peek() != '"':
                raise self.fail(ParseErrorKind.SYNTAX, "expected string key")
            key = self.parse_string()
            self.skip_ws()
            self.expect(":")
            self.skip_ws()
            entries.append((key, self.parse_value(depth + 1)))
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("}")
            return jmap(entries)

    def parse_array(self, depth: int) -> JArray:
        if depth >= MAX_DEPTH:
            raise self.fail(ParseErrorKind.SYNTAX, "nesting too deep")
        self.expect("[")
        children: List[JsonDoc] = []
        self.skip_ws()
        if self.peek() == "]":
            self.pos += 1
            return jarray(children)
        while True:
            self.skip_ws()
            children.append(self.parse_value(depth + 1))
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return jarray(children)

    def parse_string(self) -> str:
        self.expect('"')
        out: List[str] = []
        while True:
            if self.pos >= len(self.text):
                raise self.fail(ParseErrorKind.SYNTAX, "unterminated string")
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(out)
            if ch == "\\":
                out.append(self.parse_escape())
                continue
            if ord(ch) < 0x20:
                raise self.fail(ParseErrorKind.SYNTAX, "unescaped control character")
            out.append(ch)
            self.pos += 1

    _SHORT_ESCAPES = {
        '"': '"', "\\": "\\", "/": "/",
        "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t",
    }

    def parse_escape(self) -> str:
        start = self.pos
        self.pos += 1  # backslash
        if self.pos >= len(self.text):
            raise self.fail(ParseErrorKind.BAD_ESCAPE, "truncated escape", start)
        ch = self.text[self.pos]
        self.pos += 1
        if ch in self._SHORT_ESCAPES:
            return self._SHORT_ESCAPES[ch]
        if ch != "u":
            raise self.fail(ParseErrorKind.BAD_ESCAPE, "invalid escape \\%s" % ch, start)
        cp = self.parse_hex4(start)
        if 0xD800 <= cp <= 0xDBFF and self.text.startswith("\\u", self.pos):
            save = self.pos
            self.pos += 2
            low = self.parse_hex4(save)
            if 0xDC00 <= low <= 0xDFFF:
                return chr(0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00))
            self.pos = save  # not a low surrogate; leave it for the next escape
        return chr(cp)

    def parse_hex4(self, escape_start: int) -> int:
        digits = self.text[self.pos : self.pos + 4]
        if len(digits) != 4 or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise self.fail(
                ParseErrorKind.BAD_ESCAPE, "invalid \\u escape", escape_start
            )
        self.pos += 4
        return int(digits, 16)

    def parse_number(self) -> JNum:
        m = _NUMBER_RE.match(self.text, self.pos)
        if m is None:
            raise self.fail(ParseErrorKind.SYNTAX, "malformed number")
        value = float(m.group())
        if math.isinf(value):
            raise self.fail(
                ParseErrorKind.NUMBER_OVERFLOW, "number exceeds double range"
            )
        self.pos = m.end()
        return JNum(value)


def parse(text: str) -> JDoc:
    """Parse JSON text whose root must be an object into a DOC node."""
    p = _Parser(text)
    p.skip_ws()
    root_offset = p.pos
    # The descent uses a few interpreter frames per container level; make room
    # so the MAX_DEPTH check fires before Python's own recursion limit.
    old_limit = sys.getrecursionlimit()
    needed = 8 * MAX_DEPTH + old_limit
    sys.setrecursionlimit(max(old_limit, needed))
    try:
        root = p.parse_value(0)
    finally:
        sys.setrecursionlimit(old_limit)
    p.skip_ws()
    if p.pos < len(text):
        raise p.fail(ParseErrorKind.TRAILING, "content after top-level value")
    if jty_of(root) is not JTy.MAP:
        raise ParseError(
            ParseErrorKind.ROOT_NOT_OBJECT,
            root_offset,
            text,
            "top-level value must be an object",
        )
    return jdoc(root)


_ESCAPE_MAP = {
    '"': '\\"', "\\": "\\\\",
    "\b": "\\b", "\f": "\\f", "\n": "\\n", "\r": "\\r", "\t": "\\t",
}


def _escape(s: str) -> str:
    out = []
    for ch in s:
        if ch in _ESCAPE_MAP:
            out.append(_ESCAPE_MAP[ch])
        elif ord(ch) < 0x20:
            out.append("\\u%04x" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


def _format_number(value: float) -> str:
    return repr(value)


def _emit(d: JsonDoc, pretty: bool, indent: int, out: List[str]) -> None:
    pad = "  " * indent
    pad_in = "  " * (indent + 1)
    sep = ",\n" if pretty else ","
    colon = ": " if pretty else ":"
    if isinstance(d, JStr):
        out.append('"%s"' % _escape(d.text))
    elif isinstance(d, JNum):
        out.append(_format_number(d.value))
    elif isinstance(d, JBool):
        out.append("true" if d.value else "false")
    elif isinstance(d, JNull):
        out.append("null")
    elif isinstance(d, JArray):
        kids = tuple(d.children)
        if not kids:
            out.append("[]")
            return
        out.append("[\n" + pad_in if pretty else "[")
        for k, child in enumerate(kids):
            if k:
                out.append(sep + pad_in if pretty else sep)
            _emit(child, pretty, indent + 1, out)
        out.append("\n" + pad + "]" if pretty else "]")
    elif isinstance(d, JMap):
        entries = tuple(d.entries)
        if not entries:
            out.append("{}")
            return
        out.append("{\n" + pad_in if pretty else "{")
        for k, (key, value) in enumerate(entries):
            if k:
                out.append(sep + pad_in if pretty else sep)
            out.append('"%s"%s' % (_escape(key), colon))
            _emit(value, pretty, indent + 1, out)
        out.append("\n" + pad + "}" if pretty else "}")
    elif isinstance(d, JDoc):
        _emit(d.body, pretty, indent, out)
    else:
        raise TypeError("not a JSON document node: %r" % (d,))


def serialize(d: JsonDoc, pretty: bool = False) -> str:
    """Render a complete document as RFC 8259 text.

    Compact output carries no inter-token whitespace and is byte-deterministic
    for a given document; pretty output uses two-space indentation.
    """
    if not isinstance(d, JDoc):
        raise NotADocument("serialize requires a DOC node, got %r" % (d,))
    out: List[str] = []
    _emit(d, pretty, 0, out)
    return "".join(out)
