"""Position-tracking JSON reader.

The standard library parser discards source positions, which makes
diagnostics like "signals[2].kind: unknown energy subkind" impossible to
anchor to a line and column.  This module parses the JSON grammar by hand
and returns a node tree in which every value and every object key knows
where it started (1-based line and column).

Deviations from stdlib behaviour, all deliberate:
  * duplicate object keys are collected as errors instead of silently
    keeping the last value (the first value wins so reading can continue);
  * NaN / Infinity literals are rejected;
  * nesting is capped so hostile input cannot exhaust the stack.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_DEPTH = 64

_WHITESPACE = " \t\n\r"
_ESCAPES = {
    '"': '"',
    "\\": "\\",
    "/": "/",
    "b": "\b",
    "f": "\f",
    "n": "\n",
    "r": "\r",
    "t": "\t",
}


class JsonSyntaxError(Exception):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True, slots=True)
class Node:
    line: int
    column: int


@dataclass(frozen=True, slots=True)
class JString(Node):
    value: str


@dataclass(frozen=True, slots=True)
class JNumber(Node):
    value: float
    is_integer: bool


@dataclass(frozen=True, slots=True)
class JBool(Node):
    value: bool


@dataclass(frozen=True, slots=True)
class JNull(Node):
    pass


@dataclass(frozen=True, slots=True)
class JArray(Node):
    items: tuple[Node, ...]


@dataclass(frozen=True, slots=True)
class Member:
    key: str
    key_line: int
    key_column: int
    value: Node


@dataclass(frozen=True, slots=True)
class JObject(Node):
    members: tuple[Member, ...]

    def get(self, key: str) -> Node | None:
        for m in self.members:
            if m.key == key:
                return m.value
        return None

    def member(self, key: str) -> Member | None:
        for m in self.members:
            if m.key == key:
                return m
        return None

    def keys(self) -> tuple[str, ...]:
        return tuple(m.key for m in self.members)


@dataclass(frozen=True, slots=True)
class DuplicateKey:
    key: str
    line: int
    column: int
    path: str


def render_path(stack: list[str | int]) -> str:
    out = ""
    for part in stack:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out = f"{out}.{part}" if out else part
    return out


@dataclass
class _Reader:
    text: str
    pos: int = 0
    line: int = 1
    column: int = 1
    duplicates: list[DuplicateKey] = field(default_factory=list)
    stack: list = field(default_factory=list)

    def error(self, message: str, line: int | None = None, column: int | None = None):
        raise JsonSyntaxError(
            message,
            self.line if line is None else line,
            self.column if column is None else column,
        )

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos >= len(self.text):
                return
            if self.text[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def skip_ws(self) -> None:
        while self.peek() in _WHITESPACE and self.peek():
            self.advance()

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self.advance()

    # -- values ------------------------------------------------------------

    def read_value(self, depth: int) -> Node:
        if depth > MAX_DEPTH:
            self.error(f"nesting deeper than {MAX_DEPTH} levels")
        self.skip_ws()
        ch = self.peek()
        if ch == "":
            self.error("unexpected end of input")
        if ch == "{":
            return self.read_object(depth)
        if ch == "[":
            return self.read_array(depth)
        if ch == '"':
            return self.read_string()
        if ch == "-" or ch.isdigit():
            return self.read_number()
        if ch.isalpha():
            return self.read_keyword()
        self.error(f"unexpected character {ch!r}")

    def read_keyword(self) -> Node:
        line, col = self.line, self.column
        start = self.pos
        while self.peek().isalpha():
            self.advance()
        word = self.text[start : self.pos]
        if word == "true":
            return JBool(line, col, True)
        if word == "false":
            return JBool(line, col, False)
        if word == "null":
            return JNull(line, col)
        self.error(f"unexpected token {word!r}", line, col)

    def read_string(self) -> JString:
        line, col = self.line, self.column
        self.advance()  # opening quote
        parts: list[str] = []
        while True:
            ch = self.peek()
            if ch == "":
                self.error("unterminated string", line, col)
            if ch == '"':
                self.advance()
                return JString(line, col, "".join(parts))
            if ch == "\\":
                self.advance()
                esc = self.peek()
                if esc in _ESCAPES:
                    parts.append(_ESCAPES[esc])
                    self.advance()
                elif esc == "u":
                    self.advance()
                    parts.append(self._read_unicode_escape(line, col))
                else:
                    self.error(f"invalid escape '\\{esc}'")
            elif ord(ch) < 0x20:
                self.error("raw control character in string")
            else:
                parts.append(ch)
                self.advance()

    def _read_unicode_escape(self, sline: int, scol: int) -> str:
        def hex4() -> int:
            digits = self.text[self.pos : self.pos + 4]
            if len(digits) < 4 or any(c not in "0123456789abcdefABCDEF" for c in digits):
                self.error("invalid \\u escape")
            self.advance(4)
            return int(digits, 16)

        code = hex4()
        if 0xD800 <= code <= 0xDBFF and self.text[self.pos : self.pos + 2] == "\\u":
            self.advance(2)
            low = hex4()
            if 0xDC00 <= low <= 0xDFFF:
                code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00)
            else:
                return chr(code) + chr(low)
        return chr(code)

    def read_number(self) -> JNumber:
        line, col = self.line, self.column
        start = self.pos
        if self.peek() == "-":
            self.advance()
        if self.peek() == "0":
            self.advance()
            if self.peek().isdigit():
                self.error("leading zeros are not allowed", line, col)
        elif self.peek().isdigit():
            while self.peek().isdigit():
                self.advance()
        else:
            self.error("invalid number", line, col)
        is_integer = True
        if self.peek() == ".":
            is_integer = False
            self.advance()
            if not self.peek().isdigit():
                self.error("digit expected after decimal point")
            while self.peek().isdigit():
                self.advance()
        if self.peek() in "eE":
            is_integer = False
            self.advance()
            if self.peek() in "+-":
                self.advance()
            if not self.peek().isdigit():
                self.error("digit expected in exponent")
            while self.peek().isdigit():
                self.advance()
        literal = self.text[start : self.pos]
        return JNumber(line, col, float(literal), is_integer)

    def read_array(self, depth: int) -> JArray:
        line, col = self.line, self.column
        self.advance()
        items: list[Node] = []
        self.skip_ws()
        if self.peek() == "]":
            self.advance()
            return JArray(line, col, ())
        while True:
            self.stack.append(len(items))
            items.append(self.read_value(depth + 1))
            self.stack.pop()
            self.skip_ws()
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("]")
            return JArray(line, col, tuple(items))

    def read_object(self, depth: int) -> JObject:
        line, col = self.line, self.column
        self.advance()
        members: list[Member] = []
        seen: set[str] = set()
        self.skip_ws()
        if self.peek() == "}":
            self.advance()
            return JObject(line, col, ())
        while True:
            self.skip_ws()
            if self.peek() != '"':
                got = repr(self.peek()) if self.peek() else "end of input"
                self.error(f"expected string key, found {got}")
            key = self.read_string()
            self.skip_ws()
            self.expect(":")
            self.stack.append(key.value)
            value = self.read_value(depth + 1)
            self.stack.pop()
            if key.value in seen:
                # first occurrence wins; the clash is reported, not fatal
                self.duplicates.append(
                    DuplicateKey(
                        key.value,
                        key.line,
                        key.column,
                        render_path(self.stack + [key.value]),
                    )
                )
            else:
                seen.add(key.value)
                members.append(Member(key.value, key.line, key.column, value))
            self.skip_ws()
            if self.peek() == ",":
                self.advance()
                continue
            self.expect("}")
            return JObject(line, col, tuple(members))


def parse_json(text: str) -> tuple[Node, list[DuplicateKey]]:
    """Parse one JSON document; raises JsonSyntaxError on malformed input."""
    reader = _Reader(text)
    if reader.peek() == "﻿":
        reader.advance()
    root = reader.read_value(0)
    reader.skip_ws()
    if reader.pos != len(reader.text):
        reader.error("trailing data after document")
    return root, reader.duplicates
