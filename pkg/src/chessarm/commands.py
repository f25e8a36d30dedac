"""Command language for the chess arm.

Grammar (keywords are case-insensitive, whitespace is free)::

    go to x <int>
    go to y <int>
    move to [<int> , <int>]
    move from [<int> , <int>] to [<int> , <int>]
    return to o
    grab
    release

A script holds one command per line; blank lines and lines starting with
``#`` are skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CommandSyntaxError


@dataclass(frozen=True)
class GoToX:
    x: int


@dataclass(frozen=True)
class GoToY:
    y: int


@dataclass(frozen=True)
class MoveTo:
    x: int
    y: int


@dataclass(frozen=True)
class MoveFrom:
    x: int
    y: int
    x1: int
    y1: int


@dataclass(frozen=True)
class ReturnToO:
    pass


@dataclass(frozen=True)
class Grab:
    pass


@dataclass(frozen=True)
class Release:
    pass


Command = GoToX | GoToY | MoveTo | MoveFrom | ReturnToO | Grab | Release

# Help strings shown by the REPL, one per query form.
QUERY_HELP = (
    ("go to x <col>", "Moves the arm to x position"),
    ("go to y <row>", "Moves the arm to y position"),
    ("move to [x, y]", "Moves the arm to x and y position"),
    ("move from [x, y] to [x1, y1]", "Moves an object from x , y to x1 , y1"),
    ("return to o", "Returns to its initial position"),
    ("grab", "Grabs the object with the gripper"),
    ("release", "Releases the gripper"),
)

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>-?\d+)|(?P<word>[A-Za-z]+)|(?P<punct>[\[\],])|(?P<bad>.)")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int  # character index


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        toks.append(_Tok(kind, m.group(), m.start()))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def _fail(self, expected):
        if self.i < len(self.toks):
            tok = self.toks[self.i]
            offset, found = len(self.text[: tok.pos].encode()), tok.text
        else:
            offset, found = len(self.text.encode()), None
        raise CommandSyntaxError(self.text, offset, expected, found)

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def keyword(self, *words):
        tok = self._peek()
        if tok is not None and tok.kind == "word" and tok.text.lower() in words:
            self.i += 1
            return tok.text.lower()
        self._fail(words)

    def punct(self, ch):
        tok = self._peek()
        if tok is not None and tok.text == ch:
            self.i += 1
            return
        self._fail((ch,))

    def integer(self):
        tok = self._peek()
        if tok is not None and tok.kind == "int":
            self.i += 1
            return int(tok.text)
        self._fail(("<int>",))

    def point(self):
        self.punct("[")
        x = self.integer()
        self.punct(",")
        y = self.integer()
        self.punct("]")
        return x, y

    def command(self):
        head = self.keyword("go", "move", "return", "grab", "release")
        if head == "go":
            self.keyword("to")
            axis = self.keyword("x", "y")
            value = self.integer()
            cmd = GoToX(value) if axis == "x" else GoToY(value)
        elif head == "move":
            if self.keyword("to", "from") == "to":
                cmd = MoveTo(*self.point())
            else:
                src = self.point()
                self.keyword("to")
                cmd = MoveFrom(*src, *self.point())
        elif head == "return":
            self.keyword("to")
            tok = self._peek()
            if tok is not None and tok.text in ("0",):
                self.i += 1
            else:
                self.keyword("o")
            cmd = ReturnToO()
        elif head == "grab":
            cmd = Grab()
        else:
            cmd = Release()
        if self._peek() is not None:
            self._fail(("end of input",))
        return cmd


def parse_command(text: str) -> Command:
    return _Parser(text).command()


def format_command(cmd: Command) -> str:
    """Normalized text that parses back to ``cmd``."""
    match cmd:
        case GoToX(x):
            return f"go to x {x}"
        case GoToY(y):
            return f"go to y {y}"
        case MoveTo(x, y):
            return f"move to [{x}, {y}]"
        case MoveFrom(x, y, x1, y1):
            return f"move from [{x}, {y}] to [{x1}, {y1}]"
        case ReturnToO():
            return "return to o"
        case Grab():
            return "grab"
        case Release():
            return "release"
    raise TypeError(f"not a command: {cmd!r}")


def is_blank(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def parse_script(text: str) -> list[tuple[int, Command]]:
    """Parse every command line; returns ``(line_number, command)`` pairs."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not is_blank(line):
            out.append((lineno, parse_command(line)))
    return out
