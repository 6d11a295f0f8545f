"""Braces notation for games: parsing, elaboration, and printing.

The concrete syntax is the usual one: a game is a number (``3``,
``-3/4``), the star ``*``, or ``{`` comma-separated options ``|``
comma-separated options ``}``.  Whitespace is insignificant and either
option list may be empty.  Numbers must be dyadic; a denominator that is
not a power of two is rejected at parse time.

``parse_game`` produces a small expression tree, ``elaborate`` interns
it into an engine (numbers expand to their canonical trees), and the
formatters render positions back out.  ``format_value`` compacts
number-valued nodes to numerals and ``{0|0}`` to ``*``; canonical
strings round-trip through the parser to the identical position.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .engine import Engine
from .errors import GameParseError, NonDyadicDenominatorError
from .values import Dyadic


class ExprKind(Enum):
    NUMBER = "number"
    STAR = "star"
    BRACES = "braces"


@dataclass(frozen=True)
class GameExpr:
    """Parsed game expression.

    ``number`` is set for NUMBER nodes; ``left`` and ``right`` are set
    for BRACES nodes.
    """

    kind: ExprKind
    number: Dyadic | None = None
    left: tuple["GameExpr", ...] = ()
    right: tuple["GameExpr", ...] = ()

    @staticmethod
    def make_number(value: Dyadic) -> "GameExpr":
        return GameExpr(ExprKind.NUMBER, number=value)

    @staticmethod
    def make_star() -> "GameExpr":
        return GameExpr(ExprKind.STAR)

    @staticmethod
    def make_braces(
        left: tuple["GameExpr", ...], right: tuple["GameExpr", ...]
    ) -> "GameExpr":
        return GameExpr(ExprKind.BRACES, left=left, right=right)


class _TokenKind(Enum):
    LBRACE = "{"
    RBRACE = "}"
    PIPE = "|"
    COMMA = ","
    STAR = "*"
    MINUS = "-"
    SLASH = "/"
    INT = "integer"
    END = "end of input"


@dataclass(frozen=True)
class _Token:
    kind: _TokenKind
    text: str
    line: int
    column: int


_PUNCT = {
    "{": _TokenKind.LBRACE,
    "}": _TokenKind.RBRACE,
    "|": _TokenKind.PIPE,
    ",": _TokenKind.COMMA,
    "*": _TokenKind.STAR,
    "-": _TokenKind.MINUS,
    "/": _TokenKind.SLASH,
}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, line, column))
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            digits = text[start:i]
            tokens.append(_Token(_TokenKind.INT, digits, line, column))
            column += len(digits)
            continue
        raise GameParseError(
            "unexpected character %r" % ch, line=line, column=column
        )
    tokens.append(_Token(_TokenKind.END, "", line, column))
    return tokens


class _Parser:
    """Recursive descent over the token stream."""

    def __init__(self, tokens: list[_Token]) -> None:
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expect(self, kind: _TokenKind) -> _Token:
        tok = self._peek()
        if tok.kind is not kind:
            self._fail((kind,))
        return self._advance()

    def _fail(self, expected: tuple[_TokenKind, ...]) -> None:
        tok = self._peek()
        names = tuple(k.value for k in expected)
        got = tok.kind.value if tok.kind is _TokenKind.END else repr(tok.text)
        raise GameParseError(
            "unexpected %s" % got,
            line=tok.line,
            column=tok.column,
            expected=names,
        )

    def parse(self) -> GameExpr:
        expr = self._game()
        if self._peek().kind is not _TokenKind.END:
            self._fail((_TokenKind.END,))
        return expr

    _GAME_STARTS = (
        _TokenKind.INT,
        _TokenKind.MINUS,
        _TokenKind.STAR,
        _TokenKind.LBRACE,
    )

    def _game(self) -> GameExpr:
        tok = self._peek()
        if tok.kind is _TokenKind.STAR:
            self._advance()
            return GameExpr.make_star()
        if tok.kind is _TokenKind.LBRACE:
            return self._braces()
        if tok.kind in (_TokenKind.INT, _TokenKind.MINUS):
            return self._number()
        self._fail(self._GAME_STARTS)
        raise AssertionError("unreachable")

    def _number(self) -> GameExpr:
        negative = False
        if self._peek().kind is _TokenKind.MINUS:
            self._advance()
            negative = True
        head = self._expect(_TokenKind.INT)
        numerator = int(head.text)
        exponent = 0
        if self._peek().kind is _TokenKind.SLASH:
            self._advance()
            denom_tok = self._expect(_TokenKind.INT)
            denominator = int(denom_tok.text)
            if denominator <= 0 or denominator & (denominator - 1):
                raise NonDyadicDenominatorError(
                    "denominator %d is not a power of two" % denominator,
                    line=denom_tok.line,
                    column=denom_tok.column,
                )
            exponent = denominator.bit_length() - 1
        if negative:
            numerator = -numerator
        return GameExpr.make_number(Dyadic(numerator, exponent))

    def _braces(self) -> GameExpr:
        self._expect(_TokenKind.LBRACE)
        left = self._option_list((_TokenKind.PIPE,))
        self._expect(_TokenKind.PIPE)
        right = self._option_list((_TokenKind.RBRACE,))
        self._expect(_TokenKind.RBRACE)
        return GameExpr.make_braces(left, right)

    def _option_list(
        self, closers: tuple[_TokenKind, ...]
    ) -> tuple[GameExpr, ...]:
        tok = self._peek()
        if tok.kind in closers:
            return ()
        if tok.kind not in self._GAME_STARTS:
            self._fail(self._GAME_STARTS + closers)
        options = [self._game()]
        while self._peek().kind is _TokenKind.COMMA:
            self._advance()
            options.append(self._game())
        if self._peek().kind not in closers:
            self._fail((_TokenKind.COMMA,) + closers)
        return tuple(options)


def parse_game(text: str) -> GameExpr:
    """Parse braces notation into an expression tree.

    Raises GameParseError with the offending line and column, or
    NonDyadicDenominatorError for a denominator that is not a power of
    two.
    """
    return _Parser(_tokenize(text)).parse()


def elaborate(engine: Engine, expr: GameExpr) -> int:
    """Intern an expression tree, expanding numbers to canonical trees."""
    if expr.kind is ExprKind.NUMBER:
        return engine.number_position(expr.number)
    if expr.kind is ExprKind.STAR:
        return engine.star()
    left = tuple(elaborate(engine, child) for child in expr.left)
    right = tuple(elaborate(engine, child) for child in expr.right)
    return engine.intern(left, right)


def parse_position(engine: Engine, text: str) -> int:
    """Parse and intern in one step."""
    return elaborate(engine, parse_game(text))


def _render(engine: Engine, g: int, braces_at_top: bool) -> str:
    if not braces_at_top:
        number = engine.as_number(g)
        if number is not None and engine.number_position(number) == g:
            return str(number)
        if g == engine.star():
            return "*"
    left = ",".join(_render(engine, o, False) for o in engine.left_options(g))
    right = ",".join(
        _render(engine, o, False) for o in engine.right_options(g)
    )
    return "{%s|%s}" % (left, right)


def format_position(engine: Engine, g: int) -> str:
    """Render a position's tree compactly, without canonicalizing.

    Number trees print as numerals and {0|0} prints as ``*``; everything
    else prints in braces.
    """
    return _render(engine, g, False)


def format_value(engine: Engine, g: int) -> str:
    """Render the canonical form of ``g`` compactly."""
    return _render(engine, engine.canonical_form(g), False)


def format_canonical(engine: Engine, g: int) -> str:
    """Render the canonical form of ``g`` with the top level in braces.

    Nested options still print compactly, so the canonical form of 2
    renders as ``{1|}`` and that of ``*`` as ``{0|0}``.
    """
    return _render(engine, engine.canonical_form(g), True)
