"""Words over a generator alphabet.

A Word is a sequence of (generator, exponent) pairs with nonzero exponents and
no two consecutive pairs sharing a generator (free reduction at the syllable
level is applied on construction). Words are the universal currency of the
tool: every group variant consumes and produces them.

Grammar accepted by :func:`parse_word` (documented bit-exactly in the CLI):

    word := term (('*')? term)*
    term := atom ('^' integer)?
    atom := identifier | '(' word ')' | '[' word ',' word ']'

Identifiers are ``[A-Za-z][A-Za-z0-9_]*``. Juxtaposition is product; when an
alphabet of single-character generators is supplied, a multi-character
identifier that is not itself a generator is split into single letters, so
``ab`` means ``a*b``. ``[u,v]`` is the commutator u v u^-1 v^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

Syllable = tuple[str, int]


def _reduce(pairs: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A free word: syllables are merged and zero exponents dropped."""

    syllables: tuple[Syllable, ...] = ()

    @staticmethod
    def from_pairs(pairs: Iterable[Syllable]) -> "Word":
        return Word(_reduce(pairs))

    @staticmethod
    def gen(name: str, exp: int = 1) -> "Word":
        return Word.from_pairs([(name, exp)])

    @staticmethod
    def identity() -> "Word":
        return Word()

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if not self.syllables:
            return other
        if not other.syllables:
            return self
        return Word.from_pairs(self.syllables + other.syllables)

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else ~self
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __len__(self) -> int:
        """Letter length: sum of |exponent|."""
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def letters(self) -> Iterator[tuple[str, int]]:
        """Yield (generator, +-1) letter by letter."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.syllables if g == gen)

    def conjugate_by(self, t: "Word") -> "Word":
        """t^-1 * self * t."""
        return ~t * self * t

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for gen, exp in self.syllables:
            parts.append(gen if exp == 1 else f"{gen}^{exp}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def sort_key(self) -> tuple:
        """ShortLex key: letter length first, then the letter sequence.

        Inverse letters compare after positive ones of the same generator.
        """
        return (len(self), tuple((g, 0 if s > 0 else 1) for g, s in self.letters()))


def commutator(u: Word, v: Word) -> Word:
    return u * v * ~u * ~v


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[\^*()\[\],]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character", position=pos, token=text[pos])
        if m.lastgroup is None or m.group(m.lastgroup) is None:
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _WordParser:
    def __init__(self, tokens: Sequence[tuple[str, str, int]], alphabet: Sequence[str] | None):
        self.tokens = tokens
        self.i = 0
        self.alphabet = set(alphabet) if alphabet is not None else None

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", position=None, token=None)
        self.i += 1
        return tok

    def parse_word(self) -> Word:
        result = Word()
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "sym" and tok[1] in ")],"):
                return result
            if tok[0] == "sym" and tok[1] == "*":
                self.take()
                continue
            result = result * self.parse_term()

    def parse_term(self) -> Word:
        atom = self.parse_atom()
        tok = self.peek()
        if tok is not None and tok[0] == "sym" and tok[1] == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "int":
                raise ParseError("exponent must be an integer", position=exp_tok[2], token=exp_tok[1])
            return atom ** int(exp_tok[1])
        return atom

    def parse_atom(self) -> Word:
        tok = self.take()
        kind, text, pos = tok
        if kind == "ident":
            return self._ident_word(text, pos)
        if kind == "sym" and text == "(":
            inner = self.parse_word()
            close = self.take()
            if close[:2] != ("sym", ")"):
                raise ParseError("expected ')'", position=close[2], token=close[1])
            return inner
        if kind == "sym" and text == "[":
            left = self.parse_word()
            comma = self.take()
            if comma[:2] != ("sym", ","):
                raise ParseError("expected ',' in commutator", position=comma[2], token=comma[1])
            right = self.parse_word()
            close = self.take()
            if close[:2] != ("sym", "]"):
                raise ParseError("expected ']'", position=close[2], token=close[1])
            return commutator(left, right)
        raise ParseError("expected generator, '(' or '['", position=pos, token=text)

    def _ident_word(self, text: str, pos: int) -> Word:
        if self.alphabet is None or text in self.alphabet:
            return Word.gen(text)
        # Juxtaposition convenience: split into single-character generators.
        if all(ch in self.alphabet for ch in text):
            w = Word()
            for ch in text:
                w = w * Word.gen(ch)
            return w
        raise ParseError("unknown generator", position=pos, token=text)


def parse_word(text: str, alphabet: Sequence[str] | None = None) -> Word:
    """Parse the word grammar; alphabet enables juxtaposition splitting."""
    text = text.strip()
    if text in ("", "1"):
        return Word()
    parser = _WordParser(_tokenize(text), alphabet)
    word = parser.parse_word()
    if parser.i != len(parser.tokens):
        kind, tok, pos = parser.tokens[parser.i]
        raise ParseError("trailing input", position=pos, token=tok)
    return word
