"""
Recursive-descent parser for the word grammar shared by every command.

    word      := factor (('*' | whitespace) factor)*
    factor    := atom ('^' integer)?
    atom      := generator | '1' | '(' word ')' | '[' word ',' word ']'

Free contexts spell generators ``x<i>``; tower contexts spell them ``g<i>.<p>``.
``[u, v]`` expands to ``u v u^-1 v^-1``. The parser returns raw, unreduced
``(symbol, exponent)`` pairs; reduction is the caller's business.
"""

import re
from typing import Any, Callable, List, Optional, Pattern, Tuple

from groups.errors import WordSyntaxError

RawLetter = Tuple[Any, int]

FREE_GENERATOR = re.compile(r"x(\d+)")
TOWER_GENERATOR = re.compile(r"g(\d+)\.(\d+)")
_INTEGER = re.compile(r"[+-]?\d+")


def invert_letters(letters: List[RawLetter]) -> List[RawLetter]:
    """Inverse of a raw letter sequence"""
    return [(symbol, -exponent) for symbol, exponent in reversed(letters)]


def power_letters(letters: List[RawLetter], exponent: int) -> List[RawLetter]:
    """k-th power of a raw letter sequence; negative k inverts first"""
    base = invert_letters(letters) if exponent < 0 else letters
    count = abs(exponent)
    if len(base) == 1 and count:
        symbol, step = base[0]
        return [(symbol, step * count)]
    return base * count


class WordParser:
    """Parses one word text into raw letters"""

    def __init__(self,
                 text: str,
                 generator: Pattern = FREE_GENERATOR,
                 make_symbol: Optional[Callable[[Tuple[str, ...]], Any]] = None,
                 check_symbol: Optional[Callable[[Any], Optional[str]]] = None):
        """
        Initialize the parser

        Args:
            text: Word text
            generator: Regex matching one generator; its groups feed make_symbol
            make_symbol: Builds a symbol from the regex groups (default: int of group 1)
            check_symbol: Returns an error message for unacceptable symbols, else None
        """
        self.text = text
        self.generator = generator
        self.make_symbol = make_symbol or (lambda groups: int(groups[0]))
        self.check_symbol = check_symbol
        self.pos = 0

    def parse(self) -> List[RawLetter]:
        self._skip_space()
        if self.pos >= len(self.text):
            self._fail("expected a word")
        letters = self._word()
        self._skip_space()
        if self.pos < len(self.text):
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return letters

    def _fail(self, message: str):
        raise WordSyntaxError(message, self.text, self.pos + 1)

    def _skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _starts_atom(self) -> bool:
        ch = self._peek()
        if ch in ("(", "[", "1"):
            return True
        return bool(ch) and self.generator.match(self.text, self.pos) is not None

    def _word(self) -> List[RawLetter]:
        letters = self._factor()
        while True:
            if self._peek() == "*":
                self.pos += 1
                if not self._starts_atom():
                    self._fail("expected a factor after '*'")
                letters += self._factor()
            elif self._starts_atom():
                letters += self._factor()
            else:
                return letters

    def _factor(self) -> List[RawLetter]:
        letters = self._atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip_space()
            match = _INTEGER.match(self.text, self.pos)
            if match is None:
                self._fail("expected an integer exponent")
            self.pos = match.end()
            letters = power_letters(letters, int(match.group(0)))
        return letters

    def _atom(self) -> List[RawLetter]:
        ch = self._peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            inner = self._word()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return inner
        if ch == "[":
            self.pos += 1
            left = self._word()
            if self._peek() != ",":
                self._fail("expected ',' inside commutator")
            self.pos += 1
            right = self._word()
            if self._peek() != "]":
                self._fail("expected ']'")
            self.pos += 1
            return left + right + invert_letters(left) + invert_letters(right)
        match = self.generator.match(self.text, self.pos)
        if match is not None:
            symbol = self.make_symbol(match.groups())
            if self.check_symbol is not None:
                problem = self.check_symbol(symbol)
                if problem:
                    raise WordSyntaxError(problem, self.text, start + 1)
            self.pos = match.end()
            return [(symbol, 1)]
        if ch == "1":
            self.pos += 1
            return []
        if not ch:
            self._fail("unexpected end of word")
        self._fail(f"unexpected character {ch!r}")


def parse_letters(text: str,
                  generator: Pattern = FREE_GENERATOR,
                  make_symbol: Optional[Callable[[Tuple[str, ...]], Any]] = None,
                  check_symbol: Optional[Callable[[Any], Optional[str]]] = None
                  ) -> List[RawLetter]:
    """Parse word text into raw (symbol, exponent) letters"""
    return WordParser(text, generator, make_symbol, check_symbol).parse()
