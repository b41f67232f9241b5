"""Surface syntax for sheaves.

    sheaf  := atom ('+' atom)*  |  '0'
    atom   := factor ('#' factor)*
    factor := 'O(' int ')' | 'Om^' nat '(' int ')' | 'T^' nat '(' int ')'

Whitespace is ignored, '#' is the box product and the number of factors in
an atom must match the space. ``T^q(b)`` is rewritten as ``Om^(n-q)(n+1+b)``
while parsing.
"""
from __future__ import annotations

import re

from .bott import Factor
from .errors import DomainError, SheafSyntaxError
from .sheaves import Atom, SheafSum, Space, _factor_str

__all__ = ["parse_sheaf", "format_sheaf", "format_atom", "parse_space"]

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<word>Om|O|T)|(?P<sym>[\^()#+]))")


def _tokenize(src: str):
    text = src
    pos = 0
    tokens = []
    # offsets are reported in bytes, so track them separately from str indices
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            j = pos
            while text[j].isspace():
                j += 1
            raise SheafSyntaxError(f"unexpected character {text[j]!r}", len(text[:j].encode()))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    return tokens, len(text.encode())


class _Parser:
    def __init__(self, src: str, space: Space):
        self.tokens, self.end = _tokenize(src)
        self.i = 0
        self.space = space

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", self.end)

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[0] != "eof" else "end of input"
            raise SheafSyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def sheaf(self) -> SheafSum:
        tok = self.peek()
        if tok[0] == "int" and tok[1] == "0" and len(self.tokens) == 1:
            return SheafSum.zero(self.space)
        atoms = [self.atom()]
        while self.peek()[:2] == ("sym", "+"):
            self.i += 1
            atoms.append(self.atom())
        tok = self.peek()
        if tok[0] != "eof":
            raise SheafSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return SheafSum.of(self.space, atoms)

    def atom(self) -> Atom:
        raw = [self.factor()]
        while self.peek()[:2] == ("sym", "#"):
            self.i += 1
            raw.append(self.factor())
        if len(raw) != self.space.s:
            raise SheafSyntaxError(
                f"atom has {len(raw)} factors but the space has {self.space.s}",
                self.peek()[2],
            )
        factors = []
        for n, (kind, p, a, off) in zip(self.space.dims, raw):
            if not 0 <= p <= n:
                raise DomainError(f"exterior power {p} out of range for P^{n} (at offset {off})")
            factors.append(Factor.tangent(n, p, a) if kind == "T" else Factor(n, p, a))
        return Atom(factors)

    def factor(self):
        kind, word, off = self.take("word")
        p = 0
        if word != "O":
            self.take("sym", "^")
            _, digits, doff = self.take("int")
            if not digits.isdigit():
                raise SheafSyntaxError("exponent must be a natural number", doff)
            p = int(digits)
        self.take("sym", "(")
        _, a, _ = self.take("int")
        self.take("sym", ")")
        return (word, p, int(a), off)


def parse_sheaf(src: str, space: Space) -> SheafSum:
    return _Parser(src, space).sheaf()


def format_atom(atom: Atom) -> str:
    return "#".join(_factor_str(f) for f in atom)


def format_sheaf(S: SheafSum) -> str:
    if not S.terms:
        return "0"
    return " + ".join(format_atom(a) for a in S.atoms())


def parse_space(text: str) -> Space:
    try:
        dims = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise DomainError(f"cannot read space {text!r}; expected e.g. 1,2") from None
    return Space(dims)
