"""Text formats: polynomial expressions, ideal files and matrix literals.

Polynomial grammar (whitespace insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*        # '*' optional before a variable or '('
    factor := '-' factor | atom ['^' INT]
    atom   := INT ['/' INT] | VAR | '(' expr ')'

Ideal file::

    ring n 3 vars x1..x3 [projective]
    field q | field fp 32003
    <one generator per line>

Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import DEFAULT_PRIME, GF, QQ, Field, parse_field
from .poly import Polynomial, PolynomialRing, var_names


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass
class _Tok:
    kind: str  # num, var, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start() or (m.lastindex is None):
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(_Tok("num", num, start))
        elif name is not None:
            toks.append(_Tok("var", name, start))
        else:
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing, line_offset: int = 0):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0
        self.line_offset = line_offset

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        before = self.text[: tok.pos]
        line = before.count("\n") + 1 + self.line_offset
        col = tok.pos - (before.rfind("\n") + 1) + 1
        raise ParseError(msg, line, col)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            self.error("empty expression")
        f = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return f

    def expr(self) -> Polynomial:
        if self.accept("-"):
            acc = -self.term()
        else:
            self.accept("+")
            acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            tok = self.peek()
            if self.accept("*"):
                acc = acc * self.factor()
            elif tok.kind == "var" or (tok.kind == "op" and tok.text == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        if self.accept("-"):
            return -self.factor()
        base = self.atom()
        if self.accept("^"):
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                self.error("negative exponent")
            if tok.kind != "num":
                self.error("expected integer exponent")
            self.next()
            return base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok.kind == "num":
            num = int(tok.text)
            if self.accept("/"):
                den_tok = self.next()
                if den_tok.kind != "num":
                    self.error("expected integer denominator", den_tok)
                den = int(den_tok.text)
                if den == 0:
                    self.error("zero denominator", den_tok)
                try:
                    return self.ring.constant(self.ring.field.from_fraction(num, den))
                except ZeroDivisionError:
                    self.error("denominator vanishes in the coefficient field", den_tok)
            return self.ring.constant(num)
        if tok.kind == "var":
            if tok.text not in self.ring.names:
                self.error(f"unknown variable {tok.text!r}", tok)
            return self.ring.var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner
        if tok.kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Raises :class:`ParseError` carrying line/column on syntax errors,
    unknown variables and negative exponents.
    """
    return _Parser(text, ring, line_offset=line - 1).parse()


def affine_ring(n: int, field: Field = QQ) -> PolynomialRing:
    return PolynomialRing(var_names("x", 1, n), field)


def projective_ring(n: int, field: Field = QQ) -> PolynomialRing:
    return PolynomialRing(var_names("x", 0, n), field)


# ---------------------------------------------------------------------------
# ideal files
# ---------------------------------------------------------------------------

_RANGE = re.compile(r"^([A-Za-z_]+)(\d+)\.\.([A-Za-z_]+)?(\d+)$")


def _parse_vars(spec: str) -> tuple[str, ...]:
    m = _RANGE.match(spec)
    if m:
        prefix, lo, prefix2, hi = m.groups()
        if prefix2 and prefix2 != prefix:
            raise ValueError(f"bad variable range {spec!r}")
        return var_names(prefix, int(lo), int(hi))
    return tuple(v for v in spec.split(",") if v)


def _vars_text(names: Sequence[str]) -> str:
    m = re.match(r"^([A-Za-z_]+)(\d+)$", names[0]) if names else None
    if m:
        prefix, lo = m.group(1), int(m.group(2))
        if tuple(names) == var_names(prefix, lo, lo + len(names) - 1):
            return f"{prefix}{lo}..{prefix}{lo + len(names) - 1}"
    return ",".join(names)


@dataclass(frozen=True)
class IdealFile:
    ring: PolynomialRing
    projective: bool
    generators: tuple[Polynomial, ...]

    @property
    def n(self) -> int:
        return self.ring.nvars - 1 if self.projective else self.ring.nvars


def parse_ideal_file(text: str, field: Field | None = None) -> IdealFile:
    """Parse the ideal file format.

    ``field`` overrides the file's ``field`` line; with neither present the
    default prime field is used.
    """
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty ideal file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) < 5 or parts[0] != "ring" or parts[1] != "n" or parts[3] != "vars":
        raise ParseError("expected header 'ring n <count> vars <names> [projective]'", lineno)
    try:
        n = int(parts[2])
    except ValueError:
        raise ParseError(f"bad variable count {parts[2]!r}", lineno) from None
    projective = len(parts) > 5 and parts[5] == "projective"
    if len(parts) > 5 and not projective:
        raise ParseError(f"unexpected {parts[5]!r} in header", lineno)
    names = _parse_vars(parts[4])
    expected = n + 1 if projective else n
    if len(names) != expected:
        raise ParseError(f"declared {len(names)} variables, expected {expected}", lineno)
    body = lines[1:]
    file_field = None
    if body and body[0][1].split()[0] == "field":
        fl, ftext = body[0]
        try:
            file_field = parse_field(ftext.split(None, 1)[1] if len(ftext.split()) > 1 else "")
        except ValueError as exc:
            raise ParseError(str(exc), fl) from None
        body = body[1:]
    ring = PolynomialRing(names, field or file_field or GF(DEFAULT_PRIME))
    gens = []
    for ln, src in body:
        f = parse_polynomial(src, ring, line=ln)
        if projective and not f.is_homogeneous():
            raise ParseError(f"generator {src!r} is not homogeneous", ln)
        if not f.is_zero():
            gens.append(f)
    return IdealFile(ring, projective, tuple(gens))


def field_line(field: Field) -> str:
    return "field q" if not field.is_prime else f"field fp {field.characteristic}"


def render_ideal_file(ring: PolynomialRing, gens: Sequence[Polynomial], projective: bool) -> str:
    n = ring.nvars - 1 if projective else ring.nvars
    header = f"ring n {n} vars {_vars_text(ring.names)}"
    if projective:
        header += " projective"
    lines = [header, field_line(ring.field)]
    lines.extend(g.with_ring(ring).to_text() for g in gens)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix literals
# ---------------------------------------------------------------------------


def parse_matrix_rows(text: str) -> list[list[Fraction]]:
    """``"1,2;3/4,-1"`` -> rows of fractions."""
    rows = []
    for r, row in enumerate(text.strip().split(";")):
        entries = []
        for c, item in enumerate(row.split(",")):
            item = item.strip()
            try:
                entries.append(Fraction(item))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad matrix entry {item!r} (row {r + 1}, column {c + 1})") from None
        rows.append(entries)
    if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
        raise ParseError("matrix rows must be nonempty and of equal length")
    return rows
