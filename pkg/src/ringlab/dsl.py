"""Ring-definition language: parse, build eagerly, pretty-print.

Grammar (whitespace-insensitive, ``#`` comments to end of line)::

    file  := stmt*
    stmt  := "ring" IDENT "=" expr
    expr  := "zmod" "(" INT ")"
           | "product" "(" IDENT ("," IDENT)+ ")"
           | "quotient" "(" IDENT "," "[" INT ("," INT)* "]" ")"
           | "table" "{" "n=" INT ";" "one=" INT ";"
                         "add=" INTLIST ";" "mul=" INTLIST "}"

INTLIST is a comma-separated row-major list of length n*n.  Definitions
may refer only to names defined earlier in the same script.  Rings are
constructed as soon as their statement is parsed, so table or constructor
errors surface with source positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DslSyntaxError,
    DuplicateName,
    RinglabError,
    UndefinedName,
)
from .rings import RingTable, make_product, make_quotient, make_table, make_zmod


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "int" | "punct" | "eof"
    text: str
    line: int
    column: int


_PUNCT = set("()[]{},=;")


def tokenize(text: str) -> list[Token]:
    tokens = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        raise DslSyntaxError(line, start_col, "a token", f"line {line}, column {start_col}: unexpected character {ch!r}")
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class RingScript:
    entries: tuple[tuple[str, RingTable], ...]

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]

    def get(self, name: str) -> RingTable:
        for n, ring in self.entries:
            if n == name:
                return ring
        raise UndefinedName(f"no ring named {name!r} in the script", name=name)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str) -> DslSyntaxError:
        tok = self.peek()
        got = tok.text or "end of input"
        return DslSyntaxError(
            tok.line,
            tok.column,
            expected,
            f"line {tok.line}, column {tok.column}: expected {expected}, got {got!r}",
        )

    def expect_punct(self, ch: str, expected: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != ch:
            raise self.fail(expected or f"'{ch}'")
        return self.next()

    def expect_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "ident" or tok.text != word:
            raise self.fail(f"'{word}'")
        return self.next()

    def expect_ident(self, expected="a name") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise self.fail(expected)
        return self.next()

    def expect_int(self, expected="an integer") -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise self.fail(expected)
        self.next()
        return int(tok.text)

    def int_list(self) -> list[int]:
        out = [self.expect_int()]
        while self.peek().kind == "punct" and self.peek().text == ",":
            self.next()
            out.append(self.expect_int())
        return out


def parse_ring_dsl(text: str) -> RingScript:
    parser = _Parser(tokenize(text))
    entries: list[tuple[str, RingTable]] = []
    byname: dict[str, RingTable] = {}

    def lookup(tok: Token) -> RingTable:
        if tok.text not in byname:
            raise UndefinedName(
                f"line {tok.line}: ring {tok.text!r} is not defined yet",
                name=tok.text,
                line=tok.line,
            )
        return byname[tok.text]

    while parser.peek().kind != "eof":
        stmt_tok = parser.expect_keyword("ring")
        name_tok = parser.expect_ident("a ring name")
        if name_tok.text in byname:
            raise DuplicateName(
                f"line {name_tok.line}: ring {name_tok.text!r} defined twice",
                name=name_tok.text,
                line=name_tok.line,
            )
        parser.expect_punct("=")
        head = parser.expect_ident("one of zmod, product, quotient, table")
        try:
            if head.text == "zmod":
                parser.expect_punct("(")
                n = parser.expect_int("a modulus")
                parser.expect_punct(")")
                ring = make_zmod(n, label=name_tok.text)
            elif head.text == "product":
                parser.expect_punct("(")
                factors = [lookup(parser.expect_ident("a ring name"))]
                parser.expect_punct(",", "',' and another ring name (product needs at least two)")
                factors.append(lookup(parser.expect_ident("a ring name")))
                while parser.peek().kind == "punct" and parser.peek().text == ",":
                    parser.next()
                    factors.append(lookup(parser.expect_ident("a ring name")))
                parser.expect_punct(")")
                ring = make_product(factors, label=name_tok.text)
            elif head.text == "quotient":
                parser.expect_punct("(")
                base = lookup(parser.expect_ident("a ring name"))
                parser.expect_punct(",")
                parser.expect_punct("[")
                coeffs = parser.int_list()
                parser.expect_punct("]")
                parser.expect_punct(")")
                ring = make_quotient(base, coeffs, label=name_tok.text)
            elif head.text == "table":
                parser.expect_punct("{")
                parser.expect_keyword("n")
                parser.expect_punct("=")
                size = parser.expect_int("the element count")
                parser.expect_punct(";")
                parser.expect_keyword("one")
                parser.expect_punct("=")
                one = parser.expect_int("the unity index")
                parser.expect_punct(";")
                parser.expect_keyword("add")
                parser.expect_punct("=")
                add_flat = parser.int_list()
                parser.expect_punct(";")
                parser.expect_keyword("mul")
                parser.expect_punct("=")
                mul_flat = parser.int_list()
                parser.expect_punct("}")
                if len(add_flat) != size * size or len(mul_flat) != size * size:
                    raise DslSyntaxError(
                        head.line,
                        head.column,
                        f"{size * size} entries in each table",
                        f"line {head.line}: table lists must have length n*n = {size * size}",
                    )
                add = [add_flat[i * size:(i + 1) * size] for i in range(size)]
                mul = [mul_flat[i * size:(i + 1) * size] for i in range(size)]
                ring = make_table(size, add, mul, one, label=name_tok.text)
            else:
                parser.pos -= 1
                raise parser.fail("one of zmod, product, quotient, table")
        except RinglabError as err:
            err.details.setdefault("line", stmt_tok.line)
            raise
        entries.append((name_tok.text, ring))
        byname[name_tok.text] = ring
    return RingScript(tuple(entries))


def print_ring_dsl(script: RingScript) -> str:
    """Canonical text form; reparsing yields table-identical rings."""
    lines = []
    for name, ring in script.entries:
        c = ring.construction
        if c.kind == "zmod":
            lines.append(f"ring {name} = zmod({c.n})")
        elif c.kind == "product":
            lines.append(f"ring {name} = product({', '.join(c.factors)})")
        elif c.kind == "quotient":
            coeffs = ", ".join(str(x) for x in c.poly)
            lines.append(f"ring {name} = quotient({c.base}, [{coeffs}])")
        else:
            flat_add = ", ".join(str(x) for row in ring.add for x in row)
            flat_mul = ", ".join(str(x) for row in ring.mul for x in row)
            lines.append(
                f"ring {name} = table {{ n={ring.size}; one={ring.one}; "
                f"add={flat_add}; mul={flat_mul} }}"
            )
    return "\n".join(lines) + "\n"
