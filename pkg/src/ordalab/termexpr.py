"""Tiny expression language for sequence terms.

One fixed grammar serves every registered structure: rational arithmetic
plus the index variable `n`, natural-number exponents, `pow(expr, n)` for
index-dependent powers, and named constants a structure registers (for
example `X` in the rational-function field).  Evaluation is exact and goes
through the structure handle, so the same source text denotes a sequence
in any carrier that can interpret it.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' (natural | 'n'))?
    atom   := integer | 'n' | 'pow' '(' expr ',' 'n' ')' | '(' expr ')' | symbol

'+'/'-' and '*'/'/' associate left; '^' binds tightest and does not chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .order import StructureHandle, nat_pow
from .sequences import Seq

Element = Any


class TermError(ValueError):
    """Syntax error with a 1-based source column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class EvalError(ValueError):
    """Runtime evaluation failure (bad symbol, division by zero, ...)."""


# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Index:
    pass


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class SubExpr:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class PowNat:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class PowIndex:
    base: "Node"


Node = Union[Lit, Index, Sym, Add, SubExpr, Mul, Div, PowNat, PowIndex]


# ---------------------------------------------------------------------------
# lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | one of "+-*/^(),", or "end"
    text: str
    column: int


_OPS = set("+-*/^(),")


def _lex(src: str) -> list[_Token]:
    out: list[_Token] = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
            continue
        col = i + 1
        if c.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(_Token("int", src[i:j], col))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(_Token("name", src[i:j], col))
            i = j
        elif c in _OPS:
            out.append(_Token(c, c, col))
            i += 1
        else:
            raise TermError(f"unexpected character {c!r}", col)
    out.append(_Token("end", "", len(src) + 1))
    return out


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise TermError(f"expected {what}, got {got}", t.column)
        return self.take()

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else SubExpr(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            node = Mul(node, rhs) if op.kind == "*" else Div(node, rhs)
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek().kind == "^":
            self.take()
            t = self.peek()
            if t.kind == "int":
                self.take()
                return PowNat(node, int(t.text))
            if t.kind == "name" and t.text == "n":
                self.take()
                return PowIndex(node)
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise TermError(f"exponent must be a natural number or n, got {got}", t.column)
        return node

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "int":
            self.take()
            return Lit(int(t.text))
        if t.kind == "name":
            self.take()
            if t.text == "n":
                return Index()
            if t.text == "pow":
                self.expect("(", "'(' after pow")
                base = self.expr()
                self.expect(",", "',' in pow(base, n)")
                idx = self.expect("name", "the index variable n")
                if idx.text != "n":
                    raise TermError("pow's second argument must be n", idx.column)
                self.expect(")", "')'")
                return PowIndex(base)
            return Sym(t.text)
        if t.kind == "(":
            self.take()
            node = self.expr()
            self.expect(")", "')'")
            return node
        got = repr(t.text) if t.kind != "end" else "end of input"
        raise TermError(f"expected a value, got {got}", t.column)


def parse_term_expr(src: str) -> Node:
    """Parse source text into an AST; TermError carries the failing column."""
    p = _Parser(_lex(src))
    node = p.expr()
    tail = p.peek()
    if tail.kind != "end":
        raise TermError(f"unexpected trailing input {tail.text!r}", tail.column)
    return node


# ---------------------------------------------------------------------------
# pretty printer (parse . pretty == identity on ASTs)

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4


def _render(node: Node, level: int) -> str:
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Index):
        return "n"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, (Add, SubExpr)):
        op = "+" if isinstance(node, Add) else "-"
        text = f"{_render(node.left, _LEVEL_ADD)}{op}{_render(node.right, _LEVEL_ADD + 1)}"
        own = _LEVEL_ADD
    elif isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        text = f"{_render(node.left, _LEVEL_MUL)}{op}{_render(node.right, _LEVEL_MUL + 1)}"
        own = _LEVEL_MUL
    elif isinstance(node, PowNat):
        text = f"{_render(node.base, _LEVEL_ATOM)}^{node.exponent}"
        own = _LEVEL_POW
    elif isinstance(node, PowIndex):
        text = f"{_render(node.base, _LEVEL_ATOM)}^n"
        own = _LEVEL_POW
    else:
        raise TypeError(f"not a term node: {node!r}")
    return f"({text})" if own < level else text


def pretty(node: Node) -> str:
    return _render(node, _LEVEL_ADD)


# ---------------------------------------------------------------------------
# evaluation


def eval_term(node: Node, handle: StructureHandle, n: int) -> Element:
    """Evaluate at index n >= 1, exactly, through the structure handle."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index must be a positive integer, got {n!r}")

    def as_element(q: Fraction) -> Element:
        if handle.from_rational is None:
            raise EvalError(f"{handle.name} cannot interpret rational literals")
        return handle.from_rational(q)

    def go(node: Node) -> Element:
        if isinstance(node, Lit):
            return as_element(Fraction(node.value))
        if isinstance(node, Index):
            return as_element(Fraction(n))
        if isinstance(node, Sym):
            try:
                return handle.symbols[node.name]
            except KeyError:
                raise EvalError(
                    f"{handle.name} does not define the symbol {node.name!r}"
                ) from None
        if isinstance(node, Add):
            return handle.op(go(node.left), go(node.right))
        if isinstance(node, SubExpr):
            if handle.negate is None:
                raise EvalError(f"{handle.name} has no subtraction")
            return handle.sub(go(node.left), go(node.right))
        if isinstance(node, Mul):
            if handle.second_op is None:
                raise EvalError(f"{handle.name} has no multiplication")
            return handle.mul(go(node.left), go(node.right))
        if isinstance(node, Div):
            if handle.second_op is None or handle.invert is None:
                raise EvalError(f"{handle.name} has no division")
            den = go(node.right)
            if handle.eq(den, handle.identity):
                raise EvalError(f"division by zero at n={n}")
            return handle.mul(go(node.left), handle.invert(den))
        if isinstance(node, PowNat):
            return nat_pow(handle, go(node.base), node.exponent)
        if isinstance(node, PowIndex):
            return nat_pow(handle, go(node.base), n)
        raise TypeError(f"not a term node: {node!r}")

    return go(node)


def seq_from_expr(src: str, handle: StructureHandle) -> Seq:
    """Compile source text to a 1-indexed sequence over the structure."""
    ast = parse_term_expr(src)
    text = pretty(ast)
    return Seq(text, lambda n: eval_term(ast, handle, n))
