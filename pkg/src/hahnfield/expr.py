"""Expression grammar and exact evaluator for the CLI and service.

Grammar (whitespace-insensitive, errors carry byte offsets)::

    expr    := term (('+'|'-') term)*
    term    := unary (('*'|'/') unary)*
    unary   := '-' unary | factor
    factor  := atom ('^' int)?
    atom    := int | 't' ('^' exponent)? | func '(' args ')' | '(' expr ')'
    func    := trunc | sp | v | lead | term | inv

Monomial exponents take parentheses — ``t^(1/2)``, ``t^((0, 1))`` or
``t^(0, 1)`` for lex groups — with bare integers ``t^3`` as sugar; a bare
``t`` means ``t^(1)``. Division routes through exact lazy inversion, so
results of expressions containing ``/`` may be lazy; the top-level
renderer truncates those at the display bound and marks the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import grid as grid_mod
from .coefficients import CoefficientField
from .errors import (
    EvalError,
    GridSearchLimitError,
    NotInvertibleError,
    ParseError,
    UnsupportedGroupError,
)
from .exponents import Exponent, ExponentGroup, ExponentOrInf, format_valuation
from .grid import GridSeries
from .series import FiniteSeries

FUNCTIONS = ("inv", "lead", "sp", "term", "trunc", "v")
_EXPONENT_ARG_FUNCS = ("trunc", "term")


# -- AST ----------------------------------------------------------------


@dataclass
class Node:
    pos: int
    end: int


@dataclass
class Num(Node):
    value: int


@dataclass
class Mono(Node):
    exponent: Exponent


@dataclass
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Neg(Node):
    operand: Node


@dataclass
class Pow(Node):
    base: Node
    power: int


@dataclass
class Call(Node):
    func: str
    arg: Node
    exp_arg: Optional[Exponent] = None


# -- parser -------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, group: ExponentGroup):
        self.text = text
        self.group = group
        self.i = 0

    def parse(self) -> Node:
        node = self.expr()
        self.skip()
        if self.i < len(self.text):
            raise ParseError(f"unexpected {self.text[self.i]!r}", self.i)
        return node

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.i]
            self.i += 1
            rhs = self.term()
            node = BinOp(node.pos, rhs.end, op, node, rhs)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.i]
            self.i += 1
            rhs = self.unary()
            node = BinOp(node.pos, rhs.end, op, node, rhs)
        return node

    def unary(self) -> Node:
        if self.peek() == "-":
            pos = self.i
            self.i += 1
            operand = self.unary()
            return Neg(pos, operand.end, operand)
        return self.factor()

    def factor(self) -> Node:
        node = self.atom()
        if self.peek() == "^":
            self.i += 1
            power = self.int_literal("power")
            node = Pow(node.pos, self.i, node, power)
        return node

    def int_literal(self, what: str) -> int:
        self.skip()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] in "+-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits:
            raise ParseError(f"expected integer {what}", start)
        return int(self.text[start:self.i])

    def atom(self) -> Node:
        ch = self.peek()
        pos = self.i
        if ch == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            node.pos, node.end = pos, self.i
            return node
        if ch.isdigit():
            value = self.int_literal("number")
            return Num(pos, self.i, value)
        if ch.isalpha():
            name = self.ident()
            if name == "t":
                return self.monomial(pos)
            if name in FUNCTIONS:
                return self.call(name, pos)
            raise ParseError(f"unknown function {name!r}", pos)
        raise ParseError("expected a number, 't', a function call or '('", pos)

    def ident(self) -> str:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isalpha():
            self.i += 1
        return self.text[start:self.i]

    def monomial(self, pos: int) -> Mono:
        if self.peek() != "^":
            return Mono(pos, self.i, self._default_exponent(pos))
        self.i += 1
        if self.peek() == "(":
            literal, at = self.balanced_literal()
            return Mono(pos, self.i, self.group.parse(literal, at))
        # bare-integer sugar: t^3, t^-1
        at = self.i
        value = self.int_literal("exponent")
        return Mono(pos, self.i, self.group.parse(str(value), at))

    def _default_exponent(self, pos: int) -> Exponent:
        if self.group.kind == "qlex":
            raise ParseError(
                f"bare 't' needs an explicit tuple exponent over {self.group.selector}", pos
            )
        return self.group.parse("1", pos)

    def balanced_literal(self) -> Tuple[str, int]:
        """Consume '(' ... ')' with nesting; return the inner text and its offset."""
        self.expect("(")
        start = self.i
        depth = 1
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    inner = self.text[start:self.i]
                    self.i += 1
                    return inner, start
            self.i += 1
        raise ParseError("unbalanced parentheses", start - 1)

    def call(self, name: str, pos: int) -> Call:
        self.expect("(")
        arg = self.expr()
        exp_arg = None
        if name in _EXPONENT_ARG_FUNCS:
            self.expect(",")
            exp_arg = self.exponent_argument()
        self.expect(")")
        return Call(pos, self.i, name, arg, exp_arg)

    def exponent_argument(self) -> Exponent:
        self.skip()
        at = self.i
        if self.peek() == "(":
            literal, at = self.balanced_literal()
            return self.group.parse(literal, at)
        depth = 0
        start = self.i
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch == "(":
                depth += 1
            elif ch == ")" and depth == 0:
                break
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                break
            self.i += 1
        return self.group.parse(self.text[start:self.i], at)


def parse_expression(text: str, group: ExponentGroup) -> Node:
    return _Parser(text, group).parse()


# -- evaluation ---------------------------------------------------------


@dataclass
class SupportValue:
    exponents: tuple


@dataclass
class ValuationValue:
    value: ExponentOrInf


SeriesValue = Union[FiniteSeries, GridSeries]
Value = Union[FiniteSeries, GridSeries, SupportValue, ValuationValue]


class _Evaluator:
    def __init__(self, text: str, group: ExponentGroup, field: CoefficientField):
        self.text = text
        self.group = group
        self.field = field

    def fragment(self, node: Node) -> str:
        return self.text[node.pos:node.end]

    def series_operand(self, node: Node, value: Value) -> SeriesValue:
        if isinstance(value, (FiniteSeries, GridSeries)):
            return value
        kind = "support set" if isinstance(value, SupportValue) else "valuation"
        raise EvalError(f"cannot use a {kind} as a series operand", self.fragment(node))

    def finite_operand(self, node: Node, value: Value, func: str) -> FiniteSeries:
        value = self.series_operand(node, value)
        if isinstance(value, GridSeries):
            raise EvalError(
                f"{func} needs an exact finite series; truncate the lazy "
                f"division result first, e.g. {func}(trunc(..., a)"
                + (", g)" if func in _EXPONENT_ARG_FUNCS else ")"),
                self.fragment(node),
            )
        return value

    def eval(self, node: Node) -> Value:
        if isinstance(node, Num):
            return FiniteSeries.constant(self.group, self.field.element(node.value))
        if isinstance(node, Mono):
            return FiniteSeries.monomial(node.exponent, self.field.one())
        if isinstance(node, Neg):
            return -self.series_operand(node.operand, self.eval(node.operand))
        if isinstance(node, BinOp):
            return self.binop(node)
        if isinstance(node, Pow):
            return self.power(node)
        if isinstance(node, Call):
            return self.callnode(node)
        raise EvalError(f"unhandled node {node!r}")

    def binop(self, node: BinOp) -> SeriesValue:
        left = self.series_operand(node.left, self.eval(node.left))
        right = self.series_operand(node.right, self.eval(node.right))
        if node.op == "/":
            return self.divide(node, left, right)
        if isinstance(left, GridSeries) or isinstance(right, GridSeries):
            left, right = grid_mod.lift(left), grid_mod.lift(right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right

    def invert_value(self, node: Node, value: SeriesValue) -> SeriesValue:
        if isinstance(value, FiniteSeries):
            if value.is_zero:
                raise EvalError("division by zero", self.fragment(node))
            if value.is_monomial():
                return value.invert_monomial()
            if not self.group.archimedean:
                raise EvalError(
                    f"only single-term divisors invert over the non-archimedean "
                    f"group {self.group.selector}",
                    self.fragment(node),
                )
        try:
            return grid_mod.invert(value)
        except ZeroDivisionError:
            raise EvalError("division by zero", self.fragment(node)) from None
        except (UnsupportedGroupError, GridSearchLimitError, NotInvertibleError) as exc:
            raise EvalError(str(exc), self.fragment(node)) from None

    def divide(self, node: BinOp, left: SeriesValue, right: SeriesValue) -> SeriesValue:
        inverse = self.invert_value(node.right, right)
        if isinstance(inverse, FiniteSeries) and isinstance(left, FiniteSeries):
            return left * inverse
        return grid_mod.lift(left) * grid_mod.lift(inverse)

    def power(self, node: Pow) -> SeriesValue:
        base = self.series_operand(node.base, self.eval(node.base))
        n = node.power
        if n < 0:
            base = self.invert_value(node.base, base)
            n = -n
        result: SeriesValue = FiniteSeries.one(self.group, self.field)
        for _ in range(n):
            if isinstance(result, GridSeries) or isinstance(base, GridSeries):
                result = grid_mod.lift(result) * grid_mod.lift(base)
            else:
                result = result * base
        return result

    def callnode(self, node: Call) -> Value:
        inner = self.eval(node.arg)
        if node.func == "inv":
            return self.invert_value(node.arg, self.series_operand(node.arg, inner))
        if node.func == "trunc":
            series = self.series_operand(node.arg, inner)
            if isinstance(series, GridSeries):
                return series.truncate_below(node.exp_arg)
            return series.truncate(node.exp_arg)
        if node.func == "sp":
            return SupportValue(self.finite_operand(node.arg, inner, "sp").support())
        if node.func == "v":
            return ValuationValue(self.finite_operand(node.arg, inner, "v").valuation())
        if node.func == "lead":
            return self.finite_operand(node.arg, inner, "lead").leading_term()
        if node.func == "term":
            return self.finite_operand(node.arg, inner, "term").term_at(node.exp_arg)
        raise EvalError(f"unknown function {node.func!r}")


def evaluate(text: str, group: ExponentGroup, field: CoefficientField) -> Value:
    node = parse_expression(text, group)
    return _Evaluator(text, group, field).eval(node)


# -- top-level rendering -------------------------------------------------


@dataclass
class EvalOutcome:
    kind: str  # "series" | "support" | "valuation"
    series: Optional[FiniteSeries] = None
    truncated_below: Optional[Exponent] = None
    support: Optional[tuple] = None
    valuation: Optional[ExponentOrInf] = None

    def text(self) -> str:
        if self.kind == "series":
            body = str(self.series)
            if self.truncated_below is not None:
                body += f" (truncated below {self.truncated_below})"
            return body
        if self.kind == "support":
            return "{" + ", ".join(str(e) for e in self.support) + "}"
        return format_valuation(self.valuation)

    def to_json_dict(self) -> dict:
        if self.kind == "series":
            data = self.series.to_json_dict()
            if self.truncated_below is not None:
                data["truncated_below"] = str(self.truncated_below)
            return data
        if self.kind == "support":
            return {"support": [str(e) for e in self.support]}
        return {"valuation": format_valuation(self.valuation)}


def finalize(value: Value, display_bound: Exponent) -> EvalOutcome:
    """Collapse an evaluation result for display: lazy series render as
    their truncation below the display bound, with an explicit marker."""
    if isinstance(value, FiniteSeries):
        return EvalOutcome("series", series=value)
    if isinstance(value, GridSeries):
        return EvalOutcome(
            "series",
            series=value.truncate_below(display_bound),
            truncated_below=display_bound,
        )
    if isinstance(value, SupportValue):
        return EvalOutcome("support", support=value.exponents)
    return EvalOutcome("valuation", valuation=value.value)
