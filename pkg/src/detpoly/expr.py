#!/usr/bin/env python3

"""
Polynomial expressions.

    expr     : expr '+' term | expr '-' term | term
    term     : term '*' factor | '-' term | factor
    factor   : base '^' NUMBER | base
    base     : NUMBER | RATIONAL | NAME | '(' expr ')'

'^' binds tighter than unary minus, which binds tighter than '*', which binds
tighter than '+' and '-'. Juxtaposition is not multiplication.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NoReturn as Never, Optional, Union

from ply import lex, yacc

from .exceptions import BadExponent, DivisionByZero, ExprSyntaxError, UndeclaredVariable
from .field import FieldSpec
from .poly import Polynomial, VarContext


@dataclass(frozen=True)
class Literal:
    value: Fraction
    line: int = field(default=1, compare=False)
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    line: int
    column: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Neg:
    operand: "ExprAST"


@dataclass(frozen=True)
class Pow:
    base: "ExprAST"
    exponent: int


@dataclass(frozen=True)
class Paren:
    inner: "ExprAST"


ExprAST = Union[Literal, Var, BinOp, Neg, Pow, Paren]


def _column(text: str, pos: int) -> int:
    return pos - text.rfind("\n", 0, pos)


class ExprParser:
    tokens = [
        "NUMBER",
        "RATIONAL",
        "NAME",
        "PLUS",
        "MINUS",
        "TIMES",
        "POW",
        "LPAREN",
        "RPAREN",
    ]

    t_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
    t_PLUS = r"\+"
    t_MINUS = r"-"
    t_TIMES = r"\*"
    t_POW = r"\^"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_ignore = " \t\r"

    # function rules are tried in definition order, before the string rules:
    # "3/2" must not lex as NUMBER followed by an illegal '/'
    def t_RATIONAL(self, t):
        r"\d+/\d+"
        return t

    def t_NUMBER(self, t):
        r"\d+"
        return t

    def t_newline(self, t):
        r"\n+"
        t.lexer.lineno += len(t.value)

    def t_error(self, t) -> Never:
        raise ExprSyntaxError(
            f"illegal character {t.value[0]!r}", t.lexer.lineno, _column(t.lexer.lexdata, t.lexpos)
        )

    def __init__(self) -> None:
        self.lexer = lex.lex(module=self)
        self.parser = self.make_parser()

    def parse(self, text: str) -> ExprAST:
        self.lexer.lineno = 1
        return self.parser.parse(text, lexer=self.lexer)

    def make_parser(self):
        tokens = self.tokens

        precedence = (
            ("left", "PLUS", "MINUS"),
            ("left", "TIMES"),
            ("right", "UMINUS"),
            ("right", "POW"),
        )

        def p_expr_binary(p):
            """
            expr : expr PLUS term
                 | expr MINUS term
            """
            p[0] = BinOp(p[2], p[1], p[3])

        def p_expr_term(p):
            """
            expr : term
            """
            p[0] = p[1]

        def p_term_times(p):
            """
            term : term TIMES factor
            """
            p[0] = BinOp("*", p[1], p[3])

        def p_term_neg(p):
            """
            term : MINUS term %prec UMINUS
            """
            p[0] = Neg(p[2])

        def p_term_factor(p):
            """
            term : factor
            """
            p[0] = p[1]

        def p_factor_pow(p):
            """
            factor : base POW exponent
            """
            p[0] = Pow(p[1], p[3])

        def p_factor_base(p):
            """
            factor : base
            """
            p[0] = p[1]

        def p_exponent(p):
            """
            exponent : NUMBER
            """
            p[0] = int(p[1])

        def p_exponent_bad(p):
            """
            exponent : MINUS NUMBER
                     | RATIONAL
                     | NAME
            """
            value = "".join(p[1:])
            raise BadExponent(
                f"exponent {value!r} is not a nonnegative integer",
                p.lineno(1),
                _column(self.lexer.lexdata, p.lexpos(1)),
            )

        def p_base_number(p):
            """
            base : NUMBER
                 | RATIONAL
            """
            column = _column(self.lexer.lexdata, p.lexpos(1))
            try:
                value = Fraction(p[1])
            except ZeroDivisionError:
                raise ExprSyntaxError(f"zero denominator in {p[1]!r}", p.lineno(1), column) from None
            p[0] = Literal(value, p.lineno(1), column)

        def p_base_name(p):
            """
            base : NAME
            """
            p[0] = Var(p[1], p.lineno(1), _column(self.lexer.lexdata, p.lexpos(1)))

        def p_base_paren(p):
            """
            base : LPAREN expr RPAREN
            """
            p[0] = Paren(p[2])

        def p_error(p) -> Never:
            if p is None:
                text = self.lexer.lexdata
                raise ExprSyntaxError(
                    "unexpected end of input", text.count("\n") + 1, _column(text, len(text))
                )
            raise ExprSyntaxError(
                f"unexpected {p.value!r}", p.lineno, _column(self.lexer.lexdata, p.lexpos)
            )

        return yacc.yacc(debug=False, write_tables=False, start="expr", errorlog=yacc.NullLogger())


_local = threading.local()


def _parser() -> ExprParser:
    # ply lexers and parsers keep state between calls; one instance per thread
    parser: Optional[ExprParser] = getattr(_local, "parser", None)
    if parser is None:
        parser = _local.parser = ExprParser()
    return parser


def parse_ast(text: str) -> ExprAST:
    if not text.strip():
        raise ExprSyntaxError("empty expression", 1, 1)
    return _parser().parse(text)


def build(node: ExprAST, ctx: VarContext, spec: FieldSpec) -> Polynomial:
    if isinstance(node, Literal):
        try:
            return Polynomial.constant(ctx, spec, node.value)
        except DivisionByZero:
            raise ExprSyntaxError(
                f"denominator of {node.value} vanishes in characteristic {spec.characteristic}", node.line, node.column
            ) from None
    if isinstance(node, Var):
        if node.name not in ctx:
            raise UndeclaredVariable(
                f"undeclared variable {node.name!r}; declared: {', '.join(ctx.names)}", node.line, node.column
            )
        return Polynomial.variable(ctx, spec, node.name)
    if isinstance(node, BinOp):
        left, right = build(node.left, ctx, spec), build(node.right, ctx, spec)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, Neg):
        return -build(node.operand, ctx, spec)
    if isinstance(node, Pow):
        return build(node.base, ctx, spec) ** node.exponent
    return build(node.inner, ctx, spec)


def parse(text: str, ctx: VarContext, spec: FieldSpec) -> Polynomial:
    return build(parse_ast(text), ctx, spec)


def parse_list(text: str, ctx: VarContext, spec: FieldSpec, sep: str = ";") -> List[Polynomial]:
    pieces = text.split(sep)
    if any(not piece.strip() for piece in pieces):
        raise ExprSyntaxError(f"empty entry in {sep!r}-separated list {text!r}")
    return [parse(piece, ctx, spec) for piece in pieces]


def _monomial(names, exps) -> str:
    return "*".join(name if x == 1 else f"{name}^{x}" for name, x in zip(names, exps) if x)


def format_polynomial(p: Polynomial) -> str:
    """Terms in the context's order, e.g. "-x1 + 3/2*x2^2 - 1"."""
    if p.is_zero:
        return "0"
    names = p.context.names
    out = []
    for i, (exps, c) in enumerate(p.raw_terms):
        negative = p.spec.is_rationals and c < 0
        magnitude = -c if negative else c
        mono = _monomial(names, exps)
        if not mono:
            term = str(magnitude)
        elif magnitude == 1:
            term = mono
        else:
            term = f"{magnitude}*{mono}"
        if i == 0:
            out.append(f"-{term}" if negative else term)
        else:
            out.append(f" - {term}" if negative else f" + {term}")
    return "".join(out)
