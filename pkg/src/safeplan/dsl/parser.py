"""Recursive-descent parser for the plan language.

Grammar (normative):

    program := (NEWLINE | stmt)*
    stmt    := simple NEWLINE | compound
    simple  := assign | expr | "break"
    assign  := NAME "=" expr
    compound:= "for" NAME "in" expr ":" block
             | "if" expr ":" block ("elif" expr ":" block)* ("else" ":" block)?
    block   := NEWLINE INDENT stmt+ DEDENT

Expression precedence, loosest first:
    or < and < not < comparison/membership < + - < * / < unary - < index/call

Comparisons do not chain; ``a < b < c`` is a syntax error.
"""

from __future__ import annotations

from ..errors import ParseError
from .lexer import Token, tokenize
from .nodes import (
    Assign, BinOp, Break, Call, Comprehension, ExprStmt, For, If, Index,
    ListLit, Literal, Membership, Name, Program, UnaryOp,
)

_COMPARISON_OPS = ("==", "!=", "<", "<=", ">", ">=")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        if self.cur.kind != kind:
            self.fail(kind)
        return self.advance()

    def fail(self, *expected: str):
        tok = self.cur
        wanted = " or ".join(expected)
        got = tok.kind if tok.kind != "NAME" else f"name {tok.value!r}"
        raise ParseError(f"expected {wanted}, found {got}", tok.line, tok.col)

    # --- statements ---------------------------------------------------

    def program(self) -> Program:
        stmts = []
        while self.cur.kind != "EOF":
            if self.cur.kind == "NEWLINE":
                self.advance()
                continue
            stmts.append(self.statement())
        return Program(stmts)

    def statement(self):
        kind = self.cur.kind
        if kind == "for":
            return self.for_stmt()
        if kind == "if":
            return self.if_stmt()
        if kind == "break":
            self.advance()
            self.expect("NEWLINE")
            return Break()
        if kind == "NAME" and self.peek().kind == "=":
            name = self.advance().value
            self.advance()  # "="
            expr = self.expression()
            self.expect("NEWLINE")
            return Assign(name, expr)
        expr = self.expression()
        self.expect("NEWLINE")
        return ExprStmt(expr)

    def for_stmt(self) -> For:
        self.advance()
        var = self.expect("NAME").value
        self.expect("in")
        iterable = self.expression()
        self.expect(":")
        return For(var, iterable, self.block())

    def if_stmt(self) -> If:
        self.advance()
        cond = self.expression()
        self.expect(":")
        arms = [(cond, self.block())]
        else_body = None
        while self.cur.kind == "elif":
            self.advance()
            cond = self.expression()
            self.expect(":")
            arms.append((cond, self.block()))
        if self.cur.kind == "else":
            self.advance()
            self.expect(":")
            else_body = self.block()
        return If(arms, else_body)

    def block(self) -> list:
        self.expect("NEWLINE")
        self.expect("INDENT")
        stmts = [self.statement()]
        while self.cur.kind not in ("DEDENT", "EOF"):
            stmts.append(self.statement())
        self.expect("DEDENT")
        return stmts

    # --- expressions --------------------------------------------------

    def expression(self):
        return self.or_expr()

    def or_expr(self):
        left = self.and_expr()
        while self.cur.kind == "or":
            self.advance()
            left = BinOp("or", left, self.and_expr())
        return left

    def and_expr(self):
        left = self.not_expr()
        while self.cur.kind == "and":
            self.advance()
            left = BinOp("and", left, self.not_expr())
        return left

    def not_expr(self):
        if self.cur.kind == "not" and self.peek().kind != "in":
            self.advance()
            return UnaryOp("not", self.not_expr())
        return self.comparison()

    def comparison(self):
        left = self.additive()
        kind = self.cur.kind
        if kind in _COMPARISON_OPS:
            op = self.advance().kind
            right = self.additive()
            node = BinOp(op, left, right)
        elif kind == "in":
            self.advance()
            node = Membership(left, self.additive(), negated=False)
        elif kind == "not" and self.peek().kind == "in":
            self.advance()
            self.advance()
            node = Membership(left, self.additive(), negated=True)
        else:
            return left
        if self.cur.kind in _COMPARISON_OPS or self.cur.kind == "in":
            self.fail("NEWLINE (comparisons do not chain)")
        return node

    def additive(self):
        left = self.multiplicative()
        while self.cur.kind in ("+", "-"):
            op = self.advance().kind
            left = BinOp(op, left, self.multiplicative())
        return left

    def multiplicative(self):
        left = self.unary()
        while self.cur.kind in ("*", "/"):
            op = self.advance().kind
            left = BinOp(op, left, self.unary())
        return left

    def unary(self):
        if self.cur.kind == "-":
            self.advance()
            return UnaryOp("-", self.unary())
        return self.postfix()

    def postfix(self):
        node = self.atom()
        while True:
            if self.cur.kind == "(":
                if not isinstance(node, Name):
                    self.fail("a named function before '('")
                self.advance()
                args = []
                if self.cur.kind != ")":
                    args.append(self.expression())
                    while self.cur.kind == ",":
                        self.advance()
                        args.append(self.expression())
                self.expect(")")
                node = Call(node.id, args)
            elif self.cur.kind == "[":
                self.advance()
                index = self.expression()
                self.expect("]")
                node = Index(node, index)
            else:
                return node

    def atom(self):
        tok = self.cur
        if tok.kind == "NAME":
            self.advance()
            return Name(tok.value)
        if tok.kind == "NUMBER":
            self.advance()
            return Literal(float(tok.value))
        if tok.kind == "STRING":
            self.advance()
            return Literal(tok.value)
        if tok.kind in ("True", "False"):
            self.advance()
            return Literal(tok.kind == "True")
        if tok.kind == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if tok.kind == "[":
            return self.list_or_comprehension()
        self.fail("an expression")

    def list_or_comprehension(self):
        self.advance()  # "["
        if self.cur.kind == "]":
            self.advance()
            return ListLit([])
        first = self.expression()
        if self.cur.kind == "for":
            self.advance()
            var = self.expect("NAME").value
            self.expect("in")
            iterable = self.expression()
            cond = None
            if self.cur.kind == "if":
                self.advance()
                cond = self.expression()
            self.expect("]")
            return Comprehension(first, var, iterable, cond)
        items = [first]
        while self.cur.kind == ",":
            self.advance()
            items.append(self.expression())
        self.expect("]")
        return ListLit(items)


def parse(tokens: list[Token]) -> Program:
    return _Parser(tokens).program()


def parse_source(src: str) -> Program:
    return parse(tokenize(src))
