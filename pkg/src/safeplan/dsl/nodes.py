"""AST node types and the canonical pretty printer.

``to_source`` emits text that re-parses to an equal tree, which the
round-trip tests rely on. Comments are not part of the tree, so they do
not survive printing.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Name:
    id: str


@dataclass
class Literal:
    value: str | float | bool


@dataclass
class ListLit:
    items: list


@dataclass
class Comprehension:
    elem: object
    var: str
    iterable: object
    cond: object | None = None


@dataclass
class Call:
    callee: str
    args: list


@dataclass
class BinOp:
    op: str
    left: object
    right: object


@dataclass
class UnaryOp:
    op: str  # "-" or "not"
    operand: object


@dataclass
class Membership:
    needle: object
    haystack: object
    negated: bool = False


@dataclass
class Index:
    base: object
    index: object


@dataclass
class Assign:
    name: str
    expr: object


@dataclass
class ExprStmt:
    expr: object


@dataclass
class Break:
    pass


@dataclass
class For:
    var: str
    iterable: object
    body: list


@dataclass
class If:
    arms: list  # list of (condition, body) pairs; first is the `if` arm
    else_body: list | None = None


@dataclass
class Program:
    stmts: list = field(default_factory=list)


# Binding strength used to decide where the printer needs parentheses.
_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_CMP = 4
_PREC_ADD = 5
_PREC_MUL = 6
_PREC_NEG = 7
_PREC_ATOM = 8

_BINOP_PREC = {
    "or": _PREC_OR, "and": _PREC_AND,
    "==": _PREC_CMP, "!=": _PREC_CMP, "<": _PREC_CMP, "<=": _PREC_CMP,
    ">": _PREC_CMP, ">=": _PREC_CMP,
    "+": _PREC_ADD, "-": _PREC_ADD,
    "*": _PREC_MUL, "/": _PREC_MUL,
}


def _number_text(value: float) -> str:
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _string_text(value: str) -> str:
    body = value.replace("\\", "\\\\").replace("'", "\\'")
    body = body.replace("\n", "\\n").replace("\t", "\\t")
    return f"'{body}'"


def expr_to_source(node) -> str:
    return _expr(node, 0)


def _expr(node, parent_prec: int) -> str:
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Literal):
        if isinstance(node.value, bool):
            text = "True" if node.value else "False"
        elif isinstance(node.value, str):
            text = _string_text(node.value)
        else:
            text = _number_text(node.value)
        return text
    if isinstance(node, ListLit):
        return "[" + ", ".join(_expr(item, 0) for item in node.items) + "]"
    if isinstance(node, Comprehension):
        out = f"[{_expr(node.elem, 0)} for {node.var} in {_expr(node.iterable, 0)}"
        if node.cond is not None:
            out += f" if {_expr(node.cond, 0)}"
        return out + "]"
    if isinstance(node, Call):
        return f"{node.callee}(" + ", ".join(_expr(a, 0) for a in node.args) + ")"
    if isinstance(node, Index):
        return f"{_expr(node.base, _PREC_ATOM)}[{_expr(node.index, 0)}]"
    if isinstance(node, UnaryOp):
        prec = _PREC_NOT if node.op == "not" else _PREC_NEG
        spacer = " " if node.op == "not" else ""
        text = f"{node.op}{spacer}{_expr(node.operand, prec)}"
        return f"({text})" if prec < parent_prec else text
    if isinstance(node, Membership):
        op = "not in" if node.negated else "in"
        text = f"{_expr(node.needle, _PREC_CMP + 1)} {op} {_expr(node.haystack, _PREC_CMP + 1)}"
        return f"({text})" if _PREC_CMP < parent_prec else text
    if isinstance(node, BinOp):
        prec = _BINOP_PREC[node.op]
        text = f"{_expr(node.left, prec)} {node.op} {_expr(node.right, prec + 1)}"
        return f"({text})" if prec < parent_prec else text
    raise TypeError(f"not an expression node: {node!r}")


def _stmt_lines(stmt, depth: int, out: list[str]) -> None:
    pad = "    " * depth
    if isinstance(stmt, Assign):
        out.append(f"{pad}{stmt.name} = {_expr(stmt.expr, 0)}")
    elif isinstance(stmt, ExprStmt):
        out.append(f"{pad}{_expr(stmt.expr, 0)}")
    elif isinstance(stmt, Break):
        out.append(f"{pad}break")
    elif isinstance(stmt, For):
        out.append(f"{pad}for {stmt.var} in {_expr(stmt.iterable, 0)}:")
        for inner in stmt.body:
            _stmt_lines(inner, depth + 1, out)
    elif isinstance(stmt, If):
        for i, (cond, body) in enumerate(stmt.arms):
            out.append(f"{pad}{'if' if i == 0 else 'elif'} {_expr(cond, 0)}:")
            for inner in body:
                _stmt_lines(inner, depth + 1, out)
        if stmt.else_body is not None:
            out.append(f"{pad}else:")
            for inner in stmt.else_body:
                _stmt_lines(inner, depth + 1, out)
    else:
        raise TypeError(f"not a statement node: {stmt!r}")


def to_source(program: Program) -> str:
    lines: list[str] = []
    for stmt in program.stmts:
        _stmt_lines(stmt, 0, lines)
    return "\n".join(lines) + ("\n" if lines else "")
