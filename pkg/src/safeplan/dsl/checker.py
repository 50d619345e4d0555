"""Static diagnostics for parsed plans.

Errors (unknown API, wrong arity) block execution; warnings (names never
assigned, unreachable statements after a help call) do not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nodes import (
    Assign, BinOp, Break, Call, Comprehension, ExprStmt, For, If, Index,
    ListLit, Literal, Membership, Name, Program, UnaryOp,
)

# name -> arity of every callable the simulator binds, plus the abs builtin.
API_TABLE: dict[str, int] = {
    "get_obj_names": 0,
    "get_loc_names": 0,
    "parse_obj": 2,
    "get_obj_pos": 1,
    "get_loc_pos": 1,
    "goto_pos": 1,
    "goto_reg": 1,
    "pick_obj": 1,
    "place_at_pos": 1,
    "tilt_arm": 1,
    "reset_arm": 0,
    "wait": 1,
    "get_visible_obj_names": 0,
    "is_obj_visible": 1,
    "ignite_obj": 1,
    "extinguish_obj": 1,
    "turn_off": 1,
    "turn_on": 1,
    "open_obj": 1,
    "close_obj": 1,
    "call_human_help": 0,
}

BUILTINS: dict[str, int] = {"abs": 1}


@dataclass
class Diagnostic:
    severity: str  # "error" | "warning"
    message: str


def check(program: Program, api_table: dict[str, int] | None = None) -> list[Diagnostic]:
    table = dict(api_table if api_table is not None else API_TABLE)
    table.update(BUILTINS)
    diags: list[Diagnostic] = []

    assigned: set[str] = set()
    used: list[str] = []

    def visit_expr(node) -> None:
        if isinstance(node, Name):
            used.append(node.id)
        elif isinstance(node, Literal):
            pass
        elif isinstance(node, ListLit):
            for item in node.items:
                visit_expr(item)
        elif isinstance(node, Comprehension):
            assigned.add(node.var)
            visit_expr(node.iterable)
            visit_expr(node.elem)
            if node.cond is not None:
                visit_expr(node.cond)
        elif isinstance(node, Call):
            if node.callee not in table:
                diags.append(Diagnostic("error", f"unknown API {node.callee!r}"))
            elif len(node.args) != table[node.callee]:
                diags.append(Diagnostic(
                    "error",
                    f"{node.callee} takes {table[node.callee]} argument(s), "
                    f"got {len(node.args)}"))
            for arg in node.args:
                visit_expr(arg)
        elif isinstance(node, BinOp):
            visit_expr(node.left)
            visit_expr(node.right)
        elif isinstance(node, UnaryOp):
            visit_expr(node.operand)
        elif isinstance(node, Membership):
            visit_expr(node.needle)
            visit_expr(node.haystack)
        elif isinstance(node, Index):
            visit_expr(node.base)
            visit_expr(node.index)

    def is_help_call(stmt) -> bool:
        return (isinstance(stmt, ExprStmt) and isinstance(stmt.expr, Call)
                and stmt.expr.callee == "call_human_help")

    def visit_block(stmts: list) -> None:
        for i, stmt in enumerate(stmts):
            if isinstance(stmt, Assign):
                assigned.add(stmt.name)
                visit_expr(stmt.expr)
            elif isinstance(stmt, ExprStmt):
                visit_expr(stmt.expr)
            elif isinstance(stmt, For):
                assigned.add(stmt.var)
                visit_expr(stmt.iterable)
                visit_block(stmt.body)
            elif isinstance(stmt, If):
                for cond, body in stmt.arms:
                    visit_expr(cond)
                    visit_block(body)
                if stmt.else_body is not None:
                    visit_block(stmt.else_body)
            elif isinstance(stmt, Break):
                pass
            if is_help_call(stmt) and i + 1 < len(stmts):
                diags.append(Diagnostic(
                    "warning", "statements after call_human_help() never run"))

    visit_block(program.stmts)

    for name in used:
        if name not in assigned and name not in table:
            diags.append(Diagnostic("warning", f"name {name!r} is never assigned"))
            assigned.add(name)  # report each missing name once

    return diags


def has_errors(diags: list[Diagnostic]) -> bool:
    return any(d.severity == "error" for d in diags)
