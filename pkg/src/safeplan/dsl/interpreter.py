"""Tree-walking interpreter for parsed plans.

Runtime values are plain Python data: text is ``str``, numbers are
``float``, booleans are ``bool``, lists are ``list``, and positions are
``Position`` (a 2-tuple subclass). API calls are dispatched to a bound
environment object; the interpreter itself knows nothing about robots.

Execution halts immediately when the environment signals a help request,
when a runtime error occurs, or when the statement budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nodes import (
    Assign, BinOp, Break, Call, Comprehension, ExprStmt, For, If, Index,
    ListLit, Literal, Membership, Name, Program, UnaryOp,
)

DEFAULT_BUDGET = 10_000


class Position(tuple):
    """A 2-vector in meters. Supports [0]/[1] indexing like any tuple."""

    def __new__(cls, x: float, y: float):
        return super().__new__(cls, (float(x), float(y)))


Value = str | float | bool | list | Position | None


class PlanRuntimeError(Exception):
    """Raised for any runtime failure; ``kind`` is one of
    UnknownName, TypeMismatch, ApiError, BudgetExceeded."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(message)


class HelpRequested(Exception):
    """Control-flow signal: the plan called call_human_help()."""


class _BreakSignal(Exception):
    pass


@dataclass
class RunOutcome:
    status: str  # "completed" | "helped" | "error"
    error_kind: str | None = None
    error_message: str | None = None


def type_name(value: Value) -> str:
    if isinstance(value, bool):
        return "Bool"
    if isinstance(value, float):
        return "Number"
    if isinstance(value, str):
        return "Text"
    if isinstance(value, Position):
        return "Position"
    if isinstance(value, list):
        return "List"
    return "None"


def _mismatch(expected: str, value: Value) -> PlanRuntimeError:
    return PlanRuntimeError("TypeMismatch", f"expected {expected}, got {type_name(value)}")


class Interpreter:
    """Executes one program against one API environment.

    The environment must provide ``call(name, args) -> Value`` and may
    raise PlanRuntimeError (kind ApiError) or HelpRequested.
    """

    def __init__(self, env_api, budget: int = DEFAULT_BUDGET):
        if budget <= 0:
            raise ValueError("budget must be > 0")
        self.api = env_api
        self.budget = budget
        self.names: dict[str, Value] = {}

    def run(self, program: Program) -> RunOutcome:
        try:
            self._exec_block(program.stmts)
        except HelpRequested:
            return RunOutcome("helped")
        except PlanRuntimeError as exc:
            return RunOutcome("error", exc.kind, str(exc))
        return RunOutcome("completed")

    # --- statements ---------------------------------------------------

    def _tick(self) -> None:
        self.budget -= 1
        if self.budget < 0:
            raise PlanRuntimeError("BudgetExceeded", "statement budget exhausted")

    def _exec_block(self, stmts: list) -> None:
        for stmt in stmts:
            self._exec(stmt)

    def _exec(self, stmt) -> None:
        self._tick()
        if isinstance(stmt, Assign):
            self.names[stmt.name] = self._eval(stmt.expr)
        elif isinstance(stmt, ExprStmt):
            self._eval(stmt.expr)
        elif isinstance(stmt, Break):
            raise _BreakSignal()
        elif isinstance(stmt, For):
            iterable = self._eval(stmt.iterable)
            if not isinstance(iterable, list):
                raise _mismatch("List to iterate", iterable)
            try:
                for item in iterable:
                    self.names[stmt.var] = item
                    self._exec_block(stmt.body)
            except _BreakSignal:
                pass
        elif isinstance(stmt, If):
            for cond, body in stmt.arms:
                if self._truth(self._eval(cond)):
                    self._exec_block(body)
                    return
            if stmt.else_body is not None:
                self._exec_block(stmt.else_body)
        else:
            raise PlanRuntimeError("ApiError", f"cannot execute {stmt!r}")

    # --- expressions ----------------------------------------------------

    def _truth(self, value: Value) -> bool:
        if not isinstance(value, bool):
            raise _mismatch("Bool condition", value)
        return value

    def _eval(self, node) -> Value:
        if isinstance(node, Literal):
            return node.value
        if isinstance(node, Name):
            if node.id not in self.names:
                raise PlanRuntimeError("UnknownName", f"name {node.id!r} is not assigned")
            return self.names[node.id]
        if isinstance(node, ListLit):
            return [self._eval(item) for item in node.items]
        if isinstance(node, Comprehension):
            iterable = self._eval(node.iterable)
            if not isinstance(iterable, list):
                raise _mismatch("List to iterate", iterable)
            out = []
            for item in iterable:
                self.names[node.var] = item
                if node.cond is None or self._truth(self._eval(node.cond)):
                    out.append(self._eval(node.elem))
            return out
        if isinstance(node, Call):
            args = [self._eval(arg) for arg in node.args]
            if node.callee == "abs":
                if len(args) != 1 or not self._is_number(args[0]):
                    raise _mismatch("one Number for abs", args[0] if args else None)
                return abs(args[0])
            return self.api.call(node.callee, args)
        if isinstance(node, Index):
            return self._index(self._eval(node.base), self._eval(node.index))
        if isinstance(node, UnaryOp):
            operand = self._eval(node.operand)
            if node.op == "not":
                return not self._truth(operand)
            if not self._is_number(operand):
                raise _mismatch("Number to negate", operand)
            return -operand
        if isinstance(node, Membership):
            return self._membership(node)
        if isinstance(node, BinOp):
            return self._binop(node)
        raise PlanRuntimeError("ApiError", f"cannot evaluate {node!r}")

    @staticmethod
    def _is_number(value: Value) -> bool:
        return isinstance(value, float) and not isinstance(value, bool)

    def _index(self, base: Value, index: Value) -> Value:
        if not self._is_number(index) or index != int(index):
            raise _mismatch("integral Number index", index)
        i = int(index)
        if isinstance(base, Position):
            if i not in (0, 1):
                raise PlanRuntimeError("TypeMismatch", f"position index {i} out of range")
            return base[i]
        if isinstance(base, list):
            if not 0 <= i < len(base):
                raise PlanRuntimeError("TypeMismatch", f"list index {i} out of range")
            return base[i]
        raise _mismatch("List or Position to index", base)

    def _membership(self, node: Membership) -> bool:
        needle = self._eval(node.needle)
        haystack = self._eval(node.haystack)
        if isinstance(haystack, str):
            if not isinstance(needle, str):
                raise _mismatch("Text needle for Text haystack", needle)
            found = needle in haystack
        elif isinstance(haystack, list):
            found = any(self._values_equal(needle, item) for item in haystack)
        else:
            raise _mismatch("Text or List haystack", haystack)
        return not found if node.negated else found

    @staticmethod
    def _values_equal(a: Value, b: Value) -> bool:
        if isinstance(a, bool) or isinstance(b, bool):
            return isinstance(a, bool) and isinstance(b, bool) and a == b
        if isinstance(a, (float, str)) and type(a) is type(b):
            return a == b
        if isinstance(a, Position) and isinstance(b, Position):
            return tuple(a) == tuple(b)
        if isinstance(a, list) and isinstance(b, list):
            return len(a) == len(b) and all(
                Interpreter._values_equal(x, y) for x, y in zip(a, b))
        return False

    def _binop(self, node: BinOp) -> Value:
        if node.op == "and":
            return self._truth(self._eval(node.left)) and self._truth(self._eval(node.right))
        if node.op == "or":
            return self._truth(self._eval(node.left)) or self._truth(self._eval(node.right))
        left = self._eval(node.left)
        right = self._eval(node.right)
        if node.op == "==":
            return self._values_equal(left, right)
        if node.op == "!=":
            return not self._values_equal(left, right)
        if node.op in ("<", "<=", ">", ">="):
            if not (self._is_number(left) and self._is_number(right)):
                raise _mismatch("Numbers to compare", left if not self._is_number(left) else right)
            return {"<": left < right, "<=": left <= right,
                    ">": left > right, ">=": left >= right}[node.op]
        if node.op in ("+", "-", "*", "/"):
            if not (self._is_number(left) and self._is_number(right)):
                raise _mismatch("Numbers for arithmetic",
                                left if not self._is_number(left) else right)
            if node.op == "/" and right == 0.0:
                raise PlanRuntimeError("TypeMismatch", "division by zero")
            return {"+": left + right, "-": left - right,
                    "*": left * right, "/": left / right}[node.op]
        raise PlanRuntimeError("ApiError", f"unknown operator {node.op!r}")
