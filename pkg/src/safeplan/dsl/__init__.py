"""Restricted imperative plan language: lexer, parser, static checks,
pretty printer, and interpreter."""

from .lexer import Token, tokenize
from .nodes import (
    Assign,
    BinOp,
    Break,
    Call,
    Comprehension,
    ExprStmt,
    For,
    If,
    Index,
    ListLit,
    Literal,
    Membership,
    Name,
    Program,
    UnaryOp,
    to_source,
)
from .parser import parse, parse_source
from .checker import API_TABLE, Diagnostic, check
from .interpreter import Interpreter, PlanRuntimeError, RunOutcome

__all__ = [
    "Token", "tokenize",
    "Program", "Assign", "ExprStmt", "For", "If", "Break",
    "Call", "BinOp", "UnaryOp", "Membership", "Index",
    "ListLit", "Comprehension", "Literal", "Name", "to_source",
    "parse", "parse_source",
    "API_TABLE", "Diagnostic", "check",
    "Interpreter", "PlanRuntimeError", "RunOutcome",
]
