"""Tokenizer for the plan language.

Indentation is significant: leading whitespace produces INDENT/DEDENT
tokens against a stack of known levels, the way the plan listings are
written. Tabs count as 4 spaces. ``#`` comments run to end of line, and
blank or comment-only lines produce no tokens at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LexError

KEYWORDS = {"for", "in", "if", "elif", "else", "break", "and", "or", "not",
            "True", "False"}

# Longest match first.
OPERATORS = ("==", "!=", "<=", ">=", "(", ")", "[", "]", ",", ":", "=",
             "<", ">", "+", "-", "*", "/")

TAB_WIDTH = 4

_ESCAPES = {"n": "\n", "t": "\t", "\\": "\\", "'": "'", '"': '"'}


@dataclass(frozen=True)
class Token:
    kind: str  # NAME | NUMBER | STRING | NEWLINE | INDENT | DEDENT | EOF | keyword | operator
    value: str
    line: int
    col: int

    def __repr__(self) -> str:  # compact: Token(NAME 'cup' @3:5)
        return f"Token({self.kind} {self.value!r} @{self.line}:{self.col})"


def _is_name_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_name_char(c: str) -> bool:
    return c.isalnum() or c == "_"


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    indent_stack = [0]
    lines = src.split("\n")
    last_line = 1

    for lineno, raw_line in enumerate(lines, start=1):
        last_line = lineno
        line = raw_line.expandtabs(TAB_WIDTH)

        indent = 0
        while indent < len(line) and line[indent] == " ":
            indent += 1
        pos = indent
        if pos >= len(line) or line[pos] == "#":
            continue  # blank or comment-only line: no tokens, no indent change

        if indent > indent_stack[-1]:
            indent_stack.append(indent)
            tokens.append(Token("INDENT", "", lineno, 1))
        else:
            while indent < indent_stack[-1]:
                indent_stack.pop()
                tokens.append(Token("DEDENT", "", lineno, 1))
            if indent != indent_stack[-1]:
                raise LexError(
                    f"dedent to column {indent + 1} matches no enclosing block",
                    lineno, indent + 1)

        produced = False
        while pos < len(line):
            c = line[pos]
            if c == " ":
                pos += 1
                continue
            if c == "#":
                break
            col = pos + 1
            if _is_name_start(c):
                end = pos
                while end < len(line) and _is_name_char(line[end]):
                    end += 1
                word = line[pos:end]
                kind = word if word in KEYWORDS else "NAME"
                tokens.append(Token(kind, word, lineno, col))
                pos = end
            elif c.isdigit():
                end = pos
                while end < len(line) and line[end].isdigit():
                    end += 1
                if end < len(line) and line[end] == "." and end + 1 < len(line) \
                        and line[end + 1].isdigit():
                    end += 1
                    while end < len(line) and line[end].isdigit():
                        end += 1
                tokens.append(Token("NUMBER", line[pos:end], lineno, col))
                pos = end
            elif c in ("'", '"'):
                text, pos = _lex_string(line, pos, lineno)
                tokens.append(Token("STRING", text, lineno, col))
            else:
                for op in OPERATORS:
                    if line.startswith(op, pos):
                        tokens.append(Token(op, op, lineno, col))
                        pos += len(op)
                        break
                else:
                    raise LexError(f"unexpected character {c!r}", lineno, col)
            produced = True

        if produced:
            tokens.append(Token("NEWLINE", "", lineno, len(line) + 1))

    while indent_stack[-1] > 0:
        indent_stack.pop()
        tokens.append(Token("DEDENT", "", last_line + 1, 1))
    tokens.append(Token("EOF", "", last_line + 1, 1))
    return tokens


def _lex_string(line: str, pos: int, lineno: int) -> tuple[str, int]:
    quote = line[pos]
    pos += 1
    chars: list[str] = []
    while pos < len(line):
        c = line[pos]
        if c == quote:
            return "".join(chars), pos + 1
        if c == "\\":
            if pos + 1 >= len(line):
                break
            escape = line[pos + 1]
            if escape not in _ESCAPES:
                raise LexError(f"unknown escape \\{escape}", lineno, pos + 2)
            chars.append(_ESCAPES[escape])
            pos += 2
            continue
        chars.append(c)
        pos += 1
    raise LexError("unterminated text literal", lineno, len(line) + 1)
