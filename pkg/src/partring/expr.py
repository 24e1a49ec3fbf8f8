"""Arithmetic expressions over partitions.

Grammar::

    expr   := term {"+" term}
    term   := factor {"*" factor}
    factor := atom ["^" nat]
    atom   := nat | plist | "(" expr ")"
    plist  := "[" [nat {"," nat}] "]"

An integer literal ``m`` stands for (1, ..., 1) with m parts; a single part
is written ``[m]``. Whitespace between tokens is ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from partring.partition import Partition, add, embed, mul, power

# length(a) ** e is bounded to keep ``^`` from exhausting memory
MAX_RESULT_PARTS = 1_000_000


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class PList:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, PList, BinOp, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found}", self._offset())
        self.pos += 1

    def _offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def nat(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExprSyntaxError(f"expected a number, found {found}", self._offset())
        return int(self.text[start : self.pos])

    def expr(self) -> Node:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = BinOp("+", node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.nat())
            if self.peek() == "^":
                raise ExprSyntaxError("chained '^' needs parentheses", self._offset())
        return node

    def atom(self) -> Node:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch == "[":
            return self.plist()
        if ch and ch in "0123456789":
            return Num(self.nat())
        found = repr(ch) if ch else "end of input"
        raise ExprSyntaxError(f"unexpected {found}", self._offset())

    def plist(self) -> PList:
        self.expect("[")
        parts = []
        if self.peek() != "]":
            parts.append(self._part())
            while self.peek() == ",":
                self.pos += 1
                parts.append(self._part())
        self.expect("]")
        return PList(tuple(parts))

    def _part(self) -> int:
        self._skip()
        at = self._offset()
        v = self.nat()
        if v < 1:
            raise ExprSyntaxError("partition parts must be positive", at)
        return v


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise ExprSyntaxError(f"unexpected {p.peek()!r}", p._offset())
    return node


def _check_size(n_parts: int) -> None:
    if n_parts > MAX_RESULT_PARTS:
        raise OverflowError(f"{n_parts} parts exceeds {MAX_RESULT_PARTS}")


def evaluate(node: Node) -> Partition:
    if isinstance(node, Num):
        _check_size(node.value)
        return embed(node.value)
    if isinstance(node, PList):
        return Partition(node.parts)
    if isinstance(node, BinOp):
        left, right = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return add(left, right)
        _check_size(len(left) * len(right))
        return mul(left, right)
    if isinstance(node, Pow):
        base = evaluate(node.base)
        if len(base) > 1 and node.exponent * math.log2(len(base)) > math.log2(MAX_RESULT_PARTS):
            raise OverflowError(f"{len(base)}**{node.exponent} parts exceeds {MAX_RESULT_PARTS}")
        return power(base, node.exponent)
    raise TypeError(f"unknown node {node!r}")


def eval_expr(text: str) -> Partition:
    return evaluate(parse(text))
