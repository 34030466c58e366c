"""Token and statement based size and complexity metrics.

File-level figures (line counts, statement count) are computed once per
source file and repeated on every class row of that file. Class-level
figures work on the class's own token slice and parsed members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from cam.javasrc.lexer import Token
from cam.javasrc.model import ClassModel, MethodModel, Stmt

NAN = float("nan")

# Keywords that open declarations or imports carry no operational weight
# and stay out of the operator pool.
_EXCLUDED_KEYWORDS = frozenset({"class", "interface", "enum", "package", "import"})
_COUNTED_SEPARATORS = frozenset("(){}[];,.")


@dataclass(frozen=True)
class LineMetrics:
    loc: int
    kloc: float
    blanks: int
    comments: int


def line_metrics(source: str, raw_tokens: list[Token]) -> LineMetrics:
    if source == "":
        return LineMetrics(0, 0.0, 0, 0)
    lines = source.split("\n")
    if lines[-1] == "":
        lines.pop()
    loc = len(lines)
    blanks = sum(1 for line in lines if line.strip() == "")
    covered: set[int] = set()
    for tok in raw_tokens:
        if tok.kind in ("comment-line", "comment-block"):
            covered.update(range(tok.line, tok.line + tok.lexeme.count("\n") + 1))
    return LineMetrics(loc, loc / 1000.0, blanks, len(covered))


@dataclass(frozen=True)
class Halstead:
    n1: int
    n2: int
    N1: int
    N2: int

    @property
    def volume(self) -> float:
        vocab = self.n1 + self.n2
        if vocab == 0:
            return NAN
        return (self.N1 + self.N2) * math.log2(vocab)

    @property
    def difficulty(self) -> float:
        if self.n2 == 0:
            return NAN
        return (self.n1 / 2.0) * (self.N2 / self.n2)

    @property
    def effort(self) -> float:
        return self.difficulty * self.volume


def _is_operand(tok: Token) -> bool:
    return tok.kind == "identifier" or tok.kind.startswith("literal-")


def _is_operator(tok: Token) -> bool:
    if tok.kind == "keyword":
        return tok.lexeme not in _EXCLUDED_KEYWORDS
    if tok.kind == "operator":
        return True
    if tok.kind == "separator":
        return tok.lexeme in _COUNTED_SEPARATORS
    return False


def halstead(tokens: list[Token]) -> Halstead:
    operators: set[str] = set()
    operands: set[str] = set()
    total_ops = 0
    total_rands = 0
    for tok in tokens:
        if _is_operand(tok):
            operands.add(tok.lexeme)
            total_rands += 1
        elif _is_operator(tok):
            operators.add(tok.lexeme)
            total_ops += 1
    return Halstead(len(operators), len(operands), total_ops, total_rands)


def maintainability_index(volume: float, cyclomatic: int, loc: int) -> float:
    if math.isnan(volume) or volume <= 0 or loc <= 0:
        return NAN
    value = 171.0 - 5.2 * math.log(volume) - 0.23 * cyclomatic - 16.2 * math.log(loc)
    return max(value, 0.0)


def method_cyclomatic(method: MethodModel) -> int:
    return 1 + sum(method.decision_tokens.values())


def class_cyclomatic(model: ClassModel) -> int:
    return sum(method_cyclomatic(m) for m in model.all_methods())


def _alternations(group: list[str]) -> int:
    return sum(1 for a, b in zip(group, group[1:]) if a != b)


def _cognitive_score(node: Stmt) -> int:
    score = 0
    kind = node.kind
    if kind == "if":
        score += 1 if node.chained else 1 + node.depth
    elif kind in ("for", "foreach", "while", "do", "switch", "catch"):
        score += 1 + node.depth
    elif kind in ("conditional-expr", "labeled-jump"):
        score += 1
    for group in node.op_groups:
        score += _alternations(group)
    for child in node.children:
        score += _cognitive_score(child)
    if node.else_children:
        first = node.else_children[0]
        if not (first.kind == "if" and first.chained):
            score += 1
        for child in node.else_children:
            score += _cognitive_score(child)
    return score


def method_cognitive(method: MethodModel) -> int:
    if method.body is None:
        return 0
    return _cognitive_score(method.body)


def class_cognitive(model: ClassModel) -> int:
    return sum(method_cognitive(m) for m in model.all_methods())


@dataclass(frozen=True)
class MemberCounts:
    attributes: int
    static_attributes: int
    constructors: int
    methods: int
    static_methods: int


def member_counts(model: ClassModel) -> MemberCounts:
    attributes = sum(1 for f in model.fields if not f.is_static)
    static_attributes = sum(1 for f in model.fields if f.is_static)
    constructors = sum(1 for m in model.methods if m.is_constructor)
    plain = [m for m in model.methods if not m.is_constructor]
    static_methods = sum(1 for m in plain if m.is_static)
    return MemberCounts(attributes, static_attributes, constructors, len(plain), static_methods)
