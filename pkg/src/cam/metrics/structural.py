"""Declaration-shape counts taken from the class model and token slice."""

from __future__ import annotations

from dataclasses import dataclass

from cam.javasrc.lexer import Token
from cam.javasrc.model import ClassModel


@dataclass(frozen=True)
class StructuralCounts:
    interfaces_implemented: int
    extends_flag: int
    is_abstract: int
    is_final: int
    public_methods: int
    private_methods: int
    protected_methods: int
    default_visibility_methods: int
    annotations_on_class: int
    lambda_count: int
    try_blocks: int
    catch_blocks: int
    returns_count: int


def structural_counts(model: ClassModel) -> StructuralCounts:
    visibility = {"public": 0, "private": 0, "protected": 0, "package": 0}
    for method in model.methods:
        if not method.is_constructor:
            visibility[method.visibility] += 1
    lambdas = 0
    tries = 0
    catches = 0
    returns = 0
    for tok in model.tokens:
        if tok.kind == "operator" and tok.lexeme == "->":
            lambdas += 1
        elif tok.kind == "keyword":
            if tok.lexeme == "try":
                tries += 1
            elif tok.lexeme == "catch":
                catches += 1
            elif tok.lexeme == "return":
                returns += 1
    return StructuralCounts(
        interfaces_implemented=len(model.implements_names),
        extends_flag=1 if model.extends_name is not None else 0,
        is_abstract=1 if "abstract" in model.modifiers else 0,
        is_final=1 if "final" in model.modifiers else 0,
        public_methods=visibility["public"],
        private_methods=visibility["private"],
        protected_methods=visibility["protected"],
        default_visibility_methods=visibility["package"],
        annotations_on_class=model.annotation_count,
        lambda_count=lambdas,
        try_blocks=tries,
        catch_blocks=catches,
        returns_count=returns,
    )
