"""Partial combinatory arithmetic, realizability and the Lambda hierarchy.

Formulas and terms are passed as text in the s-expression syntax used by the
`fixkit` command line tool, e.g. ``"(Ev0 (v0 = (S 0)))"``.
"""

from ._core import (
    KernelError,
    PipelineError,
    SyntaxError,
    check,
    classify,
    decode_formula,
    decode_term,
    diagonalize,
    encode_formula,
    encode_term,
    eval_formula,
    eval_term,
    extract,
    free_vars,
    is_nf,
    lambda_abstract,
    normal_form,
    normalize,
    pipeline,
    realize,
)

__all__ = [
    "KernelError",
    "PipelineError",
    "SyntaxError",
    "check",
    "classify",
    "decode_formula",
    "decode_term",
    "diagonalize",
    "encode_formula",
    "encode_term",
    "eval_formula",
    "eval_term",
    "extract",
    "free_vars",
    "is_nf",
    "lambda_abstract",
    "normal_form",
    "normalize",
    "pipeline",
    "realize",
]
