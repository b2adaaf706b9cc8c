"""Synthetic corpora and the classification-accuracy evaluation."""

from .classify import EvalReport, run_classification_eval, select_eval_authors
from .synthetic import generate_synthetic_corpus

__all__ = [
    "EvalReport",
    "generate_synthetic_corpus",
    "run_classification_eval",
    "select_eval_authors",
]
