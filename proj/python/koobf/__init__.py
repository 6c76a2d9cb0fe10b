"""Korean text obfuscation toolkit.

Seventeen seeded transformation rules over Hangul text, a pair-obfuscation
engine that applies k distinct rules to a neutral/toxic sentence pair, a
dataset pipeline with easy/normal/hard difficulty levels, and evaluation
helpers (chrF, provenance-based inversion)."""

from ._core import (
    IncompleteError,
    NoEligibleTargetError,
    NonInvertibleRuleError,
    EmptyReferenceError,
    ParseError,
    apply_rule,
    chrf,
    compose,
    corpus_chrf,
    decompose,
    generate_dataset,
    invert,
    normalize,
    obfuscate_pair,
    romanize,
    rule_invertible,
    rules,
)

__all__ = [
    "IncompleteError",
    "NoEligibleTargetError",
    "NonInvertibleRuleError",
    "EmptyReferenceError",
    "ParseError",
    "apply_rule",
    "chrf",
    "compose",
    "corpus_chrf",
    "decompose",
    "generate_dataset",
    "invert",
    "normalize",
    "obfuscate_pair",
    "romanize",
    "rule_invertible",
    "rules",
]

__version__ = "0.1.0"
