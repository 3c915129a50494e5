"""Super plactic monoids: signed alphabets, super tableaux, insertion, and the
Knuth and column rewriting systems with their confluence diagrams."""

from .alphabet import (
    AlphabetError,
    SignedAlphabet,
    WordParseError,
    all_parity_alphabets,
    greene_profile,
    greene_stat,
    is_super_column,
    is_super_row,
    load_alphabet,
    parse_alphabet,
)
from .columns import (
    GammaRule,
    Subtype,
    check_confluence,
    critical_branchings,
    gamma_rule,
    normal_form,
    precolumn_rules,
)
from .insertion import insert_left, insert_right, p_symbol, p_symbol_left, p_symbol_right, star_r
from .knuth import are_congruent, congruence_class, knuth_critical_pairs, knuth_rules
from .syzygy import build_diagram, classify, sphere_factorizations
from .tableau import Tableau, columns_of, is_type1, read_col, read_row, validate
from .verify import SUITES, BoundsTooLarge, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "BoundsTooLarge",
    "GammaRule",
    "SUITES",
    "SignedAlphabet",
    "Subtype",
    "Tableau",
    "VerificationReport",
    "WordParseError",
    "all_parity_alphabets",
    "are_congruent",
    "build_diagram",
    "check_confluence",
    "classify",
    "columns_of",
    "congruence_class",
    "critical_branchings",
    "gamma_rule",
    "greene_profile",
    "greene_stat",
    "insert_left",
    "insert_right",
    "is_super_column",
    "is_super_row",
    "is_type1",
    "knuth_critical_pairs",
    "knuth_rules",
    "load_alphabet",
    "normal_form",
    "p_symbol",
    "p_symbol_left",
    "p_symbol_right",
    "parse_alphabet",
    "precolumn_rules",
    "read_col",
    "read_row",
    "run_suite",
    "sphere_factorizations",
    "star_r",
    "validate",
]
