"""The column rewriting system: super columns as generators, rules merging
adjacent columns that do not stack into a tableau.

A column word is a tuple of nonempty column words (each read bottom to top).
Rules are produced on demand by insertion, so the engine is exact for any
column lengths actually given.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from enum import Enum

from .alphabet import SignedAlphabet, Word, is_super_column, rev_key
from .insertion import p_symbol_right
from .tableau import columns_of, is_type1

DEFAULT_STEP_LIMIT = 10_000


class StepLimitExceeded(RuntimeError):
    pass


class Subtype(Enum):
    T1 = "1"
    T01 = "01"
    T02 = "02"


@dataclass(frozen=True)
class GammaRule:
    u: Word
    v: Word
    rhs: tuple  # one or two columns

    @property
    def lhs(self) -> tuple:
        return (self.u, self.v)

    @property
    def subtype(self) -> Subtype:
        return Subtype.T01 if len(self.rhs) == 1 else Subtype.T02

    def format(self, alpha: SignedAlphabet) -> str:
        return f"{format_column_word(alpha, self.lhs)} => {format_column_word(alpha, self.rhs)}"


@dataclass(frozen=True)
class RewritePath:
    start: tuple
    steps: tuple  # ((position, GammaRule), ...), positions 0-based
    end: tuple

    def __len__(self):
        return len(self.steps)

    def words(self) -> list:
        """Every column word visited, start and end included."""
        out = [self.start]
        cur = self.start
        for pos, rule in self.steps:
            cur = apply_rule(cur, pos, rule)
            out.append(cur)
        return out


# stacking is tested for the same few column pairs over and over
_stacks = functools.lru_cache(maxsize=None)(is_type1)


@functools.lru_cache(maxsize=None)
def _product_columns(alpha, u, v):
    return tuple(columns_of(p_symbol_right(alpha, u + v)))


def subtype(alpha: SignedAlphabet, u: Word, v: Word) -> Subtype:
    if is_type1(alpha, u, v):
        return Subtype.T1
    return Subtype.T01 if len(_product_columns(alpha, u, v)) == 1 else Subtype.T02


@functools.lru_cache(maxsize=None)
def gamma_rule(alpha: SignedAlphabet, u: Word, v: Word):
    """The rule rewriting ``c_u c_v``, or None when the pair already stacks."""
    if _stacks(alpha, u, v):
        return None
    return GammaRule(u, v, _product_columns(alpha, u, v))


def two_column_lemma_check(alpha: SignedAlphabet, u: Word, v: Word):
    """Check that a non-stacking pair multiplies to at most two columns, the
    left one longer than ``u``.  Returns None for stacking pairs."""
    if is_type1(alpha, u, v):
        return None
    cols = _product_columns(alpha, u, v)
    ok = len(cols) == 1 or (len(cols) == 2 and len(cols[0]) > len(u))
    return {"columns": cols, "ok": ok}


def apply_rule(cw: tuple, pos: int, rule: GammaRule) -> tuple:
    if cw[pos : pos + 2] != rule.lhs:
        raise ValueError(f"rule does not match at position {pos}")
    return cw[:pos] + rule.rhs + cw[pos + 2 :]


def ll_key(cw: tuple):
    return (len(cw), tuple(rev_key(c) for c in cw))


def ll_compare(cw1: tuple, cw2: tuple) -> int:
    """Length-lexicographic comparison of column words, columns ordered longest first."""
    a, b = ll_key(cw1), ll_key(cw2)
    return (a > b) - (a < b)


def redexes(alpha: SignedAlphabet, cw: tuple) -> list:
    """Positions ``i`` where ``cw[i], cw[i+1]`` is a non-stacking pair."""
    return [i for i in range(len(cw) - 1) if not _stacks(alpha, cw[i], cw[i + 1])]


def is_normal_form(alpha: SignedAlphabet, cw: tuple) -> bool:
    return not redexes(alpha, cw)


def normal_form(
    alpha: SignedAlphabet,
    cw,
    strategy: str = "leftmost",
    seed: int | None = None,
    step_limit: int = DEFAULT_STEP_LIMIT,
    rng: random.Random | None = None,
):
    """Rewrite until every adjacent pair stacks; returns ``(normal form, path)``.

    The random strategy draws from ``rng`` if given, else from a generator
    seeded with ``seed``.
    """
    start = tuple(map(tuple, cw))
    if () in start:
        raise ValueError("column words never contain empty columns")
    if strategy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random" and rng is None:
        rng = random.Random(seed)
    cur = list(start)
    # bad[i]: the pair at i, i+1 does not stack; only pairs next to a
    # rewrite can change
    bad = [not _stacks(alpha, cur[i], cur[i + 1]) for i in range(len(cur) - 1)]
    steps = []
    while True in bad:
        if len(steps) >= step_limit:
            raise StepLimitExceeded(f"no normal form after {step_limit} steps")
        if strategy == "leftmost":
            pos = bad.index(True)
        elif strategy == "rightmost":
            pos = len(bad) - 1 - bad[::-1].index(True)
        else:
            pos = rng.choice([i for i, b in enumerate(bad) if b])
        rule = gamma_rule(alpha, cur[pos], cur[pos + 1])
        cur[pos : pos + 2] = rule.rhs
        lo, hi = max(pos - 1, 0), min(pos + len(rule.rhs), len(cur) - 1)
        bad[lo : pos + 2] = [not _stacks(alpha, cur[i], cur[i + 1]) for i in range(lo, hi)]
        steps.append((pos, rule))
    end = tuple(cur)
    return end, RewritePath(start, tuple(steps), end)


def embed_word(w: Word) -> tuple:
    return tuple((x,) for x in w)


def flatten(cw) -> Word:
    return tuple(x for c in cw for x in c)


def enumerate_columns(alpha: SignedAlphabet, max_len: int) -> list:
    """All super columns of length 1..max_len in length-lexicographic order."""
    out = []
    for n in range(1, max_len + 1):
        for w in itertools.product(alpha.letters, repeat=n):
            if is_super_column(alpha, w):
                out.append(w)
    return out


def critical_branchings(alpha: SignedAlphabet, max_len: int, columns=None) -> list:
    """Triples ``(u, v, t)`` where both ``(u, v)`` and ``(v, t)`` fail to stack."""
    cols = enumerate_columns(alpha, max_len) if columns is None else columns
    right_of = {v: [t for t in cols if not is_type1(alpha, v, t)] for v in cols}
    out = []
    for u in cols:
        for v in right_of[u]:
            for t in right_of[v]:
                out.append((u, v, t))
    return out


def check_confluence(alpha: SignedAlphabet, u: Word, v: Word, t: Word):
    """Close the branching on ``c_u c_v c_t`` from both sides.

    Returns ``(path1, path2, confluent)``; path1 starts with the left rule and
    continues leftmost, path2 starts with the right rule and continues
    rightmost.
    """
    start = (u, v, t)
    r1 = gamma_rule(alpha, u, v)
    r2 = gamma_rule(alpha, v, t)
    if r1 is None or r2 is None:
        raise ValueError("not a critical branching")
    mid1 = apply_rule(start, 0, r1)
    mid2 = apply_rule(start, 1, r2)
    end1, tail1 = normal_form(alpha, mid1, "leftmost")
    end2, tail2 = normal_form(alpha, mid2, "rightmost")
    path1 = RewritePath(start, ((0, r1),) + tail1.steps, end1)
    path2 = RewritePath(start, ((1, r2),) + tail2.steps, end2)
    return path1, path2, end1 == end2


def precolumn_rules(alpha: SignedAlphabet, max_len: int) -> dict:
    """The pre-column rule set, as ``{(lhs columns): (rhs columns)}``.

    Two families with a one-letter left column and a two-letter right
    column, plus the merges ``c_x c_u => c_xu`` for every column ``xu`` of
    length at most ``max_len``.
    """
    rules = {}
    n = len(alpha)
    for x in range(n):
        for y in range(x, n):
            odd_y = alpha.is_odd(y)
            for z in range(y, n):
                if (x != y or not odd_y) and (y != z or odd_y):
                    rules[((x,), (z, y))] = ((z, x), (y,))
                if (x != y or odd_y) and (y != z or not odd_y):
                    rules[((y,), (z, x))] = ((y, x), (z,))
    rules.update(merge_rules(alpha, max_len))
    return rules


def merge_rules(alpha: SignedAlphabet, max_len: int) -> dict:
    rules = {}
    for col in enumerate_columns(alpha, max_len):
        if len(col) >= 2:
            rules[((col[0],), col[1:])] = (col,)
    return rules


def gamma_rules_where(alpha: SignedAlphabet, max_len: int, keep) -> dict:
    """Gamma rules over columns of length <= max_len, filtered by ``keep(rule)``."""
    cols = enumerate_columns(alpha, max_len)
    out = {}
    for u in cols:
        for v in cols:
            rule = gamma_rule(alpha, u, v)
            if rule is not None and keep(rule):
                out[rule.lhs] = rule.rhs
    return out


# --- text format ------------------------------------------------------------


def parse_column_word(alpha: SignedAlphabet, text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    cols = tuple(alpha.parse_word(part) for part in text.split("|"))
    for c in cols:
        if not c:
            raise ValueError("empty column in column word")
        if not is_super_column(alpha, c):
            raise ValueError(f"{alpha.format_word(c)!r} is not a super column")
    return cols


def format_column_word(alpha: SignedAlphabet, cw) -> str:
    return "|".join(alpha.format_word(c) for c in cw)
