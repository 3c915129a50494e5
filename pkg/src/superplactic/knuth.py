"""Knuth-type rewriting rules for the super plactic congruence.

The oriented system is not confluent in general, so it is used here for
rewriting and for an exact breadth-first congruence oracle; canonical
representatives come from P-symbols instead.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .alphabet import SignedAlphabet, Word
from .insertion import p_symbol_right

DEFAULT_CLASS_CAP = 100_000


class ClassSizeExceeded(RuntimeError):
    pass


class OracleMismatch(AssertionError):
    def __init__(self, w1, w2, bfs, tableau):
        super().__init__(f"BFS says {bfs}, P-symbols say {tableau} for {w1!r} ~ {w2!r}")
        self.words = (w1, w2)


@dataclass(frozen=True)
class KnuthRule:
    kind: str  # "eta" or "epsilon"
    x: int
    y: int
    z: int
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if sorted(self.lhs) != sorted(self.rhs) or len(self.lhs) != 3:
            raise ValueError(f"{self.kind} rule does not permute its left side")

    def format(self, alpha: SignedAlphabet) -> str:
        return f"{alpha.format_word(self.lhs)} => {alpha.format_word(self.rhs)}"


def knuth_rules(alpha: SignedAlphabet) -> list:
    """All eta and epsilon instances over triples x <= y <= z."""
    rules = []
    n = len(alpha)
    for x in range(n):
        for y in range(x, n):
            odd_y = alpha.is_odd(y)
            for z in range(y, n):
                if (x != y or not odd_y) and (y != z or odd_y):
                    rules.append(KnuthRule("eta", x, y, z, (z, x, y), (x, z, y)))
                if (x != y or odd_y) and (y != z or not odd_y):
                    rules.append(KnuthRule("epsilon", x, y, z, (y, z, x), (y, x, z)))
    return rules


def _index(rules):
    by_lhs = {}
    for r in rules:
        by_lhs.setdefault(r.lhs, []).append(r)
    return by_lhs


def rewrite_positions(w: Word, rules: Iterable[KnuthRule]) -> list:
    """Every one-step rewrite of ``w`` as ``(rule, position, result)``, positions 0-based."""
    by_lhs = _index(rules)
    out = []
    for i in range(len(w) - 2):
        for r in by_lhs.get(tuple(w[i : i + 3]), ()):
            out.append((r, i, w[:i] + r.rhs + w[i + 3 :]))
    return out


def _neighbours(w, by_lhs, by_rhs):
    for i in range(len(w) - 2):
        factor = w[i : i + 3]
        for r in by_lhs.get(factor, ()):
            yield w[:i] + r.rhs + w[i + 3 :]
        for r in by_rhs.get(factor, ()):
            yield w[:i] + r.lhs + w[i + 3 :]


def congruence_class(w: Word, rules: Iterable[KnuthRule], cap: int = DEFAULT_CLASS_CAP) -> set:
    """The class of ``w`` under the symmetric closure of ``rules``.

    Rules preserve length and content, so the search is finite; ``cap``
    guards against accidental use on long words.
    """
    rules = list(rules)
    by_lhs = _index(rules)
    by_rhs = {}
    for r in rules:
        by_rhs.setdefault(r.rhs, []).append(r)
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(cur, by_lhs, by_rhs):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise ClassSizeExceeded(f"congruence class exceeds {cap} words")
                queue.append(nxt)
    return seen


def are_congruent(alpha: SignedAlphabet, w1: Word, w2: Word, method: str = "cross_section", rules=None) -> bool:
    w1, w2 = tuple(w1), tuple(w2)
    if method == "cross_section":
        return p_symbol_right(alpha, w1) == p_symbol_right(alpha, w2)
    if rules is None:
        rules = knuth_rules(alpha)
    if method == "bfs":
        if sorted(w1) != sorted(w2):
            return False
        return w2 in congruence_class(w1, rules)
    if method == "both":
        bfs = are_congruent(alpha, w1, w2, "bfs", rules)
        tab = are_congruent(alpha, w1, w2, "cross_section")
        if bfs != tab:
            raise OracleMismatch(w1, w2, bfs, tab)
        return bfs
    raise ValueError(f"unknown method {method!r}")


def normal_forms_from(w: Word, rules) -> set:
    """Irreducible words reachable from ``w`` by oriented rewriting."""
    by_lhs = _index(rules)
    seen = {tuple(w)}
    stack = [tuple(w)]
    irreducible = set()
    while stack:
        cur = stack.pop()
        stepped = False
        for i in range(len(cur) - 2):
            for r in by_lhs.get(cur[i : i + 3], ()):
                stepped = True
                nxt = cur[:i] + r.rhs + cur[i + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if not stepped:
            irreducible.add(cur)
    return irreducible


def is_irreducible(w: Word, rules) -> bool:
    return not rewrite_positions(w, rules)


@dataclass(frozen=True)
class CriticalPair:
    source: Word
    first: tuple  # (rule, position, result)
    second: tuple
    joinable: bool


def knuth_critical_pairs(alpha: SignedAlphabet, rules=None) -> list:
    """Critical pairs from overlapping left sides, with a joinability verdict."""
    if rules is None:
        rules = knuth_rules(alpha)
    rules = list(rules)
    out = []
    for i1, r1 in enumerate(rules):
        for i2, r2 in enumerate(rules):
            for shift in (0, 1, 2):
                if r1.lhs[shift:] != r2.lhs[: 3 - shift]:
                    continue
                if shift == 0 and i1 >= i2:
                    continue
                source = r1.lhs + r2.lhs[3 - shift :]
                first = (r1, 0, r1.rhs + source[3:])
                second = (r2, shift, source[:shift] + r2.rhs + source[shift + 3 :])
                joinable = bool(normal_forms_from(first[2], rules) & normal_forms_from(second[2], rules))
                out.append(CriticalPair(source, first, second, joinable))
    return out
