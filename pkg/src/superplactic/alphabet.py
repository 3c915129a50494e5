"""Signed alphabets, words, super rows and super columns.

Letters are stored as their rank in the alphabet order (``0`` is the
smallest letter); names only matter for parsing and printing.  A word is a
plain tuple of ranks.
"""
from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple  # tuple[int, ...]

GREENE_MAX_LEN = 12


class AlphabetError(ValueError):
    pass


class WordParseError(ValueError):
    pass


@dataclass(frozen=True)
class SignedAlphabet:
    names: tuple
    parity: tuple

    def __post_init__(self):
        if not self.names:
            raise AlphabetError("empty letter list")
        if len(set(self.names)) != len(self.names):
            dup = next(n for n in self.names if self.names.count(n) > 1)
            raise AlphabetError(f"duplicate letter {dup!r}")
        if len(self.parity) != len(self.names):
            raise AlphabetError("parity length does not match letters")
        if any(p not in (0, 1) for p in self.parity):
            raise AlphabetError("parity values must be 0 or 1")

    @classmethod
    def from_parities(cls, parity: Sequence[int], names: Sequence[str] | None = None):
        """Alphabet ``1 < 2 < ... < n`` (or ``names``) with the given parities."""
        if names is None:
            names = [str(i + 1) for i in range(len(parity))]
        return cls(tuple(names), tuple(int(p) for p in parity))

    @classmethod
    def even(cls, n: int):
        return cls.from_parities([0] * n)

    @classmethod
    def odd(cls, n: int):
        return cls.from_parities([1] * n)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        odd = [n for n, p in zip(self.names, self.parity) if p]
        return f"SignedAlphabet({list(self.names)}, odd={odd})"

    @property
    def letters(self) -> range:
        return range(len(self.names))

    @property
    def even_letters(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parity) if p == 0)

    @property
    def odd_letters(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parity) if p == 1)

    def is_odd(self, x: int) -> bool:
        return self.parity[x] == 1

    def degree(self, w: Word) -> int:
        return sum(self.parity[x] for x in w) % 2

    @property
    def compact(self) -> bool:
        return all(len(n) == 1 for n in self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise WordParseError(f"unknown letter {name!r}") from None

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if not text:
            return ()
        if " " in text:
            return tuple(self.index(tok) for tok in text.split(" ") if tok != "")
        if text in self.names:
            return (self.index(text),)
        if not self.compact:
            raise WordParseError(
                "compact words need one-character letter names; separate letters by spaces"
            )
        return tuple(self.index(ch) for ch in text)

    def format_word(self, w: Word) -> str:
        sep = "" if self.compact else " "
        return sep.join(self.names[x] for x in w)

    def to_json(self) -> dict:
        return {
            "letters": list(self.names),
            "odd": [n for n, p in zip(self.names, self.parity) if p],
        }

    def describe(self) -> str:
        odd = "".join(str(p) for p in self.parity)
        return f"n={len(self)} parity={odd}"


def parse_alphabet(spec) -> SignedAlphabet:
    """Build an alphabet from the JSON document (text or already-decoded dict)."""
    if isinstance(spec, (str, bytes)):
        spec = json.loads(spec)
    if not isinstance(spec, dict) or "letters" not in spec:
        raise AlphabetError("alphabet must be an object with a 'letters' list")
    letters = [str(x) for x in spec["letters"]]
    odd = [str(x) for x in spec.get("odd", [])]
    if not letters:
        raise AlphabetError("empty letter list")
    if len(set(letters)) != len(letters):
        dup = next(n for n in letters if letters.count(n) > 1)
        raise AlphabetError(f"duplicate letter {dup!r}")
    for name in odd:
        if name not in letters:
            raise AlphabetError(f"odd letter {name!r} is not in letters")
    oddset = set(odd)
    return SignedAlphabet(tuple(letters), tuple(int(n in oddset) for n in letters))


def load_alphabet(path) -> SignedAlphabet:
    with open(path, encoding="utf-8") as fh:
        return parse_alphabet(json.load(fh))


def all_parity_alphabets(n: int) -> Iterator[SignedAlphabet]:
    """Every alphabet ``1 < ... < n`` under each of the ``2**n`` parity maps."""
    for parity in itertools.product((0, 1), repeat=n):
        yield SignedAlphabet.from_parities(parity)


def words(alpha: SignedAlphabet, length: int) -> Iterator[Word]:
    return itertools.product(alpha.letters, repeat=length)


def words_up_to(alpha: SignedAlphabet, max_len: int) -> Iterator[Word]:
    for n in range(max_len + 1):
        yield from words(alpha, n)


# --- super rows and columns -------------------------------------------------


def row_step_ok(alpha: SignedAlphabet, x: int, y: int) -> bool:
    """May ``y`` follow ``x`` in a super row."""
    return x < y or (x == y and alpha.parity[x] == 0)


def column_step_ok(alpha: SignedAlphabet, x: int, y: int) -> bool:
    """May ``y`` follow ``x`` in a super column (columns are read bottom to top)."""
    return y < x or (x == y and alpha.parity[x] == 1)


def is_super_row(alpha: SignedAlphabet, w: Word) -> bool:
    return all(row_step_ok(alpha, a, b) for a, b in zip(w, w[1:]))


def is_super_column(alpha: SignedAlphabet, w: Word) -> bool:
    return all(column_step_ok(alpha, a, b) for a, b in zip(w, w[1:]))


def deglex_key(u: Word):
    return (len(u), tuple(u))


def rev_key(u: Word):
    # longer columns come first
    return (-len(u), tuple(u))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def deglex_compare(u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` precedes, equals or follows ``v`` in length-lex order."""
    return _cmp(deglex_key(u), deglex_key(v))


def rev_compare(u: Word, v: Word) -> int:
    """Like :func:`deglex_compare` but longer words come first."""
    return _cmp(rev_key(u), rev_key(v))


# --- subsequence statistics -------------------------------------------------


def _longest_chain(w: Word, ok) -> int:
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if ok(w[i], w[j]) and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def longest_super_row_subseq_len(alpha: SignedAlphabet, w: Word) -> int:
    return _longest_chain(w, lambda a, b: row_step_ok(alpha, a, b))


def longest_super_col_subseq_len(alpha: SignedAlphabet, w: Word) -> int:
    return _longest_chain(w, lambda a, b: column_step_ok(alpha, a, b))


@functools.lru_cache(maxsize=None)
def _greene_profile_from_relation(n: int, rel: frozenset) -> tuple:
    # rel holds pairs (i, j), i < j, such that position j may follow position i.
    # The relation is transitive, so a set of positions is a valid subsequence
    # exactly when each pair of consecutive members is related.
    full = 1 << n
    valid = [False] * full
    valid[0] = True
    for mask in range(1, full):
        top = mask.bit_length() - 1
        rest = mask & ~(1 << top)
        if not valid[rest]:
            continue
        if rest == 0 or (rest.bit_length() - 1, top) in rel:
            valid[mask] = True
    # parts[mask] = fewest valid subsequences partitioning mask
    parts = [0] * full
    for mask in range(1, full):
        low = mask & -mask
        rest = mask ^ low
        best = n + 1
        sub = rest
        while True:
            piece = sub | low
            if valid[piece]:
                cand = parts[mask ^ piece] + 1
                if cand < best:
                    best = cand
                    if best == 1:
                        break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        parts[mask] = best
    # profile[k] = max size of a union of k disjoint valid subsequences
    profile = [0] * (n + 1)
    for mask in range(full):
        size = bin(mask).count("1")
        k = parts[mask]
        if size > profile[k]:
            profile[k] = size
    for k in range(1, n + 1):
        profile[k] = max(profile[k], profile[k - 1])
    return tuple(profile)


def greene_profile(alpha: SignedAlphabet, w: Word, kind: str = "row") -> tuple:
    """``(l_0(w), ..., l_n(w))`` by exhaustive search over disjoint families."""
    if len(w) > GREENE_MAX_LEN:
        raise ValueError(f"greene statistics are brute force; |w| must be <= {GREENE_MAX_LEN}")
    if kind == "row":
        ok = row_step_ok
    elif kind in ("col", "column"):
        ok = column_step_ok
    else:
        raise ValueError(f"kind must be 'row' or 'column', got {kind!r}")
    rel = frozenset(
        (i, j) for i in range(len(w)) for j in range(i + 1, len(w)) if ok(alpha, w[i], w[j])
    )
    return _greene_profile_from_relation(len(w), rel)


def greene_stat(alpha: SignedAlphabet, w: Word, k: int, kind: str = "row") -> int:
    """Largest total length of ``k`` disjoint super-row (or super-column) subsequences."""
    if k < 0:
        raise ValueError("k must be non-negative")
    profile = greene_profile(alpha, w, kind)
    return profile[min(k, len(w))]

