"""Right (row) and left (column) insertion, P-symbols and the product of tableaux."""
from __future__ import annotations

import functools

from .alphabet import SignedAlphabet, Word
from .tableau import EMPTY, Tableau, read_row

# Whether an entry equal to the inserted letter blocks it, keyed by
# (mode, parity of the inserted letter).  Rows accept repeated even letters,
# columns accept repeated odd letters.
_EQUAL_BLOCKS = {
    ("row", 0): False,
    ("row", 1): True,
    ("col", 0): True,
    ("col", 1): False,
}


def bumps(alpha: SignedAlphabet, y: int, x: int, mode: str) -> bool:
    """True if inserting ``x`` into a row/column must displace the entry ``y``."""
    return y > x or (y == x and _EQUAL_BLOCKS[mode, alpha.parity[x]])


def bump_position(alpha: SignedAlphabet, line, x: int, mode: str, method: str = "linear"):
    """Index of the entry of ``line`` displaced by ``x``, or None to append."""
    if method == "bisect":
        return _bump_position_bisect(alpha, line, x, mode)
    for k, y in enumerate(line):
        if bumps(alpha, y, x, mode):
            return k
    return None


def _bump_position_bisect(alpha, line, x, mode):
    # line is weakly increasing, so the bumped entries form a suffix
    lo, hi = 0, len(line)
    while lo < hi:
        mid = (lo + hi) // 2
        if bumps(alpha, line[mid], x, mode):
            hi = mid
        else:
            lo = mid + 1
    return lo if lo < len(line) else None


@functools.lru_cache(maxsize=1 << 18)
def insert_right(alpha: SignedAlphabet, t: Tableau, x: int) -> Tableau:
    """Row-insert ``x`` into ``t`` (written ``t <- x``)."""
    rows = [list(r) for r in t.rows]
    for row in rows:
        k = bump_position(alpha, row, x, "row")
        if k is None:
            row.append(x)
            return Tableau.from_rows(rows)
        row[k], x = x, row[k]
    rows.append([x])
    return Tableau.from_rows(rows)


@functools.lru_cache(maxsize=1 << 18)
def insert_left(alpha: SignedAlphabet, x: int, t: Tableau) -> Tableau:
    """Column-insert ``x`` into ``t`` (written ``x -> t``), starting at the leftmost column."""
    width = len(t.rows[0]) if t.rows else 0
    cols = [[row[j] for row in t.rows if j < len(row)] for j in range(width)]
    for col in cols:
        k = bump_position(alpha, col, x, "col")
        if k is None:
            col.append(x)
            break
        col[k], x = x, col[k]
    else:
        cols.append([x])
    height = len(cols[0])
    return Tableau(tuple(tuple(c[i] for c in cols if i < len(c)) for i in range(height)))


def insert_word_right(alpha: SignedAlphabet, t: Tableau, w: Word) -> Tableau:
    for x in w:
        t = insert_right(alpha, t, x)
    return t


def insert_word_left(alpha: SignedAlphabet, w: Word, t: Tableau) -> Tableau:
    for x in reversed(w):
        t = insert_left(alpha, x, t)
    return t


def p_symbol_right(alpha: SignedAlphabet, w: Word) -> Tableau:
    return insert_word_right(alpha, EMPTY, w)


def p_symbol_left(alpha: SignedAlphabet, w: Word) -> Tableau:
    return insert_word_left(alpha, w, EMPTY)


p_symbol = p_symbol_right


def star_r(alpha: SignedAlphabet, t: Tableau, t2: Tableau) -> Tableau:
    return insert_word_right(alpha, t, read_row(t2))
