"""Super semistandard tableaux over a signed alphabet."""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .alphabet import SignedAlphabet, Word, column_step_ok, row_step_ok


class TableauError(ValueError):
    pass


class NotAPartition(TableauError):
    pass


class RowViolation(TableauError):
    def __init__(self, i, j):
        super().__init__(f"row condition fails at cell ({i},{j})")
        self.cell = (i, j)


class ColumnViolation(TableauError):
    def __init__(self, i, j):
        super().__init__(f"column condition fails at cell ({i},{j})")
        self.cell = (i, j)


@dataclass(frozen=True)
class Tableau:
    """Rows of letter ranks, top row first.  Use :func:`validate` to check."""

    rows: tuple = ()

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(r) for r in rows if len(r)))

    def __len__(self):
        return sum(len(r) for r in self.rows)

    def __bool__(self):
        return bool(self.rows)

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> list:
        return [x for r in self.rows for x in r]


EMPTY = Tableau()


def validate(alpha: SignedAlphabet, rows) -> Tableau:
    """Return the tableau if ``rows`` is a super tableau, else raise.

    Cells are reported 1-based, the first failing one in row-major order.
    """
    rows = [list(r) for r in rows]
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
        raise NotAPartition(f"row lengths {lengths} are not a partition")
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if not 0 <= x < len(alpha):
                raise TableauError(f"letter {x!r} at ({i + 1},{j + 1}) not in alphabet")
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if j + 1 < len(row) and not row_step_ok(alpha, x, row[j + 1]):
                raise RowViolation(i + 1, j + 1)
            if i + 1 < len(rows) and j < len(rows[i + 1]):
                # column entries read top to bottom increase like a reversed column word
                if not column_step_ok(alpha, rows[i + 1][j], x):
                    raise ColumnViolation(i + 1, j + 1)
    return Tableau.from_rows(rows)


def is_tableau(alpha: SignedAlphabet, rows) -> bool:
    try:
        validate(alpha, rows)
    except TableauError:
        return False
    return True


def read_row(t: Tableau) -> Word:
    return tuple(x for row in reversed(t.rows) for x in row)


def columns_of(t: Tableau) -> list:
    """Columns left to right, each read bottom to top (so each is a super column)."""
    if not t.rows:
        return []
    cols = []
    for j in range(len(t.rows[0])):
        cols.append(tuple(row[j] for row in reversed(t.rows) if j < len(row)))
    return cols


def read_col(t: Tableau) -> Word:
    return tuple(x for col in columns_of(t) for x in col)


def from_columns(cols) -> Tableau:
    """Stack top-aligned columns (each given bottom to top) into rows."""
    cols = [tuple(c) for c in cols if c]
    if not cols:
        return EMPTY
    height = max(len(c) for c in cols)
    rows = []
    for i in range(height):
        rows.append(tuple(c[len(c) - 1 - i] for c in cols if i < len(c)))
    return Tableau(tuple(rows))


def shape(t: Tableau) -> tuple:
    return t.shape


def conjugate(parts) -> tuple:
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


class Juxtaposition(Enum):
    TYPE1 = 1
    TYPE0 = 0


def juxtaposition_class(alpha: SignedAlphabet, u: Word, v: Word) -> Juxtaposition:
    """Type1 iff the columns u and v, drawn side by side and top-aligned, form a tableau.

    Entries are compared at equal depth from the top, which is the end of
    each column word.
    """
    if not u or not v:
        raise ValueError("juxtaposition is only defined for nonempty columns")
    if len(u) < len(v):
        return Juxtaposition.TYPE0
    for i in range(1, len(v) + 1):
        if not row_step_ok(alpha, u[-i], v[-i]):
            return Juxtaposition.TYPE0
    return Juxtaposition.TYPE1


def is_type1(alpha: SignedAlphabet, u: Word, v: Word) -> bool:
    return juxtaposition_class(alpha, u, v) is Juxtaposition.TYPE1


# --- I/O --------------------------------------------------------------------


def to_json(alpha: SignedAlphabet, t: Tableau) -> dict:
    return {"rows": [[alpha.names[x] for x in row] for row in t.rows]}


def from_json(alpha: SignedAlphabet, doc) -> Tableau:
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    rows = [[alpha.index(str(x)) for x in row] for row in doc["rows"]]
    return validate(alpha, rows)


def render(alpha: SignedAlphabet, t: Tableau) -> str:
    return "\n".join(" ".join(alpha.names[x] for x in row) for row in t.rows)
