"""Confluence diagrams of critical branchings in the column system.

Each branching ``c_u c_v c_t`` (both pairs non-stacking) is closed by one of
five diagram shapes, determined by how many columns the products ``uv`` and
``vt`` have.  A diagram is stored as its two boundary rewrite paths.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import SignedAlphabet, Word
from .columns import (
    RewritePath,
    Subtype,
    apply_rule,
    critical_branchings,
    gamma_rule,
    is_normal_form,
    subtype,
)
from .insertion import p_symbol_right
from .tableau import columns_of, is_type1

FORMS = ("A", "B", "C", "C'", "D")

# gamma steps per side as drawn for each form, identities omitted
SHAPE = {"A": (2, 2), "B": (3, 2), "C": (2, 2), "C'": (1, 3), "D": (3, 3)}

# Every diagram is walked along the general hexagon: the source side rewrites
# at positions 0, 1, 0 and the target side at 1, 0, 1.  A step whose pair is
# missing (empty column) or already stacks is an identity.
_SOURCE_STEPS = (0, 1, 0)
_TARGET_STEPS = (1, 0, 1)


class DiagramMismatch(AssertionError):
    pass


class IdentityFailure(AssertionError):
    def __init__(self, name, expected, actual):
        super().__init__(f"reading identity {name} fails: expected {expected}, got {actual}")
        self.name = name
        self.expected = expected
        self.actual = actual


def product(alpha: SignedAlphabet, *ws) -> tuple:
    """Columns of the P-symbol of the concatenation of ``ws`` (empty words allowed)."""
    return tuple(columns_of(p_symbol_right(alpha, tuple(x for w in ws for x in w))))


def _pad(cols, n):
    return tuple(cols) + ((),) * (n - len(cols))


@dataclass(frozen=True)
class SyzygyForm:
    tag: str
    witnesses: dict = field(default_factory=dict, hash=False, compare=False)


def classify(alpha: SignedAlphabet, u: Word, v: Word, t: Word) -> SyzygyForm:
    """Which of the five diagram forms closes the branching on ``c_u c_v c_t``."""
    left = subtype(alpha, u, v)
    right = subtype(alpha, v, t)
    if Subtype.T1 in (left, right):
        raise ValueError("both adjacent pairs must be non-stacking")
    e, e2 = _pad(product(alpha, u, v), 2)
    w, w2 = _pad(product(alpha, v, t), 2)
    a, a2 = _pad(product(alpha, u, w), 2)
    b, b2 = _pad(product(alpha, e2, t), 2)
    full = _pad(product(alpha, u, v, t), 3)
    wit = {"e": e, "e'": e2, "w": w, "w'": w2, "a": a, "a'": a2, "b": b, "b'": b2, "d": full[1]}
    if left is Subtype.T01 and right is Subtype.T01:
        tag = "A"
    elif left is Subtype.T02 and right is Subtype.T01:
        tag = "B"
        wit["s"], wit["s'"] = full[0], full[1]
    elif left is Subtype.T01:
        tag = "C'" if is_type1(alpha, u + v, t) else "C"
    else:
        tag = "D"
    return SyzygyForm(tag, wit)


@dataclass(frozen=True)
class SyzygyDiagram:
    triple: tuple
    form: SyzygyForm
    source_path: RewritePath
    target_path: RewritePath
    identities: tuple = ()  # (side, index) of hexagon steps that were identities

    @property
    def commutes(self) -> bool:
        return self.source_path.end == self.target_path.end

    @property
    def end(self) -> tuple:
        return self.source_path.end


def _walk(alpha, start, positions, side, identities):
    cur = start
    steps = []
    for k, pos in enumerate(positions):
        if pos + 1 >= len(cur) or is_type1(alpha, cur[pos], cur[pos + 1]):
            identities.append((side, k))
            continue
        rule = gamma_rule(alpha, cur[pos], cur[pos + 1])
        cur = apply_rule(cur, pos, rule)
        steps.append((pos, rule))
    return RewritePath(start, tuple(steps), cur)


def build_diagram(alpha: SignedAlphabet, u: Word, v: Word, t: Word) -> SyzygyDiagram:
    """Both boundary paths of the syzygy filling the branching on ``c_u c_v c_t``."""
    form = classify(alpha, u, v, t)
    start = (u, v, t)
    identities = []
    src = _walk(alpha, start, _SOURCE_STEPS, "source", identities)
    tgt = _walk(alpha, start, _TARGET_STEPS, "target", identities)
    diagram = SyzygyDiagram(start, form, src, tgt, tuple(identities))
    expected = product(alpha, u, v, t)
    if not src.steps or src.steps[0] != (0, gamma_rule(alpha, u, v)):
        raise DiagramMismatch(f"source path of {start} does not start with the left rule")
    if not tgt.steps or tgt.steps[0] != (1, gamma_rule(alpha, v, t)):
        raise DiagramMismatch(f"target path of {start} does not start with the right rule")
    for path in (src, tgt):
        if path.end != expected or not is_normal_form(alpha, path.end):
            raise DiagramMismatch(
                f"{form.tag} diagram of {start} ends at {path.end}, expected {expected}"
            )
    _check_witnesses(alpha, diagram)
    return diagram


def _strip(cw):
    return tuple(c for c in cw if c)


def _dedup(seq):
    return [cw for k, cw in enumerate(seq) if k == 0 or cw != seq[k - 1]]


def _check_witnesses(alpha, diagram):
    # intermediate words must be the named columns of the hexagon
    wit = diagram.form.witnesses
    u, v, t = diagram.triple
    full = _pad(product(alpha, u, v, t), 3)
    if wit["a"] != full[0] or wit["b'"] != full[2]:
        raise DiagramMismatch(f"named columns a, b' of {diagram.triple} disagree with uvt")
    n = lambda *names: _strip(tuple(wit[k] for k in names))
    drawn = {
        "source": [n("e", "e'") + (t,), n("e", "b", "b'"), n("a", "d", "b'")],
        "target": [(u,) + n("w", "w'"), n("a", "a'", "w'"), n("a", "d", "b'")],
    }
    for side, path in (("source", diagram.source_path), ("target", diagram.target_path)):
        got = _dedup([_strip(cw) for cw in path.words()[1:]])
        want = _dedup(drawn[side])
        if got != want:
            raise DiagramMismatch(f"{side} path of {diagram.triple}: {got} != {want}")


def drawn_steps(alpha: SignedAlphabet, diagram: SyzygyDiagram) -> tuple:
    """The left-hand sides of the gamma steps drawn for the form, per side."""
    wit = diagram.form.witnesses
    u, v, t = diagram.triple
    e, e2, w, w2, a2, b = (wit[k] for k in ("e", "e'", "w", "w'", "a'", "b"))
    tag = diagram.form.tag
    if tag == "A":
        return [(u, v), (u + v, t)], [(v, t), (u, v + t)]
    if tag == "B":
        return [(u, v), (e2, t), (e, e2 + t)], [(v, t), (u, v + t)]
    if tag == "C":
        return [(u, v), (u + v, t)], [(v, t), (u, w)]
    if tag == "C'":
        return [(u, v)], [(v, t), (u, w), (a2, w2)]
    return [(u, v), (e2, t), (e, b)], [(v, t), (u, w), (a2, w2)]


def shape_deviations(alpha: SignedAlphabet, diagram: SyzygyDiagram) -> list:
    """Differences between the walked paths and the drawn shape of the form.

    A drawn step may be skipped only if it is an identity (a named column is
    empty or the pair already stacks).  Returns human-readable deviations.
    """
    out = []
    drawn = drawn_steps(alpha, diagram)
    for side, path, pairs in (
        ("source", diagram.source_path, drawn[0]),
        ("target", diagram.target_path, drawn[1]),
    ):
        want = [p for p in pairs if p[0] and p[1] and not is_type1(alpha, *p)]
        got = [rule.lhs for _, rule in path.steps]
        if got != want:
            out.append(f"{diagram.form.tag} {side}: walked {len(got)} steps {got}, drawn {want}")
    return out


def shape_counts(diagram: SyzygyDiagram) -> tuple:
    return (len(diagram.source_path), len(diagram.target_path))


def reduced_family(alpha: SignedAlphabet, max_len: int, branchings=None) -> list:
    """Critical branchings whose first column is a single letter."""
    if branchings is None:
        branchings = critical_branchings(alpha, max_len)
    return [b for b in branchings if len(b[0]) == 1]


# --- triple-sphere factorization identities ---------------------------------


@dataclass
class SphereReport:
    triple: tuple
    columns: dict
    checks: list  # (name, expected, actual, passed)

    @property
    def passed(self) -> bool:
        return all(c[3] for c in self.checks)

    @property
    def failures(self) -> list:
        return [c[0] for c in self.checks if not c[3]]


def _split(cols, known):
    """Match ``cols`` against ``known`` first columns; return the leftover column."""
    cols = tuple(cols)
    head = tuple(c for c in known if c)
    if cols[: len(head)] != head or len(cols) > len(head) + 1:
        return None
    rest = cols[len(head) :]
    return rest[0] if rest else ()


def sphere_factorizations(alpha: SignedAlphabet, x, u1: Word, v: Word, t: Word, strict: bool = True) -> SphereReport:
    """Check the nine reading identities behind factoring ``u = x u1``.

    Columns named below follow the diagram conventions: ``s, s'`` come from
    ``u1 v``, ``w, w'`` from ``v t``, ``a1, a1'`` from ``u1 w``, ``d1, d1'``
    from ``s' t``; ``e, e'`` from ``u v``, ``a, a'`` from ``u w``, ``b, b'``
    from ``e' t`` and ``d`` is the middle column of ``u v t``.  The letters
    ``z, y`` and columns ``s2, s3`` are solved from the first identity they
    occur in.  Empty columns are allowed throughout.
    """
    if isinstance(x, int):
        x = (x,)
    x = tuple(x)
    if len(x) != 1:
        raise ValueError("x must be a single letter")
    u = x + tuple(u1)
    if not u1 or is_type1(alpha, u, v) or is_type1(alpha, v, t):
        raise ValueError("(x u1, v) and (v, t) must both be non-stacking")
    col = {}
    col["s"], col["s'"] = _pad(product(alpha, u1, v), 2)
    col["w"], col["w'"] = _pad(product(alpha, v, t), 2)
    col["a1"], col["a1'"] = _pad(product(alpha, u1, col["w"]), 2)
    col["d1"], col["d1'"] = _pad(product(alpha, col["s'"], t), 2)
    col["e"], col["e'"] = _pad(product(alpha, u, v), 2)
    col["a"], col["a'"] = _pad(product(alpha, u, col["w"]), 2)
    col["b"], col["b'"] = _pad(product(alpha, col["e'"], t), 2)
    col["d"] = _pad(product(alpha, u, v, t), 3)[1]

    checks = []

    def solve(name, got, known, unknown, letter=False):
        rest = _split(got, [col[k] for k in known])
        ok = rest is not None and (not letter or len(rest) <= 1)
        col[unknown] = rest if ok else ()
        want = tuple(col[k] for k in known if col[k]) + ((rest,) if rest else ())
        checks.append((name, want, tuple(got), ok))

    def check(name, got, expected):
        want = tuple(col[k] for k in expected if col[k])
        checks.append((name, want, tuple(got), tuple(got) == want))

    solve("x.a1 = a z", product(alpha, x, col["a1"]), ["a"], "z", letter=True)
    check("z.a1' = a'", product(alpha, col["z"], col["a1'"]), ["a'"])
    solve("x.s = e y", product(alpha, x, col["s"]), ["e"], "y", letter=True)
    check("y.s' = e'", product(alpha, col["y"], col["s'"]), ["e'"])
    solve("y.d1 = b s2", product(alpha, col["y"], col["d1"]), ["b"], "s2")
    check("s2.d1' = b'", product(alpha, col["s2"], col["d1'"]), ["b'"])
    solve("s.d1 = a1 s3", product(alpha, col["s"], col["d1"]), ["a1"], "s3")
    check("a1'.w' = s3 d1'", product(alpha, col["a1'"], col["w'"]), ["s3", "d1'"])
    check("z.s3 = d s2", product(alpha, col["z"], col["s3"]), ["d", "s2"])

    report = SphereReport((x, tuple(u1), tuple(v), tuple(t)), col, checks)
    if strict and not report.passed:
        name, want, got, _ = next(c for c in checks if not c[3])
        raise IdentityFailure(name, want, got)
    return report
