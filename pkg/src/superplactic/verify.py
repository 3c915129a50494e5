"""Exhaustive verification suites over small alphabets.

Each suite enumerates a finite family of cases, checks a property on every
case and returns a :class:`VerificationReport`.  Default bounds are the
desk-scale ones used by the acceptance tests.
"""
from __future__ import annotations

import itertools
import logging
import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace

from .alphabet import (
    SignedAlphabet,
    all_parity_alphabets,
    greene_profile,
    words,
    words_up_to,
)
from .columns import (
    Subtype,
    check_confluence,
    critical_branchings,
    enumerate_columns,
    flatten,
    gamma_rule,
    gamma_rules_where,
    is_normal_form,
    ll_compare,
    merge_rules,
    normal_form,
    precolumn_rules,
    two_column_lemma_check,
)
from .insertion import insert_left, insert_right, insert_word_right, p_symbol_left, p_symbol_right, star_r
from .knuth import congruence_class, knuth_critical_pairs, knuth_rules, normal_forms_from
from .syzygy import FORMS, build_diagram, shape_deviations, sphere_factorizations
from .tableau import columns_of, conjugate, from_columns, is_tableau, read_col, read_row

log = logging.getLogger(__name__)

MAX_STORED_FAILURES = 100
CASE_LIMIT = 20_000_000  # estimates are upper bounds


class BoundsTooLarge(ValueError):
    def __init__(self, suite, estimate, limit=CASE_LIMIT):
        super().__init__(
            f"suite {suite} would run about {estimate} cases (limit {limit}); rerun with force (CLI: --yes-i-mean-it)"
        )
        self.estimate = estimate


@dataclass(frozen=True)
class Bounds:
    alphabet_size: int = 3
    all_parities: bool = True
    max_word_len: int | None = None
    max_col_len: int | None = None
    max_generators: int | None = None
    seed: int = 0

    def alphabets(self):
        if self.all_parities:
            return list(all_parity_alphabets(self.alphabet_size))
        return [SignedAlphabet.even(self.alphabet_size)]

    def as_dict(self) -> dict:
        return {
            "alphabet_size": self.alphabet_size,
            "all_parities": self.all_parities,
            "max_word_len": self.max_word_len,
            "max_col_len": self.max_col_len,
            "max_generators": self.max_generators,
            "seed": self.seed,
        }


@dataclass
class VerificationReport:
    suite: str
    alphabets: list
    bounds: dict
    cases: int = 0
    failures: list = field(default_factory=list)  # (case id, expected, actual)
    failure_count: int = 0
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "suite": self.suite,
            "alphabets": self.alphabets,
            "bounds": self.bounds,
            "cases": self.cases,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [
                {"case": c, "expected": repr(e), "actual": repr(a)} for c, e, a in self.failures
            ],
            "details": self.details,
        }
        if timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {self.failure_count} failures"


class _Recorder:
    def __init__(self, report):
        self.report = report

    def case(self, case_id, ok, expected=None, actual=None):
        """Count one case; ``case_id`` may be a callable, built only on failure."""
        self.report.cases += 1
        if ok:
            return
        if callable(case_id):
            case_id = case_id()
        self.report.failure_count += 1
        if self.report.failure_count <= MAX_STORED_FAILURES:
            log.warning("%s failure at %s: expected %r, got %r", self.report.suite, case_id, expected, actual)
        elif self.report.failure_count == MAX_STORED_FAILURES + 1:
            log.warning("%s: more failures, no longer logged", self.report.suite)
        self.report.failures.append((case_id, expected, actual))
        if len(self.report.failures) > MAX_STORED_FAILURES:
            self.report.failures.sort(key=lambda f: f[0])
            del self.report.failures[MAX_STORED_FAILURES:]


def _wid(alpha, w):
    return f"{alpha.describe()} w={alpha.format_word(w) or '()'}"


def _tableaux_from_words(alpha, max_len):
    return sorted({p_symbol_right(alpha, w) for w in words_up_to(alpha, max_len)}, key=lambda t: t.rows)


# --- suites -----------------------------------------------------------------


def _cross_section(b: Bounds, rec):
    # BFS congruence classes must coincide with the fibres of the P-symbol;
    # comparing the two partitions of each length settles every pair at once.
    for alpha in b.alphabets():
        rules = knuth_rules(alpha)
        for n in range(b.max_word_len + 1):
            tableau_of = {w: p_symbol_right(alpha, w) for w in words(alpha, n)}
            seen = set()
            for w in sorted(tableau_of):
                if w in seen:
                    continue
                cls = congruence_class(w, rules)
                seen |= cls
                fibre = {x for x, t in tableau_of.items() if t == tableau_of[w]}
                rec.case(_wid(alpha, w), cls == fibre, sorted(fibre), sorted(cls))


def _insertion_commutation(b: Bounds, rec):
    for alpha in b.alphabets():
        name = alpha.describe()
        tabs = _tableaux_from_words(alpha, b.max_word_len)
        for t in tabs:
            rec.case(f"{name} retrieval {t.rows}",
                     p_symbol_right(alpha, read_row(t)) == t == p_symbol_right(alpha, read_col(t)),
                     t, (p_symbol_right(alpha, read_row(t)), p_symbol_right(alpha, read_col(t))))
            for x in alpha.letters:
                for y in alpha.letters:
                    lhs = insert_left(alpha, y, insert_right(alpha, t, x))
                    rhs = insert_right(alpha, insert_left(alpha, y, t), x)
                    rec.case(lambda: f"{name} commute t={t.rows} x={x} y={y}", lhs == rhs, lhs, rhs)
        small = _tableaux_from_words(alpha, max(b.max_word_len - 1, 0))
        # star_r(t, s) is t with the row reading of s inserted
        reading = {t: read_row(t) for t in small}
        pair = {(t1, t2): star_r(alpha, t1, t2) for t1 in small for t2 in small}
        pair_reading = {k: read_row(v) for k, v in pair.items()}
        for t1 in small:
            for t2 in small:
                t12 = pair[t1, t2]
                for t3 in small:
                    lhs = insert_word_right(alpha, t12, reading[t3])
                    rhs = insert_word_right(alpha, t1, pair_reading[t2, t3])
                    rec.case(lambda: f"{name} assoc {t1.rows} {t2.rows} {t3.rows}", lhs == rhs, lhs, rhs)


def _psymbol_agreement(b: Bounds, rec):
    for alpha in b.alphabets():
        for w in words_up_to(alpha, b.max_word_len):
            r, l = p_symbol_right(alpha, w), p_symbol_left(alpha, w)
            rec.case(_wid(alpha, w), r == l and is_tableau(alpha, r.rows or []), r, l)


def _greene(b: Bounds, rec):
    for alpha in b.alphabets():
        for w in words_up_to(alpha, b.max_word_len):
            lam = p_symbol_right(alpha, w).shape
            lamc = conjugate(lam)
            want_rows = tuple(sum(lam[:k]) for k in range(len(w) + 1))
            want_cols = tuple(sum(lamc[:k]) for k in range(len(w) + 1))
            got = (greene_profile(alpha, w, "row"), greene_profile(alpha, w, "column"))
            rec.case(_wid(alpha, w), got == (want_rows, want_cols), (want_rows, want_cols), got)


def _termination(b: Bounds, rec):
    for alpha in b.alphabets():
        cols = enumerate_columns(alpha, b.max_col_len)
        for u in cols:
            for v in cols:
                rule = gamma_rule(alpha, u, v)
                if rule is None:
                    continue
                cid = f"{alpha.describe()} u={u} v={v}"
                lemma = two_column_lemma_check(alpha, u, v)
                rec.case(cid + " two-column", lemma["ok"], "<=2 columns, left longer than u", lemma["columns"])
                before, after = (u, v), rule.rhs
                rec.case(cid + " decreasing", ll_compare(after, before) < 0, "rhs << lhs", after)
                rec.case(cid + " sound", p_symbol_right(alpha, u + v) == p_symbol_right(alpha, flatten(after)),
                         u + v, flatten(after))
        # normal forms are exactly the column decompositions of tableaux
        gens = b.max_generators or 2
        for k in range(gens + 1):
            for cw in itertools.product(cols, repeat=k):
                t = from_columns(cw)
                char = is_tableau(alpha, t.rows) and tuple(columns_of(t)) == cw
                rec.case(f"{alpha.describe()} irreducible {cw}", is_normal_form(alpha, cw) == char, char,
                         is_normal_form(alpha, cw))


def _strategy_independence(b: Bounds, rec):
    # five generators seeded once; each one's draws continue across cases
    rng = random.Random(b.seed)
    gens = [random.Random(rng.randrange(2**31)) for _ in range(5)]
    for alpha in b.alphabets():
        cols = enumerate_columns(alpha, b.max_col_len)
        for k in range(b.max_generators + 1):
            for cw in itertools.product(cols, repeat=k):
                ref, _ = normal_form(alpha, cw, "leftmost")
                others = [normal_form(alpha, cw, "rightmost")[0]]
                others += [normal_form(alpha, cw, "random", rng=g)[0] for g in gens]
                want = tuple(columns_of(p_symbol_right(alpha, flatten(cw))))
                rec.case(f"{alpha.describe()} cw={cw}", all(o == ref for o in others) and ref == want, want,
                         [ref] + others)


def _branching_confluence(b: Bounds, rec):
    for alpha in b.alphabets():
        for u, v, t in critical_branchings(alpha, b.max_col_len):
            p1, p2, ok = check_confluence(alpha, u, v, t)
            want = tuple(columns_of(p_symbol_right(alpha, u + v + t)))
            rec.case(f"{alpha.describe()} {u}|{v}|{t}", ok and p1.end == want, want, (p1.end, p2.end))


def _syzygy_forms(b: Bounds, rec):
    counts = defaultdict(Counter)
    deviations = Counter()
    for alpha in b.alphabets():
        for u, v, t in critical_branchings(alpha, b.max_col_len):
            cid = f"{alpha.describe()} {u}|{v}|{t}"
            try:
                d = build_diagram(alpha, u, v, t)
            except AssertionError as exc:
                rec.case(cid, False, "commuting diagram", str(exc))
                continue
            counts[alpha.describe()][d.form.tag] += 1
            dev = shape_deviations(alpha, d)
            if dev:
                deviations[d.form.tag] += 1
            rec.case(cid, d.commutes and not dev and d.form.tag in FORMS, "drawn shape", dev)
    rec.report.details["forms"] = {k: dict(sorted(c.items())) for k, c in counts.items()}
    rec.report.details["shape_deviations"] = dict(sorted(deviations.items()))


def _spheres(b: Bounds, rec):
    for alpha in b.alphabets():
        for u, v, t in critical_branchings(alpha, b.max_col_len):
            if len(u) < 2:
                continue
            r = sphere_factorizations(alpha, u[0], u[1:], v, t, strict=False)
            rec.case(f"{alpha.describe()} {u}|{v}|{t}", r.passed, "all nine identities", r.failures)


def _precolumn_equality(b: Bounds, rec):
    for alpha in b.alphabets():
        pre = precolumn_rules(alpha, b.max_col_len)
        pc = {k: v for k, v in pre.items() if len(v) == 2}
        gam = gamma_rules_where(
            alpha, 2, lambda r: len(r.u) == 1 and len(r.v) == 2 and r.subtype is Subtype.T02
        )
        rec.case(f"{alpha.describe()} two-column rules", pc == gam, sorted(gam.items()), sorted(pc.items()))
        merges = gamma_rules_where(
            alpha, b.max_col_len - 1, lambda r: len(r.u) == 1 and r.subtype is Subtype.T01
        )
        rec.case(f"{alpha.describe()} merge rules", merges == merge_rules(alpha, b.max_col_len),
                 sorted(merges.items()), sorted(merge_rules(alpha, b.max_col_len).items()))


def _knuth_pairs(b: Bounds, rec):
    witnesses = []
    for alpha in b.alphabets():
        rules = knuth_rules(alpha)
        pairs = knuth_critical_pairs(alpha, rules)
        bad = [p for p in pairs if not p.joinable]
        rec.report.details.setdefault("pairs", {})[alpha.describe()] = {"total": len(pairs), "non_joinable": len(bad)}
        for p in bad:
            n1 = min(normal_forms_from(p.first[2], rules))
            n2 = min(normal_forms_from(p.second[2], rules))
            same = n2 in congruence_class(n1, rules)
            witnesses.append(
                {
                    "alphabet": alpha.describe(),
                    "source": alpha.format_word(p.source),
                    "normal_forms": [alpha.format_word(n1), alpha.format_word(n2)],
                }
            )
            rec.case(f"{alpha.describe()} {p.source}", n1 != n2 and same, "distinct congruent irreducibles",
                     (n1, n2))
    rec.report.details["witnesses"] = witnesses[:5]
    rec.report.details["non_joinable"] = len(witnesses)
    rec.case("at least one non-joinable pair", bool(witnesses), ">= 1", 0)


SUITES = {
    "cross_section": (_cross_section, Bounds(max_word_len=5)),
    "insertion_commutation": (_insertion_commutation, Bounds(max_word_len=5)),
    "psymbol_agreement": (_psymbol_agreement, Bounds(max_word_len=7)),
    "greene": (_greene, Bounds(max_word_len=7)),
    "termination": (_termination, Bounds(max_col_len=3, max_generators=3)),
    "strategy_independence": (_strategy_independence, Bounds(max_col_len=3, max_generators=4)),
    "branching_confluence": (_branching_confluence, Bounds(max_col_len=3)),
    "syzygy_forms": (_syzygy_forms, Bounds(max_col_len=3)),
    "spheres": (_spheres, Bounds(max_col_len=3)),
    "precolumn_equality": (_precolumn_equality, Bounds(max_col_len=3)),
    "knuth_pairs": (_knuth_pairs, Bounds(alphabet_size=4, all_parities=False)),
}


def default_bounds(name: str) -> Bounds:
    return SUITES[name][1]


def _n_columns(n, max_len):
    # all-odd alphabets have the most columns: multisets of size <= max_len
    from math import comb

    return sum(comb(n + k - 1, k) for k in range(1, max_len + 1))


def estimate_cases(name: str, b: Bounds) -> int:
    n = b.alphabet_size
    alphabets = 2**n if b.all_parities else 1
    L = b.max_word_len or 0
    words_count = sum(n**k for k in range(L + 1))
    cols = _n_columns(n, b.max_col_len or 0)
    if name in ("cross_section", "psymbol_agreement"):
        per = words_count
    elif name == "greene":
        per = words_count * (3 ** min(L, 12)) // 4
    elif name == "insertion_commutation":
        small = sum(n**k for k in range(L))
        per = words_count * n * n + small**3
    elif name == "termination":
        per = cols**2 + cols ** (b.max_generators or 2)
    elif name == "strategy_independence":
        per = 7 * cols ** (b.max_generators or 0)
    elif name in ("branching_confluence", "syzygy_forms", "spheres"):
        per = cols**3
    elif name == "precolumn_equality":
        per = cols**2
    else:
        per = (n**3) ** 2
    return alphabets * per


def run_suite(name: str, bounds: Bounds | None = None, force: bool = False, **overrides) -> VerificationReport:
    """Run one named suite; ``overrides`` replace individual default bounds."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn, defaults = SUITES[name]
    b = bounds or defaults
    clean = {k: v for k, v in overrides.items() if v is not None}
    if clean:
        b = replace(b, **clean)
    for attr in ("max_word_len", "max_col_len", "max_generators"):
        if getattr(b, attr) is None and getattr(defaults, attr) is not None:
            b = replace(b, **{attr: getattr(defaults, attr)})
    if name == "greene" and (b.max_word_len or 0) > 12:
        raise BoundsTooLarge(name, estimate_cases(name, b))
    est = estimate_cases(name, b)
    if est > CASE_LIMIT and not force:
        raise BoundsTooLarge(name, est)
    report = VerificationReport(name, [a.describe() for a in b.alphabets()], b.as_dict())
    start = time.perf_counter()
    fn(b, _Recorder(report))
    report.wall_time = time.perf_counter() - start
    report.failures.sort(key=lambda f: f[0])
    return report
