import pytest

from conftest import W
from superplactic.alphabet import all_parity_alphabets
from superplactic.columns import Subtype, critical_branchings, parse_column_word, subtype
from superplactic.syzygy import (
    FORMS,
    IdentityFailure,
    build_diagram,
    classify,
    drawn_steps,
    reduced_family,
    shape_deviations,
    sphere_factorizations,
)
from superplactic.tableau import is_type1


def C(alpha, text):
    return parse_column_word(alpha, text)


def lhs_list(alpha, path):
    return [tuple(alpha.format_word(c) for c in rule.lhs) for _, rule in path.steps]


def test_form_a(e3):
    d = build_diagram(e3, *C(e3, "3|2|1"))
    assert d.form.tag == "A" and d.commutes and d.end == C(e3, "321")
    assert lhs_list(e3, d.source_path) == [("3", "2"), ("32", "1")]
    assert lhs_list(e3, d.target_path) == [("2", "1"), ("3", "21")]
    assert not shape_deviations(e3, d)


def test_form_b(e3):
    form = classify(e3, *C(e3, "1|32|1"))
    assert form.tag == "B"
    named = {k: e3.format_word(form.witnesses[k]) for k in ("e", "e'", "s", "s'")}
    assert named == {"e": "31", "e'": "2", "s": "321", "s'": "1"}
    d = build_diagram(e3, *C(e3, "1|32|1"))
    assert lhs_list(e3, d.source_path) == [("1", "32"), ("2", "1"), ("31", "21")]
    assert lhs_list(e3, d.target_path) == [("32", "1"), ("1", "321")]
    assert d.end == C(e3, "321|1")
    assert not shape_deviations(e3, d)


def test_form_c_prime(e3):
    u, v, t = C(e3, "2|1|21")
    assert subtype(e3, u, v) is Subtype.T01 and subtype(e3, v, t) is Subtype.T02
    assert is_type1(e3, u + v, t)
    d = build_diagram(e3, u, v, t)
    assert d.form.tag == "C'"
    assert lhs_list(e3, d.source_path) == [("2", "1")]
    assert lhs_list(e3, d.target_path) == [("1", "21"), ("2", "21"), ("2", "1")]
    assert d.source_path.end == d.target_path.end == C(e3, "21|21")


def test_classification_is_total_and_diagrams_commute():
    for alpha in all_parity_alphabets(2):
        for u, v, t in critical_branchings(alpha, 3):
            d = build_diagram(alpha, u, v, t)
            assert d.form.tag in FORMS and d.commutes


def test_c_prime_final_merge_is_single_column():
    # the last target step of a C' diagram merges a', w' into one column
    for alpha in all_parity_alphabets(3):
        for u, v, t in critical_branchings(alpha, 3):
            form = classify(alpha, u, v, t)
            if form.tag != "C'":
                continue
            a2, w2 = form.witnesses["a'"], form.witnesses["w'"]
            if a2 and w2 and not is_type1(alpha, a2, w2):
                assert subtype(alpha, a2, w2) is Subtype.T01


def test_form_c_can_need_an_extra_target_step(e3):
    # with (u, w) of subtype T02 the target side needs gamma_{a',w'} as well
    u, v, t = C(e3, "2|1|321")
    d = build_diagram(e3, u, v, t)
    assert d.form.tag == "C" and d.commutes
    assert subtype(e3, u, d.form.witnesses["w"]) is Subtype.T02
    assert len(drawn_steps(e3, d)[1]) == 2 and len(d.target_path) == 3
    assert shape_deviations(e3, d) == [
        "C target: walked 3 steps [((0,), (2, 1, 0)), ((1,), (2, 1, 0)), ((1,), (0,))], "
        "drawn [((0,), (2, 1, 0)), ((1,), (2, 1, 0))]"
    ]


def test_classify_rejects_stacking_pairs(e3):
    with pytest.raises(ValueError):
        classify(e3, *C(e3, "31|2|1"))


def test_reduced_family(e2, e3):
    assert reduced_family(e2, 2) == [C(e2, "2|1|21")]
    red = reduced_family(e3, 2)
    assert C(e3, "1|32|1") in red and all(len(b[0]) == 1 for b in red)
    assert reduced_family(e3, 2, branchings=[]) == []


def test_sphere_smoke(e3):
    r = sphere_factorizations(e3, e3.index("3"), W(e3, "2"), W(e3, "1"), W(e3, "21"))
    assert r.passed and len(r.checks) == 9


def test_sphere_degenerate_single_column(e3):
    # u1 v is one column, so s' is empty and its identities are trivial
    r = sphere_factorizations(e3, e3.index("3"), W(e3, "2"), W(e3, "1"), W(e3, "21"))
    assert r.columns["s'"] == ()
    assert r.passed


def test_sphere_sweep_all_even_three(e3):
    n = 0
    for u, v, t in critical_branchings(e3, 3):
        if len(u) >= 2 and len(u) - 1 <= 2 and len(v) <= 2 and len(t) <= 2:
            assert sphere_factorizations(e3, u[0], u[1:], v, t).passed
            n += 1
    assert n > 0


def test_sphere_errors(e3):
    with pytest.raises(ValueError):
        sphere_factorizations(e3, (0, 1), W(e3, "2"), W(e3, "1"), W(e3, "21"))
    with pytest.raises(ValueError):
        sphere_factorizations(e3, 2, (), W(e3, "1"), W(e3, "21"))


def test_identity_failure_message():
    exc = IdentityFailure("x.s = e y", ((1,),), ((2,),))
    assert "x.s = e y" in str(exc) and exc.expected == ((1,),)
