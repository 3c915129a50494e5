import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import W
from superplactic.alphabet import SignedAlphabet, all_parity_alphabets, words_up_to
from superplactic.insertion import (
    bump_position,
    insert_left,
    insert_right,
    insert_word_left,
    insert_word_right,
    p_symbol,
    p_symbol_left,
    p_symbol_right,
    star_r,
)
from superplactic.knuth import congruence_class, knuth_rules
from superplactic.tableau import EMPTY, Tableau, is_tableau, read_col, read_row, validate


def rows_of(alpha, rows):
    return validate(alpha, [[alpha.index(str(x)) for x in r] for r in rows])


def naive_row_insert(alpha, rows, x):
    # even letters bump the first strictly larger entry, odd ones the first entry >= x
    rows = [list(r) for r in rows]
    for r in rows:
        hits = [k for k, y in enumerate(r) if (y >= x if alpha.is_odd(x) else y > x)]
        if not hits:
            r.append(x)
            return rows
        k = hits[0]
        r[k], x = x, r[k]
    rows.append([x])
    return rows


def naive_p(alpha, w):
    rows = []
    for x in w:
        rows = naive_row_insert(alpha, rows, x)
    return Tableau.from_rows(rows)


def test_right_insertion_display(nat6):
    t = rows_of(nat6, [[1, 2, 2, 3], [1, 3, 4], [3]])
    assert insert_right(nat6, t, nat6.index("2")) == rows_of(nat6, [[1, 2, 2, 2], [1, 3, 4], [3], [3]])


def test_left_insertion_display(nat6):
    t = rows_of(nat6, [[1, 2, 5, 6], [1, 4, 5], [2]])
    assert insert_left(nat6, nat6.index("1"), t) == rows_of(nat6, [[1, 2, 2, 5, 6], [1, 4, 5], [1]])


def test_insert_into_empty(a5):
    assert insert_right(a5, EMPTY, 2) == Tableau(((2,),))
    assert insert_left(a5, 2, EMPTY) == Tableau(((2,),))


def test_insert_even_appends(a5):
    t = rows_of(a5, [[1, 1, 2], [3, 4, 4], [5], [5]])
    assert insert_right(a5, t, a5.index("2")) == rows_of(a5, [[1, 1, 2, 2], [3, 4, 4], [5], [5]])


def test_left_insert_odd_cascade(a5):
    t = rows_of(a5, [[1, 1, 2], [3, 4, 4], [5], [5]])
    x = a5.index("3")
    got = insert_left(a5, x, t)
    assert is_tableau(a5, got.rows)
    # the 3 enters the first column and displaces the 5 above it
    assert [r[0] for r in got.rows] == [0, 2, 2, 4]
    assert got == p_symbol_right(a5, (x,) + read_row(t))


def test_p_symbol_examples(a5, e3):
    w = W(a5, "55344112")
    assert p_symbol(a5, w) == rows_of(a5, [[1, 1, 2], [3, 4, 4], [5], [5]])
    assert p_symbol_left(a5, w) == p_symbol_right(a5, w)
    assert p_symbol_right(a5, ()) == p_symbol_left(a5, ()) == EMPTY
    assert p_symbol_right(e3, W(e3, "312")) == rows_of(e3, [[1, 2], [3]])
    assert p_symbol_left(e3, (1,)) == Tableau(((1,),))


def test_word_insertion_helpers(e3):
    t = p_symbol_right(e3, W(e3, "31"))
    assert insert_word_right(e3, t, W(e3, "2")) == p_symbol_right(e3, W(e3, "312"))
    assert insert_word_left(e3, W(e3, "2"), t) == p_symbol_right(e3, W(e3, "231"))


def test_star_r(e3):
    t = p_symbol_right(e3, W(e3, "2121"))
    assert star_r(e3, t, EMPTY) == t == star_r(e3, EMPTY, t)
    assert star_r(e3, p_symbol(e3, W(e3, "31")), p_symbol(e3, W(e3, "2"))) == p_symbol(e3, W(e3, "312"))
    u, v, s = (p_symbol(e3, W(e3, x)) for x in ("2", "1", "21"))
    assert star_r(e3, star_r(e3, u, v), s) == star_r(e3, u, star_r(e3, v, s))


def test_matches_naive_insertion():
    for alpha in all_parity_alphabets(3):
        for w in words_up_to(alpha, 5):
            assert p_symbol_right(alpha, w) == naive_p(alpha, w)


def test_psymbol_fibres_are_congruence_classes():
    # small exhaustive slice of the cross-section property with BFS as the oracle
    for alpha in all_parity_alphabets(2):
        rules = knuth_rules(alpha)
        for w in words_up_to(alpha, 4):
            cls = congruence_class(w, rules)
            t = p_symbol_right(alpha, w)
            assert all(p_symbol_right(alpha, c) == t for c in cls)
            same_len = [x for x in words_up_to(alpha, len(w)) if len(x) == len(w)]
            assert {x for x in same_len if p_symbol_right(alpha, x) == t} == cls


@pytest.mark.parametrize("mode", ["row", "col"])
def test_bisect_agrees_with_linear(mode):
    for alpha in all_parity_alphabets(3):
        for w in words_up_to(alpha, 5):
            line = sorted(w)
            for x in alpha.letters:
                assert bump_position(alpha, line, x, mode, "bisect") == bump_position(alpha, line, x, mode)


parities = st.lists(st.integers(0, 1), min_size=1, max_size=4)


@st.composite
def alphabet_and_word(draw, max_len=9):
    alpha = SignedAlphabet.from_parities(draw(parities))
    w = tuple(draw(st.lists(st.integers(0, len(alpha) - 1), max_size=max_len)))
    return alpha, w


@settings(max_examples=300, deadline=None)
@given(alphabet_and_word())
def test_property_left_right_agree_and_retrieve(aw):
    alpha, w = aw
    t = p_symbol_right(alpha, w)
    assert is_tableau(alpha, t.rows)
    assert sorted(t.entries()) == sorted(w)
    assert p_symbol_left(alpha, w) == t
    assert p_symbol_right(alpha, read_row(t)) == t == p_symbol_right(alpha, read_col(t))


@settings(max_examples=200, deadline=None)
@given(alphabet_and_word(6), st.data())
def test_property_star_r_associative(aw, data):
    alpha, w = aw
    cut = sorted(data.draw(st.lists(st.integers(0, len(w)), min_size=2, max_size=2)))
    parts = [w[: cut[0]], w[cut[0] : cut[1]], w[cut[1] :]]
    a, b, c = (p_symbol_right(alpha, p) for p in parts)
    assert star_r(alpha, star_r(alpha, a, b), c) == star_r(alpha, a, star_r(alpha, b, c)) == p_symbol_right(alpha, w)
