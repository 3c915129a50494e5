import itertools

import pytest

from conftest import W
from superplactic.alphabet import SignedAlphabet, all_parity_alphabets, words_up_to
from superplactic.insertion import p_symbol_right
from superplactic.knuth import (
    ClassSizeExceeded,
    KnuthRule,
    are_congruent,
    congruence_class,
    is_irreducible,
    knuth_critical_pairs,
    knuth_rules,
    normal_forms_from,
    rewrite_positions,
)


def expected_rules(alpha):
    """Rule set straight from the side conditions, over all letter triples."""
    out = set()
    for x, y, z in itertools.product(alpha.letters, repeat=3):
        if not x <= y <= z:
            continue
        even_y = not alpha.is_odd(y)
        if (x < y or even_y) and (y < z or not even_y):
            out.add(((z, x, y), (x, z, y)))
        if (x < y or not even_y) and (y < z or even_y):
            out.add(((y, z, x), (y, x, z)))
    return out


def test_rules_small_alphabet(e2):
    got = {r.format(e2) for r in knuth_rules(e2)}
    assert "211 => 121" in got
    assert "221 => 212" in got
    # eta with y = z even is forbidden
    assert not any(r.kind == "eta" and r.y == r.z for r in knuth_rules(e2))


@pytest.mark.parametrize("parity", [(0,), (1,)])
def test_one_letter_alphabets_have_no_rules(parity):
    assert knuth_rules(SignedAlphabet.from_parities(parity)) == []


def test_rules_match_side_conditions():
    for n in (2, 3, 4):
        for alpha in all_parity_alphabets(n):
            rules = knuth_rules(alpha)
            assert {(r.lhs, r.rhs) for r in rules} == expected_rules(alpha)
            assert len(rules) == len({(r.lhs, r.rhs) for r in rules})


def test_rules_preserve_p_symbol():
    for alpha in all_parity_alphabets(3):
        for r in knuth_rules(alpha):
            assert p_symbol_right(alpha, r.lhs) == p_symbol_right(alpha, r.rhs)


def test_rule_must_permute():
    with pytest.raises(ValueError):
        KnuthRule("eta", 0, 0, 1, (1, 0, 0), (0, 0, 0))


def test_rewrite_positions(e2):
    rules = knuth_rules(e2)
    steps = rewrite_positions(W(e2, "211"), rules)
    assert [(i, e2.format_word(res)) for _, i, res in steps] == [(0, "121")]
    assert rewrite_positions((), rules) == []
    steps = rewrite_positions(W(e2, "2211"), rules)
    assert [(i, e2.format_word(res)) for _, i, res in steps] == [(0, "2121"), (1, "2121")]
    assert [e2.format_word(r.lhs) for r, _, _ in steps] == ["221", "211"]


def test_congruence_class(e2, e3):
    rules = knuth_rules(e2)
    assert {e2.format_word(w) for w in congruence_class(W(e2, "211"), rules)} == {"211", "121"}
    assert congruence_class((), rules) == {()}
    assert W(e3, "132") in congruence_class(W(e3, "312"), knuth_rules(e3))
    with pytest.raises(ClassSizeExceeded):
        congruence_class(W(e3, "321321"), knuth_rules(e3), cap=3)


def test_are_congruent(e2):
    for method in ("bfs", "cross_section", "both"):
        assert are_congruent(e2, W(e2, "211"), W(e2, "121"), method)
        assert not are_congruent(e2, W(e2, "12"), W(e2, "21"), method)
        assert are_congruent(e2, W(e2, "2121"), W(e2, "2121"), method)
    with pytest.raises(ValueError):
        are_congruent(e2, (), (), "guess")


def test_methods_agree():
    for alpha in all_parity_alphabets(2):
        rules = knuth_rules(alpha)
        for w1 in words_up_to(alpha, 4):
            for w2 in words_up_to(alpha, 4):
                if len(w1) == len(w2):
                    are_congruent(alpha, w1, w2, "both", rules)


def _reachable(w, rules):
    seen, todo = {w}, [w]
    while todo:
        cur = todo.pop()
        for _, _, nxt in rewrite_positions(cur, rules):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def test_critical_pairs_all_even_three(e3):
    rules = knuth_rules(e3)
    pairs = knuth_critical_pairs(e3, rules)
    assert len(pairs) == 16
    assert sum(not p.joinable for p in pairs) == 4
    for p in pairs:
        (r1, i1, res1), (r2, i2, res2) = p.first, p.second
        assert p.source[i1 : i1 + 3] == r1.lhs and p.source[i2 : i2 + 3] == r2.lhs
        assert 0 < len(p.source) - 3 <= 2 or (i1 == i2 == 0 and r1 != r2)
        irr1 = {w for w in _reachable(res1, rules) if is_irreducible(w, rules)}
        irr2 = {w for w in _reachable(res2, rules) if is_irreducible(w, rules)}
        assert p.joinable == bool(irr1 & irr2)


def test_critical_pairs_empty_rules(e3):
    assert knuth_critical_pairs(e3, []) == []


def test_non_joinable_witness_rank_four(e4):
    rules = knuth_rules(e4)
    pairs = knuth_critical_pairs(e4, rules)
    bad = [p for p in pairs if not p.joinable]
    assert bad
    w = bad[0]
    n1 = min(normal_forms_from(w.first[2], rules))
    n2 = min(normal_forms_from(w.second[2], rules))
    assert n1 != n2 and is_irreducible(n1, rules) and is_irreducible(n2, rules)
    assert n2 in congruence_class(n1, rules)
    # fixture recorded from the search
    assert (len(pairs), len(bad)) == (81, 25)
    sources = {e4.format_word(p.source) for p in bad}
    assert "32211" in sources
