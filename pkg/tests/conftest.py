import itertools

import pytest

from superplactic.alphabet import SignedAlphabet, parse_alphabet


def W(alpha, text):
    return alpha.parse_word(text)


def brute_is_row(alpha, w):
    return all(a < b or (a == b and not alpha.is_odd(a)) for a, b in zip(w, w[1:]))


def brute_is_col(alpha, w):
    return all(a > b or (a == b and alpha.is_odd(a)) for a, b in zip(w, w[1:]))


def brute_greene(alpha, w, k, kind):
    """Largest total size of k disjoint subsequences of the given kind, by
    trying every labelling of positions with 0..k (0 = unused)."""
    ok = brute_is_row if kind == "row" else brute_is_col
    best = 0
    for labels in itertools.product(range(k + 1), repeat=len(w)):
        size = sum(1 for lab in labels if lab)
        if size <= best:
            continue
        if all(ok(alpha, [x for x, lab in zip(w, labels) if lab == c]) for c in range(1, k + 1)):
            best = size
    return best


@pytest.fixture(scope="session")
def a5():
    # 1 < ... < 5 with 3 and 5 odd
    return parse_alphabet({"letters": ["1", "2", "3", "4", "5"], "odd": ["3", "5"]})


@pytest.fixture(scope="session")
def nat6():
    # an initial fragment of the naturals, odd numbers odd
    return parse_alphabet({"letters": [str(i) for i in range(1, 7)], "odd": ["1", "3", "5"]})


@pytest.fixture(scope="session")
def e2():
    return SignedAlphabet.even(2)


@pytest.fixture(scope="session")
def e3():
    return SignedAlphabet.even(3)


@pytest.fixture(scope="session")
def e4():
    return SignedAlphabet.even(4)


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
