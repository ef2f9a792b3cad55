from itertools import combinations

import pytest

from spreadideals import DomainError, ParseError
from spreadideals.monomials import (
    Monomial,
    binomial,
    count_t_spread,
    enumerate_t_spread,
    is_t_spread,
    lcm,
    max_index,
    max_t_spread_degree,
    slex_compare,
    t_shadow,
)


def m(*support):
    return Monomial.from_support(support)


def brute_t_spread(n, d, t):
    return [c for c in combinations(range(1, n + 1), d) if all(b - a >= t for a, b in zip(c, c[1:]))]


def test_parse_and_print_round_trip():
    for text in ["x3*x7*x9", "x1", "1", "x2*x10*x11"]:
        assert str(Monomial.parse(text)) == text
    assert Monomial.parse("x3*x7*x9").support == (3, 7, 9)


@pytest.mark.parametrize("text,token", [("x3*y7", "y7"), ("x7*x3", "x3"), ("x2*x2", "x2"), ("x0", "x0"), ("", "")])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(ParseError) as info:
        Monomial.parse(text)
    assert info.value.token == token


def test_from_support_rejects_repeats_and_nonpositive():
    with pytest.raises(ValueError):
        m(2, 2)
    with pytest.raises(DomainError):
        m(0, 3)


def test_t_spread_predicate():
    assert is_t_spread(m(2, 4), 2)
    assert not is_t_spread(m(2, 4), 3)
    assert is_t_spread(m(1, 4, 7, 10), 3)
    assert is_t_spread(Monomial(0), 5)
    assert is_t_spread(m(6), 4)


def test_max_index_and_lcm():
    assert max_index(Monomial(0)) == 0
    assert max_index(m(1, 5, 7)) == 7
    gens = [m(1, 4), m(1, 3, 8), m(2, 4, 6), m(1, 3, 5, 7, 9)]
    assert lcm(gens) == m(*range(1, 10))
    with pytest.raises(ValueError):
        lcm([])


def test_degree_divides_multiply():
    assert m(1, 5, 7).degree == 3
    assert m(1, 5).divides(m(1, 5, 7))
    assert not m(1, 6).divides(m(1, 5, 7))
    assert m(1) * m(4) == m(1, 4)
    with pytest.raises(ValueError):
        m(1, 4) * m(4)


@pytest.mark.parametrize("n", range(1, 10))
@pytest.mark.parametrize("t", range(1, 5))
def test_enumeration_matches_brute_force(n, t):
    for d in range(0, n + 2):
        got = [x.support for x in enumerate_t_spread(n, d, t)]
        want = brute_t_spread(n, d, t)
        assert got == want  # brute force is lexicographic on supports = slex-descending
        assert count_t_spread(n, d, t) == len(want)


def test_counts_from_examples():
    assert count_t_spread(10, 3, 3) == binomial(6, 3) == 20
    assert count_t_spread(10, 4, 3) == 1
    assert count_t_spread(10, 5, 3) == 0
    assert count_t_spread(5, 0, 2) == 1


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


def test_max_degree():
    assert max_t_spread_degree(10, 3) == 4
    assert max_t_spread_degree(9, 3) == 3
    assert max_t_spread_degree(7, 1) == 7
    for n in range(1, 12):
        for t in range(1, 5):
            top = max_t_spread_degree(n, t)
            assert count_t_spread(n, top, t) > 0
            assert count_t_spread(n, top + 1, t) == 0


def test_slex_order():
    assert slex_compare(m(1, 4, 7), m(1, 4, 8)) == 1
    assert slex_compare(m(1, 4, 8), m(1, 4, 7)) == -1
    assert slex_compare(m(2, 5), m(2, 5)) == 0
    assert m(1, 4, 8) < m(1, 4, 7)
    with pytest.raises(ValueError):
        slex_compare(m(1), m(1, 2))


def test_shadow_examples():
    assert t_shadow([m(2, 5, 8), m(3, 6, 9)], 10, 3) == []
    assert t_shadow([m(1, 4, 7)], 10, 3) == [m(1, 4, 7, 10)]
    assert t_shadow([m(3)], 5, 2) == [m(1, 3), m(3, 5)]


@pytest.mark.parametrize("n,t", [(6, 1), (7, 2), (9, 3), (8, 4)])
def test_shadow_matches_brute_force(n, t):
    for d in range(0, max_t_spread_degree(n, t)):
        members = enumerate_t_spread(n, d, t)
        for k in range(0, len(members), 3):
            chosen = members[k:k + 3]
            want = sorted(
                {
                    w.mask | 1 << (i - 1)
                    for w in chosen
                    for i in range(1, n + 1)
                    if not w.mask >> (i - 1) & 1 and is_t_spread(Monomial(w.mask | 1 << (i - 1)), t)
                }
            )
            assert sorted(x.mask for x in t_shadow(chosen, n, t)) == want


def test_shadow_rejects_bad_input():
    with pytest.raises(ValueError):
        t_shadow([m(1, 2)], 5, 2)
    with pytest.raises(ValueError):
        t_shadow([m(1), m(1, 3)], 5, 1)
