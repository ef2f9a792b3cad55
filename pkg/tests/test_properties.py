"""Randomized invariants of the library, driven by hypothesis."""

from hypothesis import assume, given, strategies as st

from spreadideals import ideals as I
from spreadideals import resolutions as R
from spreadideals import tspread as T
from spreadideals.ideals import MonomialIdeal
from spreadideals.monomials import (
    Monomial,
    enumerate_t_spread,
    is_t_spread,
    max_t_spread_degree,
    slex_key,
    t_shadow,
)

from oracles import faces, hilbert_function_by_faces


@st.composite
def t_spread_ideals(draw, max_n=10, max_gens=5, max_t=3):
    t = draw(st.integers(1, max_t))
    n = draw(st.integers(max(2, t), max_n))
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        d = draw(st.integers(1, max_t_spread_degree(n, t)))
        gens.append(draw(st.sampled_from(enumerate_t_spread(n, d, t))))
    return MonomialIdeal(n, tuple(gens)), t


@st.composite
def strongly_stable_ideals(draw, max_n=9, max_t=3):
    """t-spread strongly stable closure of a few random t-spread monomials."""
    ideal, t = draw(t_spread_ideals(max_n=max_n, max_gens=3, max_t=max_t))
    members = set()
    frontier = list(ideal.masks)
    while frontier:
        u = frontier.pop()
        if u in members:
            continue
        members.add(u)
        for j in range(1, u.bit_length() + 1):
            if not u >> (j - 1) & 1:
                continue
            for i in range(1, j):
                if u >> (i - 1) & 1:
                    continue
                v = u & ~(1 << (j - 1)) | 1 << (i - 1)
                if is_t_spread(Monomial(v), t):
                    frontier.append(v)
    return MonomialIdeal(ideal.n, tuple(Monomial(m) for m in members)), t


@given(st.integers(1, 40).flatmap(lambda n: st.sets(st.integers(1, n), max_size=6)))
def test_monomial_text_round_trip(support):
    m = Monomial.from_support(sorted(support))
    assert Monomial.parse(str(m)) == m


@given(st.integers(1, 12), st.integers(0, 6), st.integers(1, 4))
def test_enumeration_sorted_and_spread(n, d, t):
    members = enumerate_t_spread(n, d, t)
    assert [slex_key(m) for m in members] == sorted(slex_key(m) for m in members)
    assert all(is_t_spread(m, t) and m.degree == d and m.mask >> n == 0 for m in members)


@given(t_spread_ideals())
def test_shadow_members_are_t_spread_multiples(data):
    ideal, t = data
    n = ideal.n
    d = ideal.gens[0].degree
    same = [g for g in ideal.gens if g.degree == d]
    for w in t_shadow(same, n, t):
        assert is_t_spread(w, t) and w.degree == d + 1
        assert any(g.divides(w) for g in same)


@given(t_spread_ideals())
def test_support_index_routes_agree(data):
    ideal, _ = data
    s = I.support_index(ideal)
    assert s == I.support_index_by_scan(ideal) == I.bcos(ideal) - 1
    assert s <= len(ideal) - 1
    if I.is_regular_sequence(ideal):
        assert s == len(ideal) - 1


@given(t_spread_ideals())
def test_minimalize_idempotent_and_dual_involution(data):
    ideal, _ = data
    assert I.minimalize(ideal.n, ideal.gens) == ideal
    assert I.alexander_dual(I.alexander_dual(ideal)) == ideal


@given(t_spread_ideals())
def test_bound_theorems(data):
    ideal, t = data
    table = R.betti_table(ideal)
    as_ideal = table.as_ideal()
    assert as_ideal.dominated_by(R.taylor_complex(ideal).betti_bounds())
    assert as_ideal.pd() <= I.pd_bound(ideal)
    assert as_ideal.reg() <= I.reg_bound(ideal)
    assert as_ideal.reg() <= I.reg_bound_tspread(ideal.n, t)
    d = max(g.degree for g in ideal.gens)
    assert as_ideal.reg() <= I.reg_bound_degree_at_most_d(ideal.n, d, t)
    if {g.degree for g in ideal.gens} == {2}:
        assert as_ideal.reg() <= ideal.n // 2 + 1


@given(t_spread_ideals())
def test_terai_and_dual_corollary(data):
    ideal, t = data
    dual = I.alexander_dual(ideal)
    assert R.reg(ideal) == R.pd(dual) + 1
    assert R.pd(dual) <= ideal.n - t
    assert R.depth_of(dual) >= t


@given(t_spread_ideals(max_n=9))
def test_homology_routes_agree(data):
    ideal, _ = data
    assert R.betti_table(ideal, method="direct") == R.betti_table(ideal, method="dual")


@given(t_spread_ideals())
def test_euler_characteristic_matches_k_polynomial(data):
    ideal, _ = data
    k_poly = [0] * (ideal.n + 1)
    for (i, j), b in R.betti_table(ideal).entries:
        k_poly[j] += (-1) ** i * b
    series = T.hilbert_series(ideal)
    assert tuple(k_poly[: len(series.numerator)]) == series.numerator
    assert not any(k_poly[len(series.numerator):])


@given(t_spread_ideals(max_n=8))
def test_hilbert_function_routes_agree(data):
    ideal, _ = data
    series = T.hilbert_series(ideal)
    values = series.coefficients(ideal.n + 1)
    for d in range(ideal.n + 2):
        assert values[d] == T.hilbert_function(ideal, d) == hilbert_function_by_faces(ideal, d)


@given(t_spread_ideals())
def test_regular_sequences_match_koszul(data):
    ideal, _ = data
    assume(I.is_regular_sequence(ideal))
    assert R.betti_table(ideal) == R.koszul_complex(ideal).betti_bounds()
    assert (R.pd(ideal), R.reg(ideal)) == I.ci_invariants(ideal)
    assert T.hilbert_series_ci(ideal).equivalent(T.hilbert_series(ideal))


@given(t_spread_ideals())
def test_ft_vector_sanity(data):
    ideal, t = data
    v = I.ft_vector(ideal, t)
    assert v.entries[0] == 1
    assert all(e >= 0 for e in v.entries)
    assert len(v.entries) == max_t_spread_degree(ideal.n, t) + 1


@given(strongly_stable_ideals())
def test_strongly_stable_formula(data):
    ideal, t = data
    assert I.is_t_spread_strongly_stable(ideal, t)
    assert I.strongly_stable_invariants(ideal, t) == (R.pd(ideal), R.reg(ideal))


@given(t_spread_ideals())
def test_lex_companion_when_found(data):
    ideal, t = data
    companion = T.tlex_companion_exists(ideal, t)
    if companion is not None:
        assert I.is_t_spread_lexsegment(companion, t)
        assert I.ft_vector(companion, t) == I.ft_vector(ideal, t)
    if I.is_t_spread_lexsegment(ideal, t):
        assert companion == ideal


@given(t_spread_ideals())
def test_stanley_reisner_round_trip(data):
    ideal, _ = data
    cx = R.stanley_reisner_complex(ideal)
    assert R.complex_to_ideal(cx) == ideal
    assert cx.faces() == faces(ideal)
