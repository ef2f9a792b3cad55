"""Worked examples and closed forms, checked against the library, plus a randomized fuzz.

Each example is a function returning ``(ok, detail)``; ``run_examples``
evaluates all of them.  Labels name the example by its content (the ideal or
family involved) and the place it occurs.
"""

from dataclasses import dataclass
from itertools import combinations
import math
import random

from . import graphs, ideals, monomials, resolutions, tspread
from .ideals import MonomialIdeal
from .monomials import Monomial

__all__ = ["Example", "EXAMPLES", "run_examples", "random_ideal", "fuzz"]


@dataclass(frozen=True)
class Example:
    location: str
    claim: str
    check: object


EXAMPLES = []


def example(location, claim):
    def register(fn):
        EXAMPLES.append(Example(location, claim, fn))
        return fn

    return register


def _ideal(n, *supports):
    return MonomialIdeal.from_supports(n, supports)


SETS = _ideal(11, [2, 4], [1, 5, 7], [3, 7, 9, 11])
TAYLOR_EX = _ideal(9, [1, 4], [1, 3, 8], [2, 4, 6], [1, 3, 5, 7, 9])
CI_EX = _ideal(8, [8], [1, 2], [3, 4, 5, 7])
PASCAL_10_3 = tspread.pascal_ideal(10, 3).ideal

PASCAL_DIAGRAM = """\
      0 1 2 3
Tot : 1 3 3 1
-------------
  0 : 1 - - -
  1 : - - - -
  2 : - 2 - -
  3 : - 1 - -
  4 : - - 1 -
  5 : - - 2 -
  6 : - - - -
  7 : - - - 1
"""


def _eq(got, want):
    return got == want, f"got {got!r}, expected {want!r}"


@example("preliminaries: t-spread definition", "x2*x4 is 2-spread")
def _():
    return _eq(monomials.is_t_spread(Monomial.from_support([2, 4]), 2), True)


@example("preliminaries: max(u)", "max(1) = 0")
def _():
    return _eq(monomials.max_index(Monomial(0)), 0)


@example("support-index example, n=9", "lcm of all four generators is x1*...*x9")
def _():
    return _eq(monomials.lcm(TAYLOR_EX.gens), Monomial.from_support(range(1, 10)))


@example("Pascal f_t-vector argument", "3-shadow of {x2x5x8, x3x6x9} in 10 variables is empty")
def _():
    t = [Monomial.from_support([2, 5, 8]), Monomial.from_support([3, 6, 9])]
    return _eq(monomials.t_shadow(t, 10, 3), [])


@example("t-lex example, (n,t)=(10,3)", "x1x4x7 >slex x1x4x8")
def _():
    u, v = Monomial.from_support([1, 4, 7]), Monomial.from_support([1, 4, 8])
    return _eq(monomials.slex_compare(u, v), 1)


@example("support-index sets example, n=11", "(x2x4, x1x5x7, x3x7x9x11) is minimally generated")
def _():
    return _eq(ideals.minimalize(11, SETS.gens).gens, SETS.gens)


@example("support-index sets example, n=11", "support index s = 2, bcos = 3")
def _():
    return _eq((ideals.support_index(SETS), ideals.bcos(SETS)), (2, 3))


@example("resolution after the bound theorem, n=11", "pd(I) = 2, reg(I) = 6 = 8 - 2")
def _():
    t = resolutions.betti_table(SETS).as_ideal()
    return _eq((t.pd(), t.reg()), (2, 6))


@example("resolution after the bound theorem, n=11", "0 <- S(-2)+S(-3)+S(-4) <- S(-5)+S(-6)^2 <- S(-8)")
def _():
    t = resolutions.betti_table(SETS).as_ideal()
    want = {(0, 2): 1, (0, 3): 1, (0, 4): 1, (1, 5): 1, (1, 6): 2, (2, 8): 1}
    return _eq(t.as_dict(), want)


@example("Taylor resolution example, n=9", "Taylor step degrees {2,3,3,5}, {4,4,6,6,6,8}, {6,7,8,9}, {9}")
def _():
    want = ((2, 3, 3, 5), (4, 4, 6, 6, 6, 8), (6, 7, 8, 9), (9,))
    return _eq(resolutions.taylor_complex(TAYLOR_EX).steps, want)


@example("Taylor resolution example, n=9", "s = 3, pd bound 3, reg bound 9 - 2 = 7")
def _():
    got = (ideals.support_index(TAYLOR_EX), ideals.pd_bound(TAYLOR_EX), ideals.reg_bound(TAYLOR_EX))
    return _eq(got, (3, 3, 7))


@example("Taylor resolution example, n=9", "pd(I) = 2 and reg(I) = 5")
def _():
    t = resolutions.betti_table(TAYLOR_EX).as_ideal()
    return _eq((t.pd(), t.reg()), (2, 5))


@example("squarefree Veronese example", "support index of I_{n,n-1} is 1 (n = 3..7)")
def _():
    got = [ideals.support_index(_veronese(n, n - 1)) for n in range(3, 8)]
    return _eq(got, [1] * 5)


def _veronese(n, d):
    return MonomialIdeal.from_supports(n, combinations(range(1, n + 1), d))


@example("squarefree Veronese example", "s(I_{n,d}) = C(n-1, d) for n <= 7")
def _():
    bad = [
        (n, d)
        for n in range(2, 8)
        for d in range(1, n)
        if ideals.support_index(_veronese(n, d)) != math.comb(n - 1, d)
    ]
    return not bad, f"mismatches at {bad}" if bad else "all n <= 7 agree"


@example("squarefree Veronese example", "pd(I_{5,2}) = 3 and reg(I_{5,2}) = 2")
def _():
    t = resolutions.betti_table(_veronese(5, 2)).as_ideal()
    return _eq((t.pd(), t.reg()), (3, 2))


@example("squarefree Veronese example", "pd = min(s, n) exactly for d in {1, n-1, n} (n <= 7)")
def _():
    bad = []
    for n in range(2, 8):
        for d in range(1, n + 1):
            v = _veronese(n, d)
            equal = resolutions.pd(v) == ideals.pd_bound(v)
            if equal != (d in (1, n - 1, n)):
                bad.append((n, d))
    return not bad, f"mismatches at {bad}" if bad else "equality pattern holds"


@example("regular-sequence example, n=8", "(x8, x1x2, x3x4x5x7): regular sequence, (pd, reg) = (2, 5), s = 2")
def _():
    got = (ideals.is_regular_sequence(CI_EX), ideals.ci_invariants(CI_EX), ideals.support_index(CI_EX))
    return _eq(got, (True, (2, 5), 2))


@example("Pascal remark", "Pascal(10,3) is a regular sequence")
def _():
    return _eq(ideals.is_regular_sequence(PASCAL_10_3), True)


@example("Pascal example, (n,t)=(10,3)", "generators x1x4x7x10, x2x5x8, x3x6x9")
def _():
    got = [str(g) for g in tspread.pascal_ideal(10, 3).generators]
    return _eq(got, ["x1*x4*x7*x10", "x2*x5*x8", "x3*x6*x9"])


@example("Pascal ideal: small cases", "Pascal(t,t) is the maximal ideal (t = 1..6)")
def _():
    got = [tspread.pascal_ideal(t, t).ideal.gens for t in range(1, 7)]
    want = [tuple(Monomial.from_support([v]) for v in range(1, t + 1)) for t in range(1, 7)]
    return _eq(got, want)


@example("Pascal example after the proposition", "(pd, reg) = (t-1, n-(t-1)) = (2, 8); depth 8")
def _():
    return _eq(
        (ideals.ci_invariants(PASCAL_10_3), resolutions.depth_of(PASCAL_10_3)), ((2, 8), 8)
    )


@example("maximal-regularity theorem", "reg bound n-(t-1): 8 for (10,3), n for t=1")
def _():
    return _eq(
        (ideals.reg_bound_tspread(10, 3), [ideals.reg_bound_tspread(n, 1) for n in range(1, 8)]),
        (8, list(range(1, 8))),
    )


@example("remark after the degree-d theorem", "d = max t-spread degree recovers n-(t-1)")
def _():
    bad = [
        (n, t)
        for n in range(1, 16)
        for t in range(1, min(n, 5) + 1)
        if ideals.reg_bound_degree_at_most_d(n, monomials.max_t_spread_degree(n, t), t) != n - (t - 1)
    ]
    return not bad, f"mismatches at {bad}" if bad else "all agree"


@example("Pascal example, (n,t)=(10,3)", "Betti diagram of S/I")
def _():
    got = resolutions.betti_table(PASCAL_10_3).diagram()
    return got == PASCAL_DIAGRAM, "\n" + got


@example("Pascal example, (n,t)=(10,3)", "pd(S/I)=3, reg(S/I)=7, pd(I)=2, reg(I)=8")
def _():
    q = resolutions.betti_table(PASCAL_10_3)
    i = q.as_ideal()
    return _eq((q.pd(), q.reg(), i.pd(), i.reg()), (3, 7, 2, 8))


@example("Pascal ideal: extremal Betti numbers", "Pascal(10,3) has exactly one extremal Betti number, at (3,10)")
def _():
    return _eq(resolutions.extremal_betti(resolutions.betti_table(PASCAL_10_3)), [((3, 10), 1)])


@example("Pascal remark", "Koszul totals of S/Pascal(n,t) are the t-th Pascal row")
def _():
    bad = [
        (n, t)
        for n in range(1, 13)
        for t in range(1, min(n, 5) + 1)
        if resolutions.koszul_complex(tspread.pascal_ideal(n, t).ideal).ranks()
        != [math.comb(t, i) for i in range(t + 1)]
    ]
    return not bad, f"mismatches at {bad}" if bad else "all rows agree"


@example("Pascal example, (n,t)=(10,3)", "total Betti numbers 1, 3, 3, 1")
def _():
    return _eq(
        (tspread.pascal_total_betti(10, 3), resolutions.betti_table(PASCAL_10_3).totals()),
        ([1, 3, 3, 1], [1, 3, 3, 1]),
    )


@example("Pascal ideal: f_t-vector", "f_t(Pascal(10,3)) = (1, 10, 28, 18, 0), closed form = enumeration")
def _():
    closed = tspread.pascal_ft_vector(10, 3).entries
    direct = ideals.ft_vector(PASCAL_10_3, 3).entries
    return _eq((closed, direct), ((1, 10, 28, 18, 0),) * 2)


@example("Pascal ideal: Hilbert series", "Hilb(S/Pascal(10,3)) = (1+z+z^2+z^3)(1+z+z^2)^2 / (1-z)^7")
def _():
    num = [1]
    for factor in ([1, 1, 1, 1], [1, 1, 1], [1, 1, 1]):
        num = [sum(num[a] * factor[k - a] for a in range(len(num)) if 0 <= k - a < len(factor))
               for k in range(len(num) + len(factor) - 1)]
    got = tspread.pascal_hilbert_series(10, 3)
    ci = tspread.hilbert_series_ci(PASCAL_10_3)
    return _eq((got.numerator, got.denominator_exponent, ci.equivalent(got)), (tuple(num), 7, True))


@example("t-lex example, (n,t)=(10,3)", "t-lex companion is (x1x4x7, x1x4x8), a 3-spread lexsegment ideal")
def _():
    companion = tspread.pascal_tlex(10, 3).ideal
    ok = companion is not None and ideals.is_t_spread_lexsegment(companion, 3)
    return _eq((str(companion), ok), ("x1*x4*x7, x1*x4*x8", True))


@example("Pascal ideal: t-lex companion criterion", "shadow count equals i when i = t-1 (t = 2..6, several n)")
def _():
    bad = [
        (n, t)
        for t in range(2, 7)
        for n in (t - 1 + t * k for k in range(1, 4))
        if tspread.shadow_discrepancy(n, t) != t - 1
    ]
    return not bad, f"mismatches at {bad}" if bad else "all agree"


@example("degree-d theorem proof, case 2", "ceil(n/d) < t gives the Pascal ideal of type (n,t)")
def _():
    # n=9, d=3, t=4: n >= 1 + (d-1)t and ceil(9/3) = 3 < 4
    got = tspread.max_reg_witness(9, 3, 4).gens
    return _eq(got, tspread.pascal_ideal(9, 4).ideal.gens)


@example("degree-two corollary proof, n even", "witness for (n=2t, d=2, t) is the graph with edges {i, i+n/2}")
def _():
    bad = []
    for t in range(1, 7):
        n = 2 * t
        w = tspread.max_reg_witness(n, 2, t)
        g = graphs.edge_ideal(graphs.corollary_graph(n))
        if w.gens != g.gens:
            bad.append(t)
    return not bad, f"mismatches at t={bad}" if bad else "all agree"


@example("forest corollary", "edge ideal for n=6 is (x1x4, x2x5, x3x6); n=5 gives (x1x3, x2x4, x1x5)")
def _():
    got = (str(graphs.edge_ideal(graphs.corollary_graph(6))), str(graphs.edge_ideal(graphs.corollary_graph(5))))
    return _eq(got, ("x1*x4, x2*x5, x3*x6", "x1*x3, x1*x5, x2*x4"))


@example("forest corollary", "the corollary graphs are forests with reg = floor(n/2) + 1 (n = 2..12)")
def _():
    bad = []
    for n in range(2, 13):
        g = graphs.corollary_graph(n)
        r = resolutions.reg(graphs.edge_ideal(g))
        if not graphs.is_forest(g) or graphs.forest_regularity(g) != n // 2 + 1 or r != n // 2 + 1:
            bad.append(n)
    return not bad, f"mismatches at n={bad}" if bad else "all agree"


def run_examples():
    """Evaluate every example; returns ``[(example, ok, detail)]``."""
    out = []
    for ex in EXAMPLES:
        try:
            ok, detail = ex.check()
        except Exception as exc:  # a crash is a failure, reported with its message
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((ex, bool(ok), detail))
    return out


def random_ideal(rng, n, max_gens, t=1):
    """A random t-spread ideal of ``K[x_1..x_n]`` with at most ``max_gens`` generators."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, monomials.max_t_spread_degree(n, t))
        choices = monomials.enumerate_t_spread(n, d, t)
        gens.append(rng.choice(choices))
    return MonomialIdeal(n, tuple(gens))


def fuzz(count, seed=0, max_n=10, max_gens=5, max_t=3):
    """Check the bound theorems and dualities on random ideals.

    Returns a list of failure descriptions (empty when everything holds).
    """
    rng = random.Random(seed)
    failures = []
    for k in range(count):
        t = rng.randint(1, max_t)
        n = rng.randint(max(2, t), max_n)
        ideal = random_ideal(rng, n, max_gens, t)
        for problem in check_properties(ideal, t):
            failures.append(f"#{k} ({ideal}) n={n} t={t}: {problem}")
    return failures


def check_properties(ideal, t):
    """All bound/duality properties for one t-spread ideal; returns the violated ones."""
    n = ideal.n
    problems = []
    table = resolutions.betti_table(ideal)
    as_ideal = table.as_ideal()
    pd, reg = as_ideal.pd(), as_ideal.reg()
    if len(ideal) <= resolutions.MAX_TAYLOR_GENERATORS:
        if not as_ideal.dominated_by(resolutions.taylor_complex(ideal).betti_bounds()):
            problems.append("Betti numbers exceed the Taylor ranks")
    if pd > ideals.pd_bound(ideal):
        problems.append(f"pd {pd} > min(s, n) {ideals.pd_bound(ideal)}")
    if reg > ideals.reg_bound(ideal):
        problems.append(f"reg {reg} > cosize + 1 {ideals.reg_bound(ideal)}")
    if reg > ideals.reg_bound_tspread(n, t):
        problems.append(f"reg {reg} > n - (t-1)")
    degrees = {g.degree for g in ideal.gens}
    if degrees == {2} and reg > n // 2 + 1:
        problems.append(f"degree-two ideal with reg {reg} > floor(n/2) + 1")
    d = max(degrees)
    if n >= 1 + (d - 1) * t and reg > ideals.reg_bound_degree_at_most_d(n, d, t):
        problems.append(f"reg {reg} > degree-{d} bound")
    dual = ideals.alexander_dual(ideal)
    dual_pd = resolutions.pd(dual)
    if reg != dual_pd + 1:
        problems.append(f"Terai duality fails: reg {reg} vs pd(dual) + 1 = {dual_pd + 1}")
    if dual_pd > n - t or resolutions.depth_of(dual) < t:
        problems.append("Alexander-dual corollary fails")
    if ideals.alexander_dual(dual) != ideal:
        problems.append("double dual differs")
    if ideals.is_t_spread_strongly_stable(ideal, t):
        if ideals.strongly_stable_invariants(ideal, t) != (pd, reg):
            problems.append("strongly stable formula disagrees with the Betti table")
    return problems
