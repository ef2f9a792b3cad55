"""Squarefree monomial ideals and their combinatorial invariants.

Everything here works on generator supports only: the support index, bcos
and cosize, the regularity/projective-dimension bounds built from them,
complete-intersection invariants, f_t-vectors, t-spread strongly stable and
lexsegment tests, and Alexander duality.
"""

from dataclasses import dataclass, field
from itertools import combinations
import json

from ._validation import DomainError, ParseError, check_int, check_n_t
from .monomials import (
    Monomial,
    bits,
    count_t_spread,
    enumerate_t_spread,
    is_t_spread,
    max_t_spread_degree,
)

__all__ = [
    "MonomialIdeal",
    "FtVector",
    "minimalize",
    "minimal_masks",
    "support_index",
    "support_index_by_scan",
    "bcos",
    "cosize",
    "pd_bound",
    "reg_bound",
    "is_regular_sequence",
    "ci_invariants",
    "reg_bound_tspread",
    "reg_bound_degree_at_most_d",
    "ft_vector",
    "t_spread_part",
    "is_t_spread_ideal",
    "is_t_spread_strongly_stable",
    "is_t_spread_lexsegment",
    "strongly_stable_invariants",
    "alexander_dual",
    "minimal_transversals",
]


def minimal_masks(masks):
    """Drop every mask that contains another one; result sorted by (degree, slex)."""
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), bits(m)))
    kept = []
    for m in unique:
        if not any(g & m == g for g in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal of ``K[x_1..x_n]`` given by its minimal generators.

    The constructor minimalizes whatever generators it is given and sorts them
    by degree, then slex-descending.  The unit ideal is the single generator 1.
    """

    n: int
    gens: tuple = field(default=())

    def __post_init__(self):
        n = check_int(self.n, "n", 1)
        masks = []
        for g in self.gens:
            if not isinstance(g, Monomial):
                g = Monomial.from_support(g)
            if g.mask >> n:
                raise DomainError(f"generator {g} uses a variable beyond x{n}")
            masks.append(g.mask)
        if not masks:
            raise DomainError("the zero ideal has no generators")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(Monomial(m) for m in minimal_masks(masks)))

    @classmethod
    def from_supports(cls, n, supports):
        return cls(n, tuple(Monomial.from_support(s) for s in supports))

    @classmethod
    def parse(cls, text, n=None):
        """Parse ``x2*x4, x1*x5*x7``; ``n`` defaults to the largest index used."""
        pieces = text.split(",")
        if not text.strip() or any(not p.strip() for p in pieces):
            raise ParseError(f"empty generator in {text!r}", text)
        gens = [Monomial.parse(p) for p in pieces]
        if n is None:
            n = max(1, max(g.mask.bit_length() for g in gens))
        return cls(n, tuple(gens))

    @classmethod
    def from_json(cls, data):
        """Build from ``{"n": 11, "generators": [[2, 4], [1, 5, 7]]}`` (dict or string)."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"malformed JSON: {exc.msg} at char {exc.pos}", data[exc.pos:exc.pos + 10] or "<end of input>") from exc
        if not isinstance(data, dict) or "n" not in data or "generators" not in data:
            raise ParseError("ideal JSON needs keys 'n' and 'generators'", str(data)[:40])
        gens = data["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
            raise ParseError("'generators' must be a list of index lists", str(gens)[:40])
        try:
            return cls.from_supports(data["n"], gens)
        except TypeError as exc:
            raise ParseError(str(exc), str(gens)[:40]) from exc

    def to_json(self):
        return {"n": self.n, "generators": [list(g.support) for g in self.gens]}

    @property
    def masks(self):
        return [g.mask for g in self.gens]

    @property
    def is_unit(self):
        return self.gens[0].mask == 0

    @property
    def support_union(self):
        """The union of all generator supports, as a bitmask."""
        out = 0
        for g in self.gens:
            out |= g.mask
        return out

    def contains(self, m):
        return any(g.mask & m.mask == g.mask for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return ", ".join(str(g) for g in self.gens)


def minimalize(n, raw_gens):
    return MonomialIdeal(n, tuple(raw_gens))


def _proper(ideal):
    if ideal.is_unit:
        raise DomainError("the unit ideal is not supported here")
    return ideal.masks


def support_index(ideal):
    """Smallest ``i`` such that every union of ``i + 1`` generator supports is the full union.

    A union of generator supports misses the full union exactly when all the
    chosen generators avoid a common vertex of it, so the answer is the largest
    number of generators avoiding one vertex.
    """
    masks = _proper(ideal)
    return max(sum(1 for g in masks if not g >> (v - 1) & 1) for v in bits(ideal.support_union))


def support_index_by_scan(ideal):
    """Support index straight from its definition (binomial cost in the generator count)."""
    masks = _proper(ideal)
    omega = ideal.support_union
    for i in range(len(masks)):
        if all(_union(sub) == omega for sub in combinations(masks, i + 1)):
            return i
    raise AssertionError("unreachable: the union of all generators is the full union")


def _union(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def bcos(ideal):
    """Smallest ``l`` such that every ``l`` generators already have the full lcm."""
    masks = _proper(ideal)
    omega = ideal.support_union
    for size in range(1, len(masks) + 1):
        if all(_union(sub) == omega for sub in combinations(masks, size)):
            return size
    raise AssertionError("unreachable")


def _min_cover_size(masks, omega):
    for size in range(1, len(masks) + 1):
        if any(_union(sub) == omega for sub in combinations(masks, size)):
            return size
    raise AssertionError("unreachable")


def cosize(ideal):
    """``deg lcm(G(I)) - w`` with ``w`` the fewest generators whose lcm is the full lcm."""
    masks = _proper(ideal)
    omega = ideal.support_union
    return omega.bit_count() - _min_cover_size(masks, omega)


def pd_bound(ideal):
    """Upper bound ``min(s, n)`` on pd(I), s the support index."""
    return min(support_index(ideal), ideal.n)


def reg_bound(ideal):
    """Upper bound ``cosize + 1`` on reg(I)."""
    return cosize(ideal) + 1


def is_regular_sequence(ideal):
    """Squarefree monomials form a regular sequence iff their supports are disjoint."""
    seen = 0
    for g in _proper(ideal):
        if seen & g:
            return False
        seen |= g
    return True


def ci_invariants(ideal):
    """(pd(I), reg(I)) of an ideal generated by a squarefree regular sequence."""
    if not is_regular_sequence(ideal):
        raise DomainError(f"generators of ({ideal}) do not have pairwise disjoint supports")
    p = len(ideal)
    return p - 1, ideal.support_union.bit_count() - (p - 1)


def reg_bound_tspread(n, t):
    """Largest possible regularity of a t-spread ideal in ``n`` variables."""
    n, t = check_n_t(n, t)
    return n - (t - 1)


def reg_bound_degree_at_most_d(n, d, t):
    """Largest regularity of a t-spread ideal generated in degrees at most ``d``."""
    n, t = check_n_t(n, t)
    d = check_int(d, "d", 1)
    if n < 1 + (d - 1) * t:
        raise DomainError(f"need n >= 1 + (d-1)t, got n={n}, d={d}, t={t}")
    return n + 1 - max(-(-n // d), t)


@dataclass(frozen=True)
class FtVector:
    """Counts of t-spread monomials outside an ideal, one per degree.

    ``entries[j]`` is ``f_{t,j-1}``: the number of t-spread monomials of degree
    ``j`` not in the ideal, for ``j = 0 .. max_t_spread_degree(n, t)``.  Every
    higher degree has no t-spread monomials at all.
    """

    t: int
    entries: tuple

    def f(self, k):
        """``f_{t,k}`` for ``k >= -1`` (zero past the stored range)."""
        j = k + 1
        if j < 0:
            raise IndexError(k)
        return self.entries[j] if j < len(self.entries) else 0


def t_spread_part(ideal, j, t):
    """``[I_j]_t``: the t-spread monomials of degree ``j`` lying in the ideal, slex-descending."""
    masks = ideal.masks
    return [
        m for m in enumerate_t_spread(ideal.n, j, t) if any(g & m.mask == g for g in masks)
    ]


def ft_vector(ideal, t):
    t = check_int(t, "t", 1)
    top = max_t_spread_degree(ideal.n, t)
    entries = tuple(
        count_t_spread(ideal.n, j, t) - len(t_spread_part(ideal, j, t)) for j in range(top + 1)
    )
    return FtVector(t, entries)


def is_t_spread_ideal(ideal, t):
    return all(is_t_spread(g, t) for g in ideal.gens)


def _require_t_spread(ideal, t):
    t = check_int(t, "t", 1)
    bad = [g for g in ideal.gens if not is_t_spread(g, t)]
    if bad:
        raise DomainError(f"generator {bad[0]} is not {t}-spread")
    return t


def _is_strongly_stable_set(members, t):
    members = {m.mask for m in members}
    for u in members:
        support = bits(u)
        for j in support:
            for i in range(1, j):
                if u >> (i - 1) & 1:
                    continue
                v = u & ~(1 << (j - 1)) | 1 << (i - 1)
                if v not in members and is_t_spread(Monomial(v), t):
                    return False
    return True


def is_t_spread_strongly_stable(ideal, t):
    """Check the index-lowering exchange property on every ``[I_j]_t``."""
    t = _require_t_spread(ideal, t)
    n = ideal.n
    for j in range(max_t_spread_degree(n, t) + 1):
        if not _is_strongly_stable_set(t_spread_part(ideal, j, t), t):
            return False
    return True


def is_t_spread_lexsegment(ideal, t):
    """True iff every ``[I_j]_t`` is an initial segment of ``M_{n,j,t}`` in slex order."""
    t = _require_t_spread(ideal, t)
    n = ideal.n
    for j in range(max_t_spread_degree(n, t) + 1):
        everything = enumerate_t_spread(n, j, t)
        part = t_spread_part(ideal, j, t)
        if part != everything[: len(part)]:
            return False
    return True


def strongly_stable_invariants(ideal, t):
    """(pd(I), reg(I)) read off the generators of a t-spread strongly stable ideal."""
    if not is_t_spread_strongly_stable(ideal, t):
        raise DomainError(f"({ideal}) is not {t}-spread strongly stable")
    pd = max(g.mask.bit_length() - t * (g.degree - 1) - 1 for g in ideal.gens)
    reg = max(g.degree for g in ideal.gens)
    return pd, reg


def minimal_transversals(masks):
    """Minimal sets meeting every mask in ``masks`` (Berge's incremental method)."""
    transversals = [0]
    for edge in masks:
        grown = []
        for tr in transversals:
            if tr & edge:
                grown.append(tr)
            else:
                grown.extend(tr | 1 << (v - 1) for v in bits(edge))
        transversals = minimal_masks(grown)
    return transversals


def alexander_dual(ideal):
    """The Alexander dual: generated by the minimal vertex covers of the generator supports."""
    masks = _proper(ideal)
    return MonomialIdeal(ideal.n, tuple(Monomial(m) for m in minimal_transversals(masks)))
