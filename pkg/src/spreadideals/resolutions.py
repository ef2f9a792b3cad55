"""Graded free resolutions: Taylor and Koszul degree bookkeeping and exact Betti numbers.

The exact graded Betti numbers come from Hochster's formula

    beta_{i,j}(S/I) = sum over W in [n], |W| = j, of dim H~_{j-i-1}(Delta_W; Q)

where Delta is the Stanley-Reisner complex of I.  A subset W contributes
only if it is a union of generator supports (otherwise some vertex of W lies
in no minimal non-face inside W and Delta_W is a cone), so the sum runs over
the lcm lattice of I.  For each W the homology is computed on whichever of
Delta_W and its Alexander dual inside W has fewer faces.
"""

from collections import Counter
from dataclasses import dataclass
import os

from ._linalg import reduced_homology
from ._validation import DomainError
from .ideals import MonomialIdeal, is_regular_sequence, minimal_transversals
from .monomials import Monomial, bits

__all__ = [
    "BettiTable",
    "GradedComplex",
    "SimplicialComplex",
    "taylor_complex",
    "koszul_complex",
    "betti_table",
    "pd",
    "reg",
    "depth_of",
    "extremal_betti",
    "stanley_reisner_complex",
    "complex_to_ideal",
    "DEFAULT_MAX_N",
]

IDEAL = "ideal"
QUOTIENT = "quotient"
DEFAULT_MAX_N = 14
MAX_TAYLOR_GENERATORS = 20


def _shift_entries(entries, source, target):
    """The only place homological indices move between I and S/I."""
    if source == target:
        return dict(entries)
    if source == IDEAL and target == QUOTIENT:
        out = {(i + 1, j): b for (i, j), b in entries.items()}
        out[(0, 0)] = 1
        return out
    if source == QUOTIENT and target == IDEAL:
        return {(i - 1, j): b for (i, j), b in entries.items() if i > 0}
    raise ValueError(f"unknown subjects {source!r} -> {target!r}")


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of either an ideal I or the quotient S/I.

    ``entries`` is a sorted tuple of ``((i, j), multiplicity)`` with positive
    multiplicities only.
    """

    subject: str
    entries: tuple

    def __post_init__(self):
        if self.subject not in (IDEAL, QUOTIENT):
            raise ValueError(f"subject must be {IDEAL!r} or {QUOTIENT!r}")
        items = self.entries.items() if isinstance(self.entries, dict) else self.entries
        cleaned = tuple(sorted((tuple(k), int(v)) for k, v in items if v))
        if any(v < 0 for _, v in cleaned):
            raise ValueError("Betti numbers are nonnegative")
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_counts(cls, subject, counts):
        return cls(subject, tuple(counts.items()))

    def as_dict(self):
        return dict(self.entries)

    def __getitem__(self, key):
        return self.as_dict().get(tuple(key), 0)

    def to(self, subject):
        return BettiTable(subject, tuple(_shift_entries(self.as_dict(), self.subject, subject).items()))

    def as_ideal(self):
        return self.to(IDEAL)

    def as_quotient(self):
        return self.to(QUOTIENT)

    def pd(self):
        return max(i for (i, _), _ in self.entries)

    def reg(self):
        return max(j - i for (i, j), _ in self.entries)

    def totals(self):
        """Total Betti numbers ``beta_i`` for ``i = 0 .. pd``."""
        out = [0] * (self.pd() + 1)
        for (i, _), b in self.entries:
            out[i] += b
        return out

    def dominated_by(self, other):
        """True iff every ``beta_{i,j}`` here is at most the matching entry of ``other``."""
        theirs = other.to(self.subject).as_dict()
        return all(b <= theirs.get(k, 0) for k, b in self.entries)

    def diagram(self):
        """Macaulay2-style diagram: columns i, rows j - i, ``-`` for zero, a ``Tot`` row."""
        d = self.as_dict()
        cols = range(self.pd() + 1)
        rows = range(min(j - i for i, j in d), self.reg() + 1)
        totals = self.totals()
        cells = [str(c) for c in cols] + [str(b) for b in totals] + [str(b) for b in d.values()]
        w = max(len(c) for c in cells)
        lw = max(3, max(len(str(r)) for r in rows))

        def line(label, values):
            return f"{label:>{lw}} : " + " ".join(v.rjust(w) for v in values)

        header = " " * (lw + 3) + " ".join(str(c).rjust(w) for c in cols)
        out = [header, line("Tot", [str(b) for b in totals]), "-" * len(header)]
        for r in rows:
            out.append(line(str(r), [str(d[(i, i + r)]) if (i, i + r) in d else "-" for i in cols]))
        return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GradedComplex:
    """Degree bookkeeping of a graded free complex.

    ``steps[i]`` is the sorted multiset of internal degrees of the basis of the
    ``i``-th free module, with ``i`` counted in the convention of ``subject``
    (for an ideal, step 0 holds the generator degrees).
    """

    subject: str
    steps: tuple

    def betti_bounds(self):
        counts = Counter()
        for i, degrees in enumerate(self.steps):
            for j in degrees:
                counts[(i, j)] += 1
        return BettiTable.from_counts(self.subject, counts)

    def ranks(self):
        return [len(s) for s in self.steps]


def taylor_complex(ideal):
    """Taylor resolution of I: basis ``e_F`` for nonempty F of degree ``deg lcm(F)``."""
    masks = ideal.masks
    p = len(masks)
    if ideal.is_unit:
        raise DomainError("the unit ideal is not supported here")
    if p > MAX_TAYLOR_GENERATORS:
        raise DomainError(f"Taylor complex limited to {MAX_TAYLOR_GENERATORS} generators, got {p}")
    union = [0] * (1 << p)
    steps = [[] for _ in range(p)]
    for subset in range(1, 1 << p):
        low = subset & -subset
        union[subset] = union[subset ^ low] | masks[low.bit_length() - 1]
        steps[subset.bit_count() - 1].append(union[subset].bit_count())
    return GradedComplex(IDEAL, tuple(tuple(sorted(s)) for s in steps))


def koszul_complex(ideal):
    """Koszul complex on the generators, resolving S/I; needs disjoint supports."""
    if not is_regular_sequence(ideal):
        raise DomainError(f"({ideal}) is not generated by a regular sequence")
    # degree multisets of wedge powers: product of (1 + z^{deg u} w)
    steps = [Counter({0: 1})]
    for g in ideal.gens:
        d = g.degree
        nxt = [Counter() for _ in range(len(steps) + 1)]
        for i, step in enumerate(steps):
            for deg, mult in step.items():
                nxt[i][deg] += mult
                nxt[i + 1][deg + d] += mult
        steps = nxt
    return GradedComplex(
        QUOTIENT, tuple(tuple(sorted(step.elements())) for step in steps)
    )


def _max_n():
    env = os.environ.get("TSPREAD_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _nonface_table(n, masks):
    """``table[m]`` is true iff the subset ``m`` contains some generator support."""
    table = bytearray(1 << n)
    for g in masks:
        table[g] = 1
    for m in range(1, 1 << n):
        if table[m]:
            continue
        rest = m
        while rest:
            low = rest & -rest
            if table[m ^ low]:
                table[m] = 1
                break
            rest ^= low
    return table


def lcm_lattice(masks):
    """All unions of nonempty sets of generator supports."""
    lattice = set()
    for g in masks:
        lattice |= {g | w for w in lattice}
        lattice.add(g)
    return lattice


def betti_table(ideal, max_n=None, method="auto"):
    """Exact graded Betti numbers of S/I over Q (Hochster's formula).

    ``max_n`` caps the ambient size (default 14, or ``TSPREAD_MAX_N``); pass a
    larger value to force bigger computations.  ``method`` picks the complex
    whose homology is computed for each subset: ``"direct"`` (Delta_W),
    ``"dual"`` (its Alexander dual) or ``"auto"`` (the smaller one).
    """
    if method not in ("auto", "direct", "dual"):
        raise ValueError(f"unknown method {method!r}")
    limit = _max_n() if max_n is None else max_n
    n = ideal.n
    if n > limit:
        raise DomainError(f"Betti oracle limited to n <= {limit} variables, got n={n}")
    if ideal.is_unit:
        raise DomainError("the unit ideal is not supported here")
    nonface = _nonface_table(n, ideal.masks)
    counts = Counter({(0, 0): 1})
    for w in sorted(lcm_lattice(ideal.masks)):
        size = w.bit_count()
        faces, nonfaces = [], []
        sub = w
        while True:
            (nonfaces if nonface[sub] else faces).append(sub)
            if not sub:
                break
            sub = (sub - 1) & w
        use_dual = method == "dual" or (method == "auto" and len(nonfaces) < len(faces))
        if use_dual:
            # H~_k(Delta_W) has the dimension of H~_{|W|-k-3} of the dual {W - F : F non-face}
            for k, h in reduced_homology([w ^ f for f in nonfaces]).items():
                counts[(k + 2, size)] += h
        else:
            for k, h in reduced_homology(faces).items():
                counts[(size - k - 1, size)] += h
    return BettiTable.from_counts(QUOTIENT, counts)


def pd(ideal, **kw):
    """Projective dimension of the ideal (not the quotient)."""
    return betti_table(ideal, **kw).as_ideal().pd()


def reg(ideal, **kw):
    """Castelnuovo-Mumford regularity of the ideal."""
    return betti_table(ideal, **kw).as_ideal().reg()


def depth_of(ideal, **kw):
    """Depth of I as an S-module, ``n - pd(I)``."""
    return ideal.n - pd(ideal, **kw)


def extremal_betti(table):
    """Nonzero entries with no nonzero ``beta_{p,q}`` for ``p >= i``, ``q >= j + 1`` in a row ``q - p >= j - i``."""
    d = table.as_dict()
    if not d:
        raise ValueError("empty Betti table")
    out = []
    for (i, j), b in table.entries:
        blocked = any(
            p >= i and q >= j + 1 and q - p >= j - i for (p, q) in d
        )
        if not blocked:
            out.append(((i, j), b))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``[n]`` given by its facets (as Monomial supports)."""

    n: int
    facets: tuple

    def __post_init__(self):
        masks = [f.mask if isinstance(f, Monomial) else Monomial.from_support(f).mask for f in self.facets]
        masks = sorted(set(masks), key=lambda m: (m.bit_count(), bits(m)))
        if any(a != b and a & b == a for a in masks for b in masks):
            raise ValueError("a facet is contained in another facet")
        if any(m >> self.n for m in masks):
            raise ValueError(f"facet uses a vertex beyond {self.n}")
        object.__setattr__(self, "facets", tuple(Monomial(m) for m in masks))

    def faces(self):
        """Every face as a bitmask, the empty face included."""
        out = set()
        for f in self.facets:
            sub = f.mask
            while True:
                out.add(sub)
                if not sub:
                    break
                sub = (sub - 1) & f.mask
        return sorted(out)

    def facet_supports(self):
        return [f.support for f in self.facets]


def stanley_reisner_complex(ideal):
    """Facets are complements of minimal vertex covers of the generator supports."""
    if ideal.is_unit:
        raise DomainError("the unit ideal has the void complex")
    full = (1 << ideal.n) - 1
    return SimplicialComplex(ideal.n, tuple(Monomial(full ^ c) for c in minimal_transversals(ideal.masks)))


def complex_to_ideal(complex_):
    """Stanley-Reisner ideal: minimal non-faces, i.e. minimal sets meeting every facet complement."""
    full = (1 << complex_.n) - 1
    complements = [full ^ f.mask for f in complex_.facets]
    if any(c == 0 for c in complements):
        raise DomainError("the full simplex has the zero Stanley-Reisner ideal")
    return MonomialIdeal(complex_.n, tuple(Monomial(m) for m in minimal_transversals(complements)))
