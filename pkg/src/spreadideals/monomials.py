"""Squarefree monomials as bitmasks, t-spread predicates, enumeration and shadows.

A squarefree monomial ``x_{i1} * ... * x_{id}`` is stored as the integer whose
bit ``i - 1`` is set for every index ``i`` in its support.  Indices are 1-based.
Python integers are unbounded, so the ambient size is only limited by the
cost of the combinatorics, not by the representation.
"""

from dataclasses import dataclass
from functools import total_ordering
import math
import re

from ._validation import DomainError, ParseError, check_int

__all__ = [
    "Monomial",
    "is_t_spread",
    "max_index",
    "lcm",
    "binomial",
    "count_t_spread",
    "enumerate_t_spread",
    "t_shadow",
    "slex_compare",
    "slex_key",
    "max_t_spread_degree",
    "bits",
]


def bits(mask):
    """Return the 1-based indices set in ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


_VAR = re.compile(r"x(\d+)\Z")


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial; ``mask`` has bit ``i-1`` set iff ``x_i`` divides it.

    Instances compare by squarefree lex order within a degree (greater means
    lex-earlier, e.g. ``x1*x4*x7 > x1*x4*x8``) and by degree across degrees.
    """

    mask: int = 0

    def __post_init__(self):
        if not isinstance(self.mask, int) or self.mask < 0:
            raise ValueError(f"invalid monomial mask {self.mask!r}")

    @classmethod
    def from_support(cls, indices):
        mask = 0
        for i in indices:
            i = check_int(i, "variable index", 1)
            if mask >> (i - 1) & 1:
                raise ValueError(f"repeated index {i} in a squarefree monomial")
            mask |= 1 << (i - 1)
        return cls(mask)

    @classmethod
    def parse(cls, text):
        """Parse ``x3*x7*x9`` (or ``1``); indices must be strictly increasing."""
        text = text.strip()
        if text == "1":
            return cls(0)
        indices = []
        for token in text.split("*"):
            token = token.strip()
            m = _VAR.match(token)
            if m is None or int(m.group(1)) < 1:
                raise ParseError(f"bad variable token {token!r} in {text!r}", token)
            i = int(m.group(1))
            if indices and i <= indices[-1]:
                raise ParseError(
                    f"indices must be strictly increasing: {token!r} in {text!r}", token
                )
            indices.append(i)
        return cls.from_support(indices)

    @property
    def support(self):
        return tuple(bits(self.mask))

    @property
    def degree(self):
        return self.mask.bit_count()

    def divides(self, other):
        return self.mask & other.mask == self.mask

    def __mul__(self, other):
        if self.mask & other.mask:
            raise ValueError(f"{self} * {other} is not squarefree")
        return Monomial(self.mask | other.mask)

    def __lt__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.degree != other.degree:
            return self.degree < other.degree
        return slex_compare(self, other) < 0

    def __str__(self):
        if not self.mask:
            return "1"
        return "*".join(f"x{i}" for i in bits(self.mask))

    def __repr__(self):
        return f"Monomial({self})"


def is_t_spread(m, t):
    """True iff consecutive support indices of ``m`` differ by at least ``t``."""
    t = check_int(t, "t", 0)
    support = bits(m.mask)
    return all(b - a >= t for a, b in zip(support, support[1:]))


def max_index(m):
    """Largest index in the support; 0 for the monomial 1."""
    return m.mask.bit_length()


def lcm(monomials):
    monomials = list(monomials)
    if not monomials:
        raise ValueError("empty lcm")
    mask = 0
    for m in monomials:
        mask |= m.mask
    return Monomial(mask)


def binomial(a, b):
    """``C(a, b)`` with the convention that it vanishes unless 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def count_t_spread(n, d, t):
    """Number of t-spread monomials of degree ``d`` in ``n`` variables."""
    n = check_int(n, "n", 1)
    d = check_int(d, "d", 0)
    t = check_int(t, "t", 1)
    return binomial(n - (d - 1) * (t - 1), d)


def _t_spread_masks(n, d, t, first=1, prefix=0):
    if d == 0:
        yield prefix
        return
    # leave room for the remaining d - 1 indices at gap t
    last_start = n - (d - 1) * t
    for i in range(first, last_start + 1):
        yield from _t_spread_masks(n, d - 1, t, i + t, prefix | 1 << (i - 1))


def enumerate_t_spread(n, d, t):
    """All t-spread monomials of degree ``d`` in ``n`` variables, slex-descending."""
    n = check_int(n, "n", 1)
    d = check_int(d, "d", 0)
    t = check_int(t, "t", 1)
    return [Monomial(mask) for mask in _t_spread_masks(n, d, t)]


def slex_key(m):
    """Sort key: ascending keys list monomials of one degree in slex-descending order."""
    return tuple(bits(m.mask))


def slex_compare(u, v):
    """Return 1 if ``u >slex v``, -1 if ``u <slex v`` and 0 if equal."""
    if u.mask.bit_count() != v.mask.bit_count():
        raise ValueError(f"slex compares monomials of equal degree, got {u} and {v}")
    a, b = slex_key(u), slex_key(v)
    if a == b:
        return 0
    # the first differing index decides; the smaller index is the larger monomial
    return 1 if a < b else -1


def t_shadow(monomials, n, t):
    """The t-shadow: all t-spread ``x_i * w`` for ``w`` in ``monomials``.

    The members must be t-spread of one common degree.  The result is
    deduplicated and returned slex-descending.
    """
    n = check_int(n, "n", 1)
    t = check_int(t, "t", 1)
    monomials = list(monomials)
    degrees = {m.degree for m in monomials}
    if len(degrees) > 1:
        raise ValueError(f"t-shadow needs monomials of one degree, got degrees {sorted(degrees)}")
    out = set()
    for w in monomials:
        if w.mask >> n:
            raise DomainError(f"{w} is not a monomial in {n} variables")
        if not is_t_spread(w, t):
            raise ValueError(f"{w} is not {t}-spread")
        support = bits(w.mask)
        # x_i fits between neighbours lo < i < hi when both gaps are >= t
        bounds = [0] + support + [n + t]
        for lo, hi in zip(bounds, bounds[1:]):
            lo_i = lo + t if lo else 1
            for i in range(lo_i, hi - t + 1):
                out.add(w.mask | 1 << (i - 1))
    return sorted((Monomial(mask) for mask in out), key=slex_key)


def max_t_spread_degree(n, t):
    """Maximum degree of a t-spread monomial in ``n`` variables."""
    n = check_int(n, "n", 1)
    t = check_int(t, "t", 1)
    return (n - 1) // t + 1
