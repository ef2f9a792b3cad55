"""Pascal ideals and the extremal-regularity constructions for t-spread ideals.

The Pascal ideal of type (n, t) is generated by the t residue-class monomials
``x_{n,t,r} = prod_{j = r mod t} x_j`` (r = 1..t).  Their supports partition
[n], so they form a regular sequence and every invariant has a closed form.
"""

from dataclasses import dataclass
import math

from ._validation import DomainError, check_int, check_n_t
from .ideals import FtVector, MonomialIdeal, ft_vector, is_regular_sequence, t_spread_part
from .monomials import Monomial, binomial, enumerate_t_spread, max_t_spread_degree, t_shadow

__all__ = [
    "PascalIdeal",
    "HilbertSeries",
    "TLexCompanion",
    "pascal_ideal",
    "pascal_total_betti",
    "pascal_ft_vector",
    "pascal_hilbert_series",
    "hilbert_series_ci",
    "hilbert_series",
    "hilbert_function",
    "pascal_tlex",
    "shadow_discrepancy",
    "tlex_companion_exists",
    "max_reg_witness",
]


@dataclass(frozen=True)
class PascalIdeal:
    n: int
    t: int

    def __post_init__(self):
        check_n_t(self.n, self.t)

    @property
    def residue(self):
        """The ``i`` in ``[t]`` with ``n = i (mod t)``."""
        return (self.n - 1) % self.t + 1

    @property
    def k(self):
        return (self.n - 1) // self.t

    @property
    def generators(self):
        """``x_{n,t,1}, ..., x_{n,t,t}`` in residue-class order."""
        return tuple(
            Monomial.from_support(range(r, self.n + 1, self.t)) for r in range(1, self.t + 1)
        )

    @property
    def ideal(self):
        return MonomialIdeal(self.n, self.generators)


def pascal_ideal(n, t):
    return PascalIdeal(n, t)


def pascal_total_betti(n, t):
    """Total Betti numbers of S/I: the t-th row of Pascal's triangle."""
    n, t = check_n_t(n, t)
    return [math.comb(t, i) for i in range(t + 1)]


def pascal_ft_vector(n, t):
    """Closed-form f_t-vector of the Pascal ideal; ``entries[j]`` is the degree-``j`` count."""
    n, t = check_n_t(n, t)
    i = (n - 1) % t + 1
    k = (n - 1) // t
    entries = []
    for j in range(k + 2):
        full = binomial(n - (j - 1) * (t - 1), j)
        if j == k:
            full -= t - i
        elif j == k + 1:
            full -= i
        entries.append(full)
    return FtVector(t, tuple(entries))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(z) / (1 - z)^denominator_exponent``, kept exactly as built."""

    numerator: tuple
    denominator_exponent: int

    def normalized(self):
        """Cancel common factors ``(1 - z)`` between numerator and denominator."""
        num = _trim(self.numerator)
        e = self.denominator_exponent
        while e > 0 and sum(num) == 0 and any(num):
            # synthetic division by (1 - z): q_k = sum_{m <= k} c_m
            quotient, acc = [], 0
            for c in num[:-1]:
                acc += c
                quotient.append(acc)
            num = _trim(quotient) if quotient else [0]
            e -= 1
        return HilbertSeries(tuple(num), e)

    def equivalent(self, other):
        return self.normalized() == other.normalized()

    def coefficients(self, upto):
        """Hilbert function values in degrees ``0 .. upto``."""
        e = self.denominator_exponent
        series = [math.comb(d + e - 1, e - 1) if e else int(d == 0) for d in range(upto + 1)]
        out = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            for d in range(i, upto + 1):
                out[d] += c * series[d - i]
        return out

    def __str__(self):
        terms = []
        for p, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c}" if p == 0 else f"{c}*z^{p}" if c != 1 else f"z^{p}")
        return f"({' + '.join(terms) or '0'}) / (1 - z)^{self.denominator_exponent}"


def hilbert_series_ci(ideal):
    """Hilbert series of S/I for a regular sequence: prod (1 + ... + z^{deg u - 1}) / (1 - z)^{n - p}."""
    if not is_regular_sequence(ideal):
        raise DomainError(f"({ideal}) is not generated by a regular sequence")
    num = [1]
    for g in ideal.gens:
        num = _poly_mul(num, [1] * g.degree)
    return HilbertSeries(tuple(num), ideal.n - len(ideal))


def pascal_hilbert_series(n, t):
    n, t = check_n_t(n, t)
    i = (n - 1) % t + 1
    k = (n - 1) // t
    num = [1]
    for _ in range(i):
        num = _poly_mul(num, [1] * (k + 1))
    for _ in range(t - i):
        num = _poly_mul(num, [1] * k)
    return HilbertSeries(tuple(num), n - t)


def hilbert_series(ideal):
    """Hilbert series of S/I from inclusion-exclusion over generator subsets.

    The numerator is ``sum_F (-1)^|F| z^{deg lcm F}`` over all subsets F of
    G(I) (the Taylor K-polynomial), over ``(1 - z)^n``.  Exponential in the
    number of generators.
    """
    masks = ideal.masks
    if len(masks) > 20:
        raise DomainError(f"inclusion-exclusion limited to 20 generators, got {len(masks)}")
    num = [0] * (ideal.support_union.bit_count() + 1)
    union = [0] * (1 << len(masks))
    num[0] = 1
    for subset in range(1, 1 << len(masks)):
        low = subset & -subset
        union[subset] = union[subset ^ low] | masks[low.bit_length() - 1]
        num[union[subset].bit_count()] += -1 if subset.bit_count() % 2 else 1
    return HilbertSeries(tuple(_trim(num)), ideal.n)


def hilbert_function(ideal, degree):
    """Number of degree-``degree`` monomials of S outside I, by inclusion-exclusion."""
    n = ideal.n
    degree = check_int(degree, "degree", 0)
    masks = ideal.masks
    total = binomial(n + degree - 1, degree)
    union = [0] * (1 << len(masks))
    for subset in range(1, 1 << len(masks)):
        low = subset & -subset
        union[subset] = union[subset ^ low] | masks[low.bit_length() - 1]
        d = union[subset].bit_count()
        # monomials of the given degree divisible by the lcm
        multiples = binomial(n + degree - d - 1, degree - d) if degree >= d else 0
        total += -multiples if subset.bit_count() % 2 else multiples
    return total


@dataclass(frozen=True)
class TLexCompanion:
    """Outcome of the t-lex companion construction for a Pascal ideal.

    ``ideal`` is the t-spread lexsegment ideal with the same f_t-vector, or
    None.  ``discrepancy`` is the size of the t-shadow of the degree-k part
    of the candidate (None when the residue is t).
    """

    n: int
    t: int
    residue: int
    ideal: object
    discrepancy: object

    @property
    def exists(self):
        return self.ideal is not None


def _top(n, d, t, count):
    return enumerate_t_spread(n, d, t)[:count]


def shadow_discrepancy(n, t):
    """Closed-form size of the t-shadow of the candidate's degree-k generators (residue < t)."""
    n, t = check_n_t(n, t)
    i = (n - 1) % t + 1
    if i == t:
        raise DomainError(f"n={n} is divisible by t={t}; the shadow count applies to residues 1..t-1")
    terms = t - i if t - i <= i else i
    return sum(i - j for j in range(terms))


def pascal_tlex(n, t):
    """Build the t-spread lexsegment ideal with the Pascal ideal's f_t-vector, if it exists.

    For residue ``i = t`` the candidate is the top t monomials of M_{n,k+1,t};
    otherwise it is the top t - i monomials of M_{n,k,t}, which works exactly
    when its t-shadow has i elements.
    """
    n, t = check_n_t(n, t)
    p = PascalIdeal(n, t)
    i, k = p.residue, p.k
    if i == t:
        return TLexCompanion(n, t, i, MonomialIdeal(n, tuple(_top(n, k + 1, t, t))), None)
    v = shadow_discrepancy(n, t)
    if v != i:
        return TLexCompanion(n, t, i, None, v)
    return TLexCompanion(n, t, i, MonomialIdeal(n, tuple(_top(n, k, t, t - i))), v)


def tlex_companion_exists(ideal, t):
    """Decide by direct construction whether a t-spread lexsegment ideal shares ``ft_vector(ideal, t)``.

    A lexsegment ideal's t-spread part in each degree must be the initial slex
    segment of the prescribed size, so the candidate is forced; it is an ideal
    exactly when each segment's t-shadow lies inside the next segment.
    Returns the companion ideal or None.
    """
    n = ideal.n
    top = max_t_spread_degree(n, t)
    segments = []
    for j in range(top + 1):
        size = len(t_spread_part(ideal, j, t))
        segments.append(_top(n, j, t, size))
    for j in range(top):
        if not set(t_shadow(segments[j], n, t)) <= set(segments[j + 1]):
            return None
    gens = [m for seg in segments for m in seg]
    if not gens:
        return None
    companion = MonomialIdeal(n, tuple(gens))
    assert ft_vector(companion, t) == ft_vector(ideal, t)
    return companion


def max_reg_witness(n, d, t):
    """A t-spread ideal generated in degrees <= d attaining the largest possible regularity.

    When ``ceil(n/d) >= t`` this is the Pascal ideal of type (n, ceil(n/d));
    otherwise the Pascal ideal of type (n, t).
    """
    n, t = check_n_t(n, t)
    d = check_int(d, "d", 1)
    if n < 1 + (d - 1) * t:
        raise DomainError(f"need n >= 1 + (d-1)t, got n={n}, d={d}, t={t}")
    c = -(-n // d)
    return PascalIdeal(n, max(c, t)).ideal
