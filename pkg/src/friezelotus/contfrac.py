"""Ceiling-type continued fractions, continuants, and the n/q <-> n/(n-q) duality.

A slope is a reduced fraction of nonnegative integers.  Every finite positive
slope has a unique expansion

    n/q = b1 - 1/(b2 - 1/(... - 1/br))

with all terms >= 2 when n/q > 1 (and a leading term 1 otherwise).  Expansions
are plain tuples of ints.  Evaluation goes through continuant polynomials,
which also build every frieze entry elsewhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence


class Rational:
    """Reduced fraction of nonnegative integers, plus an infinity sentinel.

    ``Rational(n, q)`` requires q >= 1 and reduces.  ``Rational.infinity()``
    returns the unique infinite value (internally den == 0); the public
    constructor never accepts den == 0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise ValueError("denominator must be >= 1 (use Rational.infinity())")
        if num < 0 or den < 0:
            raise ValueError("negative slopes are not supported")
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @classmethod
    def infinity(cls) -> "Rational":
        inf = object.__new__(cls)
        object.__setattr__(inf, "num", 1)
        object.__setattr__(inf, "den", 0)
        return inf

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __lt__(self, other: "Rational") -> bool:
        # cross multiplication; correct for the infinity sentinel as well
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Rational") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Rational") -> bool:
        return other < self

    def __ge__(self, other: "Rational") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return f"Rational({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.num}/{self.den}"

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Parse 'n/q', a bare integer 'n', or 'inf'."""
        s = text.strip()
        if s in ("inf", "Inf", "INF", "oo"):
            return cls.infinity()
        num, sep, den = s.partition("/")
        try:
            if sep:
                return cls(int(num), int(den))
            return cls(int(s))
        except ValueError as exc:
            raise ValueError(f"not a rational: {text!r}") from exc


INFINITY = Rational.infinity()
ZERO = Rational(0)


def continuant(values: Sequence[int]) -> int:
    """Determinant of the tridiagonal matrix with the given diagonal and
    unit off-diagonals: P_0 = 1, P_1(y1) = y1, P_n = yn*P_{n-1} - P_{n-2}."""
    prev, cur = 0, 1
    for y in values:
        prev, cur = cur, y * cur - prev
    return cur


def hj_expand(x: Rational) -> tuple[int, ...]:
    """Ceiling continued-fraction expansion of a finite positive rational.

    All terms are >= 2 when x > 1; for x <= 1 only the first term may be 1.
    """
    if x.is_infinite:
        raise ValueError("cannot expand the infinite slope")
    if x.is_zero:
        raise ValueError("cannot expand zero")
    n, q = x.num, x.den
    terms = []
    while True:
        b = -(-n // q)  # ceil(n/q)
        terms.append(b)
        rem_n, rem_q = b * q - n, q  # b - n/q
        if rem_n == 0:
            return tuple(terms)
        n, q = rem_q, rem_n  # next value is 1/(b - n/q)


def hj_evaluate(terms: Sequence[int]) -> Rational:
    """Reduced value of an expansion, via the continuant quotient
    P_r(b1..br) / P_{r-1}(b2..br).  Numerator and denominator of that
    quotient are automatically coprime."""
    _check_expansion(terms)
    num = continuant(terms)
    den = continuant(terms[1:])
    if num <= 0 or den <= 0:
        raise ValueError(f"not a valid expansion: {list(terms)}")
    return Rational(num, den)


def _check_expansion(terms: Sequence[int]) -> None:
    if len(terms) == 0:
        raise ValueError("expansion must be nonempty")
    if terms[0] < 1 or any(b < 2 for b in terms[1:]):
        raise ValueError(f"not a valid expansion: {list(terms)}")


@dataclass(frozen=True)
class KidohDual:
    """Block data (c_i, d_i) linking the expansions of n/q and n/(n-q).

    With n/q = [[d1+1, 2^(c1-1), d2+2, 2^(c2-1), ..., dk+2, 2^(ck-1)]] the
    dual value n/(n-q) expands as
    [[2^(d1-1), c1+2, 2^(d2-1), c2+2, ..., 2^(dk-1), ck+1]].
    """

    c: tuple[int, ...]
    d: tuple[int, ...]
    dual: tuple[int, ...]

    @property
    def kappa(self) -> int:
        return len(self.c)

    @property
    def polygon_size(self) -> int:
        """m = sum(b_i) - r + 3 for the primal expansion."""
        return len(self.dual) + len(_primal_from_blocks(self.c, self.d)) + 2

    @property
    def s(self) -> int:
        """Length of the dual expansion; equals m - r - 2."""
        return len(self.dual)


def kidoh_dual(x: Rational) -> KidohDual:
    """Dual expansion of n/(n-q) for x = n/q with n > q > 0."""
    if x.is_infinite or x.is_zero:
        raise ValueError("duality needs a finite positive rational > 1")
    if x.num <= x.den:
        raise ValueError(f"duality needs n > q, got {x}")
    terms = hj_expand(x)
    c, d = _kidoh_blocks(terms)
    dual = _dual_from_blocks(c, d)
    return KidohDual(c=c, d=d, dual=dual)


def _kidoh_blocks(terms: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # terms[0] = d1 + 1; afterwards alternating runs of 2s (length c_j - 1)
    # separated by entries t >= 3 (t = d_{j+1} + 2).
    d = [terms[0] - 1]
    c = []
    i = 1
    while True:
        run = 0
        while i < len(terms) and terms[i] == 2:
            run += 1
            i += 1
        c.append(run + 1)
        if i == len(terms):
            return tuple(c), tuple(d)
        d.append(terms[i] - 2)
        i += 1


def _dual_from_blocks(c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    k = len(c)
    for j in range(k):
        out.extend([2] * (d[j] - 1))
        out.append(c[j] + 2 if j < k - 1 else c[j] + 1)
    return tuple(out)


def _primal_from_blocks(c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = [d[0] + 1]
    for j in range(len(c)):
        if j > 0:
            out.append(d[j] + 2)
        out.extend([2] * (c[j] - 1))
    return tuple(out)


def all_expansions(total: int) -> Iterator[tuple[int, ...]]:
    """All expansions with every term >= 2 and sum(b_i) - r = total.

    These are exactly the expansions of values > 1 whose two-eared polygon
    has total + 3 vertices.
    """
    if total < 1:
        return
    if total == 1:
        yield (2,)
        return
    for first in range(2, total + 2):
        rest = total - (first - 1)
        if rest == 0:
            yield (first,)
        else:
            for tail in all_expansions(rest):
                yield (first,) + tail
