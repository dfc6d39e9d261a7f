"""Exact bivariate integer polynomials: parsing, printing, Newton support.

Grammar (whitespace ignored; ``pos`` in errors is a 0-based offset):

    expr    :=  [ '+' | '-' ]  term  { ( '+' | '-' )  term }
    term    :=  factor  { [ '*' ]  factor }
    factor  :=  INT  |  'x' [ '^' INT ]  |  'y' [ '^' INT ]  |  '(' expr ')'
    INT     :=  digit { digit }

so e.g. ``x^3 - y^2``, ``(x^2+y)*(x+y^2)`` and ``3x y^2`` all parse.  No
division, no variable exponents.  Coefficients and exponents are exact
arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Term = tuple[int, int]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Poly2:
    """Sparse polynomial: exponent pair (i, j) -> nonzero coefficient."""

    terms: dict[Term, int]

    def __post_init__(self):
        if any(c == 0 for c in self.terms.values()):
            raise ValueError("zero coefficients must not be stored")
        if any(i < 0 or j < 0 for i, j in self.terms):
            raise ValueError("exponents must be nonnegative")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[Term]:
        return set(self.terms)

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self.terms)
        for e, c in other.terms.items():
            new = out.get(e, 0) + c
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        return Poly2(out)

    def __neg__(self) -> "Poly2":
        return Poly2({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: "Poly2") -> "Poly2":
        out: dict[Term, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        return Poly2(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return poly_to_string(self)


def parse_poly(src: str) -> Poly2:
    """Parse and expand a polynomial written in the module grammar."""
    parser = _Parser(src)
    poly = parser.expr()
    parser.skip_ws()
    if parser.pos != len(src):
        raise ParseError(f"unexpected {src[parser.pos]!r}", parser.pos)
    return poly


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expr(self) -> Poly2:
        sign = -1 if self._eat_sign() == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while self.peek() and self.peek() in "+-":
            op = self.src[self.pos]
            self.pos += 1
            nxt = self.term()
            total = total + nxt if op == "+" else total - nxt
        return total

    def _eat_sign(self) -> str:
        ch = self.peek()
        if ch and ch in "+-":
            self.pos += 1
            return ch
        return ""

    def term(self) -> Poly2:
        product = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                product = product * self.factor()
            elif ch and (ch.isdigit() or ch in "xy("):
                product = product * self.factor()
            else:
                return product

    def factor(self) -> Poly2:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if ch.isdigit():
            value = self._int()
            return Poly2({(0, 0): value} if value else {})
        if ch and ch in "xy":
            self.pos += 1
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self._int()
            return Poly2({(e, 0) if ch == "x" else (0, e): 1})
        raise ParseError("expected a number, 'x', 'y' or '('", self.pos)

    def _int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", self.pos)
        return int(self.src[start:self.pos])


def poly_to_string(p: Poly2) -> str:
    """Canonical form: graded lexicographic on (i, j), descending."""
    if p.is_zero:
        return "0"
    parts = []
    for (i, j) in sorted(p.terms, key=lambda e: (e[0] + e[1], e[0], e[1]), reverse=True):
        c = p.terms[(i, j)]
        mono = "".join((f"x^{i}" if i > 1 else "x" * min(i, 1),
                        f"y^{j}" if j > 1 else "y" * min(j, 1)))
        body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Newton support geometry


def compact_edges(support: set[Term]) -> list[tuple[Term, Term]]:
    """Compact edges of conv(support + Z^2_{>=0}), each as an endpoint pair
    ordered by increasing first coordinate.

    The compact part of the boundary is the lower-left staircase hull of the
    support; collinear interior points are absorbed into their edge.
    """
    if not support:
        raise ValueError("support must be nonempty")
    minimal = [p for p in support
               if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in support)]
    minimal.sort()
    hull = [minimal[0]]
    for p in minimal[1:]:
        # boundary slopes strictly increase left to right; a right turn or a
        # collinear middle point is not a hull vertex
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return [(hull[t], hull[t + 1]) for t in range(len(hull) - 1)]


def _cross(a: Term, b: Term, c: Term) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def restrict_to_edge(f: Poly2, edge: tuple[Term, Term]) -> tuple[int, ...]:
    """Coefficients of the one-variable dehomogenisation of f along a compact
    edge of its Newton polyhedron.

    Walking the edge from its left endpoint in primitive steps sigma, the
    result g has g[k] = coefficient of f at (left + k*sigma); both endpoint
    coefficients are nonzero.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has no Newton polyhedron")
    pair = tuple(sorted(edge))
    edges = {tuple(sorted(e)) for e in compact_edges(f.support())}
    if pair not in edges:
        raise ValueError(f"{edge} is not a compact edge of the Newton polyhedron")
    (x0, y0), (x1, y1) = pair
    dx, dy = x1 - x0, y1 - y0
    steps = gcd(abs(dx), abs(dy))
    sx, sy = dx // steps, dy // steps
    return tuple(f.terms.get((x0 + k * sx, y0 + k * sy), 0) for k in range(steps + 1))
