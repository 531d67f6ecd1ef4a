"""Linear algebra of diagram morphisms: formal sums of Brauer diagrams.

Composition glues the bottom of x to the top of y and multiplies by the loop
parameter once per closed loop; the tensor product places diagrams side by
side.  Morphisms live over the formal loop parameter (delta=None) or over
exact rationals at a fixed specialization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .matchings import Diagram, PerfectMatching, enumerate_matchings
from .scalars import DeltaPoly, as_scalar, loop_factor


def compose_diagrams(x: Diagram, y: Diagram) -> tuple[int, Diagram]:
    """Glue x (shape (r, s)) on top of y (shape (s, t)).

    Returns (number of closed loops removed, composite diagram of shape (r, t)).
    """
    if x.s != y.r:
        raise ValueError(f"cannot compose shapes ({x.r},{x.s}) and ({y.r},{y.s})")
    r, s, t = x.r, x.s, y.s
    mx = x.matching.involution()
    my = y.matching.involution()

    # Walk from each external point; glue point j means x-point r+j == y-point j.
    def walk(side: str, point: int):
        while True:
            if side == "x":
                point = mx[point]
                if point <= r:
                    return ("top", point)
                side, point = "y", point - r
            else:
                point = my[point]
                if point > s:
                    return ("bot", point - s)
                side, point = "x", point + r
        # unreachable

    pairs = []
    done = set()
    externals = [("x", i) for i in range(1, r + 1)] + [("y", s + j) for j in range(1, t + 1)]
    label = {("x", i): i for i in range(1, r + 1)}
    label.update({("y", s + j): r + j for j in range(1, t + 1)})
    for side, point in externals:
        if (side, point) in done:
            continue
        end = walk(side, point)
        end_key = ("x", end[1]) if end[0] == "top" else ("y", end[1] + s)
        done.add((side, point))
        done.add(end_key)
        pairs.append((label[(side, point)], label[end_key]))

    # Closed loops alternate between the two matchings inside the glue region.
    visited = set()
    loops = 0
    for j in range(1, s + 1):
        if j in visited:
            continue
        # Check the glue point is internal to a loop (not on a walked path).
        cur = j
        path = []
        internal = True
        while cur not in path:
            path.append(cur)
            nxt = mx[cur + r]
            if nxt <= r:
                internal = False
                break
            nxt = my[nxt - r]
            if nxt > s:
                internal = False
                break
            cur = nxt
        visited.update(path)
        if internal:
            # Also mark the y-side partners so each loop is counted once.
            for p in path:
                q = mx[p + r]
                if q > r:
                    visited.add(q - r)
            loops += 1
    return loops, Diagram(r, t, PerfectMatching(tuple(pairs)))


def tensor_diagrams(x: Diagram, y: Diagram) -> Diagram:
    """Place x and y side by side: shape (r1 + r2, s1 + s2)."""
    r1, s1, r2, s2 = x.r, x.s, y.r, y.s

    def map_x(p):
        return p if p <= r1 else p + r2

    def map_y(p):
        return p + r1 if p <= r2 else p + r1 + s1

    pairs = [(map_x(a), map_x(b)) for a, b in x.matching.pairs]
    pairs += [(map_y(a), map_y(b)) for a, b in y.matching.pairs]
    return Diagram(r1 + r2, s1 + s2, PerfectMatching(tuple(pairs)))


def closure_loops(d: Diagram) -> int:
    """Loops formed by closing top point i onto bottom point i."""
    if d.r != d.s:
        raise ValueError(f"trace needs a square shape, got ({d.r},{d.s})")
    inv = d.matching.involution()
    loops = 0
    seen = set()
    for start in range(1, d.r + 1):
        if start in seen:
            continue
        loops += 1
        p = start
        while True:
            q = inv[p]
            seen.add(p)
            seen.add(q)
            p = q - d.r if q > d.r else q + d.r  # close i-top with i-bottom
            if p == start:
                break
    return loops


class Morphism:
    """A finite formal linear combination of same-shape diagrams."""

    __slots__ = ("r", "s", "delta", "terms")

    def __init__(self, r: int, s: int, terms, delta: Fraction | None = None):
        self.r = r
        self.s = s
        self.delta = None if delta is None else Fraction(delta)
        clean = {}
        for d, c in dict(terms).items():
            if d.r != r or d.s != s:
                raise ValueError(f"diagram of shape ({d.r},{d.s}) in a ({r},{s}) morphism")
            coeff = as_scalar(c, self.delta)
            if coeff:
                clean[d] = clean.get(d, as_scalar(0, self.delta)) + coeff
        self.terms = {d: c for d, c in clean.items() if c}

    @classmethod
    def zero(cls, r: int, s: int, delta=None) -> Morphism:
        return cls(r, s, {}, delta)

    @classmethod
    def identity(cls, m: int, delta=None) -> Morphism:
        return cls(m, m, {Diagram.identity(m): 1}, delta)

    @classmethod
    def from_diagram(cls, d: Diagram, delta=None, coeff=1) -> Morphism:
        return cls(d.r, d.s, {d: coeff}, delta)

    def support(self) -> list[Diagram]:
        return sorted(self.terms)

    def coefficient(self, d: Diagram):
        return self.terms.get(d, as_scalar(0, self.delta))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_ring(self, other: Morphism):
        if self.delta != other.delta:
            raise ValueError(f"mixed coefficient rings: delta={self.delta} vs delta={other.delta}")

    def __add__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        self._check_ring(other)
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError(f"cannot add shapes ({self.r},{self.s}) and ({other.r},{other.s})")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, as_scalar(0, self.delta)) + c
        return Morphism(self.r, self.s, terms, self.delta)

    def __neg__(self):
        return Morphism(self.r, self.s, {d: -c for d, c in self.terms.items()}, self.delta)

    def __sub__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self + (-other)

    def scaled(self, scalar) -> Morphism:
        return Morphism(self.r, self.s, {d: c * as_scalar(scalar, self.delta)
                                         for d, c in self.terms.items()}, self.delta)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, DeltaPoly)):
            return self.scaled(other)
        return NotImplemented

    def __mul__(self, other):
        """Composition (self on top of other), or scaling by a scalar."""
        if isinstance(other, (int, Fraction, DeltaPoly)):
            return self.scaled(other)
        if isinstance(other, Diagram):
            other = Morphism.from_diagram(other, self.delta)
        if not isinstance(other, Morphism):
            return NotImplemented
        self._check_ring(other)
        if self.s != other.r:
            raise ValueError(
                f"cannot compose shapes ({self.r},{self.s}) and ({other.r},{other.s})")
        terms: dict[Diagram, object] = {}
        for dx, cx in self.terms.items():
            for dy, cy in other.terms.items():
                loops, glued = compose_diagrams(dx, dy)
                coeff = cx * cy * loop_factor(loops, self.delta)
                terms[glued] = terms.get(glued, as_scalar(0, self.delta)) + coeff
        return Morphism(self.r, other.s, terms, self.delta)

    def __matmul__(self, other):
        if isinstance(other, Diagram):
            other = Morphism.from_diagram(other, self.delta)
        if not isinstance(other, Morphism):
            return NotImplemented
        self._check_ring(other)
        terms: dict[Diagram, object] = {}
        for dx, cx in self.terms.items():
            for dy, cy in other.terms.items():
                d = tensor_diagrams(dx, dy)
                terms[d] = terms.get(d, as_scalar(0, self.delta)) + cx * cy
        return Morphism(self.r + other.r, self.s + other.s, terms, self.delta)

    def __pow__(self, exp: int):
        if self.r != self.s:
            raise ValueError("powers need a square shape")
        acc = Morphism.identity(self.r, self.delta)
        for _ in range(exp):
            acc = acc * self
        return acc

    def trace(self):
        """Diagrammatic closure: sum of coeff * delta^loops over the terms."""
        if self.r != self.s:
            raise ValueError(f"trace needs a square shape, got ({self.r},{self.s})")
        total = as_scalar(0, self.delta)
        for d, c in self.terms.items():
            total = total + c * loop_factor(closure_loops(d), self.delta)
        return total

    def specialize(self, delta0) -> Morphism:
        """Evaluate the formal loop parameter at an exact rational."""
        if self.delta is not None:
            raise ValueError("morphism is already specialized")
        delta0 = Fraction(delta0)
        return Morphism(self.r, self.s,
                        {d: c.evaluate(delta0) for d, c in self.terms.items()}, delta0)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.r, self.s, self.delta) == (other.r, other.s, other.delta) \
            and self.terms == other.terms

    def __repr__(self):
        return f"Morphism({self.r},{self.s}; {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*{d}" for d, c in sorted(self.terms.items(), key=lambda t: str(t[0]))]
        return " + ".join(parts).replace("+ -", "- ")


def generator_u(i: int, m: int) -> Diagram:
    """Cap-cup diagram: pairs (i, i+1) on top and on the bottom, rest vertical."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator index {i} out of range for {m} strands")
    pairs = [(i, i + 1), (m + i, m + i + 1)]
    pairs += [(a, m + a) for a in range(1, m + 1) if a not in (i, i + 1)]
    return Diagram(m, m, PerfectMatching(tuple(pairs)))


def generator_s(i: int, m: int) -> Diagram:
    """Simple transposition: strand i to bottom i+1 and vice versa."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator index {i} out of range for {m} strands")
    pairs = [(i, m + i + 1), (i + 1, m + i)]
    pairs += [(a, m + a) for a in range(1, m + 1) if a not in (i, i + 1)]
    return Diagram(m, m, PerfectMatching(tuple(pairs)))


def r_element(i: int, k: int, m: int, delta) -> Morphism:
    """The deformation 1/(k+1) * (1 + k*s_i - 2k/(delta+2k-2) * u_i).

    Needs a rational specialization; delta = 2 - 2k is a pole.
    """
    if delta is None:
        raise ValueError("r_element needs a rational specialization of the loop parameter")
    delta = Fraction(delta)
    if delta + 2 * k - 2 == 0:
        raise ValueError(f"pole: delta = {delta} equals 2 - 2k for k = {k}")
    inv = Fraction(1, k + 1)
    terms = {
        Diagram.identity(m): inv,
        generator_s(i, m): inv * k,
        generator_u(i, m): -inv * Fraction(2 * k, 1) / (delta + 2 * k - 2),
    }
    return Morphism(m, m, terms, delta)


def _default_delta(n: int, delta):
    if delta == "auto":
        return Fraction(-2 * n)
    return delta


def e_sum(n: int, delta="auto") -> Morphism:
    """Average of all diagrams on n+1 strands; idempotent at delta = -2n."""
    m = n + 1
    delta = _default_delta(n, delta)
    coeff = Fraction(1, math.factorial(m))
    terms = {Diagram(m, m, pm): coeff for pm in enumerate_matchings(2 * m)}
    return Morphism(m, m, terms, delta)


def e_rec(n: int, delta="auto", chain: str = "ere") -> Morphism:
    """The same idempotent built recursively from the deformation elements.

    chain selects the construction: "ere" is E(n)R_n(n)E(n), "left" is
    E(n)R_n(n)R_{n-1}(n-1)...R_1(1), "right" is R_1(1)...R_n(n)E(n),
    with E built on one strand fewer and padded by an identity strand.
    """
    delta = _default_delta(n, delta)
    if delta is None:
        raise ValueError("recursive construction needs a rational specialization")
    if chain not in ("ere", "left", "right"):
        raise ValueError(f"unknown chain {chain!r}")

    def build(j: int) -> Morphism:
        # Idempotent on j strands, embedded later as needed.
        if j == 1:
            return Morphism.identity(1, delta)
        prev = build(j - 1) @ Morphism.identity(1, delta)
        i = j - 1
        if chain == "ere":
            return prev * r_element(i, i, j, delta) * prev
        if chain == "left":
            acc = prev
            for idx in range(i, 0, -1):
                acc = acc * r_element(idx, idx, j, delta)
            return acc
        acc = prev
        for idx in range(i, 0, -1):
            acc = r_element(idx, idx, j, delta) * acc
        return acc

    return build(n + 1)


def e_trace(n: int, delta="auto"):
    """Closure trace of the idempotent; vanishes exactly at delta = -2n."""
    return e_sum(n, delta).trace()


@dataclass(frozen=True)
class CentralityReport:
    passed: bool
    witness: Diagram | None = None
    detail: str = ""


def check_eq_ch(e: Morphism, n: int) -> CentralityReport:
    """Verify x*e == [pr(x) = n+1]*e == e*x for every diagram x on n+1 strands."""
    m = n + 1
    if (e.r, e.s) != (m, m):
        raise ValueError(f"expected a ({m},{m}) morphism, got ({e.r},{e.s})")
    for pm in enumerate_matchings(2 * m):
        x = Diagram(m, m, pm)
        rho = 1 if x.propagating_number == m else 0
        xm = Morphism.from_diagram(x, e.delta)
        want = e.scaled(rho)
        if xm * e != want:
            return CentralityReport(False, x, "x*e != rho(x)*e")
        if e * xm != want:
            return CentralityReport(False, x, "e*x != rho(x)*e")
    return CentralityReport(True)
