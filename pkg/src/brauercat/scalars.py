"""Exact coefficient scalars: polynomials in the loop parameter d.

Morphism coefficients are either DeltaPoly (formal loop parameter) or
plain Fraction (after specializing d to a rational number).  Specialization
is a ring homomorphism.
"""

from __future__ import annotations

from fractions import Fraction


class DeltaPoly:
    """Polynomial in the formal loop parameter, rational coefficients, exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, value) -> DeltaPoly:
        return cls((Fraction(value),))

    @classmethod
    def delta(cls, power: int = 1) -> DeltaPoly:
        return cls((0,) * power + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerced(self, other):
        if isinstance(other, DeltaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DeltaPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return DeltaPoly(tuple(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (o.coeffs[i] if i < len(o.coeffs) else 0) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return DeltaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return DeltaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return DeltaPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative powers are not polynomials")
        acc = DeltaPoly.const(1)
        for _ in range(exp):
            acc = acc * self
        return acc

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("DeltaPoly", self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"DeltaPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "d" if i == 1 else f"d^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def as_scalar(value, delta: Fraction | None):
    """Coerce a coefficient into the ring selected by ``delta``.

    delta=None means the formal ring (DeltaPoly); otherwise exact rationals.
    """
    if delta is None:
        if isinstance(value, DeltaPoly):
            return value
        return DeltaPoly.const(value)
    if isinstance(value, DeltaPoly):
        raise TypeError("formal coefficient in a specialized morphism")
    return Fraction(value)


def loop_factor(loops: int, delta: Fraction | None):
    """The scalar contributed by ``loops`` closed loops."""
    if delta is None:
        return DeltaPoly.delta(1) ** loops
    return Fraction(delta) ** loops
