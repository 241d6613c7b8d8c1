"""Dense univariate polynomials with Python-int coefficients."""

from __future__ import annotations

from typing import Iterable


class IntPoly:
    """Exact integer polynomial, coefficients in ascending degree.

    The zero polynomial has no coefficients; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _lift(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        out, base = IntPoly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, inner: IntPoly) -> IntPoly:
        """``self(inner(x))`` by Horner's rule."""
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    def shift(self, c: int) -> IntPoly:
        """``self(x + c)``."""
        return self.compose(IntPoly((c, 1)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            body = "x" if k == 1 else f"x^{k}" if k else ""
            coef = "" if mag == 1 and k else str(mag)
            terms.append((sign, coef + body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def _lift(a: IntPoly | int) -> IntPoly:
    return a if isinstance(a, IntPoly) else IntPoly((a,))
