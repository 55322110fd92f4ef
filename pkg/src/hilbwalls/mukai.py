"""Exact arithmetic in the algebraic Mukai lattice of a Picard-rank-one K3.

A class is stored as an integer triple ``(r, c, s)`` meaning
``r + c*H + s*[pt]`` with ``H^2 = 2d``.  Everything here is integer or
:class:`fractions.Fraction` arithmetic; nothing touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Optional


class DegenerateInputError(ValueError):
    """The zero vector was passed where a nonzero class is required."""


class NonHyperbolicError(ValueError):
    """A rank-2 sublattice that was required to be hyperbolic is not."""


class DependentBasisError(ValueError):
    """Two vectors expected to span a rank-2 lattice are proportional."""


@dataclass(frozen=True, order=True)
class MukaiVector:
    r: int
    c: int
    s: int

    def __post_init__(self) -> None:
        for name in ("r", "c", "s"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"Mukai vector component {name} must be an int")

    def __iter__(self) -> Iterator[int]:
        return iter((self.r, self.c, self.s))

    def __add__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> MukaiVector:
        return MukaiVector(-self.r, -self.c, -self.s)

    def __mul__(self, n: int) -> MukaiVector:
        return MukaiVector(n * self.r, n * self.c, n * self.s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0

    def as_list(self) -> list[int]:
        return [self.r, self.c, self.s]

    def __str__(self) -> str:
        return f"({self.r},{self.c},{self.s})"


def pairing(v: MukaiVector, w: MukaiVector, d: int) -> int:
    """Mukai pairing ``2d c_v c_w - r_v s_w - s_v r_w``."""
    return 2 * d * v.c * w.c - v.r * w.s - v.s * w.r


def square(v: MukaiVector, d: int) -> int:
    return pairing(v, v, d)


def primitive_part(v: MukaiVector) -> tuple[MukaiVector, int]:
    """Return ``(v / g, g)`` where ``g`` is the content of ``v``."""
    if v.is_zero():
        raise DegenerateInputError("the zero vector has no primitive part")
    g = gcd(gcd(abs(v.r), abs(v.c)), abs(v.s))
    return MukaiVector(v.r // g, v.c // g, v.s // g), g


def is_primitive(v: MukaiVector) -> bool:
    return not v.is_zero() and primitive_part(v)[1] == 1


def is_positive_class(
    v: MukaiVector, d: int, relative_to: Optional[MukaiVector] = None
) -> bool:
    """Positivity test for a Mukai class.

    Without ``relative_to`` this is the absolute reading: ``v^2 >= -2`` and
    ``v`` lexicographically positive in ``(r, c, s)``.

    With ``relative_to=v0`` it is the positive cone of a wall lattice
    containing ``v0``: ``v^2 >= 0`` and ``(v, v0) > 0``.  This is the
    reading the wall search uses for decompositions ``v0 = w + (v0 - w)``.
    """
    if relative_to is not None:
        return square(v, d) >= 0 and pairing(v, relative_to, d) > 0
    if square(v, d) < -2:
        return False
    if v.r != 0:
        return v.r > 0
    if v.c != 0:
        return v.c > 0
    return v.s > 0


def gram_determinant(v: MukaiVector, w: MukaiVector, d: int) -> int:
    """``v^2 w^2 - (v, w)^2``; negative iff ``Zv + Zw`` is hyperbolic."""
    p = pairing(v, w, d)
    return square(v, d) * square(w, d) - p * p


def _int_sqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _rational_roots(a: int, b: int, c: int) -> list[Fraction]:
    """Rational roots of ``a t^2 + b t + c`` (``a != 0``)."""
    disc = b * b - 4 * a * c
    root = _int_sqrt_exact(disc)
    if root is None:
        return []
    return sorted({Fraction(-b + root, 2 * a), Fraction(-b - root, 2 * a)})


def solve_in_rank2(
    v: MukaiVector,
    w: MukaiVector,
    target_square: int,
    pairing_with_v: int,
    d: int,
) -> list[MukaiVector]:
    """All ``s = x v + y w`` (``x, y`` integers) with prescribed ``s^2`` and ``(s, v)``.

    Fixing ``(s, v)`` is one linear condition on ``(x, y)``; substituting it
    into the quadratic ``s^2 = target_square`` leaves a one-variable
    quadratic, so there are at most two solutions.
    """
    if v.is_zero() or w.is_zero():
        raise DegenerateInputError("solve_in_rank2 needs nonzero vectors")
    vv, vw, ww = square(v, d), pairing(v, w, d), square(w, d)
    gram = vv * ww - vw * vw
    if gram >= 0:
        raise NonHyperbolicError(f"Gram determinant {gram} is not negative")
    p, t = pairing_with_v, target_square

    # x*vv + y*vw = p  and  x^2 vv + 2xy vw + y^2 ww = t
    pairs: list[tuple[Fraction, Fraction]] = []
    if vv != 0:
        # x = (p - y vw) / vv; clearing vv gives gram*y^2 + (vv t - p^2) = 0
        for y in _rational_roots(gram, 0, p * p - vv * t):
            pairs.append((Fraction(p - y * vw, vv), y))
    else:
        # vv = 0 forces vw != 0 (gram < 0): y = p / vw, linear in x
        y = Fraction(p, vw)
        if y == 0:
            if t != 0:
                return []
            raise DegenerateInputError("infinitely many solutions along the isotropic v")
        pairs.append((Fraction(t - y * y * ww, 2 * y * vw), y))

    out = []
    for x, y in pairs:
        if x.denominator == 1 and y.denominator == 1:
            out.append(v * int(x) + w * int(y))
    return sorted(set(out))


def membership_in_lattice(
    target: MukaiVector, v: MukaiVector, w: MukaiVector
) -> Optional[tuple[int, int]]:
    """Coordinates ``(x, y)`` with ``target = x v + y w``, or ``None``."""
    minors = [
        (v.r * w.c - v.c * w.r, (0, 1)),
        (v.r * w.s - v.s * w.r, (0, 2)),
        (v.c * w.s - v.s * w.c, (1, 2)),
    ]
    det, (i, k) = max(minors, key=lambda m: abs(m[0]))
    if det == 0:
        raise DependentBasisError(f"{v} and {w} are proportional")
    vt, wt, tt = v.as_list(), w.as_list(), target.as_list()
    # Cramer on the two rows with a nonzero minor, then check the third.
    x = Fraction(tt[i] * wt[k] - tt[k] * wt[i], det)
    y = Fraction(vt[i] * tt[k] - vt[k] * tt[i], det)
    if x.denominator != 1 or y.denominator != 1:
        return None
    x, y = int(x), int(y)
    if v * x + w * y != target:
        return None
    return x, y


def is_saturated(v: MukaiVector, w: MukaiVector) -> bool:
    """Whether ``Zv + Zw`` is saturated in ``Z^3`` (its 2x2 minors are coprime)."""
    g = gcd(gcd(v.r * w.c - v.c * w.r, v.r * w.s - v.s * w.r), v.c * w.s - v.s * w.c)
    if g == 0:
        raise DependentBasisError(f"{v} and {w} are proportional")
    return g == 1
