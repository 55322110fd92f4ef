"""Surface data: the (Delta, h, k) normalization, movable cone, and Pell check.

The K3 surface has ``H^2 = 2d`` with ``d = Delta k^2`` and we look at the
Hilbert scheme of ``N + 1`` points with ``N = Delta h^2``, ``gcd(h, k) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

from .mukai import MukaiVector


class GcdViolationError(ValueError):
    pass


class InternalInconsistencyError(RuntimeError):
    """A mathematically impossible state was reached (an implementation bug)."""


@dataclass(frozen=True)
class SurfaceParams:
    Delta: int
    h: int
    k: int

    def __post_init__(self) -> None:
        if min(self.Delta, self.h, self.k) < 1:
            raise ValueError(f"Delta, h, k must be positive, got {self.triple}")
        if gcd(self.h, self.k) != 1:
            raise GcdViolationError(f"gcd(h, k) = gcd({self.h}, {self.k}) != 1")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.Delta, self.h, self.k)

    @property
    def d(self) -> int:
        return self.Delta * self.k * self.k

    @property
    def N(self) -> int:
        return self.Delta * self.h * self.h

    @property
    def v(self) -> MukaiVector:
        """Mukai vector ``(1, 0, -N)`` of an ideal sheaf of ``N + 1`` points."""
        return MukaiVector(1, 0, -self.N)

    @property
    def degree(self) -> int:
        return 2 * self.d

    @property
    def points(self) -> int:
        return self.N + 1


@dataclass(frozen=True)
class SyzFailure:
    """``d * N`` is not a perfect square, so no Lagrangian fibration exists."""

    d: int
    N: int
    product: int
    squarefree_part: int


@dataclass(frozen=True)
class NsRay:
    """Primitive ray ``coeff_Htilde * Htilde + coeff_B * B`` in NS(Hilb)."""

    coeff_Htilde: int
    coeff_B: int

    def __post_init__(self) -> None:
        if self.coeff_Htilde == 0 and self.coeff_B == 0:
            raise ValueError("the zero divisor is not a ray")

    @classmethod
    def normalized(cls, a: int, b: int) -> NsRay:
        g = gcd(a, b)
        if g == 0:
            raise ValueError("the zero divisor is not a ray")
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(a, b)

    def as_tuple(self) -> tuple[int, int]:
        return (self.coeff_Htilde, self.coeff_B)


def squarefree_part(n: int) -> int:
    """Square-free kernel of a positive integer, by trial division."""
    if n < 1:
        raise ValueError("squarefree_part expects a positive integer")
    out, p = 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return out * n


def _exact_sqrt(n: int) -> Optional[int]:
    r = isqrt(n)
    return r if r * r == n else None


def normalize(d: int, N: int) -> Union[SurfaceParams, SyzFailure]:
    """Write ``d / N = k^2 / h^2`` in lowest terms and return ``(d / k^2, h, k)``.

    Returns a :class:`SyzFailure` (not an exception) when ``d N`` is not a square.
    """
    if d < 1 or N < 1:
        raise ValueError("d and N must be positive")
    if _exact_sqrt(d * N) is None:
        return SyzFailure(d, N, d * N, squarefree_part(d * N))
    g = gcd(d, N)
    k, h = _exact_sqrt(d // g), _exact_sqrt(N // g)
    if k is None or h is None or d % (k * k) or N % (h * h):
        raise InternalInconsistencyError(f"d={d}, N={N}: square reduction is not exact")
    params = SurfaceParams(d // (k * k), h, k)
    if params.d != d or params.N != N:
        raise InternalInconsistencyError(f"d={d}, N={N} normalized to {params.triple}")
    return params


def from_triple(Delta: int, h: int, k: int) -> SurfaceParams:
    return SurfaceParams(Delta, h, k)


def movable_cone(params: SurfaceParams) -> tuple[NsRay, NsRay]:
    """Extremal rays ``Htilde`` and ``h Htilde - k B``."""
    return NsRay.normalized(1, 0), NsRay.normalized(params.h, -params.k)


def fibration_divisor(params: SurfaceParams) -> NsRay:
    return NsRay.normalized(params.h, -params.k)


def sufficient_k_bound(Delta: int, h: int) -> Fraction:
    """``Delta h (h-1)^2 + 3h/2``: every coprime ``k`` at or above it is wall-free."""
    return Delta * h * (h - 1) ** 2 + Fraction(3 * h, 2)


# --- Pell cross-check for Hilb^2 ------------------------------------------


def continued_fraction_sqrt(D: int) -> tuple[int, list[int]]:
    """``(a0, period)`` of the continued fraction of ``sqrt(D)``, ``D`` not a square."""
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise ValueError(f"{D} is a perfect square")
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = a * q - m
        q = (D - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return a0, period


def _convergents(a0: int, period: list[int], count: int):
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    yield p, q
    for n in range(count - 1):
        a = period[n % len(period)]
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def pell_fundamental(D: int) -> tuple[int, int]:
    """Least positive solution of ``x^2 - D y^2 = 1``."""
    a0, period = continued_fraction_sqrt(D)
    for x, y in _convergents(a0, period, 2 * len(period) + 1):
        if x * x - D * y * y == 1:
            return x, y
    raise InternalInconsistencyError(f"no Pell unit found for D={D}")


def solve_generalized_pell(D: int, n: int) -> Optional[tuple[int, int]]:
    """Least non-negative solution of ``X^2 - D Y^2 = n`` for ``n > 0`` square-free, ``D`` non-square.

    Square-free ``n`` forces every solution to be primitive.  When
    ``n^2 < D`` the primitive solutions are continued-fraction convergents of
    ``sqrt(D)``, and two periods see every residue class.  Otherwise we fall
    back to the Nagell bound ``Y <= y1 sqrt(n / (2 (x1 + 1)))`` and scan.
    """
    if n * n < D:
        a0, period = continued_fraction_sqrt(D)
        for x, y in _convergents(a0, period, 2 * len(period) + 1):
            if x * x - D * y * y == n:
                return x, y
        return None
    x1, y1 = pell_fundamental(D)
    y = 0
    while 2 * (x1 + 1) * y * y <= n * y1 * y1:
        x = _exact_sqrt(n + D * y * y)
        if x is not None:
            return x, y
        y += 1
    return None


def pell_check_hilb2(d: int) -> Optional[tuple[int, int]]:
    """Minimal non-negative solution of ``X^2 - 4d Y^2 = 5``, or ``None``.

    ``Hilb^2`` of a degree-``2d`` K3 has a one-chamber movable cone exactly
    when this has no solution.
    """
    if d < 1:
        raise ValueError("d must be positive")
    k = _exact_sqrt(d)
    if k is not None:
        # (X - 2kY)(X + 2kY) = 5 with both factors positive: 1 * 5.
        if 4 % (4 * k) == 0:
            Y = 4 // (4 * k)
            return 2 * k * Y + 1, Y
        return None
    return solve_generalized_pell(4 * d, 5)
