"""Enumeration of candidate flopping walls for ``v = (1, 0, -Delta h^2)``.

A wall in the movable cone is the ray ``Htilde - Gamma B`` with
``0 < Gamma < k/h``.  It is produced by a primitive class ``w = (a, b, c)``
destabilizing ``v``.  With ``j = (w, v) = N a - c`` one has

    Gamma = -2 d b / (2 N a - j) = -2 d b / (N a + c).

The search runs over ``a`` in a finite box, ``w^2`` in a finite list of even
values and ``j`` in a finite interval; ``c`` follows from ``j`` and ``b`` is
forced up to sign by ``d b^2 = w^2/2 + a c``.

Sign conventions.  ``w`` and ``-w`` define the same wall.  For ``|a| <= 1``
the representative is fixed by ``j >= 0`` (and ``a = 1`` when ``j = 0``).
For ``|a| >= 2`` the representative is the one satisfying the two tilt
inequalities of the heart at ``x = -1/Gamma``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt
from typing import Callable, Optional

from .mukai import (
    MukaiVector,
    gram_determinant,
    is_positive_class,
    is_primitive,
    pairing,
    square,
)
from .surface import SurfaceParams


class VerticalWallError(ValueError):
    """``N a + c = 0``: the class does not cut out a ray of the movable cone."""


class Branch(enum.Enum):
    SPHERICAL = "spherical"
    POSITIVE_PAIR = "positive_pair"


# Lower end of the j-interval for the positive-pair branch, as a function of w^2.
POSITIVE_J_LOWER: dict[str, Callable[[int], int]] = {
    "verbatim": lambda wsq: 2 * wsq + 1,
    "half": lambda wsq: wsq + 1,
}


@dataclass(frozen=True)
class WallCandidate:
    w: MukaiVector
    branch: Branch
    j: int
    wsq: int
    i: int
    gamma: Fraction

    def sort_key(self) -> tuple:
        return (self.gamma, self.w)


@dataclass(frozen=True)
class SearchBox:
    a_max: int
    wsq_values: tuple[int, ...]
    j_bounds: dict[int, tuple[int, int]] = field(compare=False)
    positive_j_lower: str = "verbatim"


def search_box(params: SurfaceParams, positive_j_lower: str = "verbatim") -> SearchBox:
    if positive_j_lower not in POSITIVE_J_LOWER:
        raise ValueError(f"unknown positive_j_lower policy {positive_j_lower!r}")
    D, h, N = params.Delta, params.h, params.N
    a_max = max(1, D * (h - 1) ** 2 + 1, N // 4 + 1)
    # 0 <= w^2 < N/2 for positive pairs, plus the spherical value -2.
    wsq_values = (-2,) + tuple(x for x in range(0, N, 2) if 2 * x < N)
    lower = POSITIVE_J_LOWER[positive_j_lower]
    j_bounds = {-2: (-N, N)}
    for wsq in wsq_values[1:]:
        j_bounds[wsq] = (lower(wsq), N)
    return SearchBox(a_max, wsq_values, j_bounds, positive_j_lower)


def gamma(w: MukaiVector, params: SurfaceParams) -> Fraction:
    den = params.N * w.r + w.s
    if den == 0:
        raise VerticalWallError(f"{w} gives a vertical wall")
    return Fraction(-2 * params.d * w.c, den)


def gamma_window_filter(g: Fraction, params: SurfaceParams) -> bool:
    """``2k^2 / (h^2 + k^2 + 1) <= Gamma < k/h``."""
    h, k = params.h, params.k
    return Fraction(2 * k * k, h * h + k * k + 1) <= g < Fraction(k, h)


def tilt_admissible(w: MukaiVector, g: Fraction) -> bool:
    """Both ``w`` and ``v - w`` lie in the heart at ``x = -1/Gamma``."""
    a, b = w.r, w.c
    return b * g + a >= 0 and -b * g + (1 - a) >= 0


def _representative_ok(w: MukaiVector, j: int, g: Fraction) -> bool:
    if abs(w.r) <= 1:
        return j > 0 or (j == 0 and w.r == 1)
    return tilt_admissible(w, g)


def _admit(
    w: MukaiVector, wsq: int, j: int, params: SurfaceParams
) -> Optional[WallCandidate]:
    a, b, c = w
    if b == 0 or a * b > 0 or params.N * a + c == 0:
        return None
    g = gamma(w, params)
    if g <= 0 or not is_primitive(w):
        return None
    if not gamma_window_filter(g, params) or not _representative_ok(w, j, g):
        return None
    v = params.v
    if gram_determinant(v, w, params.d) >= 0:
        return None
    if wsq == -2:
        branch = Branch.SPHERICAL
    else:
        if not (is_positive_class(w, params.d, relative_to=v)
                and is_positive_class(v - w, params.d, relative_to=v)):
            return None
        branch = Branch.POSITIVE_PAIR
    return WallCandidate(w, branch, j, wsq, params.h * a + params.k * b, g)


def enumerate_candidates(
    params: SurfaceParams, positive_j_lower: str = "verbatim"
) -> list[WallCandidate]:
    """All primitive classes passing the numerical wall filters, sorted by (Gamma, w)."""
    box = search_box(params, positive_j_lower)
    d, N = params.d, params.N
    found: dict[MukaiVector, WallCandidate] = {}
    for a in range(-box.a_max, box.a_max + 1):
        for wsq in box.wsq_values:
            lo, hi = box.j_bounds[wsq]
            for j in range(lo, hi + 1):
                c = N * a - j
                rhs = wsq // 2 + a * c
                if rhs <= 0 or rhs % d:
                    continue
                b0 = isqrt(rhs // d)
                if b0 * b0 != rhs // d:
                    continue
                for b in (b0, -b0):
                    cand = _admit(MukaiVector(a, b, c), wsq, j, params)
                    if cand is not None:
                        found[cand.w] = cand
    return sorted(found.values(), key=WallCandidate.sort_key)


def oracle_b_bound(params: SurfaceParams) -> int:
    D, h, k = params.Delta, params.h, params.k
    top = D * h * max(Fraction((h - 1) ** 2), Fraction(h * h, 4)) + 2 * h
    return ceil(top / k)


def brute_force_oracle(
    params: SurfaceParams, scale: int = 2, positive_j_lower: str = "verbatim"
) -> list[WallCandidate]:
    """Exhaustive search over an ``(a, b, c)`` box with the filters written out directly.

    Independent of :func:`enumerate_candidates`: no ``(a, w^2, j)``
    parametrization, no square-root step, and ``Gamma`` is recovered from the
    orthogonality ``(w, (1, -1/Gamma, N)) = 0`` rather than the closed form.
    """
    if scale < 1:
        raise ValueError("scale must be positive")
    d, N, h, k = params.d, params.N, params.h, params.k
    v = params.v
    box = search_box(params, positive_j_lower)
    a_lim = scale * box.a_max
    b_lim = scale * oracle_b_bound(params)
    lower = POSITIVE_J_LOWER[positive_j_lower]
    lo_gamma, hi_gamma = Fraction(2 * k * k, h * h + k * k + 1), Fraction(k, h)
    out = []
    for a in range(-a_lim, a_lim + 1):
        for b in range(-b_lim, b_lim + 1):
            if b == 0 or a * b > 0:
                continue
            for c in range(N * a - N, N * a + N + 1):
                w = MukaiVector(a, b, c)
                j = pairing(w, v, d)
                wsq = square(w, d)
                if wsq == -2:
                    branch = Branch.SPHERICAL
                elif wsq >= 0 and 2 * wsq < N and lower(wsq) <= j <= N:
                    branch = Branch.POSITIVE_PAIR
                else:
                    continue
                along_b = pairing(w, MukaiVector(0, 1, 0), d)
                along_rest = pairing(w, MukaiVector(1, 0, N), d)
                if along_rest == 0:
                    continue
                g = Fraction(along_b, along_rest)
                if not lo_gamma <= g < hi_gamma or g <= 0:
                    continue
                if not is_primitive(w):
                    continue
                if abs(a) <= 1:
                    if j < 0 or (j == 0 and a != 1):
                        continue
                elif not (g * b + a >= 0 and (1 - a) - g * b >= 0):
                    continue
                if square(v, d) * wsq - j * j >= 0:
                    continue
                if branch is Branch.POSITIVE_PAIR:
                    rest = v - w
                    if not (square(rest, d) >= 0 and pairing(rest, v, d) > 0 and j > 0):
                        continue
                out.append(WallCandidate(w, branch, j, wsq, h * a + k * b, g))
    return sorted(out, key=WallCandidate.sort_key)
