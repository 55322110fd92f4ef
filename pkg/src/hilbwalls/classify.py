"""Walls, chambers and the (x, y) stability slice.

Candidates with the same ``Gamma`` define the same ray ``Htilde - Gamma B`` and
are grouped into one :class:`Wall`.  Each wall is then classified with the
numerical dictionary for rank-2 hyperbolic lattices ``H = Zv + Zw``:

* divisorial: spherical ``s`` with ``(s, v) = 0``, or isotropic ``u`` with
  ``(u, v)`` in ``{1, 2}`` up to sign;
* flopping: spherical ``s`` with ``0 < |(s, v)| <= v^2/2``, or ``v = w + (v - w)``
  with both summands positive;
* fake otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd
from typing import Optional

from .mukai import (
    MukaiVector,
    is_saturated,
    membership_in_lattice,
    pairing,
    solve_in_rank2,
    square,
)
from .surface import SurfaceParams, sufficient_k_bound
from .walls import Branch, WallCandidate, enumerate_candidates


class DegenerateRadiusError(ValueError):
    pass


class WallKind(enum.Enum):
    FLOPPING = "flopping"
    DIVISORIAL = "divisorial"
    FAKE = "fake"


@dataclass(frozen=True)
class CentralChargeValue:
    """``Z = re + i * y * im_over_y``; keeping ``Im/y`` avoids irrational ``y``."""

    re: Fraction
    im_over_y: Fraction


@dataclass(frozen=True)
class Certificate:
    vector: MukaiVector
    square: int
    pairing_with_v: int
    reason: str


@dataclass
class Wall:
    gamma: Fraction
    representatives: list[WallCandidate]
    center: Fraction
    radius_sq: Fraction
    y0_sq: Fraction
    kind: Optional[WallKind] = None
    certificate: Optional[Certificate] = None
    # indices into ``representatives``; one group per rank-2 lattice Zv + Zw
    lattice_groups: list[list[int]] = field(default_factory=list)
    # whether every group's lattice Zv + Zw is saturated in the Mukai lattice
    saturated: bool = True

    @property
    def vectors(self) -> list[MukaiVector]:
        return [c.w for c in self.representatives]


@dataclass
class ChamberReport:
    params: SurfaceParams
    walls: list[Wall]
    bound_k: Fraction
    positive_j_lower: str = "verbatim"
    faults: list[str] = field(default_factory=list)

    @property
    def flopping_walls(self) -> list[Wall]:
        return [w for w in self.walls if w.kind is WallKind.FLOPPING]

    @property
    def chamber_count(self) -> int:
        return 1 + len(self.flopping_walls)

    @property
    def chamber_count_by_vectors(self) -> int:
        """Alternative count treating every candidate vector as its own wall."""
        return 1 + sum(len(w.representatives) for w in self.flopping_walls)

    @property
    def lagrangian_unique(self) -> bool:
        return self.chamber_count == 1

    @property
    def candidate_count(self) -> int:
        return sum(len(w.representatives) for w in self.walls)


# --- (x, y)-plane geometry --------------------------------------------------


def semicircle(g: Fraction, params: SurfaceParams) -> tuple[Fraction, Fraction]:
    """Center and squared radius of ``(x + 1/G)^2 + y^2 = 1/G^2 - h^2/k^2``."""
    g = Fraction(g)
    if g <= 0 or g >= Fraction(params.k, params.h):
        raise DegenerateRadiusError(f"Gamma={g} is outside (0, k/h)")
    return -1 / g, 1 / (g * g) - Fraction(params.h ** 2, params.k ** 2)


def y0_squared(g: Fraction, params: SurfaceParams) -> Fraction:
    """Height squared where the wall meets ``x = -1``; negative means it misses."""
    h, k = params.h, params.k
    return 2 / Fraction(g) - Fraction(h * h + k * k, k * k)


def central_charge(
    w: MukaiVector, x: Fraction, y_sq: Fraction, params: SurfaceParams
) -> CentralChargeValue:
    if y_sq <= 0:
        raise ValueError("y_sq must be positive")
    d = params.d
    x, y_sq = Fraction(x), Fraction(y_sq)
    re = 2 * d * w.c * x - w.r * d * (x * x - y_sq) - w.s
    im_over_y = 2 * d * w.c - 2 * d * w.r * x
    return CentralChargeValue(re, im_over_y)


def aligned(
    w1: MukaiVector, w2: MukaiVector, x: Fraction, y_sq: Fraction, params: SurfaceParams
) -> bool:
    z1 = central_charge(w1, x, y_sq, params)
    z2 = central_charge(w2, x, y_sq, params)
    return z1.re * z2.im_over_y - z2.re * z1.im_over_y == 0


def wall_defining_vector(g: Fraction, params: SurfaceParams) -> MukaiVector:
    """Integer multiple of ``(1, -1/Gamma, N)``; every class on the wall is orthogonal to it."""
    g = Fraction(g)
    return MukaiVector(g.numerator, -g.denominator, g.numerator * params.N)


# --- grouping and classification --------------------------------------------


def _lattice_groups(reps: list[WallCandidate], v: MukaiVector) -> list[list[int]]:
    # grp[0] is the representative whose lattice Zv + Zw contains the rest
    groups: list[list[int]] = []
    for idx, cand in enumerate(reps):
        for grp in groups:
            base = reps[grp[0]].w
            if membership_in_lattice(cand.w, v, base) is not None:
                grp.append(idx)
                break
            if all(membership_in_lattice(reps[m].w, v, cand.w) is not None for m in grp):
                grp.insert(0, idx)
                break
        else:
            groups.append([idx])
    return groups


def group_into_walls(candidates: list[WallCandidate], params: SurfaceParams) -> list[Wall]:
    by_gamma: dict[Fraction, list[WallCandidate]] = {}
    for cand in candidates:
        by_gamma.setdefault(cand.gamma, []).append(cand)
    v = params.v
    walls = []
    for g in sorted(by_gamma):
        reps = sorted(by_gamma[g], key=lambda c: c.w)
        center, radius_sq = semicircle(g, params)
        groups = _lattice_groups(reps, v)
        walls.append(Wall(
            gamma=g,
            representatives=reps,
            center=center,
            radius_sq=radius_sq,
            y0_sq=y0_squared(g, params),
            lattice_groups=groups,
            saturated=all(is_saturated(v, reps[grp[0]].w) for grp in groups),
        ))
    return walls


def _certificate(s: MukaiVector, params: SurfaceParams, reason: str) -> Certificate:
    return Certificate(s, square(s, params.d), pairing(s, params.v, params.d), reason)


def _signed_range(lo: int, hi: int):
    """``p`` with ``lo <= |p| <= hi`` ordered by ``|p|``, positive first."""
    for a in range(lo, hi + 1):
        yield a
        if a:
            yield -a


def classify_wall(wall: Wall, params: SurfaceParams) -> tuple[WallKind, Optional[Certificate]]:
    if not wall.representatives:
        raise ValueError("wall has no representatives")
    d, v, N = params.d, params.v, params.N
    lattices = [wall.representatives[grp[0]].w for grp in wall.lattice_groups] or [
        wall.representatives[0].w
    ]

    for w in lattices:
        for s in solve_in_rank2(v, w, -2, 0, d):
            return WallKind.DIVISORIAL, _certificate(s, params, "spherical, (s,v)=0")
        for p in _signed_range(1, 2):
            for u in solve_in_rank2(v, w, 0, p, d):
                return WallKind.DIVISORIAL, _certificate(u, params, f"isotropic, (u,v)={p}")

    for w in lattices:
        for p in _signed_range(1, N):
            for s in solve_in_rank2(v, w, -2, p, d):
                return WallKind.FLOPPING, _certificate(s, params, f"spherical, (s,v)={p}")

    for cand in wall.representatives:
        if cand.branch is Branch.POSITIVE_PAIR:
            return WallKind.FLOPPING, _certificate(cand.w, params, "positive decomposition v = w + (v-w)")

    return WallKind.FAKE, None


def classify_walls(walls: list[Wall], params: SurfaceParams) -> list[Wall]:
    for wall in walls:
        wall.kind, wall.certificate = classify_wall(wall, params)
    return walls


def chamber_report(params: SurfaceParams, positive_j_lower: str = "verbatim") -> ChamberReport:
    walls = classify_walls(
        group_into_walls(enumerate_candidates(params, positive_j_lower), params), params
    )
    report = ChamberReport(params, walls, sufficient_k_bound(params.Delta, params.h),
                           positive_j_lower)
    for wall in walls:
        if wall.kind is WallKind.DIVISORIAL:
            report.faults.append(f"interior wall Gamma={wall.gamma} classified divisorial")
        elif wall.kind is WallKind.FAKE:
            report.faults.append(f"wall Gamma={wall.gamma} classified fake")
    return report


@dataclass(frozen=True)
class MinimalK:
    Delta: int
    h: int
    k0: int
    per_k: list[tuple[int, int]]

    @property
    def d0(self) -> int:
        return self.Delta * self.k0 ** 2

    @property
    def degree0(self) -> int:
        return 2 * self.d0


def minimal_clear_k(Delta: int, h: int, positive_j_lower: str = "verbatim") -> MinimalK:
    """Scan coprime ``k`` up to the guaranteed bound; ``k0`` is the first coprime ``k`` past the last wall."""
    horizon = ceil(sufficient_k_bound(Delta, h))
    per_k = []
    last_wall = 0
    for k in range(1, horizon + 1):
        if gcd(h, k) != 1:
            continue
        report = chamber_report(SurfaceParams(Delta, h, k), positive_j_lower)
        n = len(report.flopping_walls)
        per_k.append((k, n))
        if n:
            last_wall = k
    k0 = last_wall + 1
    while gcd(h, k0) != 1:
        k0 += 1
    return MinimalK(Delta, h, k0, per_k)


# --- SVG ---------------------------------------------------------------------

_WIDTH, _HEIGHT = 800, 400
_X_MIN, _X_MAX, _Y_MAX = -4, 1, Fraction(5, 2)


def _px(x) -> str:
    return f"{float((Fraction(x) - _X_MIN) * _WIDTH / (_X_MAX - _X_MIN)):.6f}"


def _py(y) -> str:
    return f"{float(_HEIGHT - Fraction(y) * _HEIGHT / _Y_MAX):.6f}"


def svg_plot(params: SurfaceParams, walls: list[Wall]) -> str:
    """Semicircles of the walls in the window ``[-4, 1] x [0, 2.5]``."""
    scale = Fraction(_WIDTH, _X_MAX - _X_MIN)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<title>Walls for Delta={params.Delta}, h={params.h}, k={params.k}</title>',
        '<defs><clipPath id="window"><rect x="0" y="0" '
        f'width="{_WIDTH}" height="{_HEIGHT}"/></clipPath></defs>',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line class="axis" x1="{_px(_X_MIN)}" y1="{_py(0)}" x2="{_px(_X_MAX)}" y2="{_py(0)}" '
        'stroke="black"/>',
        f'<line class="axis" x1="{_px(0)}" y1="{_py(0)}" x2="{_px(0)}" y2="{_py(_Y_MAX)}" '
        'stroke="black"/>',
        f'<line class="x-minus-one" x1="{_px(-1)}" y1="{_py(0)}" x2="{_px(-1)}" y2="{_py(_Y_MAX)}" '
        'stroke="gray" stroke-dasharray="4 4"/>',
        f'<line class="threshold" x1="{_px(_X_MIN)}" y1="{_py(Fraction(1, params.k))}" '
        f'x2="{_px(_X_MAX)}" y2="{_py(Fraction(1, params.k))}" stroke="red" '
        'stroke-dasharray="2 6"/>',
        f'<text x="{_px(_X_MIN)}" y="{_py(Fraction(1, params.k))}" dy="-4" font-size="12" '
        f'fill="red">y = 1/{params.k}</text>',
    ]
    lines.append('<g clip-path="url(#window)">')
    for wall in walls:
        r = math.sqrt(wall.radius_sq)
        left, right = float(wall.center) - r, float(wall.center) + r
        rpx = f"{r * float(scale):.6f}"
        lines.append(
            f'<path d="M {_px(Fraction(left))} {_py(0)} A {rpx} {rpx} 0 0 1 '
            f'{_px(Fraction(right))} {_py(0)}" fill="none" stroke="blue"/>'
        )
        top = min(Fraction(r), _Y_MAX)
        lines.append(
            f'<text x="{_px(wall.center)}" y="{_py(Fraction(top))}" dy="-4" font-size="12" '
            f'text-anchor="middle">{wall.gamma.numerator}/{wall.gamma.denominator}</text>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
