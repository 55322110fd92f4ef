"""Fourier-Mukai partner data for the Lagrangian fibration on the Hilbert scheme.

``u = (k, -h, Delta k h^2)`` is primitive and isotropic, so ``S' = M_H(u)``
is a K3 surface.  Its Neron-Severi group is generated by the image of
``(B, -A, Delta(-h + A k h))`` for any Bezout pair ``B h - A k = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .mukai import MukaiVector, is_primitive, pairing, square
from .surface import GcdViolationError, InternalInconsistencyError, SurfaceParams

BEZOUT_RULE = "0 <= A < h"
S_UNDETERMINED = "undetermined up to shift/twist"


@dataclass(frozen=True)
class FmPartnerReport:
    u: MukaiVector
    partner_degree: int
    bezout: tuple[int, int]
    ns_generator_vector: MukaiVector
    twist_order: int
    bm_class_curve_coeff: int
    bm_class_s: str = S_UNDETERMINED
    bezout_rule: str = BEZOUT_RULE


def fm_vector(params: SurfaceParams) -> MukaiVector:
    D, h, k = params.triple
    return MukaiVector(k, -h, D * k * h * h)


def bezout(h: int, k: int) -> tuple[int, int]:
    """``(A, B)`` with ``B h - A k = 1`` and ``0 <= A < h``."""
    if gcd(h, k) != 1:
        raise GcdViolationError(f"gcd({h}, {k}) != 1")
    A = (-pow(k, -1, h)) % h if h > 1 else 0
    B, rem = divmod(1 + A * k, h)
    assert rem == 0
    return A, B


def ns_generator(params: SurfaceParams) -> MukaiVector:
    D, h, k = params.triple
    A, B = bezout(h, k)
    gen = MukaiVector(B, -A, D * (-h + A * k * h))
    u, d = fm_vector(params), params.d
    if pairing(gen, u, d) != 0:
        raise InternalInconsistencyError(f"{gen} is not orthogonal to u={u}")
    if square(gen, d) != 2 * D:
        raise InternalInconsistencyError(f"{gen} has square {square(gen, d)}, expected {2 * D}")
    # The (r, c) minor against u is B(-h) - (-A)k = -1, so no N > 1 divides
    # gen + L u for any L; in particular gen is not a multiple of u.
    if gen.r * u.c - gen.c * u.r != -1:
        raise InternalInconsistencyError(f"{gen} is not primitive modulo u={u}")
    return gen


def twist_order(params: SurfaceParams) -> int:
    D, h, k = params.triple
    order = gcd(gcd(k, 2 * D * k * k * h), D * k * h * h)
    if order != k:
        raise InternalInconsistencyError(f"twist order {order} != k={k}")
    return order


def bm_class(params: SurfaceParams) -> tuple[int, str]:
    """Curve coefficient ``h`` of ``C = h H'`` in ``(0, C, s)``; ``s`` stays symbolic."""
    curve_sq = params.h ** 2 * 2 * params.Delta
    if curve_sq != square(params.v, params.d):
        raise InternalInconsistencyError("C^2 != v^2")
    return params.h, S_UNDETERMINED


def fm_partner_report(params: SurfaceParams) -> FmPartnerReport:
    u = fm_vector(params)
    if square(u, params.d) != 0 or not is_primitive(u):
        raise InternalInconsistencyError(f"u={u} is not primitive isotropic")
    if pairing(u, params.v, params.d) != 0:
        raise InternalInconsistencyError("(u, v) != 0")
    coeff, s_marker = bm_class(params)
    return FmPartnerReport(
        u=u,
        partner_degree=2 * params.Delta,
        bezout=bezout(params.h, params.k),
        ns_generator_vector=ns_generator(params),
        twist_order=twist_order(params),
        bm_class_curve_coeff=coeff,
        bm_class_s=s_marker,
    )
