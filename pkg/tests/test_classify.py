from fractions import Fraction
from math import ceil, gcd

import pytest

from hilbwalls.classify import (
    DegenerateRadiusError,
    Wall,
    WallKind,
    aligned,
    central_charge,
    chamber_report,
    classify_wall,
    group_into_walls,
    minimal_clear_k,
    semicircle,
    svg_plot,
    y0_squared,
)
from hilbwalls.mukai import MukaiVector as M, pairing, square
from hilbwalls.surface import SurfaceParams as P, sufficient_k_bound
from hilbwalls.walls import Branch, WallCandidate, enumerate_candidates

F = Fraction
SMALL_GRID = [P(1, h, k) for h in (1, 2, 3) for k in range(1, 14) if gcd(h, k) == 1]


def test_semicircle_examples():
    assert semicircle(F(2, 3), P(1, 1, 1)) == (F(-3, 2), F(5, 4))
    assert semicircle(F(18, 13), P(1, 2, 3)) == (F(-13, 18), F(25, 324))
    with pytest.raises(DegenerateRadiusError):
        semicircle(F(3, 2), P(1, 2, 3))


def test_y0_squared_examples():
    assert y0_squared(F(2, 3), P(1, 1, 1)) == 1
    assert y0_squared(F(4, 7), P(1, 3, 2)) == F(1, 4)
    assert y0_squared(F(18, 13), P(1, 2, 3)) == 0


def test_semicircle_meets_x_minus_one_at_y0():
    for p in SMALL_GRID:
        for c in enumerate_candidates(p):
            center, rsq = semicircle(c.gamma, p)
            assert rsq > 0 and center == -1 / c.gamma
            assert (-1 - center) ** 2 + y0_squared(c.gamma, p) == rsq


def test_central_charge_examples():
    p = P(1, 2, 3)
    z = central_charge(M(1, 0, -4), -1, 1, p)
    assert (z.re, z.im_over_y) == (4, 18)
    z = central_charge(M(0, 0, 1), F(-7, 3), F(5, 2), p)
    assert (z.re, z.im_over_y) == (-1, 0)
    z = central_charge(M(2, -1, 5), -1, 1, p)
    assert (z.re, z.im_over_y) == (13, 18)


def test_central_charge_matches_x_minus_one_formulas():
    # Re = -2 d b - c + a d (y^2 - 1), Im/y = 2 d (a + b) at x = -1
    for p in SMALL_GRID[:10]:
        d = p.d
        for a in range(-2, 3):
            for b in range(-2, 3):
                for c in (-5, 0, 7):
                    for ysq in (F(1, 4), F(2), F(9, 7)):
                        z = central_charge(M(a, b, c), -1, ysq, p)
                        assert z.re == -2 * d * b - c + a * d * (ysq - 1)
                        assert z.im_over_y == 2 * d * (a + b)


def test_aligned_examples():
    p = P(1, 2, 3)
    assert aligned(M(2, -1, 5), M(2, -1, 5), -1, 2, p)
    assert not aligned(M(1, 0, -4), M(0, 0, 1), -1, 2, p)
    p = P(1, 3, 2)
    w = M(1, -1, 5)
    assert aligned(p.v, w, -1, y0_squared(F(4, 7), p), p)


def test_alignment_along_whole_semicircle():
    # on the wall, Z(v) and Z(w) stay aligned; the top point has y^2 = radius^2
    for p in SMALL_GRID:
        for wall in chamber_report(p).walls:
            for c in wall.representatives:
                assert aligned(p.v, c.w, wall.center, wall.radius_sq, p)
                if wall.y0_sq > 0:
                    assert aligned(p.v, c.w, -1, wall.y0_sq, p)
                # off the wall they are not aligned
                assert not aligned(p.v, c.w, wall.center, wall.radius_sq * 2, p)


def test_group_into_walls_k2_h3():
    p = P(1, 3, 2)
    walls = group_into_walls(enumerate_candidates(p), p)
    assert [w.gamma for w in walls] == [F(4, 7), F(8, 13), F(16, 25)]
    assert [set(w.vectors) for w in walls] == [
        {M(1, -1, 5)}, {M(1, -1, 4), M(-1, 2, -17)}, {M(-1, 2, -16)}]
    # (-1,2,-17) = v - 2 (1,-1,4): one lattice, based at (1,-1,4)
    shared = walls[1]
    assert len(shared.lattice_groups) == 1
    assert shared.representatives[shared.lattice_groups[0][0]].w == M(1, -1, 4)
    assert all(w.saturated for w in walls)


def test_group_into_walls_trivial():
    p = P(1, 2, 3)
    assert [w.gamma for w in group_into_walls(enumerate_candidates(p), p)] == [F(18, 13)]
    assert group_into_walls([], p) == []


def test_classify_examples():
    p = P(1, 2, 3)
    (wall,) = group_into_walls(enumerate_candidates(p), p)
    kind, cert = classify_wall(wall, p)
    assert kind is WallKind.FLOPPING

    p = P(1, 3, 2)
    cand = next(c for c in enumerate_candidates(p) if c.w == M(1, -1, 4))
    wall = group_into_walls([cand], p)[0]
    kind, cert = classify_wall(wall, p)
    assert kind is WallKind.FLOPPING
    assert cert.vector == M(-1, 2, -17) and cert.pairing_with_v == 8


def test_classify_divisorial_hilbert_chow():
    # a wall lattice containing the point class (0,0,1), (u, v) = -1: Hilbert-Chow
    p = P(1, 2, 3)
    cand = WallCandidate(M(0, 0, 1), Branch.POSITIVE_PAIR, -1, 0, 0, F(1))
    wall = Wall(F(1), [cand], F(-1), F(0), F(0), lattice_groups=[[0]])
    kind, cert = classify_wall(wall, p)
    assert kind is WallKind.DIVISORIAL
    assert cert.square == 0 and abs(cert.pairing_with_v) == 1


def test_classify_divisorial_brill_noether():
    # spherical class orthogonal to v
    p = P(1, 1, 1)
    s = M(1, 0, 1)
    assert square(s, p.d) == -2 and pairing(s, p.v, p.d) == 0
    cand = WallCandidate(s, Branch.SPHERICAL, 0, -2, 1, F(1, 2))
    wall = Wall(F(1, 2), [cand], F(-2), F(3), F(0), lattice_groups=[[0]])
    assert classify_wall(wall, p)[0] is WallKind.DIVISORIAL


@pytest.mark.parametrize("triple, chambers", [
    ((1, 1, 1), 2), ((1, 2, 3), 2), ((1, 3, 4), 3), ((1, 2, 7), 1), ((1, 2, 1), 5), ((1, 3, 1), 11),
])
def test_chamber_report_examples(triple, chambers):
    rep = chamber_report(P(*triple))
    assert rep.chamber_count == chambers
    assert rep.lagrangian_unique is (chambers == 1)


def test_report_counts_disagree_for_k2_h3():
    rep = chamber_report(P(1, 3, 2))
    assert (rep.chamber_count, rep.chamber_count_by_vectors) == (4, 5)


def test_no_faults_and_valid_certificates_on_grid():
    for p in SMALL_GRID + [P(2, 2, 1), P(2, 3, 2), P(3, 3, 4)]:
        rep = chamber_report(p)
        assert rep.faults == [], p
        for wall in rep.walls:
            assert wall.kind is WallKind.FLOPPING
            cert = wall.certificate
            assert square(cert.vector, p.d) == cert.square
            assert pairing(cert.vector, p.v, p.d) == cert.pairing_with_v
            if cert.square == -2:
                assert 0 < abs(cert.pairing_with_v) <= p.N


def test_one_chamber_beyond_bound():
    for D in range(1, 4):
        for h in range(1, 4):
            start = ceil(sufficient_k_bound(D, h))
            ks = [k for k in range(start, start + 12) if gcd(h, k) == 1][:6]
            for k in ks:
                assert chamber_report(P(D, h, k)).chamber_count == 1


@pytest.mark.parametrize("D, h, k0, walled", [
    (1, 1, 2, {1}), (1, 2, 5, {1, 3}), (1, 3, 8, {1, 2, 4, 5, 7}),
])
def test_minimal_clear_k(D, h, k0, walled):
    res = minimal_clear_k(D, h)
    assert res.k0 == k0
    assert res.d0 == D * k0 * k0
    assert {k for k, n in res.per_k if n} == walled
    assert max(k for k, _ in res.per_k) == ceil(sufficient_k_bound(D, h))


def test_svg_plot():
    p = P(1, 2, 3)
    walls = chamber_report(p).walls
    doc = svg_plot(p, walls)
    assert doc.count("<path") == 1 and ">18/13<" in doc
    assert doc == svg_plot(p, walls)
    p = P(1, 2, 5)
    empty = svg_plot(p, chamber_report(p).walls)
    assert "<path" not in empty and 'class="threshold"' in empty and 'class="axis"' in empty
    p = P(1, 3, 2)
    assert svg_plot(p, chamber_report(p).walls).count("<path") == 3
