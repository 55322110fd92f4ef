import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbwalls.mukai import (
    DegenerateInputError,
    DependentBasisError,
    MukaiVector as M,
    NonHyperbolicError,
    gram_determinant,
    is_positive_class,
    is_saturated,
    membership_in_lattice,
    pairing,
    primitive_part,
    solve_in_rank2,
    square,
)

comp = st.integers(-100, 100)
vectors = st.builds(M, comp, comp, comp)
degrees = st.integers(1, 100)


@pytest.mark.parametrize("v, w, d, expected", [
    (M(1, 0, -9), M(1, 0, -9), 4, 18),
    (M(1, -1, 4), M(1, 0, -9), 4, 5),
    (M(0, 0, 1), M(1, 0, 0), 7, -1),
])
def test_pairing_examples(v, w, d, expected):
    assert pairing(v, w, d) == expected


@pytest.mark.parametrize("v, d, expected", [
    (M(-1, 1, -2), 1, -2),
    (M(3, -2, 12), 9, 0),
    (M(0, 0, 5), 17, 0),
])
def test_square_examples(v, d, expected):
    assert square(v, d) == expected


@pytest.mark.parametrize("v, expected", [
    (M(2, -2, 10), (M(1, -1, 5), 2)),
    (M(1, -1, 4), (M(1, -1, 4), 1)),
    (M(-3, 0, -9), (M(-1, 0, -3), 3)),
])
def test_primitive_part_examples(v, expected):
    assert primitive_part(v) == expected


def test_primitive_part_rejects_zero():
    with pytest.raises(DegenerateInputError):
        primitive_part(M(0, 0, 0))


@pytest.mark.parametrize("v, d, expected", [
    (M(1, 0, -9), 4, True),
    (M(-1, 1, -2), 1, False),
    (M(0, 1, -13), 4, True),
    (M(0, 0, -1), 3, False),
    (M(0, 0, 2), 3, True),
])
def test_is_positive_class_absolute(v, d, expected):
    assert is_positive_class(v, d) is expected


def test_is_positive_class_relative_to_v():
    v = M(1, 0, -9)
    # negative rank, yet in the positive cone of the wall lattice
    assert is_positive_class(M(-1, 2, -16), 4, relative_to=v)
    assert is_positive_class(v - M(-1, 2, -16), 4, relative_to=v)
    assert not is_positive_class(M(1, -2, 16), 4, relative_to=v)
    assert not is_positive_class(M(1, -1, 5), 4, relative_to=v)  # spherical


def test_gram_determinant_examples():
    v = M(1, 0, -9)
    assert gram_determinant(v, M(1, -1, 4), 4) == -25
    assert gram_determinant(v, v * 2, 4) == 0
    # square((1,-1,5)) = -2 and j = 4
    assert gram_determinant(v, M(1, -1, 5), 4) == -52


def test_solve_in_rank2_examples():
    v, w = M(1, 0, -9), M(1, -1, 4)
    assert solve_in_rank2(v, w, -2, 8, 4) == [M(-1, 2, -17)]
    assert solve_in_rank2(v, w, -2, -8, 4) == [M(1, -2, 17)]
    assert solve_in_rank2(v, w, -2, 3, 4) == []


def test_solve_in_rank2_rejects_non_hyperbolic():
    v = M(1, 0, -9)
    with pytest.raises(NonHyperbolicError):
        solve_in_rank2(v, v * 3, -2, 1, 4)


def test_membership_examples():
    v = M(1, 0, -9)
    assert membership_in_lattice(M(-1, 2, -17), v, M(1, -1, 4)) == (1, -2)
    assert membership_in_lattice(M(-1, 2, -16), v, M(1, -1, 5)) is None
    assert membership_in_lattice(v, v, M(1, -1, 4)) == (1, 0)
    with pytest.raises(DependentBasisError):
        membership_in_lattice(v, v, v * -2)


def test_saturation():
    v = M(1, 0, -9)
    assert is_saturated(v, M(1, -1, 4))
    # (-1,2,-17) = v - 2(1,-1,4): index-2 sublattice
    assert not is_saturated(v, M(-1, 2, -17))


@given(vectors, vectors, degrees)
def test_pairing_symmetric(v, w, d):
    assert pairing(v, w, d) == pairing(w, v, d)


@given(vectors, vectors, vectors, degrees)
def test_pairing_bilinear(v1, v2, w, d):
    assert pairing(v1 + v2, w, d) == pairing(v1, w, d) + pairing(v2, w, d)
    assert pairing(v1 * 3, w, d) == 3 * pairing(v1, w, d)


@given(vectors, degrees)
def test_square_even(v, d):
    assert square(v, d) % 2 == 0


@given(vectors.filter(lambda v: not v.is_zero()))
def test_primitive_part_idempotent(v):
    p, g = primitive_part(v)
    assert p * g == v
    assert primitive_part(p) == (p, 1)


small = st.integers(-6, 6)


@settings(max_examples=300)
@given(st.builds(M, small, small, small), st.builds(M, small, small, small),
       st.integers(1, 6), st.sampled_from([-2, 0, 2]), st.integers(-20, 20))
def test_solve_in_rank2_matches_brute_force(v, w, d, target, p):
    if v.is_zero() or w.is_zero() or gram_determinant(v, w, d) >= 0:
        return
    if square(v, d) == 0:
        return
    got = solve_in_rank2(v, w, target, p, d)
    for s in got:
        assert square(s, d) == target and pairing(s, v, d) == p
    # brute-force oracle: scan coefficients directly
    expected = set()
    for x, y in itertools.product(range(-60, 61), repeat=2):
        s = v * x + w * y
        if square(s, d) == target and pairing(s, v, d) == p:
            expected.add(s)
    assert set(got) >= expected
    assert len(got) <= 2


@given(st.builds(M, small, small, small), st.builds(M, small, small, small), small, small)
def test_membership_roundtrip(v, w, x, y):
    try:
        got = membership_in_lattice(v * x + w * y, v, w)
    except DependentBasisError:
        return
    assert got == (x, y)


def test_gram_sign_matches_span_signature():
    # With v^2 > 0 the span of v, w is indefinite iff the Gram determinant is negative.
    d = 2
    rng = range(-3, 4)
    vecs = [M(r, c, s) for r in rng for c in rng for s in rng]
    pos = [v for v in vecs if square(v, d) > 0][::7]
    for v in pos:
        for w in vecs[::3]:
            gram = gram_determinant(v, w, d)
            # v^2 w - (v,w) v is orthogonal to v with square v^2 * gram
            witness = w * square(v, d) - v * pairing(v, w, d)
            assert square(witness, d) == square(v, d) * gram
            if gram >= 0:
                assert all(square(v * x + w * y, d) >= 0
                           for x in range(-8, 9) for y in range(-8, 9))
