import random
from fractions import Fraction

import pytest

from qval.errors import DomainError
from qval.lemmas import constructor_pool
from qval.quasi import MinOf, NAdic, Scaled, min_extension
from qval.sampling import ball_members, elements_for, shift_above
from qval.topology import (
    Ball,
    Side,
    dichotomy,
    integer_refinement,
    membership_scaling_chain,
    recenter,
    ring_value_equivalence,
    separation_witness,
)
from qval.valuations import PAdicValuation, extensions_of

V2 = PAdicValuation(2)
V3 = PAdicValuation(3)


def test_contains_examples():
    assert Ball(V2, 0, 0, strict=True).contains(2)  # v2(2) = 1 > 0
    assert not Ball(V2, 0, 1, strict=True).contains(2)  # 1 is not > 1
    assert Ball(V2, 0, 1, strict=False).contains(2)  # 1 >= 1
    assert 2 in Ball(V2, 0, 0)


def test_center_always_inside():
    for strict in (True, False):
        ball = Ball(V2, Fraction(7, 3), Fraction(100), strict=strict)
        assert ball.contains(Fraction(7, 3))


def test_strict_inside_closed():
    rng = random.Random(0)
    ball_open = Ball(V2, 5, 2, strict=True)
    ball_closed = Ball(V2, 5, 2, strict=False)
    for z in ball_members(ball_open, rng, 50):
        assert ball_closed.contains(z)


def test_recenter_example():
    first = Ball(V2, 0, 0)
    second = Ball(V2, 8, 1)
    y = Fraction(4)
    assert first.contains(y) and second.contains(y)
    inner = recenter(first, second, y)
    assert inner.center == 4 and inner.bound == 1
    for k in range(1, 30):
        z = 4 + 8 * k
        assert inner.contains(z)
        assert first.contains(z) and second.contains(z)


def test_recenter_reorders_bounds():
    first = Ball(V2, 8, 1)
    second = Ball(V2, 0, 0)
    inner = recenter(first, second, 4)
    assert inner.bound == 1  # the larger bound wins regardless of order


def test_recenter_same_ball_at_center():
    ball = Ball(V2, 4, 1)
    inner = recenter(ball, ball, 4)
    assert inner.center == 4 and inner.bound == 1


def test_recenter_preconditions():
    with pytest.raises(DomainError):
        recenter(Ball(V2, 0, 0, strict=False), Ball(V2, 0, 0), 4)
    with pytest.raises(DomainError):
        recenter(Ball(V2, 0, 5), Ball(V2, 0, 0), 4)  # 4 outside the first
    with pytest.raises(DomainError):
        recenter(Ball(V2, 0, 0), Ball(V3, 0, 0), 4)


def test_separation_example():
    m, bx, by = separation_witness(V2, 0, 4)
    assert m == 2
    rng = random.Random(1)
    for z in ball_members(bx, rng, 60):
        assert not by.contains(z)
    for z in ball_members(by, rng, 60):
        assert not bx.contains(z)


def test_separation_symmetry():
    m_xy, _, _ = separation_witness(V2, Fraction(1, 3), Fraction(5, 6))
    m_yx, _, _ = separation_witness(V2, Fraction(5, 6), Fraction(1, 3))
    assert m_xy == m_yx
    with pytest.raises(DomainError):
        separation_witness(V2, 3, 3)


def test_separation_zero_bound():
    m, _, _ = separation_witness(V2, 0, 1)
    assert m == 0


def test_dichotomy_examples():
    ball = Ball(V3, 0, 1, strict=False)
    side, piece = dichotomy(ball, 3)
    assert side is Side.INSIDE
    for k in range(20):
        z = 3 + 3 * k
        if piece.contains(z):
            assert ball.contains(z)

    side, piece = dichotomy(ball, 1)
    assert side is Side.OUTSIDE
    for k in range(20):
        z = 1 + 3 * k  # v3(z) = 0 < 1: outside
        assert piece.contains(z)
        assert not ball.contains(z)

    side, _ = dichotomy(ball, 0)
    assert side is Side.INSIDE  # the center itself

    with pytest.raises(DomainError):
        dichotomy(Ball(V3, 0, 1, strict=True), 3)


def test_dichotomy_exhaustive_on_samples():
    rng = random.Random(2)
    for w in constructor_pool():
        ball = Ball(w, elements_for(w, rng, 5)[-1], Fraction(rng.randint(-2, 3)), strict=False)
        for y in elements_for(w, rng, 30):
            side, piece = dichotomy(ball, y)
            assert side is (Side.INSIDE if ball.contains(y) else Side.OUTSIDE)
            for z in ball_members(piece, rng, 10):
                assert ball.contains(z) == (side is Side.INSIDE)


def test_integer_refinement_bounds():
    assert integer_refinement(Ball(V2, 0, Fraction(1, 2))).alpha == 1
    assert integer_refinement(Ball(V2, 0, 2)).alpha == 3
    assert integer_refinement(Ball(V2, 0, Fraction(-5, 2))).alpha == -2
    with pytest.raises(DomainError):
        integer_refinement(Ball(V2, 0, 2, strict=False))


def test_integer_refinement_ramified_half_integer():
    w = extensions_of(2, 2)[0]
    ball = Ball(w, 0, Fraction(1, 2), strict=True)
    refinement = integer_refinement(ball)
    assert refinement.alpha == 1
    rng = random.Random(3)
    for y in ball_members(ball, rng, 15):
        piece = refinement.closed_piece(y)
        for z in ball_members(piece, rng, 15):
            assert ball.contains(z)
    with pytest.raises(DomainError):
        refinement.closed_piece(1)  # w(1) = 0, not > 1/2


def test_translation_compatibility():
    rng = random.Random(4)
    for w in (V2, min_extension(7, 2), NAdic(12)):
        m = Fraction(1)
        centered = Ball(w, 0, m)
        for x in elements_for(w, rng, 20):
            ball = Ball(w, x, m)
            for y in elements_for(w, rng, 20):
                assert ball.contains(y) == centered.contains(y - x)


def test_nesting_monotone_in_bound():
    rng = random.Random(5)
    w = min_extension(7, 2)
    x = elements_for(w, rng, 3)[-1]
    small = Ball(w, x, 1)
    large = Ball(w, x, 3)
    for z in ball_members(large, rng, 60):
        assert small.contains(z)


def test_total_disconnectedness_restated():
    rng = random.Random(6)
    for w in constructor_pool():
        xs = elements_for(w, rng, 12, include_zero=False)
        x, y = xs[-1], xs[-2]
        if x == y:
            continue
        m = w.value(x - y).finite_part
        piece = Ball(w, x, m, strict=True)
        assert piece.contains(x)
        assert not piece.contains(y)  # w(y-x) = m fails the strict bound
        for z in elements_for(w, rng, 20):
            assert piece.contains(z) != (not piece.contains(z))


def test_hausdorff_on_many_random_pairs():
    rng = random.Random(7)
    pool = constructor_pool()
    pairs = 0
    while pairs < 1000:
        w = pool[rng.randrange(len(pool))]
        xs = elements_for(w, rng, 4)
        x, y = xs[-1], xs[-2]
        if x == y:
            continue
        pairs += 1
        m, bx, by = separation_witness(w, x, y)
        z = x + shift_above(w, m, rng, strict=True)
        assert bx.contains(z)
        assert not by.contains(z)


def test_membership_scaling_chain_examples():
    assert membership_scaling_chain(V2, 8, 4) is True
    assert membership_scaling_chain(V2, 2, 4) is False
    with pytest.raises(DomainError):
        membership_scaling_chain(V2, 3, 0)
    with pytest.raises(DomainError):
        membership_scaling_chain(MinOf((V2, V3)), 6, 2)  # mixed base rejected


def test_membership_scaling_chain_on_split_min():
    rng = random.Random(8)
    w = min_extension(7, 2)
    thresholds = [a for a in elements_for(V2, rng, 40, include_zero=False) if a != 0]
    for x, a in zip(elements_for(w, rng, 40), thresholds):
        membership_scaling_chain(w, x, a)  # raises on any disagreement


def test_ring_value_equivalence_identity_and_reorder():
    rng = random.Random(9)
    u1, u2 = extensions_of(7, 2)
    samples = elements_for(u1, rng, 40)
    assert ring_value_equivalence(MinOf((u1, u2)), MinOf((u2, u1)), samples).passed
    assert ring_value_equivalence(u1, u1, samples).passed


def test_ring_value_equivalence_rejects_scaled():
    rng = random.Random(10)
    w = min_extension(7, 2)
    samples = elements_for(w, rng, 30)
    report = ring_value_equivalence(w, Scaled(w, 2), samples)
    assert not report.passed
    assert "extend" in report.failures[0].expected


def test_ring_value_equivalence_rejects_mixed_base():
    rng = random.Random(11)
    samples = elements_for(V2, rng, 20)
    report = ring_value_equivalence(MinOf((V2, V3)), V2, samples)
    assert not report.passed


def test_ring_value_equivalence_reports_ring_disagreement():
    rng = random.Random(12)
    samples = elements_for(V2, rng, 30, include_zero=False)
    report = ring_value_equivalence(V2, PAdicValuation(2), samples)
    assert report.passed
    # different primes are rejected before the ring is even consulted
    report = ring_value_equivalence(V2, V3, samples)
    assert not report.passed
