"""Runnable property checks for the ball-topology facts.

Each check verifies one statement on many concrete instances: a
constructor drawn from a pool covering every implemented shape (p-adic
valuations, all three extension kinds over several fields, minima of split
pairs, n-adic functions), elements and bounds drawn from a seeded
generator, and ball-level claims verified on generated members.  Results
come back as ``PropertyReport`` objects; an empty failure list means every
sampled instance satisfied the statement.

The string ids used by the CLI (`2.2`, `2.10`, ...) are stable names for
the individual statements; see ``LEMMA_IDS``.
"""

import random
from fractions import Fraction

from .errors import PropertyViolation
from .quasi import MinOf, NAdic, Scaled, min_extension
from .report import PropertyReport
from .sampling import ball_members, elements_for, shift_above, shift_below
from .topology import (
    Ball,
    Side,
    dichotomy,
    integer_refinement,
    membership_scaling_chain,
    recenter,
    ring_value_equivalence,
    separation_witness,
)
from .valuations import PAdicValuation, SplitKind, extensions_of, primes_by_kind

FIELD_PARAMETERS = (-1, 2, 5, -7)


def constructor_pool(extending_only: bool = False) -> list:
    """Quasi-valuations covering every implemented constructor shape."""
    pool: list = [PAdicValuation(p) for p in (2, 3, 5, 7)]
    for d in FIELD_PARAMETERS:
        for kind in SplitKind:
            p = primes_by_kind(d, kind, count=1)[0]
            pool.extend(extensions_of(p, d))
        split_p = primes_by_kind(d, SplitKind.SPLIT, count=1)[0]
        pool.append(min_extension(split_p, d))
    pool.extend((NAdic(6), NAdic(12)))
    if not extending_only:
        pool.append(MinOf((PAdicValuation(2), PAdicValuation(3))))
    return [w for w in pool if not extending_only or w.extended_prime is not None]


def _random_bound(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 8), rng.choice((1, 2)))


def _pick(pool, rng: random.Random):
    return pool[rng.randrange(len(pool))]


def _one_element(w, rng: random.Random):
    return elements_for(w, rng, 8, include_zero=False)[-1]


def check_recentering(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """A point in two overlapping strict balls has a strict ball around it
    inside the intersection (the larger bound recentered)."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.2", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        y = _one_element(w, rng)
        bounds = sorted((_random_bound(rng), _random_bound(rng)))
        first = Ball(w, y - shift_above(w, bounds[0], rng, strict=True), bounds[0])
        second = Ball(w, y - shift_above(w, bounds[1], rng, strict=True), bounds[1])
        inner = recenter(first, second, y)
        for z in ball_members(inner, rng, samples):
            report.record()
            if not (first.contains(z) and second.contains(z)):
                report.fail(
                    {"w": w, "y": y, "z": z, "m1": bounds[0], "m2": bounds[1]},
                    "recentered ball lies inside both balls",
                    f"in first: {first.contains(z)}, in second: {second.contains(z)}",
                )
    return report


def check_overlap_bound(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """If some z lies in the strict m-balls of both x and y, then the
    centers themselves satisfy w(y−x) > m."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.10", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        x = _one_element(w, rng)
        m = _random_bound(rng)
        for _ in range(samples):
            z = x + shift_above(w, m, rng, strict=True)
            y = z - shift_above(w, m, rng, strict=True)
            report.record()
            gauge = w.value(y - x)
            if not gauge > m:
                report.fail(
                    {"w": w, "x": x, "y": y, "z": z, "m": m},
                    f"w(y - x) > {m}",
                    str(gauge),
                )
    return report


def check_hausdorff_witnesses(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """Distinct points get disjoint strict balls at bound m = w(y−x)."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.11", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        x = _one_element(w, rng)
        y = _one_element(w, rng)
        if x == y:
            y = y + 1
        m, ball_x, ball_y = separation_witness(w, x, y)
        report.record()
        if not (ball_x.contains(x) and ball_y.contains(y)):
            report.fail(
                {"w": w, "x": x, "y": y, "m": m},
                "each point lies in its own ball",
                f"x in U(x): {ball_x.contains(x)}, y in U(y): {ball_y.contains(y)}",
            )
        half = max(1, samples // 2)
        for z in ball_members(ball_x, rng, half):
            report.record()
            if ball_y.contains(z):
                report.fail(
                    {"w": w, "x": x, "y": y, "z": z, "m": m},
                    "balls are disjoint",
                    "z lies in both",
                )
        for z in ball_members(ball_y, rng, half):
            report.record()
            if ball_x.contains(z):
                report.fail(
                    {"w": w, "x": x, "y": y, "z": z, "m": m},
                    "balls are disjoint",
                    "z lies in both",
                )
    return report


def check_clopen_separation(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """Strict balls are closed as well as open: around any point outside
    U_m(x), the whole ball U_m(y) misses U_m(x)."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.12", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        x = _one_element(w, rng)
        m = _random_bound(rng)
        ball_x = Ball(w, x, m, strict=True)
        shift, gauge = shift_below(w, m, strict_ball=True)
        y = x + shift
        report.record()
        if ball_x.contains(y):
            report.fail(
                {"w": w, "x": x, "y": y, "m": m},
                f"y built with w(y-x) = {gauge} <= m stays outside",
                "y inside",
            )
            continue
        ball_y = Ball(w, y, m, strict=True)
        for z in ball_members(ball_y, rng, samples):
            report.record()
            if ball_x.contains(z):
                report.fail(
                    {"w": w, "x": x, "y": y, "z": z, "m": m},
                    "U_m(y) misses U_m(x) for outside y",
                    "z lies in both",
                )
    return report


def check_closed_ball_dichotomy(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """Translating a closed ball to any point keeps it entirely inside or
    entirely outside; exactly one side applies to each point."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.14", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        x = _one_element(w, rng)
        m = _random_bound(rng)
        ball = Ball(w, x, m, strict=False)
        inside_y = x + shift_above(w, m, rng, strict=False)
        below, _ = shift_below(w, m, strict_ball=False)
        outside_y = x + below
        for y, expected in ((inside_y, Side.INSIDE), (outside_y, Side.OUTSIDE), (x, Side.INSIDE)):
            side, translated = dichotomy(ball, y)
            report.record()
            if side is not expected:
                report.fail(
                    {"w": w, "x": x, "y": y, "m": m},
                    f"constructed point classifies as {expected.value}",
                    side.value,
                )
                continue
            for z in ball_members(translated, rng, samples // 2):
                report.record()
                if ball.contains(z) != (side is Side.INSIDE):
                    report.fail(
                        {"w": w, "x": x, "y": y, "z": z, "m": m},
                        f"translated ball stays {side.value}",
                        f"member on the {('outside' if side is Side.INSIDE else 'inside')}",
                    )
    return report


def check_integer_refinement(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """A strict ball is a union of closed balls at the integer bound
    floor(m) + 1 around its own members."""
    rng = random.Random(seed)
    pool = constructor_pool()
    report = PropertyReport(lemma="2.15", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        x = _one_element(w, rng)
        m = _random_bound(rng)
        ball = Ball(w, x, m, strict=True)
        refinement = integer_refinement(ball)
        report.record()
        if not (isinstance(refinement.alpha, int) and refinement.alpha > m):
            report.fail(
                {"w": w, "m": m},
                "alpha is an integer strictly above the bound",
                str(refinement.alpha),
            )
            continue
        for y in ball_members(ball, rng, max(2, samples // 10)):
            piece = refinement.closed_piece(y)
            for z in ball_members(piece, rng, 10):
                report.record()
                if not ball.contains(z):
                    report.fail(
                        {"w": w, "x": x, "y": y, "z": z, "m": m, "alpha": refinement.alpha},
                        "closed piece stays inside the strict ball",
                        "member escaped",
                    )
    return report


def check_threshold_chain(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """The four readings of w(x) ≥ v(a) agree for every sampled (x, a)."""
    rng = random.Random(seed)
    pool = constructor_pool(extending_only=True)
    report = PropertyReport(lemma="2.17", seed=seed)
    for _ in range(instances):
        w = _pick(pool, rng)
        xs = elements_for(w, rng, samples)
        thresholds: list[Fraction] = []
        while len(thresholds) < samples:
            a = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
            if a != 0:
                thresholds.append(a)
        for x, a in zip(xs, thresholds):
            report.record()
            try:
                membership_scaling_chain(w, x, a)
            except PropertyViolation as exc:
                report.fail({"w": w, "x": x, "a": a}, "four-way agreement", str(exc))
    return report


def check_shared_ring_equivalence(seed: int, instances: int = 20, samples: int = 100) -> PropertyReport:
    """Constructible same-ring pairs clear identical thresholds, and
    rescaled variants are rejected for not extending the base valuation."""
    rng = random.Random(seed)
    report = PropertyReport(lemma="2.18", seed=seed)
    pairs = []
    for d in FIELD_PARAMETERS:
        p = primes_by_kind(d, SplitKind.SPLIT, count=1)[0]
        u1, u2 = extensions_of(p, d)
        pairs.append((MinOf((u1, u2)), MinOf((u2, u1))))
        pairs.append((u1, u1))
    pairs.append((PAdicValuation(3), PAdicValuation(3)))
    pairs.append((min_extension(3, 2), min_extension(3, 2)))

    count = 0
    while count < instances:
        for w1, w2 in pairs:
            if count >= instances:
                break
            count += 1
            xs = elements_for(w1, rng, samples)
            sub = ring_value_equivalence(w1, w2, xs, seed=seed)
            report.record(sub.instances)
            report.failures.extend(sub.failures)

            factor = rng.choice((Fraction(2), Fraction(3), Fraction(1, 2), Fraction(3, 2)))
            rejected = ring_value_equivalence(w1, Scaled(w1, factor), xs, seed=seed)
            report.record()
            if rejected.passed:
                report.fail(
                    {"w1": w1},
                    "rescaled variant rejected at the extends-the-base-valuation check",
                    "equivalence ran and passed",
                )
    return report


LEMMA_IDS = {
    "2.2": check_recentering,
    "2.10": check_overlap_bound,
    "2.11": check_hausdorff_witnesses,
    "2.12": check_clopen_separation,
    "2.14": check_closed_ball_dichotomy,
    "2.15": check_integer_refinement,
    "2.17": check_threshold_chain,
    "2.18": check_shared_ring_equivalence,
}


def run_lemma(lemma_id: str, seed: int = 0, instances: int = 20, samples: int = 100) -> PropertyReport:
    try:
        check = LEMMA_IDS[lemma_id]
    except KeyError:
        raise PropertyViolation(
            f"unknown check id {lemma_id!r}; known: {', '.join(sorted(LEMMA_IDS))}"
        ) from None
    return check(seed, instances, samples)
