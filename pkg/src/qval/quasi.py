"""Quasi-valuation constructors, the axiom harness, and ring membership.

A quasi-valuation w maps a field into Q ∪ {∞} with

  (B1)  w(0) = ∞,
  (B2)  w(xy) ≥ w(x) + w(y),
  (B3)  w(x+y) ≥ min(w(x), w(y)),

weakening the multiplicative equality of a valuation into superadditivity.
Three constructors are provided: the pointwise minimum of finitely many
valuations on the same field, the n-adic function on Q for composite n,
and positive rational rescaling.  Valuations themselves (``PAdicValuation``,
``ExtendedValuation``) satisfy the same evaluation protocol and can be used
anywhere a quasi-valuation is expected.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DomainError, PropertyViolation
from .primes import factorize, int_valuation, is_prime
from .quadratic import QuadElem, as_quad
from .report import PropertyReport
from .valuations import ExtendedValuation, PAdicValuation, extensions_of
from .values import INFINITY, Value

Valuation = PAdicValuation | ExtendedValuation


@dataclass(frozen=True)
class MinOf:
    """The pointwise minimum of valuations over one common field.

    When every member extends the same v_p the result is a quasi-valuation
    extending v_p (``extended_prime`` reports p).  Members over different
    base primes — e.g. min(v_2, v_3) on Q — are allowed but "mixed-base":
    they satisfy the axioms yet restrict to no single valuation on Q, and
    operations that need w|_Q = v_p reject them.
    """

    members: tuple[Valuation, ...]

    def __init__(self, members):
        members = tuple(members)
        if not members:
            raise DomainError("MinOf needs at least one valuation")
        fields = {m.d for m in members}
        if len(fields) != 1:
            raise DomainError(f"MinOf members live in different fields: {sorted(map(str, fields))}")
        object.__setattr__(self, "members", members)

    @property
    def d(self) -> int | None:
        return self.members[0].d

    @property
    def extended_prime(self) -> int | None:
        primes = {m.extended_prime for m in self.members}
        return primes.pop() if len(primes) == 1 else None

    @property
    def base_primes(self) -> frozenset[int]:
        return frozenset().union(*(m.base_primes for m in self.members))

    @property
    def value_denominator(self) -> int:
        return reduce(math.lcm, (m.value_denominator for m in self.members))

    def value(self, x) -> Value:
        return min(m.value(x) for m in self.members)

    def __str__(self) -> str:
        return "min[" + "|".join(str(m) for m in self.members) + "]"


@dataclass(frozen=True)
class NAdic:
    """The n-adic quasi-valuation on Q for an integer n ≥ 2.

    For prime n this is v_n; for composite n it is a proper
    quasi-valuation (superadditivity can be strict).
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"n-adic base must be an integer >= 2, got {self.n!r}")

    d = None

    @property
    def extended_prime(self) -> int | None:
        return self.n if is_prime(self.n) else None

    @property
    def base_primes(self) -> frozenset[int]:
        return frozenset(p for p, _ in factorize(self.n))

    @property
    def value_denominator(self) -> int:
        return 1

    def value(self, x) -> Value:
        return n_adic(self.n, x)

    def __str__(self) -> str:
        return f"nadic:{self.n}"


@dataclass(frozen=True)
class Scaled:
    """w'(x) = factor · w(x) for a positive rational factor.

    Rescaling preserves the axioms and the ring {w ≥ 0}, but for
    factor ≠ 1 the result no longer restricts to the base valuation.
    """

    inner: object
    factor: Fraction

    def __init__(self, inner, factor):
        factor = Fraction(factor)
        if factor <= 0:
            raise DomainError(f"scaling factor must be positive, got {factor}")
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "factor", factor)

    @property
    def d(self) -> int | None:
        return self.inner.d

    @property
    def extended_prime(self) -> int | None:
        return self.inner.extended_prime if self.factor == 1 else None

    @property
    def base_primes(self) -> frozenset[int]:
        return self.inner.base_primes

    @property
    def value_denominator(self) -> int:
        return self.inner.value_denominator * self.factor.denominator

    def value(self, x) -> Value:
        return self.inner.value(x).scaled(self.factor)

    def __str__(self) -> str:
        return f"scaled:{self.factor},{self.inner}"


QuasiValuation = MinOf | NAdic | Scaled | PAdicValuation | ExtendedValuation


def min_extension(p: int, d: int) -> MinOf:
    """min over all extensions of v_p to Q(√d) — the canonical
    quasi-valuation extending v_p whose ring contains Z[√d]."""
    return MinOf(extensions_of(p, d))


# ---------------------------------------------------------------------------
# the n-adic function and its independent decomposition oracle


def n_adic(n: int, x) -> Value:
    """w_n(x): the unique e with x = n^e·(a/b), n ∤ a, gcd(n,b) = gcd(a,b) = 1.

    Closed form: e = min over prime powers p^c ‖ n of floor(v_p(x) / c).
    ``n_adic_decomposition`` computes the same e straight from the defining
    decomposition; the test suite keeps the two in agreement.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n-adic base must be an integer >= 2, got {n!r}")
    x = _as_rational(x)
    if x == 0:
        return INFINITY
    e = min(
        (int_valuation(p, x.numerator) - int_valuation(p, x.denominator)) // c
        for p, c in factorize(n)
    )
    return Value(e)


def n_adic_decomposition(n: int, x) -> int:
    """Oracle for ``n_adic``: search e over a window wide enough to contain
    every possible exponent and check the decomposition conditions directly."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n-adic base must be an integer >= 2, got {n!r}")
    x = _as_rational(x)
    if x == 0:
        raise DomainError("decomposition is defined for nonzero x")
    c, den = x.numerator, x.denominator
    top = max(abs(c), den)
    # any candidate exponent is bounded by a 2-adic digit count: each step of
    # e moves at least one factor of 2 (the least possible prime) in or out
    window = top.bit_length() + 1
    matches = []
    for e in range(-window, window + 1):
        if e >= 0:
            num, dnm = c, den * n**e
        else:
            num, dnm = c * n**(-e), den
        g = math.gcd(num, dnm)
        a, b = num // g, dnm // g
        if a % n != 0 and math.gcd(n, b) == 1:
            matches.append(e)
    if len(matches) != 1:
        raise PropertyViolation(
            f"decomposition of {x} base {n} matched exponents {matches}; expected exactly one"
        )
    return matches[0]


# ---------------------------------------------------------------------------
# field plumbing shared by the harness operations


def field_zero(w):
    return QuadElem(Fraction(0), Fraction(0), w.d) if w.d is not None else Fraction(0)


def coerce_to_field(w, x):
    """Bring x into w's field, accepting rationals everywhere."""
    if w.d is not None:
        return as_quad(x, w.d)
    if isinstance(x, QuadElem):
        if x.is_rational:
            return x.a
        raise DomainError(f"{x} is not rational; {w} is defined on Q")
    return Fraction(x)


def _as_rational(x) -> Fraction:
    if isinstance(x, QuadElem):
        if not x.is_rational:
            raise DomainError(f"{x} is not rational")
        return x.a
    return Fraction(x)


# ---------------------------------------------------------------------------
# axiom harness


def check_axioms(w, samples, seed: int | None = None) -> PropertyReport:
    """Verify (B1)-(B3) plus the symmetry facts on every pair from samples.

    Checks, all with exact comparisons:
      * w(0) = ∞;
      * w(-x) = w(x) for every sample;
      * w(xy) ≥ w(x) + w(y) and w(x+y) ≥ min(w(x), w(y)) for every
        unordered pair (including x with itself);
      * w(x+y) = min(w(x), w(y)) whenever w(x) ≠ w(y).

    Returns a report carrying exact counterexamples on failure.
    """
    samples = [coerce_to_field(w, x) for x in samples]
    report = PropertyReport(lemma=f"quasi-valuation axioms [{w}]", seed=seed)

    zero_value = w.value(field_zero(w))
    report.record()
    if not zero_value.is_infinite:
        report.fail({"x": "0"}, "w(0) = inf", str(zero_value))

    from . import batch  # deferred: batch imports this module for type checks

    engine = batch.pairwise_axiom_check(w, samples)
    if engine is not None:
        checked, violations = engine
        report.record(checked)
        for kind, i, j in violations:
            _record_pair_failure(report, w, samples, kind, i, j)
        return report

    values = [w.value(x) for x in samples]
    for i, x in enumerate(samples):
        report.record()
        if w.value(-x) != values[i]:
            report.fail({"x": x}, f"w(-x) = w(x) = {values[i]}", str(w.value(-x)))
        for j in range(i, len(samples)):
            y = samples[j]
            vx, vy = values[i], values[j]
            product_value = w.value(x * y)
            report.record()
            if product_value < vx + vy:
                report.fail(
                    {"x": x, "y": y},
                    f"w(xy) >= w(x)+w(y) = {vx + vy}",
                    str(product_value),
                )
            sum_value = w.value(x + y)
            floor_value = min(vx, vy)
            report.record()
            if sum_value < floor_value:
                report.fail(
                    {"x": x, "y": y},
                    f"w(x+y) >= min(w(x), w(y)) = {floor_value}",
                    str(sum_value),
                )
            if vx != vy:
                report.record()
                if sum_value != floor_value:
                    report.fail(
                        {"x": x, "y": y},
                        f"w(x+y) = min(w(x), w(y)) = {floor_value} since w(x) != w(y)",
                        str(sum_value),
                    )
    return report


def _record_pair_failure(report: PropertyReport, w, samples, kind: str, i: int, j: int):
    """Re-derive a vector-engine violation through the exact path."""
    x = samples[i]
    if kind == "negation":
        report.fail({"x": x}, f"w(-x) = w(x) = {w.value(x)}", str(w.value(-x)))
        return
    y = samples[j]
    vx, vy = w.value(x), w.value(y)
    if kind == "superadditive":
        report.fail({"x": x, "y": y}, f"w(xy) >= {vx + vy}", str(w.value(x * y)))
    elif kind == "ultrametric":
        report.fail({"x": x, "y": y}, f"w(x+y) >= {min(vx, vy)}", str(w.value(x + y)))
    else:
        report.fail(
            {"x": x, "y": y},
            f"w(x+y) = min(w(x), w(y)) = {min(vx, vy)} since w(x) != w(y)",
            str(w.value(x + y)),
        )


def is_stable(w, c, samples) -> bool:
    """True iff w(c·x) = w(c) + w(x) for every sample x."""
    c = coerce_to_field(w, c)
    wc = w.value(c)
    for x in samples:
        x = coerce_to_field(w, x)
        if w.value(c * x) != wc + w.value(x):
            return False
    return True


def instability_witness(w, c, samples):
    """The first sample x with w(c·x) ≠ w(c) + w(x), or None."""
    c = coerce_to_field(w, c)
    wc = w.value(c)
    for x in samples:
        x = coerce_to_field(w, x)
        if w.value(c * x) != wc + w.value(x):
            return x
    return None


# ---------------------------------------------------------------------------
# the quasi-valuation ring and value-monoid witnesses


@dataclass(frozen=True)
class QVRing:
    """O_w = {x : w(x) ≥ 0}, a predicate object (the ring is infinite)."""

    qv: object

    def contains(self, x) -> bool:
        return w_at_least(self.qv, x, 0)

    def __str__(self) -> str:
        return f"ring[{self.qv}]"


def ring_member(ring, x) -> bool:
    if isinstance(ring, QVRing):
        return ring.contains(x)
    return QVRing(ring).contains(x)


def w_at_least(w, x, threshold) -> bool:
    return w.value(coerce_to_field(w, x)) >= Fraction(threshold)


def value_bound(w, x) -> int:
    """An integer strictly above w(x); only nonzero x is bounded."""
    val = w.value(coerce_to_field(w, x))
    if val.is_infinite:
        raise DomainError("w(0) = inf admits no finite bound; x must be nonzero")
    return val.floor() + 1


def graded_element(w, e: int):
    """A nonzero rational g with w(g) known exactly; returns (g, w(g)).

    Built from the primes w is made of: p^e for a single base prime,
    (∏ p_i)^e for a minimum over several, n^e for the n-adic function.
    """
    if isinstance(w, Scaled):
        g, val = graded_element(w.inner, e)
        return g, val * w.factor
    if isinstance(w, NAdic):
        return Fraction(w.n) ** e, Fraction(e)
    base = 1
    for p in sorted(w.base_primes):
        base *= p
    return Fraction(base) ** e, Fraction(e)


def value_witness(w, m):
    """A nonzero element y with w(y) ≥ m, certifying the bound m is attainable.

    Exists for every rational m under the constructors implemented here,
    which is exactly why none of them induces a discrete topology.
    """
    m = Fraction(m)
    if isinstance(w, Scaled):
        return value_witness(w.inner, m / w.factor)
    g, _ = graded_element(w, math.ceil(m))
    return g
