"""p-adic valuations on Q and their extensions to Q(√d).

A rational prime p behaves in one of three ways in Q(√d):

* **ramified**  — p divides the field discriminant (d if d ≡ 1 mod 4, else
  4d).  There is a single extension with value group (1/2)Z, computed as
  v_p(norm(x)) / 2.
* **inert** — d is a non-residue: again a single extension, value group Z,
  also v_p(norm(x)) / 2 (for odd p this equals min(v_p(a), v_p(b)); at
  p = 2 with d ≡ 5 mod 8 only the norm form is multiplicative).
* **split** — d is a nonzero residue (d ≡ 1 mod 8 when p = 2): there are
  two extensions, one per square root of d in the p-adic integers.  The
  roots are computed by Hensel lifting to finite precision, which is raised
  until the computed valuation is certified exact.

Every extension restricts on Q to v_p itself; no rescaling is applied.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PrecisionExceededError
from .primes import int_valuation, is_prime, require_prime, sqrt_mod_prime
from .quadratic import QuadElem, validate_discriminant
from .values import INFINITY, Value

# Hensel precision schedule: start here, double on a failed certificate,
# give up at the cap (configurable; QVAL_PRECISION_CAP / --precision-cap).
HENSEL_START_PRECISION = 8
DEFAULT_PRECISION_CAP = 2**16

_precision_cap = DEFAULT_PRECISION_CAP


def set_precision_cap(cap: int) -> None:
    global _precision_cap
    if cap < HENSEL_START_PRECISION:
        raise DomainError(f"precision cap must be at least {HENSEL_START_PRECISION}")
    _precision_cap = cap


def get_precision_cap() -> int:
    return _precision_cap


def v_p(p: int, x) -> Value:
    """The p-adic valuation of a rational (or rational QuadElem)."""
    require_prime(p)
    if isinstance(x, QuadElem):
        if not x.is_rational:
            raise DomainError(f"{x} is not rational; v_{p} is defined on Q")
        x = x.a
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return Value(int_valuation(p, x.numerator) - int_valuation(p, x.denominator))


class SplitKind(enum.Enum):
    INERT = "inert"
    RAMIFIED = "ramified"
    SPLIT = "split"


def field_discriminant(d: int) -> int:
    validate_discriminant(d)
    return d if d % 4 == 1 else 4 * d


def classify(p: int, d: int) -> SplitKind:
    """How the prime p behaves in Q(√d): ramified, split, or inert."""
    require_prime(p)
    validate_discriminant(d)
    if field_discriminant(d) % p == 0:
        return SplitKind.RAMIFIED
    if p == 2:
        # unramified means d ≡ 1 mod 4; then d ≡ 1 mod 8 splits, d ≡ 5 is inert
        return SplitKind.SPLIT if d % 8 == 1 else SplitKind.INERT
    return SplitKind.SPLIT if pow(d % p, (p - 1) // 2, p) == 1 else SplitKind.INERT


@lru_cache(maxsize=None)
def _split_seeds(p: int, d: int) -> tuple[int, int]:
    """The two branch seeds: square roots of d to the base precision.

    For odd p these are the roots mod p, branch 1 being the smaller.
    At p = 2 the two 2-adic roots ±s are distinguished by s mod 4
    (one root is 1 mod 4, the other 3), so the seeds live mod 4.
    """
    if p == 2:
        return (1, 3)
    r = sqrt_mod_prime(d % p, p)
    return (min(r, p - r), max(r, p - r))


def hensel_sqrt(p: int, d: int, k: int, branch: int = 1) -> int:
    """A square root of d modulo p^k on the chosen branch.

    Returns s with s² ≡ d (mod p^k) and s ≡ seed (mod p) — mod 4 when
    p = 2, where residues mod 2 cannot tell the two roots apart.
    """
    if classify(p, d) is not SplitKind.SPLIT:
        raise DomainError(f"{p} does not split in Q(sqrt({d}))")
    if k < 1:
        raise DomainError(f"precision must be >= 1, got {k}")
    if branch not in (1, 2):
        raise DomainError(f"branch must be 1 or 2, got {branch}")
    return _hensel_sqrt_cached(p, d, k, branch)


@lru_cache(maxsize=None)
def _hensel_sqrt_cached(p: int, d: int, k: int, branch: int) -> int:
    seed = _split_seeds(p, d)[branch - 1]
    if p == 2:
        return _hensel_sqrt_2(d, k, seed)
    # Newton iteration s ← (s + d/s)/2 doubles the precision each step
    s = seed
    prec = 1
    inv2 = pow(2, -1, p**k)
    while prec < k:
        prec = min(2 * prec, k)
        mod = p**prec
        s = (s + d * pow(s, -1, mod)) * inv2 % mod
    return s % p**k


def _hensel_sqrt_2(d: int, k: int, seed: int) -> int:
    # One bit per step: s² ≡ d mod 2^j and s odd force the next bit of s.
    # The update adds 2^(j-1), so s mod 4 — the branch — never moves.
    if k <= 2:
        return seed % 2**k
    s = seed  # d ≡ 1 mod 8, so s² ≡ d mod 8 already holds for odd s
    j = 3
    while j < k:
        c = ((d - s * s) >> j) & 1
        s += c << (j - 1)
        j += 1
    return s % 2**k


def split_root_with_agreement(p: int, d: int, k: int, branch: int) -> int:
    """A root s with s ≡ (true p-adic root) mod p^k, not just s² ≡ d.

    For odd p the plain lift already agrees to k digits; at p = 2 the
    bit-by-bit lift trails one digit behind, so one extra digit is taken.
    """
    if p == 2:
        return hensel_sqrt(p, d, k + 1, branch) % 2**k
    return hensel_sqrt(p, d, k, branch)


@dataclass(frozen=True)
class PAdicValuation:
    """v_p on Q: the exponent of p, with v_p(0) = ∞.  Value group Z."""

    p: int
    d: None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        require_prime(self.p)

    @property
    def extended_prime(self) -> int:
        return self.p

    @property
    def base_primes(self) -> frozenset[int]:
        return frozenset((self.p,))

    @property
    def value_denominator(self) -> int:
        return 1

    def value(self, x) -> Value:
        return v_p(self.p, x)

    def __str__(self) -> str:
        return f"vp:{self.p}"


@dataclass(frozen=True)
class ExtendedValuation:
    """The extension of v_p to Q(√d) determined by the splitting behavior.

    ``branch`` selects between the two split-case extensions (which agree
    on Q but send √d to opposite p-adic roots); it is 0 otherwise.
    """

    p: int
    d: int
    kind: SplitKind
    branch: int = 0

    def __post_init__(self):
        actual = classify(self.p, self.d)
        if actual is not self.kind:
            raise DomainError(
                f"{self.p} is {actual.value} in Q(sqrt({self.d})), not {self.kind.value}"
            )
        if self.kind is SplitKind.SPLIT:
            if self.branch not in (1, 2):
                raise DomainError("split extensions need branch 1 or 2")
        elif self.branch != 0:
            raise DomainError(f"{self.kind.value} extensions have no branches")

    @property
    def hensel_seed(self) -> int | None:
        if self.kind is not SplitKind.SPLIT:
            return None
        return _split_seeds(self.p, self.d)[self.branch - 1]

    @property
    def extended_prime(self) -> int:
        return self.p

    @property
    def base_primes(self) -> frozenset[int]:
        return frozenset((self.p,))

    @property
    def value_denominator(self) -> int:
        return 2 if self.kind is SplitKind.RAMIFIED else 1

    def conjugate_branch(self) -> "ExtendedValuation":
        if self.kind is not SplitKind.SPLIT:
            return self
        return ExtendedValuation(self.p, self.d, self.kind, 3 - self.branch)

    def value(self, x, precision_cap: int | None = None) -> Value:
        x = self._coerce(x)
        if not x:
            return INFINITY
        if self.kind is SplitKind.SPLIT:
            return self._split_value(x, precision_cap)
        # inert and ramified: v_p of the norm, halved.  Exactness: the norm
        # is multiplicative and nonzero off 0, and for inert primes the
        # result is always an integer.
        return v_p(self.p, x.norm()).scaled(Fraction(1, 2))

    def _coerce(self, x) -> QuadElem:
        if isinstance(x, QuadElem):
            if x.d != self.d:
                if x.is_rational:
                    return QuadElem.from_rational(x.a, self.d)
                raise DomainError(
                    f"element of Q(sqrt({x.d})) given to an extension on Q(sqrt({self.d}))"
                )
            return x
        return QuadElem.from_rational(Fraction(x), self.d)

    def _split_value(self, x: QuadElem, precision_cap: int | None) -> Value:
        if x.b == 0:
            return v_p(self.p, x.a)
        cap = precision_cap if precision_cap is not None else _precision_cap
        k = HENSEL_START_PRECISION
        while True:
            value, certified = self.split_value_at_precision(x, k)
            if certified:
                return value
            if k >= cap:
                raise PrecisionExceededError(
                    f"valuation of {x} at p={self.p} not certified within precision {cap}",
                    cap,
                )
            k = min(2 * k, cap)

    def split_value_at_precision(self, x: QuadElem, k: int) -> tuple[Value | None, bool]:
        """Evaluate at fixed Hensel precision k, with the stability certificate.

        Returns (value, certified).  The approximation error of the root is
        divisible by p^k, so the computed valuation of a + b·s is exact as
        soon as it falls below v_p(b) + k.
        """
        s = split_root_with_agreement(self.p, self.d, k, self.branch)
        t = x.a + x.b * s
        vb = v_p(self.p, x.b)
        if t == 0:
            return None, False
        vt = v_p(self.p, t)
        return vt, bool(vt < vb + Value(k))

    def __str__(self) -> str:
        if self.kind is SplitKind.SPLIT:
            return f"split{self.branch}:{self.p},d={self.d}"
        tag = "inert" if self.kind is SplitKind.INERT else "ram"
        return f"{tag}:{self.p},d={self.d}"


def extensions_of(p: int, d: int) -> tuple[ExtendedValuation, ...]:
    """All extensions of v_p to Q(√d): one for inert/ramified, two for split."""
    kind = classify(p, d)
    if kind is SplitKind.SPLIT:
        return (
            ExtendedValuation(p, d, kind, branch=1),
            ExtendedValuation(p, d, kind, branch=2),
        )
    return (ExtendedValuation(p, d, kind),)


def primes_by_kind(d: int, kind: SplitKind, count: int = 1, start: int = 2) -> list[int]:
    """The first ``count`` primes ≥ start with the given behavior in Q(√d)."""
    found: list[int] = []
    p = start
    while len(found) < count:
        if is_prime(p) and classify(p, d) is kind:
            found.append(p)
        p += 1
    return found
