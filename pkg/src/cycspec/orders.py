"""Multiplicative orders modulo prime powers and the homogeneous order condition.

The central objects are the per-prime invariants of a pair (n, q) with
gcd(n, q) = 1: for each prime p | n, rho = the order of q modulo p and
beta = nu_p(q**rho - 1). Orders modulo p**theta then follow a lifting
ladder instead of repeated multiplication, and for pairs satisfying the
homogeneous order condition the order modulo any divisor of n has a
closed form that never materializes q**R - 1.

Convention for p = 2 with q = 3 (mod 4): rho is taken to be 2 and beta to
be nu_2(q**2 - 1), so that ord(2**theta) = rho for 2 <= theta <= beta and
rho * 2**(theta - beta) above. This matches the usual odd-prime ladder
shape and makes the homogeneous-order check fail naturally for even n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import arith
from .errors import InputError


@dataclass(frozen=True)
class PrimeProfile:
    """Order data of q at one prime p | n: p**alpha || n, rho = ord of q
    at p (see module convention for p = 2), beta = the lifting exponent."""

    p: int
    alpha: int
    rho: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.rho < 1 or self.beta < 1:
            raise InputError("profile fields must be positive")


@dataclass(frozen=True)
class HocStatus:
    """Result of testing the homogeneous order condition for (n, q).

    holds is True when gcd(rho_i, n) = 1 for every prime p_i | n and all
    pairwise gcds of the rho_i agree on a common value rho. R is the lcm
    of the rho_i. For a single prime the pairwise part is vacuous and
    rho = rho_1, R = rho_1. When the condition fails, rho and R are None
    and violations lists the reasons.
    """

    n: int
    q: int
    holds: bool
    rho: int | None
    R: int | None
    profiles: tuple[PrimeProfile, ...]
    violations: tuple[str, ...]


def _require_field_order(q: int) -> None:
    if q < 2 or arith.is_prime_power(q) is None:
        raise InputError(f"q must be a prime power, got {q}")


def lte_valuation(p: int, a: int, b: int, n: int) -> int:
    """nu_p(a**n - b**n) by the lifting-the-exponent lemma.

    Requires p prime, n >= 1, a != b, p | a - b and p dividing neither a
    nor b. For p = 2 the even-exponent case uses nu_2(a*a - b*b).
    """
    if p < 2 or not arith.is_prime(p):
        raise InputError(f"LTE hypotheses unmet: p={p} is not prime")
    if n < 1:
        raise InputError(f"LTE hypotheses unmet: need n >= 1, got {n}")
    if a == b:
        raise InputError("LTE hypotheses unmet: a and b must differ")
    if a % p == 0 or b % p == 0:
        raise InputError(f"LTE hypotheses unmet: {p} divides a or b")
    if (a - b) % p != 0:
        raise InputError(f"LTE hypotheses unmet: {p} does not divide a - b")
    if p >= 3:
        return arith.nu(p, abs(a - b)) + arith.nu(p, n)
    if n % 2 == 1:
        return arith.nu(2, abs(a - b))
    return arith.nu(2, abs(a * a - b * b)) + arith.nu(2, n) - 1


@lru_cache(maxsize=None)
def _rho_beta(p: int, q: int) -> tuple[int, int]:
    """(rho, beta) for the prime p and field order q, per module convention."""
    if not arith.is_prime(p):
        raise InputError(f"{p} is not prime")
    if q % p == 0:
        raise InputError(f"order undefined: gcd({p}, {q}) > 1")
    if p == 2:
        if q % 4 == 3:
            return 2, arith.nu(2, q * q - 1)
        return 1, arith.nu(2, q - 1)
    rho = p - 1
    for d in arith.divisors(p - 1):
        if pow(q, d, p) == 1:
            rho = d
            break
    # beta = nu_p(q**rho - 1), via the power itself while it stays small.
    if rho * q.bit_length() <= 126:
        return rho, arith.nu(p, q**rho - 1)
    beta = 1
    mod = p * p
    while pow(q, rho, mod) == 1:
        beta += 1
        mod *= p
    return rho, beta


def ord_prime_power(p: int, theta: int, q: int) -> int:
    """Multiplicative order of q modulo p**theta (theta = 0 gives 1)."""
    _require_field_order(q)
    if theta < 0:
        raise InputError(f"theta must be >= 0, got {theta}")
    if p < 2 or q % p == 0:
        raise InputError(f"order undefined: gcd({p}, {q}) > 1 or p invalid")
    if theta == 0:
        return 1
    rho, beta = _rho_beta(p, q)
    if p == 2 and q % 4 == 3:
        if theta == 1:
            return 1
        if theta <= beta:
            return 2
        return 2 ** (theta - beta + 1)
    if theta <= beta:
        return rho
    return rho * p ** (theta - beta)


def ord_mod(m: int, q: int) -> int:
    """Multiplicative order of q modulo m >= 1, assembled prime power by
    prime power through the lifting ladder."""
    _require_field_order(q)
    if m < 1:
        raise InputError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    if arith.gcd(m, q) != 1:
        raise InputError(f"order undefined: gcd({m}, {q}) > 1")
    out = 1
    for p, e in arith.factorize(m).factors:
        out = arith.lcm(out, ord_prime_power(p, e, q))
    return out


def profile(n: int, q: int) -> list[PrimeProfile]:
    """PrimeProfile for each prime of n, in increasing prime order."""
    _require_field_order(q)
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if arith.gcd(n, q) != 1:
        raise InputError(f"gcd(n,q) must be 1: got gcd({n},{q}) = {arith.gcd(n, q)}")
    out = []
    for p, e in arith.factorize(n).factors:
        rho, beta = _rho_beta(p, q)
        out.append(PrimeProfile(p, e, rho, beta))
    return out


def hoc_status(n: int, q: int) -> HocStatus:
    """Test the homogeneous order condition for (n, q).

    Requires n >= 2 (the condition concerns the primes of n). Violations
    are reported for every failing requirement, not just the first.
    """
    if n < 2:
        raise InputError(f"homogeneous order condition needs n >= 2, got {n}")
    profs = tuple(profile(n, q))
    violations: list[str] = []
    for pr in profs:
        g = arith.gcd(pr.rho, n)
        if g != 1:
            violations.append(
                f"gcd(rho(p={pr.p}) = {pr.rho}, n = {n}) = {g}, need 1"
            )
    rho: int | None = None
    if len(profs) == 1:
        rho = profs[0].rho
    else:
        pair_gcds = {
            arith.gcd(a.rho, b.rho)
            for i, a in enumerate(profs)
            for b in profs[i + 1 :]
        }
        if len(pair_gcds) == 1:
            rho = pair_gcds.pop()
        else:
            violations.append(
                "pairwise gcds of the rho_i are not constant: "
                + str(sorted(pair_gcds))
            )
    holds = not violations
    R: int | None = None
    if holds:
        R = 1
        for pr in profs:
            R = arith.lcm(R, pr.rho)
        prod = 1
        for pr in profs:
            prod *= pr.rho
        assert rho is not None and prod == R * rho ** (len(profs) - 1)
    return HocStatus(
        n=n,
        q=q,
        holds=holds,
        rho=rho if holds else None,
        R=R,
        profiles=profs,
        violations=tuple(violations),
    )


def hoc_order(d: int, status: HocStatus) -> int:
    """Order of q modulo a divisor d >= 2 of n, via the closed form

        ord_d q = rho * d / gcd(d, q**R - 1) * prod(rho_i / rho)

    over the primes p_i | d, where gcd(d, q**R - 1) is assembled from the
    beta_i so q**R - 1 itself is never computed.
    """
    if not status.holds:
        raise InputError(
            f"homogeneous order condition does not hold for "
            f"(n={status.n}, q={status.q})"
        )
    if d < 2 or status.n % d != 0:
        raise InputError(f"d must be a divisor of n = {status.n} with d >= 2, got {d}")
    assert status.rho is not None
    num = status.rho * d
    den = 1
    for pr in status.profiles:
        theta = arith.nu(pr.p, d)
        if theta > 0:
            den *= pr.p ** min(theta, pr.beta)
            num *= pr.rho // status.rho
    assert num % den == 0
    return num // den
