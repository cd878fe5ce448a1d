"""Integer arithmetic: 64-bit factorization, totient, valuations, orders of magnitude.

Everything here works on Python ints but enforces the package-wide contract that
inputs (and lcm outputs) fit in 63 bits, so results are portable to fixed-width
implementations. Factorization uses trial division by sieved small primes, then
deterministic Miller-Rabin plus Brent's variant of Pollard rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError

INT_MAX = 2**63 - 1

# Deterministic for every n < 3.3 * 10^24, which covers the full 64-bit range.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_TRIAL_BOUND = 10**4


def _small_primes(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(bound) if sieve[i])


_PRIMES = _small_primes(_TRIAL_BOUND)


def _check_range(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"{name} must be an int, got {type(n).__name__}")
    if n > INT_MAX:
        raise InputError(f"{name}={n} exceeds the 63-bit range")


@dataclass(frozen=True)
class Factorization:
    """A validated prime factorization: value == product of p**e over factors.

    factors is a tuple of (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; value 1 has an empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1 or self.value > INT_MAX:
            raise InputError(f"factorization value {self.value} out of range")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise InputError("factors must have strictly increasing primes")
            if e < 1:
                raise InputError("factor exponents must be >= 1")
            prod *= p**e
            prev = p
        if prod != self.value:
            raise InputError(
                f"factors reconstruct {prod}, expected {self.value}"
            )

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 63-bit integers."""
    _check_range(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Find a nontrivial factor of composite n (no prime factor < _TRIAL_BOUND)."""
    if n % 2 == 0:
        return 2
    # Deterministic parameter schedule keeps factorize reproducible.
    for c in range(1, 256):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InputError(f"failed to factor {n}")  # unreachable for 63-bit inputs


def factorize(n: int) -> Factorization:
    """Factor 1 <= n <= 2**63 - 1 into (prime, exponent) pairs.

    factorize(1) has an empty factor tuple. Trial division handles small
    primes; anything that survives is split with Miller-Rabin / Brent rho.
    """
    _check_range(n)
    if n < 1:
        raise InputError(f"cannot factor n={n}, need n >= 1")
    m = n
    out: dict[int, int] = {}
    for p in _PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            v = stack.pop()
            if v < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(v):
                out[v] = out.get(v, 0) + 1
                continue
            d = _brent_rho(v)
            stack.append(d)
            stack.append(v // d)
    return Factorization(n, tuple(sorted(out.items())))


def nu(p: int, m: int) -> int:
    """p-adic valuation: the exponent of p in m. Requires p >= 2, m >= 1."""
    if p < 2:
        raise InputError(f"valuation base must be >= 2, got {p}")
    if m < 1:
        raise InputError(f"valuation argument must be >= 1, got {m}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def euler_phi(n: int) -> int:
    """Euler's totient via the prime factorization."""
    fac = factorize(n)
    out = 1
    for p, e in fac.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus for 63-bit inputs; modulus must be positive."""
    _check_range(abs(base), "base")
    _check_range(exponent, "exponent")
    _check_range(modulus, "modulus")
    if modulus < 1:
        raise InputError(f"modulus must be positive, got {modulus}")
    if exponent < 0:
        raise InputError(f"exponent must be nonnegative, got {exponent}")
    return pow(base % modulus, exponent, modulus)


def gcd(a: int, b: int) -> int:
    """Nonnegative gcd; gcd(0, 0) is rejected as undefined here."""
    _check_range(abs(a), "a")
    _check_range(abs(b), "b")
    if a == 0 and b == 0:
        raise InputError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple; errors if the result leaves the 63-bit range."""
    _check_range(abs(a), "a")
    _check_range(abs(b), "b")
    if a == 0 or b == 0:
        raise InputError("lcm requires nonzero arguments")
    out = math.lcm(a, b)
    if out > INT_MAX:
        raise InputError(f"lcm({a}, {b}) = {out} exceeds the 63-bit range")
    return out


@lru_cache(maxsize=None)
def is_prime_power(q: int) -> tuple[int, int] | None:
    """(p, e) with q = p**e if q >= 2 is a prime power, else None."""
    if q < 2:
        raise InputError(f"prime power test needs q >= 2, got {q}")
    fac = factorize(q)
    if len(fac.factors) == 1:
        return fac.factors[0]
    return None


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    fac = factorize(n)
    out = [1]
    for p, e in fac.factors:
        out = [d * p**j for d in out for j in range(e + 1)]
    return sorted(out)
