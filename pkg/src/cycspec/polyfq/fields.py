"""Finite fields F_q with a canonical modulus and integer element encoding.

Elements of F_q are plain ints in [0, q). For prime q the element is the
residue itself. For q = p**e an element with coefficient vector
(c_0, ..., c_{e-1}) in the generator w is encoded as sum(c_i * p**i), so
0 and 1 are the field's zero and one in every case; digits()/from_digits()
convert between the packed index and the coefficient vector.

The modulus of F_{p**e} is canonical: the first monic irreducible of
degree e in ascending lexicographic order on (c_0, ..., c_{e-1}). This
gives x**2+x+1 for F_4, x**3+x**2+1 for F_8 and x**2+1 for F_9, and makes
every computation in the package reproducible across runs and machines.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .. import arith
from ..errors import InputError

# Extension fields build full multiplication tables; keep them small.
MAX_TABLE_FIELD = 4096


def _fp_poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over F_p; both ascending, b monic-ish (b[-1] != 0)."""
    a = a[:]
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c = a[-1] * inv_lead % p
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] = (a[off + i] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_irreducible(coeffs: list[int], p: int) -> bool:
    """Brute-force irreducibility of a monic poly over F_p (small degrees):
    no monic divisor of degree 1..deg/2."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            if not _fp_poly_rem(coeffs, div, p):
                return False
    return True


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """First irreducible monic (c_0, ..., c_{e-1}, 1) in ascending lex order."""
    for tail in itertools.product(range(p), repeat=e):
        cand = list(tail) + [1]
        if _fp_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible of degree {e} over F_{p}")


class Field:
    """Arithmetic in F_q on packed integer elements.

    Prime fields work at any 63-bit size; extension fields are backed by
    multiplication/inverse tables and are limited to q <= 4096.
    """

    def __init__(self, q: int):
        pe = arith.is_prime_power(q)
        if pe is None:
            raise InputError(f"q must be a prime power, got {q}")
        self.q = q
        self.p, self.e = pe
        if self.e == 1:
            self.modulus: tuple[int, ...] | None = None
        else:
            if q > MAX_TABLE_FIELD:
                raise InputError(
                    f"extension field order {q} exceeds the supported "
                    f"limit {MAX_TABLE_FIELD}"
                )
            self.modulus = _canonical_modulus(self.p, self.e)
            self._build_tables()

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product via digit convolution and modulus reduction."""
        p, e = self.p, self.e
        mod = self.modulus
        assert mod is not None
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] += ca * cb
        for d in range(2 * e - 2, e - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(e + 1):
                    prod[d - e + i] -= c * mod[i]
            prod[d] = 0
        return self.from_digits(x % p for x in prod[:e])

    def _build_tables(self):
        """Discrete log/exp tables over the first primitive element."""
        q = self.q
        for g in range(2, q):
            exp = [1]
            cur = g
            while cur != 1:
                exp.append(cur)
                cur = self._raw_mul(cur, g)
            if len(exp) == q - 1:
                break
        else:
            raise AssertionError(f"no generator found for F_{q}")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("Field", self.q))

    def __repr__(self):
        return f"Field({self.q})"

    def digits(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{e-1}) of an element index."""
        if not 0 <= a < self.q:
            raise InputError(f"element {a} out of range for F_{self.q}")
        if self.e == 1:
            return (a,)
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, digits) -> int:
        out = 0
        for c in reversed(list(digits)):
            out = out * self.p + int(c) % self.p
        return out

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.q
        da, db = self.digits(a), self.digits(b)
        return self.from_digits((x + y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.q
        return self.from_digits((-x) % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.q
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InputError("division by zero in F_q")
        if self.e == 1:
            return pow(a, self.q - 2, self.q)
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.e == 1:
            return pow(a, k, self.q)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % (self.q - 1)]


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Shared Field instance for q (construction builds tables once)."""
    return Field(q)
