"""Polynomials over F_q: a small immutable type plus schoolbook operations.

Coefficients are element indices in ascending degree order with no
trailing zeros; the zero polynomial has an empty tuple and degree -1.
These functions favor clarity over speed and serve as the reference
implementation; the factorization and construction code runs on the dense
numpy engine and is checked against this layer in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from .fields import Field


@dataclass(frozen=True)
class FqPoly:
    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise InputError("coefficients must not have trailing zeros")
        for c in self.coeffs:
            if not 0 <= c < self.field.q:
                raise InputError(f"coefficient {c} out of range for F_{self.field.q}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                xj = "x" if j == 1 else f"x^{j}"
                parts.append(xj if c == 1 else f"{c}*{xj}")
        return " + ".join(parts)


def poly(field: Field, coeffs) -> FqPoly:
    """FqPoly from any coefficient sequence, normalizing trailing zeros."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return FqPoly(field, tuple(int(c) for c in cs))


def zero(field: Field) -> FqPoly:
    return FqPoly(field, ())


def one(field: Field) -> FqPoly:
    return FqPoly(field, (1,))


def x_poly(field: Field) -> FqPoly:
    return FqPoly(field, (0, 1))


def unity_poly(field: Field, n: int) -> FqPoly:
    """x**n - 1."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    cs = [0] * (n + 1)
    cs[0] = field.neg(1)
    cs[n] = 1
    return poly(field, cs)


def _match(f: FqPoly, g: FqPoly) -> Field:
    if f.field != g.field:
        raise InputError("polynomials live over different fields")
    return f.field


def poly_add(f: FqPoly, g: FqPoly) -> FqPoly:
    F = _match(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    out = []
    for j in range(n):
        a = f.coeffs[j] if j < len(f.coeffs) else 0
        b = g.coeffs[j] if j < len(g.coeffs) else 0
        out.append(F.add(a, b))
    return poly(F, out)


def poly_neg(f: FqPoly) -> FqPoly:
    return poly(f.field, [f.field.neg(c) for c in f.coeffs])


def poly_sub(f: FqPoly, g: FqPoly) -> FqPoly:
    return poly_add(f, poly_neg(g))


def poly_mul(f: FqPoly, g: FqPoly) -> FqPoly:
    F = _match(f, g)
    if f.is_zero or g.is_zero:
        return zero(F)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly(F, out)


def poly_divmod(f: FqPoly, g: FqPoly) -> tuple[FqPoly, FqPoly]:
    F = _match(f, g)
    if g.is_zero:
        raise InputError("polynomial division by zero")
    if f.degree < g.degree:
        return zero(F), f
    rem = list(f.coeffs)
    inv_lead = F.inv(g.coeffs[-1])
    dq = f.degree - g.degree
    quot = [0] * (dq + 1)
    for dd in range(f.degree, g.degree - 1, -1):
        c = rem[dd]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quot[dd - g.degree] = c
        off = dd - g.degree
        for i, b in enumerate(g.coeffs):
            if b:
                rem[off + i] = F.sub(rem[off + i], F.mul(c, b))
    return poly(F, quot), poly(F, rem)


def poly_rem(f: FqPoly, g: FqPoly) -> FqPoly:
    return poly_divmod(f, g)[1]


def poly_monic(f: FqPoly) -> FqPoly:
    if f.is_zero or f.is_monic:
        return f
    inv = f.field.inv(f.coeffs[-1])
    return poly(f.field, [f.field.mul(c, inv) for c in f.coeffs])


def poly_gcd(f: FqPoly, g: FqPoly) -> FqPoly:
    """Monic greatest common divisor."""
    _match(f, g)
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_rem(a, b)
    return poly_monic(a)


def poly_pow_mod(f: FqPoly, k: int, mod: FqPoly) -> FqPoly:
    """f**k reduced mod a nonconstant polynomial."""
    if k < 0:
        raise InputError(f"exponent must be >= 0, got {k}")
    if mod.degree < 1:
        raise InputError("modulus must have degree >= 1")
    result = poly_rem(one(f.field), mod)
    base = poly_rem(f, mod)
    while k:
        if k & 1:
            result = poly_rem(poly_mul(result, base), mod)
        base = poly_rem(poly_mul(base, base), mod)
        k >>= 1
    return result


def poly_eval(f: FqPoly, a: int) -> int:
    """Evaluate at a field element (Horner)."""
    out = 0
    for c in reversed(f.coeffs):
        out = f.field.add(f.field.mul(out, a), c)
    return out


def poly_deriv(f: FqPoly) -> FqPoly:
    """Formal derivative (repeated addition, valid in any characteristic)."""
    F = f.field
    out = []
    for j in range(1, len(f.coeffs)):
        c = f.coeffs[j]
        acc = 0
        for _ in range(j % F.p):
            acc = F.add(acc, c)
        out.append(acc)
    return poly(F, out)
