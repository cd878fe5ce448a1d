"""Generator and parity-check polynomials of minimal cyclic codes.

The parity-check polynomial of the minimal code attached to a cyclotomic
coset C is h_C(x) = prod(x - gamma**j, j in C) for a fixed primitive n-th
root of unity gamma in F_{q**s}, s = ord_n q; its coefficients land in the
base field because C is Galois-stable, and the generator is
(x**n - 1) / h_C. The codes come back ordered by coset representative,
and the product of all parity checks is verified to reconstruct x**n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import arith, orders, spectrum
from ..errors import BudgetError, InputError
from ..spectrum import Coset
from . import kernel
from .factor import ddf, edf
from .fields import Field, field
from .poly import FqPoly, poly, unity_poly

DEFAULT_CONSTRUCT_BUDGET = 2 * 10**4


class ExtensionField:
    """F_{q**s} as residues mod an irreducible degree-s polynomial over F_q.

    Elements are kernel arrays of shape (e, s); the class exposes just the
    operations the root-of-unity construction needs.
    """

    def __init__(self, base: Field, modulus: FqPoly):
        if modulus.field != base:
            raise InputError("modulus must live over the base field")
        if modulus.degree < 1 or not modulus.is_monic:
            raise InputError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self._ctx = kernel.QuotientCtx(base, kernel.from_coeffs(base, modulus.coeffs))

    def zero(self) -> np.ndarray:
        return self._ctx.one() * 0

    def one(self) -> np.ndarray:
        return self._ctx.one()

    def x(self) -> np.ndarray:
        """The residue of x, i.e. the adjoined root of the modulus."""
        return self._ctx.x()

    def from_base(self, a: int) -> np.ndarray:
        out = self.zero()
        out[:, 0] = self.base.digits(a)
        return out

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.base.p

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.base.p

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._ctx.mul(a, b)

    def pow(self, a: np.ndarray, k: int) -> np.ndarray:
        return self._ctx.pow(a, k)

    def eq(self, a: np.ndarray, b: np.ndarray) -> bool:
        return bool(np.array_equal(a, b))

    def is_base(self, a: np.ndarray) -> bool:
        """True when the element lies in the base field (residue degree 0)."""
        return not a[:, 1:].any()

    def base_value(self, a: np.ndarray) -> int:
        if not self.is_base(a):
            raise InputError("element does not lie in the base field")
        return self.base.from_digits(a[:, 0])

    def to_poly(self, a: np.ndarray) -> FqPoly:
        """The residue as a polynomial in the adjoined root, over the base."""
        return poly(self.base, kernel.to_coeffs(self.base, a))


def find_root_of_unity(n: int, q: int, seed: int = 0) -> tuple[ExtensionField, np.ndarray]:
    """A primitive n-th root of unity gamma in F_{q**s}, s = ord_n q.

    The modulus is chosen from the degree-s irreducible factors of
    x**n - 1 in sorted order, retrying with the next factor until the
    residue of x has exact order n (a factor of x**n - 1 only guarantees
    order dividing n). Returns the extension together with gamma.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    g = arith.gcd(n, q)
    if g != 1:
        raise InputError(f"gcd(n,q) must be 1: got gcd({n},{q}) = {g}")
    F = field(q)
    classes = ddf(unity_poly(F, n))
    s = max(d for d, _ in classes)
    prod_s = next(prod for d, prod in classes if d == s)
    candidates = [prod_s] if prod_s.degree == s else edf(prod_s, s, seed)
    primes = arith.factorize(n).primes
    for modulus in candidates:
        E = ExtensionField(F, modulus)
        gamma = E.x()
        if all(not E.eq(E.pow(gamma, n // p), E.one()) for p in primes):
            assert E.eq(E.pow(gamma, n), E.one())
            return E, gamma
    raise RuntimeError(f"no primitive root of unity found for (n={n}, q={q})")


@dataclass(frozen=True)
class MinimalCode:
    """One minimal cyclic code: its coset, dimension k, monic generator
    g of degree n - k and monic parity check h of degree k, with
    g * h = x**n - 1."""

    n: int
    q: int
    coset: Coset
    dimension: int
    generator: FqPoly
    parity_check: FqPoly

    def __post_init__(self):
        if self.dimension != self.coset.size:
            raise InputError("dimension must equal the coset size")
        if self.parity_check.degree != self.dimension:
            raise InputError("parity-check degree must equal the dimension")
        if self.generator.degree != self.n - self.dimension:
            raise InputError("generator degree must be n - dimension")
        if not (self.generator.is_monic and self.parity_check.is_monic):
            raise InputError("generator and parity check must be monic")


def minimal_codes(
    n: int, q: int, seed: int = 0, budget: int = DEFAULT_CONSTRUCT_BUDGET
) -> list[MinimalCode]:
    """All minimal cyclic codes of length n over F_q, by coset representative.

    For each q-cyclotomic coset C the parity check is accumulated as
    prod(x - gamma**j, j in C) over the extension; every coefficient is
    checked to lie in the base field, the generator is the exact quotient
    of x**n - 1, and the product of all parity checks is verified to
    reconstruct x**n - 1 before returning.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    g = arith.gcd(n, q)
    if g != 1:
        raise InputError(f"gcd(n,q) must be 1: got gcd({n},{q}) = {g}")
    s = orders.ord_mod(n, q)
    if s * n > budget:
        raise BudgetError(
            f"construction too large: ord_n(q) * n = {s} * {n} = {s * n} "
            f"exceeds budget {budget}"
        )
    F = field(q)
    _, cosets = spectrum.coset_spectrum(n, q)
    E, gamma = find_root_of_unity(n, q, seed)
    powers = [E.one()]
    for _ in range(n - 1):
        powers.append(E.mul(powers[-1], gamma))

    unity_arr = kernel.from_coeffs(F, unity_poly(F, n).coeffs)
    out: list[MinimalCode] = []
    prod_arr = kernel.from_coeffs(F, (1,))
    for coset in cosets:
        h = [E.one()]
        for j in coset.elements:
            root = powers[j]
            nxt = [E.zero() for _ in range(len(h) + 1)]
            for i, c in enumerate(h):
                nxt[i + 1] = E.add(nxt[i + 1], c)
                nxt[i] = E.sub(nxt[i], E.mul(root, c))
            h = nxt
        coeffs = []
        for c in h:
            if not E.is_base(c):
                raise InputError(
                    f"parity-check coefficient left the base field for "
                    f"coset {coset.representative} (internal error)"
                )
            coeffs.append(E.base_value(c))
        h_poly = poly(F, coeffs)
        h_arr = kernel.from_coeffs(F, h_poly.coeffs)
        g_arr, r = kernel.divmod_arr(F, unity_arr, h_arr)
        assert kernel.deg(r) < 0
        g_poly = poly(F, kernel.to_coeffs(F, g_arr))
        out.append(
            MinimalCode(
                n=n,
                q=q,
                coset=coset,
                dimension=coset.size,
                generator=g_poly,
                parity_check=h_poly,
            )
        )
        prod_arr = kernel.conv(F, prod_arr, h_arr)
    if kernel.to_coeffs(F, prod_arr) != unity_poly(F, n).coeffs:
        raise InputError(
            f"parity checks do not reconstruct x**{n} - 1 (internal error)"
        )
    return out
