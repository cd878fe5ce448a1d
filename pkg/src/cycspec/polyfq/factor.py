"""Squarefree polynomial factorization over F_q.

Distinct-degree factorization walks the Frobenius ladder x -> x**q mod f
and splits off gcd(f, x**(q**d) - x) products; equal-degree splitting uses
Cantor-Zassenhaus (power residues for odd q, the absolute trace map in
characteristic 2). Randomness comes from a caller-provided seed and only
steers the search path: the returned factor set is seed-independent and
sorted by descending-degree coefficient tuples, so every run lists factors
in the same order.
"""

from __future__ import annotations

import random

import numpy as np

from .. import arith
from ..errors import InputError
from . import kernel
from .fields import Field, field
from .poly import FqPoly, poly, poly_deriv, poly_monic, unity_poly

_EDF_MAX_TRIES = 512


def _sort_key(f: FqPoly):
    return tuple(reversed(f.coeffs))


def _require_monic(f: FqPoly) -> None:
    if f.degree < 1:
        raise InputError(f"need degree >= 1, got degree {f.degree}")
    if not f.is_monic:
        raise InputError("polynomial must be monic")


def _squarefree_defect(f: FqPoly) -> int:
    """Degree of gcd(f, f'); 0 exactly when f is squarefree."""
    d = poly_deriv(f)
    if d.is_zero:
        return f.degree
    a = kernel.from_coeffs(f.field, f.coeffs)
    b = kernel.from_coeffs(f.field, d.coeffs)
    return kernel.deg(kernel.gcd(f.field, a, b))


def ddf(f: FqPoly) -> list[tuple[int, FqPoly]]:
    """Distinct-degree factorization of a monic squarefree polynomial.

    Returns (d, product of all irreducible factors of degree d) pairs in
    increasing d, skipping degrees with no factors.
    """
    _require_monic(f)
    defect = _squarefree_defect(f)
    if defect:
        raise InputError(f"not squarefree: gcd(f, f') has degree {defect}")
    F = f.field
    q = F.q
    ctx = kernel.QuotientCtx(F, kernel.from_coeffs(F, f.coeffs))
    remaining = kernel.from_coeffs(F, f.coeffs)
    x_arr = kernel.from_coeffs(F, (0, 1))
    frob = ctx.to_res(x_arr)  # x**(q**d) mod f, lifted each round
    out: list[tuple[int, FqPoly]] = []
    d = 0
    while 2 * (d + 1) <= kernel.deg(remaining):
        d += 1
        frob = ctx.pow(frob, q)
        h = kernel.gcd(F, remaining, kernel.sub(F, frob, x_arr))
        if kernel.deg(h) > 0:
            out.append((d, poly(F, kernel.to_coeffs(F, h))))
            quot, r = kernel.divmod_arr(F, remaining, h)
            assert kernel.deg(r) < 0
            remaining = quot
    rd = kernel.deg(remaining)
    if rd > 0:
        out.append((rd, poly(F, kernel.to_coeffs(F, remaining))))
    return out


def _edf_split(
    F: Field, ctx: kernel.QuotientCtx, arr: np.ndarray, d: int, rng: random.Random
) -> np.ndarray | None:
    """One random gcd-split attempt on a degree >= 2d product of degree-d
    irreducibles; returns a proper factor array or None."""
    m = kernel.deg(arr)
    r = kernel.from_coeffs(F, [rng.randrange(F.q) for _ in range(m)])
    r = ctx.to_res(r)
    if F.p == 2:
        # Absolute trace of r over F_2 inside the degree-d residue fields.
        e2 = F.e * d
        acc = r
        t = r
        for _ in range(e2 - 1):
            t = ctx.mul(t, t)
            acc = kernel.add(F, acc, t)
        g = kernel.gcd(F, arr, acc)
    else:
        h = ctx.pow(r, (F.q**d - 1) // 2)
        g = kernel.gcd(F, arr, kernel.sub(F, h, ctx.one()))
    dg = kernel.deg(g)
    if 0 < dg < m:
        return g
    return None


def edf(f: FqPoly, d: int, seed: int = 0) -> list[FqPoly]:
    """Equal-degree factorization: split a monic product of distinct
    irreducibles, all of degree d, into the sorted list of its factors.

    The seed only affects internal search randomness; the output is the
    same for every seed.
    """
    _require_monic(f)
    if d < 1:
        raise InputError(f"factor degree must be >= 1, got {d}")
    if f.degree % d != 0:
        raise InputError(
            f"degree {f.degree} is not a multiple of the factor degree {d}"
        )
    F = f.field
    rng = random.Random(seed)
    work = [kernel.from_coeffs(F, f.coeffs)]
    done: list[FqPoly] = []
    while work:
        arr = work.pop()
        m = kernel.deg(arr)
        if m == d:
            done.append(poly(F, kernel.to_coeffs(F, kernel.monic(F, arr))))
            continue
        ctx = kernel.QuotientCtx(F, arr)
        for _ in range(_EDF_MAX_TRIES):
            g = _edf_split(F, ctx, arr, d, rng)
            if g is not None:
                quot, r = kernel.divmod_arr(F, arr, g)
                assert kernel.deg(r) < 0
                work.append(g)
                work.append(quot)
                break
        else:
            raise RuntimeError(
                f"equal-degree split failed after {_EDF_MAX_TRIES} attempts"
            )
    done.sort(key=_sort_key)
    return done


def is_irreducible(f: FqPoly) -> bool:
    """Irreducibility through the distinct-degree sieve."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    g = poly_monic(f)
    if _squarefree_defect(g):
        return False
    dd = ddf(g)
    return len(dd) == 1 and dd[0][0] == g.degree


def factor_unity(n: int, q: int, seed: int = 0) -> list[FqPoly]:
    """All irreducible factors of x**n - 1 over F_q, sorted by degree then
    by descending-degree coefficient tuple. Requires gcd(n, q) = 1."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    g = arith.gcd(n, q)
    if g != 1:
        raise InputError(f"gcd(n,q) must be 1: got gcd({n},{q}) = {g}")
    F = field(q)
    out: list[FqPoly] = []
    for d, prod in ddf(unity_poly(F, n)):
        if prod.degree == d:
            out.append(prod)
        else:
            out.extend(edf(prod, d, seed))
    out.sort(key=lambda h: (h.degree, _sort_key(h)))
    return out
