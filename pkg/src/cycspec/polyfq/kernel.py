"""Dense numpy engine for polynomial arithmetic over F_q, q = p**e.

A polynomial is stored as an int64 array of shape (e, L): row t holds the
degree-t components (in the generator w of the field) of the coefficients,
column j the coefficient of x**j. Products are assembled from e*e
convolutions of component rows followed by a fold of the w-powers through
the field modulus, and reduction modulo a monic polynomial f goes through
a precomputed matrix that maps the excess columns of a product straight
to their residues, so the inner loops all run inside numpy.

Everything here assumes a Field from .fields; coefficients stay reduced
mod p. The dense int64 layout bounds the base field: q above 2**20 is
refused (intermediate products would no longer fit).
"""

from __future__ import annotations

import numpy as np

from ..errors import InputError

KERNEL_MAX_Q = 2**20


def _check_field(field) -> None:
    if field.q > KERNEL_MAX_Q:
        raise InputError(
            f"field order {field.q} too large for the dense kernel "
            f"(limit {KERNEL_MAX_Q})"
        )


def _wfold_table(field) -> np.ndarray:
    """Digits of w**u for u = 0..2e-2 as an (2e-1, e) matrix.

    Folding a component-degree-u term back below degree e is a linear map;
    this table is its matrix, derived from the field modulus.
    """
    p, e = field.p, field.e
    rows = np.zeros((2 * e - 1, e), dtype=np.int64)
    mod = field.modulus  # ascending, length e+1, monic
    cur = [0] * e
    cur[0] = 1
    for u in range(2 * e - 1):
        rows[u] = cur
        if u == 2 * e - 2:
            break
        cur = [0] + cur[:-1] + [cur[-1]]
        lead = cur.pop()
        if lead:
            cur = [(c - lead * m) % p for c, m in zip(cur, mod[:e])]
    return rows


class _FieldData:
    """Per-field kernel tables, built once per Field instance."""

    def __init__(self, field):
        _check_field(field)
        self.field = field
        self.p = field.p
        self.e = field.e
        self.wfold = _wfold_table(field)  # (2e-1, e)


def _data(field) -> _FieldData:
    d = getattr(field, "_kernel_data", None)
    if d is None:
        d = _FieldData(field)
        field._kernel_data = d
    return d


def from_coeffs(field, coeffs) -> np.ndarray:
    """Array form of a coefficient sequence of element indices (ascending
    degree). The zero polynomial becomes a single zero column."""
    n = max(len(coeffs), 1)
    out = np.zeros((field.e, n), dtype=np.int64)
    for j, c in enumerate(coeffs):
        out[:, j] = field.digits(c)
    return out


def to_coeffs(field, arr: np.ndarray) -> tuple[int, ...]:
    """Element-index coefficients of arr, trailing zeros stripped."""
    out = [field.from_digits(arr[:, j]) for j in range(arr.shape[1])]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def deg(arr: np.ndarray) -> int:
    """Degree of the stored polynomial; -1 for zero."""
    nz = np.nonzero(arr.any(axis=0))[0]
    return int(nz[-1]) if nz.size else -1


def trim(arr: np.ndarray) -> np.ndarray:
    d = deg(arr)
    return arr[:, : d + 1] if d >= 0 else arr[:, :1] * 0


def conv(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Full product of two polynomial arrays (no reduction mod f)."""
    data = _data(field)
    e, p = data.e, data.p
    L = a.shape[1] + b.shape[1] - 1
    c1 = np.zeros((2 * e - 1, L), dtype=np.int64)
    for t1 in range(e):
        if not a[t1].any():
            continue
        for t2 in range(e):
            if not b[t2].any():
                continue
            c1[t1 + t2] += np.convolve(a[t1], b[t2])
    c1 %= p
    return (data.wfold.T @ c1) % p


def scalar_mul(field, c_digits: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Product of one field element (digit vector) with a polynomial array."""
    data = _data(field)
    e, p = data.e, data.p
    c1 = np.zeros((2 * e - 1, a.shape[1]), dtype=np.int64)
    for t1 in range(e):
        if c_digits[t1]:
            c1[t1 : t1 + e] += int(c_digits[t1]) * a
    c1 %= p
    return (data.wfold.T @ c1) % p


def add(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = a.shape[1], b.shape[1]
    n = max(la, lb)
    out = np.zeros((field.e, n), dtype=np.int64)
    out[:, :la] += a
    out[:, :lb] += b
    return out % field.p


def sub(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = a.shape[1], b.shape[1]
    n = max(la, lb)
    out = np.zeros((field.e, n), dtype=np.int64)
    out[:, :la] += a
    out[:, :lb] -= b
    return out % field.p


def divmod_arr(field, a: np.ndarray, m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of a by monic m (synthetic division)."""
    dm = deg(m)
    if dm < 0:
        raise InputError("division by zero polynomial")
    lead = m[:, dm]
    if field.from_digits(lead) != 1:
        raise InputError("divisor must be monic")
    da = deg(a)
    if da < dm:
        return np.zeros((field.e, 1), dtype=np.int64), trim(a).copy()
    work = a[:, : da + 1].copy()
    quot = np.zeros((field.e, da - dm + 1), dtype=np.int64)
    mlow = m[:, :dm]
    for dd in range(da, dm - 1, -1):
        c = work[:, dd].copy()
        if not c.any():
            continue
        quot[:, dd - dm] = c
        if dm > 0:
            work[:, dd - dm : dd] = (
                work[:, dd - dm : dd] - scalar_mul(field, c, mlow)
            ) % field.p
        work[:, dd] = 0
    return trim(quot), trim(work)


def rem(field, a: np.ndarray, m: np.ndarray) -> np.ndarray:
    return divmod_arr(field, a, m)[1]


def monic(field, a: np.ndarray) -> np.ndarray:
    d = deg(a)
    if d < 0:
        return trim(a)
    lead = field.from_digits(a[:, d])
    if lead == 1:
        return trim(a).copy()
    inv = np.array(field.digits(field.inv(lead)), dtype=np.int64)
    return scalar_mul(field, inv, trim(a))


def gcd(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Monic gcd of two polynomial arrays."""
    x, y = trim(a), trim(b)
    while deg(y) >= 0:
        x, y = y, rem(field, x, monic(field, y))
    return monic(field, x)


class QuotientCtx:
    """Arithmetic in F_q[x] / (f) for a fixed monic f of degree m >= 1.

    Residues are (e, m) arrays. Reduction of a product's excess columns
    (degrees m..2m-2) uses a flat ((m-1)e, me) matrix prepared once, so a
    mulmod is one convolution pass plus one matrix-vector product.
    """

    def __init__(self, field, f: np.ndarray):
        _check_field(field)
        self.field = field
        self.e = field.e
        self.p = field.p
        m = deg(f)
        if m < 1:
            raise InputError("modulus must have degree >= 1")
        if field.from_digits(f[:, m]) != 1:
            raise InputError("modulus must be monic")
        self.m = m
        self.f = trim(f).copy()
        e, p = self.e, self.p
        # The excess-reduction matrix costs (m*e)**2 words; past this size
        # mul() falls back to synthetic division, trading speed for memory.
        if 2 <= m and m * e <= 2048:
            base = (-self.f[:, :m]) % p  # x**m mod f
            rows = [base]
            for _ in range(m - 2):
                prev = rows[-1]
                shifted = np.zeros((e, m + 1), dtype=np.int64)
                shifted[:, 1:] = prev
                c = shifted[:, m].copy()
                nxt = shifted[:, :m]
                if c.any():
                    nxt = (nxt + scalar_mul(self.field, c, base)) % p
                rows.append(nxt)
            flat = np.zeros(((m - 1) * e, m * e), dtype=np.int64)
            data = _data(field)
            for i, row in enumerate(rows):
                for t in range(e):
                    wrow = scalar_mul(field, data.wfold[t], row)
                    flat[i * e + t] = wrow.T.reshape(-1)
            self._red = flat
        else:
            self._red = None

    def to_res(self, arr: np.ndarray) -> np.ndarray:
        """Reduce an arbitrary array mod f and pad to width m."""
        r = rem(self.field, arr, self.f)
        out = np.zeros((self.e, self.m), dtype=np.int64)
        out[:, : r.shape[1]] = r
        return out

    def one(self) -> np.ndarray:
        out = np.zeros((self.e, self.m), dtype=np.int64)
        out[:, 0] = self.field.digits(1)
        return out

    def x(self) -> np.ndarray:
        if self.m == 1:
            return self.to_res(from_coeffs(self.field, (0, 1)))
        out = np.zeros((self.e, self.m), dtype=np.int64)
        out[:, 1] = self.field.digits(1)
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        full = conv(self.field, a, b)
        if full.shape[1] <= self.m:
            out = np.zeros((self.e, self.m), dtype=np.int64)
            out[:, : full.shape[1]] = full
            return out
        if self._red is None:
            return self.to_res(full)
        low = full[:, : self.m].copy()
        excess = full[:, self.m :] % self.p
        flat = excess.T.reshape(-1)
        addback = (flat @ self._red).reshape(self.m, self.e).T
        return (low + addback) % self.p

    def pow(self, a: np.ndarray, k: int) -> np.ndarray:
        if k < 0:
            raise InputError(f"exponent must be >= 0, got {k}")
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result
