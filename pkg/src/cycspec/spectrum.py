"""Dimension spectra of minimal cyclic codes of length n over F_q.

A minimal cyclic code of length n corresponds to an irreducible factor of
x**n - 1, and its dimension equals the degree of that factor. For
gcd(n, q) = 1 the degrees are the orders ord_m q over the divisors m | n,
each appearing phi(m) / ord_m q times. This module computes that spectrum
by three independent routes plus a family of closed forms:

  * divisor_spectrum: the authoritative divisor-sum aggregation,
  * coset_spectrum: direct enumeration of q-cyclotomic cosets mod n,
  * prime_power_spectrum / radical_spectrum: closed forms for n = p**alpha
    and for n whose primes all divide q - 1,
  * total_sase / total_kuar: closed-form totals under primitive-root
    hypotheses,
  * the hoc_* family: per-dimension counts and totals for pairs satisfying
    the homogeneous order condition, including the known-unsound
    per-dimension formula reported with an explicit discrepancy flag.

Closed forms are never trusted blindly: auto_spectrum adopts one only when
its hypotheses hold and its output matches the divisor route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import arith, orders
from .errors import BudgetError, InputError
from .orders import HocStatus

DEFAULT_COSET_BUDGET = 10**7

METHOD_DIVISOR = "divisor"
METHOD_COSET = "coset"
METHOD_PRIME_POWER = "prime-power"
METHOD_RADICAL = "radical"
METHOD_HOC = "hoc"


@dataclass
class Spectrum:
    """Dimension spectrum: entries[k] = number of minimal [n, k] codes.

    Always satisfies sum(k * count) = n, every count >= 1, and 1 in
    entries (the repetition code from the factor x - 1 at least).
    """

    n: int
    q: int
    entries: dict[int, int]
    method: str

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if not self.entries:
            raise InputError("a spectrum cannot be empty")
        total = 0
        for k, c in self.entries.items():
            if k < 1 or c < 1:
                raise InputError(f"bad spectrum entry k={k}, count={c}")
            total += k * c
        if total != self.n:
            raise InputError(
                f"spectrum mass {total} does not match n = {self.n}"
            )
        if 1 not in self.entries:
            raise InputError("spectrum must contain dimension 1")
        self.entries = dict(sorted(self.entries.items()))

    @property
    def total(self) -> int:
        """Total number of minimal cyclic codes of length n."""
        return sum(self.entries.values())


@dataclass(frozen=True)
class Coset:
    """One q-cyclotomic coset mod n: {j, jq, jq**2, ...}, elements sorted,
    represented by its least element."""

    representative: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if not self.elements or tuple(sorted(self.elements)) != self.elements:
            raise InputError("coset elements must be sorted and nonempty")
        if self.representative != self.elements[0]:
            raise InputError("representative must be the least element")

    @property
    def size(self) -> int:
        return len(self.elements)


def _require_pair(n: int, q: int) -> None:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n > arith.INT_MAX:
        raise InputError(f"n={n} exceeds the 63-bit range")
    if q < 2 or arith.is_prime_power(q) is None:
        raise InputError(f"q must be a prime power, got {q}")
    g = arith.gcd(n, q)
    if g != 1:
        raise InputError(f"gcd(n,q) must be 1: got gcd({n},{q}) = {g}")


def divisor_spectrum(n: int, q: int) -> Spectrum:
    """The authoritative spectrum: for each m | n add phi(m) / ord_m q
    codes of dimension ord_m q."""
    _require_pair(n, q)
    fac = arith.factorize(n)
    # Per prime: (phi(p**j), ord of q mod p**j) for j = 0..e.
    per_prime = []
    for p, e in fac.factors:
        col = []
        for j in range(e + 1):
            phi = 1 if j == 0 else p ** (j - 1) * (p - 1)
            col.append((phi, orders.ord_prime_power(p, j, q)))
        per_prime.append(col)
    entries: dict[int, int] = {}
    for combo in itertools.product(*per_prime):
        phi, order = 1, 1
        for f, o in combo:
            phi *= f
            order = order * o // arith.gcd(order, o)
        entries[order] = entries.get(order, 0) + phi // order
    return Spectrum(n, q, entries, METHOD_DIVISOR)


def coset_spectrum(
    n: int, q: int, budget: int = DEFAULT_COSET_BUDGET
) -> tuple[Spectrum, list[Coset]]:
    """Enumerate the q-cyclotomic cosets mod n directly.

    Returns the spectrum (entries[k] = number of size-k cosets) together
    with the cosets themselves, ordered by representative. Refuses to
    enumerate more than budget elements.
    """
    _require_pair(n, q)
    if n > budget:
        raise BudgetError(
            f"enumeration too large, use divisor method (n = {n} exceeds "
            f"budget {budget})"
        )
    seen = bytearray(n)
    entries: dict[int, int] = {}
    cosets: list[Coset] = []
    for j in range(n):
        if seen[j]:
            continue
        members = []
        v = j
        while not seen[v]:
            seen[v] = 1
            members.append(v)
            v = v * q % n
        members.sort()
        cosets.append(Coset(members[0], tuple(members)))
        entries[len(members)] = entries.get(len(members), 0) + 1
    return Spectrum(n, q, entries, METHOD_COSET), cosets


def prime_power_spectrum(p: int, alpha: int, q: int) -> Spectrum:
    """Closed-form spectrum for n = p**alpha.

    For p odd or q = 1 (mod 4): dimension 1 appears gcd(n, q-1) times,
    dimension rho (when rho > 1) appears (p**min(alpha,beta) - 1)/rho
    times, and each dimension rho * p**j for 1 <= j <= alpha - beta
    appears phi(p**beta)/rho times.

    For p = 2 with q = 3 (mod 4), with beta = nu_2(q*q - 1): dimension 1
    appears twice, dimension 2 appears 2**(min(alpha,beta)-1) - 1 times
    (alpha >= 2), and each dimension 2**j for 2 <= j <= alpha - beta + 1
    appears 2**(beta-2) times.
    """
    if alpha < 1:
        raise InputError(f"alpha must be >= 1, got {alpha}")
    if not arith.is_prime(p):
        raise InputError(f"{p} is not prime")
    n = p**alpha
    _require_pair(n, q)
    rho, beta = orders._rho_beta(p, q)
    entries: dict[int, int] = {}
    if p == 2 and q % 4 == 3:
        entries[1] = 2
        if alpha >= 2:
            entries[2] = 2 ** (min(alpha, beta) - 1) - 1
            for j in range(2, alpha - beta + 2):
                entries[2**j] = entries.get(2**j, 0) + 2 ** (beta - 2)
    else:
        entries[1] = arith.gcd(n, q - 1)
        if rho > 1:
            entries[rho] = (p ** min(alpha, beta) - 1) // rho
        phi_beta = p**beta - p ** (beta - 1)
        for j in range(1, alpha - beta + 1):
            k = rho * p**j
            entries[k] = entries.get(k, 0) + phi_beta // rho
    return Spectrum(n, q, entries, METHOD_PRIME_POWER)


@dataclass(frozen=True)
class RadicalParameters:
    """Reduced modulus m and 2-part split exponent r for a radical pair.

    case 1 when 8 does not divide n or q != 3 (mod 4): m = n/gcd(n, q-1),
    r is None. case 2 otherwise: m = n/gcd(n, q**2 - 1) and
    r = min(nu_2(n/2), nu_2(q+1)).
    """

    case: int
    m: int
    r: int | None


def _radical_primes_check(n: int, q: int) -> None:
    for p in arith.factorize(n).primes:
        if (q - 1) % p != 0:
            raise InputError(
                f"formula hypotheses unmet: prime {p} of n does not divide "
                f"q - 1 = {q - 1}"
            )


def radical_parameters(n: int, q: int) -> RadicalParameters:
    """Case split and reduced parameters for n whose primes divide q - 1."""
    _require_pair(n, q)
    _radical_primes_check(n, q)
    if n % 8 == 0 and q % 4 == 3:
        m = n // arith.gcd(n, q * q - 1)
        r = min(arith.nu(2, n // 2), arith.nu(2, q + 1))
        return RadicalParameters(2, m, r)
    return RadicalParameters(1, n // arith.gcd(n, q - 1), None)


def radical_spectrum(n: int, q: int) -> Spectrum:
    """Closed-form spectrum when every prime factor of n divides q - 1.

    Case 1 (8 does not divide n, or q != 3 mod 4): dimension d occurs
    phi(d)/d * gcd(n, q-1) times for each d | n/gcd(n, q-1). Case 2
    splits d by its 2-part, with r = min(nu_2(n/2), nu_2(q+1)) controlling
    how the even dimensions distribute. The closed-form total is checked
    against the accumulated entries before returning.
    """
    params = radical_parameters(n, q)
    g1 = arith.gcd(n, q - 1)
    entries: dict[int, Fraction] = {}

    def add(k: int, c: Fraction) -> None:
        if c:
            entries[k] = entries.get(k, Fraction(0)) + c

    if params.case == 1:
        for d in arith.divisors(params.m):
            add(d, Fraction(g1 * arith.euler_phi(d), d))
        total = Fraction(g1)
        for p, _ in arith.factorize(params.m).factors:
            total *= 1 + Fraction(arith.nu(p, params.m) * (p - 1), p)
    else:
        m2, r = params.m, params.r
        assert r is not None and r >= 2
        for d in arith.divisors(n):
            if d % 2 == 1:
                if m2 % d == 0:
                    add(d, Fraction(g1 * arith.euler_phi(d), d))
            else:
                k = d // 2
                if m2 % k == 0:
                    if k % 2 == 1:
                        add(d, Fraction(g1 * arith.euler_phi(k) * (2**r - 1), 2 * k))
                    else:
                        add(d, Fraction(g1 * arith.euler_phi(k) * 2 ** (r - 1), k))
        total = g1 * (Fraction(1, 2) + 2 ** (r - 2) * (2 + arith.nu(2, m2)))
        for p, _ in arith.factorize(m2).factors:
            if p != 2:
                total *= 1 + Fraction(arith.nu(p, m2) * (p - 1), p)
    out: dict[int, int] = {}
    for k, c in entries.items():
        if c.denominator != 1:
            raise InputError(f"non-integral count {c} at dimension {k}")
        out[k] = int(c)
    if total != sum(out.values()):
        raise InputError(
            f"closed-form total {total} disagrees with entry sum "
            f"{sum(out.values())} for (n={n}, q={q})"
        )
    return Spectrum(n, q, out, METHOD_RADICAL)


def total_sase(p1: int, alpha1: int, p2: int, q: int) -> int:
    """Closed-form total for n = p1**alpha1 * p2 when q is a primitive
    root modulo both p1**alpha1 and p2, and p1 does not divide p2 - 1.

    With d = gcd(phi(p1**alpha1), phi(p2)) the total is
    alpha1 * (d + 1) + 2.
    """
    if not arith.is_prime(p1) or not arith.is_prime(p2):
        raise InputError(f"p1 = {p1} and p2 = {p2} must be prime")
    if p1 == p2:
        raise InputError("p1 and p2 must be distinct")
    if alpha1 < 1:
        raise InputError(f"alpha1 must be >= 1, got {alpha1}")
    n = p1**alpha1 * p2
    _require_pair(n, q)
    phi1 = arith.euler_phi(p1**alpha1)
    if orders.ord_prime_power(p1, alpha1, q) != phi1:
        raise InputError(
            f"formula hypotheses unmet: q = {q} is not a primitive root "
            f"modulo {p1}**{alpha1}"
        )
    if orders.ord_prime_power(p2, 1, q) != p2 - 1:
        raise InputError(
            f"formula hypotheses unmet: q = {q} is not a primitive root "
            f"modulo {p2}"
        )
    if (p2 - 1) % p1 == 0:
        raise InputError(
            f"formula hypotheses unmet: {p1} divides {p2} - 1"
        )
    d = arith.gcd(phi1, p2 - 1)
    return alpha1 * (d + 1) + 2


def sase_parameters(n: int, q: int) -> tuple[int, int, int] | None:
    """First assignment n = p1**alpha1 * p2 (smaller p1 first) for which
    total_sase's hypotheses hold, or None."""
    _require_pair(n, q)
    fac = arith.factorize(n)
    if len(fac.factors) != 2:
        return None
    (pa, ea), (pb, eb) = fac.factors
    for p1, a1, p2, e2 in ((pa, ea, pb, eb), (pb, eb, pa, ea)):
        if e2 != 1:
            continue
        try:
            total_sase(p1, a1, p2, q)
        except InputError:
            continue
        return (p1, a1, p2)
    return None


def total_kuar(fac: arith.Factorization, q: int) -> int:
    """Closed-form total for n = p1**a1 * ... * pl**al when q is a
    primitive root modulo every pi**ai, the phi(pi**ai) have pairwise gcd
    2, and (for more than one prime) every pi is odd: the total is
    (prod(2*ai + 1) + 1) / 2.
    """
    n = fac.value
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    _require_pair(n, q)
    phis = []
    for p, e in fac.factors:
        phi = arith.euler_phi(p**e)
        if orders.ord_prime_power(p, e, q) != phi:
            raise InputError(
                f"formula hypotheses unmet: q = {q} is not a primitive root "
                f"modulo {p}**{e}"
            )
        phis.append(phi)
    if len(fac.factors) >= 2:
        if fac.factors[0][0] == 2:
            raise InputError(
                "formula hypotheses unmet: 2 divides n with multiple prime "
                "factors"
            )
        for i in range(len(phis)):
            for j in range(i + 1, len(phis)):
                g = arith.gcd(phis[i], phis[j])
                if g != 2:
                    raise InputError(
                        f"formula hypotheses unmet: gcd(phi({fac.factors[i][0]}"
                        f"**{fac.factors[i][1]}), phi({fac.factors[j][0]}**"
                        f"{fac.factors[j][1]})) = {g}, need 2"
                    )
    out = 1
    for _, e in fac.factors:
        out *= 2 * e + 1
    return (out + 1) // 2


def _check_hoc_usable(status: HocStatus) -> None:
    if not status.holds:
        raise InputError(
            f"homogeneous order condition does not hold for "
            f"(n={status.n}, q={status.q}): " + "; ".join(status.violations)
        )
    if status.n % 2 == 0 and status.q % 4 == 3:
        raise InputError(
            "counting under the homogeneous order condition needs n odd or "
            "q != 3 (mod 4)"
        )


def _gcd_n_qR(status: HocStatus) -> int:
    """gcd(n, q**R - 1) assembled from the beta_i (q**R - 1 is never built)."""
    out = 1
    for pr in status.profiles:
        out *= pr.p ** min(pr.alpha, pr.beta)
    return out


def hoc_feasible(k: int, status: HocStatus) -> tuple[bool, int | None]:
    """Necessary conditions for a minimal code of dimension k to exist,
    under the homogeneous order condition. Returns (True, None) or
    (False, first failed condition number):

      1. gcd(k, rho_i) is 1 or rho_i for every i,
      2. if p_i | gcd(n, k) then rho_i | k,
      3. gcd(n, k) divides n / gcd(n, q**R - 1).

    These are the stated necessary conditions; they are known to reject
    some realized dimensions (see the known-discrepancy ledger).
    """
    _check_hoc_usable(status)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    for pr in status.profiles:
        g = arith.gcd(k, pr.rho)
        if g != 1 and g != pr.rho:
            return False, 1
    t = arith.gcd(status.n, k)
    for pr in status.profiles:
        if t % pr.p == 0 and k % pr.rho != 0:
            return False, 2
    if (status.n // _gcd_n_qR(status)) % t != 0:
        return False, 3
    return True, None


@dataclass(frozen=True)
class HocKDecomposition:
    """Index decomposition behind the per-dimension count at dimension k.

    I = primes p_i with rho_i/rho | k, J = those in I dividing k,
    I0 = I minus J; R_I = rho * prod(rho_i/rho, i in I); n1, n0 = products
    of the full prime powers over J and I0; t = gcd(k, n);
    d1 = t * gcd(n1, q**R - 1).
    """

    k: int
    t: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    I0: tuple[int, ...]
    R_I: int
    n0: int
    n1: int
    d1: int


@dataclass(frozen=True)
class HocCount:
    """Formula count at dimension k with its oracle cross-check.

    formula is the closed-form value as an exact fraction; oracle is the
    true count from the divisor route; discrepant flags any mismatch
    (including non-integral formula values). feasible / failed_condition
    report the necessary-condition test.
    """

    n: int
    q: int
    k: int
    formula: Fraction
    oracle: int
    feasible: bool
    failed_condition: int | None
    discrepant: bool
    decomposition: HocKDecomposition


def _hoc_decomposition(k: int, status: HocStatus) -> HocKDecomposition:
    assert status.rho is not None
    t = arith.gcd(k, status.n)
    I, J, I0 = [], [], []
    R_I = status.rho
    n0 = n1 = 1
    g1 = 1
    for pr in status.profiles:
        quot = pr.rho // status.rho
        if k % quot == 0:
            I.append(pr.p)
            R_I *= quot
            if k % pr.p == 0:
                J.append(pr.p)
                n1 *= pr.p**pr.alpha
                g1 *= pr.p ** min(pr.alpha, pr.beta)
            else:
                I0.append(pr.p)
                n0 *= pr.p**pr.alpha
    return HocKDecomposition(
        k=k, t=t, I=tuple(I), J=tuple(J), I0=tuple(I0),
        R_I=R_I, n0=n0, n1=n1, d1=t * g1,
    )


def hoc_count_k(k: int, status: HocStatus) -> HocCount:
    """Per-dimension closed-form count at dimension k, never raising on a
    formula failure: the result carries the predicted value, the true count,
    and a discrepancy flag. The prediction is 0 when a necessary condition
    rejects k; otherwise k = 1 gives gcd(n, q - 1) and k >= 2 gives
    gcd(n, q**R - 1) * phi(gcd(k, n)) / k.
    """
    _check_hoc_usable(status)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    feasible, failed = hoc_feasible(k, status)
    if not feasible:
        formula = Fraction(0)
    elif k == 1:
        formula = Fraction(arith.gcd(status.n, status.q - 1))
    else:
        t = arith.gcd(k, status.n)
        formula = Fraction(_gcd_n_qR(status) * arith.euler_phi(t), k)
    oracle = divisor_spectrum(status.n, status.q).entries.get(k, 0)
    return HocCount(
        n=status.n,
        q=status.q,
        k=k,
        formula=formula,
        oracle=oracle,
        feasible=feasible,
        failed_condition=failed,
        discrepant=formula != oracle,
        decomposition=_hoc_decomposition(k, status),
    )


def hoc_total(status: HocStatus) -> int:
    """Closed-form total count under the homogeneous order condition:

        (rho - 1 + prod_i((rho/rho_i) * (phi(p_i**beta_i) *
         max(alpha_i - beta_i, 0) + p_i**min(alpha_i, beta_i) - 1) + 1)) / rho

    Aborts if the value fails to be a positive integer.
    """
    _check_hoc_usable(status)
    assert status.rho is not None
    prod = Fraction(1)
    for pr in status.profiles:
        phi_beta = pr.p**pr.beta - pr.p ** (pr.beta - 1)
        inner = phi_beta * max(pr.alpha - pr.beta, 0)
        inner += pr.p ** min(pr.alpha, pr.beta) - 1
        prod *= Fraction(status.rho, pr.rho) * inner + 1
    total = (status.rho - 1 + prod) / status.rho
    if total.denominator != 1 or total <= 0:
        raise InputError(
            f"non-integral total {total} for (n={status.n}, q={status.q})"
        )
    return int(total)


def hoc_spectrum(status: HocStatus) -> Spectrum:
    """Spectrum assembled through the closed-form order of q modulo each
    divisor of n (no repeated multiplication), for pairs satisfying the
    homogeneous order condition."""
    _check_hoc_usable(status)
    entries: dict[int, int] = {1: 1}
    for d in arith.divisors(status.n):
        if d == 1:
            continue
        k = orders.hoc_order(d, status)
        entries[k] = entries.get(k, 0) + arith.euler_phi(d) // k
    return Spectrum(status.n, status.q, entries, METHOD_HOC)


def auto_spectrum(n: int, q: int) -> Spectrum:
    """Pick the best applicable method, self-verifying closed forms.

    The divisor spectrum is always computed; a closed form (radical first,
    then prime power) is adopted only when its hypotheses hold and its
    output equals the divisor result, so the reported method is both
    fast-form and verified.
    """
    ds = divisor_spectrum(n, q)
    if n == 1:
        return ds
    fac = arith.factorize(n)
    if all((q - 1) % p == 0 for p in fac.primes):
        rs = radical_spectrum(n, q)
        if rs.entries == ds.entries:
            return rs
    if len(fac.factors) == 1:
        p, e = fac.factors[0]
        ps = prime_power_spectrum(p, e, q)
        if ps.entries == ds.entries:
            return ps
    return ds
