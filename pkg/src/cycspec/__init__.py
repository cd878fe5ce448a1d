"""cycspec: dimension spectra of minimal cyclic codes over finite fields.

For gcd(n, q) = 1 the polynomial x**n - 1 splits over F_q into distinct
irreducible factors; each factor generates (as parity check) one minimal
cyclic code of length n, of dimension equal to the factor's degree. This
package computes the multiset of those dimensions by independent routes
(divisor-sum aggregation, cyclotomic coset enumeration, polynomial
factorization), evaluates closed-form counting formulas with their
hypothesis checks, audits the formulas against the oracles, and builds
generator / parity-check polynomial pairs explicitly.
"""

from .arith import Factorization, euler_phi, factorize, is_prime, is_prime_power
from .errors import BudgetError, InputError
from .orders import HocStatus, PrimeProfile, hoc_order, hoc_status, ord_mod, profile
from .spectrum import (
    Coset,
    HocCount,
    Spectrum,
    auto_spectrum,
    coset_spectrum,
    divisor_spectrum,
    hoc_count_k,
    hoc_feasible,
    hoc_spectrum,
    hoc_total,
    prime_power_spectrum,
    radical_spectrum,
    total_kuar,
    total_sase,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Coset",
    "Factorization",
    "HocCount",
    "HocStatus",
    "InputError",
    "PrimeProfile",
    "Spectrum",
    "auto_spectrum",
    "coset_spectrum",
    "divisor_spectrum",
    "euler_phi",
    "factorize",
    "hoc_count_k",
    "hoc_feasible",
    "hoc_order",
    "hoc_spectrum",
    "hoc_status",
    "hoc_total",
    "is_prime",
    "is_prime_power",
    "ord_mod",
    "prime_power_spectrum",
    "profile",
    "radical_spectrum",
    "total_kuar",
    "total_sase",
]
