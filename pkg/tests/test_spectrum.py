"""Dimension spectra: the divisor-sum count, the coset oracle, and the
closed forms, cross-checked against each other on frozen examples and
sweeps."""

from fractions import Fraction

import pytest

from cycspec.arith import factorize, gcd, is_prime_power
from cycspec.errors import BudgetError, InputError
from cycspec.orders import hoc_status
from cycspec.spectrum import (
    Spectrum,
    auto_spectrum,
    coset_spectrum,
    divisor_spectrum,
    hoc_count_k,
    hoc_feasible,
    hoc_spectrum,
    hoc_total,
    prime_power_spectrum,
    radical_parameters,
    radical_spectrum,
    sase_parameters,
    total_kuar,
    total_sase,
)

# (n, q) -> entries, pinned against the coset and factorization oracles.
KNOWN_SPECTRA = {
    (1, 2): {1: 1},
    (7, 2): {1: 1, 3: 2},
    (9, 2): {1: 1, 2: 1, 6: 1},
    (15, 2): {1: 1, 2: 1, 4: 3},
    (45, 2): {1: 1, 2: 1, 4: 3, 6: 1, 12: 2},
    (8, 3): {1: 2, 2: 3},
    (16, 3): {1: 2, 2: 3, 4: 2},
    (32, 3): {1: 2, 2: 3, 4: 2, 8: 2},
    (8, 5): {1: 4, 2: 2},
    (16, 7): {1: 2, 2: 7},
    (24, 7): {1: 6, 2: 9},
    (13, 3): {1: 1, 3: 4},
    (11, 4): {1: 1, 5: 2},
}


@pytest.mark.parametrize("n,q", sorted(KNOWN_SPECTRA))
def test_divisor_spectrum_known_values(n, q):
    s = divisor_spectrum(n, q)
    assert s.entries == KNOWN_SPECTRA[(n, q)]
    assert s.method == "divisor"


@pytest.mark.parametrize("n,q", sorted(KNOWN_SPECTRA))
def test_coset_spectrum_known_values(n, q):
    s, cosets = coset_spectrum(n, q)
    assert s.entries == KNOWN_SPECTRA[(n, q)]
    assert sorted(c.size for c in cosets) == sorted(
        k for k, c in s.entries.items() for _ in range(c)
    )
    covered = sorted(x for c in cosets for x in c.elements)
    assert covered == list(range(n))


def test_coset_members_example():
    _, cosets = coset_spectrum(8, 3)
    assert [c.elements for c in cosets] == [(0,), (1, 3), (2, 6), (4,), (5, 7)]
    _, cosets = coset_spectrum(7, 2)
    assert [c.elements for c in cosets] == [(0,), (1, 2, 4), (3, 5, 6)]
    assert [c.representative for c in cosets] == [0, 1, 3]


def test_spectrum_totals():
    assert divisor_spectrum(45, 2).total == 8
    assert divisor_spectrum(225, 2).total == 13
    assert divisor_spectrum(15, 2).total == 5
    assert divisor_spectrum(8, 3).total == 5
    assert divisor_spectrum(8, 5).total == 6


def test_spectrum_rejects_shared_factor():
    with pytest.raises(InputError, match=r"gcd\(n,q\) must be 1"):
        divisor_spectrum(6, 2)
    with pytest.raises(InputError):
        coset_spectrum(9, 3)


def test_spectrum_rejects_non_prime_power_q():
    with pytest.raises(InputError, match="prime power"):
        divisor_spectrum(5, 6)


def test_spectrum_validation():
    with pytest.raises(InputError):
        Spectrum(10, 3, {1: 1, 2: 2}, "divisor")  # mass 5, not 10
    with pytest.raises(InputError):
        Spectrum(4, 3, {2: 2}, "divisor")  # no dimension-1 entry


def test_coset_budget_refusal():
    with pytest.raises(BudgetError, match="enumeration too large"):
        coset_spectrum(101, 2, budget=100)


def test_coset_equals_divisor_sweep():
    # The two independent counting routes across the whole ledger domain.
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25):
        for n in range(1, 3001):
            if gcd(n, q) != 1:
                continue
            ds = divisor_spectrum(n, q)
            cs, _ = coset_spectrum(n, q)
            assert cs.entries == ds.entries, (n, q)
            assert sum(k * c for k, c in ds.entries.items()) == n
            assert ds.entries[1] == gcd(n, q - 1)


@pytest.mark.parametrize(
    "p,alpha,q,expected",
    [
        (3, 2, 2, {1: 1, 2: 1, 6: 1}),
        (2, 3, 3, {1: 2, 2: 3}),
        (2, 4, 3, {1: 2, 2: 3, 4: 2}),
        (2, 5, 3, {1: 2, 2: 3, 4: 2, 8: 2}),
        (2, 4, 7, {1: 2, 2: 7}),
        (2, 3, 5, {1: 4, 2: 2}),
        (7, 1, 2, {1: 1, 3: 2}),
        (3, 4, 5, {1: 1, 2: 1, 6: 1, 18: 1, 54: 1}),
    ],
)
def test_prime_power_spectrum_examples(p, alpha, q, expected):
    s = prime_power_spectrum(p, alpha, q)
    assert s.entries == expected
    assert s.entries == divisor_spectrum(p**alpha, q).entries


def test_prime_power_spectrum_sweep():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        for n in range(2, 2049):
            pe = is_prime_power(n)
            if pe is None or gcd(n, q) != 1:
                continue
            s = prime_power_spectrum(pe[0], pe[1], q)
            assert s.entries == divisor_spectrum(n, q).entries, (n, q)


def test_prime_power_spectrum_rejects_bad_input():
    with pytest.raises(InputError):
        prime_power_spectrum(4, 2, 3)  # base not prime
    with pytest.raises(InputError):
        prime_power_spectrum(2, 2, 6)


def test_radical_parameters_cases():
    assert radical_parameters(8, 5).case == 1
    rp = radical_parameters(8, 3)
    assert (rp.case, rp.r) == (2, 2)
    # A multiple of 4 but not 8 stays in case 1 even for q = 3 mod 4.
    assert radical_parameters(4, 3).case == 1
    assert radical_parameters(24, 7).case == 2


@pytest.mark.parametrize(
    "n,q,expected",
    [
        (8, 5, {1: 4, 2: 2}),
        (8, 3, {1: 2, 2: 3}),
        (16, 3, {1: 2, 2: 3, 4: 2}),
        (32, 3, {1: 2, 2: 3, 4: 2, 8: 2}),
        (24, 7, {1: 6, 2: 9}),
        (4, 3, {1: 2, 2: 1}),
        (10, 11, {1: 10}),
        (9, 7, {1: 3, 3: 2}),
    ],
)
def test_radical_spectrum_examples(n, q, expected):
    s = radical_spectrum(n, q)
    assert s.entries == expected
    assert s.entries == divisor_spectrum(n, q).entries


def test_radical_spectrum_requires_radical_divides_q_minus_1():
    with pytest.raises(InputError):
        radical_spectrum(7, 2)


def test_radical_spectrum_sweep():
    for q in (3, 4, 5, 7, 8, 9, 11, 13, 16, 25):
        for n in range(2, 1001):
            if gcd(n, q) != 1:
                continue
            if any((q - 1) % p != 0 for p in factorize(n).primes):
                continue
            s = radical_spectrum(n, q)
            assert s.entries == divisor_spectrum(n, q).entries, (n, q)


def test_total_sase_examples():
    assert sase_parameters(15, 2) == (3, 1, 5)
    assert total_sase(3, 1, 5, 2) == 5
    assert total_sase(7, 1, 3, 5) == 5  # n = 21 over F_5
    assert total_sase(3, 1, 2, 5) == 4  # n = 6 over F_5
    assert divisor_spectrum(21, 5).total == 5
    assert divisor_spectrum(6, 5).total == 4


def test_total_sase_rejects_unmet_hypotheses():
    with pytest.raises(InputError, match="primitive root"):
        total_sase(7, 1, 3, 2)  # ord_7(2) = 3 < 6
    with pytest.raises(InputError, match="divides"):
        total_sase(3, 1, 7, 5)  # 3 divides 7 - 1


def test_total_sase_sweep():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 1001):
            if gcd(n, q) != 1:
                continue
            params = sase_parameters(n, q)
            if params is None:
                continue
            p1, alpha1, p2 = params
            assert total_sase(p1, alpha1, p2, q) == divisor_spectrum(n, q).total, (n, q)


def test_total_kuar_examples():
    assert total_kuar(factorize(45), 2) == 8
    assert total_kuar(factorize(9), 2) == 3
    assert total_kuar(factorize(25), 3) == 3
    assert divisor_spectrum(45, 2).total == 8


def test_total_kuar_rejects_unmet_hypotheses():
    # ord_9(2) = 6 = phi(9) and ord_13(2) = 12 = phi(13), but the totient
    # gcd is 6, outside the scope where the count is reliable.
    with pytest.raises(InputError):
        total_kuar(factorize(117), 2)
    with pytest.raises(InputError, match="multiple prime factors"):
        total_kuar(factorize(20), 3)
    with pytest.raises(InputError):
        total_kuar(factorize(7), 2)  # ord_7(2) = 3 is not maximal


def test_total_kuar_sweep():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 1001):
            if gcd(n, q) != 1:
                continue
            try:
                t = total_kuar(factorize(n), q)
            except InputError:
                continue
            assert t == divisor_spectrum(n, q).total, (n, q)


def test_hoc_feasibility_conditions():
    st = hoc_status(45, 2)
    assert hoc_feasible(12, st) == (True, None)
    assert hoc_feasible(1, st) == (True, None)
    assert hoc_feasible(5, st) == (False, 2)
    assert hoc_feasible(2, st) == (False, 1)


def test_hoc_count_k_flagged_example():
    st = hoc_status(45, 2)
    hc = hoc_count_k(12, st)
    assert hc.formula == Fraction(5, 2)
    assert hc.oracle == 2
    assert hc.feasible
    assert hc.discrepant
    d = hc.decomposition
    assert (d.t, d.I, d.J, d.I0) == (3, (3, 5), (3,), (5,))
    assert (d.R_I, d.n0, d.n1, d.d1) == (4, 5, 9, 9)


def test_hoc_count_k_infeasible_realized_dimension():
    # Dimension 2 is realized at (45, 2) but the necessary conditions
    # reject it, so the machinery predicts 0 and the flag is raised.
    st = hoc_status(45, 2)
    hc = hoc_count_k(2, st)
    assert hc.formula == 0
    assert hc.oracle == 1
    assert not hc.feasible
    assert hc.failed_condition == 1
    assert hc.discrepant


def test_hoc_count_k_infeasible_unrealized_dimension():
    # Dimension 5 is neither predicted nor realized: no discrepancy.
    st = hoc_status(45, 2)
    hc = hoc_count_k(5, st)
    assert hc.formula == 0
    assert hc.oracle == 0
    assert not hc.discrepant


def test_hoc_count_k_clean_example():
    st = hoc_status(225, 2)
    hc = hoc_count_k(20, st)
    assert hc.formula == 3
    assert hc.oracle == 3
    assert not hc.discrepant


def test_hoc_count_k_dimension_one():
    st = hoc_status(45, 2)
    hc = hoc_count_k(1, st)
    assert hc.formula == 1 == hc.oracle


def test_hoc_total_examples():
    assert hoc_total(hoc_status(45, 2)) == 8
    assert hoc_total(hoc_status(225, 2)) == 13
    assert hoc_total(hoc_status(15, 2)) == 5
    assert hoc_total(hoc_status(9, 2)) == 3


def test_hoc_spectrum_example():
    s = hoc_spectrum(hoc_status(45, 2))
    assert s.entries == KNOWN_SPECTRA[(45, 2)]
    assert s.method == "hoc"


def test_hoc_rejects_non_holding_status():
    st = hoc_status(21, 2)
    with pytest.raises(InputError, match="does not hold"):
        hoc_total(st)
    with pytest.raises(InputError):
        hoc_count_k(3, st)


def test_hoc_total_and_spectrum_sweep():
    for q in (2, 3, 4, 5, 9):
        for n in range(2, 1501):
            if gcd(n, q) != 1:
                continue
            st = hoc_status(n, q)
            if not st.holds or (n % 2 == 0 and q % 4 == 3):
                continue
            ds = divisor_spectrum(n, q)
            assert hoc_total(st) == ds.total, (n, q)
            assert hoc_spectrum(st).entries == ds.entries, (n, q)


def test_auto_spectrum_method_selection():
    assert auto_spectrum(9, 2).method == "prime-power"
    assert auto_spectrum(8, 5).method == "radical"
    assert auto_spectrum(14, 3).method == "divisor"
    assert auto_spectrum(45, 2).method == "divisor"
    assert auto_spectrum(1, 3).method == "divisor"


def test_auto_spectrum_always_matches_divisor():
    for q in (2, 3, 5, 9):
        for n in range(1, 301):
            if gcd(n, q) != 1:
                continue
            assert auto_spectrum(n, q).entries == divisor_spectrum(n, q).entries
