"""Smoke tests for the rootmult extension module."""

from fractions import Fraction

import rootmult as rm


def test_partitions():
    assert rm.partitions_of(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(rm.partitions_of(10)) == 42


def test_class_data():
    assert rm.class_size([2, 1, 1]) == 6
    assert rm.centralizer_order([2, 1, 1]) == 4


def test_number_theory():
    assert rm.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert rm.divisor_sigma(1, 12) == 28
    assert rm.odd_divisor_count(6) == 2
    assert rm.stirling2(4, 2) == 7
    assert rm.stirling1(4, 2) == 11
    assert rm.harmonic(4) == Fraction(25, 12)


def test_characters():
    assert rm.mn_character([2, 1], [3]) == -1
    assert rm.mn_character([4], [2, 1, 1]) == 1
    assert rm.dimension([2, 2]) == 2


def test_cycle_statistics():
    assert rm.power_cycle_type([6], 4) == [3, 3]
    assert rm.power_moment([(2, 2)], 4) == Fraction(3, 4)
    assert rm.root_count_power_moment(2, 2, 4) == 7


def test_multiplicity_paths_agree():
    for lam in ([3, 1], [2, 2], [2, 1, 1]):
        assert rm.multiplicity(lam, 2, "brute") == rm.multiplicity(lam, 2, "closed_form") == 1
    assert rm.multiplicity([9, 1], 6) == 3
    main, scale = rm.multiplicity_asymptotic([1], 6)
    assert main == 4 and scale == 1


def test_multiplicity_mu_handles_huge_n():
    assert rm.multiplicity_mu([1], 10, 6) == 3
    assert rm.multiplicity_mu([2, 1], 3_000_000_000, 1_000_000_000) == 462962766208101574


def test_error_term_bound():
    assert rm.error_term_bound([1], 7, 20) == Fraction(1)


def test_empirical_moment_deterministic():
    a = rm.empirical_moment([(1, 1)], 50, 6, trials=2000, seed=5)
    b = rm.empirical_moment([(1, 1)], 50, 6, trials=2000, seed=5)
    assert a == b
    assert abs(a["estimate"] - 4.0) <= 6 * a["standard_error"]


def test_verify_suite():
    result = rm.verify("stirling")
    assert result["failures"] == 0
