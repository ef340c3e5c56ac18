from fractions import Fraction
from math import factorial

import pytest

from hurwitz_strata.errors import DomainError
from hurwitz_strata.hurwitz import (
    CoveringSpec,
    aut_of_list,
    closed_hurwitz,
    corollary_caustic,
    corollary_maxwell,
    degree_to_hurwitz,
    elsv_reference,
    oracle_classes,
    simple_count,
)
from hurwitz_strata.oracle import ClassTuple, hurwitz_oracle
from hurwitz_strata.partitions import Partition as P, aut_order, enumerate_partitions
from hurwitz_strata.strata import caustic_degree, maxwell_degree


@pytest.mark.parametrize(
    "kappa,mu,r", [(P([1, 1, 1]), P([3]), 2), (P([4]), P([2, 2]), 1), (P([1, 1, 1, 1]), P([2, 2]), 4)]
)
def test_simple_count(kappa, mu, r):
    assert simple_count(kappa, mu) == r


def test_simple_count_errors():
    with pytest.raises(DomainError):
        simple_count(P([2]), P([1]))


@pytest.mark.parametrize(
    "parts,expected",
    [([P([3, 1]), P([3, 1])], 2), ([P([1, 1, 1]), P([3])], 1), ([P([2]), P([2]), P([2])], 6)],
)
def test_aut_of_list(parts, expected):
    assert aut_of_list(parts) == expected


def test_degree_to_hurwitz_examples():
    spec = CoveringSpec.genus0(P([1, 1, 1]), P([3]))
    assert degree_to_hurwitz(3, spec, "printed") == 1
    spec = CoveringSpec.genus0(P([3, 1]), P([3, 1]))
    assert degree_to_hurwitz(3, spec, "printed") == Fraction(1, 2)
    assert degree_to_hurwitz(3, spec, "calibrated") == 6
    spec = CoveringSpec.genus0(P([1] * 4), P([3, 1]))
    assert degree_to_hurwitz(27, spec, "printed") == degree_to_hurwitz(27, spec, "calibrated") == 27


def test_degree_to_hurwitz_bad_mode():
    with pytest.raises(DomainError):
        degree_to_hurwitz(1, CoveringSpec.genus0(P([2]), P([2])), "other")


@pytest.mark.parametrize(
    "kappa,expected", [(P([1, 1, 1]), 1), (P([1] * 5), 1620), (P([2, 1]), Fraction(1, 6))]
)
def test_corollary_caustic(kappa, expected):
    assert corollary_caustic(kappa) == expected


def test_corollary_caustic_calibrated_21():
    assert closed_hurwitz("caustic", P([2, 1]), "calibrated").value == 1


@pytest.mark.parametrize("kappa,expected", [(P([1] * 4), 4), (P([1] * 5), 390)])
def test_corollary_maxwell(kappa, expected):
    assert corollary_maxwell(kappa) == expected


def test_corollary_maxwell_negative_is_flagged():
    # |Aut((2,2),(2,2))| * 2! / 4! * (-3)
    res = closed_hurwitz("maxwell", P([2, 2]), "printed")
    assert res.value == Fraction(-1, 2)
    assert res.warnings


def test_corollary_domain():
    with pytest.raises(DomainError):
        corollary_caustic(P([1, 1]))
    with pytest.raises(DomainError):
        corollary_maxwell(P([2, 1]))


@pytest.mark.parametrize(
    "mu,expected", [(P([2]), Fraction(1, 2)), (P([2, 2]), 12), (P([3, 1]), 27)]
)
def test_elsv_reference(mu, expected):
    assert elsv_reference(mu) == expected
    assert elsv_reference(mu, labeled=True) == expected * aut_order(mu)


def test_modes_coincide_iff_trivial_automorphisms():
    for n in range(3, 8):
        for kappa in enumerate_partitions(n):
            res_p = closed_hurwitz("caustic", kappa, "printed").value
            res_c = closed_hurwitz("caustic", kappa, "calibrated").value
            mu = P([3] + [1] * (n - 3))
            trivial = aut_order(kappa) == factorial(n) and aut_of_list([kappa, mu]) == 1
            if trivial:
                assert res_p == res_c
            elif res_c != 0:
                assert res_p != res_c


@pytest.mark.parametrize("n", range(3, 9))
def test_printed_caustic_matches_elsv(n):
    kappa = P([1] * n)
    spec = CoveringSpec.genus0(kappa, P([3] + [1] * (n - 3)))
    assert degree_to_hurwitz(caustic_degree(kappa), spec, "printed") == elsv_reference(spec.mu)


def test_oracle_classes():
    classes = oracle_classes(P([3, 1]), P([3, 1]))
    assert classes == [P([3, 1]), P([3, 1]), P([2, 1, 1]), P([2, 1, 1])]


@pytest.mark.parametrize("kappa", [P([1] * 3), P([1] * 4), P([1] * 5), P([2, 1]), P([3, 1])])
def test_calibrated_caustic_matches_oracle(kappa):
    res = closed_hurwitz("caustic", kappa, "calibrated")
    h, genus = hurwitz_oracle(ClassTuple(oracle_classes(kappa, res.spec.mu)))
    assert genus == 0
    assert res.value == h


def test_maxwell_printed_disagrees_with_oracle():
    kappa = P([1] * 4)
    h, _ = hurwitz_oracle(ClassTuple(oracle_classes(kappa, P([2, 2]))))
    assert h == 12
    assert maxwell_degree(kappa) == corollary_maxwell(kappa) == 4
