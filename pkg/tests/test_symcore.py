from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hkgrass.symcore import (Partition, SchurVector, alternant_coefficients,
                             character_decompose, exterior_power_character,
                             lr_coefficient, lr_multiply, partitions, partitions_in_box,
                             schur_dimension, schur_weights, weyl_dimension,
                             wedge_plethysm)
from oracles import lr_by_pieri, ssyt_count

SMALL = [lam for n in range(7) for lam in partitions(n)]


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))


@pytest.mark.parametrize("bad", [(1, 2), (2, -1)])
def test_partition_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        Partition(bad)


@given(st.sampled_from(SMALL))
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert len(partitions_in_box(3, 3)) == comb(6, 3)


def test_lr_agrees_with_pieri_oracle_on_all_small_pairs():
    for lam in SMALL:
        for mu in SMALL:
            ours = {tuple(k): v for k, v in lr_multiply(lam, mu).terms.items()}
            assert ours == dict(lr_by_pieri(lam, mu)), (lam, mu)


@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_lr_commutes(lam, mu):
    assert lr_multiply(lam, mu) == lr_multiply(mu, lam)


@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.integers(1, 8))
def test_lr_dimension_is_multiplicative(lam, mu, n):
    prod = lr_multiply(lam, mu)
    assert prod.dimension(n) == schur_dimension(lam, n) * schur_dimension(mu, n)


def test_lr_box_truncation_drops_outside_terms():
    full = lr_multiply((2, 1), (2, 1))
    boxed = lr_multiply((2, 1), (2, 1), max_rows=3, max_cols=3)
    assert boxed.terms == {nu: c for nu, c in full.terms.items() if nu.fits_in_box(3, 3)}


def test_lr_coefficient_classic():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


@given(st.sampled_from([lam for lam in SMALL if lam.weight <= 5]), st.integers(1, 4))
@settings(max_examples=60)
def test_schur_dimension_counts_tableaux(lam, n):
    assert schur_dimension(lam, n) == ssyt_count(lam, n)
    assert sum(schur_weights(lam, n).values()) == schur_dimension(lam, n)


def test_weyl_dimension_handles_negative_weights():
    assert weyl_dimension((1, 0, 0)) == 3
    assert weyl_dimension((0, 0, -1)) == 3
    assert weyl_dimension((2, 2, 2)) == 1
    assert weyl_dimension((1, 0, -1)) == 8


def test_alternant_reads_off_schur_coefficients():
    # s_(1) * s_(1) in two variables: weights (2,0), (1,1) x2, (0,2)
    char = np.zeros((3, 3), dtype=np.int64)
    char[2, 0] = char[0, 2] = 1
    char[1, 1] = 2
    coeffs = alternant_coefficients(char, np.array([(2, 0), (1, 1)]))
    assert list(coeffs) == [1, 1]


def test_character_decompose_wedge_of_wedge():
    std = {tuple(int(i == j) for j in range(4)): 1 for i in range(4)}
    w2 = exterior_power_character(std, 2)
    assert character_decompose(w2, 4) == {(1, 1, 0, 0): 1}
    w2w2 = exterior_power_character(w2, 2)
    assert character_decompose(w2w2, 4) == {(2, 1, 1, 0): 1}


@pytest.mark.parametrize("i", range(21))
def test_plethysm_dimension_sum_n6(i):
    assert wedge_plethysm(i, 6).dimension(6) == comb(20, i)


@pytest.mark.parametrize("i", range(11))
def test_plethysm_duality_n6(i):
    # wedge^{20-i} U = (wedge^i U)^* (x) det U, and det(wedge^3 C^6) = det^10
    low = wedge_plethysm(i, 6).terms
    high = wedge_plethysm(20 - i, 6).terms
    flipped = {Partition(10 - x for x in reversed(lam.padded(6))): c for lam, c in low.items()}
    assert high == flipped


def test_plethysm_small_cases():
    assert wedge_plethysm(2, 6) == SchurVector({(2, 2, 1, 1): 1, (1, 1, 1, 1, 1, 1): 1})
    assert wedge_plethysm(1, 5) == SchurVector.single((1, 1, 1))
    assert wedge_plethysm(0, 6) == SchurVector.single(())
    assert wedge_plethysm(3, 4).dimension(4) == comb(4, 3)


def test_plethysm_rejects_out_of_range():
    with pytest.raises(ValueError):
        wedge_plethysm(21, 6)
    with pytest.raises(ValueError):
        wedge_plethysm(-1, 6)


def test_schur_vector_rejects_mixed_weights():
    with pytest.raises(ValueError):
        SchurVector({(1,): 1, (2,): 1})
