import random
from fractions import Fraction as F

import pytest

from hgcauchy.errors import CapExceeded
from hgcauchy.hessenberg import (
    HessenbergSpec,
    PARTITION_CAP,
    determinant_sequence,
    determinant_inversion_roundtrip,
    enumerate_partition_multiplicities,
    hessenberg_det,
    trudi_sum,
    unit_lower_toeplitz_inverse,
)
from oracles import dense_determinant, partition_count, random_coefficients

SEED = 1729


def random_spec(rng, n):
    coeffs = random_coefficients(rng, n - 1, nonzero_constant=False)
    return HessenbergSpec(
        super_entry=F(rng.randint(-5, 5), rng.randint(1, 5)),
        band=tuple(coeffs),
    )


class TestDeterminant:
    def test_known_two_by_two(self):
        spec = HessenbergSpec(super_entry=F(1), band=(F(1, 2), F(1, 3)))
        # | 1/2   1  |
        # | 1/3  1/2 | has determinant 1/4 - 1/3 = -1/12
        assert hessenberg_det(spec) == F(-1, 12)

    def test_empty_matrix_is_one(self):
        assert hessenberg_det(HessenbergSpec(super_entry=F(1), band=())) == 1

    def test_matches_dense_cofactor_oracle(self):
        rng = random.Random(SEED)
        for _ in range(40):
            n = rng.randint(1, 7)
            spec = random_spec(rng, n)
            assert hessenberg_det(spec) == dense_determinant(spec.matrix())

    def test_sequence_prefix_property(self):
        rng = random.Random(SEED + 1)
        spec = random_spec(rng, 6)
        seq = determinant_sequence(spec.super_entry, list(spec.band))
        assert seq[0] == 1
        for k in range(1, 7):
            leading = HessenbergSpec(
                super_entry=spec.super_entry, band=spec.band[:k]
            )
            assert seq[k] == hessenberg_det(leading)

    def test_cauchy_band_rule_gives_second_kind_values(self):
        band = [F(1, k + 1) for k in range(1, 6)]
        seq = determinant_sequence(F(1), band)
        assert seq == [F(1), F(1, 2), F(-1, 12), F(1, 24), F(-19, 720), F(3, 160)]


class TestTrudi:
    def test_known_three_by_three(self):
        spec = HessenbergSpec(super_entry=F(1), band=(F(1, 2), F(1, 3), F(1, 4)))
        assert trudi_sum(spec) == F(1, 24)
        assert hessenberg_det(spec) == F(1, 24)

    def test_equals_determinant_on_random_specs(self):
        rng = random.Random(SEED + 2)
        for _ in range(100):
            n = rng.randint(0, 9)
            spec = random_spec(rng, n) if n else HessenbergSpec(F(1), ())
            assert trudi_sum(spec) == hessenberg_det(spec)


class TestPartitionEnumeration:
    def test_small_cases(self):
        assert enumerate_partition_multiplicities(0) == ((),)
        assert enumerate_partition_multiplicities(1) == ((1,),)
        assert enumerate_partition_multiplicities(2) == ((0, 1), (2, 0))

    def test_multiplicities_sum_to_total(self):
        for m in range(1, 12):
            for vector in enumerate_partition_multiplicities(m):
                assert sum((k + 1) * t for k, t in enumerate(vector)) == m

    def test_count_matches_partition_function(self):
        for m in range(16):
            got = len(enumerate_partition_multiplicities(m))
            assert got == partition_count(m)

    def test_lexicographic_order(self):
        vectors = enumerate_partition_multiplicities(6)
        assert vectors == tuple(sorted(vectors))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_partition_multiplicities(PARTITION_CAP + 1)
        uncapped = enumerate_partition_multiplicities(PARTITION_CAP + 1, cap=None)
        assert len(uncapped) == partition_count(PARTITION_CAP + 1)


class TestInverse:
    def test_known_bands(self):
        alpha = [F(1, 2), F(-1, 12), F(1, 24)]
        assert unit_lower_toeplitz_inverse(alpha) == [F(-1, 2), F(1, 3), F(-1, 4)]

    def test_band_convolution_identity(self):
        # sum_{j=0..k} alpha_j gamma_{k-j} = 0 with alpha_0 = gamma_0 = 1,
        # i.e. the full product A A^-1 is the identity
        rng = random.Random(SEED + 3)
        for _ in range(25):
            n = rng.randint(1, 10)
            alpha = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
            gamma = unit_lower_toeplitz_inverse(alpha)
            full_a = [F(1)] + alpha
            full_g = [F(1)] + gamma
            for k in range(1, n + 1):
                conv = sum(full_a[j] * full_g[k - j] for j in range(k + 1))
                assert conv == 0

    def test_explicit_length_argument(self):
        alpha = [F(1, 2), F(1, 3)]
        assert unit_lower_toeplitz_inverse(alpha, 2) == unit_lower_toeplitz_inverse(
            alpha
        )
        with pytest.raises(ValueError):
            unit_lower_toeplitz_inverse(alpha, 3)

    def test_signed_rule_bands(self):
        # alpha_n = det over bands R(k) makes the inverse bands (-1)^k R(k)
        for N in (1, 2, 5):
            rule = [F(N, N + k) for k in range(1, 9)]
            alpha = determinant_sequence(F(1), rule)[1:]
            gamma = unit_lower_toeplitz_inverse(alpha)
            assert gamma == [(-1) ** k * rule[k - 1] for k in range(1, 9)]

    def test_unsigned_rule_fails_at_first_band(self):
        # the same display without the sign is wrong from k = 1 on
        rule = [F(1, k + 1) for k in range(1, 5)]
        alpha = determinant_sequence(F(1), rule)[1:]
        gamma = unit_lower_toeplitz_inverse(alpha)
        assert gamma[0] == F(-1, 2)
        assert gamma[0] != rule[0]


class TestRoundTrip:
    def test_callable_rule(self):
        report = determinant_inversion_roundtrip(lambda k: F(1, k + 1), 6)
        assert report.status == "pass"

    def test_sequence_rule(self):
        report = determinant_inversion_roundtrip([F(3, 4), F(3, 5), F(3, 6)], 3)
        assert report.status == "pass"

    def test_custom_identity_and_point(self):
        report = determinant_inversion_roundtrip(
            lambda k: F(2, 2 + k), 4, identity="roundtrip-label", point=(2, 1, 4)
        )
        assert report.identity == "roundtrip-label"
        assert report.parameter_point == (2, 1, 4)
