from fractions import Fraction as F
from math import factorial

import pytest

from hgcauchy.cauchy import (
    CauchyTable,
    c_closed_form,
    c_trudi_printed_variant,
    c_via_compositions,
    c_via_determinant,
    c_via_recurrence,
    c_via_series,
    c_via_trudi,
    classical_bernoulli_det,
    classical_euler_det,
    hgc_generating_series,
    ratio_inversion,
)
from hgcauchy.errors import CapExceeded
from hgcauchy.hessenberg import determinant_sequence
from hgcauchy.series import TruncatedSeries, log1p_series

ALL_METHODS = (
    c_via_series,
    c_via_recurrence,
    c_via_determinant,
    c_via_compositions,
    c_via_trudi,
)


class TestKnownValues:
    def test_classical_table(self):
        table = c_via_series(1, 5)
        assert table.values == (F(1), F(1, 2), F(-1, 6), F(1, 4), F(-19, 30), F(9, 4))

    def test_classical_normalized(self):
        assert c_via_series(1, 5).normalized() == [
            F(1),
            F(1, 2),
            F(-1, 12),
            F(1, 24),
            F(-19, 720),
            F(3, 160),
        ]

    def test_n_two_table(self):
        table = c_via_recurrence(2, 3)
        assert table.values[1] == F(2, 3)
        assert table.values[2] == F(-1, 9)
        assert table.values[3] == F(8, 45)

    def test_first_value_rule(self):
        for N in range(1, 8):
            assert c_via_series(N, 1).values[1] == F(N, N + 1)

    def test_zero_length_table(self):
        assert c_via_recurrence(3, 0).values == (F(1),)


class TestTableValidation:
    def test_rejects_wrong_leading_value(self):
        with pytest.raises(ValueError):
            CauchyTable(N=1, r=1, n_max=0, values=(F(2),), method="series")

    def test_rejects_wrong_first_index(self):
        with pytest.raises(ValueError):
            CauchyTable(
                N=1, r=1, n_max=1, values=(F(1), F(1, 3)), method="series"
            )

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            CauchyTable(N=1, r=1, n_max=2, values=(F(1), F(1, 2)), method="series")

    def test_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            CauchyTable(
                N=1, r=1, n_max=1, values=(F(1), F(1, 2)), method="guesswork"
            )

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            c_via_series(0, 3)
        with pytest.raises(ValueError):
            c_via_series(1, -1)


class TestGeneratingSeries:
    def test_coefficients_are_alternating_ratios(self):
        s = hgc_generating_series(3, 5)
        for j in range(6):
            assert s.coefficient(j) == F((-1) ** j * 3, 3 + j)


class TestMethodAgreement:
    def test_all_methods_identical(self):
        for N in range(1, 7):
            reference = c_via_series(N, 12)
            for method in ALL_METHODS[1:]:
                assert method(N, 12).values == reference.values

    def test_method_labels(self):
        assert c_via_series(1, 2).method == "series"
        assert c_via_trudi(1, 2).method == "trudi"


class TestDefiningRecurrence:
    def test_residual_vanishes(self):
        for N in range(1, 6):
            table = c_via_series(N, 15)
            for n in range(1, 16):
                residual = sum(
                    F((-1) ** i, 1)
                    * table.values[i]
                    / ((N + n - i) * factorial(i))
                    for i in range(n + 1)
                )
                assert residual == 0


class TestSignPattern:
    def test_consecutive_values_alternate(self):
        for N in range(1, 7):
            values = c_via_series(N, 20).values
            for n in range(1, 20):
                assert values[n] * values[n + 1] < 0


class TestSpecialization:
    def test_second_kind_normalization(self):
        # c(1, n)/n! are the coefficients of the reciprocal of log(1+x)/x
        log_over_x = TruncatedSeries(log1p_series(13).coefficients[1:])
        oracle = log_over_x.reciprocal()
        table = c_via_recurrence(1, 12).normalized()
        for n in range(13):
            assert table[n] == oracle.coefficient(n)


class TestClosedForms:
    def test_small_indices(self):
        for N in range(1, 7):
            table = c_via_series(N, 5)
            for n in range(6):
                assert c_closed_form(N, n) == table.values[n]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            c_closed_form(1, 6)


class TestRatioInversion:
    def test_grid(self):
        for N in range(1, 7):
            report = ratio_inversion(N, 15)
            assert report.status == "pass", report

    def test_middle_ratio_value(self):
        # the n-th determinant over normalized bands returns N/(N+n)
        bands = c_via_series(5, 10).normalized()[1:]
        dets = determinant_sequence(F(1), bands)
        assert dets[10] == F(1, 3)


class TestPrintedVariant:
    def test_small_values(self):
        assert c_trudi_printed_variant(1, 0) == F(1)
        # the rearranged binomial top vanishes against the lone partition of
        # 1, so the n = 1 term drops out entirely
        assert c_trudi_printed_variant(1, 1) == F(0)

    def test_counterexample_at_n_two(self):
        literal = c_trudi_printed_variant(1, 2)
        assert literal == F(-2, 3)
        assert literal != c_via_series(1, 2).values[2]


class TestCaps:
    def test_compositions_cap(self):
        with pytest.raises(CapExceeded):
            c_via_compositions(1, 23)

    def test_trudi_cap(self):
        with pytest.raises(CapExceeded):
            c_via_trudi(1, 25)

    def test_uncapped_small_case_runs(self):
        assert c_via_compositions(1, 5, cap=None).values == c_via_series(1, 5).values


class TestClassicalDeterminants:
    def test_bernoulli_values(self):
        assert classical_bernoulli_det(12) == [
            F(1),
            F(-1, 2),
            F(1, 6),
            F(0),
            F(-1, 30),
            F(0),
            F(1, 42),
            F(0),
            F(-1, 30),
            F(0),
            F(5, 66),
            F(0),
            F(-691, 2730),
        ]

    def test_euler_values(self):
        assert classical_euler_det(6) == [
            F(1),
            F(-1),
            F(5),
            F(-61),
            F(1385),
            F(-50521),
            F(2702765),
        ]
