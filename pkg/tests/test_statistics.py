# tests/test_statistics.py

import math

import numpy as np
import pytest

from faht.core import Community, InvariantError, UndefinedStatisticError
from faht.eval import (
    McNemarTable,
    PrequentialRecord,
    boundary_correlations,
    correlation_matrix,
    mcnemar,
    mcnemar_table,
    pearson,
)
from faht.eval.statistics import CHI2_CRITICAL_P001, encode_column


def record(i, deprived, true, predicted):
    return PrequentialRecord(i, true, predicted, Community.of(deprived, true == "granted"))


class TestMcNemar:
    """Test McNemar's test."""

    def test_adult_table(self):
        result = mcnemar(McNemarTable(527, 310, 523, 14832))
        assert result.statistic == pytest.approx(53.954, abs=0.01)
        assert result.df == 1
        assert result.significant_p001
        assert result.pvalue < 0.001

    def test_census_table(self):
        result = mcnemar(McNemarTable(100, 963, 564, 100000))
        assert result.statistic == pytest.approx(103.74, abs=0.01)

    @pytest.mark.parametrize("b", [1, 7, 250])
    def test_equal_discordance(self, b):
        assert mcnemar(McNemarTable(3, b, b, 9)).statistic == pytest.approx(1 / (2 * b))

    def test_symmetric(self):
        table = McNemarTable(40, 17, 31, 200)
        assert mcnemar(table).statistic == pytest.approx(mcnemar(table.swapped()).statistic)

    def test_no_discordant_pairs(self):
        with pytest.raises(UndefinedStatisticError):
            mcnemar(McNemarTable(10, 0, 0, 5))

    def test_negative_cell(self):
        with pytest.raises(InvariantError):
            McNemarTable(1, -1, 0, 0)

    def test_not_significant(self):
        assert not mcnemar(McNemarTable(10, 5, 6, 10)).significant_p001
        assert CHI2_CRITICAL_P001 == 10.83


class TestMcNemarTable:
    """Test cross-tabulation of two runs."""

    def test_deprived_only(self):
        a = [
            record(0, True, "granted", "granted"),
            record(1, True, "rejected", "granted"),
            record(2, True, "rejected", "rejected"),
            record(3, False, "granted", "granted"),
        ]
        b = [
            record(0, True, "granted", "granted"),
            record(1, True, "rejected", "rejected"),
            record(2, True, "rejected", "granted"),
            record(3, False, "granted", "rejected"),
        ]
        table = mcnemar_table(a, b, "granted")
        assert table.to_dict() == {
            "both_positive": 1,
            "a_positive_b_negative": 1,
            "a_negative_b_positive": 1,
            "both_negative": 0,
        }
        assert mcnemar_table(a, b, "granted", deprived=None).b == 2
        assert mcnemar_table(a, b, "granted", deprived=False).b == 1

    def test_length_mismatch(self):
        with pytest.raises(InvariantError):
            mcnemar_table([record(0, True, "granted", "granted")], [], "granted")

    def test_misaligned(self):
        with pytest.raises(InvariantError):
            mcnemar_table(
                [record(0, True, "granted", "granted")],
                [record(1, True, "granted", "granted")],
                "granted",
            )


class TestPearson:
    """Test the correlation coefficient."""

    def test_identity(self):
        x = [1.0, 2.0, 4.0, 8.0]
        assert pearson(x, x) == pytest.approx(1.0)

    def test_negation(self):
        x = [1.0, 2.0, 4.0, 8.0]
        assert pearson(x, [-v for v in x]) == pytest.approx(-1.0)

    def test_affine_invariance(self):
        rng = np.random.default_rng(0)
        x = rng.normal(size=200)
        y = 0.3 * x + rng.normal(size=200)
        r = pearson(x.tolist(), y.tolist())
        assert pearson((3 * x + 7).tolist(), (0.5 * y - 2).tolist()) == pytest.approx(r, abs=1e-9)

    def test_skips_incomplete_pairs(self):
        assert pearson([1.0, None, 2.0, 3.0], [2.0, 5.0, 4.0, float("nan")]) == pytest.approx(1.0)

    def test_zero_variance(self):
        with pytest.raises(UndefinedStatisticError):
            pearson([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_too_few_pairs(self):
        with pytest.raises(UndefinedStatisticError):
            pearson([1.0, None], [2.0, 3.0])

    def test_length_mismatch(self):
        with pytest.raises(InvariantError):
            pearson([1.0, 2.0], [1.0])


class TestCorrelationMatrix:
    """Test attribute correlation tables."""

    def _instances(self, make_instance):
        return [
            make_instance("female", "red", 20.0, "rejected"),
            make_instance("female", "blue", 30.0, "rejected"),
            make_instance("male", "red", 40.0, "granted"),
            make_instance("male", "blue", None, "granted"),
        ]

    def test_encodes_by_domain_position(self, toy_schema, make_instance):
        instances = self._instances(make_instance)
        assert encode_column(instances, toy_schema, "sex") == [0.0, 0.0, 1.0, 1.0]
        assert encode_column(instances, toy_schema, "class") == [0.0, 0.0, 1.0, 1.0]
        assert encode_column(instances, toy_schema, "age") == [20.0, 30.0, 40.0, None]

    def test_encoding_override(self, toy_schema, make_instance):
        instances = self._instances(make_instance)
        codes = encode_column(instances, toy_schema, "sex", {"sex": {"female": 1.0, "male": 0.0}})
        assert codes == [1.0, 1.0, 0.0, 0.0]

    def test_matrix(self, toy_schema, make_instance):
        matrix = correlation_matrix(self._instances(make_instance), toy_schema, ["sex", "color"])
        assert list(matrix.index) == ["sex", "color", "class"]
        assert matrix.loc["sex", "class"] == pytest.approx(1.0)
        assert matrix.loc["class", "sex"] == pytest.approx(1.0)
        assert matrix.loc["sex", "color"] == pytest.approx(0.0, abs=1e-12)
        assert matrix.loc["color", "color"] == 1.0

    def test_undefined_cell_is_nan(self, toy_schema, make_instance):
        instances = [make_instance("male", "red", 1.0, label) for label in ("granted", "rejected")]
        matrix = correlation_matrix(instances, toy_schema, ["sex"])
        assert math.isnan(matrix.loc["sex", "class"])


class TestBoundaryCorrelations:
    """Test correlations among group, predicted and actual outcome."""

    def test_deprived_predicted_negative(self, toy_schema):
        records = [
            record(0, True, "granted", "rejected"),
            record(1, True, "rejected", "rejected"),
            record(2, False, "granted", "granted"),
            record(3, False, "rejected", "granted"),
        ]
        matrix = boundary_correlations(records, toy_schema)
        assert list(matrix.columns) == ["sensitive", "predicted", "actual"]
        assert matrix.loc["sensitive", "predicted"] == pytest.approx(-1.0)
        assert matrix.loc["sensitive", "actual"] == pytest.approx(0.0, abs=1e-12)
        assert matrix.loc["predicted", "predicted"] == 1.0

    def test_constant_prediction_is_nan(self, toy_schema):
        records = [record(i, i % 2 == 0, "granted", "rejected") for i in range(4)]
        matrix = boundary_correlations(records, toy_schema)
        assert math.isnan(matrix.loc["sensitive", "predicted"])
