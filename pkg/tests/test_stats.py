# tests/test_stats.py

import numpy as np
import pytest
from scipy import integrate, stats

from faht.core import MISSING, Community, Instance, LearnerConfig, SchemaError
from faht.metrics import Branch, ClassDistribution, PartitionStats, fairness_gain, information_gain
from faht.stats import (
    GaussianEstimator,
    LeafStatistics,
    NumericAttributeStats,
    batch_equivalence_oracle,
    candidate_splits,
    observe,
)


def random_stream(n, seed=0):
    rng = np.random.default_rng(seed)
    instances = []
    for _ in range(n):
        sex = "female" if rng.random() < 0.4 else "male"
        color = ["red", "blue", MISSING][rng.integers(0, 3)]
        age = None if rng.random() < 0.05 else float(rng.normal(40, 10))
        label = "granted" if rng.random() < (0.2 if sex == "female" else 0.4) else "rejected"
        instances.append(Instance((sex, color, age), label))
    return instances


class TestGaussianEstimator:
    """Test the Welford estimator."""

    def test_hand_values(self):
        g = GaussianEstimator()
        for x in (2, 4, 6):
            g.update(x)
        assert g.n == 3
        assert g.mean == pytest.approx(4.0)
        assert g.m2 == pytest.approx(8.0)
        assert g.variance == pytest.approx(4.0)
        assert (g.min, g.max) == (2, 6)

    def test_matches_two_pass(self):
        rng = np.random.default_rng(1)
        xs = rng.normal(1e3, 25.0, size=20000)
        g = GaussianEstimator()
        for x in xs:
            g.update(float(x))
        assert g.mean == pytest.approx(xs.mean(), rel=1e-9)
        assert g.variance == pytest.approx(xs.var(ddof=1), rel=1e-9)
        assert g.min <= g.mean <= g.max

    def test_empty_and_single(self):
        g = GaussianEstimator()
        assert g.variance == 0.0
        assert float(g.mass_below(10.0)) == 0.0
        g.update(5.0)
        assert g.variance == 0.0
        assert float(g.cdf(4.9)) == 0.0
        assert float(g.cdf(5.0)) == 1.0

    def test_cdf_matches_scipy(self):
        g = GaussianEstimator()
        for x in (1.0, 2.0, 4.0, 7.0):
            g.update(x)
        points = np.linspace(-5, 15, 41)
        expected = stats.norm.cdf(points, loc=g.mean, scale=g.std)
        assert np.allclose(g.cdf(points), expected, atol=1e-7)


class TestObserve:
    """Test incremental statistics updates."""

    def test_touches_matching_cells(self, toy_schema, make_instance):
        leaf = observe(LeafStatistics(toy_schema), make_instance("female", "red", 30.0, "granted"))
        sex, color, age = leaf.attributes
        assert sex.fairness["female"].dg == 1
        assert sex.class_counts["female"] == {"rejected": 0, "granted": 1}
        assert color.fairness["red"].dg == 1
        assert age.by_community[Community.DG].n == 1
        assert age.by_class["granted"].n == 1
        assert leaf.fairness.dg == 1
        assert leaf.n == 1

    def test_additive(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        instance = make_instance("male", "blue", 50.0, "rejected")
        observe(leaf, instance)
        observe(leaf, instance)
        sex, color, age = leaf.attributes
        assert sex.fairness["male"].fr == 2
        assert color.class_counts["blue"]["rejected"] == 2
        assert age.by_community[Community.FR].n == 2
        assert leaf.distribution.get("rejected") == 2

    def test_missing_numeric_skips_only_that_attribute(self, toy_schema, make_instance):
        leaf = observe(LeafStatistics(toy_schema), make_instance("male", "red", None, "granted"))
        assert leaf.attributes[2].n == 0
        assert leaf.attributes[1].fairness["red"].fg == 1

    def test_missing_nominal_is_its_own_value(self, toy_schema, make_instance):
        leaf = observe(LeafStatistics(toy_schema), make_instance("male", MISSING, 20.0, "granted"))
        assert leaf.attributes[1].observed_values() == [MISSING]

    def test_out_of_domain_value(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        with pytest.raises(SchemaError):
            leaf.observe(make_instance("female", "green"))
        # nothing was counted
        assert leaf.n == 0
        assert leaf.attributes[0].class_counts == {}

    def test_unknown_label(self, toy_schema, make_instance):
        with pytest.raises(SchemaError):
            LeafStatistics(toy_schema).observe(make_instance(label="maybe"))


class TestBatchEquivalence:
    """Incremental counters equal a brute-force recount."""

    def test_empty(self, toy_schema):
        distribution, fairness, tables = batch_equivalence_oracle([], toy_schema)
        assert distribution.total == 0
        assert fairness.total == 0
        assert all(table == {} for table in tables.values())

    def test_single_instance_one_hot(self, toy_schema, make_instance):
        distribution, fairness, tables = batch_equivalence_oracle(
            [make_instance("female", "blue", 1.0, "rejected")], toy_schema
        )
        assert distribution.counts == {"rejected": 1, "granted": 0}
        assert fairness.to_dict() == {"DR": 1, "DG": 0, "FR": 0, "FG": 0}
        assert list(tables[1]) == ["blue"]

    @pytest.mark.parametrize("seed", range(100))
    def test_incremental_equals_batch(self, toy_schema, seed):
        instances = random_stream(50 + (seed * 997) % 9950, seed)
        leaf = LeafStatistics(toy_schema)
        for instance in instances:
            observe(leaf, instance)
        distribution, fairness, tables = batch_equivalence_oracle(instances, toy_schema)
        assert leaf.distribution.counts == distribution.counts
        assert leaf.fairness == fairness
        assert leaf.nominal_tables() == tables

        nominal = [c for c in candidate_splits(leaf, LearnerConfig()) if not c.is_numeric]
        assert {c.attribute_index for c in nominal} == set(tables)
        for candidate in nominal:
            recount = PartitionStats(
                [
                    Branch(value, ClassDistribution(dict(counts)), fc)
                    for value, (counts, fc) in tables[candidate.attribute_index].items()
                ]
            )
            assert [b.key for b in candidate.partition] == [b.key for b in recount]
            ig = information_gain(leaf.distribution, candidate.partition)
            assert abs(ig - information_gain(distribution, recount)) <= 1e-12
            fg = fairness_gain(leaf.fairness, candidate.partition)
            assert abs(fg - fairness_gain(fairness, recount)) <= 1e-12


class TestCandidateSplits:
    """Test candidate enumeration."""

    def test_single_value_nominal_has_no_candidate(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        for label in ("granted", "rejected"):
            observe(leaf, make_instance("male", "red", 30.0, label))
        assert candidate_splits(leaf, LearnerConfig()) == []

    def test_constant_numeric_has_no_candidate(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        observe(leaf, make_instance("male", "red", 30.0, "granted"))
        observe(leaf, make_instance("female", "red", 30.0, "rejected"))
        candidates = candidate_splits(leaf, LearnerConfig())
        assert [c.attribute_name for c in candidates] == ["sex"]

    def test_empty_leaf(self, toy_schema):
        assert candidate_splits(LeafStatistics(toy_schema), LearnerConfig()) == []

    def test_numeric_thresholds_equal_width(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        for age, label in ((0.0, "granted"), (11.0, "rejected"), (5.0, "granted")):
            observe(leaf, make_instance("male", "red", age, label))
        candidates = [c for c in candidate_splits(leaf, LearnerConfig(numeric_bins=10)) if c.is_numeric]
        assert [c.threshold for c in candidates] == pytest.approx([float(i) for i in range(1, 11)])

    def test_nominal_candidate_in_domain_order(self, toy_schema, make_instance):
        leaf = LeafStatistics(toy_schema)
        observe(leaf, make_instance("male", "blue", 1.0, "granted"))
        observe(leaf, make_instance("male", "red", 1.0, "rejected"))
        (candidate,) = candidate_splits(leaf, LearnerConfig())
        assert [b.key for b in candidate.partition] == ["red", "blue"]
        assert candidate.merit is None

    def test_numeric_branch_counts_match_integration(self, toy_schema):
        """Left-branch community counts equal n times the integrated normal density."""
        rng = np.random.default_rng(7)
        leaf = LeafStatistics(toy_schema)
        means = {("female", "rejected"): 0.0, ("female", "granted"): 1.0,
                 ("male", "rejected"): 2.0, ("male", "granted"): 3.0}
        for (sex, label), mu in means.items():
            for x in rng.normal(mu, 1.0, size=250):
                observe(leaf, Instance((sex, "red", float(x)), label))
        age = leaf.attributes[2]
        for candidate in (c for c in candidate_splits(leaf, LearnerConfig()) if c.is_numeric):
            left = candidate.partition.branches[0].fairness
            for community in Community:
                g = age.by_community[community]
                mass, _ = integrate.quad(
                    lambda x: stats.norm.pdf(x, g.mean, g.std), -np.inf, candidate.threshold, epsabs=1e-12
                )
                assert left.get(community) == pytest.approx(g.n * mass, abs=1e-6)

    def test_fairness_totals_preserved(self, toy_schema):
        """Branch community counts sum to the leaf's, missing values included."""
        leaf = LeafStatistics(toy_schema)
        for instance in random_stream(2000, seed=4):
            observe(leaf, instance)
        for candidate in candidate_splits(leaf, LearnerConfig()):
            total = candidate.partition.fairness_total()
            for community in Community:
                expected = leaf.fairness.get(community)
                if candidate.is_numeric:
                    assert total.get(community) == pytest.approx(expected, abs=1e-6)
                else:
                    assert total.get(community) == expected
            assert candidate.partition.n_nonempty >= 2


class TestMemoryFootprint:
    """Statistics grow with the nominal domains, not the stream."""

    def test_cell_count_bounded(self, toy_schema):
        leaf = LeafStatistics(toy_schema)
        for instance in random_stream(5000, seed=9):
            observe(leaf, instance)
        n_classes = len(toy_schema.classes)
        # sex: 2 values, color: red/blue/?
        nominal_cells = (2 + 3) * (n_classes + 4)
        numeric_cells = n_classes + 4
        assert leaf.cell_count() == n_classes + 4 + nominal_cells + numeric_cells

    def test_numeric_stats_fixed_size(self, toy_schema):
        stats_ = NumericAttributeStats(toy_schema.attribute("age"), toy_schema.classes)
        before = stats_.cell_count()
        for x in range(1000):
            stats_.update(float(x), "granted", Community.FG)
        assert stats_.cell_count() == before == 6
