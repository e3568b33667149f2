"""Tests for table verification and distinguishing-power experiments"""

from collections import Counter

import pytest

from catalog import (
    CatalogEntry,
    EntrySource,
    characterized,
    distinguish,
    enumerate_all_graphs,
    enumerate_regular,
    named_family_characterization,
    named_family_graphs,
    verify_against_published,
)
from graphs import complete, cycle, disjoint_union, path, star
from polynomial import AlliancePolynomial


def _named(g, label):
    return CatalogEntry.build(g, EntrySource.NAMED, label=label)


class TestVerify:
    @pytest.mark.parametrize("order,count", [(4, 1), (6, 2), (8, 6)])
    def test_small_orders_match(self, order, count):
        report = verify_against_published(order)
        assert report.ok
        assert (report.expected, report.computed, report.matched) == (count, count, count)
        assert report.pairwise_distinct and report.distinct_evaluations
        assert report.summary_line() == f"{count}/{count} matched, 0 collisions"

    @pytest.mark.slow
    def test_order_ten(self):
        report = verify_against_published(10)
        assert report.ok
        assert report.summary_line() == "21/21 matched, 0 collisions, 2 errata"
        assert report.distinct_evaluations
        assert [(e.label, e.published, e.computed, e.confirmed) for e in report.errata] == [
            ("cub10-6", "10*x^7 + 462*x^9 + 67*x^11 + 1*x^13", "10*x^7 + 462*x^9 + 71*x^11 + 1*x^13", True),
            ("cub10-8", "10*x^7 + 407*x^9 + 56*x^11 + 1*x^13", "10*x^7 + 402*x^9 + 56*x^11 + 1*x^13", True),
        ]

    @pytest.mark.parametrize("order", [4, 6, 8])
    def test_no_errata_below_ten(self, order):
        assert verify_against_published(order).errata == []

    def test_errata_unconfirmed_without_catalog(self, mocker):
        mocker.patch("catalog.experiments.enumerate_regular", return_value=[])
        report = verify_against_published(10)
        assert [e.label for e in report.errata] == ["cub10-6", "cub10-8"]
        assert not any(e.confirmed for e in report.errata)
        assert report.matched == 0
        assert "10*x^7 + 402*x^9 + 56*x^11 + 1*x^13" in report.missing
        assert not report.ok

    def test_missing_and_extra_rows(self, mocker):
        wrong = AlliancePolynomial(6, 3, {3: 6, 5: 33, 7: 12, 9: 1})
        prism = AlliancePolynomial(6, 3, {3: 6, 5: 33, 7: 11, 9: 1})
        mocker.patch("catalog.experiments.published_tables", return_value=Counter([wrong, prism]))
        report = verify_against_published(6)
        assert not report.ok
        assert report.matched == 1
        assert report.missing == [wrong.to_text()]
        assert report.extra == ["6*x^3 + 33*x^5 + 15*x^7 + 1*x^9"]


class TestDistinguish:
    def test_order_six_cubic_pair(self):
        report = distinguish(enumerate_regular(6, 3))
        assert report.pool_size == 2
        assert report.characterized
        assert not report.by_value_at_one
        assert not report.violations

    def test_order_eight_values_at_one(self):
        entries = enumerate_regular(8, 3)
        assert len({e.polynomial.evaluate(1) for e in entries}) == 6
        assert distinguish(entries).summary() == {
            "pool_size": 6, "polynomial_collisions": 0, "value_collisions": 0, "violations": 0,
        }

    def test_single_graph(self):
        report = distinguish([_named(cycle(5), "C5")])
        assert report.pool_size == 1
        assert report.characterized

    def test_isomorphic_duplicates_are_merged(self):
        entries = [_named(cycle(5), "a"), _named(cycle(5).relabel([0, 2, 4, 1, 3]), "b")]
        report = distinguish(entries)
        assert report.pool_size == 1
        assert not report.by_polynomial

    def test_value_collision_without_polynomial_collision(self):
        # P3 and two disjoint edges both have 6 connected induced subgraphs
        two_edges = disjoint_union(path(2), path(2))
        report = distinguish([_named(path(3), "P3"), _named(two_edges, "2K2")])
        assert report.characterized
        assert len(report.by_value_at_one) == 1
        assert report.by_value_at_one[0].key == "A(G;1)=6"
        assert sorted(report.by_value_at_one[0].members) == ["2K2", "P3"]

    def test_all_classes_up_to_six(self):
        pool = [e for n in range(1, 7) for e in enumerate_all_graphs(n)]
        report = distinguish(pool)
        assert report.pool_size == 1 + 2 + 4 + 11 + 34 + 156
        assert report.violations == []

    @pytest.mark.slow
    def test_all_classes_up_to_seven_with_regular_catalogs(self):
        pool = [e for n in range(1, 8) for e in enumerate_all_graphs(n)]
        pool += [e for n, d in [(4, 3), (6, 3), (5, 2), (6, 2), (7, 2)] for e in enumerate_regular(n, d)]
        report = distinguish(pool)
        assert report.pool_size == 1 + 2 + 4 + 11 + 34 + 156 + 1044
        assert report.violations == []

    @pytest.mark.slow
    def test_order_ten_cubic(self):
        report = distinguish(enumerate_regular(10, 3))
        assert report.pool_size == 21
        assert report.characterized
        assert not report.by_value_at_one


class TestViolations:
    def test_mixed_group_is_flagged(self, k4):
        # Two entries forced to share a polynomial: a cubic graph and a path.
        cubic = CatalogEntry.build(k4, EntrySource.NAMED, label="K4")
        fake = cubic.model_copy(update={"graph": path(4), "label": "P4", "canonical": _named(path(4), "P4").canonical})
        report = distinguish([cubic, fake])
        assert len(report.by_polynomial) == 1
        assert len(report.violations) == 1
        assert "K4 is 3-regular" in report.violations[0].reason
        assert not report.characterized


class TestCharacterization:
    def test_characterized_within_pool(self):
        pool = [e for n in range(1, 6) for e in enumerate_all_graphs(n)]
        assert characterized(cycle(5), pool)
        assert characterized(star(5), pool)

    def test_named_families(self):
        named = named_family_graphs(4)
        labels = [label for label, _ in named]
        assert "complete_minus_edge(4)" in labels
        assert "cycle(2)" not in labels
        assert len(labels) == len(set(labels))

    def test_named_family_characterization(self):
        verdicts = named_family_characterization(6)
        assert verdicts["complete(6)"]
        assert verdicts["path(6)"]
        assert verdicts["cycle(6)"]
        assert verdicts["star(6)"]
        assert all(verdicts.values())

    def test_disjoint_union_pool(self):
        g = disjoint_union(complete(3), complete(3))
        pool = enumerate_all_graphs(6)
        assert characterized(g, pool)
