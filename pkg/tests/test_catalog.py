"""Tests for canonical forms, generators, embedded tables and export"""

import json
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from catalog import (
    CanonicalForm,
    CatalogEntry,
    EntrySource,
    canonical_form,
    canonical_graph,
    enumerate_all_graphs,
    enumerate_regular,
    export_catalog,
    published_tables,
    refine_colours,
    table_rows,
)
from graphs import complete, cycle, disjoint_union, empty, encode_graph6, path, petersen
from polynomial import AlliancePolynomial, alliance_polynomial
from utils.config import Settings, set_settings
from utils.errors import (
    BadParams,
    InfeasibleParams,
    OrderExceedsCanonicalLimit,
    OrderExceedsExhaustiveLimit,
    UnsupportedOrder,
)

from tests.strategies import graphs, to_networkx


def _pairwise_non_isomorphic(entries):
    nets = [to_networkx(e.graph) for e in entries]
    for i in range(len(nets)):
        for j in range(i + 1, len(nets)):
            assert not nx.is_isomorphic(nets[i], nets[j]), (entries[i].name, entries[j].name)


class TestCanonicalForm:
    def test_cycle_relabeled(self):
        g = cycle(5)
        assert canonical_form(g) == canonical_form(g.relabel([0, 2, 4, 1, 3]))

    def test_k33_vs_prism(self, k33, prism):
        assert canonical_form(k33) != canonical_form(prism)

    def test_petersen_relabeled(self):
        g = petersen()
        swapped = g.relabel([5, 6, 7, 8, 9, 0, 1, 2, 3, 4])
        assert canonical_form(g) == canonical_form(swapped)

    def test_form_shape(self):
        form = canonical_form(path(4))
        assert isinstance(form, CanonicalForm)
        assert form.order == 4
        assert form.to_graph().size == 3
        assert str(form) == form.graph6

    def test_canonical_graph_is_fixed_point(self):
        g = canonical_graph(petersen())
        assert canonical_graph(g) == g
        assert nx.is_isomorphic(to_networkx(g), nx.petersen_graph())

    def test_limit(self):
        with pytest.raises(OrderExceedsCanonicalLimit):
            canonical_form(cycle(13))
        with pytest.raises(OrderExceedsCanonicalLimit):
            canonical_form(cycle(6), limit=5)

    def test_limit_from_settings(self):
        set_settings(Settings(canonical_limit=14))
        assert canonical_form(cycle(13)).order == 13

    def test_refinement_separates_degrees(self):
        colours = refine_colours(disjoint_union(path(3), empty(1)))
        # the middle of the path, its ends, the isolated vertex
        assert len({colours[1], colours[0], colours[3]}) == 3
        assert colours[0] == colours[2]

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_invariant_under_relabeling(self, data):
        g = data.draw(graphs(max_order=10))
        perm = data.draw(st.permutations(list(range(g.order))))
        assert canonical_form(g) == canonical_form(g.relabel(perm))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7), graphs(max_order=7))
    def test_agrees_with_networkx_isomorphism(self, g, h):
        same = g.order == h.order and nx.is_isomorphic(to_networkx(g), to_networkx(h))
        assert (canonical_form(g) == canonical_form(h)) == same

    @pytest.mark.slow
    def test_hundred_permutations_per_graph(self):
        rng = random.Random(11)
        for g in [petersen(), cycle(10), complete(6), disjoint_union(cycle(4), path(6))]:
            form = canonical_form(g)
            for _ in range(100):
                perm = list(range(g.order))
                rng.shuffle(perm)
                assert canonical_form(g.relabel(perm)) == form


class TestEnumerateRegular:
    @pytest.mark.parametrize("n,total,connected", [(4, 1, 1), (6, 2, 2), (8, 6, 5)])
    def test_cubic_counts(self, n, total, connected):
        assert len(enumerate_regular(n, 3)) == total
        assert len(enumerate_regular(n, 3, connected_only=True)) == connected

    @pytest.mark.slow
    def test_cubic_order_ten(self):
        entries = enumerate_regular(10, 3)
        assert len(entries) == 21
        assert sum(e.connected for e in entries) == 19
        _pairwise_non_isomorphic(entries)

    def test_k4(self):
        (entry,) = enumerate_regular(4, 3)
        assert entry.graph == complete(4)
        assert entry.polynomial == alliance_polynomial(complete(4))
        assert entry.source == EntrySource.GENERATED

    def test_order_six_pair(self, k33, prism):
        forms = {e.canonical for e in enumerate_regular(6, 3)}
        assert forms == {canonical_form(k33), canonical_form(prism)}

    @pytest.mark.parametrize("n,degree,count", [(5, 2, 1), (6, 2, 2), (7, 2, 2), (8, 2, 3), (6, 0, 1), (5, 4, 1), (7, 4, 2), (8, 4, 6)])
    def test_other_degrees(self, n, degree, count):
        entries = enumerate_regular(n, degree)
        assert len(entries) == count
        assert all(e.regular_degree == degree for e in entries)

    def test_sorted_and_distinct(self):
        entries = enumerate_regular(8, 3)
        codes = [e.canonical.code for e in entries]
        assert codes == sorted(codes)
        _pairwise_non_isomorphic(entries)

    def test_entries_match_their_graph(self):
        for entry in enumerate_regular(8, 3):
            assert canonical_form(entry.graph) == entry.canonical
            assert alliance_polynomial(entry.graph) == entry.polynomial

    @pytest.mark.parametrize("n,degree", [(5, 3), (4, 4), (3, 5), (0, 0), (4, -1)])
    def test_infeasible(self, n, degree):
        with pytest.raises(InfeasibleParams):
            enumerate_regular(n, degree)

    def test_canonical_limit(self):
        with pytest.raises(OrderExceedsCanonicalLimit):
            enumerate_regular(14, 3)


class TestEnumerateAllGraphs:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n, count):
        assert len(enumerate_all_graphs(n)) == count

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_methods_agree(self, n):
        augmented = [e.canonical for e in enumerate_all_graphs(n)]
        exhaustive = [e.canonical for e in enumerate_all_graphs(n, method="exhaustive")]
        assert augmented == exhaustive

    def test_order_four_classes_are_distinct(self):
        _pairwise_non_isomorphic(enumerate_all_graphs(4))

    def test_order_six(self):
        entries = enumerate_all_graphs(6)
        assert len(entries) == 156
        assert sum(e.connected for e in entries) == 112

    @pytest.mark.slow
    def test_order_seven(self):
        entries = enumerate_all_graphs(7)
        assert len(entries) == 1044
        assert sum(e.connected for e in entries) == 853

    def test_order_limit(self):
        with pytest.raises(OrderExceedsExhaustiveLimit):
            enumerate_all_graphs(8)

    @pytest.mark.parametrize("n,method", [(0, "augment"), (3, "random")])
    def test_bad_params(self, n, method):
        with pytest.raises(BadParams):
            enumerate_all_graphs(n, method=method)


class TestPublishedTables:
    def test_order_four(self):
        assert published_tables(4) == {AlliancePolynomial(4, 3, {1: 4, 3: 6, 5: 4, 7: 1}): 1}
        assert table_rows(4)[0].provenance.startswith("derived")

    def test_sizes(self):
        assert [sum(published_tables(n).values()) for n in (4, 6, 8, 10)] == [1, 2, 6, 21]

    def test_order_eight_row(self):
        assert AlliancePolynomial(8, 3, {5: 8, 7: 132, 9: 32, 11: 1}) in published_tables(8)

    def test_order_ten_row(self):
        assert AlliancePolynomial(10, 3, {7: 10, 9: 462, 11: 67, 13: 1}) in published_tables(10)

    def test_corrected_rows(self):
        printed, corrected = published_tables(10), published_tables(10, corrected=True)
        assert sum(corrected.values()) == 21
        assert printed - corrected == Counter([
            AlliancePolynomial(10, 3, {7: 10, 9: 462, 11: 67, 13: 1}),
            AlliancePolynomial(10, 3, {7: 10, 9: 407, 11: 56, 13: 1}),
        ])
        assert corrected - printed == Counter([
            AlliancePolynomial(10, 3, {7: 10, 9: 462, 11: 71, 13: 1}),
            AlliancePolynomial(10, 3, {7: 10, 9: 402, 11: 56, 13: 1}),
        ])
        misprinted = [row for row in table_rows(10) if row.misprinted]
        assert [row.label for row in misprinted] == ["cub10-6", "cub10-8"]
        assert all("misprint" in row.provenance for row in misprinted)

    @pytest.mark.parametrize("order", [4, 6, 8])
    def test_corrected_equals_printed_below_ten(self, order):
        assert published_tables(order, corrected=True) == published_tables(order)

    def test_pinned_rows(self, k33, prism, cube):
        pinned = {
            6: [k33, prism],
            8: [disjoint_union(complete(4), complete(4)), cube],
            10: [disjoint_union(complete(4), k33), disjoint_union(complete(4), prism)],
        }
        for order, members in pinned.items():
            table = published_tables(order, corrected=True)
            for g in members:
                assert alliance_polynomial(g) in table

    def test_petersen_is_listed(self):
        assert alliance_polynomial(petersen()) in published_tables(10, corrected=True)

    @pytest.mark.parametrize("order", [3, 5, 12])
    def test_unsupported_order(self, order):
        with pytest.raises(UnsupportedOrder):
            published_tables(order)


class TestExport:
    def test_text(self):
        entries = enumerate_regular(6, 3)
        lines = export_catalog(entries).splitlines()
        assert len(lines) == 2
        for line, entry in zip(lines, entries):
            graph6, poly = line.split("\t")
            assert graph6 == encode_graph6(entry.graph)
            assert poly == entry.polynomial.to_text()

    def test_json(self):
        entry = CatalogEntry.build(petersen(), EntrySource.NAMED, label="petersen")
        (record,) = json.loads(export_catalog([entry], "json"))
        assert record["label"] == "petersen"
        assert record["source"] == "named"
        assert record["connected"] is True
        assert AlliancePolynomial.from_dict(record["polynomial"]) == entry.polynomial

    def test_unknown_format(self):
        with pytest.raises(BadParams):
            export_catalog([], "csv")

    def test_entry_properties(self, k33):
        entry = CatalogEntry.build(disjoint_union(complete(4), k33))
        assert (entry.order, entry.size, entry.regular_degree, entry.components) == (10, 15, 3, 2)
        assert not entry.connected
        assert entry.name == encode_graph6(entry.graph)
