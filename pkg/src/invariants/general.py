"""Coefficient properties that hold for every graph"""

from fractions import Fraction

from loguru import logger

from graphs import Graph, connected_components, is_connected
from polynomial import AlliancePolynomial

from .base_checker import BaseChecker
from .report import InvariantReport

SAMPLE_POINTS = (Fraction(1, 2), Fraction(1), Fraction(2))


class GeneralChecker(BaseChecker):
    """Check the alliance polynomial properties valid for any graph"""

    def check(self, g: Graph, p: AlliancePolynomial) -> InvariantReport:
        self.require_match(g, p)
        report = self.new_report(g)
        logger.debug(f"General checks for {report.subject}")

        self._check_positivity(p, report)
        self._check_exponent_span(g, p, report)
        self._check_connected_count(g, p, report)
        self._check_term_count(g, p, report)
        self._check_parity(g, p, report)
        self._check_low_coefficients(g, p, report)
        self._check_top_coefficient(g, p, report)
        self._check_degree_bounds(g, p, report)
        self._check_regular_iff_monic(g, p, report)
        return report

    def _check_positivity(self, p: AlliancePolynomial, report: InvariantReport) -> None:
        """No zeros on (0, inf): positive coefficients, positive samples"""
        negative = [e for e, c in p.coefficients.items() if c < 1]
        values = {x: p.evaluate(x) for x in SAMPLE_POINTS}
        non_positive = [f"A({x})={v}" for x, v in values.items() if v <= 0]
        report.record(
            "general.positive_coefficients",
            not negative and not non_positive,
            f"non-positive coefficients at {negative}, {non_positive}" if negative or non_positive
            else ", ".join(f"A({x})={v}" for x, v in values.items()),
        )

    def _check_exponent_span(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        n, delta = g.order, g.max_degree
        outside = [e for e in p.exponents if not n - delta <= e <= n + delta]
        report.record(
            "general.exponent_span",
            not outside,
            f"exponents {list(p.exponents)} within [{n - delta}, {n + delta}]" if not outside
            else f"exponents {outside} outside [{n - delta}, {n + delta}]",
        )

    def _check_connected_count(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        """A(G;1) counts connected induced subgraphs and is below 2^n"""
        profile = self.min_degree_profile(g)
        if profile is None:
            report.not_applicable(
                "general.connected_subgraph_count",
                f"order {g.order} above the sweep limit {self.brute_force_limit}",
            )
            return

        expected = sum(profile.values())
        value = p.evaluate(1)
        report.record(
            "general.connected_subgraph_count",
            value == expected and value < 2 ** g.order,
            f"A(G;1)={value}, connected induced subgraphs={expected}, 2^n={2 ** g.order}",
        )

    def _check_term_count(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        if g.size == 0:
            report.not_applicable("general.term_count", "graph has no edges")
            return
        r = g.degree_sequence().distinct_value_count
        report.record(
            "general.term_count",
            p.term_count >= r + 1,
            f"{p.term_count} terms, {r} distinct degrees",
        )

    def _check_parity(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        """Symmetric polynomial iff the degrees share one parity"""
        symmetric = len({e % 2 for e in p.exponents}) == 1
        uniform = g.degree_sequence().all_same_parity
        report.record(
            "general.parity",
            symmetric == uniform,
            f"exponents share parity: {symmetric}; degrees share parity: {uniform}",
        )

    def _check_low_coefficients(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        delta = g.max_degree
        at_max = sum(1 for d in g.degrees if d == delta)
        below_max = sum(1 for d in g.degrees if d == delta - 1)
        low, next_low = self.a(p, -delta), self.a(p, -delta + 1)
        report.record(
            "general.low_coefficients",
            low == at_max and next_low == below_max,
            f"A_-Δ={low} vs {at_max} vertices of degree Δ; "
            f"A_-Δ+1={next_low} vs {below_max} vertices of degree Δ-1",
        )

    def _check_top_coefficient(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        delta = g.max_degree
        regular_components = sum(
            1 for component in connected_components(g)
            if all(g.degree(v) == delta for v in component.members())
        )
        top = self.a(p, delta)
        report.record(
            "general.top_coefficient",
            top == regular_components,
            f"A_Δ={top}, Δ-regular components={regular_components}",
        )

    def _check_degree_bounds(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        n = g.order
        lo, hi = n + g.min_degree, n + g.max_degree
        report.record(
            "general.degree_bounds",
            lo <= p.degree <= hi,
            f"Deg(A)={p.degree} in [{lo}, {hi}]",
        )

    def _check_regular_iff_monic(self, g: Graph, p: AlliancePolynomial, report: InvariantReport) -> None:
        """For a connected graph: regular iff A_Δ = 1"""
        if not is_connected(g):
            report.not_applicable("general.connected_regular_iff_monic", "graph is disconnected")
            return
        regular = g.is_regular() is not None
        top = self.a(p, g.max_degree)
        report.record(
            "general.connected_regular_iff_monic",
            regular == (top == 1),
            f"regular: {regular}; A_Δ={top}",
        )


def check_general(g: Graph, p: AlliancePolynomial) -> InvariantReport:
    return GeneralChecker().check(g, p)
