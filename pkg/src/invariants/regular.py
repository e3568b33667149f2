"""Coefficient identities and bounds of regular graphs"""

from math import comb

from loguru import logger

from graphs import Graph, cut_vertices, is_connected
from polynomial import AlliancePolynomial
from utils.errors import NotRegular

from .base_checker import BaseChecker
from .report import InvariantReport


class RegularChecker(BaseChecker):
    """Check the alliance polynomial of a Δ-regular graph"""

    def check(self, g: Graph, p: AlliancePolynomial) -> InvariantReport:
        delta = g.is_regular()
        if delta is None:
            raise NotRegular(f"Graph with degrees {sorted(set(g.degrees))} is not regular")
        self.require_match(g, p)

        report = self.new_report(g)
        logger.debug(f"Regular checks for {report.subject} (delta={delta})")

        self._check_min_degree_classes(g, p, delta, report)
        self._check_lowest_term(g, p, delta, report)
        self._check_order_and_size(g, p, delta, report)
        self._check_components(g, p, delta, report)
        self._check_edge_and_cut_bounds(g, p, delta, report)
        self._check_parity(g, p, delta, report)
        self._check_only_real_zero(g, p, delta, report)
        self._check_term_count(p, delta, report)
        self._check_coefficient_lower_bounds(g, p, delta, report)
        self._check_small_order_identity(g, p, delta, report)
        self._check_near_half_order_bounds(g, p, delta, report)
        return report

    def _check_min_degree_classes(self, g, p, delta, report: InvariantReport) -> None:
        """``A_{-Δ+2i}`` counts connected induced subgraphs of minimum degree ``i``"""
        profile = self.min_degree_profile(g)
        if profile is None:
            report.not_applicable(
                "regular.min_degree_classes",
                f"order {g.order} above the sweep limit {self.brute_force_limit}",
            )
            return

        mismatched = [
            f"i={i}: A_{2 * i - delta}={self.a(p, 2 * i - delta)} vs {profile.get(i, 0)}"
            for i in range(delta + 1)
            if self.a(p, 2 * i - delta) != profile.get(i, 0)
        ]
        report.record(
            "regular.min_degree_classes",
            not mismatched,
            "; ".join(mismatched) if mismatched
            else f"minimum-degree classes {dict(sorted(profile.items()))}",
        )

    def _check_lowest_term(self, g, p, delta, report: InvariantReport) -> None:
        n = g.order
        low = self.a(p, -delta)
        report.record(
            "regular.lowest_term",
            p.min_degree == n - delta and low == n,
            f"Deg_min={p.min_degree} (n-Δ={n - delta}), A_-Δ={low} (n={n})",
        )

    def _check_order_and_size(self, g, p, delta, report: InvariantReport) -> None:
        """Order and size recovered from the extreme exponents"""
        n, m = g.order, g.size
        top, bottom = p.degree, p.min_degree
        span = top - bottom
        ok = (
            top == n + delta
            and 2 * n == bottom + top
            and 4 * m == self.a(p, -delta) * span
            and 8 * m == top * top - bottom * bottom
        )
        report.record(
            "regular.order_and_size",
            ok,
            f"Deg={top}, Deg_min={bottom}: n=(Deg_min+Deg)/2={(bottom + top) / 2}, "
            f"m=(Deg²-Deg_min²)/8={(top * top - bottom * bottom) / 8}; graph n={n}, m={m}",
        )

    def _check_components(self, g, p, delta, report: InvariantReport) -> None:
        n = g.order
        top = self.a(p, delta)
        connected = is_connected(g)
        report.record(
            "regular.components",
            1 <= top and top * (delta + 1) <= n and connected == (top == 1),
            f"A_Δ={top}, n/(Δ+1)={n / (delta + 1):.3g}, connected: {connected}",
        )

    def _check_edge_and_cut_bounds(self, g, p, delta, report: InvariantReport) -> None:
        if delta == 0:
            report.not_applicable("regular.edge_and_cut_bounds", "Δ = 0")
            return
        n, m = g.order, g.size
        n0 = len(cut_vertices(g))
        low, high = self.a(p, -delta + 2), self.a(p, delta - 2)
        report.record(
            "regular.edge_and_cut_bounds",
            low >= m and high >= n + n0,
            f"A_-Δ+2={low} ≥ m={m}; A_Δ-2={high} ≥ n+n0={n}+{n0}",
        )

    def _check_parity(self, g, p, delta, report: InvariantReport) -> None:
        """Even polynomial iff ``n + Δ`` is even"""
        target = (g.order + delta) % 2
        odd_ones = [e for e in p.exponents if e % 2 != target]
        report.record(
            "regular.parity",
            not odd_ones,
            f"exponents {list(p.exponents)} vs parity of n+Δ={g.order + delta}",
        )

    def _check_only_real_zero(self, g, p, delta, report: InvariantReport) -> None:
        # Zero at x = 0 of multiplicity n - Δ, positive coefficients elsewhere.
        positive = all(c >= 1 for c in p.coefficients.values())
        report.record(
            "regular.only_real_zero",
            positive and p.min_degree == g.order - delta,
            f"multiplicity of x=0 is {p.min_degree}, n-Δ={g.order - delta}",
        )

    def _check_term_count(self, p, delta, report: InvariantReport) -> None:
        report.record(
            "regular.term_count",
            p.term_count == delta + 1,
            f"{p.term_count} terms, Δ+1={delta + 1}",
        )

    def _check_coefficient_lower_bounds(self, g, p, delta, report: InvariantReport) -> None:
        """``A_{Δ-2i} · min(Δ, n-i) ≥ n · C(Δ, i)`` for ``1 ≤ i ≤ Δ-1``"""
        if delta < 2:
            report.not_applicable("regular.coefficient_lower_bounds", f"Δ={delta} leaves no inner terms")
            return
        n = g.order
        violations = []
        for i in range(1, delta):
            value = self.a(p, delta - 2 * i)
            if value * min(delta, n - i) < n * comb(delta, i):
                violations.append(f"i={i}: A_{delta - 2 * i}={value} < {n}*C({delta},{i})/{min(delta, n - i)}")
        report.record(
            "regular.coefficient_lower_bounds",
            not violations,
            "; ".join(violations) if violations else f"bounds hold for 1 ≤ i ≤ {delta - 1}",
        )

    def _check_small_order_identity(self, g, p, delta, report: InvariantReport) -> None:
        n = g.order
        if not n < 2 * delta:
            report.not_applicable("regular.small_order_identity", f"n={n} ≥ 2Δ={2 * delta}")
            return
        value = self.a(p, delta - 2)
        report.record(
            "regular.small_order_identity",
            value == n,
            f"A_Δ-2={value}, n={n}",
        )

    def _check_near_half_order_bounds(self, g, p, delta, report: InvariantReport) -> None:
        n, m = g.order, g.size
        if delta < 3 or not 2 * delta <= n <= 2 * delta + 1:
            report.not_applicable(
                "regular.near_half_order_bounds",
                f"needs Δ ≥ 3 and 2Δ ≤ n ≤ 2Δ+1 (Δ={delta}, n={n})",
            )
            return
        value = self.a(p, delta - 2)
        report.record(
            "regular.near_half_order_bounds",
            n <= value <= n + m + 2,
            f"{n} ≤ A_Δ-2={value} ≤ n+m+2={n + m + 2}",
        )


def check_regular(g: Graph, p: AlliancePolynomial) -> InvariantReport:
    return RegularChecker().check(g, p)
