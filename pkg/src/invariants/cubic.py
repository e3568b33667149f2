"""Cubic graph coefficient checks"""

from loguru import logger

from graphs import Graph
from polynomial import AlliancePolynomial
from utils.errors import NotCubic

from .base_checker import BaseChecker, is_unimodal
from .report import InvariantReport


class CubicChecker(BaseChecker):
    """Check the four-term alliance polynomial of a 3-regular graph"""

    def check(self, g: Graph, p: AlliancePolynomial) -> InvariantReport:
        if g.is_regular() != 3:
            raise NotCubic(f"Graph with degrees {sorted(set(g.degrees))} is not 3-regular")
        self.require_match(g, p)

        report = self.new_report(g)
        logger.debug(f"Cubic checks for {report.subject}")

        n, m = g.order, g.size
        sequence = tuple(self.a(p, k) for k in (-3, -1, 1, 3))
        a_m3, a_m1, a_1, a_3 = sequence

        expected = (n - 3, n - 1, n + 1, n + 3)
        report.record(
            "cubic.four_terms",
            p.exponents == expected,
            f"exponents {list(p.exponents)}, expected {list(expected)}",
        )
        report.record(
            "cubic.low_coefficients",
            a_m3 == n < m <= a_m1,
            f"A_-3={a_m3}, n={n}, m={m}, A_-1={a_m1}",
        )
        report.record(
            "cubic.upper_coefficients",
            a_1 >= a_3,
            f"A_1={a_1}, A_3={a_3}",
        )
        report.record(
            "cubic.unimodal",
            is_unimodal(sequence),
            f"(A_-3, A_-1, A_1, A_3)={sequence}",
        )
        return report


def check_cubic(g: Graph, p: AlliancePolynomial) -> InvariantReport:
    return CubicChecker().check(g, p)
