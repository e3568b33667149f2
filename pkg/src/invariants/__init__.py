"""Executable coefficient theorems over (graph, polynomial) pairs"""

from graphs import Graph
from polynomial import AlliancePolynomial

from .base_checker import BaseChecker, is_unimodal
from .cubic import CubicChecker, check_cubic
from .family import check_regular_family
from .general import GeneralChecker, check_general
from .regular import RegularChecker, check_regular
from .report import CheckResult, CheckStatus, InvariantReport


def check_all(g: Graph, p: AlliancePolynomial) -> InvariantReport:
    """General checks, plus the regular and cubic ones when they apply"""
    report = check_general(g, p)
    delta = g.is_regular()
    if delta is not None:
        report.extend(check_regular(g, p))
        if delta == 3:
            report.extend(check_cubic(g, p))
    return report


__all__ = [
    "BaseChecker",
    "is_unimodal",
    "CubicChecker",
    "check_cubic",
    "check_regular_family",
    "GeneralChecker",
    "check_general",
    "RegularChecker",
    "check_regular",
    "CheckResult",
    "CheckStatus",
    "InvariantReport",
    "check_all",
]
