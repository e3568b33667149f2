"""Published cubic-graph polynomial tables shipped with the package"""

import json
from collections import Counter
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from polynomial import AlliancePolynomial
from utils.errors import UnsupportedOrder

TABLES_PATH = Path(__file__).parent / "data" / "cubic_tables.json"
SUPPORTED_ORDERS = (4, 6, 8, 10)


class TableRow(BaseModel):
    """Expected polynomial with its label and provenance note"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str
    provenance: str
    polynomial: AlliancePolynomial
    corrected: Optional[AlliancePolynomial] = None

    @property
    def expected(self) -> AlliancePolynomial:
        """Polynomial a correct enumeration produces for this row"""
        return self.corrected if self.corrected is not None else self.polynomial

    @property
    def misprinted(self) -> bool:
        return self.corrected is not None


@lru_cache(maxsize=None)
def _load() -> Dict[int, List[TableRow]]:
    with open(TABLES_PATH, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return {
        int(order): [
            TableRow(
                label=row["label"],
                provenance=row["provenance"],
                polynomial=AlliancePolynomial.from_dict(row["polynomial"]),
                corrected=AlliancePolynomial.from_dict(row["corrected"]) if "corrected" in row else None,
            )
            for row in rows
        ]
        for order, rows in raw.items()
    }


def table_rows(order: int) -> List[TableRow]:
    if order not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"No embedded cubic table for order {order}; supported: {SUPPORTED_ORDERS}")
    return list(_load()[order])


def published_tables(order: int, corrected: bool = False) -> Counter:
    """Multiset of cubic alliance polynomials of the given order

    Args:
        order: One of 4, 6, 8, 10
        corrected: Replace misprinted rows by their corrected polynomial

    Returns:
        Counter mapping polynomial to multiplicity
    """
    return Counter(row.expected if corrected else row.polynomial for row in table_rows(order))
