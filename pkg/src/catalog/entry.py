"""Catalog entry model"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from graphs import Graph, component_count, encode_graph6
from polynomial import AlliancePolynomial, alliance_polynomial

from .canonical import CanonicalForm, canonical_form


class EntrySource(str, Enum):
    GENERATED = "generated"
    NAMED = "named"


class CatalogEntry(BaseModel):
    """One isomorphism class with a representative labeling and its polynomial"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    canonical: CanonicalForm
    graph: Graph
    polynomial: AlliancePolynomial
    connected: bool
    source: EntrySource = EntrySource.GENERATED
    label: Optional[str] = Field(default=None, description="Display name of named entries")

    @classmethod
    def build(
        cls,
        g: Graph,
        source: EntrySource = EntrySource.GENERATED,
        label: Optional[str] = None,
        form: Optional[CanonicalForm] = None,
    ) -> "CatalogEntry":
        """Entry for ``g`` with its canonical form and polynomial

        Args:
            g: Representative graph
            source: Provenance of the entry
            label: Optional display name
            form: Canonical form when already known
        """
        return cls(
            canonical=form if form is not None else canonical_form(g),
            graph=g,
            polynomial=alliance_polynomial(g),
            connected=component_count(g) == 1,
            source=source,
            label=label,
        )

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def size(self) -> int:
        return self.graph.size

    @property
    def regular_degree(self) -> Optional[int]:
        return self.graph.is_regular()

    @property
    def components(self) -> int:
        return component_count(self.graph)

    @property
    def name(self) -> str:
        return self.label or encode_graph6(self.graph)

    def to_line(self) -> str:
        """``graph6<TAB>polynomial-text``"""
        return f"{encode_graph6(self.graph)}\t{self.polynomial.to_text()}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "canonical": self.canonical.graph6,
            "graph6": encode_graph6(self.graph),
            "polynomial": self.polynomial.to_dict(),
            "connected": self.connected,
            "source": self.source.value,
            "label": self.label,
        }
