"""Isomorphism-class catalogs, embedded tables and collision experiments"""

from .canonical import CanonicalForm, canonical_form, canonical_graph, canonical_labeling, refine_colours
from .entry import CatalogEntry, EntrySource
from .experiments import (
    CollisionGroup,
    CollisionReport,
    Erratum,
    VerificationReport,
    characterized,
    distinguish,
    named_family_characterization,
    named_family_graphs,
    verify_against_published,
)
from .export import export_catalog
from .generator import enumerate_all_graphs, enumerate_regular, regular_classes
from .tables import SUPPORTED_ORDERS, TableRow, published_tables, table_rows

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "refine_colours",
    "CatalogEntry",
    "EntrySource",
    "CollisionGroup",
    "CollisionReport",
    "Erratum",
    "VerificationReport",
    "characterized",
    "distinguish",
    "named_family_characterization",
    "named_family_graphs",
    "verify_against_published",
    "export_catalog",
    "enumerate_all_graphs",
    "enumerate_regular",
    "regular_classes",
    "SUPPORTED_ORDERS",
    "TableRow",
    "published_tables",
    "table_rows",
]
