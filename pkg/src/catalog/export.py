"""Catalog serialization"""

import json
from typing import Iterable

from utils.errors import BadParams

from .entry import CatalogEntry

EXPORT_FORMATS = ("text", "json")


def export_catalog(entries: Iterable[CatalogEntry], fmt: str = "text") -> str:
    """Render catalog entries

    Args:
        entries: Catalog entries
        fmt: ``text`` for ``graph6<TAB>polynomial`` lines, ``json`` for a list
            of entry records

    Returns:
        Serialized catalog
    """
    if fmt == "text":
        return "\n".join(entry.to_line() for entry in entries)
    if fmt == "json":
        return json.dumps([entry.to_dict() for entry in entries], indent=2)
    raise BadParams(f"Unknown catalog format {fmt!r}; expected one of {EXPORT_FORMATS}")
