"""Finite groups, their radicals, and large-subgroup verification."""

import json

from ._core import (
    Group,
    LargesubError,
    catalog_keys,
    center,
    centralizer,
    fitting,
    from_table,
    generalized_fitting,
    group,
    is_in_X0,
    is_large,
    is_soluble,
    load_corpus,
    normal_subgroups,
    order_cap,
    set_order_cap,
    supersoluble_residual,
)
from . import _core

__all__ = [
    "Group",
    "LargesubError",
    "catalog_keys",
    "center",
    "centralizer",
    "fitting",
    "from_table",
    "generalized_fitting",
    "group",
    "info",
    "is_in_X0",
    "is_large",
    "is_soluble",
    "load_corpus",
    "normal_subgroups",
    "order_cap",
    "scan",
    "set_order_cap",
    "supersoluble_residual",
    "verify",
]


def _as_group(g):
    return group(g) if isinstance(g, str) else g


def info(g):
    """Structural summary of a group (or spec string) as a dict."""
    return json.loads(_core.info_json(_as_group(g)))


def verify(g, theorem, arg=""):
    """Run one verifier. theorem is A, C, D, E, F, G, Gd, H or B."""
    return json.loads(_core.verify_json(_as_group(g), theorem, str(arg)))


def scan(groups, threads=1):
    """Open-question scan; one dict per group, in input order."""
    return [json.loads(s) for s in _core.scan_json([_as_group(g) for g in groups], threads)]
