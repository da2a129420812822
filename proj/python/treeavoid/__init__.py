"""Counting syntax trees that avoid contiguous patterns."""

from ._core import (
    CapError,
    Error,
    InputError,
    ParseError,
    __version__,
    canonical_tree,
    catalog_dims,
    catalog_dims_mode,
    catalog_ids,
    catalog_summary,
    catalog_verify,
    census_dims,
    census_json,
    is_normal,
    nalg_verify,
    normalize_tree,
    probe,
    solve_dims,
    solve_series_json,
    solve_series_text,
    system_json,
    system_text,
    tree_from_json,
    tree_json,
)

__all__ = [
    "CapError",
    "Error",
    "InputError",
    "ParseError",
    "__version__",
    "canonical_tree",
    "catalog_dims",
    "catalog_dims_mode",
    "catalog_ids",
    "catalog_summary",
    "catalog_verify",
    "census_dims",
    "census_json",
    "is_normal",
    "nalg_verify",
    "normalize_tree",
    "probe",
    "solve_dims",
    "solve_series_json",
    "solve_series_text",
    "system_json",
    "system_text",
    "tree_from_json",
    "tree_json",
]
