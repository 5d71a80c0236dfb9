"""Exact equivariant cohomology of regular B-varieties.

The heavy lifting happens in the C++ extension ``zscheme._core``; this
package adds dict-returning convenience wrappers around its JSON reports.
"""

import json as _json

from zscheme._core import (  # noqa: F401
    ZScheme,
    fixed_point_count,
    parse,
    product_formula,
    valid_omegas,
)
from zscheme import _core as _c

__all__ = [
    "ZScheme",
    "parse",
    "present",
    "hessenberg",
    "product_formula",
    "fixed_point_count",
    "valid_omegas",
    "verify",
]


def present(selector):
    """Equivariant + ordinary presentations for ``pn:N`` or ``flag:L``."""
    return _json.loads(_c.present_json(selector))


def hessenberg(rank, omega):
    """Hessenberg report for ``omega`` in {"peterson", "full", "-a1,-a2", ...}."""
    return _json.loads(_c.hessenberg_json(rank, omega))


def verify(suite="all"):
    """Run an acceptance suite; returns the report dict."""
    return _json.loads(_c.verify_json(suite))
