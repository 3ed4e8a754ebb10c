"""Verified solution counts for the Thue equations m^5 + 4b^4 m n^4 - n^5 = 1."""

import json

from ._core import brute_force as _brute_force
from ._core import thue_form as _thue_form
from ._core import unit_logs as _unit_logs
from ._core import verify_json

__all__ = ["verify", "verify_json", "brute_force", "unit_logs", "thue_form"]


def verify(b, prec=None):
    """Run the full 5-adic verification for b; returns the certificate dict."""
    return json.loads(verify_json(b, prec))


def brute_force(b, bound):
    """All integer solutions with |m|, |n| <= bound, as (m, n) int pairs."""
    return [(int(m), int(n)) for m, n in _brute_force(b, bound)]


def unit_logs(b, prec=None):
    """Coordinates of the unit logarithms L1, L2 as Python ints."""
    return [[int(c) for c in row] for row in _unit_logs(b, prec)]


def thue_form(b, m, n):
    """Exact value of m^5 + 4b^4 m n^4 - n^5."""
    return int(_thue_form(b, str(m), str(n)))
