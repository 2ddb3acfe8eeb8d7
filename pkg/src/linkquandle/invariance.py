"""Compare the invariants computed by this package on two diagrams."""

from __future__ import annotations

from .coloring import (count_homs_bruteforce, count_homs_tc_fixedpoint,
                       count_homs_tc_propagate, xn)
from .errors import CapExceeded, max_canonical_mu, max_colorings
from .groups import nilpotent3, render
from .linking import linking_matrix
from .tcquandle import canonical_form, qs_isomorphic_pm


BRUTE_BUDGET = 10**6


def invariant_profile(d, targets=None, brute=True):
    """Invariants of one diagram as a plain dict.

    Brute-force counts are None when the search needs more than
    ``min(BRUTE_BUDGET, LQ_MAX_COLORINGS)`` nodes; comparisons skip them.
    """
    if targets is None:
        targets = {f"xn:{n}": xn(n) for n in (2, 3, 4)}
    M = linking_matrix(d)
    prof = {
        "linking_matrix": M.rows,
        "canonical_form": canonical_form(M).rows if M.mu <= max_canonical_mu() else None,
        "nilpotent3": render(nilpotent3(M)),
    }
    for name, T in targets.items():
        prof[f"fixedpoint[{name}]"] = count_homs_tc_fixedpoint(M, T)
        prof[f"propagate[{name}]"] = count_homs_tc_propagate(d, T)
        if brute:
            try:
                prof[f"brute[{name}]"] = count_homs_bruteforce(
                    d, T, budget=min(BRUTE_BUDGET, max_colorings()))
            except CapExceeded:
                prof[f"brute[{name}]"] = None
    return prof


def compare(d, d2, targets=None, brute=True):
    """Return ``{check_name: passed}`` for d versus d2."""
    a = invariant_profile(d, targets, brute)
    b = invariant_profile(d2, targets, brute)
    checks = {}
    for key in a:
        if a[key] is None or b[key] is None:
            continue
        checks[key] = a[key] == b[key]
    checks["tc_isomorphic"] = qs_isomorphic_pm(linking_matrix(d), linking_matrix(d2)) is not None
    return checks
