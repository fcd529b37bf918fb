"""Numeric tolerances used across the package.

Every comparison tolerance scales with the QSPECTRA_TOL environment variable
(default 1.0) so a whole run can be made looser or stricter without touching
call sites. The eigensolver's internal termination threshold is a fixed design
constant and is not scaled.
"""

import os

GROUPING_REL = 1e-6        # eigenvalue grouping, times max(1, spectral radius)
ZERO_REL = 1e-7            # zero detection, times max(1, spectral radius)
MATCH_REL = 1e-7           # spectrum multiset comparison, times max(1, radius)
TIGHT_REL = 1e-6           # bound tightness, times max(1, QE)
TABLE_ABS = 5e-4           # printed-table reproduction, absolute
CLOSED_FORM_ABS = 1e-9     # closed-form family spectra, absolute


def scale() -> float:
    """Global tolerance multiplier from QSPECTRA_TOL (read per call)."""
    raw = os.environ.get("QSPECTRA_TOL", "1")
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"QSPECTRA_TOL must be a number, got {raw!r}") from None
    if not value > 0:
        raise ValueError(f"QSPECTRA_TOL must be positive, got {raw!r}")
    return value


def grouping_tol(radius: float) -> float:
    return GROUPING_REL * max(1.0, abs(radius)) * scale()


def zero_tol(radius: float) -> float:
    return ZERO_REL * max(1.0, abs(radius)) * scale()


def match_tol(radius: float) -> float:
    return MATCH_REL * max(1.0, abs(radius)) * scale()


def tight_tol(qe: float) -> float:
    return TIGHT_REL * max(1.0, abs(qe)) * scale()
