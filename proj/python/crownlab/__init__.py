"""Edge-magic and super edge-magic labelings of crowns."""

import json

from ._core import (
    DEFAULT_EM_GUARD,
    DEFAULT_SEM_GUARD,
    ConstructionFailure,
    GuardExceeded,
    InvalidCertificate,
    InvalidInput,
    LabelingError,
    bezout,
    conflict_pair,
    conflict_values,
    crown_bound,
    cycle_bound,
    exceptional_r,
    gcd_exception,
    is_odd_prime,
    run_cli,
)
from . import _core

__all__ = [
    "ConstructionFailure",
    "GuardExceeded",
    "InvalidCertificate",
    "InvalidInput",
    "LabelingError",
    "bezout",
    "conflict_pair",
    "conflict_values",
    "cover",
    "crown_bound",
    "crown_sem_cover",
    "cycle_bound",
    "exceptional_r",
    "gcd_exception",
    "interval",
    "is_odd_prime",
    "run_cli",
    "spectrum",
    "verify_certificate",
    "verify_report",
]


def interval(family="crown", m=0, n=0, mode="sem"):
    """[lo, hi] of the sem or em valence interval."""
    return tuple(json.loads(_core.interval_json(family, m, n, mode)))


def cover(p, q, n, mode="sem"):
    """Cover report of the crown with core length p*q, as a dict."""
    return json.loads(_core.cover_json(p, q, n, mode))


def crown_sem_cover(m, n):
    """Best-effort sem cover for any odd core length."""
    return json.loads(_core.crown_sem_cover_json(m, n))


def spectrum(family="cycle", m=0, n=0, mode="sem", guard=None):
    """Exhaustive valence spectrum of a small family member."""
    if guard is None:
        guard = DEFAULT_SEM_GUARD if mode == "sem" else DEFAULT_EM_GUARD
    return json.loads(_core.spectrum_json(family, m, n, mode, guard))


def verify_certificate(cert):
    """Re-verifies a certificate dict; returns {kind, valence}."""
    return json.loads(_core.verify_certificate_json(json.dumps(cert)))


def verify_report(report):
    """Re-verifies every certificate of a cover report dict."""
    return json.loads(_core.verify_report_json(json.dumps(report)))
