"""Executable checks of claims about WIP/CIP loops and their isotopes."""

from .claims import CLAIMS, Claim, claim_ids, get_claim
from .runner import (
    Scope,
    VerificationReport,
    find_counterexample,
    replay,
    sample,
    verify,
)

__all__ = [
    "CLAIMS",
    "Claim",
    "Scope",
    "VerificationReport",
    "claim_ids",
    "find_counterexample",
    "get_claim",
    "replay",
    "sample",
    "verify",
]
