"""Outcome record for one claim checked on one ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(Enum):
    HOLDS = "HOLDS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    ring: str
    status: Status
    witness: dict | None = None
    variant: str | None = None
    note: str = ""
    exploratory: bool = False
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "ring": self.ring,
            "variant": self.variant,
            "status": self.status.value,
            "exploratory": self.exploratory,
            "witness": self.witness,
            "note": self.note,
        }


def holds(claim_id, ring_label, variant=None, note="", exploratory=False, witness=None):
    return ClaimVerdict(claim_id, ring_label, Status.HOLDS, witness, variant, note, exploratory)


def counterexample(claim_id, ring_label, witness, variant=None, note="", exploratory=False):
    return ClaimVerdict(claim_id, ring_label, Status.COUNTEREXAMPLE, witness, variant, note, exploratory)


def not_applicable(claim_id, ring_label, hypothesis, variant=None, note="", exploratory=False):
    return ClaimVerdict(
        claim_id,
        ring_label,
        Status.NOT_APPLICABLE,
        {"failed_hypothesis": hypothesis},
        variant,
        note,
        exploratory,
    )
