from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"
    PRECONDITION_FAILED = "precondition_failed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property check.

    ``checked_pairs`` counts the tuples for which the property's premise fired,
    so a ``holds`` with ``checked_pairs == 0`` is a vacuous pass.
    """

    property_id: str
    verdict: Verdict
    witness: tuple | None = None
    checked_pairs: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is Verdict.VIOLATED and not self.witness:
            raise ValueError(f"{self.property_id}: violated report without witness")

    @property
    def ok(self):
        return self.verdict is not Verdict.VIOLATED

    def to_dict(self):
        return {
            "property_id": self.property_id,
            "verdict": self.verdict.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "checked_pairs": self.checked_pairs,
            "details": self.details,
        }


def holds(pid, checked=0, **details):
    return PropertyReport(pid, Verdict.HOLDS, None, checked, details)


def violated(pid, witness, checked=0, **details):
    return PropertyReport(pid, Verdict.VIOLATED, tuple(witness), checked, details)


def precondition_failed(pid, reason, **details):
    return PropertyReport(pid, Verdict.PRECONDITION_FAILED, None, 0, {"reason": reason, **details})
