"""Answers, certificates and reason codes."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .bits import from_iter, iter_bits


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNRESOLVED = "unresolved"


# reason codes
DIAMETER_1 = "diameter-1"
DIAMETER_GE_3 = "diameter-ge-3"
DOMINATING_VERTEX = "dominating-vertex"
DOMINATING_EDGE = "dominating-edge"
DISCONNECTED_NEIGHBOURHOOD = "disconnected-neighbourhood"
COMPLETE_MULTIPARTITE = "complete-multipartite"
COMPLETE_GRAPH = "complete-graph"
COMPLEMENT_COMPONENTS = "complement-components"
UNIVERSAL_PAIR = "universal-pair"
NO_UNIVERSAL_PAIR = "no-universal-pair"
NO_INDUCED_LONG_CYCLE = "no-induced-long-cycle"
COVERING_CLIQUE = "covering-clique"
TWOSAT = "twosat"
NO_CONSISTENT_GUESS = "no-consistent-guess"
CASE_ANALYSIS = "case-analysis"
ORACLE = "oracle"
BUDGET_EXCEEDED = "budget-exceeded"
TOO_FEW_VERTICES = "too-few-vertices"


@dataclass(frozen=True)
class DisconnectedPartition:
    """Four vertex sets V1..V4 (stored as frozensets)."""

    parts: Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int], FrozenSet[int]]

    @classmethod
    def of(cls, *parts: Iterable[int]) -> "DisconnectedPartition":
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        if len(parts) != 4:
            raise ValueError("a partition has exactly four parts")
        return cls(tuple(frozenset(p) for p in parts))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "DisconnectedPartition":
        return cls(tuple(frozenset(iter_bits(m)) for m in masks))

    def masks(self) -> Tuple[int, int, int, int]:
        return tuple(from_iter(p) for p in self.parts)

    def as_lists(self) -> List[List[int]]:
        return [sorted(p) for p in self.parts]

    def part_of(self, v: int) -> Optional[int]:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        return None

    def relabel(self, mapping) -> "DisconnectedPartition":
        """Apply ``mapping`` (indexable new->old) to every vertex."""
        return DisconnectedPartition(tuple(frozenset(mapping[v] for v in p) for p in self.parts))

    def __repr__(self):
        return "DisconnectedPartition(%s)" % self.as_lists()


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    certificate: Optional[DisconnectedPartition] = None
    reason: str = ""
    route: str = ""
    notes: Dict[str, object] = field(default_factory=dict, compare=False)

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    def with_route(self, route: str) -> "Verdict":
        return Verdict(self.answer, self.certificate, self.reason, route, dict(self.notes))


def yes(partition: DisconnectedPartition, reason: str, route: str = "", **notes) -> Verdict:
    return Verdict(Answer.YES, partition, reason, route, notes)


def no(reason: str, route: str = "", **notes) -> Verdict:
    return Verdict(Answer.NO, None, reason, route, notes)


def unresolved(reason: str = BUDGET_EXCEEDED, route: str = "", **notes) -> Verdict:
    return Verdict(Answer.UNRESOLVED, None, reason, route, notes)
