from __future__ import annotations

from dataclasses import dataclass, field

from ..profile import Profile, VotingSituation, new_candidate_names, place_on_top
from ..scoring import ScoringRule, cowinners, verify_witness
from ..errors import InvariantError


@dataclass(frozen=True)
class Decision:
    """Answer to "can `target` still cowin?".

    `witness` is an extended profile proving a positive answer, when the
    procedure constructs one.  `trace` holds procedure-specific counters.
    """

    possible: bool
    method: str
    witness: Profile | None = None
    trace: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.possible


def bottom_extension(profile: Profile, k: int) -> Profile:
    """All new candidates appended below every vote."""
    return place_on_top(profile, new_candidate_names(k), [()] * profile.n)


def current_cowinner(profile: Profile, rule: ScoringRule, target: str, k: int, method: str) -> Decision:
    """Decision when nothing can change: k = 0, or new candidates are irrelevant."""
    witness = bottom_extension(profile, k)
    if target in cowinners(witness, rule):
        return Decision(True, method, witness)
    return Decision(False, method)


def checked(decision: Decision, profile: Profile, k: int, rule: ScoringRule, target: str) -> Decision:
    """Re-verify a constructed witness; a failure here is a bug."""
    if decision.witness is not None:
        check = verify_witness(VotingSituation(profile, k), rule, target, decision.witness)
        if not check:
            raise InvariantError(f"{decision.method} produced an invalid witness ({check.reason})")
    return decision


def round_robin(k: int, counts: dict[str, int] | None = None):
    """Yield new-candidate names, always the lowest-count one (lowest index on ties).

    `counts` is updated in place.
    """
    names = new_candidate_names(k)
    if counts is None:
        counts = {}
    for y in names:
        counts.setdefault(y, 0)
    while True:
        y = min(names, key=lambda c: counts[c])
        counts[y] += 1
        yield y
